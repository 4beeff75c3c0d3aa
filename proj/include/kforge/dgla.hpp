#pragma once

#include "kforge/checks.hpp"
#include "kforge/matrix.hpp"

#include <string>
#include <utility>
#include <vector>

namespace kforge
{

/// Finite graded space concentrated in degrees 0..max_degree.
class GradedVectorSpace
{
  public:
	GradedVectorSpace() = default;
	/// Empty `labels` selects default names `e<p>_<i>`. Throws FormatError on mismatched or duplicate labels.
	GradedVectorSpace(std::vector<size_t> dims, std::vector<std::vector<std::string>> labels = {});

	int max_degree() const { return static_cast<int>(dims_.size()) - 1; }
	/// Zero outside 0..max_degree.
	size_t dim(int p) const;
	std::vector<size_t> const &dims() const { return dims_; }
	std::string const &label(int p, size_t i) const { return labels_.at(p).at(i); }
	std::vector<std::vector<std::string>> const &labels() const { return labels_; }

  private:
	std::vector<size_t> dims_;
	std::vector<std::vector<std::string>> labels_;
};

struct GradedElement
{
	int degree = 0;
	Vector coords;

	friend bool operator==(GradedElement const &, GradedElement const &) = default;
};

/// One stored structure constant record: [e_i^p, e_j^q] = sum over out of c * e_k^{p+q}.
struct BracketEntry
{
	int p = 0;
	size_t i = 0;
	int q = 0;
	size_t j = 0;
	std::vector<std::pair<size_t, Scalar>> out;
};

/**
 * Differential graded Lie algebra with differential of degree +1 and a graded
 * bracket. Only half of the structure constants are stored (p < q, or p == q
 * with i <= j); the rest follow from [a,b] = -(-1)^{|a||b|}[b,a].
 *
 * Brackets and differentials landing above max_degree are zero.
 */
class DGLA
{
  public:
	DGLA() = default;
	/// `differential[p]` maps degree p to p+1 and is dim(p+1) x dim(p); fewer
	/// than max_degree entries are padded with zero maps. Throws FormatError.
	DGLA(GradedVectorSpace space, std::vector<Matrix> differential, std::vector<BracketEntry> table);

	GradedVectorSpace const &space() const { return space_; }
	int max_degree() const { return space_.max_degree(); }
	size_t dim(int p) const { return space_.dim(p); }

	/// d_p : degree p -> degree p+1; for p == max_degree the 0 x dim(p) map.
	Matrix const &d(int p) const;
	std::vector<BracketEntry> const &table() const { return table_; }

	/// Coordinates of [e_i^p, e_j^q] in degree p+q (empty above max_degree).
	Vector const &structure(int p, size_t i, int q, size_t j) const;
	/// Bilinear extension on coordinate vectors.
	Vector bracket(int p, Vector const &a, int q, Vector const &b) const;

	GradedElement bracket(GradedElement const &a, GradedElement const &b) const;
	GradedElement differential(GradedElement const &a) const;
	/// d a - 1/2 [a, a] for a of degree 1. Throws DimensionError otherwise.
	GradedElement mc_residual(GradedElement const &a) const;

	GradedElement zero(int p) const { return {p, Vector(dim(p))}; }
	GradedElement basis(int p, size_t i) const { return {p, unit_vector(dim(p), i)}; }

	/// Same differential, every structure constant multiplied by c.
	DGLA with_scaled_bracket(Scalar const &c) const;

  private:
	void check_element(GradedElement const &a) const;

	GradedVectorSpace space_;
	std::vector<Matrix> d_;
	std::vector<BracketEntry> table_;
	// full_[p][q][i * dim(q) + j]
	std::vector<std::vector<std::vector<Vector>>> full_;
};

/// Checks d^2 = 0, antisymmetry of the extended table, graded Jacobi and graded
/// Leibniz exhaustively on basis tuples.
ValidationReport validate_dgla(DGLA const &D);

int koszul_sign(int p, int q);

} // namespace kforge
