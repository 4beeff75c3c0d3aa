#pragma once

#include "kforge/checks.hpp"
#include "kforge/dgla.hpp"

#include <vector>

namespace kforge
{

/// One Hermitian form per degree; M_p is dim(p) x dim(p).
struct HermitianMetric
{
	std::vector<Matrix> blocks;

	static HermitianMetric identity(GradedVectorSpace const &space);
	Matrix const &operator[](int p) const { return blocks.at(p); }

	friend bool operator==(HermitianMetric const &, HermitianMetric const &) = default;
};

/// Per-degree positive-definiteness and shape check.
ValidationReport validate_metric(GradedVectorSpace const &space, HermitianMetric const &metric);

/**
 * Finite-dimensional Hodge theory of (D, metric). All operators are stored per
 * degree p = 0..max_degree:
 *
 *   dstar[p] : p -> p-1, adjoint of d_{p-1} (0 x dim(0) at p = 0)
 *   box[p]   = dstar[p+1] d_p + d_{p-1} dstar[p]
 *   harmonic[p] spans ker box[p]
 *   H[p] metric-orthogonal projector onto harmonics, G[p] Green operator
 *
 * so that I = H + box G, HG = GH = 0 in every degree.
 */
struct HodgeData
{
	HermitianMetric metric;
	std::vector<Matrix> dstar;
	std::vector<Matrix> box;
	std::vector<std::vector<Vector>> harmonic;
	std::vector<Matrix> H;
	std::vector<Matrix> G;
	// harmonic_coords[p] * v gives coordinates of a harmonic v in harmonic[p]
	std::vector<Matrix> harmonic_coords;

	int max_degree() const { return static_cast<int>(box.size()) - 1; }
	size_t harmonic_dim(int p) const;
	std::vector<size_t> harmonic_dims() const;
	/// dim(p) x harmonic_dim(p) matrix with the harmonic basis as columns.
	Matrix harmonic_matrix(int p) const;
	/// Coordinates of v in the harmonic basis; v must be harmonic.
	Vector coordinates(int p, Vector const &v) const;
};

/// dstar_{p+1} = M_p^{-1} d_p^dagger M_{p+1}; entry p is the adjoint landing in degree p-1.
std::vector<Matrix> adjoint(DGLA const &D, HermitianMetric const &metric);
std::vector<Matrix> laplacian(DGLA const &D, std::vector<Matrix> const &dstar);
/// Throws MathError when the metric is not positive definite.
HodgeData hodge_data(DGLA const &D, HermitianMetric const &metric);

enum class HodgeOperator
{
	Harmonic,
	Green,
	Laplacian,
	Adjoint,
};

/// Exact matrix-vector action of H, G, box or dstar. Throws DimensionError.
GradedElement apply(HodgeData const &hodge, HodgeOperator op, GradedElement const &a);

} // namespace kforge
