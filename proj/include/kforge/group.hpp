#pragma once

#include "kforge/checks.hpp"
#include "kforge/dgla.hpp"
#include "kforge/error.hpp"
#include "kforge/hodge.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace kforge
{

/// A linear automorphism given degree by degree: element[p] is dim(p) x dim(p).
using GroupElement = std::vector<Matrix>;

struct FiniteAction
{
	/// Identity first, then breadth-first by word length (see close_group).
	std::vector<GroupElement> elements;
};

/// Diagonal torus action: basis vector e_i^p has integer weight weights[p][i] (length rank).
struct TorusAction
{
	size_t rank = 0;
	std::vector<std::vector<std::vector<long>>> weights;
};

using GroupAction = std::variant<FiniteAction, TorusAction>;

inline constexpr size_t default_group_cap = 10000;

/// Thrown by close_group when the closure exceeds the cap.
struct GroupTooLarge : MathError
{
	GroupTooLarge() : MathError("group too large or infinite") {}
};

GroupElement identity_element(GradedVectorSpace const &space);
GroupElement compose(GroupElement const &a, GroupElement const &b);

/**
 * Multiplicative closure of `generators`. Elements are discovered breadth-first:
 * the identity, then each known element times each generator in input order.
 * Throws MathError for a non-invertible generator, GroupTooLarge past `cap`.
 */
FiniteAction close_group(std::vector<GroupElement> const &generators, size_t cap = default_group_cap);

/// Closure, identity, invertibility, commutation with d and bracket compatibility.
ValidationReport validate_action(DGLA const &D, GroupAction const &action);

/// Weyl averaging: group mean of g^dagger M g, or cross-weight zeroing for a torus.
HermitianMetric average_metric(HermitianMetric const &metric, GroupAction const &action);

/// g^* M g == M for every element, or M block-diagonal by weight for a torus.
ValidationReport check_metric_invariance(HermitianMetric const &metric, GroupAction const &action);

/// Per-element exact commutation of dstar, box, G and H with the action
/// (weight preservation for a torus).
ValidationReport check_operator_equivariance(GroupAction const &action, HodgeData const &hodge);

/// Matrix of g restricted to the harmonic space of degree p, in the harmonic
/// basis, for every element. Throws MathError if that space is not invariant.
std::vector<Matrix> induced_harmonic_rep(FiniteAction const &action, HodgeData const &hodge, int p);

/// Weight of each harmonic basis vector in degree p. Throws MathError when a
/// basis vector is not a weight vector.
std::vector<std::vector<long>> harmonic_weights(TorusAction const &action, HodgeData const &hodge, int p);

/// Weight of a vector of degree p; nullopt for the zero vector.
/// Throws MathError when components of several weights are present.
std::optional<std::vector<long>> weight_of(TorusAction const &action, int p, Vector const &v);

/**
 * Action of a real Lie algebra k = span(X_0..X_{dim-1}) by derivations:
 * [X_a, X_b] = sum_c structure[a][b][c] X_c, and rep[a][p] is rho(X_a) on degree p.
 * After complexification the same data describes k (x) C acting C-linearly.
 */
struct LieAlgebraAction
{
	size_t dim = 0;
	std::vector<std::vector<Vector>> structure;
	std::vector<GroupElement> rep;
	bool complexified = false;

	/// rho(sum_a z_a X_a). Throws MathError for non-real coefficients before complexification.
	GroupElement rho(Vector const &coeffs) const;
	Vector lie_bracket(Vector const &x, Vector const &y) const;
};

/// Structure constants given as half table a < b, extended antisymmetrically.
struct LieStructureEntry
{
	size_t a = 0;
	size_t b = 0;
	std::vector<std::pair<size_t, Scalar>> out;
};

/// Throws FormatError on malformed input.
LieAlgebraAction make_lie_action(size_t dim, std::vector<LieStructureEntry> const &entries,
                                 std::vector<GroupElement> rep, GradedVectorSpace const &space);

/// Real structure constants, Jacobi for k, homomorphism on basis pairs, commutation with d, derivation rule.
ValidationReport validate_lie_action(LieAlgebraAction const &L, DGLA const &D);

/// rho([x, y]) == [rho(x), rho(y)] on basis pairs and, when complexified, on
/// `samples` seeded random complex combinations.
ValidationReport check_homomorphism(LieAlgebraAction const &L, uint64_t seed = 0, size_t samples = 8);

LieAlgebraAction complexify_lie_action(LieAlgebraAction const &L);

/// rho(X) commutes with d, is a bracket derivation and metric skew-adjoint, and
/// hence commutes with dstar, box, G and H; each link is reported separately.
ValidationReport check_derivation_equivariance(LieAlgebraAction const &L, DGLA const &D, HodgeData const &hodge);

} // namespace kforge
