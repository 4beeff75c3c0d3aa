#pragma once

#include "kforge/checks.hpp"
#include "kforge/dgla.hpp"
#include "kforge/group.hpp"
#include "kforge/hodge.hpp"
#include "kforge/series.hpp"

namespace kforge
{

/**
 * Truncated Kuranishi family of a DGLA with Hodge data.
 *
 * The coordinates t_1..t_n are the coefficients in the degree-1 harmonic basis
 * h_1..h_n, so phi(t) = sum t_i h_i + (corrections of order >= 2) and
 * obstruction(t) = H[phi(t), phi(t)] in degree 2. `generators` lists the
 * coordinates of the obstruction in the degree-2 harmonic basis; their common
 * zero locus is the Kuranishi space.
 */
struct KuranishiSolution
{
	unsigned order = 0;
	PowerSeries phi;
	PowerSeries obstruction;
	PowerSeries generators;
	std::vector<Vector> harmonic1;
	std::vector<Vector> harmonic2;

	size_t nvars() const { return harmonic1.size(); }
};

/// sum_i t_i h_i over the degree-1 harmonic basis.
PowerSeries linear_series(DGLA const &D, HodgeData const &hodge, unsigned order);

/**
 * Inverts F(phi) = phi - 1/2 G dstar [phi, phi] order by order:
 * phi_1 = sum t_i h_i, phi_k = 1/2 G dstar sum_{i+j=k} [phi_i, phi_j].
 * Throws MathError for order 0.
 */
KuranishiSolution solve(DGLA const &D, HodgeData const &hodge, unsigned order);

PowerSeries kuranishi_map_F(DGLA const &D, HodgeData const &hodge, PowerSeries const &psi);

/// Gauge, normalization and Maurer-Cartan identities of a solution (P1..P5
/// plus the structural invariants), each reported with the first failing monomial.
ValidationReport residual_report(DGLA const &D, HodgeData const &hodge, KuranishiSolution const &sol);

/// g phi(t) == phi(rho1(g) t) and obstruction(rho1(g) t) == rho2(g) obstruction(t)
/// for every element, or the corresponding weight bookkeeping for a torus.
ValidationReport equivariance_report(DGLA const &D, HodgeData const &hodge, GroupAction const &action,
                                     KuranishiSolution const &sol);

} // namespace kforge
