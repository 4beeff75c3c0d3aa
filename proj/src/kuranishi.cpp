#include "kforge/kuranishi.hpp"
#include "kforge/error.hpp"

#include <string>

namespace kforge
{

namespace
{

Matrix op_or_zero(std::vector<Matrix> const &ops, int p, size_t rows, size_t cols)
{
	if (p >= 0 && p < static_cast<int>(ops.size()))
		return ops[p];
	return Matrix(rows, cols);
}

size_t harmonic_dim_or_zero(HodgeData const &hodge, int p)
{
	return p <= hodge.max_degree() ? hodge.harmonic_dim(p) : 0;
}

/// 1/2 G_1 dstar_2, the map taking [phi, phi] to the next correction of phi.
Matrix correction_operator(DGLA const &D, HodgeData const &hodge)
{
	Matrix G1 = op_or_zero(hodge.G, 1, D.dim(1), D.dim(1));
	Matrix dstar2 = op_or_zero(hodge.dstar, 2, D.dim(1), D.dim(2));
	return G1 * dstar2 * Scalar::ratio(1, 2);
}

void expect_equal(ValidationReport &report, std::string const &name, PowerSeries const &lhs, PowerSeries const &rhs)
{
	auto at = first_difference(lhs, rhs);
	report.add(name, at.empty(), at.empty() ? "" : "first mismatch at " + at);
}

} // namespace

PowerSeries linear_series(DGLA const &D, HodgeData const &hodge, unsigned order)
{
	size_t n = harmonic_dim_or_zero(hodge, 1);
	PowerSeries phi(n, 1, D.dim(1), order);
	for (size_t i = 0; i < n; ++i)
	{
		Monomial m(n, 0);
		m[i] = 1;
		phi.add(m, hodge.harmonic[1][i]);
	}
	return phi;
}

KuranishiSolution solve(DGLA const &D, HodgeData const &hodge, unsigned order)
{
	if (order == 0)
		throw MathError("truncation order must be at least 1");

	KuranishiSolution sol;
	sol.order = order;
	if (hodge.max_degree() >= 1)
		sol.harmonic1 = hodge.harmonic[1];
	if (hodge.max_degree() >= 2)
		sol.harmonic2 = hodge.harmonic[2];
	size_t n = sol.harmonic1.size();

	Matrix correction = correction_operator(D, hodge);
	Matrix H2 = op_or_zero(hodge.H, 2, D.dim(2), D.dim(2));

	// parts[k] is the homogeneous order-k piece of phi
	std::vector<PowerSeries> parts(order + 1, PowerSeries(n, 1, D.dim(1), order));
	parts[1] = linear_series(D, hodge, order);
	sol.obstruction = PowerSeries(n, 2, D.dim(2), order);

	for (unsigned k = 2; k <= order; ++k)
	{
		// degree-1 brackets are symmetric, so [phi_i, phi_j] + [phi_j, phi_i] = 2 [phi_i, phi_j]
		PowerSeries sum(n, 2, D.dim(2), order);
		for (unsigned i = 1; 2 * i <= k; ++i)
		{
			PowerSeries b = bracket(D, parts[i], parts[k - i]);
			sum += (2 * i == k) ? b : Scalar(2) * b;
		}
		parts[k] = sum.map(correction, 1);
		sol.obstruction += sum.map(H2, 2);
	}

	sol.phi = PowerSeries(n, 1, D.dim(1), order);
	for (unsigned k = 1; k <= order; ++k)
		sol.phi += parts[k];

	Matrix coords = op_or_zero(hodge.harmonic_coords, 2, sol.harmonic2.size(), D.dim(2));
	sol.generators = sol.obstruction.map(coords, 2);
	return sol;
}

PowerSeries kuranishi_map_F(DGLA const &D, HodgeData const &hodge, PowerSeries const &psi)
{
	return psi - bracket(D, psi, psi).map(correction_operator(D, hodge), 1);
}

ValidationReport residual_report(DGLA const &D, HodgeData const &hodge, KuranishiSolution const &sol)
{
	ValidationReport report;
	auto const &phi = sol.phi;
	size_t n = sol.nvars();
	PowerSeries linear = linear_series(D, hodge, sol.order);

	{
		auto c = phi.coefficient(Monomial(n, 0));
		report.add("phi_vanishes_at_origin", is_zero(c), is_zero(c) ? "" : "nonzero constant term");
	}
	expect_equal(report, "kodaira_spencer_normalized", phi.homogeneous_part(1), linear);

	Matrix dstar1 = op_or_zero(hodge.dstar, 1, D.dim(0), D.dim(1));
	expect_equal(report, "P1_gauge", phi.map(dstar1, 0), PowerSeries(n, 0, D.dim(0), sol.order));

	Matrix H1 = op_or_zero(hodge.H, 1, D.dim(1), D.dim(1));
	expect_equal(report, "P2_harmonic_part", phi.map(H1, 1), linear);

	expect_equal(report, "P3_inversion", kuranishi_map_F(D, hodge, phi), linear);

	PowerSeries bb = bracket(D, phi, phi);
	Matrix d1 = D.max_degree() >= 1 ? D.d(1) : Matrix(D.dim(2), D.dim(1));
	PowerSeries residual = phi.map(d1, 2) - Scalar::ratio(1, 2) * bb;
	Matrix H2 = op_or_zero(hodge.H, 2, D.dim(2), D.dim(2));
	expect_equal(report, "P4_harmonic_residual", residual.map(H2, 2), Scalar::ratio(-1, 2) * sol.obstruction);

	Matrix box1 = op_or_zero(hodge.box, 1, D.dim(1), D.dim(1));
	Matrix dstar2 = op_or_zero(hodge.dstar, 2, D.dim(1), D.dim(2));
	expect_equal(report, "P5_laplace_equation", phi.map(box1, 1),
	             Scalar::ratio(1, 2) * bb.map(dstar2, 1));

	expect_equal(report, "obstruction_harmonic", sol.obstruction.map(H2, 2), sol.obstruction);
	{
		std::string witness;
		for (auto const &[m, v] : sol.obstruction.terms())
			if (total_degree(m) < 2 && witness.empty())
				witness = "term at " + monomial_str(m);
		report.add("obstruction_order_at_least_2", witness.empty(), witness);
	}
	return report;
}

namespace
{

std::vector<long> monomial_weight(Monomial const &m, std::vector<std::vector<long>> const &var_weights, size_t rank)
{
	std::vector<long> w(rank, 0);
	for (size_t i = 0; i < m.size(); ++i)
		for (size_t r = 0; r < rank; ++r)
			w[r] += static_cast<long>(m[i]) * var_weights[i][r];
	return w;
}

std::string weight_check(TorusAction const &T, int p, PowerSeries const &s,
                         std::vector<std::vector<long>> const &var_weights)
{
	for (auto const &[m, v] : s.terms())
	{
		std::optional<std::vector<long>> w;
		try
		{
			w = weight_of(T, p, v);
		}
		catch (MathError const &)
		{
			return "coefficient of " + monomial_str(m) + " is not a weight vector";
		}
		if (w && *w != monomial_weight(m, var_weights, T.rank))
			return "coefficient of " + monomial_str(m) + " has the wrong weight";
	}
	return {};
}

} // namespace

ValidationReport equivariance_report(DGLA const &D, HodgeData const &hodge, GroupAction const &action,
                                     KuranishiSolution const &sol)
{
	ValidationReport report;
	if (D.max_degree() < 2)
	{
		report.add("E1_phi_equivariant", true);
		report.add("E2_obstruction_equivariant", true);
		return report;
	}

	auto pre = check_operator_equivariance(action, hodge);
	for (auto const &c : pre.checks)
		if (!c.passed)
		{
			report.add("precondition_" + c.name, false, c.witness);
			return report;
		}

	if (auto const *f = std::get_if<FiniteAction>(&action))
	{
		std::vector<Matrix> rho1, rho2;
		try
		{
			rho1 = induced_harmonic_rep(*f, hodge, 1);
			rho2 = induced_harmonic_rep(*f, hodge, 2);
		}
		catch (MathError const &e)
		{
			report.add("precondition_harmonic_invariant", false, e.what());
			return report;
		}

		std::string e1, e2;
		for (size_t k = 0; k < f->elements.size(); ++k)
		{
			auto const &g = f->elements[k];
			if (e1.empty())
			{
				auto at = first_difference(sol.phi.map(g[1], 1), substitute_linear(sol.phi, rho1[k]));
				if (!at.empty())
					e1 = "g" + std::to_string(k) + " at " + at;
			}
			if (e2.empty())
			{
				auto at = first_difference(substitute_linear(sol.generators, rho1[k]), sol.generators.map(rho2[k], 2));
				if (!at.empty())
					e2 = "g" + std::to_string(k) + " at " + at;
			}
		}
		report.add("E1_phi_equivariant", e1.empty(), e1);
		report.add("E2_obstruction_equivariant", e2.empty(), e2);
		return report;
	}

	auto const &T = std::get<TorusAction>(action);
	std::vector<std::vector<long>> w1;
	try
	{
		w1 = harmonic_weights(T, hodge, 1);
		harmonic_weights(T, hodge, 2);
	}
	catch (MathError const &e)
	{
		report.add("precondition_harmonic_weight_basis", false, e.what());
		return report;
	}
	auto e1 = weight_check(T, 1, sol.phi, w1);
	report.add("E1_phi_equivariant", e1.empty(), e1);
	auto e2 = weight_check(T, 2, sol.obstruction, w1);
	report.add("E2_obstruction_equivariant", e2.empty(), e2);
	return report;
}

} // namespace kforge
