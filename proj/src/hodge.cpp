#include "kforge/hodge.hpp"
#include "kforge/error.hpp"

#include <string>

namespace kforge
{

HermitianMetric HermitianMetric::identity(GradedVectorSpace const &space)
{
	HermitianMetric m;
	for (int p = 0; p <= space.max_degree(); ++p)
		m.blocks.push_back(Matrix::identity(space.dim(p)));
	return m;
}

ValidationReport validate_metric(GradedVectorSpace const &space, HermitianMetric const &metric)
{
	ValidationReport report;
	std::string witness;
	if (metric.blocks.size() != space.dims().size())
		witness = "expected " + std::to_string(space.dims().size()) + " blocks";
	for (int p = 0; p <= space.max_degree() && witness.empty(); ++p)
	{
		auto const &m = metric.blocks[p];
		if (m.rows() != space.dim(p) || m.cols() != space.dim(p))
			witness = "degree " + std::to_string(p) + ": wrong shape";
		else if (!is_positive_definite(m))
			witness = "degree " + std::to_string(p) + ": not Hermitian positive definite";
	}
	report.add("metric_positive_definite", witness.empty(), witness);
	return report;
}

std::vector<Matrix> adjoint(DGLA const &D, HermitianMetric const &metric)
{
	int top = D.max_degree();
	std::vector<Matrix> dstar;
	dstar.emplace_back(0, D.dim(0));
	for (int p = 1; p <= top; ++p)
	{
		auto inv = inverse(metric[p - 1]);
		if (!inv)
			throw MathError("metric in degree " + std::to_string(p - 1) + " is singular");
		dstar.push_back(*inv * D.d(p - 1).conj_transpose() * metric[p]);
	}
	return dstar;
}

std::vector<Matrix> laplacian(DGLA const &D, std::vector<Matrix> const &dstar)
{
	int top = D.max_degree();
	std::vector<Matrix> box;
	for (int p = 0; p <= top; ++p)
	{
		Matrix b(D.dim(p), D.dim(p));
		if (p < top)
			b += dstar[p + 1] * D.d(p);
		if (p > 0)
			b += D.d(p - 1) * dstar[p];
		box.push_back(std::move(b));
	}
	return box;
}

HodgeData hodge_data(DGLA const &D, HermitianMetric const &metric)
{
	auto check = validate_metric(D.space(), metric);
	if (!check.ok())
		throw MathError("invalid metric: " + check.checks.front().witness);

	HodgeData h;
	h.metric = metric;
	h.dstar = adjoint(D, metric);
	h.box = laplacian(D, h.dstar);

	for (int p = 0; p <= D.max_degree(); ++p)
	{
		size_t n = D.dim(p);
		auto const &M = metric[p];
		auto basis = kernel_basis(h.box[p]);
		Matrix B = Matrix::from_columns(basis, n);
		Matrix Bd = B.conj_transpose();

		// metric-orthogonal projection via the normal equations (B^dagger M B) c = B^dagger M v
		auto gram_inv = inverse(Bd * M * B);
		if (!gram_inv)
			throw MathError("harmonic Gram matrix is singular");
		Matrix coords = *gram_inv * Bd * M;
		Matrix H = B * coords;

		Matrix I = Matrix::identity(n);
		Matrix Q = I - H;
		Matrix G(n, n);
		for (size_t c = 0; c < n; ++c)
		{
			auto x = solve_linear(h.box[p], Q.column(c));
			if (!x)
				throw MathError("Laplacian is not self-adjoint for this metric");
			Vector g = Q * *x;
			for (size_t r = 0; r < n; ++r)
				G(r, c) = g[r];
		}

		h.harmonic.push_back(std::move(basis));
		h.harmonic_coords.push_back(std::move(coords));
		h.H.push_back(std::move(H));
		h.G.push_back(std::move(G));
	}
	return h;
}

size_t HodgeData::harmonic_dim(int p) const { return harmonic.at(p).size(); }

std::vector<size_t> HodgeData::harmonic_dims() const
{
	std::vector<size_t> out;
	for (auto const &b : harmonic)
		out.push_back(b.size());
	return out;
}

Matrix HodgeData::harmonic_matrix(int p) const { return Matrix::from_columns(harmonic.at(p), box.at(p).rows()); }

Vector HodgeData::coordinates(int p, Vector const &v) const { return harmonic_coords.at(p) * v; }

GradedElement apply(HodgeData const &hodge, HodgeOperator op, GradedElement const &a)
{
	int p = a.degree;
	if (p < 0 || p > hodge.max_degree())
		throw DimensionError("degree " + std::to_string(p) + " out of range");
	switch (op)
	{
	case HodgeOperator::Harmonic:
		return {p, hodge.H[p] * a.coords};
	case HodgeOperator::Green:
		return {p, hodge.G[p] * a.coords};
	case HodgeOperator::Laplacian:
		return {p, hodge.box[p] * a.coords};
	case HodgeOperator::Adjoint:
		if (p == 0)
			throw DimensionError("adjoint of a degree-0 element");
		return {p - 1, hodge.dstar[p] * a.coords};
	}
	throw DimensionError("unknown operator");
}

} // namespace kforge
