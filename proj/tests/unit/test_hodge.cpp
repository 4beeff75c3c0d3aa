#include "kforge/error.hpp"
#include "kforge/hodge.hpp"
#include "kforge/model.hpp"
#include "kforge/random.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <filesystem>

using namespace kforge;

namespace
{

std::filesystem::path const models = std::filesystem::path(KFORGE_SOURCE_DIR) / "models";

HermitianMetric random_metric(GradedVectorSpace const &V, ExactRandom &rng)
{
	HermitianMetric M;
	for (int p = 0; p <= V.max_degree(); ++p)
	{
		Matrix a = rng.matrix(V.dim(p), V.dim(p), 2, 2, true);
		M.blocks.push_back(a.conj_transpose() * a + Matrix::identity(V.dim(p)));
	}
	return M;
}

} // namespace

TEST_SUITE("hodge")
{
	TEST_CASE("witheq harmonic data")
	{
		auto D = load_model(models / "witheq.model").dgla;
		auto h = hodge_data(D, HermitianMetric::identity(D.space()));
		CHECK(h.harmonic_dims() == std::vector<size_t>{0, 1, 0});
		CHECK(h.harmonic[1][0] == Vector{Scalar(0), Scalar(1)});
		CHECK(h.G[1] == Matrix{{1, 0}, {0, 0}});
		CHECK(h.box[0] == Matrix{{1}});
	}

	TEST_CASE("decomposition identities with random metrics")
	{
		ExactRandom rng(21);
		for (char const *name : {"abelian", "witheq", "massey", "iwasawa"})
		{
			CAPTURE(name);
			auto D = load_model(models / (std::string(name) + ".model")).dgla;
			auto M = random_metric(D.space(), rng);
			auto h = hodge_data(D, M);
			for (int p = 0; p <= D.max_degree(); ++p)
			{
				CHECK(h.harmonic_dim(p) == oracle::cohomology_dim(D, p));
				CHECK(h.H[p] * h.H[p] == h.H[p]);
				CHECK(h.H[p] + h.box[p] * h.G[p] == Matrix::identity(D.dim(p)));
				// H is self-adjoint for the metric
				CHECK(M[p] * h.H[p] == h.H[p].conj_transpose() * M[p]);
				// dstar is the metric adjoint of d
				if (p < D.max_degree())
				{
					Vector v = rng.vector(D.dim(p)), w = rng.vector(D.dim(p + 1));
					CHECK(inner(D.d(p) * v, M[p + 1], w) == inner(v, M[p], h.dstar[p + 1] * w));
				}
			}
		}
	}

	TEST_CASE("harmonic coordinates")
	{
		auto D = load_model(models / "massey.model").dgla;
		auto h = hodge_data(D, HermitianMetric::identity(D.space()));
		for (size_t k = 0; k < h.harmonic[1].size(); ++k)
			CHECK(h.coordinates(1, h.harmonic[1][k]) == unit_vector(h.harmonic[1].size(), k));
	}

	TEST_CASE("apply dispatches to the operators")
	{
		auto D = load_model(models / "witheq.model").dgla;
		auto h = hodge_data(D, HermitianMetric::identity(D.space()));
		GradedElement v{1, {Scalar(2), Scalar(5)}};
		CHECK(apply(h, HodgeOperator::Harmonic, v).coords == Vector{Scalar(0), Scalar(5)});
		CHECK(apply(h, HodgeOperator::Green, v).coords == Vector{Scalar(2), Scalar(0)});
		CHECK(apply(h, HodgeOperator::Adjoint, v).degree == 0);
		CHECK(apply(h, HodgeOperator::Adjoint, v).coords == Vector{Scalar(2)});
	}

	TEST_CASE("metrics must be positive definite")
	{
		auto D = load_model(models / "heis.model").dgla;
		HermitianMetric bad = HermitianMetric::identity(D.space());
		bad.blocks[1] = Matrix{{1, 2}, {2, 1}};
		CHECK(!validate_metric(D.space(), bad).ok());
		CHECK_THROWS_AS(hodge_data(D, bad), MathError);
	}
}
