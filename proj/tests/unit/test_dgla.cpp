#include "kforge/dgla.hpp"
#include "kforge/error.hpp"
#include "kforge/model.hpp"
#include "kforge/random.hpp"

#include <doctest.h>

#include <filesystem>

using namespace kforge;

namespace
{

std::filesystem::path const models = std::filesystem::path(KFORGE_SOURCE_DIR) / "models";

DGLA heis()
{
	GradedVectorSpace V({0, 2, 1}, {{}, {"e1", "e2"}, {"f"}});
	return DGLA(V, {}, {{1, 0, 1, 1, {{0, Scalar(1)}}}});
}

GradedElement random_element(DGLA const &D, int p, ExactRandom &rng)
{
	return {p, rng.vector(D.dim(p), 3, 2)};
}

} // namespace

TEST_SUITE("dgla")
{
	TEST_CASE("heis brackets")
	{
		auto D = heis();
		auto e1 = D.basis(1, 0), e2 = D.basis(1, 1);
		CHECK(D.bracket(e1, e2).coords == Vector{Scalar(1)});
		// degree-1 brackets are symmetric
		CHECK(D.bracket(e2, e1).coords == Vector{Scalar(1)});
		CHECK(D.bracket(e1, e1).coords == Vector{Scalar(0)});
		CHECK(validate_dgla(D).ok());
	}

	TEST_CASE("default labels and lookups outside the range")
	{
		GradedVectorSpace V({1, 2});
		CHECK(V.label(1, 1) == "e1_1");
		CHECK(V.dim(-1) == 0);
		CHECK(V.dim(5) == 0);
	}

	TEST_CASE("malformed tables are format errors")
	{
		GradedVectorSpace V({1, 2, 1});
		CHECK_THROWS_AS(DGLA(V, {}, {{1, 1, 1, 0, {{0, Scalar(1)}}}}), FormatError);
		CHECK_THROWS_AS(DGLA(V, {}, {{2, 0, 1, 0, {{0, Scalar(1)}}}}), FormatError);
		CHECK_THROWS_AS(DGLA(V, {}, {{1, 0, 1, 1, {{3, Scalar(1)}}}}), FormatError);
		CHECK_THROWS_AS(DGLA(V, {}, {{1, 0, 2, 0, {{0, Scalar(1)}}}}), FormatError);
		CHECK_THROWS_AS(DGLA(V, {}, {{0, 0, 1, 0, {{0, Scalar(1)}}}, {0, 0, 1, 0, {{1, Scalar(1)}}}}), FormatError);
		CHECK_THROWS_AS(DGLA(V, {Matrix(1, 1)}, {}), FormatError);
		CHECK_THROWS_AS(GradedVectorSpace({2}, {{"a", "a"}}), FormatError);
	}

	TEST_CASE("broken variants pinpoint their violation")
	{
		auto leibniz = validate_dgla(load_model(models / "broken" / "heis-leibniz.model").dgla);
		CHECK(!leibniz.find("leibniz")->passed);
		CHECK(leibniz.find("leibniz")->witness.find("(a, e2)") != std::string::npos);
		CHECK(leibniz.find("jacobi")->passed);

		auto dsq = validate_dgla(load_model(models / "broken" / "dsq.model").dgla);
		CHECK(!dsq.find("d_squared")->passed);

		auto jacobi = validate_dgla(load_model(models / "broken" / "jacobi.model").dgla);
		CHECK(!jacobi.find("jacobi")->passed);
		CHECK(jacobi.find("antisymmetry")->passed);

		auto antisym = validate_dgla(load_model(models / "broken" / "antisym.model").dgla);
		CHECK(!antisym.find("antisymmetry")->passed);
		CHECK(antisym.find("jacobi")->passed);
	}

	TEST_CASE("a differential landing in the top degree cannot violate Leibniz")
	{
		// d(e1) = f: every Leibniz term brackets into degree 3, which is zero
		GradedVectorSpace V({0, 2, 1}, {{}, {"e1", "e2"}, {"f"}});
		DGLA D(V, {Matrix(2, 0), Matrix{{1, 0}}}, {{1, 0, 1, 1, {{0, Scalar(1)}}}});
		CHECK(validate_dgla(D).ok());
	}

	TEST_CASE("graded identities on random elements of the Iwasawa model")
	{
		auto D = load_model(models / "iwasawa.model").dgla;
		ExactRandom rng(4);
		for (int k = 0; k < 20; ++k)
		{
			int p = static_cast<int>(rng.integer(0, 1)), q = static_cast<int>(rng.integer(0, 1));
			int r = static_cast<int>(rng.integer(0, 1));
			auto a = random_element(D, p, rng), b = random_element(D, q, rng), c = random_element(D, r, rng);

			auto ab = D.bracket(a, b).coords;
			auto ba = D.bracket(b, a).coords;
			CHECK(ab == Scalar(-koszul_sign(p, q)) * ba);

			// d[a, b] = [da, b] + (-1)^p [a, db]
			auto lhs = D.differential(D.bracket(a, b)).coords;
			auto rhs = D.bracket(D.differential(a), b).coords +
			           Scalar(p % 2 ? -1 : 1) * D.bracket(a, D.differential(b)).coords;
			CHECK(lhs == rhs);

			// (-1)^{pr}[a,[b,c]] + (-1)^{qp}[b,[c,a]] + (-1)^{rq}[c,[a,b]] = 0
			auto sign = [](int x, int y) { return Scalar((x * y) % 2 ? -1 : 1); };
			auto j = sign(p, r) * D.bracket(a, D.bracket(b, c)).coords +
			         sign(q, p) * D.bracket(b, D.bracket(c, a)).coords +
			         sign(r, q) * D.bracket(c, D.bracket(a, b)).coords;
			CHECK(is_zero(j));
		}
	}

	TEST_CASE("Maurer-Cartan residual")
	{
		auto D = heis();
		GradedElement x{1, {Scalar(1), Scalar(0)}};
		CHECK(is_zero(D.mc_residual(x).coords));
		GradedElement y{1, {Scalar(2), Scalar(3)}};
		CHECK(D.mc_residual(y).coords == Vector{Scalar(-6)});
		CHECK_THROWS(D.mc_residual(D.zero(2)));
	}

	TEST_CASE("bracket rescaling")
	{
		auto D = heis().with_scaled_bracket(Scalar(3));
		CHECK(D.bracket(D.basis(1, 0), D.basis(1, 1)).coords == Vector{Scalar(3)});
		CHECK(validate_dgla(D).ok());
	}
}
