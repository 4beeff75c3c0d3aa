#include "kforge/error.hpp"
#include "kforge/matrix.hpp"
#include "kforge/random.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace kforge;

TEST_SUITE("matrix")
{
	TEST_CASE("products and transposes")
	{
		Matrix a{{1, 2}, {3, 4}};
		Matrix b{{0, 1}, {1, 0}};
		CHECK(a * b == Matrix{{2, 1}, {4, 3}});
		CHECK(a.transpose() == Matrix{{1, 3}, {2, 4}});
		Matrix c{{Scalar::i(), 1}, {0, 2}};
		CHECK(c.conj_transpose() == Matrix{{-Scalar::i(), 0}, {1, 2}});
		CHECK(Matrix(0, 3) * Matrix(3, 2) == Matrix(0, 2));
		CHECK(Matrix(2, 0) * Matrix(0, 2) == Matrix(2, 2));
	}

	TEST_CASE("row reduction on a known matrix")
	{
		Matrix a{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
		auto e = row_reduce(a);
		CHECK(e.rank() == 2);
		CHECK(e.pivot_cols == std::vector<size_t>{0, 1});
		auto ker = kernel_basis(a);
		REQUIRE(ker.size() == 1);
		CHECK(is_zero(a * ker[0]));
	}

	TEST_CASE("rank agrees with an independent elimination")
	{
		ExactRandom rng(5);
		for (int k = 0; k < 50; ++k)
		{
			size_t r = rng.integer(1, 5), c = rng.integer(1, 5);
			Matrix a = rng.matrix(r, c, 2, 1, true);
			// force dependencies now and then
			if (k % 3 == 0 && r > 1)
				for (size_t j = 0; j < c; ++j)
					a(r - 1, j) = a(0, j) * Scalar(2);
			CHECK(rank(a) == oracle::rank(oracle::table_of(a)));
			auto ker = kernel_basis(a);
			CHECK(ker.size() + rank(a) == c);
			for (auto const &v : ker)
				CHECK(is_zero(a * v));
		}
	}

	TEST_CASE("inverse and solve")
	{
		ExactRandom rng(6);
		for (int k = 0; k < 30; ++k)
		{
			Matrix a = rng.matrix(4, 4, 3, 2, true);
			auto inv = inverse(a);
			if (determinant(a).is_zero())
			{
				CHECK(!inv);
				continue;
			}
			REQUIRE(inv);
			CHECK(a * *inv == Matrix::identity(4));
			Vector b = rng.vector(4);
			auto x = solve_linear(a, b);
			REQUIRE(x);
			CHECK(a * *x == b);
		}
		Matrix singular{{1, 1}, {1, 1}};
		CHECK(!inverse(singular));
		CHECK(!solve_linear(singular, Vector{Scalar(1), Scalar(0)}));
	}

	TEST_CASE("determinant is multiplicative")
	{
		ExactRandom rng(7);
		for (int k = 0; k < 20; ++k)
		{
			Matrix a = rng.matrix(3, 3, 4, 3, true), b = rng.matrix(3, 3, 4, 3, true);
			CHECK(determinant(a * b) == determinant(a) * determinant(b));
		}
	}

	TEST_CASE("positive definiteness")
	{
		CHECK(is_positive_definite(Matrix{{2, 1}, {1, 2}}));
		CHECK(!is_positive_definite(Matrix{{1, 2}, {2, 1}}));
		CHECK(!is_positive_definite(Matrix{{1, 1}, {0, 1}}));
		CHECK(is_positive_definite(Matrix{{2, Scalar::i()}, {-Scalar::i(), 2}}));
		CHECK(is_positive_definite(Matrix(0, 0)));
		CHECK_THROWS_AS(is_positive_definite(Matrix(2, 3)), DimensionError);

		ExactRandom rng(8);
		for (int k = 0; k < 20; ++k)
		{
			Matrix a = rng.matrix(3, 3, 3, 2, true);
			Matrix m = a.conj_transpose() * a + Matrix::identity(3);
			CHECK(is_hermitian(m));
			CHECK(is_positive_definite(m));
		}
	}

	TEST_CASE("dimension mismatches throw")
	{
		CHECK_THROWS_AS(Matrix(2, 3) * Matrix(2, 3), DimensionError);
		CHECK_THROWS_AS(Matrix(2, 2) + Matrix(3, 3), DimensionError);
	}
}
