#include "kforge/error.hpp"
#include "kforge/random.hpp"
#include "kforge/scalar.hpp"

#include <doctest.h>

using namespace kforge;

TEST_SUITE("scalar")
{
	TEST_CASE("canonical strings")
	{
		CHECK(Scalar().str() == "0");
		CHECK(Scalar(7).str() == "7");
		CHECK(Scalar::ratio(2, 4).str() == "1/2");
		CHECK(Scalar::ratio(3, -6).str() == "-1/2");
		CHECK(Scalar::i().str() == "1*i");
		CHECK((Scalar(1) - Scalar::i()).str() == "1+-1*i");
		CHECK(Scalar(Rational(-2, 3), Rational(5, 7)).str() == "-2/3+5/7*i");
	}

	TEST_CASE("parse accepts the canonical grammar")
	{
		CHECK(Scalar::parse("0").is_zero());
		CHECK(Scalar::parse("-3") == Scalar(-3));
		CHECK(Scalar::parse("4/6") == Scalar::ratio(2, 3));
		CHECK(Scalar::parse("1/-2") == Scalar::ratio(-1, 2));
		CHECK(Scalar::parse("2*i") == Scalar(2) * Scalar::i());
		CHECK(Scalar::parse("1/2+-3/4*i") == Scalar(Rational(1, 2), Rational(-3, 4)));
	}

	TEST_CASE("parse rejects malformed input")
	{
		for (char const *bad : {"", "1//2", "1/0", "1-2*i", "i", "1+2", "1 ", " 1", "1/2*", "abc", "1+2*i*i", "--1"})
		{
			CAPTURE(bad);
			CHECK_THROWS_AS(Scalar::parse(bad), ParseError);
		}
	}

	TEST_CASE("str and parse are inverse on random values")
	{
		ExactRandom rng(1);
		for (int k = 0; k < 200; ++k)
		{
			Scalar s = rng.gaussian(50, 30);
			CHECK(Scalar::parse(s.str()) == s);
			CHECK(Scalar::parse(s.str()).str() == s.str());
		}
	}

	TEST_CASE("field axioms on random Gaussian rationals")
	{
		ExactRandom rng(2);
		for (int k = 0; k < 100; ++k)
		{
			Scalar a = rng.gaussian(9, 7), b = rng.gaussian(9, 7), c = rng.gaussian(9, 7);
			CHECK((a + b) * c == a * c + b * c);
			CHECK(a * b == b * a);
			CHECK((a * b).conj() == a.conj() * b.conj());
			CHECK((a * a.conj()).is_real());
			CHECK((a * a.conj()).re() == a.norm());
			if (!b.is_zero())
				CHECK((a / b) * b == a);
		}
	}

	TEST_CASE("division by zero")
	{
		CHECK_THROWS_AS(Scalar(1) / Scalar(0), MathError);
	}

	TEST_CASE("i squared")
	{
		CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
		CHECK(Scalar(1) / Scalar::i() == -Scalar::i());
	}
}
