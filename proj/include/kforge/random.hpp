#pragma once

#include "kforge/matrix.hpp"

#include <cstdint>
#include <random>

namespace kforge
{

/// Seeded source of small exact scalars. mt19937_64 output is fully specified,
/// and the reduction to ranges below avoids library-specific distributions, so
/// sequences are identical on every platform.
class ExactRandom
{
  public:
	explicit ExactRandom(uint64_t seed) : engine_(seed) {}

	/// Uniform integer in [lo, hi].
	long integer(long lo, long hi)
	{
		auto span = static_cast<uint64_t>(hi - lo + 1);
		return lo + static_cast<long>(engine_() % span);
	}

	/// num/den with |num| <= max_num and 1 <= den <= max_den.
	Scalar rational(long max_num, long max_den)
	{
		long num = integer(-max_num, max_num);
		long den = integer(1, max_den);
		return Scalar::ratio(num, den);
	}

	Scalar gaussian(long max_num, long max_den)
	{
		Scalar re = rational(max_num, max_den);
		Scalar im = rational(max_num, max_den);
		return Scalar(re.re(), im.re());
	}

	Vector vector(size_t n, long max_num = 5, long max_den = 4, bool complex = true)
	{
		Vector v(n);
		for (auto &x : v)
			x = complex ? gaussian(max_num, max_den) : rational(max_num, max_den);
		return v;
	}

	Matrix matrix(size_t rows, size_t cols, long max_num = 5, long max_den = 4, bool complex = false)
	{
		Matrix m(rows, cols);
		for (size_t r = 0; r < rows; ++r)
			for (size_t c = 0; c < cols; ++c)
				m(r, c) = complex ? gaussian(max_num, max_den) : rational(max_num, max_den);
		return m;
	}

  private:
	std::mt19937_64 engine_;
};

} // namespace kforge
