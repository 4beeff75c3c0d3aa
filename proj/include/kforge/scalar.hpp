#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace kforge
{

using Rational = mpq_class;

/**
 * Exact Gaussian rational a + b*i with arbitrary-precision rational parts.
 *
 * Both parts are kept in GMP canonical form at all times, so equality is
 * structural and the text form is unique.
 *
 * Text grammar: `a/b`, `c/d*i` or `a/b+c/d*i`, each of a, b, c, d an
 * optionally signed decimal integer, with `/b` and `/d` optional.
 */
class Scalar
{
  public:
	Scalar() = default;
	Scalar(long v) : re_(v) {}
	Scalar(int v) : re_(v) {}
	Scalar(Rational re) : re_(std::move(re)) { re_.canonicalize(); }
	Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im))
	{
		re_.canonicalize();
		im_.canonicalize();
	}

	static Scalar i() { return Scalar(Rational(0), Rational(1)); }
	static Scalar ratio(long num, long den) { return Scalar(Rational(num, den)); }

	Rational const &re() const { return re_; }
	Rational const &im() const { return im_; }

	bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
	bool is_real() const { return sgn(im_) == 0; }
	bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

	Scalar conj() const { return Scalar(re_, -im_); }
	/// |z|^2, always real and non-negative.
	Rational norm() const { return re_ * re_ + im_ * im_; }

	Scalar operator-() const { return Scalar(-re_, -im_); }
	Scalar &operator+=(Scalar const &o);
	Scalar &operator-=(Scalar const &o);
	Scalar &operator*=(Scalar const &o);
	/// Throws MathError on division by zero.
	Scalar &operator/=(Scalar const &o);

	friend Scalar operator+(Scalar a, Scalar const &b) { return a += b; }
	friend Scalar operator-(Scalar a, Scalar const &b) { return a -= b; }
	friend Scalar operator*(Scalar a, Scalar const &b) { return a *= b; }
	friend Scalar operator/(Scalar a, Scalar const &b) { return a /= b; }

	friend bool operator==(Scalar const &a, Scalar const &b)
	{
		return a.re_ == b.re_ && a.im_ == b.im_;
	}

	/// Canonical serialization.
	std::string str() const;
	/// Throws ParseError when `text` does not match the grammar.
	static Scalar parse(std::string_view text);

  private:
	Rational re_{0};
	Rational im_{0};
};

std::ostream &operator<<(std::ostream &os, Scalar const &s);

} // namespace kforge
