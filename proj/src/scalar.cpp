#include "kforge/scalar.hpp"
#include "kforge/error.hpp"

#include <cctype>
#include <ostream>

namespace kforge
{

Scalar &Scalar::operator+=(Scalar const &o)
{
	re_ += o.re_;
	im_ += o.im_;
	return *this;
}

Scalar &Scalar::operator-=(Scalar const &o)
{
	re_ -= o.re_;
	im_ -= o.im_;
	return *this;
}

Scalar &Scalar::operator*=(Scalar const &o)
{
	Rational re = re_ * o.re_ - im_ * o.im_;
	Rational im = re_ * o.im_ + im_ * o.re_;
	re_ = std::move(re);
	im_ = std::move(im);
	return *this;
}

Scalar &Scalar::operator/=(Scalar const &o)
{
	if (o.is_zero())
		throw MathError("division by zero");
	Rational n = o.norm();
	Rational re = (re_ * o.re_ + im_ * o.im_) / n;
	Rational im = (im_ * o.re_ - re_ * o.im_) / n;
	re_ = std::move(re);
	im_ = std::move(im);
	return *this;
}

std::string Scalar::str() const
{
	if (sgn(im_) == 0)
		return re_.get_str();
	if (sgn(re_) == 0)
		return im_.get_str() + "*i";
	return re_.get_str() + "+" + im_.get_str() + "*i";
}

std::ostream &operator<<(std::ostream &os, Scalar const &s) { return os << s.str(); }

namespace
{

struct Cursor
{
	std::string_view text;
	size_t pos = 0;

	bool done() const { return pos == text.size(); }
	char peek() const { return done() ? '\0' : text[pos]; }

	[[noreturn]] void fail(std::string const &what) const
	{
		throw ParseError("malformed scalar \"" + std::string(text) + "\": " + what +
		                 " at offset " + std::to_string(pos));
	}

	std::string signed_integer()
	{
		std::string out;
		if (peek() == '+' || peek() == '-')
		{
			if (peek() == '-')
				out += '-';
			++pos;
		}
		size_t start = pos;
		while (!done() && std::isdigit(static_cast<unsigned char>(peek())))
			out += text[pos++];
		if (pos == start)
			fail("expected digits");
		return out;
	}

	Rational rational()
	{
		mpz_class num(signed_integer(), 10);
		mpz_class den(1);
		if (peek() == '/')
		{
			++pos;
			den = mpz_class(signed_integer(), 10);
			if (den == 0)
				fail("zero denominator");
		}
		Rational q(num, den);
		q.canonicalize();
		return q;
	}

	bool imaginary_unit()
	{
		if (text.substr(pos) == "*i")
		{
			pos += 2;
			return true;
		}
		return false;
	}
};

} // namespace

Scalar Scalar::parse(std::string_view text)
{
	Cursor c{text};
	if (text.empty())
		c.fail("empty string");

	Rational first = c.rational();
	if (c.done())
		return Scalar(first);
	if (c.imaginary_unit())
		return Scalar(Rational(0), first);
	if (c.peek() != '+')
		c.fail("expected '+' or '*i'");
	++c.pos;
	Rational second = c.rational();
	if (!c.imaginary_unit())
		c.fail("expected '*i' after imaginary part");
	if (!c.done())
		c.fail("trailing characters");
	return Scalar(first, second);
}

} // namespace kforge
