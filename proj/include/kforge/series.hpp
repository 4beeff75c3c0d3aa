#pragma once

#include "kforge/matrix.hpp"

#include <map>
#include <string>
#include <vector>

namespace kforge
{

class DGLA;

/// Exponent vector of a monomial t_1^{m_1} ... t_n^{m_n}.
using Monomial = std::vector<unsigned>;

unsigned total_degree(Monomial const &m);

/// Graded lexicographic order with t_1 > t_2 > ...; `less(a, b)` means a < b.
struct GrlexLess
{
	bool operator()(Monomial const &a, Monomial const &b) const;
};

/// All monomials in n variables of the given total degree, descending in grlex.
std::vector<Monomial> monomials_of_degree(size_t nvars, unsigned degree);

/**
 * Truncated multivariate power series in t_1..t_n with coefficients in a fixed
 * coordinate space (a graded piece of a DGLA, or length 1 for scalar series).
 * Terms of total degree above `order` are discarded on insertion; zero
 * coefficients are never stored, so equality is structural.
 */
class PowerSeries
{
  public:
	PowerSeries() = default;
	PowerSeries(size_t nvars, int degree, size_t dim, unsigned order)
	    : nvars_(nvars), degree_(degree), dim_(dim), order_(order)
	{
	}

	size_t nvars() const { return nvars_; }
	/// Graded degree of the coefficients.
	int degree() const { return degree_; }
	size_t dim() const { return dim_; }
	unsigned order() const { return order_; }

	using Terms = std::map<Monomial, Vector, GrlexLess>;
	Terms const &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	/// Accumulates `coeff` at monomial `m`. Throws DimensionError on shape mismatch.
	void add(Monomial const &m, Vector const &coeff);
	Vector coefficient(Monomial const &m) const;

	PowerSeries homogeneous_part(unsigned k) const;
	/// Highest total degree with a nonzero coefficient; 0 for the zero series.
	unsigned max_nonzero_order() const;
	Vector evaluate(Vector const &point) const;

	/// Coefficient-wise linear map; the result has graded degree `degree`.
	PowerSeries map(Matrix const &m, int degree) const;

	PowerSeries &operator+=(PowerSeries const &o);
	PowerSeries &operator-=(PowerSeries const &o);
	PowerSeries &operator*=(Scalar const &s);
	friend PowerSeries operator+(PowerSeries a, PowerSeries const &b) { return a += b; }
	friend PowerSeries operator-(PowerSeries a, PowerSeries const &b) { return a -= b; }
	friend PowerSeries operator*(Scalar const &s, PowerSeries a) { return a *= s; }

	friend bool operator==(PowerSeries const &a, PowerSeries const &b)
	{
		return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.dim_ == b.dim_ && a.terms_ == b.terms_;
	}

	/// Scalar series: one per coordinate.
	PowerSeries component(size_t k) const;

  private:
	void check_compatible(PowerSeries const &o) const;

	size_t nvars_ = 0;
	int degree_ = 0;
	size_t dim_ = 0;
	unsigned order_ = 0;
	Terms terms_;
};

/// Bracket of two series with DGLA-valued coefficients, truncated at the smaller order.
PowerSeries bracket(DGLA const &D, PowerSeries const &a, PowerSeries const &b);

/// Substitution t_i -> sum_j T(i, j) t_j, re-truncated at the series order.
PowerSeries substitute_linear(PowerSeries const &s, Matrix const &T);

/// "t1^2*t3"; "1" for the constant monomial.
std::string monomial_str(Monomial const &m, std::string const &var = "t");

/// First monomial (in grlex order) where a and b differ, as text; empty when equal.
std::string first_difference(PowerSeries const &a, PowerSeries const &b);

} // namespace kforge
