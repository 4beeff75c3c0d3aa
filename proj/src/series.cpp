#include "kforge/series.hpp"
#include "kforge/dgla.hpp"
#include "kforge/error.hpp"

#include <numeric>

namespace kforge
{

unsigned total_degree(Monomial const &m) { return std::accumulate(m.begin(), m.end(), 0u); }

bool GrlexLess::operator()(Monomial const &a, Monomial const &b) const
{
	unsigned da = total_degree(a), db = total_degree(b);
	if (da != db)
		return da < db;
	// t1 > t2 > ...: within one degree, the larger exponent vector is the larger monomial
	return a < b;
}

namespace
{

void enumerate(size_t nvars, unsigned remaining, size_t pos, Monomial &cur, std::vector<Monomial> &out)
{
	if (pos + 1 == nvars)
	{
		cur[pos] = remaining;
		out.push_back(cur);
		return;
	}
	for (unsigned e = remaining + 1; e-- > 0;)
	{
		cur[pos] = e;
		enumerate(nvars, remaining - e, pos + 1, cur, out);
	}
}

} // namespace

std::vector<Monomial> monomials_of_degree(size_t nvars, unsigned degree)
{
	std::vector<Monomial> out;
	if (nvars == 0)
	{
		if (degree == 0)
			out.emplace_back();
		return out;
	}
	Monomial cur(nvars, 0);
	enumerate(nvars, degree, 0, cur, out);
	return out;
}

void PowerSeries::add(Monomial const &m, Vector const &coeff)
{
	if (m.size() != nvars_)
		throw DimensionError("monomial has " + std::to_string(m.size()) + " exponents, series has " +
		                     std::to_string(nvars_) + " variables");
	if (coeff.size() != dim_)
		throw DimensionError("series coefficient has wrong length");
	if (total_degree(m) > order_ || kforge::is_zero(std::span<Scalar const>(coeff)))
		return;
	auto it = terms_.find(m);
	if (it == terms_.end())
	{
		terms_.emplace(m, coeff);
		return;
	}
	it->second = it->second + coeff;
	if (kforge::is_zero(std::span<Scalar const>(it->second)))
		terms_.erase(it);
}

Vector PowerSeries::coefficient(Monomial const &m) const
{
	auto it = terms_.find(m);
	return it == terms_.end() ? Vector(dim_) : it->second;
}

PowerSeries PowerSeries::homogeneous_part(unsigned k) const
{
	PowerSeries out(nvars_, degree_, dim_, order_);
	for (auto const &[m, v] : terms_)
		if (total_degree(m) == k)
			out.terms_.emplace(m, v);
	return out;
}

unsigned PowerSeries::max_nonzero_order() const
{
	return terms_.empty() ? 0 : total_degree(terms_.rbegin()->first);
}

Vector PowerSeries::evaluate(Vector const &point) const
{
	if (point.size() != nvars_)
		throw DimensionError("evaluation point has wrong length");
	Vector out(dim_);
	for (auto const &[m, v] : terms_)
	{
		Scalar x = 1;
		for (size_t i = 0; i < nvars_; ++i)
			for (unsigned e = 0; e < m[i]; ++e)
				x *= point[i];
		add_scaled(out, x, v);
	}
	return out;
}

PowerSeries PowerSeries::map(Matrix const &m, int degree) const
{
	if (m.cols() != dim_)
		throw DimensionError("operator does not act on series coefficients");
	PowerSeries out(nvars_, degree, m.rows(), order_);
	for (auto const &[mono, v] : terms_)
		out.add(mono, m * v);
	return out;
}

void PowerSeries::check_compatible(PowerSeries const &o) const
{
	if (nvars_ != o.nvars_ || dim_ != o.dim_ || degree_ != o.degree_)
		throw DimensionError("incompatible power series");
}

PowerSeries &PowerSeries::operator+=(PowerSeries const &o)
{
	check_compatible(o);
	order_ = std::min(order_, o.order_);
	for (auto it = terms_.begin(); it != terms_.end();)
		it = total_degree(it->first) > order_ ? terms_.erase(it) : std::next(it);
	for (auto const &[m, v] : o.terms_)
		add(m, v);
	return *this;
}

PowerSeries &PowerSeries::operator-=(PowerSeries const &o) { return *this += Scalar(-1) * o; }

PowerSeries &PowerSeries::operator*=(Scalar const &s)
{
	if (s.is_zero())
	{
		terms_.clear();
		return *this;
	}
	for (auto &[m, v] : terms_)
		v = s * std::move(v);
	return *this;
}

PowerSeries PowerSeries::component(size_t k) const
{
	PowerSeries out(nvars_, 0, 1, order_);
	for (auto const &[m, v] : terms_)
		out.add(m, Vector{v.at(k)});
	return out;
}

PowerSeries bracket(DGLA const &D, PowerSeries const &a, PowerSeries const &b)
{
	if (a.nvars() != b.nvars())
		throw DimensionError("bracket of series in different variables");
	int degree = a.degree() + b.degree();
	unsigned order = std::min(a.order(), b.order());
	PowerSeries out(a.nvars(), degree, D.dim(degree), order);
	if (out.dim() == 0)
		return out;
	for (auto const &[ma, va] : a.terms())
	{
		unsigned da = total_degree(ma);
		for (auto const &[mb, vb] : b.terms())
		{
			if (da + total_degree(mb) > order)
				break;
			Monomial m(ma.size());
			for (size_t i = 0; i < m.size(); ++i)
				m[i] = ma[i] + mb[i];
			out.add(m, D.bracket(a.degree(), va, b.degree(), vb));
		}
	}
	return out;
}

namespace
{

using ScalarPoly = std::map<Monomial, Scalar, GrlexLess>;

ScalarPoly multiply(ScalarPoly const &a, ScalarPoly const &b)
{
	ScalarPoly out;
	for (auto const &[ma, ca] : a)
		for (auto const &[mb, cb] : b)
		{
			Monomial m(ma.size());
			for (size_t i = 0; i < m.size(); ++i)
				m[i] = ma[i] + mb[i];
			out[m] += ca * cb;
		}
	for (auto it = out.begin(); it != out.end();)
		it = it->second.is_zero() ? out.erase(it) : std::next(it);
	return out;
}

} // namespace

PowerSeries substitute_linear(PowerSeries const &s, Matrix const &T)
{
	size_t n = s.nvars();
	if (T.rows() != n || T.cols() != n)
		throw DimensionError("substitution matrix must be " + std::to_string(n) + "x" + std::to_string(n));

	// powers[i][e] = (sum_j T(i,j) t_j)^e
	std::vector<std::vector<ScalarPoly>> powers(n);
	for (size_t i = 0; i < n; ++i)
	{
		ScalarPoly linear;
		for (size_t j = 0; j < n; ++j)
			if (!T(i, j).is_zero())
			{
				Monomial m(n, 0);
				m[j] = 1;
				linear[m] = T(i, j);
			}
		powers[i].push_back(ScalarPoly{{Monomial(n, 0), Scalar(1)}});
		unsigned top = 0;
		for (auto const &[m, v] : s.terms())
			top = std::max(top, m[i]);
		for (unsigned e = 1; e <= top; ++e)
			powers[i].push_back(multiply(powers[i].back(), linear));
	}

	PowerSeries out(n, s.degree(), s.dim(), s.order());
	for (auto const &[m, v] : s.terms())
	{
		ScalarPoly expanded{{Monomial(n, 0), Scalar(1)}};
		for (size_t i = 0; i < n; ++i)
			if (m[i] > 0)
				expanded = multiply(expanded, powers[i][m[i]]);
		for (auto const &[mono, c] : expanded)
			out.add(mono, c * v);
	}
	return out;
}

std::string monomial_str(Monomial const &m, std::string const &var)
{
	std::string out;
	for (size_t i = 0; i < m.size(); ++i)
	{
		if (m[i] == 0)
			continue;
		if (!out.empty())
			out += '*';
		out += var + std::to_string(i + 1);
		if (m[i] > 1)
			out += '^' + std::to_string(m[i]);
	}
	return out.empty() ? "1" : out;
}

std::string first_difference(PowerSeries const &a, PowerSeries const &b)
{
	auto ia = a.terms().begin(), ib = b.terms().begin();
	GrlexLess less;
	while (ia != a.terms().end() || ib != b.terms().end())
	{
		if (ib == b.terms().end() || (ia != a.terms().end() && less(ia->first, ib->first)))
			return monomial_str(ia->first);
		if (ia == a.terms().end() || less(ib->first, ia->first))
			return monomial_str(ib->first);
		if (!(ia->second == ib->second))
			return monomial_str(ia->first);
		++ia;
		++ib;
	}
	return {};
}

} // namespace kforge
