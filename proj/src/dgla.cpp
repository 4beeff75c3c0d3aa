#include "kforge/dgla.hpp"
#include "kforge/error.hpp"

#include <set>
#include <string>

namespace kforge
{

GradedVectorSpace::GradedVectorSpace(std::vector<size_t> dims, std::vector<std::vector<std::string>> labels)
    : dims_(std::move(dims)), labels_(std::move(labels))
{
	if (dims_.empty())
		throw FormatError("graded space needs at least degree 0");
	if (labels_.empty())
	{
		labels_.resize(dims_.size());
		for (size_t p = 0; p < dims_.size(); ++p)
			for (size_t i = 0; i < dims_[p]; ++i)
				labels_[p].push_back("e" + std::to_string(p) + "_" + std::to_string(i));
		return;
	}
	if (labels_.size() != dims_.size())
		throw FormatError("labels: expected " + std::to_string(dims_.size()) + " degrees, got " +
		                  std::to_string(labels_.size()));
	for (size_t p = 0; p < dims_.size(); ++p)
	{
		if (labels_[p].size() != dims_[p])
			throw FormatError("labels[" + std::to_string(p) + "]: expected " + std::to_string(dims_[p]) +
			                  " names, got " + std::to_string(labels_[p].size()));
		std::set<std::string> seen(labels_[p].begin(), labels_[p].end());
		if (seen.size() != labels_[p].size())
			throw FormatError("labels[" + std::to_string(p) + "]: duplicate name");
	}
}

size_t GradedVectorSpace::dim(int p) const
{
	if (p < 0 || p > max_degree())
		return 0;
	return dims_[p];
}

int koszul_sign(int p, int q) { return (p * q) % 2 == 0 ? 1 : -1; }

DGLA::DGLA(GradedVectorSpace space, std::vector<Matrix> differential, std::vector<BracketEntry> table)
    : space_(std::move(space)), d_(std::move(differential)), table_(std::move(table))
{
	int top = max_degree();
	if (static_cast<int>(d_.size()) > top)
		throw FormatError("differential: " + std::to_string(d_.size()) + " maps given but max degree is " +
		                  std::to_string(top));
	for (int p = 0; p <= top; ++p)
	{
		if (p < static_cast<int>(d_.size()))
		{
			auto const &m = d_[p];
			if (m.rows() != dim(p + 1) || m.cols() != dim(p))
				throw FormatError("differential[" + std::to_string(p) + "]: expected " +
				                  std::to_string(dim(p + 1)) + "x" + std::to_string(dim(p)) + ", got " +
				                  std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
		}
		else
			d_.emplace_back(dim(p + 1), dim(p));
	}

	full_.assign(top + 1, std::vector<std::vector<Vector>>(top + 1));
	for (int p = 0; p <= top; ++p)
		for (int q = 0; q <= top; ++q)
			full_[p][q].assign(dim(p) * dim(q), Vector(dim(p + q)));

	std::set<std::tuple<int, size_t, int, size_t>> seen;
	for (size_t n = 0; n < table_.size(); ++n)
	{
		auto const &e = table_[n];
		std::string where = "bracket[" + std::to_string(n) + "]";
		if (e.p < 0 || e.q < 0 || e.p > top || e.q > top)
			throw FormatError(where + ": degree out of range");
		if (e.i >= dim(e.p) || e.j >= dim(e.q))
			throw FormatError(where + ": basis index out of range");
		if (e.p > e.q || (e.p == e.q && e.i > e.j))
			throw FormatError(where + ": stored entries need p < q, or p == q and i <= j");
		if (!seen.insert({e.p, e.i, e.q, e.j}).second)
			throw FormatError(where + ": duplicate entry");

		Vector v(dim(e.p + e.q));
		for (auto const &[k, c] : e.out)
		{
			if (e.p + e.q > top)
			{
				if (!c.is_zero())
					throw FormatError(where + ": target degree " + std::to_string(e.p + e.q) +
					                  " exceeds max degree");
				continue;
			}
			if (k >= v.size())
				throw FormatError(where + ": output index out of range");
			v[k] += c;
		}
		full_[e.p][e.q][e.i * dim(e.q) + e.j] = v;
		if (e.p != e.q || e.i != e.j)
			full_[e.q][e.p][e.j * dim(e.p) + e.i] = Scalar(-koszul_sign(e.p, e.q)) * v;
	}
}

Matrix const &DGLA::d(int p) const { return d_.at(p); }

Vector const &DGLA::structure(int p, size_t i, int q, size_t j) const
{
	static Vector const empty;
	if (p < 0 || q < 0 || p > max_degree() || q > max_degree())
		return empty;
	return full_[p][q].at(i * dim(q) + j);
}

Vector DGLA::bracket(int p, Vector const &a, int q, Vector const &b) const
{
	if (a.size() != dim(p) || b.size() != dim(q))
		throw DimensionError("bracket: coordinate length does not match degree");
	Vector out(dim(p + q));
	if (out.empty())
		return out;
	for (size_t i = 0; i < a.size(); ++i)
	{
		if (a[i].is_zero())
			continue;
		for (size_t j = 0; j < b.size(); ++j)
		{
			if (b[j].is_zero())
				continue;
			auto const &c = full_[p][q][i * dim(q) + j];
			add_scaled(out, a[i] * b[j], c);
		}
	}
	return out;
}

void DGLA::check_element(GradedElement const &a) const
{
	if (a.degree < 0 || a.degree > max_degree())
		throw DimensionError("element degree " + std::to_string(a.degree) + " out of range");
	if (a.coords.size() != dim(a.degree))
		throw DimensionError("element of degree " + std::to_string(a.degree) + " has " +
		                     std::to_string(a.coords.size()) + " coordinates, expected " +
		                     std::to_string(dim(a.degree)));
}

GradedElement DGLA::bracket(GradedElement const &a, GradedElement const &b) const
{
	check_element(a);
	check_element(b);
	return {a.degree + b.degree, bracket(a.degree, a.coords, b.degree, b.coords)};
}

GradedElement DGLA::differential(GradedElement const &a) const
{
	check_element(a);
	return {a.degree + 1, d(a.degree) * a.coords};
}

GradedElement DGLA::mc_residual(GradedElement const &a) const
{
	if (a.degree != 1)
		throw DimensionError("Maurer-Cartan residual needs a degree-1 element");
	auto da = differential(a);
	auto aa = bracket(a, a);
	return {2, da.coords - Scalar::ratio(1, 2) * aa.coords};
}

DGLA DGLA::with_scaled_bracket(Scalar const &c) const
{
	auto table = table_;
	for (auto &e : table)
		for (auto &entry : e.out)
			entry.second *= c;
	std::vector<Matrix> d(d_.begin(), d_.begin() + max_degree());
	return DGLA(space_, std::move(d), std::move(table));
}

namespace
{

std::string tuple_label(GradedVectorSpace const &s, std::initializer_list<std::pair<int, size_t>> items)
{
	std::string out = "(";
	bool first = true;
	for (auto const &[p, i] : items)
	{
		if (!first)
			out += ", ";
		out += s.label(p, i);
		first = false;
	}
	return out + ")";
}

} // namespace

ValidationReport validate_dgla(DGLA const &D)
{
	ValidationReport report;
	auto const &S = D.space();
	int top = D.max_degree();

	{
		std::string witness;
		for (int p = 0; p + 2 <= top && witness.empty(); ++p)
		{
			Matrix dd = D.d(p + 1) * D.d(p);
			for (size_t i = 0; i < dd.cols() && witness.empty(); ++i)
				if (!is_zero(dd.column(i)))
					witness = "d(d(" + S.label(p, i) + ")) != 0";
		}
		report.add("d_squared", witness.empty(), witness);
	}

	{
		std::string witness;
		for (int p = 0; p <= top && witness.empty(); ++p)
			for (int q = p; q <= top && witness.empty(); ++q)
				for (size_t i = 0; i < D.dim(p) && witness.empty(); ++i)
					for (size_t j = 0; j < D.dim(q) && witness.empty(); ++j)
					{
						Vector const &ab = D.structure(p, i, q, j);
						Vector const &ba = D.structure(q, j, p, i);
						if (!(ab == Scalar(-koszul_sign(p, q)) * ba))
							witness = tuple_label(S, {{p, i}, {q, j}}) + ": [a,b] != -(-1)^{|a||b|}[b,a]";
					}
		report.add("antisymmetry", witness.empty(), witness);
	}

	{
		std::string witness;
		for (int p = 0; p <= top && witness.empty(); ++p)
			for (int q = 0; p + q <= top && witness.empty(); ++q)
				for (int r = 0; p + q + r <= top && witness.empty(); ++r)
					for (size_t i = 0; i < D.dim(p) && witness.empty(); ++i)
						for (size_t j = 0; j < D.dim(q) && witness.empty(); ++j)
							for (size_t k = 0; k < D.dim(r) && witness.empty(); ++k)
							{
								Vector a = unit_vector(D.dim(p), i);
								Vector b = unit_vector(D.dim(q), j);
								Vector c = unit_vector(D.dim(r), k);
								Vector sum = Scalar(koszul_sign(p, r)) * D.bracket(p, a, q + r, D.bracket(q, b, r, c));
								sum = sum + Scalar(koszul_sign(q, p)) * D.bracket(q, b, r + p, D.bracket(r, c, p, a));
								sum = sum + Scalar(koszul_sign(r, q)) * D.bracket(r, c, p + q, D.bracket(p, a, q, b));
								if (!is_zero(sum))
									witness = tuple_label(S, {{p, i}, {q, j}, {r, k}});
							}
		report.add("jacobi", witness.empty(), witness);
	}

	{
		std::string witness;
		for (int p = 0; p <= top && witness.empty(); ++p)
			for (int q = 0; p + q <= top && witness.empty(); ++q)
				for (size_t i = 0; i < D.dim(p) && witness.empty(); ++i)
					for (size_t j = 0; j < D.dim(q) && witness.empty(); ++j)
					{
						GradedElement a = D.basis(p, i);
						GradedElement b = D.basis(q, j);
						Vector lhs = D.differential(D.bracket(a, b)).coords;
						Vector rhs = D.bracket(p + 1, D.differential(a).coords, q, b.coords);
						Vector second = D.bracket(p, a.coords, q + 1, D.differential(b).coords);
						rhs = rhs + Scalar(p % 2 == 0 ? 1 : -1) * second;
						if (!(lhs == rhs))
							witness = tuple_label(S, {{p, i}, {q, j}});
					}
		report.add("leibniz", witness.empty(), witness);
	}
	return report;
}

} // namespace kforge
