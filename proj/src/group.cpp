#include "kforge/group.hpp"
#include "kforge/error.hpp"
#include "kforge/random.hpp"

#include <map>
#include <string>

namespace kforge
{

GroupElement identity_element(GradedVectorSpace const &space)
{
	GroupElement g;
	for (int p = 0; p <= space.max_degree(); ++p)
		g.push_back(Matrix::identity(space.dim(p)));
	return g;
}

GroupElement compose(GroupElement const &a, GroupElement const &b)
{
	if (a.size() != b.size())
		throw DimensionError("group elements of different degree ranges");
	GroupElement out;
	for (size_t p = 0; p < a.size(); ++p)
		out.push_back(a[p] * b[p]);
	return out;
}

namespace
{

std::string key_of(GroupElement const &g)
{
	std::string key;
	for (auto const &m : g)
	{
		key += '|';
		for (size_t r = 0; r < m.rows(); ++r)
			for (size_t c = 0; c < m.cols(); ++c)
			{
				key += m(r, c).str();
				key += ',';
			}
	}
	return key;
}

std::string element_name(size_t k) { return "g" + std::to_string(k); }

bool commutes(Matrix const &a, Matrix const &b) { return a * b == b * a; }

} // namespace

FiniteAction close_group(std::vector<GroupElement> const &generators, size_t cap)
{
	if (generators.empty())
		throw MathError("no generators");
	for (size_t n = 0; n < generators.size(); ++n)
		for (size_t p = 0; p < generators[n].size(); ++p)
		{
			auto const &m = generators[n][p];
			if (!m.is_square() || !inverse(m))
				throw MathError("generator " + std::to_string(n) + " is not invertible in degree " +
				                std::to_string(p));
		}

	GroupElement id;
	for (auto const &m : generators.front())
		id.push_back(Matrix::identity(m.rows()));

	FiniteAction out;
	std::map<std::string, size_t> index;
	index.emplace(key_of(id), 0);
	out.elements.push_back(id);
	for (size_t head = 0; head < out.elements.size(); ++head)
	{
		for (auto const &gen : generators)
		{
			GroupElement next = compose(out.elements[head], gen);
			auto key = key_of(next);
			if (index.count(key))
				continue;
			if (out.elements.size() >= cap)
				throw GroupTooLarge();
			index.emplace(std::move(key), out.elements.size());
			out.elements.push_back(std::move(next));
		}
	}
	return out;
}

namespace
{

ValidationReport validate_finite(DGLA const &D, FiniteAction const &A)
{
	ValidationReport report;
	int top = D.max_degree();

	std::string shape;
	for (size_t n = 0; n < A.elements.size() && shape.empty(); ++n)
	{
		auto const &g = A.elements[n];
		if (static_cast<int>(g.size()) != top + 1)
			shape = element_name(n) + ": wrong number of degrees";
		for (int p = 0; p <= top && shape.empty() && p < static_cast<int>(g.size()); ++p)
			if (g[p].rows() != D.dim(p) || g[p].cols() != D.dim(p))
				shape = element_name(n) + ": wrong shape in degree " + std::to_string(p);
	}
	report.add("action_shape", shape.empty(), shape);
	if (!shape.empty())
		return report;

	std::map<std::string, size_t> index;
	for (size_t n = 0; n < A.elements.size(); ++n)
		index.emplace(key_of(A.elements[n]), n);

	bool has_identity = index.count(key_of(identity_element(D.space()))) > 0;
	report.add("identity", has_identity, has_identity ? "" : "identity element missing");

	std::string witness;
	for (size_t a = 0; a < A.elements.size() && witness.empty(); ++a)
		for (size_t b = 0; b < A.elements.size() && witness.empty(); ++b)
			if (!index.count(key_of(compose(A.elements[a], A.elements[b]))))
				witness = element_name(a) + " * " + element_name(b) + " not in group";
	report.add("closure", witness.empty(), witness);

	witness.clear();
	for (size_t n = 0; n < A.elements.size() && witness.empty(); ++n)
		for (int p = 0; p <= top && witness.empty(); ++p)
			if (!inverse(A.elements[n][p]))
				witness = element_name(n) + " singular in degree " + std::to_string(p);
	report.add("invertible", witness.empty(), witness);

	witness.clear();
	for (size_t n = 0; n < A.elements.size() && witness.empty(); ++n)
		for (int p = 0; p < top && witness.empty(); ++p)
			if (!(A.elements[n][p + 1] * D.d(p) == D.d(p) * A.elements[n][p]))
				witness = element_name(n) + " in degree " + std::to_string(p);
	report.add("commutes_with_d", witness.empty(), witness);

	witness.clear();
	auto const &S = D.space();
	for (size_t n = 0; n < A.elements.size() && witness.empty(); ++n)
	{
		auto const &g = A.elements[n];
		for (int p = 0; p <= top && witness.empty(); ++p)
			for (int q = p; p + q <= top && witness.empty(); ++q)
				for (size_t i = 0; i < D.dim(p) && witness.empty(); ++i)
					for (size_t j = 0; j < D.dim(q) && witness.empty(); ++j)
					{
						Vector lhs = g[p + q] * D.structure(p, i, q, j);
						Vector rhs = D.bracket(p, g[p].column(i), q, g[q].column(j));
						if (!(lhs == rhs))
							witness = element_name(n) + " on (" + S.label(p, i) + ", " + S.label(q, j) + ")";
					}
	}
	report.add("bracket_automorphism", witness.empty(), witness);
	return report;
}

std::vector<long> add_weights(std::vector<long> a, std::vector<long> const &b)
{
	for (size_t k = 0; k < a.size(); ++k)
		a[k] += b[k];
	return a;
}

std::string weight_str(std::vector<long> const &w)
{
	std::string s = "(";
	for (size_t k = 0; k < w.size(); ++k)
		s += (k ? "," : "") + std::to_string(w[k]);
	return s + ")";
}

ValidationReport validate_torus(DGLA const &D, TorusAction const &T)
{
	ValidationReport report;
	int top = D.max_degree();
	auto const &S = D.space();

	std::string shape;
	if (static_cast<int>(T.weights.size()) != top + 1)
		shape = "weights: wrong number of degrees";
	for (int p = 0; p <= top && shape.empty(); ++p)
	{
		if (T.weights[p].size() != D.dim(p))
			shape = "weights[" + std::to_string(p) + "]: wrong count";
		for (auto const &w : T.weights[p])
			if (w.size() != T.rank && shape.empty())
				shape = "weights[" + std::to_string(p) + "]: weight vector length differs from rank";
	}
	report.add("action_shape", shape.empty(), shape);
	if (!shape.empty())
		return report;

	std::string witness;
	for (int p = 0; p < top && witness.empty(); ++p)
		for (size_t i = 0; i < D.dim(p) && witness.empty(); ++i)
			for (size_t k = 0; k < D.dim(p + 1) && witness.empty(); ++k)
				if (!D.d(p)(k, i).is_zero() && T.weights[p + 1][k] != T.weights[p][i])
					witness = "d(" + S.label(p, i) + ") has a component on " + S.label(p + 1, k) +
					          " of different weight";
	report.add("commutes_with_d", witness.empty(), witness);

	witness.clear();
	for (int p = 0; p <= top && witness.empty(); ++p)
		for (int q = p; p + q <= top && witness.empty(); ++q)
			for (size_t i = 0; i < D.dim(p) && witness.empty(); ++i)
				for (size_t j = 0; j < D.dim(q) && witness.empty(); ++j)
				{
					auto const &c = D.structure(p, i, q, j);
					auto expected = add_weights(T.weights[p][i], T.weights[q][j]);
					for (size_t k = 0; k < c.size() && witness.empty(); ++k)
						if (!c[k].is_zero() && T.weights[p + q][k] != expected)
							witness = "[" + S.label(p, i) + ", " + S.label(q, j) + "] has a component on " +
							          S.label(p + q, k) + " of weight " + weight_str(T.weights[p + q][k]) +
							          ", expected " + weight_str(expected);
				}
	report.add("bracket_weights", witness.empty(), witness);
	return report;
}

} // namespace

ValidationReport validate_action(DGLA const &D, GroupAction const &action)
{
	if (auto const *f = std::get_if<FiniteAction>(&action))
		return validate_finite(D, *f);
	return validate_torus(D, std::get<TorusAction>(action));
}

HermitianMetric average_metric(HermitianMetric const &metric, GroupAction const &action)
{
	HermitianMetric out = metric;
	if (auto const *f = std::get_if<FiniteAction>(&action))
	{
		Scalar scale = Scalar(1) / Scalar(static_cast<long>(f->elements.size()));
		for (size_t p = 0; p < metric.blocks.size(); ++p)
		{
			Matrix sum(metric.blocks[p].rows(), metric.blocks[p].cols());
			for (auto const &g : f->elements)
				sum += g[p].conj_transpose() * metric.blocks[p] * g[p];
			out.blocks[p] = sum * scale;
		}
		return out;
	}
	auto const &T = std::get<TorusAction>(action);
	for (size_t p = 0; p < out.blocks.size(); ++p)
	{
		auto &m = out.blocks[p];
		for (size_t r = 0; r < m.rows(); ++r)
			for (size_t c = 0; c < m.cols(); ++c)
				if (T.weights[p][r] != T.weights[p][c])
					m(r, c) = Scalar();
	}
	return out;
}

ValidationReport check_metric_invariance(HermitianMetric const &metric, GroupAction const &action)
{
	std::string witness;
	if (auto const *f = std::get_if<FiniteAction>(&action))
	{
		for (size_t n = 0; n < f->elements.size() && witness.empty(); ++n)
			for (size_t p = 0; p < metric.blocks.size() && witness.empty(); ++p)
			{
				auto const &g = f->elements[n][p];
				if (!(g.conj_transpose() * metric.blocks[p] * g == metric.blocks[p]))
					witness = element_name(n) + " in degree " + std::to_string(p);
			}
	}
	else
	{
		auto const &T = std::get<TorusAction>(action);
		for (size_t p = 0; p < metric.blocks.size() && witness.empty(); ++p)
		{
			auto const &m = metric.blocks[p];
			for (size_t r = 0; r < m.rows() && witness.empty(); ++r)
				for (size_t c = 0; c < m.cols() && witness.empty(); ++c)
					if (!m(r, c).is_zero() && T.weights[p][r] != T.weights[p][c])
						witness = "pairs different weights in degree " + std::to_string(p);
		}
	}
	ValidationReport report;
	report.add("metric_invariant", witness.empty(), witness);
	return report;
}

namespace
{

bool weight_preserving(TorusAction const &T, int from, int to, Matrix const &m)
{
	for (size_t r = 0; r < m.rows(); ++r)
		for (size_t c = 0; c < m.cols(); ++c)
			if (!m(r, c).is_zero() && T.weights[to][r] != T.weights[from][c])
				return false;
	return true;
}

} // namespace

ValidationReport check_operator_equivariance(GroupAction const &action, HodgeData const &hodge)
{
	ValidationReport report;
	int top = hodge.max_degree();

	struct Op
	{
		char const *name;
		std::vector<Matrix> const *mats;
		int shift;
	};
	Op const ops[] = {{"dstar", &hodge.dstar, -1}, {"laplacian", &hodge.box, 0}, {"green", &hodge.G, 0},
	                  {"harmonic", &hodge.H, 0}};

	for (auto const &op : ops)
	{
		std::string witness;
		if (auto const *f = std::get_if<FiniteAction>(&action))
		{
			for (size_t n = 0; n < f->elements.size() && witness.empty(); ++n)
				for (int p = 0; p <= top && witness.empty(); ++p)
				{
					int to = p + op.shift;
					if (to < 0)
						continue;
					auto const &g = f->elements[n];
					auto const &m = (*op.mats)[p];
					if (!(g[to] * m == m * g[p]))
						witness = element_name(n) + " in degree " + std::to_string(p);
				}
		}
		else
		{
			auto const &T = std::get<TorusAction>(action);
			for (int p = 0; p <= top && witness.empty(); ++p)
			{
				int to = p + op.shift;
				if (to < 0)
					continue;
				if (!weight_preserving(T, p, to, (*op.mats)[p]))
					witness = "mixes weights in degree " + std::to_string(p);
			}
		}
		report.add(std::string(op.name) + "_equivariant", witness.empty(), witness);
	}
	return report;
}

std::vector<Matrix> induced_harmonic_rep(FiniteAction const &action, HodgeData const &hodge, int p)
{
	Matrix basis = hodge.harmonic_matrix(p);
	std::vector<Matrix> out;
	for (size_t n = 0; n < action.elements.size(); ++n)
	{
		auto rho = solve_linear(basis, action.elements[n].at(p) * basis);
		if (!rho)
			throw MathError("harmonic space of degree " + std::to_string(p) + " is not invariant under " +
			                element_name(n));
		out.push_back(std::move(*rho));
	}
	return out;
}

std::optional<std::vector<long>> weight_of(TorusAction const &action, int p, Vector const &v)
{
	std::optional<std::vector<long>> w;
	for (size_t k = 0; k < v.size(); ++k)
	{
		if (v[k].is_zero())
			continue;
		auto const &wk = action.weights.at(p).at(k);
		if (w && *w != wk)
			throw MathError("vector in degree " + std::to_string(p) + " mixes weights " + weight_str(*w) +
			                " and " + weight_str(wk));
		w = wk;
	}
	return w;
}

std::vector<std::vector<long>> harmonic_weights(TorusAction const &action, HodgeData const &hodge, int p)
{
	std::vector<std::vector<long>> out;
	for (auto const &h : hodge.harmonic.at(p))
	{
		auto w = weight_of(action, p, h);
		out.push_back(w ? *w : std::vector<long>(action.rank, 0));
	}
	return out;
}

// ---------------------------------------------------------------------------
// Lie algebra actions

GroupElement LieAlgebraAction::rho(Vector const &coeffs) const
{
	if (coeffs.size() != dim)
		throw DimensionError("Lie algebra element has wrong length");
	if (rep.empty())
		throw DimensionError("empty representation");
	GroupElement out;
	for (auto const &m : rep.front())
		out.emplace_back(m.rows(), m.cols());
	for (size_t a = 0; a < dim; ++a)
	{
		if (coeffs[a].is_zero())
			continue;
		if (!complexified && !coeffs[a].is_real())
			throw MathError("complex coefficient on a real Lie algebra; complexify first");
		for (size_t p = 0; p < out.size(); ++p)
			out[p] += rep[a][p] * coeffs[a];
	}
	return out;
}

Vector LieAlgebraAction::lie_bracket(Vector const &x, Vector const &y) const
{
	Vector out(dim);
	for (size_t a = 0; a < dim; ++a)
		for (size_t b = 0; b < dim; ++b)
			if (!x[a].is_zero() && !y[b].is_zero())
				add_scaled(out, x[a] * y[b], structure[a][b]);
	return out;
}

LieAlgebraAction make_lie_action(size_t dim, std::vector<LieStructureEntry> const &entries,
                                 std::vector<GroupElement> rep, GradedVectorSpace const &space)
{
	LieAlgebraAction L;
	L.dim = dim;
	L.structure.assign(dim, std::vector<Vector>(dim, Vector(dim)));
	std::vector<std::vector<bool>> seen(dim, std::vector<bool>(dim, false));
	for (size_t n = 0; n < entries.size(); ++n)
	{
		auto const &e = entries[n];
		std::string where = "lie_algebra.structure[" + std::to_string(n) + "]";
		if (e.a >= dim || e.b >= dim)
			throw FormatError(where + ": index out of range");
		if (e.a >= e.b)
			throw FormatError(where + ": stored entries need a < b");
		if (seen[e.a][e.b])
			throw FormatError(where + ": duplicate entry");
		seen[e.a][e.b] = true;
		Vector v(dim);
		for (auto const &[c, s] : e.out)
		{
			if (c >= dim)
				throw FormatError(where + ": output index out of range");
			v[c] += s;
		}
		L.structure[e.a][e.b] = v;
		L.structure[e.b][e.a] = Scalar(-1) * v;
	}
	if (rep.size() != dim)
		throw FormatError("lie_algebra.rep: expected " + std::to_string(dim) + " generators");
	for (size_t a = 0; a < dim; ++a)
	{
		if (static_cast<int>(rep[a].size()) != space.max_degree() + 1)
			throw FormatError("lie_algebra.rep[" + std::to_string(a) + "]: wrong number of degrees");
		for (int p = 0; p <= space.max_degree(); ++p)
			if (rep[a][p].rows() != space.dim(p) || rep[a][p].cols() != space.dim(p))
				throw FormatError("lie_algebra.rep[" + std::to_string(a) + "][" + std::to_string(p) +
				                  "]: wrong shape");
	}
	L.rep = std::move(rep);
	return L;
}

namespace
{

std::string gen_name(size_t a) { return "X" + std::to_string(a); }

GroupElement commutator(GroupElement const &x, GroupElement const &y)
{
	GroupElement out;
	for (size_t p = 0; p < x.size(); ++p)
		out.push_back(x[p] * y[p] - y[p] * x[p]);
	return out;
}

} // namespace

ValidationReport check_homomorphism(LieAlgebraAction const &L, uint64_t seed, size_t samples)
{
	ValidationReport report;
	std::string witness;
	for (size_t a = 0; a < L.dim && witness.empty(); ++a)
		for (size_t b = a + 1; b < L.dim && witness.empty(); ++b)
		{
			auto lhs = L.rho(L.structure[a][b]);
			auto rhs = commutator(L.rep[a], L.rep[b]);
			if (lhs != rhs)
				witness = "rho([" + gen_name(a) + ", " + gen_name(b) + "]) != [rho(" + gen_name(a) + "), rho(" +
				          gen_name(b) + ")]";
		}
	if (witness.empty() && L.complexified)
	{
		ExactRandom rng(seed);
		for (size_t s = 0; s < samples && witness.empty(); ++s)
		{
			Vector z = rng.vector(L.dim);
			Vector w = rng.vector(L.dim);
			if (L.rho(L.lie_bracket(z, w)) != commutator(L.rho(z), L.rho(w)))
				witness = "random complex pair #" + std::to_string(s);
		}
	}
	report.add("homomorphism", witness.empty(), witness);
	return report;
}

ValidationReport validate_lie_action(LieAlgebraAction const &L, DGLA const &D)
{
	ValidationReport report;
	std::string witness;
	for (size_t a = 0; a < L.dim && witness.empty(); ++a)
			for (size_t b = 0; b < L.dim && witness.empty(); ++b)
				for (auto const &c : L.structure[a][b])
					if (!c.is_real() && witness.empty())
						witness = "[" + gen_name(a) + ", " + gen_name(b) + "] has a non-real structure constant";
	report.add("structure_constants_real", witness.empty(), witness);

	witness.clear();
	for (size_t a = 0; a < L.dim && witness.empty(); ++a)
		for (size_t b = 0; b < L.dim && witness.empty(); ++b)
			for (size_t c = 0; c < L.dim && witness.empty(); ++c)
			{
				auto x = unit_vector(L.dim, a), y = unit_vector(L.dim, b), z = unit_vector(L.dim, c);
				Vector sum = L.lie_bracket(x, L.lie_bracket(y, z)) + L.lie_bracket(y, L.lie_bracket(z, x));
				sum = sum + L.lie_bracket(z, L.lie_bracket(x, y));
				if (!is_zero(sum))
					witness = "(" + gen_name(a) + ", " + gen_name(b) + ", " + gen_name(c) + ")";
			}
	report.add("lie_jacobi", witness.empty(), witness);

	report.append(check_homomorphism(L));

	witness.clear();
	int top = D.max_degree();
	for (size_t a = 0; a < L.dim && witness.empty(); ++a)
		for (int p = 0; p < top && witness.empty(); ++p)
			if (!(L.rep[a][p + 1] * D.d(p) == D.d(p) * L.rep[a][p]))
				witness = "rho(" + gen_name(a) + ") in degree " + std::to_string(p);
	report.add("commutes_with_d", witness.empty(), witness);

	witness.clear();
	auto const &S = D.space();
	for (size_t a = 0; a < L.dim && witness.empty(); ++a)
	{
		auto const &r = L.rep[a];
		for (int p = 0; p <= top && witness.empty(); ++p)
			for (int q = p; p + q <= top && witness.empty(); ++q)
				for (size_t i = 0; i < D.dim(p) && witness.empty(); ++i)
					for (size_t j = 0; j < D.dim(q) && witness.empty(); ++j)
					{
						Vector lhs = r[p + q] * D.structure(p, i, q, j);
						Vector rhs = D.bracket(p, r[p].column(i), q, unit_vector(D.dim(q), j)) +
						             D.bracket(p, unit_vector(D.dim(p), i), q, r[q].column(j));
						if (!(lhs == rhs))
							witness = "rho(" + gen_name(a) + ") on (" + S.label(p, i) + ", " + S.label(q, j) + ")";
					}
	}
	report.add("derivation", witness.empty(), witness);
	return report;
}

LieAlgebraAction complexify_lie_action(LieAlgebraAction const &L)
{
	LieAlgebraAction C = L;
	C.complexified = true;
	return C;
}

ValidationReport check_derivation_equivariance(LieAlgebraAction const &L, DGLA const &D, HodgeData const &hodge)
{
	ValidationReport report;
	int top = D.max_degree();

	auto per_generator = [&](std::string const &name, auto &&holds) {
		std::string witness;
		for (size_t a = 0; a < L.dim && witness.empty(); ++a)
			for (int p = 0; p <= top && witness.empty(); ++p)
				if (!holds(L.rep[a], p))
					witness = "rho(" + gen_name(a) + ") in degree " + std::to_string(p);
		report.add(name, witness.empty(), witness);
	};

	per_generator("commutes_with_d", [&](GroupElement const &r, int p) {
		return p == top || r[p + 1] * D.d(p) == D.d(p) * r[p];
	});

	{
		auto valid = validate_lie_action(L, D);
		auto const *der = valid.find("derivation");
		report.add("derivation", der->passed, der->witness);
	}

	per_generator("skew_adjoint", [&](GroupElement const &r, int p) {
		auto const &M = hodge.metric[p];
		return (r[p].conj_transpose() * M + M * r[p]).is_zero();
	});
	per_generator("dstar_equivariant", [&](GroupElement const &r, int p) {
		return p == 0 || r[p - 1] * hodge.dstar[p] == hodge.dstar[p] * r[p];
	});
	per_generator("laplacian_equivariant",
	              [&](GroupElement const &r, int p) { return commutes(r[p], hodge.box[p]); });
	per_generator("green_equivariant", [&](GroupElement const &r, int p) { return commutes(r[p], hodge.G[p]); });
	per_generator("harmonic_equivariant",
	              [&](GroupElement const &r, int p) { return commutes(r[p], hodge.H[p]); });
	return report;
}

} // namespace kforge
