#include "kforge/cstruct.hpp"
#include "kforge/error.hpp"

namespace kforge
{

ComplexStructure::ComplexStructure(Matrix J) : J_(std::move(J))
{
	if (!J_.is_square() || J_.rows() % 2 != 0 || J_.rows() == 0)
		throw MathError("complex structure must be a square matrix of even size");
	for (size_t r = 0; r < J_.rows(); ++r)
		for (size_t c = 0; c < J_.cols(); ++c)
			if (!J_(r, c).is_real())
				throw MathError("complex structure must be a real matrix");
	if (!(J_ * J_ == Matrix::identity(J_.rows()) * Scalar(-1)))
		throw MathError("J^2 != -I");
}

ComplexStructure ComplexStructure::standard(size_t half_dim)
{
	Matrix J(2 * half_dim, 2 * half_dim);
	for (size_t k = 0; k < half_dim; ++k)
	{
		J(k, half_dim + k) = -1;
		J(half_dim + k, k) = 1;
	}
	return ComplexStructure(J);
}

namespace
{

Matrix independent_columns(Matrix const &a)
{
	auto ech = row_reduce(a);
	std::vector<Vector> cols;
	for (auto c : ech.pivot_cols)
		cols.push_back(a.column(c));
	return Matrix::from_columns(cols, a.rows());
}

Matrix hstack(Matrix const &a, Matrix const &b)
{
	Matrix out(a.rows(), a.cols() + b.cols());
	for (size_t r = 0; r < a.rows(); ++r)
	{
		for (size_t c = 0; c < a.cols(); ++c)
			out(r, c) = a(r, c);
		for (size_t c = 0; c < b.cols(); ++c)
			out(r, a.cols() + c) = b(r, c);
	}
	return out;
}

} // namespace

TypeDecomposition projectors(ComplexStructure const &J)
{
	size_t n = J.dim();
	Matrix I = Matrix::identity(n);
	Matrix iJ = J.matrix() * Scalar::i();
	Scalar half = Scalar::ratio(1, 2);

	TypeDecomposition t;
	t.pi10 = (I - iJ) * half;
	t.pi01 = (I + iJ) * half;
	t.basis10 = independent_columns(t.pi10);
	t.basis01 = independent_columns(t.pi01);
	auto c10 = solve_linear(t.basis10, t.pi10);
	auto c01 = solve_linear(t.basis01, t.pi01);
	if (!c10 || !c01 || t.basis10.cols() != J.half_dim() || t.basis01.cols() != J.half_dim())
		throw MathError("type decomposition failed");
	t.coords10 = std::move(*c10);
	t.coords01 = std::move(*c01);
	return t;
}

Matrix beltrami_of(ComplexStructure const &J, ComplexStructure const &Jp)
{
	if (J.dim() != Jp.dim())
		throw DimensionError("complex structures of different dimension");
	auto ref = projectors(J);
	auto other = projectors(Jp);
	Matrix x = ref.coords01 * other.basis01;
	auto x_inv = inverse(x);
	if (!x_inv)
		throw MathError("structures not comparable");
	Matrix y = ref.coords10 * other.basis01;
	return y * *x_inv;
}

ComplexStructure structure_of(ComplexStructure const &J, Matrix const &m)
{
	size_t h = J.half_dim();
	if (m.rows() != h || m.cols() != h)
		throw DimensionError("Beltrami map must be " + std::to_string(h) + "x" + std::to_string(h));
	auto t = projectors(J);
	Matrix graph = t.basis01 + t.basis10 * m;
	Matrix frame = hstack(graph.conj(), graph);
	auto frame_inv = inverse(frame);
	if (!frame_inv)
		throw MathError("graph degenerate");
	Vector eigen(2 * h);
	for (size_t k = 0; k < h; ++k)
	{
		eigen[k] = Scalar::i();
		eigen[h + k] = -Scalar::i();
	}
	return ComplexStructure(frame * Matrix::diagonal(eigen) * *frame_inv);
}

Lemma31Result lemma31_check(Matrix const &phi, ComplexStructure const &J, Matrix const &m, Matrix const &n)
{
	if (phi.rows() != J.dim() || phi.cols() != J.dim())
		throw DimensionError("phi must act on the same space as J");
	auto t = projectors(J);
	Lemma31Result r;
	r.h1 = phi * J.matrix() == J.matrix() * phi;

	// m and n extended to V^C through the (0,1) projection
	Matrix m_hat = t.basis10 * m * t.coords01;
	Matrix n_hat = t.basis10 * n * t.coords01;
	r.h2 = phi * m_hat * t.basis01 == n_hat * phi * t.basis01;

	auto Jm = structure_of(J, m);
	auto Jn = structure_of(J, n);
	r.conclusion = Jn.matrix() * phi == phi * Jm.matrix();
	return r;
}

Lemma31Instance random_lemma31_instance(ExactRandom &rng, size_t half_dim)
{
	size_t dim = 2 * half_dim;
	auto J0 = ComplexStructure::standard(half_dim);

	Matrix S, S_inv;
	for (;;)
	{
		S = rng.matrix(dim, dim, 2, 2);
		auto inv = inverse(S);
		if (inv)
		{
			S_inv = *inv;
			break;
		}
	}
	ComplexStructure J(S * J0.matrix() * S_inv);

	Matrix phi;
	for (;;)
	{
		Matrix P = rng.matrix(half_dim, half_dim, 3, 2);
		Matrix Q = rng.matrix(half_dim, half_dim, 3, 2);
		Matrix A(dim, dim);
		for (size_t r = 0; r < half_dim; ++r)
			for (size_t c = 0; c < half_dim; ++c)
			{
				A(r, c) = P(r, c);
				A(r, half_dim + c) = -Q(r, c);
				A(half_dim + r, c) = Q(r, c);
				A(half_dim + r, half_dim + c) = P(r, c);
			}
		phi = S * A * S_inv;
		if (inverse(phi))
			break;
	}

	auto t = projectors(J);
	Matrix phi01 = t.coords01 * phi * t.basis01;
	Matrix phi10 = t.coords10 * phi * t.basis10;
	Matrix phi01_inv = *inverse(phi01);

	for (;;)
	{
		Matrix m = rng.matrix(half_dim, half_dim, 1, 3, true);
		try
		{
			structure_of(J, m);
		}
		catch (MathError const &)
		{
			continue;
		}
		Matrix n = phi10 * m * phi01_inv;
		return {phi, J, m, n};
	}
}

} // namespace kforge
