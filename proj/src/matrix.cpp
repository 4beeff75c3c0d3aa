#include "kforge/matrix.hpp"
#include "kforge/error.hpp"

#include <string>

namespace kforge
{

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
{
	data_.reserve(rows_ * cols_);
	for (auto const &r : rows)
	{
		if (r.size() != cols_)
			throw DimensionError("ragged matrix initializer");
		data_.insert(data_.end(), r.begin(), r.end());
	}
}

Matrix Matrix::identity(size_t n)
{
	Matrix m(n, n);
	for (size_t k = 0; k < n; ++k)
		m(k, k) = 1;
	return m;
}

Matrix Matrix::diagonal(Vector const &diag)
{
	Matrix m(diag.size(), diag.size());
	for (size_t k = 0; k < diag.size(); ++k)
		m(k, k) = diag[k];
	return m;
}

Matrix Matrix::from_columns(std::vector<Vector> const &cols, size_t rows)
{
	Matrix m(rows, cols.size());
	for (size_t c = 0; c < cols.size(); ++c)
	{
		if (cols[c].size() != rows)
			throw DimensionError("column length " + std::to_string(cols[c].size()) +
			                     " does not match " + std::to_string(rows));
		for (size_t r = 0; r < rows; ++r)
			m(r, c) = cols[c][r];
	}
	return m;
}

bool Matrix::is_zero() const
{
	for (auto const &x : data_)
		if (!x.is_zero())
			return false;
	return true;
}

Vector Matrix::column(size_t c) const
{
	Vector v(rows_);
	for (size_t r = 0; r < rows_; ++r)
		v[r] = (*this)(r, c);
	return v;
}

Vector Matrix::row(size_t r) const
{
	return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

Matrix Matrix::conj_transpose() const
{
	Matrix t(cols_, rows_);
	for (size_t r = 0; r < rows_; ++r)
		for (size_t c = 0; c < cols_; ++c)
			t(c, r) = (*this)(r, c).conj();
	return t;
}

Matrix Matrix::transpose() const
{
	Matrix t(cols_, rows_);
	for (size_t r = 0; r < rows_; ++r)
		for (size_t c = 0; c < cols_; ++c)
			t(c, r) = (*this)(r, c);
	return t;
}

Matrix Matrix::conj() const
{
	Matrix t = *this;
	for (auto &x : t.data_)
		x = x.conj();
	return t;
}

Matrix &Matrix::operator+=(Matrix const &o)
{
	if (rows_ != o.rows_ || cols_ != o.cols_)
		throw DimensionError("matrix sum shape mismatch");
	for (size_t k = 0; k < data_.size(); ++k)
		data_[k] += o.data_[k];
	return *this;
}

Matrix &Matrix::operator-=(Matrix const &o)
{
	if (rows_ != o.rows_ || cols_ != o.cols_)
		throw DimensionError("matrix difference shape mismatch");
	for (size_t k = 0; k < data_.size(); ++k)
		data_[k] -= o.data_[k];
	return *this;
}

Matrix &Matrix::operator*=(Scalar const &s)
{
	for (auto &x : data_)
		x *= s;
	return *this;
}

Matrix operator*(Matrix const &a, Matrix const &b)
{
	if (a.cols_ != b.rows_)
		throw DimensionError("matrix product " + std::to_string(a.rows_) + "x" +
		                     std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
		                     std::to_string(b.cols_));
	Matrix p(a.rows_, b.cols_);
	for (size_t r = 0; r < a.rows_; ++r)
		for (size_t k = 0; k < a.cols_; ++k)
		{
			auto const &x = a(r, k);
			if (x.is_zero())
				continue;
			for (size_t c = 0; c < b.cols_; ++c)
				if (!b(k, c).is_zero())
					p(r, c) += x * b(k, c);
		}
	return p;
}

Vector operator*(Matrix const &a, Vector const &v)
{
	if (a.cols_ != v.size())
		throw DimensionError("matrix-vector product: " + std::to_string(a.cols_) +
		                     " columns vs vector of length " + std::to_string(v.size()));
	Vector out(a.rows_);
	for (size_t k = 0; k < a.cols_; ++k)
	{
		if (v[k].is_zero())
			continue;
		for (size_t r = 0; r < a.rows_; ++r)
			if (!a(r, k).is_zero())
				out[r] += a(r, k) * v[k];
	}
	return out;
}

Vector zero_vector(size_t n) { return Vector(n); }

Vector unit_vector(size_t n, size_t k)
{
	Vector v(n);
	v.at(k) = 1;
	return v;
}

bool is_zero(std::span<Scalar const> v)
{
	for (auto const &x : v)
		if (!x.is_zero())
			return false;
	return true;
}

Vector operator+(Vector a, Vector const &b)
{
	if (a.size() != b.size())
		throw DimensionError("vector sum length mismatch");
	for (size_t k = 0; k < a.size(); ++k)
		a[k] += b[k];
	return a;
}

Vector operator-(Vector a, Vector const &b)
{
	if (a.size() != b.size())
		throw DimensionError("vector difference length mismatch");
	for (size_t k = 0; k < a.size(); ++k)
		a[k] -= b[k];
	return a;
}

Vector operator*(Scalar const &s, Vector v)
{
	for (auto &x : v)
		x *= s;
	return v;
}

Vector &add_scaled(Vector &acc, Scalar const &s, Vector const &v)
{
	if (acc.size() != v.size())
		throw DimensionError("add_scaled length mismatch");
	if (s.is_zero())
		return acc;
	for (size_t k = 0; k < v.size(); ++k)
		if (!v[k].is_zero())
			acc[k] += s * v[k];
	return acc;
}

Scalar inner(Vector const &u, Matrix const &metric, Vector const &v)
{
	Vector mv = metric * v;
	if (u.size() != mv.size())
		throw DimensionError("inner product length mismatch");
	Scalar s;
	for (size_t k = 0; k < u.size(); ++k)
		s += u[k].conj() * mv[k];
	return s;
}

EchelonForm row_reduce(Matrix a)
{
	EchelonForm out;
	size_t pivot_row = 0;
	for (size_t c = 0; c < a.cols() && pivot_row < a.rows(); ++c)
	{
		size_t r = pivot_row;
		while (r < a.rows() && a(r, c).is_zero())
			++r;
		if (r == a.rows())
			continue;
		if (r != pivot_row)
			for (size_t k = 0; k < a.cols(); ++k)
				std::swap(a(r, k), a(pivot_row, k));

		Scalar inv = Scalar(1) / a(pivot_row, c);
		for (size_t k = c; k < a.cols(); ++k)
			a(pivot_row, k) *= inv;

		for (size_t other = 0; other < a.rows(); ++other)
		{
			if (other == pivot_row || a(other, c).is_zero())
				continue;
			Scalar f = a(other, c);
			for (size_t k = c; k < a.cols(); ++k)
				if (!a(pivot_row, k).is_zero())
					a(other, k) -= f * a(pivot_row, k);
		}
		out.pivot_cols.push_back(c);
		++pivot_row;
	}
	out.reduced = std::move(a);
	return out;
}

size_t rank(Matrix const &a) { return row_reduce(a).rank(); }

std::optional<Vector> solve_linear(Matrix const &a, Vector const &b)
{
	if (a.rows() != b.size())
		throw DimensionError("solve_linear: " + std::to_string(a.rows()) +
		                     " equations vs right-hand side of length " + std::to_string(b.size()));
	Matrix aug(a.rows(), a.cols() + 1);
	for (size_t r = 0; r < a.rows(); ++r)
	{
		for (size_t c = 0; c < a.cols(); ++c)
			aug(r, c) = a(r, c);
		aug(r, a.cols()) = b[r];
	}
	auto ech = row_reduce(std::move(aug));
	if (!ech.pivot_cols.empty() && ech.pivot_cols.back() == a.cols())
		return std::nullopt;

	Vector x(a.cols());
	for (size_t k = 0; k < ech.rank(); ++k)
		x[ech.pivot_cols[k]] = ech.reduced(k, a.cols());
	return x;
}

std::optional<Matrix> solve_linear(Matrix const &a, Matrix const &b)
{
	if (a.rows() != b.rows())
		throw DimensionError("solve_linear: row count mismatch");
	Matrix x(a.cols(), b.cols());
	for (size_t c = 0; c < b.cols(); ++c)
	{
		auto col = solve_linear(a, b.column(c));
		if (!col)
			return std::nullopt;
		for (size_t r = 0; r < a.cols(); ++r)
			x(r, c) = (*col)[r];
	}
	return x;
}

std::vector<Vector> kernel_basis(Matrix const &a)
{
	auto ech = row_reduce(a);
	std::vector<bool> is_pivot(a.cols(), false);
	for (auto c : ech.pivot_cols)
		is_pivot[c] = true;

	std::vector<Vector> basis;
	for (size_t free = 0; free < a.cols(); ++free)
	{
		if (is_pivot[free])
			continue;
		Vector v(a.cols());
		v[free] = 1;
		for (size_t k = 0; k < ech.rank(); ++k)
			v[ech.pivot_cols[k]] = -ech.reduced(k, free);
		basis.push_back(std::move(v));
	}
	return basis;
}

std::optional<Matrix> inverse(Matrix const &a)
{
	if (!a.is_square())
		throw DimensionError("inverse of non-square matrix");
	size_t n = a.rows();
	Matrix aug(n, 2 * n);
	for (size_t r = 0; r < n; ++r)
	{
		for (size_t c = 0; c < n; ++c)
			aug(r, c) = a(r, c);
		aug(r, n + r) = 1;
	}
	auto ech = row_reduce(std::move(aug));
	if (ech.rank() < n || (n > 0 && ech.pivot_cols[n - 1] != n - 1))
		return std::nullopt;
	Matrix inv(n, n);
	for (size_t r = 0; r < n; ++r)
		for (size_t c = 0; c < n; ++c)
			inv(r, c) = ech.reduced(r, n + c);
	return inv;
}

Scalar determinant(Matrix const &a)
{
	if (!a.is_square())
		throw DimensionError("determinant of non-square matrix");
	Matrix m = a;
	size_t n = m.rows();
	Scalar det = 1;
	for (size_t c = 0; c < n; ++c)
	{
		size_t r = c;
		while (r < n && m(r, c).is_zero())
			++r;
		if (r == n)
			return Scalar();
		if (r != c)
		{
			for (size_t k = 0; k < n; ++k)
				std::swap(m(r, k), m(c, k));
			det = -det;
		}
		det *= m(c, c);
		Scalar inv = Scalar(1) / m(c, c);
		for (size_t below = c + 1; below < n; ++below)
		{
			if (m(below, c).is_zero())
				continue;
			Scalar f = m(below, c) * inv;
			for (size_t k = c; k < n; ++k)
				m(below, k) -= f * m(c, k);
		}
	}
	return det;
}

Matrix conj_transpose(Matrix const &a) { return a.conj_transpose(); }

bool is_hermitian(Matrix const &a) { return a.is_square() && a == a.conj_transpose(); }

bool is_positive_definite(Matrix const &m)
{
	if (!m.is_square())
		throw DimensionError("positive-definiteness test needs a square matrix");
	if (!is_hermitian(m))
		return false;
	for (size_t k = 1; k <= m.rows(); ++k)
	{
		Matrix minor(k, k);
		for (size_t r = 0; r < k; ++r)
			for (size_t c = 0; c < k; ++c)
				minor(r, c) = m(r, c);
		Scalar d = determinant(minor);
		if (!d.is_real() || sgn(d.re()) <= 0)
			return false;
	}
	return true;
}

} // namespace kforge
