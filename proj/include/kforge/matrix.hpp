#pragma once

#include "kforge/scalar.hpp"

#include <optional>
#include <span>
#include <vector>

namespace kforge
{

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over the Gaussian rationals. Zero-sized shapes are valid.
class Matrix
{
  public:
	Matrix() = default;
	Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
	/// Row-major initializer; throws DimensionError on ragged input.
	Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

	static Matrix identity(size_t n);
	static Matrix diagonal(Vector const &diag);
	/// Columns must share one length; `rows` fixes the height when `cols` is empty.
	static Matrix from_columns(std::vector<Vector> const &cols, size_t rows);

	size_t rows() const { return rows_; }
	size_t cols() const { return cols_; }
	bool is_square() const { return rows_ == cols_; }
	bool is_zero() const;

	Scalar &operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
	Scalar const &operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

	Vector column(size_t c) const;
	Vector row(size_t r) const;

	Matrix conj_transpose() const;
	Matrix transpose() const;
	Matrix conj() const;

	Matrix &operator+=(Matrix const &o);
	Matrix &operator-=(Matrix const &o);
	Matrix &operator*=(Scalar const &s);

	friend Matrix operator+(Matrix a, Matrix const &b) { return a += b; }
	friend Matrix operator-(Matrix a, Matrix const &b) { return a -= b; }
	friend Matrix operator*(Matrix a, Scalar const &s) { return a *= s; }
	friend Matrix operator*(Scalar const &s, Matrix a) { return a *= s; }
	friend Matrix operator*(Matrix const &a, Matrix const &b);
	friend Vector operator*(Matrix const &a, Vector const &v);

	friend bool operator==(Matrix const &a, Matrix const &b)
	{
		return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
	}

  private:
	size_t rows_ = 0;
	size_t cols_ = 0;
	std::vector<Scalar> data_;
};

// vector helpers
Vector zero_vector(size_t n);
Vector unit_vector(size_t n, size_t k);
bool is_zero(std::span<Scalar const> v);
Vector operator+(Vector a, Vector const &b);
Vector operator-(Vector a, Vector const &b);
Vector operator*(Scalar const &s, Vector v);
Vector &add_scaled(Vector &acc, Scalar const &s, Vector const &v);
/// Sesquilinear pairing u^dagger * M * v.
Scalar inner(Vector const &u, Matrix const &metric, Vector const &v);

/// Row echelon data from exact Gauss-Jordan elimination.
struct EchelonForm
{
	Matrix reduced;
	std::vector<size_t> pivot_cols;
	size_t rank() const { return pivot_cols.size(); }
};

/// Reduced row echelon form, choosing the first nonzero entry in column order as pivot.
EchelonForm row_reduce(Matrix a);
size_t rank(Matrix const &a);

/// Some x with a*x == b, or nullopt when b is outside the image. Throws DimensionError.
std::optional<Vector> solve_linear(Matrix const &a, Vector const &b);
/// Column-wise solve of a*X == B; nullopt when any column has no solution.
std::optional<Matrix> solve_linear(Matrix const &a, Matrix const &b);
/// Independent columns spanning ker a, one per free column of the echelon form.
std::vector<Vector> kernel_basis(Matrix const &a);
std::optional<Matrix> inverse(Matrix const &a);
/// Throws DimensionError for non-square input.
Scalar determinant(Matrix const &a);

Matrix conj_transpose(Matrix const &a);
bool is_hermitian(Matrix const &a);
/// Hermitian with every leading principal minor real and positive. Throws DimensionError if non-square.
bool is_positive_definite(Matrix const &m);

} // namespace kforge
