#pragma once

// Exact arithmetic over the Gaussian rationals Q(i) and dense linear algebra
// on top of it. Nothing in here ever rounds.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hsalg/errors.hpp"

namespace hsalg {

/// Arbitrary-precision rational. GMP keeps every result in lowest terms with
/// a positive denominator; values built from raw parts go through
/// make_rational, which canonicalizes.
using Rational = mpq_class;
using BigInt = mpz_class;

Rational make_rational(const BigInt& num, const BigInt& den);
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// Exact square root if q is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& q);

class Complex {
public:
    Complex() = default;
    Complex(Rational re, Rational im = Rational(0))
        : re_(std::move(re)), im_(std::move(im)) {}
    Complex(long re) : re_(re) {}
    Complex(int re) : re_(re) {}

    static Complex i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

    Complex conj() const { return {re_, -im_}; }
    /// re^2 + im^2
    Rational norm() const { return re_ * re_ + im_ * im_; }
    Complex inverse() const;

    Complex& operator+=(const Complex& o);
    Complex& operator-=(const Complex& o);
    Complex& operator*=(const Complex& o);
    Complex& operator/=(const Complex& o);

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
    friend Complex operator-(const Complex& a) { return {-a.re_, -a.im_}; }
    friend bool operator==(const Complex& a, const Complex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// Adds a*b into this without building the temporary product.
    void add_product(const Complex& a, const Complex& b);

private:
    Rational re_;
    Rational im_;
};

/// Human-readable form such as "3/2-i" or "0". parse_complex accepts the same
/// notation.
std::string to_string(const Complex& z);
Complex parse_complex(std::string_view text);

/// Square root inside Q(i), when one exists.
std::optional<Complex> gaussian_sqrt(const Complex& z);

using Vector = std::vector<Complex>;

Vector zero_vector(std::size_t n);
bool is_zero(std::span<const Complex> v);
Vector scaled(std::span<const Complex> v, const Complex& s);
Vector add(std::span<const Complex> a, std::span<const Complex> b);
Vector subtract(std::span<const Complex> a, std::span<const Complex> b);
Vector conjugated(std::span<const Complex> v);

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    Matrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(std::span<const Vector> rows, std::size_t cols);
    static Matrix from_columns(std::span<const Vector> cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    std::span<const Complex> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }
    Vector column(std::size_t c) const;
    const std::vector<Complex>& entries() const { return data_; }

    bool is_zero() const;
    Matrix transpose() const;
    Matrix conj() const;
    Complex trace() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Complex& s);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Complex& s) { return a *= s; }
    friend Matrix operator*(const Complex& s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, std::span<const Complex> v);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

/// ab - ba
Matrix commutator(const Matrix& a, const Matrix& b);

/// Kronecker product a ⊗ b.
Matrix kronecker(const Matrix& a, const Matrix& b);

/// Stacks the rows of `parts` on top of each other.
Matrix vstack(std::span<const Matrix> parts);

struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form with monic pivots, plus pivot columns.
Echelon echelon(Matrix m);
Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);

/// One exact solution of m·x = b, or nullopt when inconsistent.
std::optional<Vector> solve_linear(const Matrix& m, std::span<const Complex> b);

/// A subspace of Q(i)^n held as its reduced row-echelon basis. Equal
/// subspaces have identical representations.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

    static Subspace span(std::size_t ambient_dim, std::span<const Vector> vectors);
    static Subspace full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    bool empty() const { return basis_.empty(); }
    const std::vector<Vector>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    const Vector& operator[](std::size_t k) const { return basis_[k]; }

    bool contains(std::span<const Complex> v) const;
    bool contains(const Subspace& other) const;
    /// Coordinates of v in basis(); nullopt if v is outside the subspace.
    std::optional<Vector> coordinates(std::span<const Complex> v) const;
    Vector combine(std::span<const Complex> coords) const;

    Subspace sum(const Subspace& other) const;
    Subspace conjugated() const;
    Matrix as_rows() const;

    friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
    std::size_t ambient_ = 0;
    std::vector<Vector> basis_;
    std::vector<std::size_t> pivots_;
};

/// {v : m·v = 0}
Subspace kernel_basis(const Matrix& m);

/// Monic minimal polynomial of a square matrix, coefficients from the constant
/// term upward.
Vector minimal_polynomial(const Matrix& m);

/// Distinct rational roots of a polynomial with rational coefficients (constant
/// term first), ascending.
std::vector<Rational> rational_roots(std::span<const Rational> coeffs);

/// If m is diagonalizable with every eigenvalue of the form i·mu, mu rational,
/// returns the distinct mu in ascending order; otherwise nullopt.
std::optional<std::vector<Rational>> imaginary_spectrum(const Matrix& m);

} // namespace hsalg
