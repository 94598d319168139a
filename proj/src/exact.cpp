#include "hsalg/exact.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <utility>

namespace hsalg {

// ---------------------------------------------------------------------------
// Rational
// ---------------------------------------------------------------------------

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw ParseError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty rational");
    auto parse_int = [&](const std::string& part) {
        std::string digits = part;
        if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
        bool ok = !digits.empty();
        for (std::size_t k = 0; k < digits.size(); ++k) {
            char c = digits[k];
            if (!(std::isdigit(static_cast<unsigned char>(c)) || (k == 0 && c == '-'))) ok = false;
        }
        if (!ok || digits == "-") throw ParseError("malformed rational '" + s + "'");
        return BigInt(digits, 10);
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_int(s));
    return make_rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

std::string to_string(const Rational& q) { return q.get_str(10); }

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    const BigInt& n = q.get_num();
    const BigInt& d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    BigInt rn = sqrt(n);
    BigInt rd = sqrt(d);
    return make_rational(rn, rd);
}

// ---------------------------------------------------------------------------
// Complex
// ---------------------------------------------------------------------------

Complex Complex::inverse() const {
    if (is_zero()) throw DomainError("division by zero in Q(i)");
    if (is_real()) return Complex(1 / re_);
    Rational n = norm();
    return {re_ / n, -im_ / n};
}

Complex& Complex::operator+=(const Complex& o) {
    if (sgn(o.re_) != 0) re_ += o.re_;
    if (sgn(o.im_) != 0) im_ += o.im_;
    return *this;
}

Complex& Complex::operator-=(const Complex& o) {
    if (sgn(o.re_) != 0) re_ -= o.re_;
    if (sgn(o.im_) != 0) im_ -= o.im_;
    return *this;
}

Complex& Complex::operator*=(const Complex& o) {
    if (is_real() && o.is_real()) {
        re_ *= o.re_;
        return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

Complex& Complex::operator/=(const Complex& o) { return *this *= o.inverse(); }

void Complex::add_product(const Complex& a, const Complex& b) {
    const bool ar = sgn(a.re_) != 0, ai = sgn(a.im_) != 0;
    const bool br = sgn(b.re_) != 0, bi = sgn(b.im_) != 0;
    if (ar && br) re_ += a.re_ * b.re_;
    if (ai && bi) re_ -= a.im_ * b.im_;
    if (ar && bi) im_ += a.re_ * b.im_;
    if (ai && br) im_ += a.im_ * b.re_;
}

std::string to_string(const Complex& z) {
    if (z.is_real()) return to_string(z.re());
    std::string out;
    if (sgn(z.re()) != 0) out = to_string(z.re());
    const Rational& im = z.im();
    if (im == 1) {
        out += out.empty() ? "i" : "+i";
    } else if (im == -1) {
        out += "-i";
    } else {
        std::string s = to_string(im);
        if (!out.empty() && sgn(im) > 0) out += "+";
        out += s + "i";
    }
    return out;
}

Complex parse_complex(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty complex number");
    if (s.back() != 'i') return Complex(parse_rational(s));
    s.pop_back();
    // Split at the last sign that is not the leading one.
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if (s[k] == '+' || s[k] == '-') {
            split = k;
            break;
        }
    }
    std::string re_part = split == std::string::npos ? "" : s.substr(0, split);
    std::string im_part = split == std::string::npos ? s : s.substr(split);
    Rational im;
    if (im_part.empty() || im_part == "+")
        im = 1;
    else if (im_part == "-")
        im = -1;
    else
        im = parse_rational(im_part);
    Rational re = re_part.empty() ? Rational(0) : parse_rational(re_part);
    return {re, im};
}

std::optional<Complex> gaussian_sqrt(const Complex& z) {
    if (z.is_real()) {
        if (sgn(z.re()) >= 0) {
            if (auto r = rational_sqrt(z.re())) return Complex(*r);
            return std::nullopt;
        }
        if (auto r = rational_sqrt(-z.re())) return Complex(Rational(0), *r);
        return std::nullopt;
    }
    // (p + qi)^2 = a + bi  =>  p^2 = (a + |z|) / 2, q = b / (2p)
    auto modulus = rational_sqrt(z.norm());
    if (!modulus) return std::nullopt;
    auto p = rational_sqrt((z.re() + *modulus) / 2);
    if (!p || sgn(*p) == 0) return std::nullopt;
    Rational q = z.im() / (2 * *p);
    return Complex(*p, q);
}

// ---------------------------------------------------------------------------
// Vectors
// ---------------------------------------------------------------------------

Vector zero_vector(std::size_t n) { return Vector(n); }

bool is_zero(std::span<const Complex> v) {
    return std::all_of(v.begin(), v.end(), [](const Complex& z) { return z.is_zero(); });
}

Vector scaled(std::span<const Complex> v, const Complex& s) {
    Vector out(v.size());
    if (s.is_zero()) return out;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) out[k] = v[k] * s;
    return out;
}

Vector add(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) throw ShapeError("vector length mismatch in add");
    Vector out(a.begin(), a.end());
    for (std::size_t k = 0; k < b.size(); ++k) out[k] += b[k];
    return out;
}

Vector subtract(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) throw ShapeError("vector length mismatch in subtract");
    Vector out(a.begin(), a.end());
    for (std::size_t k = 0; k < b.size(); ++k) out[k] -= b[k];
    return out;
}

Vector conjugated(std::span<const Complex> v) {
    Vector out;
    out.reserve(v.size());
    for (const auto& z : v) out.push_back(z.conj());
    return out;
}

// ---------------------------------------------------------------------------
// Matrix
// ---------------------------------------------------------------------------

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
        throw ShapeError("matrix entries length " + std::to_string(data_.size()) +
                         " does not match " + std::to_string(rows_) + "x" +
                         std::to_string(cols_));
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw ShapeError("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
    return m;
}

Matrix Matrix::from_rows(std::span<const Vector> rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw ShapeError("row length mismatch");
        std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + r * cols);
    }
    return m;
}

Matrix Matrix::from_columns(std::span<const Vector> cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw ShapeError("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

bool Matrix::is_zero() const { return hsalg::is_zero(data_); }

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::conj() const {
    Matrix out(*this);
    for (auto& z : out.data_) z = z.conj();
    return out;
}

Complex Matrix::trace() const {
    if (!is_square()) throw ShapeError("trace of non-square matrix");
    Complex t;
    for (std::size_t k = 0; k < rows_; ++k) t += (*this)(k, k);
    return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix shape mismatch in +");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix shape mismatch in -");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

Matrix& Matrix::operator*=(const Complex& s) {
    for (auto& z : data_)
        if (!z.is_zero()) z *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ShapeError("matrix shape mismatch in *");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Complex& x = a(r, k);
            if (x.is_zero()) continue;
            for (std::size_t c = 0; c < b.cols_; ++c) {
                const Complex& y = b(k, c);
                if (!y.is_zero()) out(r, c).add_product(x, y);
            }
        }
    return out;
}

Vector operator*(const Matrix& a, std::span<const Complex> v) {
    if (a.cols_ != v.size()) throw ShapeError("matrix-vector shape mismatch");
    Vector out(a.rows_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t c = 0; c < a.cols_; ++c) {
            const Complex& x = a(r, c);
            if (!x.is_zero() && !v[c].is_zero()) out[r].add_product(x, v[c]);
        }
    return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix kronecker(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex& x = a(i, j);
            if (x.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    const Complex& y = b(k, l);
                    if (!y.is_zero()) out(i * b.rows() + k, j * b.cols() + l) = x * y;
                }
        }
    return out;
}

Matrix vstack(std::span<const Matrix> parts) {
    if (parts.empty()) return {};
    std::size_t cols = parts.front().cols();
    std::size_t rows = 0;
    for (const auto& p : parts) {
        if (p.cols() != cols) throw ShapeError("vstack column mismatch");
        rows += p.rows();
    }
    std::vector<Complex> data;
    data.reserve(rows * cols);
    for (const auto& p : parts) data.insert(data.end(), p.entries().begin(), p.entries().end());
    return Matrix(rows, cols, std::move(data));
}

// ---------------------------------------------------------------------------
// Elimination
// ---------------------------------------------------------------------------

Echelon echelon(Matrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
        if (!m(r, c).is_one()) {
            Complex inv = m(r, c).inverse();
            for (std::size_t j = c; j < cols; ++j)
                if (!m(r, j).is_zero()) m(r, j) *= inv;
        }
        for (std::size_t k = 0; k < rows; ++k) {
            if (k == r || m(k, c).is_zero()) continue;
            Complex f = -m(k, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!m(r, j).is_zero()) m(k, j).add_product(f, m(r, j));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

Matrix rref(const Matrix& m) { return echelon(m).reduced; }

std::size_t rank(const Matrix& m) { return echelon(m).pivots.size(); }

std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.is_square()) throw ShapeError("inverse of non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    auto e = echelon(std::move(aug));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
    return inv;
}

std::optional<Vector> solve_linear(const Matrix& m, std::span<const Complex> b) {
    if (b.size() != m.rows()) throw ShapeError("right-hand side length mismatch");
    const std::size_t rows = m.rows(), cols = m.cols();
    Matrix aug(rows, cols + 1);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) aug(r, c) = m(r, c);
        aug(r, cols) = b[r];
    }
    auto e = echelon(std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == cols) return std::nullopt;
    Vector x(cols);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, cols);
    Vector check = m * x;
    for (std::size_t r = 0; r < rows; ++r)
        if (!(check[r] == b[r])) throw StructureError("solve_linear back-substitution check failed");
    return x;
}

// ---------------------------------------------------------------------------
// Subspace
// ---------------------------------------------------------------------------

Subspace Subspace::span(std::size_t ambient_dim, std::span<const Vector> vectors) {
    Subspace s(ambient_dim);
    if (vectors.empty()) return s;
    auto e = echelon(Matrix::from_rows(vectors, ambient_dim));
    s.pivots_ = std::move(e.pivots);
    for (std::size_t r = 0; r < s.pivots_.size(); ++r) {
        auto row = e.reduced.row(r);
        s.basis_.emplace_back(row.begin(), row.end());
    }
    return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
    Subspace s(ambient_dim);
    for (std::size_t k = 0; k < ambient_dim; ++k) {
        Vector v(ambient_dim);
        v[k] = 1;
        s.basis_.push_back(std::move(v));
        s.pivots_.push_back(k);
    }
    return s;
}

bool Subspace::contains(std::span<const Complex> v) const {
    if (v.size() != ambient_) throw ShapeError("vector length does not match subspace ambient");
    Vector w(v.begin(), v.end());
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        const Complex f = -w[pivots_[k]];
        if (f.is_zero()) continue;
        for (std::size_t j = pivots_[k]; j < ambient_; ++j)
            if (!basis_[k][j].is_zero()) w[j].add_product(f, basis_[k][j]);
    }
    return hsalg::is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
    return std::all_of(other.basis_.begin(), other.basis_.end(),
                       [&](const Vector& v) { return contains(v); });
}

std::optional<Vector> Subspace::coordinates(std::span<const Complex> v) const {
    if (v.size() != ambient_) throw ShapeError("vector length does not match subspace ambient");
    Vector coords(basis_.size());
    for (std::size_t k = 0; k < basis_.size(); ++k) coords[k] = v[pivots_[k]];
    Vector back = combine(coords);
    for (std::size_t j = 0; j < ambient_; ++j)
        if (!(back[j] == v[j])) return std::nullopt;
    return coords;
}

Vector Subspace::combine(std::span<const Complex> coords) const {
    if (coords.size() != basis_.size()) throw ShapeError("coordinate length does not match dim");
    Vector out(ambient_);
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        if (coords[k].is_zero()) continue;
        for (std::size_t j = 0; j < ambient_; ++j)
            if (!basis_[k][j].is_zero()) out[j].add_product(coords[k], basis_[k][j]);
    }
    return out;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw ShapeError("subspace ambient mismatch");
    std::vector<Vector> all = basis_;
    all.insert(all.end(), other.basis_.begin(), other.basis_.end());
    return span(ambient_, all);
}

Subspace Subspace::conjugated() const {
    std::vector<Vector> conj;
    conj.reserve(basis_.size());
    for (const auto& v : basis_) conj.push_back(hsalg::conjugated(v));
    return span(ambient_, conj);
}

Matrix Subspace::as_rows() const { return Matrix::from_rows(basis_, ambient_); }

Subspace kernel_basis(const Matrix& m) {
    auto e = echelon(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> vectors;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vector v(cols);
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            if (!e.reduced(r, f).is_zero()) v[e.pivots[r]] = -e.reduced(r, f);
        vectors.push_back(std::move(v));
    }
    return Subspace::span(cols, vectors);
}

// ---------------------------------------------------------------------------
// Spectra
// ---------------------------------------------------------------------------

Vector minimal_polynomial(const Matrix& m) {
    if (!m.is_square()) throw ShapeError("minimal polynomial of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Vector{Complex(1)};
    std::vector<Vector> powers;
    Matrix power = Matrix::identity(n);
    for (std::size_t k = 0; k <= n; ++k) {
        const Vector& flat = power.entries();
        if (!powers.empty()) {
            Matrix cols = Matrix::from_columns(powers, n * n);
            if (auto c = solve_linear(cols, flat)) {
                Vector poly;
                for (const auto& ck : *c) poly.push_back(-ck);
                poly.emplace_back(1);
                return poly;
            }
        }
        powers.push_back(flat);
        power = power * m;
    }
    throw StructureError("minimal polynomial exceeded matrix size");
}

namespace {

std::vector<BigInt> positive_divisors(BigInt n) {
    if (n < 0) n = -n;
    if (n == 0) return {};
    if (n > BigInt("1000000000000000000"))
        throw Unsupported("rational root search on coefficient too large to factor");
    std::vector<BigInt> small, large;
    for (BigInt d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

Rational evaluate(std::span<const Rational> coeffs, const Rational& x) {
    Rational acc = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
    return acc;
}

} // namespace

std::vector<Rational> rational_roots(std::span<const Rational> coeffs) {
    std::size_t len = coeffs.size();
    while (len > 0 && sgn(coeffs[len - 1]) == 0) --len;
    if (len <= 1) return {};
    std::span<const Rational> poly = coeffs.first(len);

    BigInt lcm_den = 1;
    for (const auto& c : poly) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<BigInt> ints;
    for (const auto& c : poly) ints.push_back(BigInt(c * lcm_den));

    std::set<Rational> roots;
    std::size_t low = 0;
    while (low < ints.size() && ints[low] == 0) ++low;
    if (low > 0) roots.insert(Rational(0));
    if (ints.size() - low >= 2) {
        auto num_divs = positive_divisors(ints[low]);
        auto den_divs = positive_divisors(ints.back());
        for (const auto& p : num_divs)
            for (const auto& q : den_divs)
                for (int s : {1, -1}) {
                    Rational cand = make_rational(s * p, q);
                    if (sgn(evaluate(poly, cand)) == 0) roots.insert(cand);
                }
    }
    return {roots.begin(), roots.end()};
}

std::optional<std::vector<Rational>> imaginary_spectrum(const Matrix& m) {
    Matrix w = m * Complex(Rational(0), Rational(-1));
    Vector poly = minimal_polynomial(w);
    std::vector<Rational> real;
    for (const auto& c : poly) {
        if (!c.is_real()) return std::nullopt;
        real.push_back(c.re());
    }
    auto roots = rational_roots(real);
    if (poly.size() == 1) return std::vector<Rational>{};
    if (roots.size() + 1 != poly.size()) return std::nullopt;
    return roots;
}

} // namespace hsalg
