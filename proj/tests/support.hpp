// Shared test fixtures: catalog list, an η sampler and independent oracles.
// Oracles work on explicit matrices and never touch structure constants.
#pragma once

#include <functional>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "hsalg/json_io.hpp"
#include "hsalg/moduli.hpp"

namespace testing {

using namespace hsalg;

inline std::vector<PairSpec> acceptance_catalog() {
    std::vector<PairSpec> out;
    for (int n = 2; n <= 5; ++n)
        for (int p = 1; p < n; ++p) out.push_back({Family::Grassmannian, {p, n - p}});
    for (int n = 3; n <= 5; ++n) out.push_back({Family::Quadric, {n}});
    for (int n = 1; n <= 3; ++n) out.push_back({Family::SpUn, {n}});
    for (int n = 2; n <= 4; ++n) out.push_back({Family::So2nUn, {n}});
    return out;
}

inline std::shared_ptr<const HermitianPair> shared_pair(const PairSpec& spec) {
    static std::map<std::string, std::shared_ptr<const HermitianPair>> cache;
    auto& slot = cache[spec.id()];
    if (!slot) slot = std::make_shared<const HermitianPair>(build_pair(spec));
    return slot;
}

inline std::shared_ptr<const TargetAlgebra> shared_gl(std::size_t n) {
    static std::map<std::size_t, std::shared_ptr<const TargetAlgebra>> cache;
    auto& slot = cache[n];
    if (!slot) slot = std::make_shared<const TargetAlgebra>(TargetAlgebra::gl(n));
    return slot;
}

inline Complex gi(long re, long im = 0) { return Complex(Rational(re), Rational(im)); }

inline Complex random_gaussian(std::mt19937_64& rng, int range = 3, bool imaginary = true) {
    std::uniform_int_distribution<int> d(-range, range);
    std::uniform_int_distribution<int> den(1, 3);
    Rational re = make_rational(d(rng), den(rng));
    Rational im = imaginary ? make_rational(d(rng), den(rng)) : Rational(0);
    return Complex(re, im);
}

inline Vector random_vector(std::mt19937_64& rng, std::size_t n, int range = 3) {
    Vector v(n);
    for (auto& c : v) c = random_gaussian(rng, range);
    return v;
}

inline Matrix random_invertible(std::mt19937_64& rng, std::size_t n) {
    while (true) {
        Matrix m(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) m(r, c) = random_gaussian(rng, 2);
        if (inverse(m)) return m;
    }
}

/// gl(n) coordinates are the row-major entries.
inline Vector gl_coords(const Matrix& m) { return m.entries(); }

inline Matrix gl_matrix(const Vector& v, std::size_t n) { return Matrix(n, n, v); }

/// A representation of k given on the defining matrices of g.
struct Rep {
    std::string name;
    std::size_t dim;
    std::function<Matrix(const Matrix&)> act;
};

inline Matrix block(const Matrix& m, std::size_t r0, std::size_t c0, std::size_t n) {
    Matrix out(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out(r, c) = m(r0 + r, c0 + c);
    return out;
}

/// Elementary representations of k for each family, built from block
/// structure alone.
inline std::vector<Rep> base_reps(const HermitianPair& pair) {
    const auto& s = pair.spec;
    const std::size_t n = pair.g.ambient_size();
    std::vector<Rep> reps;
    reps.push_back({"full", n, [](const Matrix& x) { return x; }});
    switch (s.family) {
    case Family::Grassmannian: {
        const std::size_t p = s.params[0], q = s.params[1];
        reps.push_back({"upper", p, [=](const Matrix& x) { return block(x, 0, 0, p); }});
        reps.push_back({"lower", q, [=](const Matrix& x) { return block(x, p, p, q); }});
        break;
    }
    case Family::Quadric: {
        const std::size_t m = s.params[0];
        reps.push_back({"so(n)", m, [=](const Matrix& x) { return block(x, 0, 0, m); }});
        reps.push_back({"so(2)", 2, [=](const Matrix& x) { return block(x, m, m, 2); }});
        reps.push_back({"char", 1, [=](const Matrix& x) {
                            Matrix c(1, 1);
                            c(0, 0) = x(m + 1, m) * Complex::i();
                            return c;
                        }});
        break;
    }
    case Family::SpUn: {
        const std::size_t m = s.params[0];
        reps.push_back({"A", m, [=](const Matrix& x) { return block(x, 0, 0, m); }});
        reps.push_back({"Abar", m, [=](const Matrix& x) { return block(x, m, m, m); }});
        break;
    }
    case Family::So2nUn: {
        const std::size_t m = s.params[0];
        reps.push_back({"A+iB", m, [=](const Matrix& x) {
                            return block(x, 0, 0, m) + block(x, m, 0, m) * Complex::i();
                        }});
        reps.push_back({"A-iB", m, [=](const Matrix& x) {
                            return block(x, 0, 0, m) - block(x, m, 0, m) * Complex::i();
                        }});
        break;
    }
    }
    return reps;
}

inline Rep dual(const Rep& r) {
    return {r.name + "*", r.dim, [f = r.act](const Matrix& x) { return f(x).transpose() * Complex(-1); }};
}

inline Rep conjugate(const Rep& r) {
    return {"conj(" + r.name + ")", r.dim, [f = r.act](const Matrix& x) { return f(x).conj(); }};
}

inline Rep trace_char(const Rep& r, long mult) {
    return {"tr(" + r.name + ")x" + std::to_string(mult), 1, [f = r.act, mult](const Matrix& x) {
                Matrix c(1, 1);
                c(0, 0) = f(x).trace() * Complex(mult);
                return c;
            }};
}

inline Rep trivial(std::size_t dim) {
    return {"triv" + std::to_string(dim), dim, [dim](const Matrix&) { return Matrix(dim, dim); }};
}

inline Rep direct_sum(const Rep& a, const Rep& b) {
    const std::size_t n = a.dim + b.dim;
    return {a.name + "+" + b.name, n, [fa = a.act, fb = b.act, da = a.dim, n](const Matrix& x) {
                Matrix m(n, n);
                Matrix ma = fa(x), mb = fb(x);
                for (std::size_t r = 0; r < ma.rows(); ++r)
                    for (std::size_t c = 0; c < ma.cols(); ++c) m(r, c) = ma(r, c);
                for (std::size_t r = 0; r < mb.rows(); ++r)
                    for (std::size_t c = 0; c < mb.cols(); ++c) m(da + r, da + c) = mb(r, c);
                return m;
            }};
}

inline Rep conjugated_by(const Rep& r, const Matrix& p) {
    Matrix pinv = *inverse(p);
    return {r.name + "^P", r.dim, [f = r.act, p, pinv](const Matrix& x) { return pinv * f(x) * p; }};
}

inline std::vector<LieElement> images_of(const HermitianPair& pair, const Rep& r) {
    std::vector<LieElement> out;
    for (std::size_t j = 0; j < pair.k.dim(); ++j) out.push_back(gl_coords(r.act(pair.g.to_matrix(pair.k[j]))));
    return out;
}

inline std::shared_ptr<const BundleContext> context_for(std::shared_ptr<const HermitianPair> pair,
                                                        const Rep& r) {
    auto images = images_of(*pair, r);
    return std::make_shared<const BundleContext>(pair, shared_gl(r.dim), std::move(images));
}

/// Random representation of dimension at most max_dim assembled from the
/// elementary pieces, their duals, conjugates, trace characters, trivial
/// padding and a random change of basis.
inline Rep sample_rep(const HermitianPair& pair, std::mt19937_64& rng, std::size_t max_dim = 4) {
    std::vector<Rep> pool;
    for (const auto& r : base_reps(pair)) {
        if (r.dim > max_dim) continue;
        pool.push_back(r);
        pool.push_back(dual(r));
        pool.push_back(conjugate(r));
        pool.push_back(trace_char(r, 1));
        pool.push_back(trace_char(r, -2));
    }
    pool.push_back(trivial(1));
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    Rep acc = pool[pick(rng)];
    std::uniform_int_distribution<int> more(0, 2);
    for (int tries = 0; tries < 6 && more(rng) > 0; ++tries) {
        const Rep& next = pool[pick(rng)];
        if (acc.dim + next.dim <= max_dim) acc = direct_sum(acc, next);
    }
    if (acc.dim > 1 && more(rng) > 0) acc = conjugated_by(acc, random_invertible(rng, acc.dim));
    return acc;
}

/// Direct sum of two different elementary representations (each possibly
/// dualized or conjugated) under a random change of basis. Mixed sums are
/// where invariants show up for small targets.
inline Rep sample_sum_rep(const HermitianPair& pair, std::mt19937_64& rng, std::size_t max_dim = 4) {
    auto base = base_reps(pair);
    std::vector<std::pair<std::size_t, std::size_t>> feasible;
    for (std::size_t a = 0; a < base.size(); ++a)
        for (std::size_t b = a + 1; b < base.size(); ++b)
            if (base[a].dim + base[b].dim <= max_dim) feasible.emplace_back(a, b);
    if (feasible.empty()) return sample_rep(pair, rng, max_dim);
    auto [a, b] = feasible[std::uniform_int_distribution<std::size_t>(0, feasible.size() - 1)(rng)];
    std::uniform_int_distribution<int> variant(0, 2);
    auto vary = [&](const Rep& r) {
        switch (variant(rng)) {
        case 1: return dual(r);
        case 2: return conjugate(r);
        default: return r;
        }
    };
    Rep sum = direct_sum(vary(base[a]), vary(base[b]));
    return conjugated_by(sum, random_invertible(rng, sum.dim));
}

/// The CP¹ context with dη(H0) = diag(i, -i) on gl(2).
inline std::shared_ptr<const BundleContext> cp1_context(const Complex& scale = Complex(1)) {
    auto pair = shared_pair({Family::Grassmannian, {1, 1}});
    Matrix d{{Complex::i() * scale, 0}, {0, Complex::i() * scale * Complex(-1)}};
    return std::make_shared<const BundleContext>(pair, shared_gl(2), std::vector<LieElement>{gl_coords(d)});
}

// ---------------------------------------------------------------------------
// Brute-force m-map oracle over gl(n) targets: a tensor is expanded into
// matrices A_j = Σ_i a_ij E_i, brackets are matrix commutators.

inline std::vector<Matrix> h_slices(const InvariantElement& e, std::size_t n) {
    std::vector<Matrix> out;
    for (std::size_t j = 0; j < e.dim_p; ++j) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < e.dim_h; ++i) m(i / n, i % n) = e.coords[i * e.dim_p + j];
        out.push_back(std::move(m));
    }
    return out;
}

/// Codomain h ⊗ Λ²p with pairs enumerated (0,1), (0,2), ..., (1,2), ...
inline Vector wedge_oracle(const InvariantElement& a, const InvariantElement& b, std::size_t n) {
    auto as = h_slices(a, n), bs = h_slices(b, n);
    const std::size_t dp = a.dim_p;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = 0; j < dp; ++j)
        for (std::size_t l = j + 1; l < dp; ++l) pairs.emplace_back(j, l);
    Vector out(n * n * pairs.size());
    for (std::size_t q = 0; q < pairs.size(); ++q) {
        auto [j, l] = pairs[q];
        Matrix v = commutator(as[j], bs[l]) - commutator(as[l], bs[j]);
        for (std::size_t m = 0; m < n * n; ++m) out[m * pairs.size() + q] = v.entries()[m];
    }
    return out;
}

inline Vector mixed_oracle(const InvariantElement& a, const InvariantElement& b, std::size_t n) {
    auto as = h_slices(a, n), bs = h_slices(b, n);
    Vector out(n * n * a.dim_p * b.dim_p);
    for (std::size_t j = 0; j < a.dim_p; ++j)
        for (std::size_t l = 0; l < b.dim_p; ++l) {
            Matrix v = commutator(as[j], bs[l]);
            for (std::size_t m = 0; m < n * n; ++m) out[m * a.dim_p * b.dim_p + j * b.dim_p + l] = v.entries()[m];
        }
    return out;
}

// ---------------------------------------------------------------------------
// Matrix-level structural oracle for a pair: ad via matrix commutators and
// linear solves in the defining representation.

struct MatrixOracle {
    const HermitianPair& pair;
    std::vector<Vector> flat_basis;
    Matrix basis_columns;

    explicit MatrixOracle(const HermitianPair& p) : pair(p) {
        const std::size_t n = p.g.ambient_size();
        for (const auto& b : p.g.basis()) flat_basis.push_back(b.entries());
        basis_columns = Matrix::from_columns(flat_basis, n * n);
    }

    Matrix mat(const Vector& x) const {
        const std::size_t n = pair.g.ambient_size();
        Matrix m(n, n);
        for (std::size_t k = 0; k < x.size(); ++k)
            if (!x[k].is_zero()) m += pair.g.basis()[k] * x[k];
        return m;
    }

    std::optional<Vector> coords(const Matrix& m) const { return solve_linear(basis_columns, m.entries()); }

    Matrix ad(const Vector& x) const {
        const std::size_t d = pair.g.dim();
        Matrix out(d, d);
        Matrix mx = mat(x);
        for (std::size_t j = 0; j < d; ++j) {
            auto c = coords(commutator(mx, pair.g.basis()[j]));
            if (!c) throw std::runtime_error("matrix oracle: bracket left g");
            for (std::size_t k = 0; k < d; ++k) out(k, j) = (*c)[k];
        }
        return out;
    }

    Complex killing(const Matrix& adx, const Matrix& ady) const { return (adx * ady).trace(); }
};

/// Closed-form complex dimension, restated independently of the library.
inline std::size_t closed_form_dim(const PairSpec& s) {
    const std::size_t a = s.params[0];
    switch (s.family) {
    case Family::Grassmannian: return a * static_cast<std::size_t>(s.params[1]);
    case Family::Quadric: return a;
    case Family::SpUn: return a * (a + 1) / 2;
    case Family::So2nUn: return a * (a - 1) / 2;
    }
    return 0;
}

/// Every point of {-2..2}^n.
inline std::vector<Vector> grid_points(std::size_t n) {
    std::vector<Vector> out{Vector{}};
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<Vector> next;
        for (const auto& v : out)
            for (long t = -2; t <= 2; ++t) {
                Vector w = v;
                w.push_back(Complex(t));
                next.push_back(std::move(w));
            }
        out = std::move(next);
    }
    return out;
}

/// Serializes, parses back and returns the Document.
inline Document reparse(const json& j, const std::string& name = "roundtrip.json") {
    return parse_document(name, dump(j));
}

} // namespace testing
