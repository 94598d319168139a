#include "hsalg/hss_catalog.hpp"

#include <charconv>
#include <sstream>
#include <utility>

namespace hsalg {

std::string_view family_name(Family f) {
    switch (f) {
    case Family::Grassmannian: return "grassmannian";
    case Family::Quadric: return "quadric";
    case Family::SpUn: return "sp_un";
    case Family::So2nUn: return "so2n_un";
    }
    return "unknown";
}

Family parse_family(std::string_view name) {
    if (name == "grassmannian") return Family::Grassmannian;
    if (name == "quadric") return Family::Quadric;
    if (name == "sp_un") return Family::SpUn;
    if (name == "so2n_un") return Family::So2nUn;
    throw ParameterError("unknown family '" + std::string(name) +
                         "' (expected grassmannian, quadric, sp_un or so2n_un)");
}

std::string PairSpec::id() const {
    std::string out(family_name(family));
    out += "(";
    for (std::size_t k = 0; k < params.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(params[k]);
    }
    return out + ")";
}

void PairSpec::validate() const {
    const std::size_t want = family == Family::Grassmannian ? 2 : 1;
    if (params.size() != want)
        throw ParameterError(std::string(family_name(family)) + " takes " + std::to_string(want) +
                             " parameter(s), got " + std::to_string(params.size()));
    auto need = [&](bool ok, const char* rule) {
        if (!ok) throw ParameterError(id() + ": requires " + rule);
    };
    switch (family) {
    case Family::Grassmannian: need(params[0] >= 1 && params[1] >= 1, "p >= 1 and q >= 1"); break;
    case Family::Quadric: need(params[0] >= 3, "n >= 3"); break;
    case Family::SpUn: need(params[0] >= 1, "n >= 1"); break;
    case Family::So2nUn: need(params[0] >= 2, "n >= 2"); break;
    }
}

PairSpec parse_pair_id(std::string_view id) {
    auto open = id.find('(');
    if (open == std::string_view::npos || id.back() != ')')
        throw ParameterError("malformed pair id '" + std::string(id) + "'");
    PairSpec spec;
    spec.family = parse_family(id.substr(0, open));
    std::string_view inner = id.substr(open + 1, id.size() - open - 2);
    while (!inner.empty()) {
        auto comma = inner.find(',');
        std::string_view tok = inner.substr(0, comma);
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw ParameterError("malformed pair id '" + std::string(id) + "'");
        spec.params.push_back(v);
        if (comma == std::string_view::npos) break;
        inner.remove_prefix(comma + 1);
    }
    spec.validate();
    return spec;
}

std::size_t expected_complex_dim(const PairSpec& spec) {
    spec.validate();
    const std::size_t a = static_cast<std::size_t>(spec.params[0]);
    switch (spec.family) {
    case Family::Grassmannian: return a * static_cast<std::size_t>(spec.params[1]);
    case Family::Quadric: return a;
    case Family::SpUn: return a * (a + 1) / 2;
    case Family::So2nUn: return a * (a - 1) / 2;
    }
    return 0;
}

std::vector<FamilyInfo> catalog_families() {
    return {
        {Family::Grassmannian, "SU(p+q)/S(U(p)xU(q))", "p >= 1, q >= 1", "p*q"},
        {Family::Quadric, "SO(n+2)/SO(n)xSO(2)", "n >= 3", "n"},
        {Family::SpUn, "Sp(n)/U(n)", "n >= 1", "n(n+1)/2"},
        {Family::So2nUn, "SO(2n)/U(n)", "n >= 2", "n(n-1)/2"},
    };
}

namespace {

const Complex kI = Complex::i();

Matrix unit(std::size_t n, std::size_t a, std::size_t b, const Complex& v = Complex(1)) {
    Matrix m(n, n);
    m(a, b) = v;
    return m;
}

Matrix antisym(std::size_t n, std::size_t a, std::size_t b) {
    return unit(n, a, b) - unit(n, b, a);
}

// E_ab + E_ba, or E_aa on the diagonal.
Matrix sym(std::size_t n, std::size_t a, std::size_t b) {
    return a == b ? unit(n, a, a) : unit(n, a, b) + unit(n, b, a);
}

// Places the four n×n blocks into a 2n×2n matrix.
Matrix blocks(const Matrix& tl, const Matrix& tr, const Matrix& bl, const Matrix& br) {
    const std::size_t n = tl.rows();
    Matrix m(2 * n, 2 * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            m(r, c) = tl(r, c);
            m(r, n + c) = tr(r, c);
            m(n + r, c) = bl(r, c);
            m(n + r, n + c) = br(r, c);
        }
    return m;
}

struct FamilyBases {
    std::string algebra_name;
    std::vector<Matrix> g;
    std::vector<Matrix> k;
};

FamilyBases grassmannian_bases(std::size_t p, std::size_t q) {
    const std::size_t n = p + q;
    FamilyBases fb;
    fb.algebra_name = "su(" + std::to_string(n) + ")";
    auto same_block = [&](std::size_t a, std::size_t b) { return (a < p) == (b < p); };
    for (std::size_t k = 0; k + 1 < n; ++k) {
        Matrix h = (unit(n, k, k) - unit(n, k + 1, k + 1)) * kI;
        fb.g.push_back(h);
        fb.k.push_back(h);
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            Matrix x = antisym(n, a, b);
            Matrix y = sym(n, a, b) * kI;
            fb.g.push_back(x);
            fb.g.push_back(y);
            if (same_block(a, b)) {
                fb.k.push_back(x);
                fb.k.push_back(y);
            }
        }
    return fb;
}

FamilyBases quadric_bases(std::size_t n) {
    const std::size_t m = n + 2;
    FamilyBases fb;
    fb.algebra_name = "so(" + std::to_string(m) + ")";
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
            Matrix x = antisym(m, a, b);
            fb.g.push_back(x);
            if (b < n || a == n) fb.k.push_back(x);
        }
    return fb;
}

// Compact sp(n) inside u(2n): [[A, B], [-conj(B), conj(A)]] with A
// anti-Hermitian and B symmetric; u(n) sits as diag(A, conj(A)).
FamilyBases sp_un_bases(std::size_t n) {
    FamilyBases fb;
    fb.algebra_name = "sp(" + std::to_string(n) + ")";
    const Matrix zero(n, n);
    std::vector<Matrix> un;
    for (std::size_t a = 0; a < n; ++a) un.push_back(unit(n, a, a, kI));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            un.push_back(antisym(n, a, b));
            un.push_back(sym(n, a, b) * kI);
        }
    for (const auto& a : un) {
        Matrix x = blocks(a, zero, zero, a.conj());
        fb.g.push_back(x);
        fb.k.push_back(x);
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            Matrix s = sym(n, a, b);
            fb.g.push_back(blocks(zero, s, s * Complex(-1), zero));
            Matrix is = s * kI;
            fb.g.push_back(blocks(zero, is, is, zero));
        }
    return fb;
}

// so(2n) with u(n) embedded as A + iB -> [[A, -B], [B, A]].
FamilyBases so2n_un_bases(std::size_t n) {
    const std::size_t m = 2 * n;
    FamilyBases fb;
    fb.algebra_name = "so(" + std::to_string(m) + ")";
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) fb.g.push_back(antisym(m, a, b));
    const Matrix zero(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            Matrix x = antisym(n, a, b);
            fb.k.push_back(blocks(x, zero, zero, x));
        }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            Matrix s = sym(n, a, b);
            fb.k.push_back(blocks(zero, s * Complex(-1), s, zero));
        }
    return fb;
}

FamilyBases family_bases(const PairSpec& spec) {
    const auto a = static_cast<std::size_t>(spec.params[0]);
    switch (spec.family) {
    case Family::Grassmannian:
        return grassmannian_bases(a, static_cast<std::size_t>(spec.params[1]));
    case Family::Quadric: return quadric_bases(a);
    case Family::SpUn: return sp_un_bases(a);
    case Family::So2nUn: return so2n_un_bases(a);
    }
    throw ParameterError("unknown family");
}

Subspace lift(const Subspace& coeffs, const Subspace& basis) {
    std::vector<Vector> vs;
    vs.reserve(coeffs.dim());
    for (const auto& c : coeffs.basis()) vs.push_back(basis.combine(c));
    return Subspace::span(basis.ambient_dim(), vs);
}

Matrix shifted(const Matrix& m, const Complex& s) {
    return m - Matrix::identity(m.rows()) * s;
}

} // namespace

Matrix restricted_ad(const HermitianPair& pair, const LieElement& x, const Subspace& sub) {
    std::vector<Vector> cols;
    cols.reserve(sub.dim());
    for (const auto& v : sub.basis()) {
        auto c = sub.coordinates(pair.g.bracket(x, v));
        if (!c) throw StructureError(pair.spec.id() + ": subspace is not stable under ad(x)");
        cols.push_back(std::move(*c));
    }
    return Matrix::from_columns(cols, sub.dim());
}

Matrix ad_z_on_p(const HermitianPair& pair) { return restricted_ad(pair, pair.z, pair.p); }

HermitianPair build_pair(const PairSpec& spec) {
    spec.validate();
    FamilyBases fb = family_bases(spec);
    HermitianPair pair;
    pair.spec = spec;
    pair.g = LieAlgebra::from_matrices(fb.algebra_name, std::move(fb.g));
    const auto& g = pair.g;
    if (!g.basis_independent() || !g.closure_failures().empty())
        throw StructureError(spec.id() + ": generated basis of " + g.name() + " is not a Lie algebra basis");
    const std::size_t d = g.dim();

    std::vector<Vector> k_coords;
    for (const auto& m : fb.k) {
        auto c = g.try_coordinates(m);
        if (!c) throw StructureError(spec.id() + ": isotropy generator outside " + g.name());
        k_coords.push_back(std::move(*c));
    }
    pair.k = Subspace::span(d, k_coords);
    pair.p = kernel_basis(pair.k.as_rows() * g.killing_gram());
    if (pair.k.dim() + pair.p.dim() != d || pair.k.sum(pair.p).dim() != d)
        throw StructureError(spec.id() + ": k and its Killing complement do not span g");

    Subspace center = subalgebra_center(g, pair.k);
    if (center.dim() != 1)
        throw StructureError(spec.id() + ": center of k has dimension " + std::to_string(center.dim()));
    const Vector& z0 = center[0];

    // ad(z0)|p squares to a negative scalar; rescale so the eigenvalues become ±i.
    Matrix m = restricted_ad(pair, z0, pair.p);
    Matrix m2 = m * m;
    const Complex c = m2.rows() ? m2(0, 0) : Complex(-1);
    if (!(m2 == Matrix::identity(m2.rows()) * c) || !c.is_real() || sgn(c.re()) >= 0)
        throw StructureError(spec.id() + ": ad(z)|p does not square to a negative scalar");
    auto lambda0 = rational_sqrt(-c.re());
    if (!lambda0) throw StructureError(spec.id() + ": ad(z)|p eigenvalue is irrational");
    Vector z1 = scaled(z0, Complex(1 / *lambda0));

    // Smallest positive multiple of z1 whose defining-representation
    // eigenvalues all lie in iZ.
    auto spectrum = imaginary_spectrum(g.to_matrix(z1));
    if (!spectrum) throw StructureError(spec.id() + ": center generator is not semisimple with rational spectrum");
    BigInt lcm_den = 1;
    for (const auto& mu : *spectrum)
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), mu.get_den_mpz_t());
    BigInt g_num = 0;
    for (const auto& mu : *spectrum) {
        BigInt n = BigInt(mu * lcm_den);
        mpz_gcd(g_num.get_mpz_t(), g_num.get_mpz_t(), n.get_mpz_t());
    }
    if (g_num == 0) throw StructureError(spec.id() + ": center generator is zero in the defining representation");
    Rational scale = make_rational(lcm_den, g_num);
    pair.z = scaled(z1, Complex(scale));
    pair.lambda = scale;

    Matrix mz = m * Complex(scale / *lambda0);
    const Complex ilambda(Rational(0), pair.lambda);
    pair.p_plus = lift(kernel_basis(shifted(mz, ilambda)), pair.p);
    pair.p_minus = lift(kernel_basis(shifted(mz, -ilambda)), pair.p);

    Report rep = verify_pair(pair);
    if (!rep.passed()) {
        std::string failed;
        for (const auto& ch : rep.checks)
            if (!ch.passed && !ch.advisory) failed += " " + ch.name;
        throw StructureError(spec.id() + ": structural checks failed:" + failed);
    }
    return pair;
}

LieElement curvature_at_base(const HermitianPair& pair, const LieElement& a, const LieElement& b) {
    if (!pair.p.contains(a) || !pair.p.contains(b))
        throw DomainError("curvature_at_base: arguments must lie in p");
    LieElement c = pair.g.bracket(a, b);
    if (!pair.k.contains(c))
        throw StructureError(pair.spec.id() + ": [p, p] has a component outside k");
    return c;
}

namespace {

bool brackets_within(const HermitianPair& pair, const Subspace& a, const Subspace& b,
                     const Subspace& target, bool symmetric, std::string& detail) {
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = symmetric ? i + 1 : 0; j < b.dim(); ++j)
            if (!target.contains(pair.g.bracket(a[i], b[j]))) {
                detail = "basis pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
                return false;
            }
    return true;
}

bool eigen_on(const HermitianPair& pair, const Subspace& s, const Complex& eig) {
    for (const auto& v : s.basis())
        if (!(pair.g.bracket(pair.z, v) == scaled(v, eig))) return false;
    return true;
}

} // namespace

Report verify_pair(const HermitianPair& pair) {
    Report rep;
    rep.subject = "pair " + pair.spec.id();
    const auto& g = pair.g;
    const std::size_t d = g.dim();

    rep.add("killing_orthogonal",
            (pair.k.as_rows() * g.killing_gram() * pair.p.as_rows().transpose()).is_zero());
    rep.add("killing_nondegenerate", rank(g.killing_gram()) == d,
            "rank " + std::to_string(rank(g.killing_gram())) + " of " + std::to_string(d));
    rep.add("direct_sum", pair.k.dim() + pair.p.dim() == d && pair.k.sum(pair.p).dim() == d,
            "dim k = " + std::to_string(pair.k.dim()) + ", dim p = " + std::to_string(pair.p.dim()));

    std::string detail;
    bool ok = brackets_within(pair, pair.k, pair.k, pair.k, true, detail);
    rep.add("bracket_k_k_in_k", ok, ok ? "" : detail);
    ok = brackets_within(pair, pair.k, pair.p, pair.p, false, detail);
    rep.add("bracket_k_p_in_p", ok, ok ? "" : detail);
    ok = brackets_within(pair, pair.p, pair.p, pair.k, true, detail);
    rep.add("bracket_p_p_in_k", ok, ok ? "" : detail);

    Subspace center = subalgebra_center(g, pair.k);
    rep.add("center_one_dimensional", center.dim() == 1,
            "dim center(k) = " + std::to_string(center.dim()));
    rep.add("z_spans_center",
            !is_zero(pair.z) && center.dim() == 1 && center.contains(pair.z));

    rep.add("lambda_positive", sgn(pair.lambda) > 0, "lambda = " + to_string(pair.lambda));
    bool squares = false;
    try {
        Matrix m = ad_z_on_p(pair);
        squares = m * m == Matrix::identity(m.rows()) * Complex(-pair.lambda * pair.lambda);
    } catch (const StructureError&) {
    }
    rep.add("ad_z_squared", squares, "ad(z)|p squared against -lambda^2 Id");

    const Complex ilambda(Rational(0), pair.lambda);
    rep.add("p_plus_eigenvalue", eigen_on(pair, pair.p_plus, ilambda));
    rep.add("p_minus_eigenvalue", eigen_on(pair, pair.p_minus, -ilambda));
    const bool halves = 2 * pair.p_plus.dim() == pair.p.dim() &&
                        2 * pair.p_minus.dim() == pair.p.dim() &&
                        pair.p_plus.sum(pair.p_minus) == pair.p;
    rep.add("p_plus_minus_split", halves,
            "dim p+ = " + std::to_string(pair.p_plus.dim()) + ", dim p- = " +
                std::to_string(pair.p_minus.dim()));
    rep.add("conjugation_swaps", pair.p_plus.conjugated() == pair.p_minus);

    ok = brackets_within(pair, pair.p_plus, pair.p_plus, Subspace(d), true, detail);
    rep.add("p_plus_abelian", ok, ok ? "" : detail);
    ok = brackets_within(pair, pair.p_minus, pair.p_minus, Subspace(d), true, detail);
    rep.add("p_minus_abelian", ok, ok ? "" : detail);
    ok = brackets_within(pair, pair.p_plus, pair.p_minus, pair.k, false, detail);
    rep.add("bracket_p_plus_p_minus_in_k", ok, ok ? "" : detail);

    const std::size_t expected = expected_complex_dim(pair.spec);
    rep.add("complex_dimension", pair.p_plus.dim() == expected,
            "dim p+ = " + std::to_string(pair.p_plus.dim()) + ", formula gives " +
                std::to_string(expected));
    return rep;
}

} // namespace hsalg
