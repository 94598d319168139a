#include "hsalg/moduli.hpp"

#include <algorithm>
#include <sstream>

namespace hsalg {

namespace {

void require_context(const BundleContext& ctx, const InvariantElement& e, const char* what) {
    if (e.context != ctx.fingerprint())
        throw MismatchError(std::string(what) + " was built for a different (pair, target, eta)");
    const std::size_t dh = ctx.target().dim();
    const std::size_t dp = ctx.pair().p_sign(e.sign).dim();
    if (e.dim_h != dh || e.dim_p != dp || e.coords.size() != dh * dp)
        throw ShapeError(std::string(what) + " has the wrong tensor shape");
}

void require_sign(const InvariantElement& e, Sign s, const char* what) {
    if (e.sign != s)
        throw DomainError(std::string(what) + " must lie in h ⊗ p" + (s == Sign::Plus ? "+" : "-"));
}

// Σ_{i,k} a_ij b_kl [h_i, h_k], accumulated into out[m * stride + offset(j, l)]
// by the caller-supplied visitor for every (j, l).
template <class Visit>
void bracket_pairs(const LieAlgebra& h, const InvariantElement& a, const InvariantElement& b,
                   Visit visit) {
    const std::size_t dh = h.dim();
    for (std::size_t i = 0; i < dh; ++i)
        for (std::size_t j = 0; j < a.dim_p; ++j) {
            const Complex& aij = a.at(i, j);
            if (aij.is_zero()) continue;
            for (std::size_t k = 0; k < dh; ++k) {
                const Vector& c = h.structure(i, k);
                if (is_zero(c)) continue;
                for (std::size_t l = 0; l < b.dim_p; ++l) {
                    const Complex& bkl = b.at(k, l);
                    if (bkl.is_zero()) continue;
                    Complex f = aij * bkl;
                    visit(c, f, j, l);
                }
            }
        }
}

WedgeValue wedge_map(const BundleContext& ctx, const InvariantElement& a,
                     const InvariantElement& b, Sign s) {
    require_context(ctx, a, "first argument");
    require_context(ctx, b, "second argument");
    require_sign(a, s, "first argument");
    require_sign(b, s, "second argument");
    const std::size_t dh = ctx.target().dim();
    const std::size_t dp = a.dim_p;
    const std::size_t pairs = dp * (dp - (dp ? 1 : 0)) / 2;
    WedgeValue out{s == Sign::Plus ? WedgeValue::Space::WedgePlus : WedgeValue::Space::WedgeMinus,
                   dh, dp, dp, Vector(dh * pairs)};
    bracket_pairs(ctx.target().algebra(), a, b,
                  [&](const Vector& c, const Complex& f, std::size_t j, std::size_t l) {
                      if (j == l) return;
                      // p_j ∧ p_l = -(p_l ∧ p_j)
                      const bool flip = j > l;
                      const std::size_t idx = flip ? wedge_index(dp, l, j) : wedge_index(dp, j, l);
                      for (std::size_t m = 0; m < dh; ++m) {
                          if (c[m].is_zero()) continue;
                          Complex t = f * c[m];
                          if (flip) out.coords[m * pairs + idx] -= t;
                          else out.coords[m * pairs + idx] += t;
                      }
                  });
    return out;
}

InvariantElement apply_to_h_factor(const Matrix& a, const InvariantElement& e,
                                   const std::string& context) {
    InvariantElement out = e;
    out.context = context;
    for (std::size_t j = 0; j < e.dim_p; ++j)
        for (std::size_t i = 0; i < e.dim_h; ++i) {
            Complex acc;
            for (std::size_t k = 0; k < e.dim_h; ++k)
                if (!a(i, k).is_zero()) acc.add_product(a(i, k), e.at(k, j));
            out.coords[i * e.dim_p + j] = std::move(acc);
        }
    return out;
}

std::string compress_ranges(const std::string& map, const std::vector<std::size_t>& idx) {
    std::ostringstream os;
    os << map << "@coord(";
    for (std::size_t k = 0; k < idx.size();) {
        std::size_t e = k;
        while (e + 1 < idx.size() && idx[e + 1] == idx[e] + 1) ++e;
        if (k) os << ",";
        os << idx[k];
        if (e > k) os << ".." << idx[e];
        k = e + 1;
    }
    os << ")";
    return os.str();
}

using Poly = std::map<std::pair<std::size_t, std::size_t>, Complex>;

// Collects one candidate equation per codomain coordinate of a map.
struct Collector {
    std::string map;
    std::vector<Poly> polys;

    void add(std::size_t coord, std::size_t u, std::size_t v, const Complex& c) {
        if (c.is_zero()) return;
        auto key = u <= v ? std::make_pair(u, v) : std::make_pair(v, u);
        Complex& slot = polys[coord][key];
        slot += c;
        if (slot.is_zero()) polys[coord].erase(key);
    }
};

void flush(Collector& col, QuadraticSystem& sys) {
    std::vector<std::size_t> zero;
    for (std::size_t coord = 0; coord < col.polys.size(); ++coord) {
        Poly& p = col.polys[coord];
        if (p.empty()) {
            zero.push_back(coord);
            continue;
        }
        Complex lead = p.begin()->second.inverse();
        for (auto& [_, c] : p) c *= lead;
        std::string prov = col.map + "@coord(" + std::to_string(coord) + ")";
        auto same = std::find_if(sys.equations.begin(), sys.equations.end(),
                                 [&](const Equation& e) { return e.terms == p; });
        if (same != sys.equations.end()) same->merged.push_back(prov);
        else sys.equations.push_back({std::move(p), prov, {}});
    }
    if (!zero.empty()) sys.pruned.push_back(compress_ranges(col.map, zero));
}

Complex form_at(const Complex& a, const Complex& b, const Complex& c, const Complex& u,
                const Complex& v) {
    return a * u * u + b * u * v + c * v * v;
}

struct Binary {
    Complex a, b, c; // a·v1² + b·v1·v2 + c·v2²
};

Binary binary_of(const Equation& eq) {
    Binary f;
    for (const auto& [key, coeff] : eq.terms) {
        if (key == std::make_pair<std::size_t, std::size_t>(0, 0)) f.a = coeff;
        else if (key == std::make_pair<std::size_t, std::size_t>(0, 1)) f.b = coeff;
        else f.c = coeff;
    }
    return f;
}

SolutionSet::Line normalized_line(Complex a, Complex b, int mult) {
    Complex s = a.is_zero() ? b.inverse() : a.inverse();
    return {a * s, b * s, mult};
}

std::optional<std::vector<SolutionSet::Line>> factor(const Binary& f) {
    std::vector<SolutionSet::Line> out;
    if (f.a.is_zero()) {
        // v2 · (b·v1 + c·v2)
        if (f.b.is_zero()) return std::vector<SolutionSet::Line>{{0, 1, 2}};
        out.push_back({0, 1, 1});
        out.push_back(normalized_line(f.b, f.c, 1));
        return out;
    }
    Complex disc = f.b * f.b - Complex(4) * f.a * f.c;
    auto s = gaussian_sqrt(disc);
    if (!s) return std::nullopt;
    Complex two_a = Complex(2) * f.a;
    Complex t1 = (-f.b + *s) / two_a;
    Complex t2 = (-f.b - *s) / two_a;
    if (disc.is_zero()) return std::vector<SolutionSet::Line>{{1, -t1, 2}};
    out.push_back({1, -t1, 1});
    out.push_back({1, -t2, 1});
    return out;
}

// 0 if the form does not vanish on the line, 2 if it is a multiple of the
// square of the line's equation, 1 otherwise.
int order_on(const Binary& f, const SolutionSet::Line& l) {
    if (!form_at(f.a, f.b, f.c, -l.b, l.a).is_zero()) return 0;
    Complex sa = l.a * l.a, sb = Complex(2) * l.a * l.b, sc = l.b * l.b;
    bool prop = (f.a * sb == f.b * sa) && (f.a * sc == f.c * sa) && (f.b * sc == f.c * sb);
    return prop ? 2 : 1;
}

std::string linear_to_string(const Complex& a, const std::string& u, const Complex& b,
                             const std::string& v) {
    auto term = [](const Complex& c, const std::string& name) {
        if (c.is_one()) return name;
        if (c == Complex(-1)) return "-" + name;
        std::string s = to_string(c);
        if (!c.is_real() && c.re() != 0) s = "(" + s + ")";
        return s + "*" + name;
    };
    std::string out;
    if (!a.is_zero()) out = term(a, u);
    if (!b.is_zero()) out += (out.empty() ? "" : " + ") + term(b, v);
    return out + " = 0";
}

} // namespace

std::string_view kind_name(Kind k) { return k == Kind::Higgs ? "higgs" : "cohiggs"; }

Kind parse_kind(std::string_view name) {
    if (name == "higgs") return Kind::Higgs;
    if (name == "cohiggs" || name == "co-higgs") return Kind::CoHiggs;
    throw ParseError("unknown kind '" + std::string(name) + "' (expected higgs or cohiggs)");
}

Sign phi_sign(Kind k) { return k == Kind::Higgs ? Sign::Minus : Sign::Plus; }

std::size_t wedge_index(std::size_t n, std::size_t j, std::size_t l) {
    // pairs (0,1)..(0,n-1), (1,2)..: rows before j hold Σ_{r<j} (n-1-r)
    return j * (2 * n - j - 1) / 2 + (l - j - 1);
}

WedgeValue m_plus(const BundleContext& ctx, const InvariantElement& a, const InvariantElement& b) {
    return wedge_map(ctx, a, b, Sign::Plus);
}

WedgeValue m_minus(const BundleContext& ctx, const InvariantElement& a, const InvariantElement& b) {
    return wedge_map(ctx, a, b, Sign::Minus);
}

WedgeValue m_mixed(const BundleContext& ctx, const InvariantElement& a, const InvariantElement& b) {
    require_context(ctx, a, "first argument");
    require_context(ctx, b, "second argument");
    const std::size_t dh = ctx.target().dim();
    const std::size_t da = a.dim_p, db = b.dim_p;
    WedgeValue out{WedgeValue::Space::Mixed, dh, da, db, Vector(dh * da * db)};
    bracket_pairs(ctx.target().algebra(), a, b,
                  [&](const Vector& c, const Complex& f, std::size_t j, std::size_t l) {
                      for (std::size_t m = 0; m < dh; ++m)
                          if (!c[m].is_zero())
                              out.coords[m * da * db + j * db + l].add_product(f, c[m]);
                  });
    return out;
}

bool verify_holomorphic(const BundleContext& ctx, const InvariantElement& beta) {
    return m_plus(ctx, beta, beta).is_zero();
}

Report verify_triple(const ModuliTriple& t) {
    const BundleContext& ctx = *t.ctx;
    require_context(ctx, t.beta, "beta");
    require_context(ctx, t.phi, "phi");
    Report rep;
    rep.subject = std::string(kind_name(t.kind)) + " triple on " + ctx.pair().spec.id();

    const bool beta_ok = t.beta.sign == Sign::Plus;
    const bool phi_ok = t.phi.sign == phi_sign(t.kind);
    rep.add("beta_sign", beta_ok, beta_ok ? "" : "beta must lie in h ⊗ p+");
    rep.add("phi_sign", phi_ok,
            phi_ok ? "" : std::string("phi must lie in h ⊗ p") + (t.kind == Kind::Higgs ? "-" : "+"));
    rep.add("beta_invariant", is_invariant(ctx, t.beta));
    rep.add("phi_invariant", is_invariant(ctx, t.phi));

    const std::string phi_map = t.kind == Kind::Higgs ? "m_minus(phi,phi)" : "m_plus(phi,phi)";
    if (!beta_ok || !phi_ok) {
        rep.add("m_plus(beta,beta)", false, "skipped: wrong sign");
        rep.add(phi_map, false, "skipped: wrong sign");
        rep.add("m_mixed(beta,phi)", false, "skipped: wrong sign");
        return rep;
    }
    rep.add("m_plus(beta,beta)", m_plus(ctx, t.beta, t.beta).is_zero());
    WedgeValue pp = t.kind == Kind::Higgs ? m_minus(ctx, t.phi, t.phi) : m_plus(ctx, t.phi, t.phi);
    rep.add(phi_map, pp.is_zero());
    rep.add("m_mixed(beta,phi)", m_mixed(ctx, t.beta, t.phi).is_zero());
    return rep;
}

Matrix conjugation_matrix(const TargetAlgebra& target, const Matrix& h) {
    const LieAlgebra& alg = target.algebra();
    if (!alg.has_matrices()) throw DomainError("conjugation needs a matrix realization of the target");
    if (h.rows() != alg.ambient_size() || h.cols() != alg.ambient_size())
        throw ShapeError("conjugator must be " + std::to_string(alg.ambient_size()) + "x" +
                         std::to_string(alg.ambient_size()));
    auto inv = inverse(h);
    if (!inv) throw SingularConjugator("conjugator is not invertible");
    const std::size_t d = alg.dim();
    std::vector<Vector> cols;
    cols.reserve(d);
    for (std::size_t k = 0; k < d; ++k) cols.push_back(alg.coordinates(*inv * alg.basis()[k] * h));
    return Matrix::from_columns(cols, d);
}

ModuliTriple transport(const Matrix& h, const ModuliTriple& t) {
    const BundleContext& ctx = *t.ctx;
    Matrix a = conjugation_matrix(ctx.target(), h);
    std::vector<LieElement> images;
    for (const auto& img : ctx.images()) images.push_back(a * img);
    auto moved = std::make_shared<const BundleContext>(ctx.pair_ptr(), ctx.target_ptr(),
                                                       std::move(images));
    ModuliTriple out;
    out.ctx = moved;
    out.kind = t.kind;
    out.beta = apply_to_h_factor(a, t.beta, moved->fingerprint());
    out.phi = apply_to_h_factor(a, t.phi, moved->fingerprint());
    return out;
}

bool equivalent_under(const Matrix& h, const ModuliTriple& t1, const ModuliTriple& t2) {
    if (t1.ctx->pair().spec != t2.ctx->pair().spec || t1.ctx->target().id() != t2.ctx->target().id())
        throw MismatchError("triples live over different pairs or targets");
    ModuliTriple moved = transport(h, t1);
    return moved.kind == t2.kind && moved.ctx->images() == t2.ctx->images() &&
           moved.beta.sign == t2.beta.sign && moved.beta.coords == t2.beta.coords &&
           moved.phi.sign == t2.phi.sign && moved.phi.coords == t2.phi.coords;
}

std::optional<Matrix> find_conjugator(const ModuliTriple& t1, const ModuliTriple& t2,
                                      std::mt19937_64& rng, int attempts) {
    const TargetAlgebra& target = t1.ctx->target();
    const LieAlgebra& alg = target.algebra();
    if (!alg.has_matrices()) throw DomainError("conjugator search needs a matrix target");
    if (t1.kind != t2.kind) return std::nullopt;
    const std::size_t n = alg.ambient_size();

    // pairs (X1, X2) that must satisfy h·X2 = X1·h
    std::vector<std::pair<Matrix, Matrix>> pairs;
    for (std::size_t j = 0; j < t1.ctx->images().size(); ++j)
        pairs.emplace_back(alg.to_matrix(t1.ctx->images()[j]), alg.to_matrix(t2.ctx->images()[j]));
    auto columns = [&](const InvariantElement& e1, const InvariantElement& e2) {
        for (std::size_t j = 0; j < e1.dim_p; ++j) {
            Vector c1(e1.dim_h), c2(e2.dim_h);
            for (std::size_t i = 0; i < e1.dim_h; ++i) {
                c1[i] = e1.at(i, j);
                c2[i] = e2.at(i, j);
            }
            pairs.emplace_back(alg.to_matrix(c1), alg.to_matrix(c2));
        }
    };
    columns(t1.beta, t2.beta);
    columns(t1.phi, t2.phi);

    std::vector<Vector> rows;
    for (const auto& [x1, x2] : pairs)
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                Vector row(n * n);
                for (std::size_t b = 0; b < n; ++b) row[r * n + b] += x2(b, c);
                for (std::size_t a = 0; a < n; ++a) row[a * n + c] -= x1(r, a);
                rows.push_back(std::move(row));
            }
    Subspace sol = rows.empty() ? Subspace::full(n * n) : kernel_basis(Matrix::from_rows(rows, n * n));
    if (sol.dim() == 0) return std::nullopt;

    std::uniform_int_distribution<int> coef(-3, 3);
    for (int attempt = 0; attempt < attempts; ++attempt) {
        Vector c(sol.dim());
        for (auto& v : c) v = Complex(Rational(coef(rng)), Rational(attempt % 2 ? coef(rng) : 0));
        Matrix h(n, n, sol.combine(c));
        if (!inverse(h)) continue;
        if (equivalent_under(h, t1, t2)) return h;
    }
    return std::nullopt;
}

Complex QuadraticSystem::evaluate(const Equation& eq, std::span<const Complex> values) const {
    if (values.size() != variables.size())
        throw ShapeError("expected " + std::to_string(variables.size()) + " values");
    Complex acc;
    for (const auto& [key, coeff] : eq.terms) acc += coeff * values[key.first] * values[key.second];
    return acc;
}

bool QuadraticSystem::satisfied(std::span<const Complex> values) const {
    for (const auto& eq : equations)
        if (!evaluate(eq, values).is_zero()) return false;
    return true;
}

QuadraticSystem emit_system(const BundleContext& ctx, Kind kind) {
    InvariantSpace bs = invariant_space(ctx, Sign::Plus);
    InvariantSpace ps = invariant_space(ctx, phi_sign(kind));
    const std::size_t r = bs.dim(), s = ps.dim();

    QuadraticSystem sys;
    sys.kind = kind;
    sys.num_x = r;
    sys.num_y = s;
    for (std::size_t i = 1; i <= r; ++i) sys.variables.push_back("x" + std::to_string(i));
    for (std::size_t j = 1; j <= s; ++j) sys.variables.push_back("y" + std::to_string(j));
    sys.pair_id = ctx.pair().spec.id();
    sys.context = ctx.fingerprint();

    auto quadratic = [&](const std::string& name, const InvariantSpace& sp, std::size_t offset,
                         auto map) {
        const std::size_t dp = sp.dim_p;
        Collector col{name, std::vector<Poly>(sp.dim_h * (dp * (dp - (dp ? 1 : 0)) / 2))};
        for (std::size_t i = 0; i < sp.dim(); ++i)
            for (std::size_t k = i; k < sp.dim(); ++k) {
                WedgeValue w = map(ctx, sp.basis_element(i), sp.basis_element(k));
                // symmetric map: x_i x_k appears twice for i != k
                Complex mult(i == k ? 1 : 2);
                for (std::size_t c = 0; c < w.coords.size(); ++c)
                    if (!w.coords[c].is_zero()) col.add(c, offset + i, offset + k, mult * w.coords[c]);
            }
        flush(col, sys);
    };
    quadratic("m_plus(beta,beta)", bs, 0, m_plus);
    if (kind == Kind::Higgs) quadratic("m_minus(phi,phi)", ps, r, m_minus);
    else quadratic("m_plus(phi,phi)", ps, r, m_plus);

    Collector mixed{"m_mixed(beta,phi)",
                    std::vector<Poly>(ctx.target().dim() * bs.dim_p * ps.dim_p)};
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            WedgeValue w = m_mixed(ctx, bs.basis_element(i), ps.basis_element(j));
            for (std::size_t c = 0; c < w.coords.size(); ++c)
                if (!w.coords[c].is_zero()) mixed.add(c, i, r + j, w.coords[c]);
        }
    flush(mixed, sys);
    return sys;
}

ModuliTriple system_point(std::shared_ptr<const BundleContext> ctx, Kind kind,
                          std::span<const Complex> values) {
    InvariantSpace bs = invariant_space(*ctx, Sign::Plus);
    InvariantSpace ps = invariant_space(*ctx, phi_sign(kind));
    if (values.size() != bs.dim() + ps.dim())
        throw ShapeError("expected " + std::to_string(bs.dim() + ps.dim()) + " values");
    ModuliTriple t;
    t.kind = kind;
    t.beta = bs.element(values.subspan(0, bs.dim()));
    t.phi = ps.element(values.subspan(bs.dim()));
    t.ctx = std::move(ctx);
    return t;
}

std::string_view shape_name(SolutionSet::Shape s) {
    switch (s) {
    case SolutionSet::Shape::Point: return "point";
    case SolutionSet::Shape::Lines: return "lines";
    case SolutionSet::Shape::Conic: return "conic";
    case SolutionSet::Shape::Full: return "full";
    }
    return "?";
}

SolutionSet solve_small(const QuadraticSystem& sys) {
    const std::size_t n = sys.variables.size();
    if (n > 2)
        throw Unsupported("solve handles at most 2 variables, system has " + std::to_string(n) +
                          "; use the emitted JSON with an external solver");
    SolutionSet out;
    out.variables = sys.variables;
    if (sys.equations.empty()) {
        out.shape = SolutionSet::Shape::Full;
        return out;
    }
    if (n == 1) {
        out.shape = SolutionSet::Shape::Point;
        return out;
    }

    Binary first = binary_of(sys.equations.front());
    auto lines = factor(first);
    if (!lines) {
        // Any other equation over Q(i) sharing a root with an irreducible
        // form shares both roots, so it is proportional (hence equal here).
        for (const auto& eq : sys.equations)
            if (eq.terms != sys.equations.front().terms) {
                out.shape = SolutionSet::Shape::Point;
                return out;
            }
        out.shape = SolutionSet::Shape::Conic;
        out.conic = sys.equations.front();
        return out;
    }
    for (auto line : *lines) {
        int mult = line.multiplicity;
        for (const auto& eq : sys.equations) mult = std::min(mult, order_on(binary_of(eq), line));
        if (mult == 0) continue;
        line = normalized_line(line.a, line.b, mult);
        out.lines.push_back(line);
    }
    out.shape = out.lines.empty() ? SolutionSet::Shape::Point : SolutionSet::Shape::Lines;
    return out;
}

bool SolutionSet::contains(std::span<const Complex> values) const {
    if (values.size() != variables.size()) throw ShapeError("point has the wrong number of coordinates");
    switch (shape) {
    case Shape::Full: return true;
    case Shape::Point: return is_zero(values);
    case Shape::Lines:
        for (const auto& l : lines)
            if ((l.a * values[0] + l.b * values[1]).is_zero()) return true;
        return false;
    case Shape::Conic: {
        Binary f = binary_of(*conic);
        return form_at(f.a, f.b, f.c, values[0], values[1]).is_zero();
    }
    }
    return false;
}

std::string SolutionSet::describe() const {
    switch (shape) {
    case Shape::Full:
        return variables.empty() ? "the single point of a zero-dimensional space"
                                 : "all of C^" + std::to_string(variables.size());
    case Shape::Point: return "the origin only";
    case Shape::Lines: {
        std::string s = lines.size() == 1 ? "line " : "union of lines ";
        for (std::size_t k = 0; k < lines.size(); ++k) {
            if (k) s += ", ";
            s += linear_to_string(lines[k].a, variables[0], lines[k].b, variables[1]);
            if (lines[k].multiplicity > 1) s += " (multiplicity " + std::to_string(lines[k].multiplicity) + ")";
        }
        return s;
    }
    case Shape::Conic: {
        Binary f = binary_of(*conic);
        std::ostringstream os;
        os << "irreducible conic (" << to_string(f.a) << ")*" << variables[0] << "^2 + (" << to_string(f.b)
           << ")*" << variables[0] << "*" << variables[1] << " + (" << to_string(f.c) << ")*"
           << variables[1] << "^2 = 0";
        return os.str();
    }
    }
    return {};
}

} // namespace hsalg
