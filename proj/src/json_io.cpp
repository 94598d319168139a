#include "hsalg/json_io.hpp"

#include <fstream>
#include <sstream>

namespace hsalg {

namespace {

std::string escape_token(const std::string& key) {
    std::string out;
    for (char c : key) {
        if (c == '~') out += "~0";
        else if (c == '/') out += "~1";
        else out += c;
    }
    return out;
}

// Walks well-formed JSON text and records the starting line of every value.
class LineIndexer {
public:
    LineIndexer(const std::string& text, std::map<std::string, int>& out) : t_(text), out_(out) {}

    void run() {
        skip_ws();
        value("");
    }

private:
    void skip_ws() {
        while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_]))) {
            if (t_[pos_] == '\n') ++line_;
            ++pos_;
        }
    }

    std::string string_token() {
        std::string s;
        ++pos_; // opening quote
        while (pos_ < t_.size() && t_[pos_] != '"') {
            if (t_[pos_] == '\\' && pos_ + 1 < t_.size()) {
                s += t_[pos_ + 1];
                pos_ += 2;
                continue;
            }
            s += t_[pos_++];
        }
        ++pos_;
        return s;
    }

    void value(const std::string& ptr) {
        out_.emplace(ptr, line_);
        if (pos_ >= t_.size()) return;
        char c = t_[pos_];
        if (c == '{') {
            ++pos_;
            skip_ws();
            while (pos_ < t_.size() && t_[pos_] != '}') {
                std::string key = string_token();
                skip_ws();
                ++pos_; // colon
                skip_ws();
                value(ptr + "/" + escape_token(key));
                skip_ws();
                if (pos_ < t_.size() && t_[pos_] == ',') {
                    ++pos_;
                    skip_ws();
                }
            }
            ++pos_;
        } else if (c == '[') {
            ++pos_;
            skip_ws();
            std::size_t index = 0;
            while (pos_ < t_.size() && t_[pos_] != ']') {
                value(ptr + "/" + std::to_string(index++));
                skip_ws();
                if (pos_ < t_.size() && t_[pos_] == ',') {
                    ++pos_;
                    skip_ws();
                }
            }
            ++pos_;
        } else if (c == '"') {
            string_token();
        } else {
            while (pos_ < t_.size() && !std::isspace(static_cast<unsigned char>(t_[pos_])) &&
                   t_[pos_] != ',' && t_[pos_] != ']' && t_[pos_] != '}')
                ++pos_;
        }
    }

    const std::string& t_;
    std::map<std::string, int>& out_;
    std::size_t pos_ = 0;
    int line_ = 1;
};

template <class F>
auto guarded(const Cursor& c, F f) -> decltype(f()) {
    try {
        return f();
    } catch (const ParseError& e) {
        c.fail(e.what());
    } catch (const Error& e) {
        c.fail(e.what());
    }
}

json vectors_to_json(const std::vector<Vector>& vs) {
    json arr = json::array();
    for (const auto& v : vs) arr.push_back(to_json(v));
    return arr;
}

std::vector<Vector> read_vectors(const Cursor& c, std::size_t length) {
    c.expect_array();
    std::vector<Vector> out;
    for (std::size_t k = 0; k < c.size(); ++k) out.push_back(read_vector(c[k], length));
    return out;
}

Subspace read_canonical_subspace(const Cursor& c, std::size_t ambient) {
    auto vs = read_vectors(c, ambient);
    Subspace s = Subspace::span(ambient, vs);
    if (s.dim() != vs.size() || !(s.basis() == vs)) c.fail("basis is not in canonical echelon form");
    return s;
}

std::size_t read_size(const Cursor& c) {
    long long v = c.as_int();
    if (v < 0) c.fail("expected a non-negative integer");
    return static_cast<std::size_t>(v);
}

} // namespace

Document parse_document(std::string name, const std::string& text) {
    Document doc;
    doc.name = std::move(name);
    try {
        doc.root = json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t upto = std::min<std::size_t>(e.byte, text.size());
        int line = 1;
        for (std::size_t k = 0; k + 1 < upto; ++k)
            if (text[k] == '\n') ++line;
        std::string what = e.what();
        throw ParseError(doc.name + ":" + std::to_string(line) + ": malformed JSON: " + what);
    }
    LineIndexer(text, doc.lines).run();
    return doc;
}

Document load_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_document(path, ss.str());
}

int Cursor::line() const {
    std::string p = ptr_;
    while (true) {
        auto it = doc_->lines.find(p);
        if (it != doc_->lines.end()) return it->second;
        if (p.empty()) return 1;
        p.erase(p.rfind('/'));
    }
}

void Cursor::fail(const std::string& message) const {
    throw ParseError(doc_->name + ":" + std::to_string(line()) + ": field '" +
                     (ptr_.empty() ? "/" : ptr_) + "': " + message);
}

bool Cursor::has(const std::string& key) const {
    return node_->is_object() && node_->contains(key);
}

Cursor Cursor::operator[](const std::string& key) const {
    expect_object();
    auto it = node_->find(key);
    if (it == node_->end()) {
        Cursor missing(doc_, node_, ptr_ + "/" + escape_token(key));
        missing.fail("missing required field");
    }
    return Cursor(doc_, &*it, ptr_ + "/" + escape_token(key));
}

Cursor Cursor::operator[](std::size_t index) const {
    expect_array();
    if (index >= node_->size()) fail("index " + std::to_string(index) + " out of range");
    return Cursor(doc_, &(*node_)[index], ptr_ + "/" + std::to_string(index));
}

std::size_t Cursor::size() const {
    if (!node_->is_array() && !node_->is_object()) fail("expected an array");
    return node_->size();
}

std::string Cursor::as_string() const {
    if (!node_->is_string()) fail("expected a string");
    return node_->get<std::string>();
}

long long Cursor::as_int() const {
    if (!node_->is_number_integer()) fail("expected an integer");
    return node_->get<long long>();
}

void Cursor::expect_array() const {
    if (!node_->is_array()) fail("expected an array");
}

void Cursor::expect_object() const {
    if (!node_->is_object()) fail("expected an object");
}

json to_json(const Rational& q) {
    return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

json to_json(const Complex& z) { return {{"re", to_json(z.re())}, {"im", to_json(z.im())}}; }

json to_json(const Vector& v) {
    json arr = json::array();
    for (const auto& z : v) arr.push_back(to_json(z));
    return arr;
}

json to_json(const Matrix& m) {
    json arr = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
        arr.push_back(std::move(row));
    }
    return arr;
}

json to_json(const Subspace& s) { return vectors_to_json(s.basis()); }

Rational read_rational(const Cursor& c) {
    const json& v = c.value();
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) return guarded(c, [&] { return parse_rational(v.get<std::string>()); });
    if (v.is_object()) {
        std::string num = c["num"].as_string();
        std::string den = c["den"].as_string();
        return guarded(c, [&] {
            BigInt n, d;
            if (n.set_str(num, 10) != 0) throw ParseError("'num' is not a decimal integer");
            if (d.set_str(den, 10) != 0) throw ParseError("'den' is not a decimal integer");
            if (d == 0) throw ParseError("zero denominator");
            return make_rational(n, d);
        });
    }
    c.fail("expected a rational ({\"num\",\"den\"}, integer or string)");
}

Complex read_complex(const Cursor& c) {
    const json& v = c.value();
    if (v.is_number_integer()) return Complex(Rational(v.get<long>()));
    if (v.is_string()) return guarded(c, [&] { return parse_complex(v.get<std::string>()); });
    if (v.is_object()) {
        Rational re = c.has("re") ? read_rational(c["re"]) : Rational(0);
        Rational im = c.has("im") ? read_rational(c["im"]) : Rational(0);
        if (!c.has("re") && !c.has("im")) c.fail("expected fields 're' and 'im'");
        return Complex(re, im);
    }
    c.fail("expected a Gaussian rational");
}

Vector read_vector(const Cursor& c, std::optional<std::size_t> length) {
    c.expect_array();
    if (length && c.size() != *length)
        c.fail("expected " + std::to_string(*length) + " entries, got " + std::to_string(c.size()));
    Vector v;
    v.reserve(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) v.push_back(read_complex(c[k]));
    return v;
}

Matrix read_matrix(const Cursor& c) {
    c.expect_array();
    const std::size_t rows = c.size();
    if (rows == 0) c.fail("empty matrix");
    const std::size_t cols = c[0].size();
    std::vector<Vector> rs;
    for (std::size_t r = 0; r < rows; ++r) rs.push_back(read_vector(c[r], cols));
    return Matrix::from_rows(rs, cols);
}

json to_json(const Report& r) {
    json checks = json::array();
    for (const auto& ch : r.checks)
        checks.push_back(
            {{"name", ch.name}, {"passed", ch.passed}, {"detail", ch.detail}, {"advisory", ch.advisory}});
    return {{"subject", r.subject}, {"passed", r.passed()}, {"checks", checks}};
}

Report read_report(const Cursor& c) {
    Report r;
    r.subject = c["subject"].as_string();
    Cursor checks = c["checks"];
    checks.expect_array();
    for (std::size_t k = 0; k < checks.size(); ++k) {
        Cursor ch = checks[k];
        auto flag = [](const Cursor& f) {
            if (!f.value().is_boolean()) f.fail("expected a boolean");
            return f.value().get<bool>();
        };
        r.checks.push_back({ch["name"].as_string(), flag(ch["passed"]), ch["detail"].as_string(),
                            flag(ch["advisory"])});
    }
    return r;
}

json to_json(const PairSpec& s) { return {{"family", family_name(s.family)}, {"params", s.params}}; }

PairSpec read_pair_spec(const Cursor& c) {
    if (c.value().is_string()) return guarded(c, [&] { return parse_pair_id(c.as_string()); });
    PairSpec s;
    s.family = guarded(c["family"], [&] { return parse_family(c["family"].as_string()); });
    Cursor params = c["params"];
    params.expect_array();
    for (std::size_t k = 0; k < params.size(); ++k) s.params.push_back(static_cast<int>(params[k].as_int()));
    guarded(c, [&] {
        s.validate();
        return 0;
    });
    return s;
}

json to_json(const LieAlgebra& alg) {
    if (alg.has_matrices()) {
        json basis = json::array();
        for (const auto& b : alg.basis()) basis.push_back(to_json(b));
        return {{"name", alg.name()}, {"ambient_size", alg.ambient_size()}, {"basis", basis}};
    }
    json sc = json::array();
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t j = 0; j < alg.dim(); ++j)
            if (!is_zero(alg.structure(i, j)))
                sc.push_back({{"i", i}, {"j", j}, {"coeffs", to_json(alg.structure(i, j))}});
    return {{"name", alg.name()}, {"dim", alg.dim()}, {"structure_constants", sc}};
}

LieAlgebra read_algebra(const Cursor& c) {
    c.expect_object();
    std::string name = c["name"].as_string();
    if (c.has("basis")) {
        const std::size_t n = read_size(c["ambient_size"]);
        Cursor basis = c["basis"];
        basis.expect_array();
        std::vector<Matrix> ms;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            Matrix m = read_matrix(basis[k]);
            if (m.rows() != n || m.cols() != n)
                basis[k].fail("expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
            ms.push_back(std::move(m));
        }
        return guarded(c, [&] { return LieAlgebra::from_matrices(name, std::move(ms)); });
    }
    if (c.has("structure_constants")) {
        const std::size_t d = read_size(c["dim"]);
        StructureTable table(d, std::vector<Vector>(d, Vector(d)));
        Cursor sc = c["structure_constants"];
        sc.expect_array();
        for (std::size_t k = 0; k < sc.size(); ++k) {
            Cursor e = sc[k];
            std::size_t i = read_size(e["i"]), j = read_size(e["j"]);
            if (i >= d) e["i"].fail("index out of range");
            if (j >= d) e["j"].fail("index out of range");
            table[i][j] = read_vector(e["coeffs"], d);
        }
        return LieAlgebra::from_structure_constants(name, d, std::move(table));
    }
    c.fail("algebra needs either 'basis' or 'structure_constants'");
}

json to_json(const HermitianPair& p) {
    return {{"spec", to_json(p.spec)},
            {"id", p.spec.id()},
            {"g", to_json(p.g)},
            {"k", to_json(p.k)},
            {"p", to_json(p.p)},
            {"z", to_json(p.z)},
            {"lambda", to_json(p.lambda)},
            {"p_plus", to_json(p.p_plus)},
            {"p_minus", to_json(p.p_minus)},
            {"complex_dim", p.complex_dim()}};
}

HermitianPair read_hermitian_pair(const Cursor& c) {
    HermitianPair p;
    p.spec = read_pair_spec(c["spec"]);
    p.g = read_algebra(c["g"]);
    const std::size_t d = p.g.dim();
    p.k = read_canonical_subspace(c["k"], d);
    p.p = read_canonical_subspace(c["p"], d);
    p.z = read_vector(c["z"], d);
    p.lambda = read_rational(c["lambda"]);
    p.p_plus = read_canonical_subspace(c["p_plus"], d);
    p.p_minus = read_canonical_subspace(c["p_minus"], d);
    return p;
}

json to_json(const TargetAlgebra& t) {
    if (!t.builtin().empty()) return {{"builtin", t.builtin()}, {"n", t.n()}};
    json j = to_json(t.algebra());
    // the stored name carries no hash; custom() recomputes it on reading
    return j;
}

TargetAlgebra read_target(const Cursor& c) {
    c.expect_object();
    if (c.has("builtin")) {
        std::string b = c["builtin"].as_string();
        std::size_t n = read_size(c["n"]);
        if (b == "gl") return guarded(c, [&] { return TargetAlgebra::gl(n); });
        if (b == "sl") return guarded(c, [&] { return TargetAlgebra::sl(n); });
        c["builtin"].fail("unknown builtin '" + b + "' (expected gl or sl)");
    }
    LieAlgebra alg = read_algebra(c);
    return guarded(c, [&] { return TargetAlgebra::custom(std::move(alg)); });
}

json eta_to_json(const BundleContext& ctx) {
    json images = json::array();
    for (const auto& img : ctx.images()) images.push_back(to_json(img));
    return {{"pair", to_json(ctx.pair().spec)}, {"target", to_json(ctx.target())}, {"images", images}};
}

EtaInput read_eta(const Cursor& c, const std::optional<PairSpec>& pair_override,
                  const std::optional<TargetAlgebra>& target_override) {
    c.expect_object();
    std::optional<PairSpec> pair = pair_override;
    if (c.has("pair")) {
        PairSpec in_file = read_pair_spec(c["pair"]);
        if (pair && !(*pair == in_file))
            c["pair"].fail("pair " + in_file.id() + " disagrees with --pair " + pair->id());
        pair = in_file;
    }
    if (!pair) c.fail("no pair given (field 'pair' or --pair)");

    std::optional<TargetAlgebra> target = target_override;
    if (c.has("target")) {
        TargetAlgebra in_file = read_target(c["target"]);
        if (target && target->id() != in_file.id())
            c["target"].fail("target " + in_file.id() + " disagrees with --target " + target->id());
        target = std::move(in_file);
    }
    if (!target) c.fail("no target given (field 'target' or --target)");

    Cursor imgs = c["images"];
    imgs.expect_array();
    std::vector<LieElement> images;
    const std::size_t dh = target->dim();
    for (std::size_t k = 0; k < imgs.size(); ++k) {
        Cursor e = imgs[k];
        if (e.value().is_object()) {
            Matrix m = read_matrix(e["matrix"]);
            if (!target->algebra().has_matrices()) e.fail("target has no matrix realization");
            auto coords = guarded(e, [&] { return target->algebra().try_coordinates(m); });
            if (!coords) e["matrix"].fail("matrix is not in the target algebra");
            images.push_back(std::move(*coords));
        } else {
            images.push_back(read_vector(e, dh));
        }
    }
    return {std::move(*pair), std::move(*target), std::move(images)};
}

json to_json(const ZkDecomposition& d) {
    json comps = json::array();
    for (const auto& [w, s] : d.components) comps.push_back({{"weight", w}, {"basis", to_json(s)}});
    return {{"context", d.context}, {"components", comps}};
}

ZkDecomposition read_decomposition(const Cursor& c) {
    ZkDecomposition d;
    d.context = c["context"].as_string();
    Cursor comps = c["components"];
    comps.expect_array();
    for (std::size_t k = 0; k < comps.size(); ++k) {
        Cursor e = comps[k];
        Cursor basis = e["basis"];
        basis.expect_array();
        if (basis.size() == 0) basis.fail("empty weight component");
        std::size_t ambient = basis[0].size();
        d.components.emplace(e["weight"].as_int(), read_canonical_subspace(basis, ambient));
    }
    return d;
}

std::string_view sign_symbol(Sign s) { return s == Sign::Plus ? "+" : "-"; }

Sign read_sign(const Cursor& c) {
    std::string s = c.as_string();
    if (s == "+" || s == "plus") return Sign::Plus;
    if (s == "-" || s == "minus") return Sign::Minus;
    c.fail("expected \"+\" or \"-\"");
}

json to_json(const InvariantSpace& s) {
    return {{"sign", sign_symbol(s.sign)},
            {"tensor_dims", {s.dim_h, s.dim_p}},
            {"basis", to_json(s.basis)},
            {"context", s.context}};
}

InvariantSpace read_invariant_space(const Cursor& c) {
    InvariantSpace s;
    s.sign = read_sign(c["sign"]);
    Cursor dims = c["tensor_dims"];
    if (dims.size() != 2) dims.fail("expected [dim_h, dim_p]");
    s.dim_h = read_size(dims[0]);
    s.dim_p = read_size(dims[1]);
    s.basis = read_canonical_subspace(c["basis"], s.dim_h * s.dim_p);
    s.context = c.has("context") ? c["context"].as_string() : std::string();
    return s;
}

json to_json(const InvariantElement& e) {
    return {{"sign", sign_symbol(e.sign)},
            {"tensor_dims", {e.dim_h, e.dim_p}},
            {"coords", to_json(e.coords)},
            {"context", e.context}};
}

InvariantElement read_invariant_element(const Cursor& c) {
    InvariantElement e;
    e.sign = read_sign(c["sign"]);
    Cursor dims = c["tensor_dims"];
    if (dims.size() != 2) dims.fail("expected [dim_h, dim_p]");
    e.dim_h = read_size(dims[0]);
    e.dim_p = read_size(dims[1]);
    e.coords = read_vector(c["coords"], e.dim_h * e.dim_p);
    e.context = c.has("context") ? c["context"].as_string() : std::string();
    return e;
}

ModuliTriple read_triple(const Cursor& c, std::shared_ptr<const BundleContext> ctx,
                         std::optional<Kind> kind_override) {
    c.expect_object();
    std::optional<Kind> kind = kind_override;
    if (c.has("kind")) {
        Kind k = guarded(c["kind"], [&] { return parse_kind(c["kind"].as_string()); });
        if (kind && *kind != k) c["kind"].fail("kind disagrees with --kind");
        kind = k;
    }
    if (!kind) c.fail("no kind given (field 'kind' or --kind)");

    auto element = [&](const Cursor& e, Sign sign) {
        if (e.value().is_object()) {
            InvariantSpace sp = invariant_space(*ctx, sign);
            Vector coeffs = read_vector(e["basis_coords"], sp.dim());
            return sp.element(coeffs);
        }
        const std::size_t n = ctx->target().dim() * ctx->pair().p_sign(sign).dim();
        return tensor_element(*ctx, sign, read_vector(e, n));
    };
    ModuliTriple t;
    t.kind = *kind;
    t.beta = element(c["beta"], Sign::Plus);
    t.phi = element(c["phi"], phi_sign(*kind));
    t.ctx = std::move(ctx);
    return t;
}

json to_json(const ModuliTriple& t) {
    return {{"kind", kind_name(t.kind)},
            {"eta", eta_to_json(*t.ctx)},
            {"beta", to_json(t.beta.coords)},
            {"phi", to_json(t.phi.coords)}};
}

json to_json(const QuadraticSystem& s) {
    json eqs = json::array();
    for (const auto& eq : s.equations) {
        json monos = json::array();
        for (const auto& [key, coeff] : eq.terms)
            monos.push_back({{"vars", {s.variables[key.first], s.variables[key.second]}},
                             {"coeff", to_json(coeff)}});
        json e = {{"monomials", monos}, {"provenance", eq.provenance}};
        if (!eq.merged.empty()) e["merged"] = eq.merged;
        eqs.push_back(std::move(e));
    }
    return {{"kind", kind_name(s.kind)},
            {"variables", s.variables},
            {"equations", eqs},
            {"pruned", s.pruned},
            {"context", {{"pair", s.pair_id}, {"eta", s.context}}}};
}

QuadraticSystem read_system(const Cursor& c) {
    QuadraticSystem s;
    s.kind = guarded(c["kind"], [&] { return parse_kind(c["kind"].as_string()); });
    Cursor vars = c["variables"];
    vars.expect_array();
    std::map<std::string, std::size_t> index;
    for (std::size_t k = 0; k < vars.size(); ++k) {
        std::string v = vars[k].as_string();
        const std::size_t expected_x = s.num_x + 1;
        if (v == "x" + std::to_string(expected_x) && s.num_y == 0) ++s.num_x;
        else if (v == "y" + std::to_string(s.num_y + 1)) ++s.num_y;
        else vars[k].fail("expected variables x1..xr followed by y1..ys");
        index[v] = k;
        s.variables.push_back(v);
    }
    Cursor eqs = c["equations"];
    eqs.expect_array();
    for (std::size_t k = 0; k < eqs.size(); ++k) {
        Cursor e = eqs[k];
        Equation eq;
        eq.provenance = e["provenance"].as_string();
        if (e.has("merged")) {
            Cursor m = e["merged"];
            m.expect_array();
            for (std::size_t q = 0; q < m.size(); ++q) eq.merged.push_back(m[q].as_string());
        }
        Cursor monos = e["monomials"];
        monos.expect_array();
        for (std::size_t q = 0; q < monos.size(); ++q) {
            Cursor mono = monos[q];
            Cursor mv = mono["vars"];
            if (mv.size() != 2) mv.fail("a quadratic monomial has exactly two variables");
            std::size_t ab[2];
            for (std::size_t r = 0; r < 2; ++r) {
                auto it = index.find(mv[r].as_string());
                if (it == index.end()) mv[r].fail("unknown variable");
                ab[r] = it->second;
            }
            auto key = std::minmax(ab[0], ab[1]);
            Complex coeff = read_complex(mono["coeff"]);
            if (coeff.is_zero()) mono["coeff"].fail("zero coefficient");
            if (!eq.terms.emplace(std::make_pair(key.first, key.second), coeff).second)
                mono.fail("repeated monomial");
        }
        s.equations.push_back(std::move(eq));
    }
    Cursor pruned = c["pruned"];
    pruned.expect_array();
    for (std::size_t k = 0; k < pruned.size(); ++k) s.pruned.push_back(pruned[k].as_string());
    Cursor ctx = c["context"];
    s.pair_id = ctx["pair"].as_string();
    s.context = ctx["eta"].as_string();
    return s;
}

json to_json(const SolutionSet& s) {
    json lines = json::array();
    for (const auto& l : s.lines)
        lines.push_back({{"normal", {to_json(l.a), to_json(l.b)}}, {"multiplicity", l.multiplicity}});
    json j = {{"shape", shape_name(s.shape)},
              {"variables", s.variables},
              {"lines", lines},
              {"description", s.describe()}};
    if (s.conic) {
        json monos = json::array();
        for (const auto& [key, coeff] : s.conic->terms)
            monos.push_back({{"vars", {s.variables[key.first], s.variables[key.second]}},
                             {"coeff", to_json(coeff)}});
        j["conic"] = monos;
    }
    return j;
}

SolutionSet read_solution(const Cursor& c) {
    SolutionSet s;
    std::string shape = c["shape"].as_string();
    if (shape == "point") s.shape = SolutionSet::Shape::Point;
    else if (shape == "lines") s.shape = SolutionSet::Shape::Lines;
    else if (shape == "conic") s.shape = SolutionSet::Shape::Conic;
    else if (shape == "full") s.shape = SolutionSet::Shape::Full;
    else c["shape"].fail("unknown shape");
    Cursor vars = c["variables"];
    vars.expect_array();
    std::map<std::string, std::size_t> index;
    for (std::size_t k = 0; k < vars.size(); ++k) {
        s.variables.push_back(vars[k].as_string());
        index[s.variables.back()] = k;
    }
    Cursor lines = c["lines"];
    lines.expect_array();
    for (std::size_t k = 0; k < lines.size(); ++k) {
        Cursor l = lines[k];
        Cursor normal = l["normal"];
        if (normal.size() != 2) normal.fail("expected [a, b]");
        s.lines.push_back({read_complex(normal[0]), read_complex(normal[1]),
                           static_cast<int>(l["multiplicity"].as_int())});
    }
    if (c.has("conic")) {
        Equation eq;
        Cursor monos = c["conic"];
        monos.expect_array();
        for (std::size_t q = 0; q < monos.size(); ++q) {
            Cursor mv = monos[q]["vars"];
            if (mv.size() != 2) mv.fail("expected two variables");
            auto a = index.find(mv[0].as_string()), b = index.find(mv[1].as_string());
            if (a == index.end() || b == index.end()) mv.fail("unknown variable");
            auto key = std::minmax(a->second, b->second);
            eq.terms[{key.first, key.second}] = read_complex(monos[q]["coeff"]);
        }
        s.conic = std::move(eq);
    }
    return s;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace hsalg
