#include "hsalg/target.hpp"

#include <cstdio>

namespace hsalg {

namespace {

Matrix elementary(std::size_t n, std::size_t a, std::size_t b) {
    Matrix m(n, n);
    m(a, b) = 1;
    return m;
}

std::optional<std::int64_t> as_weight(const Rational& mu) {
    if (mu.get_den() != 1 || !mu.get_num().fits_slong_p()) return std::nullopt;
    return mu.get_num().get_si();
}

} // namespace

std::string fingerprint_of(const std::string& text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

TargetAlgebra TargetAlgebra::gl(std::size_t n) {
    if (n == 0) throw ParameterError("gl(n) requires n >= 1");
    std::vector<Matrix> basis;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) basis.push_back(elementary(n, a, b));
    TargetAlgebra t;
    t.builtin_ = "gl";
    t.n_ = n;
    t.id_ = "gl(" + std::to_string(n) + ")";
    t.algebra_ = LieAlgebra::from_matrices(t.id_, std::move(basis));
    return t;
}

TargetAlgebra TargetAlgebra::sl(std::size_t n) {
    if (n < 2) throw ParameterError("sl(n) requires n >= 2");
    std::vector<Matrix> basis;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a != b) basis.push_back(elementary(n, a, b));
    for (std::size_t k = 0; k + 1 < n; ++k)
        basis.push_back(elementary(n, k, k) - elementary(n, k + 1, k + 1));
    TargetAlgebra t;
    t.builtin_ = "sl";
    t.n_ = n;
    t.id_ = "sl(" + std::to_string(n) + ")";
    t.algebra_ = LieAlgebra::from_matrices(t.id_, std::move(basis));
    return t;
}

TargetAlgebra TargetAlgebra::custom(LieAlgebra algebra) {
    Report rep = verify_algebra(algebra);
    if (!rep.passed()) {
        std::string failed;
        for (const auto& c : rep.checks)
            if (!c.passed) failed += " " + c.name + (c.detail.empty() ? "" : "[" + c.detail + "]");
        throw StructureError("custom algebra '" + algebra.name() + "' rejected:" + failed);
    }
    std::string text = algebra.name() + ":" + std::to_string(algebra.dim());
    for (const auto& row : algebra.structure_table())
        for (const auto& v : row)
            for (const auto& c : v) text += to_string(c) + ",";
    TargetAlgebra t;
    t.n_ = algebra.ambient_size();
    t.id_ = "custom:" + algebra.name() + "#" + fingerprint_of(text);
    t.algebra_ = std::move(algebra);
    return t;
}

BundleContext::BundleContext(std::shared_ptr<const HermitianPair> pair,
                             std::shared_ptr<const TargetAlgebra> target,
                             std::vector<LieElement> images)
    : pair_(std::move(pair)), target_(std::move(target)), images_(std::move(images)) {
    const std::size_t dk = pair_->k.dim();
    const std::size_t dh = target_->dim();
    if (images_.size() != dk)
        throw ShapeError("eta has " + std::to_string(images_.size()) + " images but k has dimension " +
                         std::to_string(dk));
    for (std::size_t j = 0; j < dk; ++j)
        if (images_[j].size() != dh)
            throw ShapeError("eta image " + std::to_string(j) + " has length " +
                             std::to_string(images_[j].size()) + ", target dimension is " +
                             std::to_string(dh));

    const auto& h = target_->algebra();
    for (std::size_t j = 0; j < dk; ++j) {
        ad_eta_.push_back(h.ad_matrix(images_[j]));
        ad_p_plus_.push_back(restricted_ad(*pair_, pair_->k[j], pair_->p_plus));
        ad_p_minus_.push_back(restricted_ad(*pair_, pair_->k[j], pair_->p_minus));
    }
    ad_eta_z_ = h.ad_matrix(eta(pair_->z));
    ad_z_plus_ = restricted_ad(*pair_, pair_->z, pair_->p_plus);
    ad_z_minus_ = restricted_ad(*pair_, pair_->z, pair_->p_minus);

    std::string text = pair_->spec.id() + "|" + target_->id() + "|";
    for (const auto& img : images_) {
        for (const auto& c : img) text += to_string(c) + ",";
        text += ";";
    }
    fingerprint_ = fingerprint_of(text);
}

LieElement BundleContext::eta(const LieElement& x) const {
    auto coords = pair_->k.coordinates(x);
    if (!coords) throw DomainError("eta is only defined on k");
    LieElement out(target_->dim());
    for (std::size_t j = 0; j < coords->size(); ++j) {
        const Complex& c = (*coords)[j];
        if (c.is_zero()) continue;
        for (std::size_t m = 0; m < out.size(); ++m)
            if (!images_[j][m].is_zero()) out[m].add_product(c, images_[j][m]);
    }
    return out;
}

Report verify_eta(const BundleContext& ctx) {
    Report rep;
    rep.subject = "eta " + ctx.pair().spec.id() + " -> " + ctx.target().id();
    const auto& pair = ctx.pair();
    const auto& h = ctx.target().algebra();
    const std::size_t dk = pair.k.dim();

    std::string offending;
    for (std::size_t i = 0; i < dk && offending.empty(); ++i)
        for (std::size_t j = i + 1; j < dk; ++j) {
            LieElement lhs = ctx.eta(pair.g.bracket(pair.k[i], pair.k[j]));
            LieElement rhs = h.bracket(ctx.images()[i], ctx.images()[j]);
            if (!(lhs == rhs)) {
                offending = "k-basis pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
                break;
            }
        }
    rep.add("bracket_preserving", offending.empty(), offending);

    auto spectrum = imaginary_spectrum(ctx.ad_eta_z());
    bool integral = spectrum.has_value();
    std::string detail;
    if (!spectrum) {
        detail = "ad(eta(z)) is not semisimple with spectrum in iQ";
    } else {
        detail = "weights";
        for (const auto& mu : *spectrum) {
            detail += " " + to_string(mu);
            if (!as_weight(mu)) integral = false;
        }
    }
    rep.add("zk_integral", integral, detail);

    // Lattice subtlety: integral ad-weights do not force eta(z) itself to
    // exponentiate with period 2π in the target's matrix group. Flagged only.
    if (ctx.target().algebra().has_matrices()) {
        auto own = imaginary_spectrum(h.to_matrix(ctx.eta(pair.z)));
        bool own_integral = own.has_value();
        if (own)
            for (const auto& mu : *own)
                if (!as_weight(mu)) own_integral = false;
        rep.note("defining_rep_integral", own_integral,
                 own_integral ? "" : "eta(z) has non-integral eigenvalues in the matrix realization");
    }
    return rep;
}

Report verify_eta(std::shared_ptr<const HermitianPair> pair,
                  std::shared_ptr<const TargetAlgebra> target, const EtaSpec& eta) {
    return verify_eta(BundleContext(std::move(pair), std::move(target), eta.images));
}

std::vector<std::int64_t> ZkDecomposition::weights() const {
    std::vector<std::int64_t> out;
    for (const auto& [w, _] : components) out.push_back(w);
    return out;
}

Subspace ZkDecomposition::component(std::int64_t w) const {
    auto it = components.find(w);
    if (it != components.end()) return it->second;
    std::size_t ambient = components.empty() ? 0 : components.begin()->second.ambient_dim();
    return Subspace(ambient);
}

ZkDecomposition decompose_target(const BundleContext& ctx) {
    const Matrix& a = ctx.ad_eta_z();
    auto spectrum = imaginary_spectrum(a);
    if (!spectrum) throw NonIntegralWeight("ad(eta(z)) is not diagonalizable over iQ");
    ZkDecomposition dec;
    dec.context = ctx.fingerprint();
    std::size_t total = 0;
    for (const auto& mu : *spectrum) {
        auto w = as_weight(mu);
        if (!w) throw NonIntegralWeight("weight " + to_string(mu) + " is not an integer");
        Subspace comp = kernel_basis(a - Matrix::identity(a.rows()) * Complex(Rational(0), mu));
        total += comp.dim();
        dec.components.emplace(*w, std::move(comp));
    }
    if (total != ctx.target().dim())
        throw StructureError("weight spaces do not add up to the target dimension");
    return dec;
}

} // namespace hsalg
