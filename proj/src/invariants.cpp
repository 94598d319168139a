#include "hsalg/invariants.hpp"

namespace hsalg {

namespace {

Matrix tensor_operator(const Matrix& on_h, const Matrix& on_p) {
    return kronecker(on_h, Matrix::identity(on_p.rows())) +
           kronecker(Matrix::identity(on_h.rows()), on_p);
}

} // namespace

InvariantElement InvariantSpace::element(std::span<const Complex> coeffs) const {
    if (coeffs.size() != basis.dim())
        throw ShapeError("expected " + std::to_string(basis.dim()) + " coefficients, got " +
                         std::to_string(coeffs.size()));
    return {sign, dim_h, dim_p, basis.combine(coeffs), context};
}

InvariantElement InvariantSpace::basis_element(std::size_t k) const {
    return {sign, dim_h, dim_p, basis[k], context};
}

Matrix invariance_operator(const BundleContext& ctx, Sign sign, std::size_t j) {
    return tensor_operator(ctx.ad_eta(j), ctx.ad_p(sign, j));
}

Matrix weight_operator(const BundleContext& ctx, Sign sign) {
    return tensor_operator(ctx.ad_eta_z(), ctx.ad_z_p(sign));
}

InvariantSpace invariant_space(const BundleContext& ctx, Sign sign) {
    const std::size_t dh = ctx.target().dim();
    const std::size_t dp = ctx.pair().p_sign(sign).dim();
    const std::size_t n = dh * dp;

    // z is central in k, so its kernel is a cheap first cut; the remaining
    // operators are restricted to the running kernel.
    Subspace current = kernel_basis(weight_operator(ctx, sign));
    for (std::size_t j = 0; j < ctx.pair().k.dim() && current.dim() > 0; ++j) {
        Matrix basis = Matrix::from_columns(current.basis(), n);
        Subspace coeffs = kernel_basis(invariance_operator(ctx, sign, j) * basis);
        std::vector<Vector> next;
        for (const auto& c : coeffs.basis()) next.push_back(current.combine(c));
        current = Subspace::span(n, next);
    }
    return {sign, dh, dp, std::move(current), ctx.fingerprint()};
}

InvariantElement tensor_element(const BundleContext& ctx, Sign sign, Vector coords) {
    const std::size_t dh = ctx.target().dim();
    const std::size_t dp = ctx.pair().p_sign(sign).dim();
    if (coords.size() != dh * dp)
        throw ShapeError("tensor has " + std::to_string(coords.size()) + " coordinates, expected " +
                         std::to_string(dh * dp));
    return {sign, dh, dp, std::move(coords), ctx.fingerprint()};
}

bool is_invariant(const BundleContext& ctx, const InvariantElement& e) {
    if (e.context != ctx.fingerprint()) throw MismatchError("element belongs to another context");
    for (std::size_t j = 0; j < ctx.pair().k.dim(); ++j)
        if (!is_zero(invariance_operator(ctx, e.sign, j) * e.coords)) return false;
    return true;
}

std::int64_t lambda_weight(const HermitianPair& pair) {
    const Rational& l = pair.lambda;
    if (l.get_den() != 1 || !l.get_num().fits_slong_p())
        throw NonIntegralWeight("lambda = " + to_string(l) + " is not an integer weight");
    return l.get_num().get_si();
}

bool weight_contained(const InvariantElement& e, const ZkDecomposition& dec,
                      const HermitianPair& pair) {
    if (e.context != dec.context) throw MismatchError("element and decomposition come from different eta");
    const std::int64_t l = lambda_weight(pair);
    const Subspace target = dec.component(e.sign == Sign::Plus ? -l : l);
    for (std::size_t j = 0; j < e.dim_p; ++j) {
        Vector column(e.dim_h);
        for (std::size_t i = 0; i < e.dim_h; ++i) column[i] = e.at(i, j);
        if (!target.contains(column)) return false;
    }
    return true;
}

bool verify_weight_containment(const InvariantSpace& inv, const ZkDecomposition& dec,
                               const HermitianPair& pair) {
    if (inv.context != dec.context)
        throw MismatchError("invariant space and decomposition come from different eta");
    for (std::size_t k = 0; k < inv.dim(); ++k)
        if (!weight_contained(inv.basis_element(k), dec, pair)) return false;
    return true;
}

} // namespace hsalg
