#pragma once

#include <memory>
#include <string>

#include "hsalg/target.hpp"

namespace hsalg {

/// A vector in h ⊗ p_sign. Tensor index of h_i ⊗ p_j is i * dim_p + j.
struct InvariantElement {
    Sign sign = Sign::Plus;
    std::size_t dim_h = 0;
    std::size_t dim_p = 0;
    Vector coords;
    /// Fingerprint of the BundleContext it was built against.
    std::string context;

    const Complex& at(std::size_t i, std::size_t j) const { return coords[i * dim_p + j]; }
    bool is_zero() const { return hsalg::is_zero(coords); }

    friend bool operator==(const InvariantElement&, const InvariantElement&) = default;
};

/// (h ⊗ p_sign)^K in canonical echelon form.
struct InvariantSpace {
    Sign sign = Sign::Plus;
    std::size_t dim_h = 0;
    std::size_t dim_p = 0;
    Subspace basis;
    std::string context;

    std::size_t dim() const { return basis.dim(); }
    /// Linear combination of the basis vectors. ShapeError on wrong length.
    InvariantElement element(std::span<const Complex> coeffs) const;
    InvariantElement basis_element(std::size_t k) const;

    friend bool operator==(const InvariantSpace&, const InvariantSpace&) = default;
};

/// dη(x) ⊗ 1 + 1 ⊗ ad(x)|p_sign acting on h ⊗ p_sign, for x = k_j.
Matrix invariance_operator(const BundleContext& ctx, Sign sign, std::size_t j);
/// Same operator for x = z.
Matrix weight_operator(const BundleContext& ctx, Sign sign);

/// Joint kernel of the invariance operators over the k basis.
InvariantSpace invariant_space(const BundleContext& ctx, Sign sign);

/// Wraps raw tensor coordinates; no invariance check.
InvariantElement tensor_element(const BundleContext& ctx, Sign sign, Vector coords);

/// Whether every invariance operator annihilates the element.
bool is_invariant(const BundleContext& ctx, const InvariantElement& e);

/// Every basis vector lies in h_{-lambda} ⊗ p_plus (sign +) or
/// h_{+lambda} ⊗ p_minus (sign -). MismatchError when the inputs come from
/// different contexts.
bool verify_weight_containment(const InvariantSpace& inv, const ZkDecomposition& dec,
                               const HermitianPair& pair);
/// Same test on a single element, for negative controls.
bool weight_contained(const InvariantElement& e, const ZkDecomposition& dec,
                      const HermitianPair& pair);

/// lambda as an integer weight; NonIntegralWeight otherwise.
std::int64_t lambda_weight(const HermitianPair& pair);

} // namespace hsalg
