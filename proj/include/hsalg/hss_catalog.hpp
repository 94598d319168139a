#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hsalg/exact.hpp"
#include "hsalg/lie_algebra.hpp"
#include "hsalg/report.hpp"

namespace hsalg {

enum class Family {
    Grassmannian, ///< su(p+q) / s(u(p) + u(q)), params (p, q)
    Quadric,      ///< so(n+2) / so(n) + so(2), params (n)
    SpUn,         ///< sp(n) / u(n), params (n)
    So2nUn,       ///< so(2n) / u(n), params (n)
};

/// Which half of p^C: p_plus is the +i·lambda eigenspace of ad(z).
enum class Sign { Plus, Minus };

std::string_view family_name(Family f);
Family parse_family(std::string_view name);

struct PairSpec {
    Family family = Family::Grassmannian;
    std::vector<int> params;

    /// Canonical id such as "grassmannian(1,2)"; parse_pair_id inverts it.
    std::string id() const;
    /// Throws ParameterError when the parameters are out of range.
    void validate() const;

    friend bool operator==(const PairSpec&, const PairSpec&) = default;
};

PairSpec parse_pair_id(std::string_view id);

/// Complex dimension of G/K from the closed-form family formula.
std::size_t expected_complex_dim(const PairSpec& spec);

struct FamilyInfo {
    Family family;
    std::string quotient;
    std::string constraints;
    std::string complex_dim_formula;
};
std::vector<FamilyInfo> catalog_families();

/// Algebraic record of one compact irreducible Hermitian symmetric space G/K.
/// Every subspace lives in the coordinates of g's basis; g's basis is real, so
/// complex conjugation of coordinates is the conjugation of g^C.
struct HermitianPair {
    PairSpec spec;
    LieAlgebra g;
    Subspace k;
    Subspace p;
    /// Generator of the center of k, scaled to a primitive period in the
    /// defining matrix representation and oriented so its leading coordinate
    /// is positive.
    LieElement z;
    /// ad(z) acts on p_plus by +i·lambda and on p_minus by -i·lambda.
    Rational lambda;
    Subspace p_plus;
    Subspace p_minus;

    std::size_t complex_dim() const { return p_plus.dim(); }
    const Subspace& p_sign(Sign s) const { return s == Sign::Plus ? p_plus : p_minus; }
};

/// Builds g and k from block-matrix bases, computes p as the Killing
/// complement of k, the normalized center generator z, and p±. Throws
/// ParameterError for a bad spec and StructureError if the result fails
/// verify_pair.
HermitianPair build_pair(const PairSpec& spec);

/// proj_k([a, b]) for a, b in p. Since [p, p] ⊆ k the projection is the
/// bracket itself; a nonzero p-component raises StructureError.
LieElement curvature_at_base(const HermitianPair& pair, const LieElement& a,
                             const LieElement& b);

/// Matrix of ad(z)|p in the basis of p.
Matrix ad_z_on_p(const HermitianPair& pair);

/// Matrix of ad(x)|sub for x in k and sub an ad(k)-stable subspace, in the
/// basis of sub.
Matrix restricted_ad(const HermitianPair& pair, const LieElement& x, const Subspace& sub);

Report verify_pair(const HermitianPair& pair);

} // namespace hsalg
