#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hsalg/hss_catalog.hpp"
#include "hsalg/lie_algebra.hpp"
#include "hsalg/report.hpp"

namespace hsalg {

/// The complex Lie algebra h of the structure group.
class TargetAlgebra {
public:
    /// gl(n, C) with basis E_11, E_12, ..., E_nn (row-major).
    static TargetAlgebra gl(std::size_t n);
    /// sl(n, C): off-diagonal E_ab in row-major order, then E_kk - E_{k+1,k+1}.
    static TargetAlgebra sl(std::size_t n);
    /// Any algebra passing verify_algebra; throws StructureError otherwise.
    static TargetAlgebra custom(LieAlgebra algebra);

    const LieAlgebra& algebra() const { return algebra_; }
    std::size_t dim() const { return algebra_.dim(); }
    /// "gl(2)", "sl(3)", or "custom:<name>#<hash>".
    const std::string& id() const { return id_; }
    /// "gl", "sl", or empty for custom algebras.
    const std::string& builtin() const { return builtin_; }
    std::size_t n() const { return n_; }

private:
    LieAlgebra algebra_;
    std::string builtin_;
    std::size_t n_ = 0;
    std::string id_;
};

/// Images of the k-basis (the pair's canonical k basis, in order) under dη,
/// as coordinates in the target basis.
struct EtaSpec {
    PairSpec pair;
    std::string target_id;
    std::vector<LieElement> images;

    friend bool operator==(const EtaSpec&, const EtaSpec&) = default;
};

/// A pair, a target and dη bound together, with the operators every
/// downstream computation needs precomputed. Immutable once built.
class BundleContext {
public:
    /// Throws ShapeError when the image count or lengths are wrong.
    BundleContext(std::shared_ptr<const HermitianPair> pair,
                  std::shared_ptr<const TargetAlgebra> target,
                  std::vector<LieElement> images);

    const HermitianPair& pair() const { return *pair_; }
    const TargetAlgebra& target() const { return *target_; }
    std::shared_ptr<const HermitianPair> pair_ptr() const { return pair_; }
    std::shared_ptr<const TargetAlgebra> target_ptr() const { return target_; }
    const std::vector<LieElement>& images() const { return images_; }
    EtaSpec eta_spec() const { return {pair_->spec, target_->id(), images_}; }

    /// dη(x) for x in k, given in g coordinates. DomainError outside k.
    LieElement eta(const LieElement& x) const;

    /// ad_h(dη(k_j)).
    const Matrix& ad_eta(std::size_t j) const { return ad_eta_[j]; }
    const Matrix& ad_eta_z() const { return ad_eta_z_; }
    /// ad(k_j) restricted to p± in the basis of p±.
    const Matrix& ad_p(Sign s, std::size_t j) const {
        return s == Sign::Plus ? ad_p_plus_[j] : ad_p_minus_[j];
    }
    const Matrix& ad_z_p(Sign s) const { return s == Sign::Plus ? ad_z_plus_ : ad_z_minus_; }

    /// Stable hash of (pair id, target id, images), used to detect operands
    /// from different contexts.
    const std::string& fingerprint() const { return fingerprint_; }

private:
    std::shared_ptr<const HermitianPair> pair_;
    std::shared_ptr<const TargetAlgebra> target_;
    std::vector<LieElement> images_;
    std::vector<Matrix> ad_eta_;
    std::vector<Matrix> ad_p_plus_;
    std::vector<Matrix> ad_p_minus_;
    Matrix ad_eta_z_;
    Matrix ad_z_plus_;
    Matrix ad_z_minus_;
    std::string fingerprint_;
};

/// 64-bit FNV-1a, hex encoded.
std::string fingerprint_of(const std::string& text);

/// Bracket preservation on all k-basis pairs and integrality of the
/// ad(dη(z)) spectrum. A passing report is the precondition for everything
/// downstream.
Report verify_eta(const BundleContext& ctx);
Report verify_eta(std::shared_ptr<const HermitianPair> pair,
                  std::shared_ptr<const TargetAlgebra> target, const EtaSpec& eta);

/// Eigenspaces of ad(dη(z)) on h. A weight w labels the eigenvalue w·i, so
/// p_plus has weight +lambda.
struct ZkDecomposition {
    std::map<std::int64_t, Subspace> components;
    std::string context;

    std::vector<std::int64_t> weights() const;
    /// Component of weight w, or the zero subspace when w does not occur.
    Subspace component(std::int64_t w) const;
};

ZkDecomposition decompose_target(const BundleContext& ctx);

} // namespace hsalg
