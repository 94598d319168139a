#pragma once

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hsalg/invariants.hpp"

namespace hsalg {

enum class Kind { Higgs, CoHiggs };

std::string_view kind_name(Kind k);
Kind parse_kind(std::string_view name);
/// Sign of the phi factor: p_minus for Higgs, p_plus for co-Higgs.
Sign phi_sign(Kind k);

/// Value of one of the bilinear maps.
///  Wedge: h ⊗ Λ²p_sign, index m * C(dim_p, 2) + rank of (j, l) with j < l in
///  lexicographic order.
///  Mixed: h ⊗ p_a ⊗ p_b, index m * dim_a * dim_b + j * dim_b + l.
struct WedgeValue {
    enum class Space { WedgePlus, WedgeMinus, Mixed };
    Space space = Space::Mixed;
    std::size_t dim_h = 0;
    std::size_t dim_a = 0;
    std::size_t dim_b = 0;
    Vector coords;

    bool is_zero() const { return hsalg::is_zero(coords); }
};

/// Index of (j, l), j < l, among the strictly increasing pairs of {0..n-1}.
std::size_t wedge_index(std::size_t n, std::size_t j, std::size_t l);

/// (h1⊗p1, h2⊗p2) ↦ [h1,h2] ⊗ p1∧p2 on h⊗p_plus.
WedgeValue m_plus(const BundleContext& ctx, const InvariantElement& a, const InvariantElement& b);
/// Same on h⊗p_minus.
WedgeValue m_minus(const BundleContext& ctx, const InvariantElement& a, const InvariantElement& b);
/// (h1⊗p, h2⊗q) ↦ [h1,h2] ⊗ p ⊗ q, no wedge; the signs of a and b may differ.
WedgeValue m_mixed(const BundleContext& ctx, const InvariantElement& a, const InvariantElement& b);

/// m_plus(beta, beta) == 0.
bool verify_holomorphic(const BundleContext& ctx, const InvariantElement& beta);

struct ModuliTriple {
    std::shared_ptr<const BundleContext> ctx;
    Kind kind = Kind::Higgs;
    InvariantElement beta;
    InvariantElement phi;
};

/// Invariance of beta and phi plus the three vanishing conditions for the
/// triple's kind. MismatchError when beta or phi belongs to another context.
Report verify_triple(const ModuliTriple& t);

/// The conjugation X ↦ h⁻¹ X h as a matrix on target coordinates. Requires a
/// matrix target. SingularConjugator when h is not invertible.
Matrix conjugation_matrix(const TargetAlgebra& target, const Matrix& h);

/// Moves a triple along h: images, beta and phi all go through X ↦ h⁻¹ X h.
ModuliTriple transport(const Matrix& h, const ModuliTriple& t);

/// True iff t2 is exactly the transport of t1 by h.
bool equivalent_under(const Matrix& h, const ModuliTriple& t1, const ModuliTriple& t2);

/// Randomized search for h with t2 = transport(h, t1): solves the linear
/// conditions h·X2 = X1·h and tries random points of the solution space until
/// one is invertible. Meant for small matrix targets such as gl(2).
std::optional<Matrix> find_conjugator(const ModuliTriple& t1, const ModuliTriple& t2,
                                      std::mt19937_64& rng, int attempts = 32);

/// Homogeneous quadratic equation. Monomials are keyed by variable index
/// pairs (a, b) with a <= b, where x_i has index i-1 and y_j index r+j-1.
struct Equation {
    std::map<std::pair<std::size_t, std::size_t>, Complex> terms;
    std::string provenance;
    /// Provenance of coordinates that produced the same normalized equation.
    std::vector<std::string> merged;

    friend bool operator==(const Equation&, const Equation&) = default;
};

struct QuadraticSystem {
    Kind kind = Kind::Higgs;
    std::vector<std::string> variables;
    std::size_t num_x = 0;
    std::size_t num_y = 0;
    std::vector<Equation> equations;
    /// Identically-zero codomain coordinates, as "map@coord(a..b)" ranges.
    std::vector<std::string> pruned;
    std::string pair_id;
    std::string context;

    Complex evaluate(const Equation& eq, std::span<const Complex> values) const;
    bool satisfied(std::span<const Complex> values) const;

    friend bool operator==(const QuadraticSystem&, const QuadraticSystem&) = default;
};

/// Coordinates are taken in the canonical bases of the invariant spaces:
/// beta = Σ x_i B_i, phi = Σ y_j Φ_j. One equation per codomain coordinate
/// that is not identically zero, scaled so its leading coefficient is 1;
/// coordinates giving the same equation are merged.
QuadraticSystem emit_system(const BundleContext& ctx, Kind kind);

/// The triple with beta and phi at the given variable values.
ModuliTriple system_point(std::shared_ptr<const BundleContext> ctx, Kind kind,
                          std::span<const Complex> values);

/// Zero set of a system in at most two variables.
struct SolutionSet {
    enum class Shape { Point, Lines, Conic, Full };
    struct Line {
        /// The line a·v1 + b·v2 = 0 (b = 0 in one variable).
        Complex a;
        Complex b;
        int multiplicity = 1;
        friend bool operator==(const Line&, const Line&) = default;
    };

    Shape shape = Shape::Full;
    std::vector<std::string> variables;
    std::vector<Line> lines;
    /// Irreducible over Q(i); set only when shape is Conic.
    std::optional<Equation> conic;

    bool contains(std::span<const Complex> values) const;
    std::string describe() const;
};

std::string_view shape_name(SolutionSet::Shape s);

/// Unsupported when the system has more than two variables.
SolutionSet solve_small(const QuadraticSystem& sys);

} // namespace hsalg
