#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hsalg/exact.hpp"
#include "hsalg/report.hpp"

namespace hsalg {

/// Coordinates of an element in an algebra's basis.
using LieElement = Vector;

/// Structure constants as a dense table: entry (i, j) holds the coordinates of
/// [b_i, b_j].
using StructureTable = std::vector<std::vector<Vector>>;

/// A Lie algebra over Q(i) given by a basis. When the basis is a list of
/// square matrices the structure constants are derived from commutators;
/// otherwise they are supplied directly. Construction never throws on bad
/// algebraic data: defects are recorded and surfaced by verify_algebra, and
/// bracket refuses to use a pair whose commutator left the span.
class LieAlgebra {
public:
    LieAlgebra() = default;

    static LieAlgebra from_matrices(std::string name, std::vector<Matrix> basis);
    static LieAlgebra from_structure_constants(std::string name, std::size_t dim,
                                               StructureTable table);

    const std::string& name() const { return name_; }
    std::size_t dim() const { return dim_; }
    /// Size n of the n×n matrix realization, 0 for abstract algebras.
    std::size_t ambient_size() const { return ambient_; }
    bool has_matrices() const { return ambient_ > 0; }
    const std::vector<Matrix>& basis() const { return basis_; }

    const Vector& structure(std::size_t i, std::size_t j) const { return table_[i][j]; }
    const StructureTable& structure_table() const { return table_; }

    LieElement basis_element(std::size_t k) const;
    LieElement bracket(const LieElement& x, const LieElement& y) const;
    Matrix ad_matrix(const LieElement& x) const;
    Complex killing(const LieElement& x, const LieElement& y) const;
    const Matrix& killing_gram() const { return gram_; }

    /// Joint kernel of all ad(b_j): the center of the algebra.
    Subspace center() const;

    /// Coordinates of a matrix in the basis; nullopt if it is not in the span.
    std::optional<LieElement> try_coordinates(const Matrix& m) const;
    /// As try_coordinates, but throws ClosureError.
    LieElement coordinates(const Matrix& m) const;
    Matrix to_matrix(const LieElement& x) const;

    bool basis_independent() const { return independent_; }
    const std::vector<std::pair<std::size_t, std::size_t>>& closure_failures() const {
        return closure_failures_;
    }

private:
    void compute_gram();

    std::string name_;
    std::size_t dim_ = 0;
    std::size_t ambient_ = 0;
    std::vector<Matrix> basis_;
    StructureTable table_;
    Matrix gram_;
    bool independent_ = true;
    std::vector<std::pair<std::size_t, std::size_t>> closure_failures_;
    std::vector<std::vector<bool>> closed_;

    // Coordinate extraction for matrix algebras: the basis restricted to a set
    // of independent entry positions is invertible.
    std::vector<std::size_t> probe_positions_;
    Matrix probe_inverse_;
};

/// Basis independence, closure, antisymmetry and Jacobi on basis triples.
Report verify_algebra(const LieAlgebra& algebra);

/// Center of the subalgebra spanned by `sub` inside `algebra`, in the
/// coordinates of `algebra`.
Subspace subalgebra_center(const LieAlgebra& algebra, const Subspace& sub);

} // namespace hsalg
