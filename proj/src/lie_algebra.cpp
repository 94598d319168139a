#include "hsalg/lie_algebra.hpp"

#include <sstream>

namespace hsalg {

namespace {

std::string triple_name(std::size_t i, std::size_t j, std::size_t k) {
    std::ostringstream os;
    os << "(" << i << "," << j << "," << k << ")";
    return os.str();
}

// Lists the first few offenders and the total.
std::string summarize(const std::vector<std::string>& items) {
    if (items.empty()) return {};
    std::ostringstream os;
    const std::size_t shown = std::min<std::size_t>(items.size(), 8);
    for (std::size_t k = 0; k < shown; ++k) os << (k ? " " : "") << items[k];
    if (items.size() > shown) os << " ... (" << items.size() << " total)";
    return os.str();
}

} // namespace

LieAlgebra LieAlgebra::from_matrices(std::string name, std::vector<Matrix> basis) {
    LieAlgebra alg;
    alg.name_ = std::move(name);
    alg.dim_ = basis.size();
    if (basis.empty()) {
        alg.compute_gram();
        return alg;
    }
    const std::size_t n = basis.front().rows();
    for (const auto& b : basis)
        if (!b.is_square() || b.rows() != n)
            throw ShapeError("algebra '" + alg.name_ + "': basis matrices must all be " +
                             std::to_string(n) + "x" + std::to_string(n));
    if (n == 0) throw ShapeError("algebra '" + alg.name_ + "': empty matrices");
    alg.ambient_ = n;
    alg.basis_ = std::move(basis);
    const std::size_t d = alg.dim_;

    std::vector<Vector> flat;
    flat.reserve(d);
    for (const auto& b : alg.basis_) flat.push_back(b.entries());
    auto e = echelon(Matrix::from_rows(flat, n * n));
    alg.independent_ = e.pivots.size() == d;
    if (alg.independent_) {
        alg.probe_positions_ = e.pivots;
        Matrix probe(d, d);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t k = 0; k < d; ++k)
                probe(r, k) = alg.basis_[k].entries()[alg.probe_positions_[r]];
        auto inv = inverse(probe);
        if (!inv) throw StructureError("probe submatrix unexpectedly singular");
        alg.probe_inverse_ = std::move(*inv);
    }

    alg.table_.assign(d, std::vector<Vector>(d, Vector(d)));
    alg.closed_.assign(d, std::vector<bool>(d, true));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            Matrix c = commutator(alg.basis_[i], alg.basis_[j]);
            if (auto coords = alg.try_coordinates(c)) {
                alg.table_[j][i] = scaled(*coords, Complex(-1));
                alg.table_[i][j] = std::move(*coords);
            } else {
                alg.closed_[i][j] = alg.closed_[j][i] = false;
                alg.closure_failures_.emplace_back(i, j);
            }
        }
    alg.compute_gram();
    return alg;
}

LieAlgebra LieAlgebra::from_structure_constants(std::string name, std::size_t dim,
                                                StructureTable table) {
    if (table.size() != dim)
        throw ShapeError("structure table has " + std::to_string(table.size()) +
                         " rows, expected " + std::to_string(dim));
    for (const auto& row : table) {
        if (row.size() != dim) throw ShapeError("structure table row has wrong length");
        for (const auto& v : row)
            if (v.size() != dim) throw ShapeError("structure constant vector has wrong length");
    }
    LieAlgebra alg;
    alg.name_ = std::move(name);
    alg.dim_ = dim;
    alg.table_ = std::move(table);
    alg.closed_.assign(dim, std::vector<bool>(dim, true));
    alg.compute_gram();
    return alg;
}

void LieAlgebra::compute_gram() {
    const std::size_t d = dim_;
    gram_ = Matrix(d, d);
    // ad(b_a)[k][j] = c^k_{aj};  B(b_a, b_b) = sum_{k,j} ad(b_a)[k][j] ad(b_b)[j][k]
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a; b < d; ++b) {
            Complex acc;
            for (std::size_t j = 0; j < d; ++j) {
                const Vector& col_a = table_[a][j];
                for (std::size_t k = 0; k < d; ++k) {
                    if (col_a[k].is_zero()) continue;
                    const Complex& other = table_[b][k][j];
                    if (!other.is_zero()) acc.add_product(col_a[k], other);
                }
            }
            gram_(a, b) = acc;
            gram_(b, a) = acc;
        }
}

LieElement LieAlgebra::basis_element(std::size_t k) const {
    LieElement e(dim_);
    e.at(k) = 1;
    return e;
}

LieElement LieAlgebra::bracket(const LieElement& x, const LieElement& y) const {
    if (x.size() != dim_ || y.size() != dim_)
        throw ShapeError("element length does not match dim of '" + name_ + "'");
    LieElement out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero()) continue;
            if (!closed_[i][j])
                throw ClosureError("[b" + std::to_string(i) + ", b" + std::to_string(j) +
                                   "] is not in the span of the basis of '" + name_ + "'");
            Complex f = x[i] * y[j];
            const Vector& c = table_[i][j];
            for (std::size_t k = 0; k < dim_; ++k)
                if (!c[k].is_zero()) out[k].add_product(f, c[k]);
        }
    }
    return out;
}

Matrix LieAlgebra::ad_matrix(const LieElement& x) const {
    Matrix ad(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        LieElement col = bracket(x, basis_element(j));
        for (std::size_t k = 0; k < dim_; ++k) ad(k, j) = std::move(col[k]);
    }
    return ad;
}

Complex LieAlgebra::killing(const LieElement& x, const LieElement& y) const {
    if (x.size() != dim_ || y.size() != dim_) throw ShapeError("element length mismatch in killing");
    Vector gy = gram_ * y;
    Complex acc;
    for (std::size_t k = 0; k < dim_; ++k)
        if (!x[k].is_zero()) acc.add_product(x[k], gy[k]);
    return acc;
}

Subspace LieAlgebra::center() const {
    std::vector<Matrix> blocks;
    blocks.reserve(dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        Matrix m(dim_, dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t k = 0; k < dim_; ++k) m(k, i) = table_[i][j][k];
        blocks.push_back(std::move(m));
    }
    if (blocks.empty()) return Subspace(0);
    return kernel_basis(vstack(blocks));
}

std::optional<LieElement> LieAlgebra::try_coordinates(const Matrix& m) const {
    if (!has_matrices()) throw DomainError("'" + name_ + "' has no matrix realization");
    if (m.rows() != ambient_ || m.cols() != ambient_)
        throw ShapeError("matrix size does not match ambient size of '" + name_ + "'");
    LieElement coords;
    if (independent_) {
        Vector probe(dim_);
        for (std::size_t r = 0; r < dim_; ++r) probe[r] = m.entries()[probe_positions_[r]];
        coords = probe_inverse_ * probe;
    } else {
        std::vector<Vector> flat;
        for (const auto& b : basis_) flat.push_back(b.entries());
        auto sol = solve_linear(Matrix::from_columns(flat, ambient_ * ambient_), m.entries());
        if (!sol) return std::nullopt;
        coords = std::move(*sol);
    }
    if (!(to_matrix(coords) == m)) return std::nullopt;
    return coords;
}

LieElement LieAlgebra::coordinates(const Matrix& m) const {
    if (auto c = try_coordinates(m)) return *c;
    throw ClosureError("matrix is not in the span of the basis of '" + name_ + "'");
}

Matrix LieAlgebra::to_matrix(const LieElement& x) const {
    if (!has_matrices()) throw DomainError("'" + name_ + "' has no matrix realization");
    if (x.size() != dim_) throw ShapeError("element length mismatch in to_matrix");
    Matrix out(ambient_, ambient_);
    for (std::size_t k = 0; k < dim_; ++k)
        if (!x[k].is_zero()) out += basis_[k] * x[k];
    return out;
}

Report verify_algebra(const LieAlgebra& alg) {
    Report rep;
    rep.subject = "algebra " + alg.name();
    const std::size_t d = alg.dim();
    rep.add("basis_independent", alg.basis_independent(),
            alg.basis_independent() ? "" : "basis vectors are linearly dependent");

    std::vector<std::string> closure;
    for (auto [i, j] : alg.closure_failures())
        closure.push_back("[" + std::to_string(i) + "," + std::to_string(j) + "]");
    rep.add("closure", closure.empty(), summarize(closure));

    std::vector<std::string> antisym;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            const Vector& a = alg.structure(i, j);
            const Vector& b = alg.structure(j, i);
            bool ok = true;
            for (std::size_t k = 0; k < d && ok; ++k) ok = (a[k] + b[k]).is_zero();
            if (!ok) antisym.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    rep.add("antisymmetry", antisym.empty(), summarize(antisym));

    // With antisymmetry in place the Jacobiator is alternating, so strictly
    // increasing triples cover everything; otherwise check all triples.
    const bool all_triples = !antisym.empty();
    std::vector<std::string> jacobi;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = all_triples ? 0 : i + 1; j < d; ++j)
            for (std::size_t k = all_triples ? 0 : j + 1; k < d; ++k) {
                try {
                    auto bi = alg.basis_element(i), bj = alg.basis_element(j),
                         bk = alg.basis_element(k);
                    Vector sum = alg.bracket(bi, alg.structure(j, k));
                    sum = add(sum, alg.bracket(bj, alg.structure(k, i)));
                    sum = add(sum, alg.bracket(bk, alg.structure(i, j)));
                    if (!is_zero(sum)) jacobi.push_back(triple_name(i, j, k));
                } catch (const ClosureError&) {
                    // reported under closure
                }
            }
    rep.add("jacobi", jacobi.empty(), summarize(jacobi));
    return rep;
}

Subspace subalgebra_center(const LieAlgebra& alg, const Subspace& sub) {
    const std::size_t d = alg.dim();
    const std::size_t s = sub.dim();
    if (s == 0) return Subspace(d);
    std::vector<Matrix> blocks;
    for (std::size_t j = 0; j < s; ++j) {
        std::vector<Vector> cols;
        for (std::size_t i = 0; i < s; ++i) cols.push_back(alg.bracket(sub[i], sub[j]));
        blocks.push_back(Matrix::from_columns(cols, d));
    }
    Subspace coeffs = kernel_basis(vstack(blocks));
    std::vector<Vector> vectors;
    for (const auto& c : coeffs.basis()) vectors.push_back(sub.combine(c));
    return Subspace::span(d, vectors);
}

} // namespace hsalg
