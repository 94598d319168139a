#include <doctest.h>

#include "support.hpp"

using namespace testing;

namespace {

LieAlgebra su2() {
    Matrix h0{{gi(0, 1), 0}, {0, gi(0, -1)}};
    Matrix x{{0, 1}, {-1, 0}};
    Matrix y{{0, gi(0, 1)}, {gi(0, 1), 0}};
    return LieAlgebra::from_matrices("su(2)", {h0, x, y});
}

} // namespace

TEST_CASE("su(2) brackets, ad and Killing form") {
    LieAlgebra g = su2();
    auto h0 = g.basis_element(0), x = g.basis_element(1), y = g.basis_element(2);
    CHECK(g.bracket(h0, x) == scaled(y, Complex(2)));
    CHECK(is_zero(g.bracket(x, x)));
    CHECK(g.killing(h0, h0) == Complex(-8));
    CHECK(g.killing(h0, x) == Complex(0));
    CHECK(g.ad_matrix(h0) == Matrix{{0, 0, 0}, {0, 0, -2}, {0, 2, 0}});
    CHECK(g.ad_matrix(zero_vector(3)).is_zero());
    CHECK(g.center().dim() == 0);
    CHECK(verify_algebra(g).passed());
}

TEST_CASE("gl(2) elementary brackets") {
    auto target = TargetAlgebra::gl(2);
    const auto& gl2 = target.algebra();
    // basis E11, E12, E21, E22
    CHECK(gl2.bracket(gl2.basis_element(2), gl2.basis_element(1)) == Vector{-1, 0, 0, 1});
    CHECK(gl2.center().dim() == 1);
}

TEST_CASE("abelian algebra is its own center") {
    auto a = LieAlgebra::from_matrices("diag", {Matrix{{1, 0}, {0, 0}}, Matrix{{0, 0}, {0, 1}}});
    CHECK(a.center().dim() == 2);
}

TEST_CASE("Killing form properties on su(3)") {
    auto pair = shared_pair({Family::Grassmannian, {1, 2}});
    const LieAlgebra& g = pair->g;
    const std::size_t d = g.dim();
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            auto x = g.basis_element(a), y = g.basis_element(b);
            CHECK(g.killing(x, y) == g.killing(y, x));
            for (std::size_t c = 0; c < d; c += 3) {
                auto z = g.basis_element(c);
                CHECK((g.killing(g.bracket(z, x), y) + g.killing(x, g.bracket(z, y))).is_zero());
            }
            // ad is a homomorphism
            if (a < 3 && b < 3) {
                Matrix lhs = g.ad_matrix(g.bracket(x, y));
                Matrix ax = g.ad_matrix(x), ay = g.ad_matrix(y);
                CHECK(lhs == ax * ay - ay * ax);
            }
        }
    CHECK(rank(g.killing_gram()) == d);
}

TEST_CASE("verify_algebra negative controls") {
    Matrix x{{0, 1}, {-1, 0}};
    auto dup = LieAlgebra::from_matrices("dup", {x, x});
    Report r = verify_algebra(dup);
    CHECK_FALSE(r.find("basis_independent")->passed);

    auto open = LieAlgebra::from_matrices("open", {Matrix{{0, 1}, {0, 0}}, Matrix{{0, 0}, {1, 0}}});
    Report ro = verify_algebra(open);
    CHECK_FALSE(ro.find("closure")->passed);
    CHECK_THROWS_AS(open.bracket(open.basis_element(0), open.basis_element(1)), ClosureError);

    StructureTable t(2, std::vector<Vector>(2, Vector(2)));
    t[0][1] = {1, 0};
    t[1][0] = {1, 0}; // should be -1
    auto bad = LieAlgebra::from_structure_constants("bad", 2, t);
    Report rb = verify_algebra(bad);
    CHECK_FALSE(rb.find("antisymmetry")->passed);
    CHECK_FALSE(rb.passed());

    StructureTable diag(1, std::vector<Vector>(1, Vector{1}));
    CHECK_FALSE(verify_algebra(LieAlgebra::from_structure_constants("c11", 1, diag)).passed());
}

TEST_CASE("structure constants ingestion matches the matrix realization") {
    LieAlgebra g = su2();
    auto abstract = LieAlgebra::from_structure_constants("su2-abstract", 3, g.structure_table());
    CHECK(verify_algebra(abstract).passed());
    CHECK(abstract.killing_gram() == g.killing_gram());
    CHECK_THROWS_AS(LieAlgebra::from_structure_constants("short", 3, {}), ShapeError);
}
