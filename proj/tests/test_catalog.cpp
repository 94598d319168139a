#include <doctest.h>

#include "support.hpp"

using namespace testing;

TEST_CASE("CP1: k, lambda and p_plus") {
    auto pair = shared_pair({Family::Grassmannian, {1, 1}});
    // g basis is H0, X, Y
    CHECK(pair->k == Subspace::span(3, std::vector<Vector>{{1, 0, 0}}));
    CHECK(pair->z == Vector{1, 0, 0});
    CHECK(pair->lambda == 2);
    // X - iY = 2 E12 spans p_plus, X + iY = -2 E21 spans p_minus
    CHECK(pair->p_plus.contains(Vector{0, 1, gi(0, -1)}));
    CHECK(pair->p_minus.contains(Vector{0, 1, gi(0, 1)}));
    Matrix e12 = pair->g.to_matrix(pair->p_plus[0]);
    CHECK(e12(0, 1) != Complex(0));
    CHECK(e12(0, 0) == Complex(0));
    CHECK(e12(1, 0) == Complex(0));
}

TEST_CASE("catalog dimensions") {
    CHECK(shared_pair({Family::Grassmannian, {1, 2}})->p.dim() == 4);
    CHECK(shared_pair({Family::Grassmannian, {1, 2}})->complex_dim() == 2);
    CHECK(shared_pair({Family::Quadric, {3}})->complex_dim() == 3);
    CHECK(shared_pair({Family::SpUn, {2}})->complex_dim() == 3);
    auto g22 = shared_pair({Family::Grassmannian, {2, 2}});
    CHECK(g22->complex_dim() == 4);
    CHECK(verify_pair(*g22).passed());
}

TEST_CASE("pair specs") {
    CHECK(parse_pair_id("grassmannian(1,2)") == PairSpec{Family::Grassmannian, {1, 2}});
    CHECK(PairSpec{Family::So2nUn, {3}}.id() == "so2n_un(3)");
    CHECK_THROWS_AS(build_pair({Family::Quadric, {2}}), ParameterError);
    CHECK_THROWS_AS(build_pair({Family::Grassmannian, {0, 2}}), ParameterError);
    CHECK_THROWS_AS(build_pair({Family::So2nUn, {1}}), ParameterError);
    CHECK_THROWS_AS(build_pair({Family::SpUn, {1, 2}}), ParameterError);
    CHECK_THROWS_AS(parse_pair_id("torus(3)"), ParameterError);
    CHECK(expected_complex_dim({Family::So2nUn, {4}}) == 6);
    CHECK(catalog_families().size() == 4);
}

TEST_CASE("curvature at the base point") {
    auto pair = shared_pair({Family::Grassmannian, {1, 1}});
    Vector x{0, 1, 0}, y{0, 0, 1};
    CHECK(curvature_at_base(*pair, x, y) == Vector{2, 0, 0});
    CHECK(is_zero(curvature_at_base(*pair, x, x)));
    CHECK(curvature_at_base(*pair, y, x) == Vector{-2, 0, 0});
    CHECK_THROWS_AS(curvature_at_base(*pair, Vector{1, 0, 0}, y), DomainError);
}

TEST_CASE("curvature is bilinear, antisymmetric and K-equivariant") {
    for (PairSpec spec : {PairSpec{Family::Grassmannian, {1, 2}}, PairSpec{Family::Quadric, {3}}}) {
        auto pair = shared_pair(spec);
        const auto& g = pair->g;
        std::mt19937_64 rng(5);
        for (std::size_t a = 0; a < pair->p.dim(); ++a)
            for (std::size_t b = 0; b < pair->p.dim(); ++b) {
                const auto& pa = pair->p[a];
                const auto& pb = pair->p[b];
                CHECK(curvature_at_base(*pair, pa, pb) == scaled(curvature_at_base(*pair, pb, pa), Complex(-1)));
                for (std::size_t j = 0; j < pair->k.dim(); ++j) {
                    const auto& x = pair->k[j];
                    Vector lhs = add(curvature_at_base(*pair, g.bracket(x, pa), pb),
                                     curvature_at_base(*pair, pa, g.bracket(x, pb)));
                    CHECK(lhs == g.bracket(x, curvature_at_base(*pair, pa, pb)));
                }
            }
        Complex s = random_gaussian(rng, 3, false);
        Vector u = add(pair->p[0], scaled(pair->p[1], s));
        CHECK(curvature_at_base(*pair, u, pair->p[2]) ==
              add(curvature_at_base(*pair, pair->p[0], pair->p[2]),
                  scaled(curvature_at_base(*pair, pair->p[1], pair->p[2]), s)));
    }
}

TEST_CASE("corrupted pair fails the eigenvalue checks") {
    HermitianPair bad = *shared_pair({Family::Grassmannian, {1, 2}});
    // mix p_plus with p_minus
    std::vector<Vector> mixed{add(bad.p_plus[0], bad.p_minus[0]), bad.p_plus[1]};
    bad.p_plus = Subspace::span(bad.g.dim(), mixed);
    Report r = verify_pair(bad);
    CHECK_FALSE(r.passed());
    CHECK_FALSE(r.find("p_plus_eigenvalue")->passed);
}

TEST_CASE("structural properties across the catalog") {
    for (const auto& spec : acceptance_catalog()) {
        CAPTURE(spec.id());
        auto pair = shared_pair(spec);
        Report r = verify_pair(*pair);
        CHECK(r.passed());
        CHECK(pair->lambda > 0);
        // minimal polynomial of ad(z)|p is t^2 + lambda^2
        Vector mp = minimal_polynomial(ad_z_on_p(*pair));
        CHECK(mp == Vector{Complex(pair->lambda * pair->lambda), 0, 1});
        CHECK(pair->p_plus.conjugated() == pair->p_minus);
    }
}
