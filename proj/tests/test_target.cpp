#include <doctest.h>

#include "support.hpp"

using namespace testing;

namespace {

// gl(2) coordinates of E11, E12, E21, E22
const Vector kE11{1, 0, 0, 0}, kE12{0, 1, 0, 0}, kE21{0, 0, 1, 0}, kE22{0, 0, 0, 1};

std::shared_ptr<const BundleContext> cp1_with(const Matrix& image) {
    auto pair = shared_pair({Family::Grassmannian, {1, 1}});
    return std::make_shared<const BundleContext>(pair, shared_gl(2), std::vector<LieElement>{gl_coords(image)});
}

} // namespace

TEST_CASE("builtin targets") {
    CHECK(TargetAlgebra::gl(3).dim() == 9);
    CHECK(TargetAlgebra::sl(3).dim() == 8);
    CHECK(TargetAlgebra::gl(2).id() == "gl(2)");
    CHECK(verify_algebra(TargetAlgebra::sl(3).algebra()).passed());
    CHECK_THROWS_AS(TargetAlgebra::sl(1), ParameterError);
    CHECK_THROWS_AS(TargetAlgebra::gl(0), ParameterError);
}

TEST_CASE("custom targets are verified") {
    auto sl2 = TargetAlgebra::sl(2);
    auto abstract = LieAlgebra::from_structure_constants("sl2", 3, sl2.algebra().structure_table());
    auto t = TargetAlgebra::custom(abstract);
    CHECK(t.id().rfind("custom:sl2#", 0) == 0);
    StructureTable broken(2, std::vector<Vector>(2, Vector(2)));
    broken[0][1] = {0, 1};
    CHECK_THROWS_AS(TargetAlgebra::custom(LieAlgebra::from_structure_constants("b", 2, broken)), StructureError);
}

TEST_CASE("verify_eta on CP1") {
    auto ctx = cp1_context();
    Report r = verify_eta(*ctx);
    CHECK(r.passed());
    CHECK(r.find("zk_integral")->passed);
    CHECK(r.find("defining_rep_integral")->passed);

    CHECK(verify_eta(*cp1_with(Matrix(2, 2))).passed());

    // ad eigenvalues ±i/3 are not integral
    Matrix third{{Complex(Rational(0), Rational(1, 3)), 0}, {0, 0}};
    CHECK_FALSE(verify_eta(*cp1_with(third)).find("zk_integral")->passed);

    // nilpotent image: ad is not semisimple
    CHECK_FALSE(verify_eta(*cp1_with(Matrix{{0, 1}, {0, 0}})).passed());

    // integral ad weights, half-integral eigenvalues: flagged, not rejected
    Matrix half{{Complex(Rational(0), Rational(1, 2)), 0}, {0, Complex(Rational(0), Rational(-1, 2))}};
    Report rh = verify_eta(*cp1_with(half));
    CHECK(rh.passed());
    CHECK_FALSE(rh.find("defining_rep_integral")->passed);
    CHECK(rh.find("defining_rep_integral")->advisory);
}

TEST_CASE("verify_eta names the offending basis pair") {
    auto pair = shared_pair({Family::Grassmannian, {1, 2}});
    Rep full = base_reps(*pair)[0];
    auto images = images_of(*pair, full);
    CHECK(verify_eta(BundleContext(pair, shared_gl(3), images)).passed());
    images[1] = scaled(images[1], Complex(2));
    Report r = verify_eta(BundleContext(pair, shared_gl(3), images));
    CHECK_FALSE(r.passed());
    const Check* c = r.find("bracket_preserving");
    REQUIRE(c);
    CHECK_FALSE(c->passed);
    CHECK(c->detail.find("k-basis pair (") != std::string::npos);
}

TEST_CASE("shape errors") {
    auto pair = shared_pair({Family::Grassmannian, {1, 2}});
    CHECK_THROWS_AS(BundleContext(pair, shared_gl(2), {Vector(4)}), ShapeError);
    CHECK_THROWS_AS(BundleContext(shared_pair({Family::Grassmannian, {1, 1}}), shared_gl(2), {Vector(3)}),
                    ShapeError);
    EtaSpec spec{pair->spec, "gl(2)", {}};
    CHECK_THROWS_AS(verify_eta(pair, shared_gl(2), spec), ShapeError);
}

TEST_CASE("decompose_target on CP1") {
    ZkDecomposition d = decompose_target(*cp1_context());
    CHECK(d.weights() == std::vector<std::int64_t>{-2, 0, 2});
    CHECK(d.component(-2) == Subspace::span(4, std::vector<Vector>{kE21}));
    CHECK(d.component(0) == Subspace::span(4, std::vector<Vector>{kE11, kE22}));
    CHECK(d.component(2) == Subspace::span(4, std::vector<Vector>{kE12}));
    CHECK(d.component(5).dim() == 0);

    CHECK(decompose_target(*cp1_context(Complex(2))).weights() == std::vector<std::int64_t>{-4, 0, 4});

    ZkDecomposition zero = decompose_target(*cp1_with(Matrix(2, 2)));
    CHECK(zero.weights() == std::vector<std::int64_t>{0});
    CHECK(zero.component(0).dim() == 4);

    Matrix third{{Complex(Rational(0), Rational(1, 3)), 0}, {0, 0}};
    CHECK_THROWS_AS(decompose_target(*cp1_with(third)), NonIntegralWeight);
}

TEST_CASE("decomposition properties over sampled eta") {
    std::mt19937_64 rng(21);
    for (const auto& spec : acceptance_catalog()) {
        if (spec.params[0] > 3) continue;
        auto pair = shared_pair(spec);
        for (int s = 0; s < 3; ++s) {
            Rep rep = sample_rep(*pair, rng);
            CAPTURE(spec.id());
            CAPTURE(rep.name);
            auto ctx = context_for(pair, rep);
            REQUIRE(verify_eta(*ctx).passed());
            ZkDecomposition d = decompose_target(*ctx);
            const auto& h = ctx->target().algebra();
            std::size_t total = 0;
            std::vector<Vector> all;
            for (const auto& [w, comp] : d.components) {
                total += comp.dim();
                for (const auto& v : comp.basis()) all.push_back(v);
            }
            CHECK(total == h.dim());
            CHECK(Subspace::span(h.dim(), all).dim() == h.dim());
            // weight zero contains eta(z)
            CHECK(d.component(0).contains(ctx->eta(pair->z)));
            for (const auto& [a, ca] : d.components) {
                for (const auto& [b, cb] : d.components)
                    for (const auto& u : ca.basis())
                        for (const auto& v : cb.basis()) CHECK(d.component(a + b).contains(h.bracket(u, v)));
                for (std::size_t j = 0; j < pair->k.dim(); ++j)
                    for (const auto& u : ca.basis()) CHECK(ca.contains(h.bracket(ctx->images()[j], u)));
            }
        }
    }
}

TEST_CASE("eta evaluates only on k") {
    auto ctx = cp1_context();
    CHECK(ctx->eta(Vector{2, 0, 0}) == Vector{gi(0, 2), 0, 0, gi(0, -2)});
    CHECK_THROWS_AS(ctx->eta(Vector{0, 1, 0}), DomainError);
    CHECK(ctx->fingerprint() == cp1_context()->fingerprint());
    CHECK(ctx->fingerprint() != cp1_context(Complex(2))->fingerprint());
}
