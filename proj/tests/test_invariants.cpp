#include <doctest.h>

#include "support.hpp"

using namespace testing;

TEST_CASE("CP1 invariant spaces") {
    auto ctx = cp1_context();
    InvariantSpace plus = invariant_space(*ctx, Sign::Plus);
    InvariantSpace minus = invariant_space(*ctx, Sign::Minus);
    // tensor index i * dim_p + j with dim_p = 1; E21 is index 2, E12 index 1
    CHECK(plus.dim() == 1);
    CHECK(plus.basis == Subspace::span(4, std::vector<Vector>{{0, 0, 1, 0}}));
    CHECK(minus.dim() == 1);
    CHECK(minus.basis == Subspace::span(4, std::vector<Vector>{{0, 1, 0, 0}}));

    auto pair = shared_pair({Family::Grassmannian, {1, 1}});
    BundleContext zero(pair, shared_gl(2), {Vector(4)});
    CHECK(invariant_space(zero, Sign::Plus).dim() == 0);
}

TEST_CASE("weight containment") {
    auto ctx = cp1_context();
    ZkDecomposition d = decompose_target(*ctx);
    InvariantSpace plus = invariant_space(*ctx, Sign::Plus);
    CHECK(verify_weight_containment(plus, d, ctx->pair()));
    CHECK(verify_weight_containment(invariant_space(*ctx, Sign::Minus), d, ctx->pair()));

    InvariantSpace empty = plus;
    empty.basis = Subspace(4);
    CHECK(verify_weight_containment(empty, d, ctx->pair()));

    InvariantElement mixed = tensor_element(*ctx, Sign::Plus, Vector{0, 1, 1, 0});
    CHECK_FALSE(weight_contained(mixed, d, ctx->pair()));
    CHECK_FALSE(is_invariant(*ctx, mixed));

    ZkDecomposition other = decompose_target(*cp1_context(Complex(2)));
    CHECK_THROWS_AS(verify_weight_containment(plus, other, ctx->pair()), MismatchError);
}

TEST_CASE("invariants are annihilated by z and by every k basis element") {
    std::mt19937_64 rng(31);
    for (const auto& spec : acceptance_catalog()) {
        if (spec.params[0] > 3) continue;
        auto pair = shared_pair(spec);
        for (int s = 0; s < 3; ++s) {
            Rep rep = sample_rep(*pair, rng);
            CAPTURE(spec.id());
            CAPTURE(rep.name);
            auto ctx = context_for(pair, rep);
            for (Sign sign : {Sign::Plus, Sign::Minus}) {
                InvariantSpace inv = invariant_space(*ctx, sign);
                CHECK(inv.basis == Subspace::span(inv.basis.ambient_dim(), inv.basis.basis()));
                for (std::size_t k = 0; k < inv.dim(); ++k) {
                    CHECK(is_invariant(*ctx, inv.basis_element(k)));
                    CHECK(is_zero(weight_operator(*ctx, sign) * inv.basis[k]));
                }
            }
        }
    }
}

TEST_CASE("plus and minus invariants have equal dimension for unitary eta") {
    for (const auto& spec : acceptance_catalog()) {
        if (spec.params[0] > 2) continue;
        auto pair = shared_pair(spec);
        for (const auto& base : base_reps(*pair)) {
            if (base.dim > 4) continue;
            for (const Rep& rep : {base, dual(base), conjugate(base), direct_sum(base, trace_char(base, 1))}) {
                if (rep.dim > 4) continue;
                CAPTURE(spec.id());
                CAPTURE(rep.name);
                auto ctx = context_for(pair, rep);
                CHECK(invariant_space(*ctx, Sign::Plus).dim() == invariant_space(*ctx, Sign::Minus).dim());
            }
        }
    }
}

TEST_CASE("transported invariants stay invariant") {
    std::mt19937_64 rng(32);
    auto pair = shared_pair({Family::Grassmannian, {1, 2}});
    auto ctx = context_for(pair, base_reps(*pair)[0]);
    InvariantSpace plus = invariant_space(*ctx, Sign::Plus);
    REQUIRE(plus.dim() > 0);
    for (int trial = 0; trial < 5; ++trial) {
        ModuliTriple t{ctx, Kind::CoHiggs, plus.element(random_vector(rng, plus.dim())),
                       plus.element(random_vector(rng, plus.dim()))};
        ModuliTriple moved = transport(random_invertible(rng, 3), t);
        CHECK(is_invariant(*moved.ctx, moved.beta));
        CHECK(is_invariant(*moved.ctx, moved.phi));
        CHECK(verify_eta(*moved.ctx).passed());
    }
}

TEST_CASE("element construction") {
    auto ctx = cp1_context();
    InvariantSpace plus = invariant_space(*ctx, Sign::Plus);
    CHECK_THROWS_AS(plus.element(Vector{1, 2}), ShapeError);
    CHECK_THROWS_AS(tensor_element(*ctx, Sign::Plus, Vector(3)), ShapeError);
    CHECK(plus.element(Vector{3}).coords == Vector{0, 0, 3, 0});
}
