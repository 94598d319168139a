#include <doctest.h>

#include "support.hpp"

using namespace testing;

TEST_CASE("rational and complex parsing") {
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(to_string(parse_rational("10/5")) == "2");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);

    CHECK(parse_complex("1/2-3i") == Complex(Rational(1, 2), Rational(-3)));
    CHECK(parse_complex("i") == Complex::i());
    CHECK(parse_complex("-i") == -Complex::i());
    for (const char* s : {"0", "3/2-i", "-7i", "2/3+5/7i", "i", "-1"})
        CHECK(to_string(parse_complex(s)) == s);
}

TEST_CASE("complex field operations") {
    Complex a(Rational(1, 2), Rational(-3));
    Complex b(Rational(2), Rational(1, 3));
    CHECK(a * a.inverse() == Complex(1));
    CHECK((a / b) * b == a);
    CHECK(a * a.conj() == Complex(a.norm()));
    CHECK(Complex::i() * Complex::i() == Complex(-1));
    CHECK_THROWS_AS(Complex().inverse(), DomainError);
}

TEST_CASE("gaussian square roots") {
    auto r = gaussian_sqrt(Complex(-4));
    REQUIRE(r);
    CHECK(*r * *r == Complex(-4));
    auto s = gaussian_sqrt(gi(0, 2));
    REQUIRE(s);
    CHECK(*s * *s == gi(0, 2));
    auto t = gaussian_sqrt(Complex(Rational(-9, 4)));
    REQUIRE(t);
    CHECK(*t * *t == Complex(Rational(-9, 4)));
    CHECK_FALSE(gaussian_sqrt(Complex(2)));
    CHECK_FALSE(gaussian_sqrt(gi(0, 1)));
}

TEST_CASE("rank-nullity, rref idempotence, exact kernels") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
        Matrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (rng() % 3) m(i, j) = random_gaussian(rng);
        // force some dependence
        if (r > 1)
            for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * gi(2, -1);
        Subspace ker = kernel_basis(m);
        CHECK(rank(m) + ker.dim() == c);
        CHECK(rref(rref(m)) == rref(m));
        for (const auto& v : ker.basis()) CHECK(is_zero(m * v));
    }
}

TEST_CASE("kernel basis is canonical under row mixing") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix m(3, 5);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 5; ++j) m(i, j) = random_gaussian(rng);
        Matrix p = random_invertible(rng, 3);
        CHECK(kernel_basis(p * m) == kernel_basis(m));
    }
}

TEST_CASE("subspaces") {
    Subspace s = Subspace::span(3, std::vector<Vector>{{1, 2, 0}, {2, 4, 0}, {0, 0, gi(0, 1)}});
    CHECK(s.dim() == 2);
    CHECK(s.contains(Vector{3, 6, 5}));
    CHECK_FALSE(s.contains(Vector{1, 0, 0}));
    auto c = s.coordinates(Vector{3, 6, 5});
    REQUIRE(c);
    CHECK(s.combine(*c) == Vector{3, 6, 5});
    CHECK_FALSE(s.coordinates(Vector{0, 1, 0}));
    CHECK(Subspace(3).dim() == 0);
    CHECK(Subspace::full(3).contains(s));
}

TEST_CASE("inverse and linear solve") {
    Matrix m{{1, 2}, {3, gi(4, 1)}};
    auto inv = inverse(m);
    REQUIRE(inv);
    CHECK(m * *inv == Matrix::identity(2));
    CHECK_FALSE(inverse(Matrix{{1, 2}, {2, 4}}));
    auto x = solve_linear(m, Vector{5, 6});
    REQUIRE(x);
    CHECK(m * *x == Vector{5, 6});
    CHECK_FALSE(solve_linear(Matrix{{1, 2}, {2, 4}}, Vector{1, 0}));
}

TEST_CASE("imaginary spectrum") {
    auto s = imaginary_spectrum(Matrix{{gi(0, 1), 0}, {0, gi(0, -1)}});
    REQUIRE(s);
    CHECK(s->size() == 2);
    CHECK(std::find(s->begin(), s->end(), Rational(1)) != s->end());
    CHECK(std::find(s->begin(), s->end(), Rational(-1)) != s->end());
    // nilpotent: not semisimple
    CHECK_FALSE(imaginary_spectrum(Matrix{{0, 1}, {0, 0}}));
    // real eigenvalue
    CHECK_FALSE(imaginary_spectrum(Matrix{{1, 0}, {0, 0}}));
    // rotation generator has spectrum ±i
    auto r = imaginary_spectrum(Matrix{{0, -1}, {1, 0}});
    REQUIRE(r);
    CHECK(r->size() == 2);
    CHECK(imaginary_spectrum(Matrix(0, 0)));
}
