#include <doctest.h>

#include "voa/linalg.hpp"
#include "voa/util.hpp"

using namespace voa;

namespace {

Matrix random_matrix(SplitMix64& rng, std::size_t r, std::size_t c) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m.set(i, j, Rational(rng.range(-3, 3), rng.range(1, 3)));
    return m;
}

}  // namespace

TEST_CASE("rref basics") {
    SUBCASE("proportional rows have rank 1") {
        Matrix m(2, 2);
        m.set(0, 0, Rational(2));
        m.set(0, 1, Rational(4));
        m.set(1, 0, Rational(1));
        m.set(1, 1, Rational(2));
        auto r = rref(m);
        CHECK(r.rank == 1);
        CHECK(r.pivots == std::vector<std::size_t>{0});
    }
    SUBCASE("identity is a fixpoint") {
        Matrix id = Matrix::identity(3);
        auto r = rref(id);
        CHECK(r.reduced == id);
        CHECK(r.rank == 3);
    }
    SUBCASE("generic 2x2 reduces to the identity") {
        Matrix m(2, 2);
        m.set(0, 0, Rational(1));
        m.set(0, 1, Rational(2));
        m.set(1, 0, Rational(3));
        m.set(1, 1, Rational(4));
        auto r = rref(m);
        CHECK(r.reduced == Matrix::identity(2));
        CHECK(r.rank == 2);
    }
}

TEST_CASE("rref is idempotent on random matrices") {
    SplitMix64 rng(3);
    for (int it = 0; it < 60; ++it) {
        Matrix m = random_matrix(rng, 1 + rng.next() % 6, 1 + rng.next() % 6);
        auto r1 = rref(m);
        auto r2 = rref(r1.reduced);
        CHECK(r1.reduced == r2.reduced);
        CHECK(r1.pivots == r2.pivots);
    }
}

TEST_CASE("kernel examples") {
    SUBCASE("zero matrix has full kernel") {
        CHECK(kernel(Matrix(2, 2)) == Subspace::full(2));
    }
    SUBCASE("identity has zero kernel") {
        CHECK(kernel(Matrix::identity(2)).is_zero());
    }
    SUBCASE("one equation in two unknowns") {
        Matrix m(1, 2);
        m.set(0, 0, Rational(1));
        m.set(0, 1, Rational(1));
        Subspace k = kernel(m);
        CHECK(k.dim() == 1);
        CHECK(k.contains(Vec{Rational(1), Rational(-1)}));
    }
}

TEST_CASE("kernel membership property on random matrices") {
    SplitMix64 rng(17);
    for (int it = 0; it < 40; ++it) {
        std::size_t r = 1 + rng.next() % 8, c = 1 + rng.next() % 8;
        Matrix m = random_matrix(rng, r, c);
        Subspace k = kernel(m);
        for (const auto& b : k.basis()) CHECK(is_zero_vec(m.apply(b)));
        // a random vector is in the kernel iff it maps to zero
        for (int t = 0; t < 5; ++t) {
            Vec v = random_small_vec(rng, c);
            CHECK(k.contains(v) == is_zero_vec(m.apply(v)));
        }
    }
}

TEST_CASE("membership examples") {
    Subspace s = Subspace::span(2, {Vec{Rational(1), Rational(0)}});
    auto c = membership(s, Vec{Rational(3), Rational(0)});
    REQUIRE(c.has_value());
    CHECK((*c)[0] == Rational(3));
    CHECK(!membership(s, Vec{Rational(0), Rational(1)}).has_value());

    Subspace t = Subspace::span(2, {Vec{Rational(1), Rational(1)}, Vec{Rational(0), Rational(2)}});
    auto c2 = membership(t, Vec{Rational(2), Rational(4)});
    REQUIRE(c2.has_value());
    // coordinates reconstruct the vector in the canonical basis
    Vec rebuilt = zero_vec(2);
    for (std::size_t i = 0; i < t.dim(); ++i) axpy(rebuilt, (*c2)[i], t.basis()[i]);
    CHECK(rebuilt == Vec{Rational(2), Rational(4)});
    CHECK_THROWS_AS((void)membership(t, Vec{Rational(1)}), input_error);
}

TEST_CASE("intersection examples and dimension formula") {
    SUBCASE("self intersection") {
        Subspace a = Subspace::span(3, {Vec{Rational(1), Rational(2), Rational(0)}});
        CHECK(intersect(a, a) == a);
    }
    SUBCASE("complementary lines meet in zero") {
        Subspace a = Subspace::span(2, {Vec{Rational(1), Rational(0)}});
        Subspace b = Subspace::span(2, {Vec{Rational(0), Rational(1)}});
        CHECK(intersect(a, b).is_zero());
    }
    SUBCASE("planes in dimension three") {
        Subspace a = Subspace::span(3, {Vec{Rational(1), Rational(0), Rational(0)},
                                        Vec{Rational(0), Rational(1), Rational(0)}});
        Subspace b = Subspace::span(3, {Vec{Rational(0), Rational(1), Rational(0)},
                                        Vec{Rational(0), Rational(0), Rational(1)}});
        Subspace m = intersect(a, b);
        CHECK(m.dim() == 1);
        CHECK(m.contains(Vec{Rational(0), Rational(1), Rational(0)}));
    }
    SUBCASE("dim(a) + dim(b) = dim(a+b) + dim(a meet b) on random subspaces") {
        SplitMix64 rng(23);
        for (int it = 0; it < 40; ++it) {
            std::size_t n = 2 + rng.next() % 5;
            std::vector<Vec> ga, gb;
            for (std::size_t i = 0; i < 1 + rng.next() % n; ++i)
                ga.push_back(random_small_vec(rng, n));
            for (std::size_t i = 0; i < 1 + rng.next() % n; ++i)
                gb.push_back(random_small_vec(rng, n));
            Subspace a = Subspace::span(n, ga), b = Subspace::span(n, gb);
            CHECK(a.dim() + b.dim() == (a + b).dim() + intersect(a, b).dim());
        }
    }
    SUBCASE("ambient mismatch is an input error") {
        CHECK_THROWS_AS(intersect(Subspace::full(2), Subspace::full(3)), input_error);
    }
}

TEST_CASE("canonical form makes equality syntactic") {
    // two generating sets of the same plane
    Subspace a = Subspace::span(3, {Vec{Rational(1), Rational(1), Rational(0)},
                                    Vec{Rational(0), Rational(0), Rational(1)}});
    Subspace b = Subspace::span(3, {Vec{Rational(2), Rational(2), Rational(5)},
                                    Vec{Rational(-1), Rational(-1), Rational(3)}});
    CHECK(a == b);
}

TEST_CASE("solve") {
    Matrix m(2, 2);
    m.set(0, 0, Rational(1));
    m.set(0, 1, Rational(2));
    m.set(1, 0, Rational(3));
    m.set(1, 1, Rational(4));
    auto x = solve(m, Vec{Rational(5), Rational(11)});
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == Vec{Rational(5), Rational(11)});
    // inconsistent system
    Matrix s(2, 1);
    s.set(0, 0, Rational(1));
    s.set(1, 0, Rational(1));
    CHECK(!solve(s, Vec{Rational(0), Rational(1)}).has_value());
}
