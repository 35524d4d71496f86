#include <doctest.h>

#include "voa/axioms.hpp"
#include "voa/builders.hpp"
#include "voa/util.hpp"

using namespace voa;

TEST_CASE("mode_apply on the free boson fixture") {
    TruncatedVOA V = build_heisenberg(2);
    GradedVector vac = V.vacuum_vector();
    GradedVector b1 = GradedVector::unit({1, 0});  // alpha(-1)1

    SUBCASE("annihilation against creation gives the vacuum") {
        CHECK(mode_apply(V, b1, 1, b1) == vac);
    }
    SUBCASE("the -1 product stacks creation operators") {
        // alpha(-1)^2 1 is the second weight-2 basis vector (reverse-lex)
        CHECK(mode_apply(V, b1, -1, b1) == GradedVector::unit({2, 1}));
    }
    SUBCASE("vacuum acts as the identity") {
        for (auto b : V.basis())
            CHECK(mode_apply(V, vac, -1, GradedVector::unit(b)) == GradedVector::unit(b));
    }
}

TEST_CASE("virasoro operators from the conformal vector") {
    TruncatedVOA V = build_heisenberg(2);
    SUBCASE("L(0) reads the grading") {
        for (auto b : V.basis())
            CHECK(virasoro_op(V, 0, GradedVector::unit(b)) ==
                  Rational(b.weight) * GradedVector::unit(b));
    }
    SUBCASE("L(1) kills alpha(-1)1") {
        CHECK(virasoro_op(V, 1, GradedVector::unit({1, 0})).is_zero());
    }
    SUBCASE("L(2) omega = (c/2) 1 at c = 1") {
        CHECK(virasoro_op(V, 2, V.omega) ==
              Rational(1, 2) * V.vacuum_vector());
    }
}

TEST_CASE("mode_apply is bilinear") {
    TruncatedVOA V = build_heisenberg(3);
    SplitMix64 rng(5);
    for (int it = 0; it < 10; ++it) {
        GradedVector a = random_graded_vector(rng, V);
        GradedVector a2 = random_graded_vector(rng, V);
        GradedVector b = random_graded_vector(rng, V);
        Rational lam(rng.range(-3, 3), 1 + rng.next() % 3);
        Rational mu(rng.range(-3, 3), 1 + rng.next() % 3);
        for (int k = -2; k <= 2; ++k) {
            GradedVector lhs = mode_apply(V, lam * a + mu * a2, k, b);
            GradedVector rhs = lam * mode_apply(V, a, k, b) + mu * mode_apply(V, a2, k, b);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("verify_axioms accepts builder output and reports deterministically") {
    TruncatedVOA V = build_heisenberg(2);
    AxiomReport r1 = verify_axioms(V);
    AxiomReport r2 = verify_axioms(V);
    CHECK(r1.ok());
    CHECK(r1.summary() == r2.summary());
    CHECK(r1.total_exact() > 0);
}

TEST_CASE("a corrupted vacuum row is reported as a failure") {
    TruncatedVOA V = build_heisenberg(2);
    // break 1(-1) on the weight-1 basis vector
    V.modes.set({0, 0, -1, 1, 0}, Rational(2) * GradedVector::unit({1, 0}));
    AxiomReport rep = verify_axioms(V);
    CHECK(!rep.ok());
    CHECK(rep.families["vacuum"].failed > 0);
}

TEST_CASE("commutative weight-zero hosts verify with zero skipped checks") {
    TruncatedVOA V = build_commutative_voa(algebra_dual_numbers(), "qx2");
    AxiomReport rep = verify_axioms(V);
    CHECK(rep.ok());
    CHECK(rep.total_skipped() == 0);
    CHECK(V.complete);
}

TEST_CASE("truncation respects the weight rule") {
    TruncatedVOA V = build_heisenberg(3);
    V.validate_entry_shapes();
    SplitMix64 rng(9);
    for (int it = 0; it < 20; ++it) {
        auto basis = V.basis();
        WeightedIndex a = basis[rng.next() % basis.size()];
        WeightedIndex b = basis[rng.next() % basis.size()];
        auto [klo, khi] = V.k_range(a.weight, b.weight);
        for (int k = klo - 2; k <= khi + 2; ++k) {
            GradedVector p =
                mode_apply(V, GradedVector::unit(a), k, GradedVector::unit(b));
            if (p.is_zero()) continue;
            CHECK(*p.homogeneous_weight() == a.weight + b.weight - k - 1);
        }
    }
}

TEST_CASE("mode_matrix agrees with mode_apply") {
    TruncatedVOA V = build_heisenberg(2);
    Matrix L1 = mode_matrix(V, V.omega, 0, 0);  // L(-1): V_0 -> V_1
    CHECK(L1.rows() == 1);
    CHECK(L1.cols() == 1);
    CHECK(L1.get(0, 0) == Rational(0));  // L(-1) kills the vacuum
    // L(0) on V_2 is twice the identity
    Matrix L0 = mode_matrix(V, V.omega, 1, 2);
    Matrix want(2, 2);
    want.set(0, 0, Rational(2));
    want.set(1, 1, Rational(2));
    CHECK(L0 == want);
}
