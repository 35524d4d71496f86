#include <doctest.h>

#include "voa/builders.hpp"
#include "voa/classify.hpp"
#include "voa/transform.hpp"

using namespace voa;

TEST_CASE("classification of the stock fixtures") {
    SUBCASE("heisenberg: one local block") {
        ClassificationReport r = classify(build_heisenberg(2));
        CHECK(r.block_count == 1);
        CHECK(r.semilocal);
        CHECK(r.local);
        CHECK(r.agreement == ClassificationReport::Agreement::Agree);
        CHECK(r.blocks[0].indecomposable);
        CHECK(r.blocks[0].center_local);
        CHECK(r.blocks[0].v0plus.local());
        CHECK(r.blocks[0].local_within_window);
        CHECK(r.blocks[0].j_lb.ideal.is_zero());
    }
    SUBCASE("split quadratic: two local blocks, semilocal, itself not local") {
        ClassificationReport r =
            classify(build_commutative_voa(algebra_split_idempotent(), "qxq2"));
        CHECK(r.block_count == 2);
        CHECK(r.semilocal);
        CHECK(!r.local);
        for (const auto& b : r.blocks) {
            CHECK(b.indecomposable);
            CHECK(b.center_local);
            CHECK(b.v0plus.local());
            CHECK(b.local_within_window);
        }
    }
    SUBCASE("semidirect: one local block with the module as lower bound") {
        TruncatedVOA h2 = build_heisenberg(2);
        ClassificationReport r = classify(build_semidirect(h2, adjoint_module(h2), "w"));
        CHECK(r.block_count == 1);
        CHECK(r.local);
        CHECK(r.blocks[0].j_lb.ideal.dims() == std::vector<int>{0, 1, 1, 2});
        CHECK(r.blocks[0].quotient_dims == std::vector<int>{0, 1, 1, 2});
    }
    SUBCASE("Q x Q: two local blocks at central charge zero") {
        ClassificationReport r = classify(build_commutative_voa(algebra_q_x_q(), "qxq"));
        CHECK(r.block_count == 2);
        CHECK(r.semilocal);
        CHECK(!r.local);
    }
}

TEST_CASE("four-way agreement of the locality predicates on the corpus") {
    TruncatedVOA h2 = build_heisenberg(2);
    std::vector<TruncatedVOA> fixtures;
    fixtures.push_back(build_heisenberg(2));
    fixtures.push_back(build_virasoro(Rational(1, 2), 4));
    fixtures.push_back(build_virasoro_simple(Rational(1, 2), 4));
    fixtures.push_back(build_lattice_upper(2));
    fixtures.push_back(build_semidirect(h2, adjoint_module(h2), "w"));
    fixtures.push_back(build_direct_sum(h2, h2, "h2h2"));
    fixtures.push_back(build_commutative_voa(algebra_q(), "q"));
    fixtures.push_back(build_commutative_voa(algebra_q_x_q(), "qxq"));
    fixtures.push_back(build_commutative_voa(algebra_dual_numbers(), "qx2"));
    fixtures.push_back(build_commutative_voa(algebra_split_idempotent(), "qxq2"));
    fixtures.push_back(build_commutative_voa(algebra_u3_u2(), "qu3"));
    for (const auto& V : fixtures) {
        ClassificationReport r = classify(V);
        CHECK(r.equivalence_applicable);
        CHECK(r.agreement == ClassificationReport::Agreement::Agree);
        for (const auto& b : r.blocks) {
            CHECK(b.agree);
            CHECK(b.indecomposable == b.center_local);
        }
    }
}

TEST_CASE("classifying a block reports a single block") {
    TruncatedVOA h2 = build_heisenberg(2);
    TruncatedVOA W = build_direct_sum(h2, h2, "h2h2");
    ClassificationReport r = classify(W);
    for (const auto& b : r.blocks) {
        ClassificationReport rb = classify(b.block);
        CHECK(rb.block_count == 1);
        CHECK(rb.local);
    }
}

TEST_CASE("semilocal decomposition") {
    SUBCASE("direct sum splits into two local summands of equal charge") {
        TruncatedVOA h2 = build_heisenberg(2);
        auto dec = semilocal_decomposition(build_direct_sum(h2, h2, "h2h2"));
        REQUIRE(dec.size() == 2);
        for (const auto& [blk, rep] : dec) {
            CHECK(blk.central_charge == Rational(1));
            CHECK(rep.block_count == 1);
            CHECK(rep.local);
        }
    }
    SUBCASE("mismatched central charges cannot even be summed") {
        CHECK_THROWS_AS(
            build_direct_sum(build_virasoro_simple(Rational(1, 2), 6), build_heisenberg(6)),
            input_error);
    }
    SUBCASE("commutative Q x Q decomposes at charge zero") {
        auto dec = semilocal_decomposition(build_commutative_voa(algebra_q_x_q(), "qxq"));
        REQUIRE(dec.size() == 2);
        for (const auto& [blk, rep] : dec) CHECK(blk.central_charge == Rational(0));
    }
}

TEST_CASE("classification over Q refuses algebras that split only over extensions") {
    // Q[x]/(x^2 + 1): the center splits over Q(i) but not over Q
    CommAssocAlgebra gauss =
        polynomial_quotient_algebra({Rational(1), Rational(0), Rational(1)});
    TruncatedVOA V = build_commutative_voa(gauss, "gaussian");
    CHECK_THROWS_AS(classify(V), unsplittable_error);
}

TEST_CASE("a three-block mixed commutative sum") {
    TruncatedVOA mix = build_direct_sum(build_commutative_voa(algebra_q(), "q"),
                                        build_commutative_voa(algebra_q_x_q(), "qxq"),
                                        "q_plus_qxq");
    ClassificationReport r = classify(mix);
    CHECK(r.block_count == 3);
    CHECK(r.semilocal);
    CHECK(!r.local);
}

TEST_CASE("semilocal verdict is invariant under re-echelonization") {
    TruncatedVOA h2 = build_heisenberg(2);
    TruncatedVOA W = build_direct_sum(h2, h2, "h2h2");
    // change basis: mix the two weight-1 states and rescale weight-2 vectors
    std::vector<std::vector<GradedVector>> nb(W.dims.size());
    for (int w = W.n_min; w <= W.n_max; ++w) {
        std::size_t wi = static_cast<std::size_t>(w - W.n_min);
        for (int i = 0; i < W.dim(w); ++i) nb[wi].push_back(GradedVector::unit({w, i}));
    }
    nb[2][0] = GradedVector::unit({1, 0}) + GradedVector::unit({1, 1});
    nb[3][1] = Rational(3) * GradedVector::unit({2, 1});
    TruncatedVOA W2 = rebase(W, nb, W.vacuum_vector(), "h2h2_rebased");
    ClassificationReport r1 = classify(W);
    ClassificationReport r2 = classify(W2);
    CHECK(r1.semilocal == r2.semilocal);
    CHECK(r1.block_count == r2.block_count);
    CHECK(r1.local == r2.local);
}
