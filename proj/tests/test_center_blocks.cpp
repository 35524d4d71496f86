#include <doctest.h>

#include "voa/builders.hpp"
#include "voa/center_blocks.hpp"

using namespace voa;

TEST_CASE("center of the stock fixtures") {
    SUBCASE("heisenberg center is the vacuum line") {
        TruncatedVOA V = build_heisenberg(2);
        CenterSubalgebra Z = center(V);
        CHECK(Z.dim() == 1);
        CHECK(Z.inclusion[0] == V.vacuum_vector());
        CHECK(Z.algebra.unit == Vec{Rational(1)});
    }
    SUBCASE("commutative hosts are their own center") {
        TruncatedVOA V = build_commutative_voa(algebra_u3_u2(), "qu3");
        CenterSubalgebra Z = center(V);
        CHECK(Z.dim() == 3);
    }
    SUBCASE("direct sum center is spanned by the two vacua") {
        TruncatedVOA h2 = build_heisenberg(2);
        TruncatedVOA W = build_direct_sum(h2, h2, "h2h2");
        CenterSubalgebra Z = center(W);
        CHECK(Z.dim() == 2);
        CHECK(Z.coordinates(GradedVector::unit({0, 0})).has_value());
        CHECK(Z.coordinates(GradedVector::unit({0, 1})).has_value());
        // the center algebra is semisimple of rank 2
        CHECK(nilradical_assoc(Z.algebra).is_zero());
        CHECK(primitive_idempotents(Z.algebra).size() == 2);
    }
    SUBCASE("lattice center is the vacuum line") {
        TruncatedVOA U = build_lattice_upper(2);
        CenterSubalgebra Z = center(U);
        CHECK(Z.dim() == 1);
        CHECK(Z.inclusion[0] == U.vacuum_vector());
    }
    SUBCASE("semidirect center is the dual numbers") {
        TruncatedVOA h2 = build_heisenberg(2);
        TruncatedVOA W = build_semidirect(h2, adjoint_module(h2), "w");
        CenterSubalgebra Z = center(W);
        CHECK(Z.dim() == 2);
        CHECK(nilradical_assoc(Z.algebra).dim() == 1);
        CHECK(is_indecomposable(W).indecomposable);
    }
}

TEST_CASE("annihilator ideals") {
    SUBCASE("the vacuum annihilates nothing") {
        TruncatedVOA V = build_heisenberg(2);
        CHECK(annihilator(V, V.vacuum_vector()).is_zero());
    }
    SUBCASE("Ann(x) in the dual numbers is span{x}") {
        TruncatedVOA V = build_commutative_voa(algebra_dual_numbers(), "qx2");
        // basis after unit-first rearrangement: index 0 = 1, index 1 = x
        GradedVector x = GradedVector::unit({0, 1});
        WindowIdeal I = annihilator(V, x);
        CHECK(I.total_dim() == 1);
        CHECK(I.contains(x));
    }
    SUBCASE("orthogonal idempotents annihilate the complementary factor") {
        TruncatedVOA V = build_commutative_voa(algebra_q_x_q(), "qxq");
        CenterSubalgebra Z = center(V);
        auto idems = primitive_idempotents_of_center(Z);
        REQUIRE(idems.size() == 2);
        WindowIdeal I = annihilator(V, idems[0]);
        CHECK(I.total_dim() == 1);
        CHECK(I.contains(idems[1]));
    }
    SUBCASE("non-central states are rejected") {
        TruncatedVOA V = build_heisenberg(2);
        CHECK_THROWS_AS(annihilator(V, GradedVector::unit({1, 0})), input_error);
    }
}

TEST_CASE("endomorphism checks") {
    SUBCASE("the vacuum commutes with everything") {
        TruncatedVOA V = build_heisenberg(2);
        CenterSubalgebra Z = center(V);
        EndoCheckReport r = endo_check(V, Z, V.vacuum_vector());
        CHECK(r.ok);
        CHECK(r.commute_checked > 0);
    }
    SUBCASE("idempotent of a split algebra passes") {
        TruncatedVOA V = build_commutative_voa(algebra_split_idempotent(), "qxq2");
        CenterSubalgebra Z = center(V);
        for (const auto& e : primitive_idempotents_of_center(Z))
            CHECK(endo_check(V, Z, e).ok);
    }
    SUBCASE("module vacuum of the semidirect product projects onto the module") {
        TruncatedVOA h2 = build_heisenberg(2);
        TruncatedVOA W = build_semidirect(h2, adjoint_module(h2), "w");
        CenterSubalgebra Z = center(W);
        GradedVector m_vac = GradedVector::unit({0, 1});  // vacuum of the module copy
        REQUIRE(Z.coordinates(m_vac).has_value());
        CHECK(endo_check(W, Z, m_vac).ok);
        // phi_{m_vac} squares to zero: the image lies in the module part
        for (auto b : W.basis()) {
            GradedVector once = mode_apply(W, m_vac, -1, GradedVector::unit(b));
            CHECK(mode_apply(W, m_vac, -1, once).is_zero());
        }
    }
}

TEST_CASE("block decomposition") {
    SUBCASE("heisenberg is a single block") {
        TruncatedVOA V = build_heisenberg(2);
        BlockDecomposition dec = block_decompose(V);
        REQUIRE(dec.blocks.size() == 1);
        CHECK(dec.blocks[0].dims == V.dims);
    }
    SUBCASE("split quadratic gives two one-dimensional blocks") {
        TruncatedVOA V = build_commutative_voa(algebra_split_idempotent(), "qxq2");
        BlockDecomposition dec = block_decompose(V);
        REQUIRE(dec.blocks.size() == 2);
        CHECK(dec.blocks[0].total_dim() == 1);
        CHECK(dec.blocks[1].total_dim() == 1);
    }
    SUBCASE("direct sum splits back into two heisenberg copies") {
        TruncatedVOA h2 = build_heisenberg(2);
        TruncatedVOA W = build_direct_sum(h2, h2, "h2h2");
        BlockDecomposition dec = block_decompose(W);
        REQUIRE(dec.blocks.size() == 2);
        for (const auto& blk : dec.blocks) {
            CHECK(blk.dims == h2.dims);
            CHECK(blk.central_charge == h2.central_charge);
        }
    }
}

TEST_CASE("block reconstruction identities") {
    TruncatedVOA h2 = build_heisenberg(2);
    TruncatedVOA W = build_direct_sum(h2, h2, "h2h2");
    BlockDecomposition dec = block_decompose(W);
    REQUIRE(dec.blocks.size() == 2);
    for (int w = W.n_min; w <= W.n_max; ++w) {
        std::size_t wi = static_cast<std::size_t>(w - W.n_min);
        std::size_t d = static_cast<std::size_t>(W.dim(w));
        Matrix sum = dec.projections[0][wi] + dec.projections[1][wi];
        CHECK(sum == Matrix::identity(d));
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                Matrix prod = dec.projections[i][wi] * dec.projections[j][wi];
                if (i == j)
                    CHECK(prod == dec.projections[i][wi]);
                else
                    CHECK(prod == Matrix(d, d));
            }
    }
}

TEST_CASE("each block has a local center") {
    TruncatedVOA V = build_commutative_voa(
        product_algebra(algebra_split_idempotent(), algebra_dual_numbers()), "mixed");
    BlockDecomposition dec = block_decompose(V);
    REQUIRE(dec.blocks.size() == 3);
    for (const auto& blk : dec.blocks) CHECK(is_indecomposable(blk).indecomposable);
}
