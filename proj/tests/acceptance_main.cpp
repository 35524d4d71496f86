// Acceptance suite: runs every acceptance criterion at its stated tolerance
// (exact rational equality throughout) and prints one pass/fail line per
// criterion. Exit status is the number of failed criteria.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "voa/axioms.hpp"
#include "voa/builders.hpp"
#include "voa/classify.hpp"
#include "voa/format.hpp"
#include "voa/radicals.hpp"
#include "voa/v0_power_assoc.hpp"

using namespace voa;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::function<void(std::vector<std::string>&)> run;  // push failure notes
};

std::vector<TruncatedVOA> fixture_corpus() {
    std::vector<TruncatedVOA> fx;
    fx.push_back(build_heisenberg(4));
    fx.push_back(build_virasoro(Rational(1, 2), 6));
    fx.push_back(build_virasoro_simple(Rational(1, 2), 6));
    fx.push_back(build_lattice_upper(2));
    TruncatedVOA h2 = build_heisenberg(2);
    fx.push_back(build_semidirect(h2, adjoint_module(h2), "semidirect_m1_n2"));
    fx.push_back(build_commutative_voa(algebra_q(), "commutative_q"));
    fx.push_back(build_commutative_voa(algebra_q_x_q(), "commutative_qxq"));
    fx.push_back(build_commutative_voa(algebra_dual_numbers(), "commutative_qx2"));
    fx.push_back(build_commutative_voa(algebra_split_idempotent(), "commutative_qxq2"));
    fx.push_back(build_commutative_voa(algebra_u3_u2(), "commutative_qu3"));
    fx.push_back(build_direct_sum(h2, h2, "direct_sum_m1_m1_n2"));
    return fx;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main() {
    std::vector<Criterion> criteria;

    // 1. axiom suite over the whole corpus, exact equality, bounded runtime
    criteria.push_back({1, "axiom suite: zero exact failures on all fixtures",
                        [](std::vector<std::string>& fails) {
        auto t0 = std::chrono::steady_clock::now();
        for (const auto& V : fixture_corpus()) {
            AxiomReport rep = verify_axioms(V);
            if (!rep.ok())
                fails.push_back(V.name + ": " + std::to_string(rep.total_failed()) +
                                " exact failures");
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > 300.0)
            fails.push_back("runtime " + std::to_string(secs) + "s exceeds 300s");
        std::cout << "       (axiom suite wall time " << secs << "s)\n";
    }});

    // 2. four-way agreement of the locality predicates, per block
    criteria.push_back({2, "locality predicates agree per block on the corpus",
                        [](std::vector<std::string>& fails) {
        for (const auto& V : fixture_corpus()) {
            ClassificationReport rep = classify(V);
            if (!rep.equivalence_applicable) fails.push_back(V.name + ": states below weight -1");
            if (rep.agreement != ClassificationReport::Agreement::Agree)
                fails.push_back(V.name + ": agreement=" + rep.agreement_str());
            for (const auto& b : rep.blocks) {
                if (b.indecomposable != b.center_local)
                    fails.push_back(V.name + ": exact predicates (b)/(c) disagree");
                if (b.v0plus.kind == PaLocalVerdict::Kind::Inconclusive)
                    fails.push_back(V.name + ": sampled escape used for V0+");
                else if (b.v0plus.local() != b.indecomposable)
                    fails.push_back(V.name + ": predicate (d) disagrees");
                if (b.local_within_window != b.indecomposable)
                    fails.push_back(V.name + ": predicate (a) disagrees");
            }
        }
    }});

    // 3. J(Z(V)) = Z(V) meet <J(Z(V))>, with nilpotency inside the stage bound
    criteria.push_back({3, "center/radical identity holds on the corpus",
                        [](std::vector<std::string>& fails) {
        TruncatedVOA h2 = build_heisenberg(2);
        std::vector<TruncatedVOA> fx;
        fx.push_back(build_commutative_voa(algebra_u3_u2(), "commutative_qu3"));
        fx.push_back(build_semidirect(h2, adjoint_module(h2), "semidirect_m1_n2"));
        fx.push_back(build_heisenberg(4));
        fx.push_back(build_virasoro(Rational(1, 2), 6));
        fx.push_back(build_virasoro_simple(Rational(1, 2), 6));
        for (const auto& V : fx) {
            CenterRadicalReport rep = check_center_radical_identity(V);
            if (!rep.ok())
                for (const auto& f : rep.failures) fails.push_back(V.name + ": " + f);
        }
    }});

    // 4. every discovered weight-zero idempotent is central; unit chains replay
    criteria.push_back({4, "discovered idempotents satisfy L(-1)e = 0 exactly",
                        [](std::vector<std::string>& fails) {
        int found = 0;
        for (const auto& V : fixture_corpus()) {
            IdempotentCentralityReport rep = check_idempotents_central(V);
            found += rep.idempotents_found;
            if (!rep.ok())
                for (const auto& f : rep.failures) fails.push_back(V.name + ": " + f);
        }
        if (found == 0) fails.push_back("no idempotents were discovered at all");
    }});

    // 5. block reconstruction identities and single-block re-classification
    criteria.push_back({5, "block projections reconstruct the identity",
                        [](std::vector<std::string>& fails) {
        for (const auto& V : fixture_corpus()) {
            BlockDecomposition dec = block_decompose(V);
            int dim_sum = 0;
            for (const auto& blk : dec.blocks) dim_sum += blk.total_dim();
            if (dim_sum != V.total_dim()) fails.push_back(V.name + ": dims do not add up");
            for (int w = V.n_min; w <= V.n_max; ++w) {
                std::size_t wi = static_cast<std::size_t>(w - V.n_min);
                std::size_t d = static_cast<std::size_t>(V.dim(w));
                Matrix sum(d, d);
                for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
                    sum = sum + dec.projections[i][wi];
                    for (std::size_t j = 0; j < dec.blocks.size(); ++j) {
                        Matrix prod = dec.projections[i][wi] * dec.projections[j][wi];
                        const Matrix want = i == j ? dec.projections[i][wi] : Matrix(d, d);
                        if (!(prod == want))
                            fails.push_back(V.name + ": projections not orthogonal at weight " +
                                            std::to_string(w));
                    }
                }
                if (!(sum == Matrix::identity(d)))
                    fails.push_back(V.name +
                                    ": projections do not sum to the identity at weight " +
                                    std::to_string(w));
            }
            for (const auto& blk : dec.blocks)
                if (classify(blk).block_count != 1)
                    fails.push_back(V.name + ": block re-classification is not single-block");
        }
    }});

    // 6. Virasoro radical detection at c = 1/2
    criteria.push_back({6, "gram kernels detect the level-6 singular vector",
                        [](std::vector<std::string>& fails) {
        const std::size_t want_kernel[] = {0, 0, 0, 0, 0, 0, 1};
        for (int n = 0; n <= 6; ++n) {
            Subspace k = kernel(gram_matrix(Rational(1, 2), n));
            if (k.dim() != want_kernel[n])
                fails.push_back("kernel dim at level " + std::to_string(n) + " is " +
                                std::to_string(k.dim()));
        }
        TruncatedVOA V = build_virasoro(Rational(1, 2), 6);
        Subspace k6 = kernel(gram_matrix(Rational(1, 2), 6));
        if (k6.dim() != 1) {
            fails.push_back("no level-6 kernel vector");
            return;
        }
        WindowIdeal I = window_ideal_closure(V, {V.from_weight_vec(6, k6.basis()[0])});
        if (I.at_weight(6).dim() != 1)
            fails.push_back("closure weight-6 dimension is " +
                            std::to_string(I.at_weight(6).dim()));
        for (int w = V.n_min; w <= 5; ++w)
            if (I.at_weight(w).dim() != 0)
                fails.push_back("closure has components at weight " + std::to_string(w));
        TruncatedVOA Q = quotient_voa(V, I, "vc_mod_m");
        TruncatedVOA L = build_virasoro_simple(Rational(1, 2), 6);
        if (Q.dims != L.dims) fails.push_back("quotient dims do not match the simple quotient");
        if (L.dims != std::vector<int>{0, 1, 0, 1, 1, 2, 2, 3})
            fails.push_back("simple quotient dims are wrong");
    }});

    // 7. the square-zero semidirect product
    criteria.push_back({7, "semidirect module is the nilpotent radical lower bound",
                        [](std::vector<std::string>& fails) {
        TruncatedVOA h2 = build_heisenberg(2);
        TruncatedVOA W = build_semidirect(h2, adjoint_module(h2), "semidirect_m1_n2");
        WindowIdeal M = window_ideal_closure(W, {GradedVector::unit({0, 1})});
        if (M.dims() != std::vector<int>{0, 1, 1, 2}) fails.push_back("module ideal is wrong");
        if (!ideal_power(W, M, 2).is_zero()) fails.push_back("M^2 != 0");
        NilpotencyStatus st = nilpotency_status(W, M);
        if (!(st.nilpotent() && st.stage == 2))
            fails.push_back("nilpotency status is " + st.str());
        RadicalLowerBound lb = radical_lower_bound_of(W);
        if (!lb.ideal.contains(M)) fails.push_back("lower bound does not contain M");
        ClassificationReport rep = classify(W);
        if (!(rep.block_count == 1 && rep.local))
            fails.push_back("classification is not a single local block");
    }});

    // 8. non-functoriality: the lattice upper half carries a radical while the
    //    heisenberg picture has none
    criteria.push_back({8, "lattice radical is the charge sector; heisenberg side is zero",
                        [](std::vector<std::string>& fails) {
        TruncatedVOA U = build_lattice_upper(2);
        RadicalLowerBound lb = radical_lower_bound_of(U);
        if (lb.ideal.dims() != std::vector<int>{0, 0, 1, 1})
            fails.push_back("J_lb(U) is not the charge sector");
        WindowIdeal sector = window_ideal_closure(U, {GradedVector::unit({1, 1})});
        if (!(lb.ideal == sector)) fails.push_back("J_lb(U) differs from the e^alpha spin");
        RadicalLowerBound m1 = radical_lower_bound_of(build_heisenberg(2));
        if (!m1.ideal.is_zero()) fails.push_back("heisenberg-side radical is nonzero");
        TruncatedVOA Q = quotient_voa(U, lb.ideal, "u_mod_jlb");
        if (Q.dims != std::vector<int>{0, 1, 1, 2})
            fails.push_back("U/J_lb does not have heisenberg window dims");
    }});

    // 9. idempotent lifting converges within the logarithmic bound
    criteria.push_back({9, "lifting meets the log2(nilpotency index) + 1 bound",
                        [](std::vector<std::string>& fails) {
        SplitMix64 rng(2024);
        for (int k = 0; k <= 6; ++k)
            for (int m = 0; m + k <= 6; ++m) {
                if (k + m == 0) continue;
                Poly f{Rational(1)};
                for (int i = 0; i < k; ++i) f = poly_mul(f, Poly{Rational(0), Rational(1)});
                for (int i = 0; i < m; ++i) f = poly_mul(f, Poly{Rational(-1), Rational(1)});
                CommAssocAlgebra A = polynomial_quotient_algebra(f);
                Subspace nil = nilradical_assoc(A);
                int index = nilpotency_index(A, nil);
                int bound = 1;
                for (int d = 1; d < index; d *= 2) ++bound;
                std::vector<Vec> starts;
                Vec u = zero_vec(A.dim);
                if (A.dim > 1)
                    u[1] = Rational(1);
                else
                    u[0] = (k == 1 && m == 0) ? Rational(0) : Rational(1);
                starts.push_back(u);
                for (int s = 0; s < 4; ++s) {
                    Vec e0 = u;
                    for (const auto& row : nil.basis())
                        axpy(e0, Rational(rng.range(-2, 2)), row);
                    starts.push_back(e0);
                }
                for (const auto& e0 : starts) {
                    LiftResult r = lift_idempotent(A, e0);
                    if (!(A.mult(r.idempotent, r.idempotent) == r.idempotent))
                        fails.push_back("lift not exactly idempotent at k=" +
                                        std::to_string(k) + " m=" + std::to_string(m));
                    if (r.iterations > bound)
                        fails.push_back("lift took " + std::to_string(r.iterations) + " > " +
                                        std::to_string(bound) + " iterations at k=" +
                                        std::to_string(k) + " m=" + std::to_string(m));
                }
            }
    }});

    // 10. bracket oracles regenerate the shipped golden files byte for byte
    criteria.push_back({10, "regenerated structure constants match the golden files",
                        [](std::vector<std::string>& fails) {
        const std::pair<std::string, std::function<TruncatedVOA()>> cases[] = {
            {"heisenberg_n2.voa", [] { return build_heisenberg(2); }},
            {"heisenberg_n4.voa", [] { return build_heisenberg(4); }},
            {"virasoro_half_n6.voa", [] { return build_virasoro(Rational(1, 2), 6); }},
        };
        for (const auto& [file, make] : cases) {
            std::string want = read_file(std::string(VOA_GOLDEN_DIR) + "/" + file);
            std::string got = serialize_voa(make());
            if (got != want) fails.push_back(file + ": regenerated bytes differ");
        }
    }});

    int failed = 0;
    for (const auto& c : criteria) {
        std::vector<std::string> fails;
        try {
            c.run(fails);
        } catch (const std::exception& e) {
            fails.push_back(std::string("exception: ") + e.what());
        }
        if (fails.empty()) {
            std::cout << "[PASS] criterion " << c.number << ": " << c.title << "\n";
        } else {
            ++failed;
            std::cout << "[FAIL] criterion " << c.number << ": " << c.title << "\n";
            for (const auto& f : fails) std::cout << "       " << f << "\n";
        }
    }
    std::cout << (failed == 0 ? "all acceptance criteria pass"
                              : std::to_string(failed) + " criteria failed")
              << "\n";
    return failed;
}
