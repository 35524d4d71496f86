#pragma once

// Assembles the per-block verdicts: indecomposability, locality of the
// center, locality of the weight-zero algebra under the symmetrized product,
// and window-level locality evidence (radical lower bound with a sampled
// simplicity scan of the quotient). The four predicates are computed by
// independent routes and their agreement is itself a checked outcome; a
// disagreement between exact verdicts is a reportable violation, while any
// disagreement involving a sampled verdict only downgrades to a caveat.
// Sampled verdicts are never collapsed into exact ones.

#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "voa/center_blocks.hpp"
#include "voa/radicals.hpp"
#include "voa/v0_power_assoc.hpp"

namespace voa {

struct BlockClassification {
    TruncatedVOA block;
    GradedVector idempotent;  // in host coordinates
    bool indecomposable = false;    // primitive idempotent count of Z = 1 (exact)
    bool center_local = false;      // dim Z - dim J(Z) = 1 (exact)
    PaLocalVerdict v0plus;          // locality of V_0^+ (exact-or-sampled)
    bool local_within_window = false;  // no detected proper ideal in block/J_lb
    RadicalLowerBound j_lb;
    std::vector<int> quotient_dims;
    bool agree = true;  // four-way agreement where verdicts are defined
};

struct ClassificationReport {
    enum class Agreement { Agree, InconclusiveCaveat, Violation };

    int block_count = 0;
    std::vector<BlockClassification> blocks;
    // the four locality predicates are provably equivalent when no states
    // live below weight -1
    bool equivalence_applicable = false;
    Agreement agreement = Agreement::Agree;
    bool semilocal = false;
    bool local = false;  // the input itself
    std::vector<std::string> caveats;
    std::uint64_t seed = 0;
    int samples = 0;

    std::string agreement_str() const {
        switch (agreement) {
            case Agreement::Agree: return "agree";
            case Agreement::InconclusiveCaveat: return "inconclusive";
            default: return "violation";
        }
    }
};

namespace detail {

// sampled spin scan: true when some proper nonzero ideal is detected; probes
// basis vectors, window-singular vectors, the trivial radical, and seeded
// random vectors
inline bool detect_proper_ideal(const TruncatedVOA& V, const SearchParams& params) {
    auto probe = [&](const GradedVector& g) {
        WindowIdeal C = window_ideal_closure(V, {g});
        return !C.is_zero() && !C.is_full();
    };
    for (auto b : V.basis())
        if (probe(GradedVector::unit(b))) return true;
    for (int w = 1; w <= V.n_max; ++w) {
        Subspace sing = lowering_kernel(V, w);
        for (const auto& row : sing.basis())
            if (probe(V.from_weight_vec(w, row))) return true;
    }
    for (const auto& g : trivial_radical(V).basis_vectors())
        if (probe(g)) return true;
    SplitMix64 rng(params.seed);
    for (int s = 0; s < params.samples; ++s)
        if (probe(random_graded_vector(rng, V))) return true;
    return false;
}

}  // namespace detail

inline ClassificationReport classify(const TruncatedVOA& V, const SearchParams& params = {}) {
    ClassificationReport rep;
    rep.seed = params.seed;
    rep.samples = params.samples;
    rep.equivalence_applicable = true;
    for (int w = V.n_min; w < -1; ++w)
        if (V.dim(w) != 0) rep.equivalence_applicable = false;

    BlockDecomposition dec = block_decompose(V);
    rep.block_count = static_cast<int>(dec.blocks.size());

    bool all_local = true;
    bool any_inconclusive = false;
    bool any_violation = false;
    for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
        BlockClassification bc;
        bc.block = dec.blocks[i];
        bc.idempotent = dec.idempotents[i];

        CenterSubalgebra Z = center(bc.block);
        bc.indecomposable = primitive_idempotents(Z.algebra).size() == 1;
        Subspace jz = nilradical_assoc(Z.algebra);
        bc.center_local = Z.dim() - jz.dim() == 1;

        PowerAssocAlgebra A = extract_v0(bc.block);
        PowerAssocReport pa = check_power_associative(A);
        if (!pa.ok) {
            rep.caveats.push_back("block " + std::to_string(i) +
                                  ": V_0 is not power associative");
            any_violation = true;
        }
        bc.v0plus = pa_local_certificate(A, params);

        bc.j_lb = radical_lower_bound(bc.block, Z, params);
        TruncatedVOA Q = quotient_voa(bc.block, bc.j_lb.ideal,
                                      bc.block.name + "_mod_jlb");
        for (int d : Q.dims) bc.quotient_dims.push_back(d);
        bc.local_within_window = !detail::detect_proper_ideal(Q, params);
        if (!bc.j_lb.ideal.exact)
            rep.caveats.push_back("block " + std::to_string(i) +
                                  ": radical lower bound is window-relative");
        if (bc.local_within_window)
            rep.caveats.push_back("block " + std::to_string(i) +
                                  ": locality evidence is sampled (seed " +
                                  std::to_string(params.seed) + ", " +
                                  std::to_string(params.samples) + " samples)");

        // four-way agreement: (b) and (c) are exact; (a) is sampled when
        // positive; (d) is sampled when positive, exact when NotLocal
        if (bc.indecomposable != bc.center_local) any_violation = true;
        bool bc_val = bc.indecomposable;
        if (bc.v0plus.kind == PaLocalVerdict::Kind::Inconclusive) {
            any_inconclusive = true;
            rep.caveats.push_back("block " + std::to_string(i) +
                                  ": V_0^+ verdict inconclusive (" + bc.v0plus.note + ")");
            bc.agree = false;
        } else if (bc.v0plus.local() != bc_val) {
            if (bc.v0plus.local())
                any_inconclusive = true;  // sampled local vs exact non-local
            else
                any_violation = true;  // exact witness disagrees with exact predicate
            bc.agree = false;
        }
        if (rep.equivalence_applicable && bc.local_within_window != bc_val) {
            if (bc.local_within_window)
                any_inconclusive = true;
            else
                any_violation = true;  // detected ideal contradicts exact predicates
            bc.agree = false;
        }

        bool block_local = bc.indecomposable && bc.center_local &&
                           bc.local_within_window &&
                           bc.v0plus.kind == PaLocalVerdict::Kind::LocalCertified;
        all_local = all_local && block_local;
        rep.blocks.push_back(std::move(bc));
    }

    rep.agreement = any_violation ? ClassificationReport::Agreement::Violation
                    : any_inconclusive ? ClassificationReport::Agreement::InconclusiveCaveat
                                       : ClassificationReport::Agreement::Agree;
    rep.semilocal = all_local;
    rep.local = rep.semilocal && rep.block_count == 1;
    return rep;
}

// blocks with their own (single-block) classification reports; refuses when
// the input is not semilocal
inline std::vector<std::pair<TruncatedVOA, ClassificationReport>> semilocal_decomposition(
    const TruncatedVOA& V, const SearchParams& params = {}) {
    ClassificationReport rep = classify(V, params);
    if (!rep.semilocal) {
        for (const auto& bc : rep.blocks)
            if (!(bc.indecomposable && bc.center_local && bc.local_within_window &&
                  bc.v0plus.local()))
                throw input_error("semilocal_decomposition: block '" + bc.block.name +
                                  "' is not local");
        throw input_error("semilocal_decomposition: input is not semilocal");
    }
    std::vector<std::pair<TruncatedVOA, ClassificationReport>> out;
    for (const auto& bc : rep.blocks) {
        if (!(bc.block.central_charge == V.central_charge))
            throw integrity_error("semilocal_decomposition: central charge drifted");
        out.push_back({bc.block, classify(bc.block, params)});
    }
    return out;
}

}  // namespace voa
