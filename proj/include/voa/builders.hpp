#pragma once

// Constructors for the stock truncated VOAs: degenerate weight-zero algebras,
// the rank-one Heisenberg M(1), vacuum Virasoro modules V_c and their simple
// quotients L_c, square-zero semidirect products V + M, the charge-graded
// upper half U of the A_1 lattice VOA, and direct sums. Structure constants
// always come from the bracket-relation oracles (free_boson.hpp,
// virasoro_oracle.hpp), never from mode_apply, so downstream axiom checks are
// genuinely independent.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "voa/comm_assoc.hpp"
#include "voa/core.hpp"
#include "voa/free_boson.hpp"
#include "voa/transform.hpp"
#include "voa/virasoro_oracle.hpp"

namespace voa {

// ---- degenerate weight-zero case -------------------------------------------

// Window [0, 0]; a(-1)b is the algebra product and every other mode vanishes
// identically (omega = 0, c = 0). The basis is rearranged so the unit is
// basis vector 0.
inline TruncatedVOA build_commutative_voa(const CommAssocAlgebra& A,
                                          std::string name = "commutative") {
    A.validate();
    TruncatedVOA V;
    V.name = std::move(name);
    V.n_min = 0;
    V.n_max = 0;
    V.dims = {static_cast<int>(A.dim)};
    V.complete = true;
    V.central_charge = Rational(0);

    // basis with the unit first
    std::vector<Vec> basis{A.unit};
    for (std::size_t j = 0; j < A.dim && basis.size() < A.dim; ++j) {
        Vec e = zero_vec(A.dim);
        e[j] = Rational(1);
        std::vector<Vec> test = basis;
        test.push_back(e);
        if (detail::rref_rows(test, A.dim).size() == basis.size() + 1)
            basis.push_back(std::move(e));
    }
    Matrix bm(A.dim, A.dim);
    for (std::size_t j = 0; j < A.dim; ++j)
        for (std::size_t i = 0; i < A.dim; ++i)
            if (!basis[j][i].is_zero()) bm.set(i, j, basis[j][i]);
    auto coords = [&](const Vec& v) {
        auto c = solve(bm, v);
        if (!c) throw integrity_error("build_commutative_voa: basis incomplete");
        return *c;
    };
    V.vacuum = {0, 0};
    for (std::size_t i = 0; i < A.dim; ++i)
        for (std::size_t j = 0; j < A.dim; ++j) {
            Vec prod = coords(A.mult(basis[i], basis[j]));
            GradedVector gv;
            for (std::size_t l = 0; l < A.dim; ++l) gv.set({0, static_cast<int>(l)}, prod[l]);
            V.modes.set({0, static_cast<int>(i), -1, 0, static_cast<int>(j)}, gv);
        }
    return V;
}

// stock algebra presets used across examples and fixtures
inline CommAssocAlgebra algebra_q() {
    return polynomial_quotient_algebra({Rational(-1), Rational(1)});  // Q[u]/(u-1)
}
inline CommAssocAlgebra algebra_q_x_q() {
    return product_algebra(algebra_q(), algebra_q());  // Q x Q
}
inline CommAssocAlgebra algebra_dual_numbers() {
    return polynomial_quotient_algebra({Rational(0), Rational(0), Rational(1)});  // Q[x]/(x^2)
}
inline CommAssocAlgebra algebra_split_idempotent() {
    return polynomial_quotient_algebra({Rational(0), Rational(-1), Rational(1)});  // Q[x]/(x^2-x)
}
inline CommAssocAlgebra algebra_u3_u2() {
    return polynomial_quotient_algebra(
        {Rational(0), Rational(0), Rational(-1), Rational(1)});  // Q[u]/(u^3-u^2)
}

// ---- Heisenberg M(1) --------------------------------------------------------

namespace detail {

struct PartitionBasis {
    std::vector<std::vector<Partition>> per_weight;  // indexed by weight - n_min
    std::vector<std::map<Partition, int>> index;

    PartitionBasis(int n_min, int n_max, int min_part, int offset) {
        per_weight.resize(static_cast<std::size_t>(n_max - n_min + 1));
        index.resize(per_weight.size());
        for (int w = n_min; w <= n_max; ++w) {
            std::size_t wi = static_cast<std::size_t>(w - n_min);
            if (w - offset >= 0) per_weight[wi] = partitions(w - offset, min_part);
            for (std::size_t i = 0; i < per_weight[wi].size(); ++i)
                index[wi][per_weight[wi][i]] = static_cast<int>(i);
        }
    }
};

}  // namespace detail

// Rank-one free boson with <alpha, alpha> = 1, omega = (1/2) alpha(-1)^2 1,
// c = 1. Basis of weight n: partition monomials in reverse-lexicographic
// order, so dims are the partition numbers.
inline TruncatedVOA build_heisenberg(int N) {
    if (N < 2 || N > 6)
        throw input_error("build_heisenberg: level must be in [2, 6] (the window must hold omega)");
    TruncatedVOA V;
    V.name = "heisenberg_n" + std::to_string(N);
    V.n_min = -1;
    V.n_max = N;
    V.central_charge = Rational(1);
    detail::PartitionBasis basis(V.n_min, V.n_max, 1, 0);
    for (const auto& pw : basis.per_weight) V.dims.push_back(static_cast<int>(pw.size()));
    V.vacuum = {0, 0};
    if (N >= 2) V.omega.set({2, basis.index[3].at(Partition{1, 1})}, Rational(1, 2));

    FreeBosonOracle oracle{Rational(1)};
    for (int wa = 0; wa <= N; ++wa)
        for (const auto& a : basis.per_weight[static_cast<std::size_t>(wa - V.n_min)])
            for (int wb = 0; wb <= N; ++wb)
                for (const auto& b : basis.per_weight[static_cast<std::size_t>(wb - V.n_min)]) {
                    auto [klo, khi] = V.k_range(wa, wb);
                    for (int k = klo; k <= khi; ++k) {
                        FockVector prod = oracle.mode(a, k, b, 0, N);
                        if (prod.empty()) continue;
                        int w_out = wa + wb - k - 1;
                        GradedVector gv;
                        for (const auto& [p, c] : prod)
                            gv.set({w_out,
                                    basis.index[static_cast<std::size_t>(w_out - V.n_min)].at(p)},
                                   c);
                        V.modes.set({wa, basis.index[static_cast<std::size_t>(wa - V.n_min)].at(a),
                                     k, wb,
                                     basis.index[static_cast<std::size_t>(wb - V.n_min)].at(b)},
                                    gv);
                    }
                }
    return V;
}

// ---- Virasoro V_c and L_c ---------------------------------------------------

// Vacuum Verma quotient: basis L(-l_1)...L(-l_r)1 over partitions with all
// parts >= 2, omega = L(-2)1.
inline TruncatedVOA build_virasoro(const Rational& c, int N) {
    if (N < 0 || N > 8) throw input_error("build_virasoro: level must be in [0, 8]");
    TruncatedVOA V;
    V.name = "virasoro";
    V.n_min = -1;
    V.n_max = N;
    V.central_charge = c;
    detail::PartitionBasis basis(V.n_min, V.n_max, 2, 0);
    for (const auto& pw : basis.per_weight) V.dims.push_back(static_cast<int>(pw.size()));
    V.vacuum = {0, 0};
    if (N >= 2) V.omega.set({2, basis.index[3].at(Partition{2})}, Rational(1));

    VirasoroOracle oracle{c};
    for (int wa = 0; wa <= N; ++wa)
        for (const auto& a : basis.per_weight[static_cast<std::size_t>(wa - V.n_min)])
            for (int wb = 0; wb <= N; ++wb)
                for (const auto& b : basis.per_weight[static_cast<std::size_t>(wb - V.n_min)]) {
                    auto [klo, khi] = V.k_range(wa, wb);
                    for (int k = klo; k <= khi; ++k) {
                        int w_out = wa + wb - k - 1;
                        if (w_out < 0 || V.dim(w_out) == 0) continue;
                        const FockVector& prod = oracle.mode(a, k, b);
                        if (prod.empty()) continue;
                        GradedVector gv;
                        for (const auto& [p, coeff] : prod)
                            gv.set({w_out,
                                    basis.index[static_cast<std::size_t>(w_out - V.n_min)].at(p)},
                                   coeff);
                        if (gv.is_zero()) continue;
                        V.modes.set({wa, basis.index[static_cast<std::size_t>(wa - V.n_min)].at(a),
                                     k, wb,
                                     basis.index[static_cast<std::size_t>(wb - V.n_min)].at(b)},
                                    gv);
                    }
                }
    V.name = "virasoro_c" + c.num().to_string() +
             (c.is_integer() ? "" : "_" + c.den().to_string()) + "_n" + std::to_string(N);
    return V;
}

// Gram matrix of the weight-n Verma basis under L(n)^t = L(-n), <1,1> = 1.
inline Matrix gram_matrix(const Rational& c, int level) {
    if (level < 0 || level > 8) throw input_error("gram_matrix: level must be in [0, 8]");
    return VirasoroOracle(c).gram_matrix(level);
}

// Quotient of V_c by the per-level Gram kernels (the maximal proper
// submodule visible in the window).
inline TruncatedVOA build_virasoro_simple(const Rational& c, int N) {
    TruncatedVOA V = build_virasoro(c, N);
    VirasoroOracle oracle{c};
    std::vector<Subspace> ker;
    for (int w = V.n_min; w <= V.n_max; ++w) {
        if (w < 0) {
            ker.push_back(Subspace(0));
            continue;
        }
        ker.push_back(kernel(oracle.gram_matrix(w)));
    }
    TruncatedVOA L = quotient_voa(V, ker, "virasoro_simple");
    L.name = "virasoro_simple_c" + c.num().to_string() +
             (c.is_integer() ? "" : "_" + c.den().to_string()) + "_n" + std::to_string(N);
    return L;
}

// ---- semidirect products ----------------------------------------------------

// Z-graded module data over a host V, sharing the host window. Action keys
// are (wa, ia, k, wm, im) with a a host basis vector and m a module basis
// vector; values are module vectors.
struct ModuleData {
    std::vector<int> dims;  // per weight, host window
    std::map<ModeKey, GradedVector> action;

    const GradedVector& act(const ModeKey& key) const {
        static const GradedVector empty;
        auto it = action.find(key);
        return it == action.end() ? empty : it->second;
    }
};

inline ModuleData adjoint_module(const TruncatedVOA& V) {
    ModuleData M;
    M.dims = V.dims;
    for (const auto& [key, val] : V.modes.entries()) M.action[key] = val;
    return M;
}

// bilinear module action of a host vector
inline GradedVector module_apply(const TruncatedVOA& V, const ModuleData& M,
                                 const GradedVector& a, int k, const GradedVector& m) {
    GradedVector out;
    for (const auto& [ai, ca] : a.components())
        for (const auto& [mi, cm] : m.components()) {
            int w_out = ai.weight + mi.weight - k - 1;
            if (!V.in_window(w_out)) continue;
            out.add_scaled(M.act({ai.weight, ai.index, k, mi.weight, mi.index}), ca * cm);
        }
    return out;
}

namespace detail {

// commutator identity for the module action on exact instances; rejects
// inputs that are not genuine module data
inline void validate_module_action(const TruncatedVOA& V, const ModuleData& M) {
    auto vbasis = V.basis();
    std::vector<WeightedIndex> mbasis;
    for (int w = V.n_min; w <= V.n_max; ++w)
        for (int i = 0; i < M.dims[static_cast<std::size_t>(w - V.n_min)]; ++i)
            mbasis.push_back({w, i});
    for (auto a : vbasis) {
        for (auto b : vbasis) {
            if (a.weight + b.weight - 1 > V.n_max) continue;  // a(j)b unknowable
            int j_max = a.weight + b.weight - 1 - V.n_min;
            for (auto m : mbasis) {
                auto [nlo, nhi] = V.k_range(b.weight, m.weight);
                for (int n = nlo; n <= nhi; ++n) {
                    const GradedVector& bnm = M.act({b.weight, b.index, n, m.weight, m.index});
                    int w_bnm = b.weight + m.weight - n - 1;
                    auto [mlo, mhi] = V.k_range(a.weight, w_bnm);
                    for (int mm = mlo; mm <= mhi; ++mm) {
                        int w_amc = a.weight + m.weight - mm - 1;
                        if (w_amc > V.n_max) continue;  // skipped instance
                        GradedVector lhs =
                            module_apply(V, M, GradedVector::unit(a), mm, bnm);
                        if (w_amc >= V.n_min)
                            lhs -= module_apply(
                                V, M, GradedVector::unit(b), n,
                                M.act({a.weight, a.index, mm, m.weight, m.index}));
                        GradedVector rhs;
                        for (int j = 0; j <= j_max; ++j) {
                            Rational coeff = binomial(mm, j);
                            if (coeff.is_zero()) continue;
                            const GradedVector& ajb =
                                V.modes.get({a.weight, a.index, j, b.weight, b.index});
                            if (ajb.is_zero()) continue;
                            rhs.add_scaled(
                                module_apply(V, M, ajb, mm + n - j, GradedVector::unit(m)),
                                coeff);
                        }
                        if (!(lhs == rhs))
                            throw input_error(
                                "build_semidirect: module action violates the commutator formula");
                    }
                }
            }
        }
    }
    // vacuum must act as the identity in degree -1 and zero elsewhere
    for (auto m : mbasis) {
        auto [klo, khi] = V.k_range(0, m.weight);
        for (int k = klo; k <= khi; ++k) {
            GradedVector want = k == -1 ? GradedVector::unit(m) : GradedVector();
            if (!(M.act({0, V.vacuum.index, k, m.weight, m.index}) == want))
                throw input_error("build_semidirect: vacuum does not act as identity on the module");
        }
    }
}

}  // namespace detail

// W = V + M with M(k)M = 0; M-on-V modes are filled in by skew-symmetry.
inline TruncatedVOA build_semidirect(const TruncatedVOA& V, const ModuleData& M,
                                     std::string name = "semidirect") {
    if (M.dims.size() != V.dims.size())
        throw input_error("build_semidirect: module window mismatch");
    detail::validate_module_action(V, M);

    TruncatedVOA W;
    W.name = std::move(name);
    W.n_min = V.n_min;
    W.n_max = V.n_max;
    W.complete = false;  // the module action was truncated like the host
    W.central_charge = V.central_charge;
    for (std::size_t i = 0; i < V.dims.size(); ++i) W.dims.push_back(V.dims[i] + M.dims[i]);
    W.vacuum = {0, V.vacuum.index};

    auto v_dim = [&](int w) { return V.dim(w); };
    auto embed_v = [&](const GradedVector& x) {
        GradedVector out;
        for (const auto& [wi, c] : x.components()) out.set(wi, c);
        return out;
    };
    auto embed_m = [&](const GradedVector& x) {
        GradedVector out;
        for (const auto& [wi, c] : x.components())
            out.set({wi.weight, v_dim(wi.weight) + wi.index}, c);
        return out;
    };

    W.omega = embed_v(V.omega);

    // V(k)V and V(k)M
    for (const auto& [key, val] : V.modes.entries()) W.modes.set(key, embed_v(val));
    for (const auto& [key, val] : M.action) {
        ModeKey wk = key;
        wk.ib = v_dim(key.wb) + key.ib;
        W.modes.set(wk, embed_m(val));
    }
    // M(k)V by skew-symmetry: x(k)y = -sum_j (-1)^{k+j} (L(-1)^j / j!) y(k+j)x
    for (int wx = V.n_min; wx <= V.n_max; ++wx)
        for (int ix = 0; ix < M.dims[static_cast<std::size_t>(wx - V.n_min)]; ++ix)
            for (int wy = V.n_min; wy <= V.n_max; ++wy)
                for (int iy = 0; iy < V.dim(wy); ++iy) {
                    auto [klo, khi] = V.k_range(wx, wy);
                    for (int k = klo; k <= khi; ++k) {
                        int w_out = wx + wy - k - 1;
                        GradedVector acc;  // module coordinates
                        for (int j = 0; w_out - j >= V.n_min; ++j) {
                            GradedVector term = M.act({wy, iy, k + j, wx, ix});
                            for (int s = 0; s < j; ++s)
                                term = module_apply(V, M, V.omega, 0, term);
                            int sgn = ((k + j) % 2 == 0) ? 1 : -1;
                            acc.add_scaled(term,
                                           Rational(-sgn) / factorial(static_cast<unsigned>(j)));
                        }
                        if (acc.is_zero()) continue;
                        W.modes.set({wx, v_dim(wx) + ix, k, wy, iy}, embed_m(acc));
                    }
                }
    // M(k)M = 0: nothing stored
    return W;
}

// ---- lattice upper half -----------------------------------------------------

// U = sum_{n >= 0} M(1) x C e^{n alpha} for the A_1 root lattice,
// <alpha, alpha> = 2, truncated at N <= 3 so only the charge-0 and charge-1
// sectors carry states (e^{2 alpha} starts at weight 4). Charge-1-on-
// charge-1 products land in charge 2 and vanish in the window; charge-1-on-
// charge-0 modes come from skew-symmetry inside the oracle.
inline TruncatedVOA build_lattice_upper(int N) {
    if (N < 2 || N > 3)
        throw input_error("build_lattice_upper: level must be 2 or 3");
    const Rational g(2);
    FreeBosonOracle oracle{g};

    TruncatedVOA V;
    V.name = "lattice_upper_n" + std::to_string(N);
    V.n_min = -1;
    V.n_max = N;
    V.central_charge = Rational(1);
    detail::PartitionBasis s0(V.n_min, V.n_max, 1, 0);
    detail::PartitionBasis s1(V.n_min, V.n_max, 1, 1);  // weight = 1 + |partition|
    for (int w = V.n_min; w <= N; ++w) {
        std::size_t wi = static_cast<std::size_t>(w - V.n_min);
        V.dims.push_back(static_cast<int>(s0.per_weight[wi].size() + s1.per_weight[wi].size()));
    }
    V.vacuum = {0, 0};
    if (N >= 2) V.omega.set({2, s0.index[3].at(Partition{1, 1})}, Rational(1, 4));

    auto s0_dim = [&](int w) {
        return static_cast<int>(s0.per_weight[static_cast<std::size_t>(w - V.n_min)].size());
    };
    auto s1_of = [&](int w, const Partition& p) {
        return s0_dim(w) + s1.index[static_cast<std::size_t>(w - V.n_min)].at(p);
    };
    auto embed = [&](int w, const FockVector& f, int sector) {
        GradedVector gv;
        for (const auto& [p, c] : f) {
            int idx = sector == 0
                          ? s0.index[static_cast<std::size_t>(w - V.n_min)].at(p)
                          : s1_of(w, p);
            gv.set({w, idx}, c);
        }
        return gv;
    };

    for (int wa = 0; wa <= N; ++wa) {
        for (const auto& a : s0.per_weight[static_cast<std::size_t>(wa - V.n_min)]) {
            int ia = s0.index[static_cast<std::size_t>(wa - V.n_min)].at(a);
            // charge 0 on charge 0
            for (int wb = 0; wb <= N; ++wb)
                for (const auto& b : s0.per_weight[static_cast<std::size_t>(wb - V.n_min)]) {
                    auto [klo, khi] = V.k_range(wa, wb);
                    for (int k = klo; k <= khi; ++k) {
                        FockVector prod = oracle.mode(a, k, b, 0, N);
                        if (prod.empty()) continue;
                        int w_out = wa + wb - k - 1;
                        V.modes.set(
                            {wa, ia, k, wb,
                             s0.index[static_cast<std::size_t>(wb - V.n_min)].at(b)},
                            embed(w_out, prod, 0));
                    }
                }
            // charge 0 on charge 1
            for (int wb = 1; wb <= N; ++wb)
                for (const auto& b : s1.per_weight[static_cast<std::size_t>(wb - V.n_min)]) {
                    auto [klo, khi] = V.k_range(wa, wb);
                    for (int k = klo; k <= khi; ++k) {
                        FockVector prod = oracle.mode(a, k, b, 1, N - 1);
                        if (prod.empty()) continue;
                        int w_out = wa + wb - k - 1;
                        V.modes.set({wa, ia, k, wb, s1_of(wb, b)}, embed(w_out, prod, 1));
                    }
                }
        }
    }
    // charge 1 on charge 0 by skew-symmetry, with the oracle's own L(-1)
    for (int wx = 1; wx <= N; ++wx)
        for (const auto& x : s1.per_weight[static_cast<std::size_t>(wx - V.n_min)])
            for (int wy = 0; wy <= N; ++wy)
                for (const auto& y : s0.per_weight[static_cast<std::size_t>(wy - V.n_min)]) {
                    auto [klo, khi] = V.k_range(wx, wy);
                    for (int k = klo; k <= khi; ++k) {
                        int w_out = wx + wy - k - 1;
                        FockVector acc;
                        for (int j = 0; w_out - j >= 1; ++j) {
                            FockVector term = oracle.mode(y, k + j, x, 1, w_out - j - 1);
                            for (int s = 0; s < j; ++s) term = oracle.translate(term, 1);
                            Rational f = Rational(((k + j) % 2 == 0) ? -1 : 1) /
                                         factorial(static_cast<unsigned>(j));
                            for (const auto& [p, c] : term) fock_add(acc, p, c * f);
                        }
                        if (acc.empty()) continue;
                        V.modes.set({wx, s1_of(wx, x), k, wy,
                                     s0.index[static_cast<std::size_t>(wy - V.n_min)].at(y)},
                                    embed(w_out, acc, 1));
                    }
                }
    // charge 1 on charge 1: lands in charge 2, weight >= 4 > N
    return V;
}

// ---- direct sums --------------------------------------------------------------

// Block-diagonal sum sharing one conformal vector; requires equal central
// charges and windows. The weight-0 basis is rearranged so the vacuum
// 1_1 + 1_2 is a single basis vector.
inline TruncatedVOA build_direct_sum(const TruncatedVOA& V1, const TruncatedVOA& V2,
                                     std::string name = "direct_sum") {
    if (!(V1.central_charge == V2.central_charge))
        throw input_error("build_direct_sum: central charges differ (" +
                          V1.central_charge.to_string() + " vs " +
                          V2.central_charge.to_string() + ")");
    if (V1.n_min != V2.n_min || V1.n_max != V2.n_max)
        throw input_error("build_direct_sum: windows differ");

    TruncatedVOA W;
    W.name = name;
    W.n_min = V1.n_min;
    W.n_max = V1.n_max;
    W.complete = V1.complete && V2.complete;
    W.central_charge = V1.central_charge;
    for (std::size_t i = 0; i < V1.dims.size(); ++i) W.dims.push_back(V1.dims[i] + V2.dims[i]);

    auto embed1 = [&](const GradedVector& x) { return x; };
    auto embed2 = [&](const GradedVector& x) {
        GradedVector out;
        for (const auto& [wi, c] : x.components())
            out.set({wi.weight, V1.dim(wi.weight) + wi.index}, c);
        return out;
    };
    for (const auto& [key, val] : V1.modes.entries()) W.modes.set(key, embed1(val));
    for (const auto& [key, val] : V2.modes.entries()) {
        ModeKey k2 = key;
        k2.ia = V1.dim(key.wa) + key.ia;
        k2.ib = V1.dim(key.wb) + key.ib;
        W.modes.set(k2, embed2(val));
    }
    W.omega = embed1(V1.omega) + embed2(V2.omega);
    W.vacuum = {0, V1.vacuum.index};  // placeholder until the rebase below

    // rebase weight 0 so that 1_1 + 1_2 is basis vector 0
    GradedVector vac = GradedVector::unit({0, V1.vacuum.index}) +
                       GradedVector::unit({0, V1.dim(0) + V2.vacuum.index});
    std::vector<std::vector<GradedVector>> nb(W.dims.size());
    for (int w = W.n_min; w <= W.n_max; ++w) {
        std::size_t wi = static_cast<std::size_t>(w - W.n_min);
        if (w == 0) {
            std::vector<Vec> chosen{W.weight_component(vac, 0)};
            nb[wi].push_back(vac);
            for (int i = 0; i < W.dim(0); ++i) {
                Vec e = zero_vec(static_cast<std::size_t>(W.dim(0)));
                e[static_cast<std::size_t>(i)] = Rational(1);
                std::vector<Vec> test = chosen;
                test.push_back(e);
                if (detail::rref_rows(test, static_cast<std::size_t>(W.dim(0))).size() ==
                    chosen.size() + 1) {
                    chosen.push_back(std::move(e));
                    nb[wi].push_back(GradedVector::unit({0, i}));
                }
            }
        } else {
            for (int i = 0; i < W.dim(w); ++i) nb[wi].push_back(GradedVector::unit({w, i}));
        }
    }
    return rebase(W, nb, vac, std::move(name));
}

}  // namespace voa
