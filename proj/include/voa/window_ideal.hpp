#pragma once

// Graded ideals of a truncated VOA: mode-closed graded subspaces, computed by
// spinning (fixpoint closure under every stored mode operator). Ideal powers
// and derived powers follow the definitions
//   I^t   = span{ a(n) x : a in I, x in I^{t-1} },
//   I^(r) = (I^(r-1))^2,
// and nilpotency / solvability verdicts are window-relative.
//
// Exactness: on a complete host nothing can leave the window, so closures are
// exactly the ideals of the modeled object. On a truncated host any nonzero
// ideal may have escaped through the top of the window and returned, so its
// closure only bounds the genuine ideal from below; the flag records this.

#include <optional>
#include <string>
#include <vector>

#include "voa/core.hpp"
#include "voa/transform.hpp"

namespace voa {

struct WindowIdeal {
    const TruncatedVOA* host = nullptr;
    std::vector<Subspace> per_weight;  // indexed by weight - n_min, canonical
    bool exact = false;

    const Subspace& at_weight(int w) const {
        return per_weight[static_cast<std::size_t>(w - host->n_min)];
    }
    int total_dim() const {
        int t = 0;
        for (const auto& s : per_weight) t += static_cast<int>(s.dim());
        return t;
    }
    std::vector<int> dims() const {
        std::vector<int> d;
        for (const auto& s : per_weight) d.push_back(static_cast<int>(s.dim()));
        return d;
    }
    bool is_zero() const { return total_dim() == 0; }
    bool is_full() const { return total_dim() == host->total_dim(); }

    bool contains(const GradedVector& v) const {
        for (int w = host->n_min; w <= host->n_max; ++w) {
            Vec comp = host->weight_component(v, w);
            if (is_zero_vec(comp)) continue;
            if (!at_weight(w).contains(comp)) return false;
        }
        return true;
    }
    bool contains(const WindowIdeal& other) const {
        for (std::size_t i = 0; i < per_weight.size(); ++i)
            if (!per_weight[i].contains(other.per_weight[i])) return false;
        return true;
    }

    // canonical basis as graded vectors, weight by weight
    std::vector<GradedVector> basis_vectors() const {
        std::vector<GradedVector> out;
        for (int w = host->n_min; w <= host->n_max; ++w)
            for (const auto& row : at_weight(w).basis())
                out.push_back(host->from_weight_vec(w, row));
        return out;
    }

    friend bool operator==(const WindowIdeal& a, const WindowIdeal& b) {
        return a.per_weight == b.per_weight;
    }
};

inline WindowIdeal zero_ideal(const TruncatedVOA& V) {
    WindowIdeal I;
    I.host = &V;
    for (int w = V.n_min; w <= V.n_max; ++w)
        I.per_weight.emplace_back(static_cast<std::size_t>(V.dim(w)));
    I.exact = true;
    return I;
}

inline WindowIdeal full_ideal(const TruncatedVOA& V) {
    WindowIdeal I;
    I.host = &V;
    for (int w = V.n_min; w <= V.n_max; ++w)
        I.per_weight.push_back(Subspace::full(static_cast<std::size_t>(V.dim(w))));
    I.exact = V.complete;
    return I;
}

namespace detail {

// incremental per-weight echelon spans with a work queue
class GradedSpan {
public:
    explicit GradedSpan(const TruncatedVOA& V) : V_(&V), rows_(V.dims.size()) {}

    // true if v was independent (and enqueued)
    bool add(const GradedVector& v, std::vector<GradedVector>& queue) {
        bool grew = false;
        for (int w = V_->n_min; w <= V_->n_max; ++w) {
            Vec comp = V_->weight_component(v, w);
            if (is_zero_vec(comp)) continue;
            auto& rws = rows_[static_cast<std::size_t>(w - V_->n_min)];
            std::vector<Vec> test = rws;
            test.push_back(comp);
            if (rref_rows(test, comp.size()).size() > rws.size()) {
                rws = std::move(test);
                queue.push_back(V_->from_weight_vec(w, comp));
                grew = true;
            }
        }
        return grew;
    }

    bool contains_weight_vec(int w, const Vec& comp) {
        auto& rws = rows_[static_cast<std::size_t>(w - V_->n_min)];
        std::vector<Vec> test = rws;
        test.push_back(comp);
        return rref_rows(test, comp.size()).size() == rws.size();
    }

    std::vector<Subspace> canonical() const {
        std::vector<Subspace> out;
        for (int w = V_->n_min; w <= V_->n_max; ++w)
            out.push_back(Subspace::span(
                static_cast<std::size_t>(V_->dim(w)),
                rows_[static_cast<std::size_t>(w - V_->n_min)]));
        return out;
    }

private:
    const TruncatedVOA* V_;
    std::vector<std::vector<Vec>> rows_;
};

}  // namespace detail

// least mode-closed graded subspace containing the generators
inline WindowIdeal window_ideal_closure(const TruncatedVOA& V,
                                        const std::vector<GradedVector>& generators) {
    detail::GradedSpan span(V);
    std::vector<GradedVector> queue;
    for (const auto& g : generators) span.add(g, queue);  // splits into components
    auto basis = V.basis();
    while (!queue.empty()) {
        GradedVector x = std::move(queue.back());
        queue.pop_back();
        int wx = x.homogeneous_weight().value_or(0);
        for (auto u : basis) {
            auto [klo, khi] = V.k_range(u.weight, wx);
            for (int k = klo; k <= khi; ++k) {
                GradedVector y = mode_apply(V, GradedVector::unit(u), k, x);
                if (y.is_zero()) continue;
                span.add(y, queue);
            }
        }
    }
    WindowIdeal I;
    I.host = &V;
    I.per_weight = span.canonical();
    I.exact = V.complete || I.is_zero();
    return I;
}

// checks the closure invariant literally
inline bool is_window_ideal(const TruncatedVOA& V, const WindowIdeal& I) {
    for (const auto& x : I.basis_vectors()) {
        int wx = x.homogeneous_weight().value_or(0);
        for (auto u : V.basis()) {
            auto [klo, khi] = V.k_range(u.weight, wx);
            for (int k = klo; k <= khi; ++k)
                if (!I.contains(mode_apply(V, GradedVector::unit(u), k, x))) return false;
        }
    }
    return true;
}

// span{ a(n) x : a in I, x in J, all stored n }, closed
inline WindowIdeal ideal_product(const TruncatedVOA& V, const WindowIdeal& I,
                                 const WindowIdeal& J) {
    std::vector<GradedVector> gens;
    for (const auto& a : I.basis_vectors()) {
        int wa = a.homogeneous_weight().value_or(0);
        for (const auto& x : J.basis_vectors()) {
            int wx = x.homogeneous_weight().value_or(0);
            auto [klo, khi] = V.k_range(wa, wx);
            for (int k = klo; k <= khi; ++k) {
                GradedVector y = mode_apply(V, a, k, x);
                if (!y.is_zero()) gens.push_back(std::move(y));
            }
        }
    }
    WindowIdeal P = window_ideal_closure(V, gens);
    P.exact = (I.exact && J.exact) || P.is_zero();
    return P;
}

inline WindowIdeal ideal_power(const TruncatedVOA& V, const WindowIdeal& I, int t) {
    if (t < 1) throw input_error("ideal_power: exponent must be >= 1");
    WindowIdeal P = I;
    for (int s = 2; s <= t; ++s) P = ideal_product(V, I, P);
    return P;
}

inline WindowIdeal derived_power(const TruncatedVOA& V, const WindowIdeal& I, int r) {
    if (r < 1) throw input_error("derived_power: exponent must be >= 1");
    WindowIdeal D = I;
    for (int s = 2; s <= r; ++s) D = ideal_product(V, D, D);
    return D;
}

struct NilpotencyStatus {
    enum class Verdict { NilpotentWithinWindow, SolvableWithinWindow, NotDetected };
    Verdict verdict = Verdict::NotDetected;
    int stage = 0;  // vanishing power / derived stage
    bool exact = false;

    bool nilpotent() const { return verdict == Verdict::NilpotentWithinWindow; }
    std::string str() const {
        switch (verdict) {
            case Verdict::NilpotentWithinWindow:
                return "nilpotent_within_window(" + std::to_string(stage) + ")";
            case Verdict::SolvableWithinWindow:
                return "solvable_within_window(" + std::to_string(stage) + ")";
            default:
                return "not_detected";
        }
    }
};

// smallest r with I^r = 0, else smallest r with I^(r) = 0, else NotDetected;
// the search stops at a fixpoint or past the window dimension bound
inline NilpotencyStatus nilpotency_status(const TruncatedVOA& V, const WindowIdeal& I) {
    NilpotencyStatus st;
    st.exact = I.exact;
    if (I.is_zero()) {
        st.verdict = NilpotencyStatus::Verdict::NilpotentWithinWindow;
        st.stage = 1;
        return st;
    }
    int bound = V.total_dim() + 1;
    WindowIdeal P = I;
    for (int r = 2; r <= bound; ++r) {
        WindowIdeal next = ideal_product(V, I, P);
        if (next.is_zero()) {
            st.verdict = NilpotencyStatus::Verdict::NilpotentWithinWindow;
            st.stage = r;
            return st;
        }
        if (next == P) break;  // stuck
        P = next;
    }
    WindowIdeal D = I;
    for (int r = 2; r <= bound; ++r) {
        WindowIdeal next = ideal_product(V, D, D);
        if (next.is_zero()) {
            st.verdict = NilpotencyStatus::Verdict::SolvableWithinWindow;
            st.stage = r;
            return st;
        }
        if (next == D) break;
        D = next;
    }
    return st;
}

// largest mode-invariant graded subspace supported in weights >= 2
inline WindowIdeal trivial_radical(const TruncatedVOA& V) {
    std::vector<Subspace> W;
    for (int w = V.n_min; w <= V.n_max; ++w) {
        std::size_t dw = static_cast<std::size_t>(V.dim(w));
        W.push_back(w >= 2 ? Subspace::full(dw) : Subspace(dw));
    }
    auto basis = V.basis();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int w = 2; w <= V.n_max; ++w) {
            Subspace& cur = W[static_cast<std::size_t>(w - V.n_min)];
            if (cur.is_zero()) continue;
            // constraints: u(k) x must reduce to zero modulo the target space
            std::vector<Vec> constraint_rows;  // over cur-coordinates
            std::size_t cdim = cur.dim();
            for (auto u : basis) {
                auto [klo, khi] = V.k_range(u.weight, w);
                for (int k = klo; k <= khi; ++k) {
                    int wt = u.weight + w - k - 1;
                    const Subspace& target = W[static_cast<std::size_t>(wt - V.n_min)];
                    if (target.is_full()) continue;
                    // one constraint block: reduce(u(k) x) = 0
                    std::vector<Vec> block(static_cast<std::size_t>(V.dim(wt)),
                                           zero_vec(cdim));
                    bool nonzero = false;
                    for (std::size_t j = 0; j < cdim; ++j) {
                        GradedVector xj = V.from_weight_vec(w, cur.basis()[j]);
                        Vec img = target.reduce(V.weight_component(
                            mode_apply(V, GradedVector::unit(u), k, xj), wt));
                        for (std::size_t i = 0; i < img.size(); ++i)
                            if (!img[i].is_zero()) {
                                block[i][j] = img[i];
                                nonzero = true;
                            }
                    }
                    if (nonzero)
                        for (auto& row : block) constraint_rows.push_back(std::move(row));
                }
            }
            if (constraint_rows.empty()) continue;
            Matrix sys = Matrix::from_rows(constraint_rows, cdim);
            Subspace sols = kernel(sys);
            if (sols.dim() == cdim) continue;
            std::vector<Vec> new_basis;
            for (const auto& s : sols.basis()) {
                Vec v = zero_vec(static_cast<std::size_t>(V.dim(w)));
                for (std::size_t j = 0; j < cdim; ++j)
                    if (!s[j].is_zero()) axpy(v, s[j], cur.basis()[j]);
                new_basis.push_back(std::move(v));
            }
            cur = Subspace::span(static_cast<std::size_t>(V.dim(w)), new_basis);
            changed = true;
        }
    }
    WindowIdeal T;
    T.host = &V;
    T.per_weight = std::move(W);
    T.exact = V.complete || T.is_zero();
    return T;
}

// quotient by a window ideal (per-weight canonical complements)
inline TruncatedVOA quotient_voa(const TruncatedVOA& V, const WindowIdeal& I,
                                 std::string name) {
    return quotient_voa(V, I.per_weight, std::move(name));
}

}  // namespace voa
