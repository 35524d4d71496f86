#pragma once

// Structure-preserving rebuilds of a TruncatedVOA: change of basis, passage
// to a mode-closed subspace (blocks, ideals-as-subalgebras), and quotient by
// a graded ideal. All products are recomputed from representatives, so the
// results are standalone values, not views.

#include <string>
#include <vector>

#include "voa/core.hpp"

namespace voa {

namespace detail {

// coordinate solver for a list of (independent) vectors inside one weight
// space: coords(v) with v = sum coords_i basis_i
class WeightBasis {
public:
    WeightBasis() = default;
    WeightBasis(const TruncatedVOA& host, int w, const std::vector<GradedVector>& vecs)
        : host_(&host), w_(w) {
        std::size_t n = static_cast<std::size_t>(host.dim(w));
        mat_ = Matrix(n, vecs.size());
        for (std::size_t j = 0; j < vecs.size(); ++j) {
            Vec col = host.weight_component(vecs[j], w);
            for (std::size_t i = 0; i < n; ++i)
                if (!col[i].is_zero()) mat_.set(i, j, col[i]);
        }
    }
    // nullopt when v is outside the span
    std::optional<Vec> coords(const GradedVector& v) const {
        return solve(mat_, host_->weight_component(v, w_));
    }

private:
    const TruncatedVOA* host_ = nullptr;
    int w_ = 0;
    Matrix mat_;
};

}  // namespace detail

// Rebuild V on the given per-weight bases (same spans, new coordinates).
// new_basis is indexed by weight - n_min and must be a basis of each weight
// space; vacuum_vec must be one of the weight-0 basis vectors (its position
// becomes the vacuum index).
inline TruncatedVOA rebase(const TruncatedVOA& V,
                           const std::vector<std::vector<GradedVector>>& new_basis,
                           const GradedVector& vacuum_vec, std::string name) {
    TruncatedVOA W;
    W.name = std::move(name);
    W.n_min = V.n_min;
    W.n_max = V.n_max;
    W.complete = V.complete;
    W.central_charge = V.central_charge;
    W.dims.assign(V.dims.size(), 0);

    std::vector<detail::WeightBasis> solver(V.dims.size());
    for (int w = V.n_min; w <= V.n_max; ++w) {
        std::size_t wi = static_cast<std::size_t>(w - V.n_min);
        if (new_basis[wi].size() != static_cast<std::size_t>(V.dim(w)))
            throw input_error("rebase: basis size mismatch at weight " + std::to_string(w));
        W.dims[wi] = V.dim(w);
        solver[wi] = detail::WeightBasis(V, w, new_basis[wi]);
    }

    int vac_idx = -1;
    const auto& w0 = new_basis[static_cast<std::size_t>(-V.n_min)];
    for (std::size_t j = 0; j < w0.size(); ++j)
        if (w0[j] == vacuum_vec) vac_idx = static_cast<int>(j);
    if (vac_idx < 0) throw input_error("rebase: vacuum is not a basis vector");
    W.vacuum = {0, vac_idx};

    auto coords_of = [&](const GradedVector& v) {
        GradedVector out;
        for (int w = V.n_min; w <= V.n_max; ++w) {
            Vec comp = V.weight_component(v, w);
            if (is_zero_vec(comp)) continue;
            auto c = solver[static_cast<std::size_t>(w - V.n_min)].coords(
                V.from_weight_vec(w, comp));
            if (!c) throw integrity_error("rebase: vector left the span");
            for (std::size_t i = 0; i < c->size(); ++i)
                out.add({w, static_cast<int>(i)}, (*c)[i]);
        }
        return out;
    };

    W.omega = coords_of(V.omega);
    for (int wa = V.n_min; wa <= V.n_max; ++wa)
        for (int ia = 0; ia < V.dim(wa); ++ia)
            for (int wb = V.n_min; wb <= V.n_max; ++wb)
                for (int ib = 0; ib < V.dim(wb); ++ib) {
                    const GradedVector& a =
                        new_basis[static_cast<std::size_t>(wa - V.n_min)][static_cast<std::size_t>(ia)];
                    const GradedVector& b =
                        new_basis[static_cast<std::size_t>(wb - V.n_min)][static_cast<std::size_t>(ib)];
                    auto [klo, khi] = V.k_range(wa, wb);
                    for (int k = klo; k <= khi; ++k) {
                        GradedVector prod = mode_apply(V, a, k, b);
                        if (prod.is_zero()) continue;
                        W.modes.set({wa, ia, k, wb, ib}, coords_of(prod));
                    }
                }
    return W;
}

// Restrict V to a mode-closed graded subspace. sub_basis is indexed by
// weight - n_min; vacuum_vec and omega_vec are given in host coordinates and
// vacuum_vec must be listed (its position becomes the vacuum index).
// Throws integrity_error if a product escapes the subspace.
inline TruncatedVOA subvoa(const TruncatedVOA& V,
                           const std::vector<std::vector<GradedVector>>& sub_basis,
                           const GradedVector& vacuum_vec, const GradedVector& omega_vec,
                           std::string name) {
    TruncatedVOA W;
    W.name = std::move(name);
    W.n_min = V.n_min;
    W.n_max = V.n_max;
    W.complete = V.complete;
    W.central_charge = V.central_charge;
    W.dims.assign(V.dims.size(), 0);

    std::vector<detail::WeightBasis> solver(V.dims.size());
    for (int w = V.n_min; w <= V.n_max; ++w) {
        std::size_t wi = static_cast<std::size_t>(w - V.n_min);
        W.dims[wi] = static_cast<int>(sub_basis[wi].size());
        solver[wi] = detail::WeightBasis(V, w, sub_basis[wi]);
    }

    auto coords_of = [&](const GradedVector& v, const char* what) {
        GradedVector out;
        for (int w = V.n_min; w <= V.n_max; ++w) {
            Vec comp = V.weight_component(v, w);
            if (is_zero_vec(comp)) continue;
            auto c = solver[static_cast<std::size_t>(w - V.n_min)].coords(
                V.from_weight_vec(w, comp));
            if (!c)
                throw integrity_error(std::string("subvoa: ") + what +
                                      " escapes the subspace");
            for (std::size_t i = 0; i < c->size(); ++i) out.add({w, static_cast<int>(i)}, (*c)[i]);
        }
        return out;
    };

    (void)coords_of(vacuum_vec, "vacuum");  // membership check
    int vac_idx = -1;
    const auto& w0 = sub_basis[static_cast<std::size_t>(-V.n_min)];
    for (std::size_t j = 0; j < w0.size(); ++j)
        if (w0[j] == vacuum_vec) vac_idx = static_cast<int>(j);
    if (vac_idx < 0) throw input_error("subvoa: vacuum is not a listed basis vector");
    W.vacuum = {0, vac_idx};
    W.omega = coords_of(omega_vec, "omega");

    for (int wa = V.n_min; wa <= V.n_max; ++wa)
        for (std::size_t ia = 0; ia < sub_basis[static_cast<std::size_t>(wa - V.n_min)].size(); ++ia)
            for (int wb = V.n_min; wb <= V.n_max; ++wb)
                for (std::size_t ib = 0; ib < sub_basis[static_cast<std::size_t>(wb - V.n_min)].size(); ++ib) {
                    const GradedVector& a = sub_basis[static_cast<std::size_t>(wa - V.n_min)][ia];
                    const GradedVector& b = sub_basis[static_cast<std::size_t>(wb - V.n_min)][ib];
                    auto [klo, khi] = V.k_range(wa, wb);
                    for (int k = klo; k <= khi; ++k) {
                        GradedVector prod = mode_apply(V, a, k, b);
                        if (prod.is_zero()) continue;
                        W.modes.set({wa, static_cast<int>(ia), k, wb, static_cast<int>(ib)},
                                    coords_of(prod, "product"));
                    }
                }
    return W;
}

// Quotient of V by a graded ideal given as per-weight canonical subspaces
// (indexed by weight - n_min). Representatives are fixed once: the vacuum
// representative, then images of host basis vectors, filtered to a basis of
// the quotient.
inline TruncatedVOA quotient_voa(const TruncatedVOA& V,
                                 const std::vector<Subspace>& ideal, std::string name) {
    TruncatedVOA W;
    W.name = std::move(name);
    W.n_min = V.n_min;
    W.n_max = V.n_max;
    W.complete = V.complete;
    W.central_charge = V.central_charge;
    W.dims.assign(V.dims.size(), 0);

    // per weight: representative vectors (host coords of reduced reps)
    std::vector<std::vector<Vec>> reps(V.dims.size());
    std::vector<std::vector<Vec>> red_basis(V.dims.size());  // reduced, for coords
    for (int w = V.n_min; w <= V.n_max; ++w) {
        std::size_t wi = static_cast<std::size_t>(w - V.n_min);
        const Subspace& I = ideal[wi];
        std::size_t n = static_cast<std::size_t>(V.dim(w));
        std::vector<Vec> candidates;
        if (w == 0) {
            Vec vac = V.weight_component(V.vacuum_vector(), 0);
            if (is_zero_vec(I.reduce(vac)))
                throw input_error("quotient: vacuum lies in the ideal");
            candidates.push_back(vac);
        }
        for (std::size_t j = 0; j < n; ++j) {
            Vec e = zero_vec(n);
            e[j] = Rational(1);
            candidates.push_back(std::move(e));
        }
        // greedy independent filter of reduced candidates
        std::vector<Vec> chosen_red;
        for (const auto& cand : candidates) {
            Vec red = I.reduce(cand);
            if (is_zero_vec(red)) continue;
            std::vector<Vec> test = chosen_red;
            test.push_back(red);
            if (detail::rref_rows(test, n).size() == chosen_red.size() + 1) {
                chosen_red.push_back(red);
                reps[wi].push_back(cand);
            }
        }
        red_basis[wi] = std::move(chosen_red);
        W.dims[wi] = static_cast<int>(reps[wi].size());
    }

    W.vacuum = {0, 0};

    auto coords_of = [&](const GradedVector& v) {
        GradedVector out;
        for (int w = V.n_min; w <= V.n_max; ++w) {
            std::size_t wi = static_cast<std::size_t>(w - V.n_min);
            Vec comp = ideal[wi].reduce(V.weight_component(v, w));
            if (is_zero_vec(comp)) continue;
            Matrix m(comp.size(), red_basis[wi].size());
            for (std::size_t j = 0; j < red_basis[wi].size(); ++j)
                for (std::size_t i = 0; i < comp.size(); ++i)
                    if (!red_basis[wi][j][i].is_zero()) m.set(i, j, red_basis[wi][j][i]);
            auto c = solve(m, comp);
            if (!c) throw integrity_error("quotient: reduction left the span");
            for (std::size_t i = 0; i < c->size(); ++i)
                out.add({w, static_cast<int>(i)}, (*c)[i]);
        }
        return out;
    };

    W.omega = coords_of(V.omega);
    for (int wa = V.n_min; wa <= V.n_max; ++wa)
        for (std::size_t ia = 0; ia < reps[static_cast<std::size_t>(wa - V.n_min)].size(); ++ia)
            for (int wb = V.n_min; wb <= V.n_max; ++wb)
                for (std::size_t ib = 0; ib < reps[static_cast<std::size_t>(wb - V.n_min)].size(); ++ib) {
                    GradedVector a = V.from_weight_vec(
                        wa, reps[static_cast<std::size_t>(wa - V.n_min)][ia]);
                    GradedVector b = V.from_weight_vec(
                        wb, reps[static_cast<std::size_t>(wb - V.n_min)][ib]);
                    auto [klo, khi] = V.k_range(wa, wb);
                    for (int k = klo; k <= khi; ++k) {
                        GradedVector prod = mode_apply(V, a, k, b);
                        if (prod.is_zero()) continue;
                        GradedVector qc = coords_of(prod);
                        if (qc.is_zero()) continue;
                        W.modes.set({wa, static_cast<int>(ia), k, wb, static_cast<int>(ib)}, qc);
                    }
                }
    return W;
}

}  // namespace voa
