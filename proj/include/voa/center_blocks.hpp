#pragma once

// The center Z(V) = ker L(-1) with its commutative associative algebra
// structure under the -1 product, annihilator ideals, the endomorphism-ring
// commutation checks, and the block decomposition cut out by the primitive
// idempotents of Z(V).
//
// Several of the verifications here recheck identities that hold in every
// genuine VOA; a failure therefore signals corrupted input data, not a
// mathematical discovery, and raises integrity_error.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "voa/axioms.hpp"
#include "voa/comm_assoc.hpp"
#include "voa/core.hpp"
#include "voa/window_ideal.hpp"

namespace voa {

struct CenterSubalgebra {
    const TruncatedVOA* host = nullptr;
    std::vector<GradedVector> inclusion;  // weight-0 basis vectors of Z(V)
    Subspace weight0_subspace;            // the same basis in V_0 coordinates
    CommAssocAlgebra algebra;

    std::size_t dim() const { return inclusion.size(); }

    // coordinates of a weight-0 vector in the center basis, if it lies in Z
    std::optional<Vec> coordinates(const GradedVector& v) const {
        return weight0_subspace.coordinates(host->weight_component(v, 0));
    }
    GradedVector from_coords(const Vec& c) const {
        GradedVector out;
        for (std::size_t i = 0; i < c.size(); ++i) out.add_scaled(inclusion[i], c[i]);
        return out;
    }
};

// Z(V) = ker(L(-1)|V_0), with re-verifications: every center state has a
// constant vertex operator (only the -1 mode acts), is annihilated by L(n)
// for n >= -1, and the -1 product closes to a commutative associative unital
// algebra.
inline CenterSubalgebra center(const TruncatedVOA& V) {
    CenterSubalgebra Z;
    Z.host = &V;
    Z.weight0_subspace = kernel(mode_matrix(V, V.omega, 0, 0));
    for (const auto& row : Z.weight0_subspace.basis())
        Z.inclusion.push_back(V.from_weight_vec(0, row));

    auto basis = V.basis();
    for (const auto& v : Z.inclusion) {
        // constant vertex operator: v(n) = 0 for n != -1 wherever stored
        for (auto b : basis) {
            auto [klo, khi] = V.k_range(0, b.weight);
            for (int n = klo; n <= khi; ++n) {
                if (n == -1) continue;
                if (!mode_apply(V, v, n, GradedVector::unit(b)).is_zero())
                    throw integrity_error(V.name +
                                          ": center state has a non-constant vertex operator");
            }
        }
        // annihilated by L(n), n >= -1 (outputs below the window are empty)
        for (int n = -1; n <= -V.n_min; ++n)
            if (!virasoro_op(V, n, v).is_zero())
                throw integrity_error(V.name + ": center state not primary");
    }

    Z.algebra.dim = Z.inclusion.size();
    auto unit_coords = Z.coordinates(V.vacuum_vector());
    if (!unit_coords)
        throw integrity_error(V.name + ": vacuum does not lie in the center");
    Z.algebra.unit = *unit_coords;
    Z.algebra.table.assign(Z.algebra.dim, std::vector<Vec>(Z.algebra.dim));
    for (std::size_t i = 0; i < Z.algebra.dim; ++i)
        for (std::size_t j = 0; j < Z.algebra.dim; ++j) {
            GradedVector p = mode_apply(V, Z.inclusion[i], -1, Z.inclusion[j]);
            auto c = Z.coordinates(p);
            if (!c)
                throw integrity_error(V.name + ": center is not closed under the -1 product");
            Z.algebra.table[i][j] = *c;
        }
    try {
        Z.algebra.validate();
    } catch (const input_error& e) {
        throw integrity_error(V.name + ": center algebra invariant failed: " + e.what());
    }
    return Z;
}

// Ann(v) = ker(v(-1)) for v in Z(V), as a window ideal; closure under all
// modes and the commutation [v(-1), u(n)] = 0 are re-verified.
inline WindowIdeal annihilator(const TruncatedVOA& V, const GradedVector& v) {
    if (!virasoro_op(V, -1, v).is_zero())
        throw input_error("annihilator: state is not in the center");
    WindowIdeal I;
    I.host = &V;
    for (int w = V.n_min; w <= V.n_max; ++w)
        I.per_weight.push_back(kernel(mode_matrix(V, v, -1, w)));
    I.exact = V.complete || I.is_zero();

    if (!is_window_ideal(V, I))
        throw integrity_error(V.name + ": annihilator is not mode-closed");
    auto basis = V.basis();
    for (auto u : basis)
        for (auto c : basis) {
            auto [klo, khi] = V.k_range(u.weight, c.weight);
            for (int n = klo; n <= khi; ++n) {
                GradedVector unc =
                    V.modes.get({u.weight, u.index, n, c.weight, c.index});
                GradedVector lhs = mode_apply(V, v, -1, unc);
                GradedVector rhs = mode_apply(
                    V, GradedVector::unit(u), n,
                    mode_apply(V, v, -1, GradedVector::unit(c)));
                if (!(lhs == rhs))
                    throw integrity_error(V.name +
                                          ": center state fails to commute with a mode");
            }
        }
    return I;
}

struct EndoCheckReport {
    long commute_checked = 0;
    long morphism_checked = 0;
    bool ok = true;
    std::string first_failure;
};

// phi_a = a(-1) lies in End(V): commutes with every stored mode, and
// a -> phi_a is a ring morphism on the center.
inline EndoCheckReport endo_check(const TruncatedVOA& V, const CenterSubalgebra& Z,
                                  const GradedVector& a) {
    EndoCheckReport rep;
    if (!Z.coordinates(a)) throw input_error("endo_check: state is not in the center");
    auto basis = V.basis();
    for (auto u : basis)
        for (auto c : basis) {
            auto [klo, khi] = V.k_range(u.weight, c.weight);
            for (int n = klo; n <= khi; ++n) {
                GradedVector lhs = mode_apply(
                    V, a, -1, V.modes.get({u.weight, u.index, n, c.weight, c.index}));
                GradedVector rhs =
                    mode_apply(V, GradedVector::unit(u), n,
                               mode_apply(V, a, -1, GradedVector::unit(c)));
                ++rep.commute_checked;
                if (!(lhs == rhs) && rep.ok) {
                    rep.ok = false;
                    rep.first_failure = "phi_a does not commute with " + wi_str(u) + "(" +
                                        std::to_string(n) + ") on " + wi_str(c);
                }
            }
        }
    for (const auto& b : Z.inclusion) {
        GradedVector ab = mode_apply(V, a, -1, b);
        for (auto c : basis) {
            GradedVector lhs = mode_apply(V, ab, -1, GradedVector::unit(c));
            GradedVector rhs =
                mode_apply(V, a, -1, mode_apply(V, b, -1, GradedVector::unit(c)));
            ++rep.morphism_checked;
            if (!(lhs == rhs) && rep.ok) {
                rep.ok = false;
                rep.first_failure = "(a(-1)b)(-1) != a(-1)b(-1) on " + wi_str(c);
            }
        }
    }
    if (!rep.ok) throw integrity_error(V.name + ": endo_check failed: " + rep.first_failure);
    return rep;
}

// primitive idempotents of Z(V), pulled back to weight-0 states of V
inline std::vector<GradedVector> primitive_idempotents_of_center(
    const CenterSubalgebra& Z) {
    std::vector<GradedVector> out;
    for (const auto& e : primitive_idempotents(Z.algebra)) out.push_back(Z.from_coords(e));
    return out;
}

struct BlockDecomposition {
    std::vector<GradedVector> idempotents;       // aligned with blocks
    std::vector<TruncatedVOA> blocks;
    std::vector<std::vector<Matrix>> projections;  // [block][weight - n_min]
};

// V = V^1 + ... + V^n along the primitive idempotents of the center; blocks
// are materialized as standalone truncated VOAs with vacuum e_i and conformal
// vector e_i(-1) omega. Ordering: descending total dimension, then smallest
// idempotent coordinate vector.
inline BlockDecomposition block_decompose(const TruncatedVOA& V) {
    CenterSubalgebra Z = center(V);
    std::vector<GradedVector> idems = primitive_idempotents_of_center(Z);

    struct Entry {
        GradedVector e;
        Vec e_coords;
        std::vector<Matrix> proj;
        std::vector<std::vector<GradedVector>> basis;
        int total = 0;
    };
    std::vector<Entry> entries;
    for (const auto& e : idems) {
        Entry ent;
        ent.e = e;
        ent.e_coords = V.weight_component(e, 0);
        for (int w = V.n_min; w <= V.n_max; ++w) {
            Matrix P = mode_matrix(V, e, -1, w);
            std::vector<Vec> cols;
            for (std::size_t j = 0; j < P.cols(); ++j) {
                Vec col = zero_vec(P.rows());
                for (std::size_t i = 0; i < P.rows(); ++i) col[i] = P.get(i, j);
                cols.push_back(std::move(col));
            }
            // basis of the image, with the idempotent itself first at weight 0
            std::vector<Vec> chosen;
            std::vector<GradedVector> bas;
            if (w == 0) {
                chosen.push_back(ent.e_coords);
                bas.push_back(e);
            }
            for (auto& col : cols) {
                std::vector<Vec> test = chosen;
                test.push_back(col);
                if (detail::rref_rows(test, static_cast<std::size_t>(V.dim(w))).size() ==
                    chosen.size() + 1) {
                    bas.push_back(V.from_weight_vec(w, col));
                    chosen.push_back(std::move(col));
                }
            }
            ent.total += static_cast<int>(bas.size());
            ent.basis.push_back(std::move(bas));
            ent.proj.push_back(std::move(P));
        }
        entries.push_back(std::move(ent));
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.total != b.total) return a.total > b.total;
        return a.e_coords < b.e_coords;
    });

    BlockDecomposition dec;
    int dim_sum = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        auto& ent = entries[i];
        GradedVector omega_i = mode_apply(V, ent.e, -1, V.omega);
        TruncatedVOA block = subvoa(V, ent.basis, ent.e, omega_i,
                                    V.name + "_block" + std::to_string(i));
        AxiomReport rep = verify_axioms(block);
        if (!rep.ok())
            throw integrity_error(V.name + ": block " + std::to_string(i) +
                                  " fails the axiom checks");
        dim_sum += block.total_dim();
        dec.idempotents.push_back(std::move(ent.e));
        dec.projections.push_back(std::move(ent.proj));
        dec.blocks.push_back(std::move(block));
    }
    if (dim_sum != V.total_dim())
        throw integrity_error(V.name + ": block dimensions do not add up");
    return dec;
}

struct IndecomposabilityResult {
    bool indecomposable = false;
    std::vector<GradedVector> idempotents;  // the witness list
};

inline IndecomposabilityResult is_indecomposable(const TruncatedVOA& V) {
    CenterSubalgebra Z = center(V);
    IndecomposabilityResult r;
    r.idempotents = primitive_idempotents_of_center(Z);
    r.indecomposable = r.idempotents.size() == 1;
    return r;
}

}  // namespace voa
