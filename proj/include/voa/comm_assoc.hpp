#pragma once

// Finite-dimensional commutative associative unital algebras over Q by
// structure constants. Houses the nilradical (trace-form radical, valid in
// characteristic zero, post-verified by explicit nilpotency), minimal
// polynomials, rational-root splitting of the semisimple quotient, and
// idempotent lifting by the iteration e <- 3e^2 - 2e^3.

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "voa/errors.hpp"
#include "voa/linalg.hpp"

namespace voa {

using ProductTable = std::vector<std::vector<Vec>>;  // [i][j] -> product vector

inline Vec table_mult(const ProductTable& t, const Vec& a, const Vec& b) {
    Vec out = zero_vec(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            axpy(out, a[i] * b[j], t[i][j]);
        }
    }
    return out;
}

struct CommAssocAlgebra {
    std::size_t dim = 0;
    Vec unit;
    ProductTable table;

    Vec mult(const Vec& a, const Vec& b) const { return table_mult(table, a, b); }

    Matrix mult_matrix(const Vec& a) const {
        Matrix m(dim, dim);
        for (std::size_t j = 0; j < dim; ++j) {
            Vec e = zero_vec(dim);
            e[j] = Rational(1);
            Vec col = mult(a, e);
            for (std::size_t i = 0; i < dim; ++i)
                if (!col[i].is_zero()) m.set(i, j, col[i]);
        }
        return m;
    }

    Rational trace_of_mult(const Vec& a) const {
        Rational t(0);
        for (std::size_t j = 0; j < dim; ++j) {
            Vec e = zero_vec(dim);
            e[j] = Rational(1);
            t += mult(a, e)[j];
        }
        return t;
    }

    void validate() const {
        if (unit.size() != dim || table.size() != dim)
            throw input_error("CommAssocAlgebra: shape mismatch");
        std::vector<Vec> basis;
        for (std::size_t i = 0; i < dim; ++i) {
            Vec e = zero_vec(dim);
            e[i] = Rational(1);
            basis.push_back(std::move(e));
        }
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) {
                if (table[i][j] != table[j][i])
                    throw input_error("CommAssocAlgebra: not commutative");
                for (std::size_t l = 0; l < dim; ++l)
                    if (mult(table[i][j], basis[l]) != mult(basis[i], table[j][l]))
                        throw input_error("CommAssocAlgebra: not associative");
            }
        for (std::size_t i = 0; i < dim; ++i)
            if (mult(unit, basis[i]) != basis[i] || mult(basis[i], unit) != basis[i])
                throw input_error("CommAssocAlgebra: unit does not act as identity");
    }
};

// A = Q[u]/(f), f monic with coefficients low..high, basis 1, u, ..., u^{d-1}
inline CommAssocAlgebra polynomial_quotient_algebra(const std::vector<Rational>& monic_f) {
    std::size_t d = monic_f.size() - 1;
    if (d == 0) throw input_error("polynomial_quotient_algebra: constant modulus");
    CommAssocAlgebra A;
    A.dim = d;
    A.unit = zero_vec(d);
    A.unit[0] = Rational(1);
    // u^d = -sum_{i<d} f_i u^i
    Vec top = zero_vec(d);
    for (std::size_t i = 0; i < d; ++i) top[i] = -monic_f[i];
    std::vector<Vec> upow{A.unit};
    for (std::size_t n = 1; n < 2 * d; ++n) {
        const Vec& prev = upow.back();
        Vec next = zero_vec(d);
        for (std::size_t i = 0; i + 1 < d; ++i) next[i + 1] = prev[i];
        if (!prev[d - 1].is_zero()) axpy(next, prev[d - 1], top);
        upow.push_back(std::move(next));
    }
    A.table.assign(d, std::vector<Vec>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) A.table[i][j] = upow[i + j];
    return A;
}

// product algebra A x B (componentwise operations)
inline CommAssocAlgebra product_algebra(const CommAssocAlgebra& A,
                                        const CommAssocAlgebra& B) {
    CommAssocAlgebra P;
    P.dim = A.dim + B.dim;
    P.unit = zero_vec(P.dim);
    for (std::size_t i = 0; i < A.dim; ++i) P.unit[i] = A.unit[i];
    for (std::size_t i = 0; i < B.dim; ++i) P.unit[A.dim + i] = B.unit[i];
    P.table.assign(P.dim, std::vector<Vec>(P.dim, zero_vec(P.dim)));
    for (std::size_t i = 0; i < A.dim; ++i)
        for (std::size_t j = 0; j < A.dim; ++j)
            for (std::size_t l = 0; l < A.dim; ++l) P.table[i][j][l] = A.table[i][j][l];
    for (std::size_t i = 0; i < B.dim; ++i)
        for (std::size_t j = 0; j < B.dim; ++j)
            for (std::size_t l = 0; l < B.dim; ++l)
                P.table[A.dim + i][A.dim + j][A.dim + l] = B.table[i][j][l];
    return P;
}

inline CommAssocAlgebra quotient_algebra(const CommAssocAlgebra& A, const Subspace& I) {
    std::vector<Vec> reps;
    std::vector<Vec> reduced;
    std::vector<Vec> candidates;
    candidates.push_back(A.unit);
    for (std::size_t j = 0; j < A.dim; ++j) {
        Vec e = zero_vec(A.dim);
        e[j] = Rational(1);
        candidates.push_back(std::move(e));
    }
    for (const auto& cand : candidates) {
        Vec red = I.reduce(cand);
        if (is_zero_vec(red)) continue;
        std::vector<Vec> test = reduced;
        test.push_back(red);
        if (detail::rref_rows(test, A.dim) .size() == reduced.size() + 1) {
            reduced.push_back(red);
            reps.push_back(cand);
        }
    }
    CommAssocAlgebra Q;
    Q.dim = reps.size();
    Matrix m(A.dim, reduced.size());
    for (std::size_t j = 0; j < reduced.size(); ++j)
        for (std::size_t i = 0; i < A.dim; ++i)
            if (!reduced[j][i].is_zero()) m.set(i, j, reduced[j][i]);
    auto coords = [&](const Vec& v) {
        auto c = solve(m, I.reduce(v));
        if (!c) throw integrity_error("quotient_algebra: reduction left the span");
        return *c;
    };
    Q.unit = coords(A.unit);
    Q.table.assign(Q.dim, std::vector<Vec>(Q.dim));
    for (std::size_t i = 0; i < Q.dim; ++i)
        for (std::size_t j = 0; j < Q.dim; ++j)
            Q.table[i][j] = coords(A.mult(reps[i], reps[j]));
    return Q;
}

// ---- polynomials -----------------------------------------------------------

// monic minimal polynomial of x in the span of its powers starting from
// `one` (pass the algebra unit for the unital minimal polynomial, or x itself
// shifted for the non-unital one). Coefficients low..high, leading 1.
inline std::vector<Rational> minimal_polynomial(const ProductTable& table, const Vec& one,
                                                const Vec& x) {
    std::vector<Vec> powers{one};
    std::vector<Vec> echelon;
    for (;;) {
        std::vector<Vec> test = echelon;
        test.push_back(powers.back());
        if (detail::rref_rows(test, one.size()).size() == echelon.size()) {
            // last power is dependent: solve for its coordinates
            Matrix m(one.size(), powers.size() - 1);
            for (std::size_t j = 0; j + 1 < powers.size(); ++j)
                for (std::size_t i = 0; i < one.size(); ++i)
                    if (!powers[j][i].is_zero()) m.set(i, j, powers[j][i]);
            auto c = solve(m, powers.back());
            if (!c) throw integrity_error("minimal_polynomial: dependency vanished");
            std::vector<Rational> p(powers.size());
            for (std::size_t i = 0; i + 1 < powers.size(); ++i) p[i] = -(*c)[i];
            p.back() = Rational(1);
            return p;
        }
        echelon = std::move(test);
        powers.push_back(table_mult(table, powers.back(), x));
    }
}

using Poly = std::vector<Rational>;  // coefficients low..high

inline Poly poly_trim(Poly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}
inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return poly_trim(std::move(r));
}
inline Poly poly_add(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return poly_trim(std::move(a));
}
inline Poly poly_scale(Poly a, const Rational& c) {
    for (auto& x : a) x *= c;
    return poly_trim(std::move(a));
}
// a = q b + r with deg r < deg b
inline std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
    if (b.empty()) throw std::domain_error("poly_divmod: division by zero polynomial");
    Poly q;
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        if (q.size() < shift + 1) q.resize(shift + 1, Rational(0));
        q[shift] += f;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        a = poly_trim(std::move(a));
    }
    return {poly_trim(std::move(q)), std::move(a)};
}
// g = u a + v b with g monic gcd
struct PolyGcd {
    Poly g, u, v;
};
inline PolyGcd poly_ext_gcd(Poly a, Poly b) {
    Poly u0{Rational(1)}, v0, u1, v1{Rational(1)};
    while (!b.empty()) {
        auto [q, r] = poly_divmod(a, b);
        Poly u2 = poly_add(u0, poly_scale(poly_mul(q, u1), Rational(-1)));
        Poly v2 = poly_add(v0, poly_scale(poly_mul(q, v1), Rational(-1)));
        a = std::move(b);
        b = std::move(r);
        u0 = std::move(u1);
        v0 = std::move(v1);
        u1 = std::move(u2);
        v1 = std::move(v2);
    }
    if (!a.empty() && !a.back().is_one()) {
        Rational lead = a.back();
        a = poly_scale(std::move(a), lead.inverse());
        u0 = poly_scale(std::move(u0), lead.inverse());
        v0 = poly_scale(std::move(v0), lead.inverse());
    }
    return {std::move(a), std::move(u0), std::move(v0)};
}
// evaluate p at an algebra element (Horner), with the given unit
inline Vec poly_eval_elem(const ProductTable& table, const Vec& unit, const Vec& x,
                          const Poly& p) {
    Vec acc = zero_vec(unit.size());
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = table_mult(table, acc, x);
        axpy(acc, p[i], unit);
    }
    return acc;
}

inline std::string poly_str(const std::vector<Rational>& p) {
    std::string s;
    for (std::size_t i = p.size(); i-- > 0;) {
        if (p[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += p[i].to_string() + "*t^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

namespace detail {

inline std::vector<BigInt> divisors_for_roots(const BigInt& n) {
    BigInt a = n;
    if (a.sign() < 0) a = -a;
    if (!a.fits_u64() || a.to_u64() > (1ull << 62))
        throw integrity_error("rational root search: coefficient too large");
    unsigned long long v = a.to_u64();
    std::vector<BigInt> divs;
    for (unsigned long long d = 1; d * d <= v; ++d) {
        if (v % d) continue;
        divs.push_back(BigInt(static_cast<long long>(d)));
        if (d != v / d) divs.push_back(BigInt(static_cast<long long>(v / d)));
    }
    return divs;
}

}  // namespace detail

struct RootSplit {
    std::vector<std::pair<Rational, int>> roots;  // (root, multiplicity)
    std::vector<Rational> residual;               // monic factor with no rational root
};

inline void add_root(RootSplit& s, const Rational& r) {
    for (auto& [root, mult] : s.roots)
        if (root == r) {
            ++mult;
            return;
        }
    s.roots.push_back({r, 1});
}

// all rational roots (with multiplicity) of a monic polynomial over Q
inline RootSplit rational_roots(std::vector<Rational> p) {
    RootSplit out;
    auto eval = [](const std::vector<Rational>& q, const Rational& t) {
        Rational v(0);
        for (std::size_t i = q.size(); i-- > 0;) v = v * t + q[i];
        return v;
    };
    auto deflate = [](std::vector<Rational>& q, const Rational& r) {
        // synthetic division by (t - r); q is monic of degree >= 1
        std::vector<Rational> res(q.size() - 1);
        Rational carry(0);
        for (std::size_t i = q.size(); i-- > 1;) {
            carry = q[i] + carry * r;
            res[i - 1] = carry;
        }
        q = std::move(res);
    };

    // root 0 first
    while (p.size() > 1 && p[0].is_zero()) {
        p.erase(p.begin());
        add_root(out, Rational(0));
    }
    if (p.size() > 1) {
        // clear denominators: candidates are (divisor of a0)/(divisor of lead)
        BigInt den(1);
        for (const auto& c : p) den = den * (c.den() / BigInt::gcd(den, c.den()));
        std::vector<BigInt> ip(p.size());
        for (std::size_t i = 0; i < p.size(); ++i)
            ip[i] = p[i].num() * (den / p[i].den());
        auto nums = detail::divisors_for_roots(ip.front());
        auto dens = detail::divisors_for_roots(ip.back());
        std::vector<Rational> candidates;
        for (const auto& n : nums)
            for (const auto& d : dens) {
                candidates.push_back(Rational(n, d));
                candidates.push_back(Rational(-n, d));
            }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()),
                         candidates.end());
        for (const auto& r : candidates) {
            while (p.size() > 1 && eval(p, r).is_zero()) {
                deflate(p, r);
                add_root(out, r);
            }
        }
    }
    out.residual = std::move(p);
    return out;
}

// ---- nilradical ------------------------------------------------------------

// Radical of the trace form T(x, y) = trace(mult_{xy}); equals the set of
// nilpotent elements of a commutative associative algebra in characteristic
// zero. Post-verified, so corrupted inputs cannot smuggle through.
inline Subspace nilradical_assoc(const CommAssocAlgebra& A) {
    Matrix T(A.dim, A.dim);
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < A.dim; ++i) {
        Vec e = zero_vec(A.dim);
        e[i] = Rational(1);
        basis.push_back(std::move(e));
    }
    for (std::size_t i = 0; i < A.dim; ++i)
        for (std::size_t j = 0; j < A.dim; ++j) {
            Rational t = A.trace_of_mult(A.mult(basis[i], basis[j]));
            if (!t.is_zero()) T.set(i, j, t);
        }
    Subspace rad = kernel(T);

    for (const auto& b : rad.basis()) {
        Vec power = b;
        for (std::size_t s = 1; s < A.dim && !is_zero_vec(power); ++s)
            power = A.mult(power, b);
        if (!is_zero_vec(power))
            throw integrity_error("nilradical: trace radical element is not nilpotent");
    }
    if (!rad.is_zero()) {
        CommAssocAlgebra Q = quotient_algebra(A, rad);
        Matrix TQ(Q.dim, Q.dim);
        std::vector<Vec> qb;
        for (std::size_t i = 0; i < Q.dim; ++i) {
            Vec e = zero_vec(Q.dim);
            e[i] = Rational(1);
            qb.push_back(std::move(e));
        }
        for (std::size_t i = 0; i < Q.dim; ++i)
            for (std::size_t j = 0; j < Q.dim; ++j) {
                Rational t = Q.trace_of_mult(Q.mult(qb[i], qb[j]));
                if (!t.is_zero()) TQ.set(i, j, t);
            }
        if (!kernel(TQ).is_zero())
            throw integrity_error("nilradical: quotient still has trace radical");
    }
    return rad;
}

// smallest t >= 1 with N^t = 0 for the nilradical N (1 when N = 0)
inline int nilpotency_index(const CommAssocAlgebra& A, const Subspace& rad) {
    if (rad.is_zero()) return 1;
    std::vector<Vec> cur = rad.basis();
    int t = 1;
    while (!cur.empty()) {
        std::vector<Vec> next;
        for (const auto& x : cur)
            for (const auto& r : rad.basis()) next.push_back(A.mult(x, r));
        detail::rref_rows(next, A.dim);
        cur = std::move(next);
        ++t;
        if (t > static_cast<int>(A.dim) + 1)
            throw integrity_error("nilpotency_index: radical does not vanish");
    }
    return t;
}

// ---- idempotent lifting ----------------------------------------------------

struct LiftResult {
    Vec idempotent;
    int iterations = 0;
};

// iterate e <- 3e^2 - 2e^3 until e^2 = e; quadratic convergence along the
// nilradical. The cap is ceil(log2(dim)) + 2; exceeding it means the
// "idempotent modulo nilradical" precondition was violated upstream.
inline LiftResult lift_idempotent(const CommAssocAlgebra& A, const Vec& e0) {
    Vec e = e0;
    int cap = 2;
    for (std::size_t d = 1; d < A.dim; d *= 2) ++cap;
    for (int it = 0; it <= cap; ++it) {
        Vec e2 = A.mult(e, e);
        if (e2 == e) return {e, it};
        Vec e3 = A.mult(e2, e);
        Vec next = zero_vec(A.dim);
        axpy(next, Rational(3), e2);
        axpy(next, Rational(-2), e3);
        e = std::move(next);
    }
    throw integrity_error("lift_idempotent: no convergence; e0 is not idempotent modulo the nilradical");
}

// ---- primitive idempotents -------------------------------------------------

// Complete list of primitive idempotents: nilradical, then split the
// semisimple quotient into one-dimensional pieces by rational roots of
// minimal polynomials, then lift. Deterministic output order (sorted by
// coordinate vector).
inline std::vector<Vec> primitive_idempotents(const CommAssocAlgebra& A) {
    Subspace rad = nilradical_assoc(A);
    CommAssocAlgebra S = rad.is_zero() ? A : quotient_algebra(A, rad);

    // split S (semisimple) into primitive idempotents
    std::vector<Vec> stack{S.unit};
    std::vector<Vec> prims;
    while (!stack.empty()) {
        Vec f = stack.back();
        stack.pop_back();
        bool split_done = false;
        for (std::size_t j = 0; j < S.dim && !split_done; ++j) {
            Vec e = zero_vec(S.dim);
            e[j] = Rational(1);
            Vec x = S.mult(f, e);  // element of the component f S
            auto mp = minimal_polynomial(S.table, f, x);
            if (mp.size() <= 2) continue;  // scalar in this component
            RootSplit rs = rational_roots(mp);
            if (rs.residual.size() > 1) throw unsplittable_error(poly_str(rs.residual));
            for (const auto& [r, mult] : rs.roots)
                if (mult > 1)
                    throw integrity_error(
                        "primitive_idempotents: semisimple quotient has a repeated root");
            // Lagrange idempotents e_t = prod_{j != t} (x - r_j f)/(r_t - r_j)
            for (const auto& [rt, mult] : rs.roots) {
                Vec et = f;
                for (const auto& [rj, multj] : rs.roots) {
                    if (rj == rt) continue;
                    Vec factor = x;
                    axpy(factor, -rj, f);
                    et = S.mult(et, factor);
                    for (auto& c : et) c /= (rt - rj);
                }
                stack.push_back(std::move(et));
            }
            split_done = true;
        }
        if (!split_done) prims.push_back(std::move(f));
    }

    // lift along the nilradical
    std::vector<Vec> out;
    if (rad.is_zero()) {
        out = std::move(prims);
    } else {
        // representatives used by quotient_algebra: unit first, then basis
        std::vector<Vec> reps;
        std::vector<Vec> reduced;
        std::vector<Vec> candidates;
        candidates.push_back(A.unit);
        for (std::size_t j = 0; j < A.dim; ++j) {
            Vec e = zero_vec(A.dim);
            e[j] = Rational(1);
            candidates.push_back(std::move(e));
        }
        for (const auto& cand : candidates) {
            Vec red = rad.reduce(cand);
            if (is_zero_vec(red)) continue;
            std::vector<Vec> test = reduced;
            test.push_back(red);
            if (detail::rref_rows(test, A.dim).size() == reduced.size() + 1) {
                reduced.push_back(red);
                reps.push_back(cand);
            }
        }
        for (const auto& p : prims) {
            Vec e0 = zero_vec(A.dim);
            for (std::size_t j = 0; j < reps.size(); ++j) axpy(e0, p[j], reps[j]);
            out.push_back(lift_idempotent(A, e0).idempotent);
        }
    }

    // postconditions: orthogonal decomposition of the unit
    Vec sum = zero_vec(A.dim);
    for (const auto& e : out) {
        if (A.mult(e, e) != e) throw integrity_error("primitive_idempotents: lift not idempotent");
        sum = vec_add(sum, e);
    }
    if (sum != A.unit)
        throw integrity_error("primitive_idempotents: idempotents do not sum to the unit");
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j)
            if (!is_zero_vec(A.mult(out[i], out[j])))
                throw integrity_error("primitive_idempotents: idempotents not orthogonal");

    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace voa
