#pragma once

// Virasoro oracle: the vacuum Verma module quotient V_c (highest weight 0,
// L(-1)1 = 0) with states L(-l_1)...L(-l_r)1, l_i >= 2, encoded as integer
// partitions with all parts >= 2. Operators are straightened against
//   [L(m), L(n)] = (m - n) L(m+n) + delta_{m+n,0} (c/12)(m^3 - m),
// and vertex operator modes come from the iterate formula
//   (u(m)v)(k) = sum_i (-1)^i C(m,i) ( u(m-i) v(k+i) - (-1)^m v(m+k-i) u(i) )
// with u = omega. The invariant form has L(n)^t = L(-n) and <1,1> = 1.
// Independent of the TruncatedVOA machinery by construction.

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "voa/free_boson.hpp"  // Partition, FockVector helpers
#include "voa/linalg.hpp"

namespace voa {

class VirasoroOracle {
public:
    explicit VirasoroOracle(Rational central_charge)
        : c_(std::move(central_charge)) {}

    const Rational& central_charge() const { return c_; }

    // L(m) on a canonical monomial
    const FockVector& apply_l(int m, const Partition& p) {
        auto key = std::make_pair(m, p);
        auto it = l_memo_.find(key);
        if (it != l_memo_.end()) return it->second;
        FockVector out;
        if (p.empty()) {
            if (m <= -2) fock_add(out, Partition{-m}, Rational(1));
            // L(m)1 = 0 for m >= -1 (the L(-1)1 = 0 quotient)
        } else if (m <= -2 && -m >= p.front()) {
            Partition r = p;
            r.insert(r.begin(), -m);
            fock_add(out, r, Rational(1));
        } else {
            int head = p.front();
            Partition tail(p.begin() + 1, p.end());
            // L(m) L(-head) = L(-head) L(m) + (m + head) L(m - head)
            //                + delta_{m,head} (c/12)(m^3 - m)
            for (const auto& [q, d] : apply_l(m, tail))
                for (const auto& [r, e] : apply_l(-head, q)) fock_add(out, r, d * e);
            if (m + head != 0)
                for (const auto& [r, e] : apply_l(m - head, tail))
                    fock_add(out, r, Rational(m + head) * e);
            if (m == head) {
                long long mm = m;
                fock_add(out, tail, c_ * Rational(mm * mm * mm - mm, 12));
            }
        }
        return l_memo_.emplace(std::move(key), std::move(out)).first->second;
    }

    FockVector apply_l(int m, const FockVector& v) {
        FockVector out;
        for (const auto& [p, c] : v)
            for (const auto& [r, d] : apply_l(m, p)) fock_add(out, r, c * d);
        return out;
    }

    // a(k)b for basis monomials
    const FockVector& mode(const Partition& a, int k, const Partition& b) {
        auto key = std::make_tuple(a, k, b);
        auto it = mode_memo_.find(key);
        if (it != mode_memo_.end()) return it->second;
        FockVector out;
        if (a.empty()) {
            if (k == -1) fock_add(out, b, Rational(1));
        } else {
            // a = omega(m) v with m = 1 - a_1
            int m = 1 - a.front();
            Partition v(a.begin() + 1, a.end());
            int wv = partition_weight(v), wb = partition_weight(b);
            int i_max = std::max(wv + wb - k - 1, wb + 1);
            for (int i = 0; i <= i_max; ++i) {
                Rational ci = binomial(m, i);
                if (ci.is_zero()) continue;
                if (i % 2 != 0) ci = -ci;
                // omega(m-i) v(k+i) b
                FockVector t1 = mode_on(v, k + i, b);
                if (!t1.empty())
                    for (const auto& [r, d] : apply_l(m - i - 1, t1))
                        fock_add(out, r, ci * d);
                // -(-1)^m v(m+k-i) omega(i) b
                const FockVector& lb = apply_l(i - 1, b);
                if (!lb.empty()) {
                    Rational cf = m % 2 == 0 ? -ci : ci;
                    for (const auto& [r, d] : mode_on(v, m + k - i, lb))
                        fock_add(out, r, cf * d);
                }
            }
        }
        return mode_memo_.emplace(std::move(key), std::move(out)).first->second;
    }

    FockVector mode_on(const Partition& a, int k, const FockVector& v) {
        FockVector out;
        for (const auto& [p, c] : v)
            for (const auto& [r, d] : mode(a, k, p)) fock_add(out, r, c * d);
        return out;
    }
    FockVector mode_on(const Partition& a, int k, const Partition& b) {
        return mode(a, k, b);
    }

    // invariant form <x, y>, L(n) adjoint to L(-n)
    Rational form(const Partition& x, const Partition& y) {
        if (x.empty()) {
            if (partition_weight(y) != 0) return Rational(0);
            return Rational(1);
        }
        Partition tail(x.begin() + 1, x.end());
        Rational r(0);
        for (const auto& [q, d] : apply_l(x.front(), y)) r += d * form(tail, q);
        return r;
    }

    // Gram matrix of the weight-n basis (partitions into parts >= 2,
    // reverse-lexicographic order)
    Matrix gram_matrix(int level) {
        auto base = partitions(level, 2);
        Matrix g(base.size(), base.size());
        for (std::size_t i = 0; i < base.size(); ++i)
            for (std::size_t j = 0; j < base.size(); ++j) {
                Rational v = form(base[i], base[j]);
                if (!v.is_zero()) g.set(i, j, v);
            }
        return g;
    }

private:
    Rational c_;
    std::map<std::pair<int, Partition>, FockVector> l_memo_;
    std::map<std::tuple<Partition, int, Partition>, FockVector> mode_memo_;
};

}  // namespace voa
