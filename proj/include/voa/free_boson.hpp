#pragma once

// Rank-one free boson oracle, written directly against the bracket relations
// [alpha(m), alpha(n)] = g m delta_{m+n,0} on Fock spaces of charge q (where
// alpha(0) acts as q g). States are monomials alpha(-l_1)...alpha(-l_r)|q>,
// encoded as integer partitions. Vertex operator modes come from the
// normal-ordered product formula
//   Y(alpha(-m_1)...alpha(-m_r)1, z) = : prod_i d^(m_i-1) alpha(z)/(m_i-1)! :
// with coefficients extracted exactly. This engine never consults a
// TruncatedVOA; builders use it as the independent source of structure
// constants.

#include <algorithm>
#include <map>
#include <vector>

#include "voa/rational.hpp"

namespace voa {

using Partition = std::vector<int>;  // parts sorted descending

inline int partition_weight(const Partition& p) {
    int w = 0;
    for (int x : p) w += x;
    return w;
}

// all partitions of n with parts in [min_part, n], reverse-lexicographic
inline std::vector<Partition> partitions(int n, int min_part = 1) {
    std::vector<Partition> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    if (n < min_part) return out;
    struct Rec {
        int min_part;
        std::vector<Partition>& out;
        Partition cur;
        void go(int rem, int max_part) {
            if (rem == 0) {
                out.push_back(cur);
                return;
            }
            for (int p = std::min(rem, max_part); p >= min_part; --p) {
                cur.push_back(p);
                go(rem - p, p);
                cur.pop_back();
            }
        }
    } rec{min_part, out, {}};
    rec.go(n, n);
    return out;
}

using FockVector = std::map<Partition, Rational>;

inline void fock_add(FockVector& v, const Partition& p, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = v.try_emplace(p, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    }
}

class FreeBosonOracle {
public:
    // gram = <alpha, alpha>
    explicit FreeBosonOracle(Rational gram) : g_(std::move(gram)) {}

    const Rational& gram() const { return g_; }

    // alpha(n) on a charge-q monomial
    FockVector alpha(int n, const Partition& p, long long q) const {
        FockVector out;
        if (n < 0) {
            Partition r = p;
            r.insert(std::upper_bound(r.begin(), r.end(), -n, std::greater<int>()), -n);
            fock_add(out, r, Rational(1));
        } else if (n == 0) {
            fock_add(out, p, Rational(q) * g_);
        } else {
            auto mult = static_cast<long long>(std::count(p.begin(), p.end(), n));
            if (mult > 0) {
                Partition r = p;
                r.erase(std::find(r.begin(), r.end(), n));
                fock_add(out, r, Rational(n) * Rational(mult) * g_);
            }
        }
        return out;
    }

    FockVector alpha(int n, const FockVector& v, long long q) const {
        FockVector out;
        for (const auto& [p, c] : v)
            for (const auto& [r, d] : alpha(n, p, q)) fock_add(out, r, c * d);
        return out;
    }

    // L(-1) = (1/g) sum_{k>=0} alpha(-1-k) alpha(k), valid on any charge sector
    FockVector translate(const FockVector& v, long long q) const {
        FockVector out;
        Rational inv_g = g_.inverse();
        for (const auto& [p, c] : v) {
            if (q != 0) {
                for (const auto& [r, d] : alpha(-1, p, q))
                    fock_add(out, r, c * d * Rational(q));
            }
            for (int part : distinct_parts(p)) {
                FockVector t = alpha(part, p, q);
                t = alpha(-1 - part, t, q);
                for (const auto& [r, d] : t) fock_add(out, r, c * d * inv_g);
            }
        }
        return out;
    }

    // mode a(k) of the state alpha(-mu_1)...alpha(-mu_r)1 applied to a
    // charge-q monomial; the output is homogeneous of partition weight
    // |lam| - (k + 1 - |mu|) and is returned only when that weight is in
    // [0, cap]
    FockVector mode(const Partition& mu, int k, const Partition& lam, long long q,
                    int cap) const {
        FockVector out;
        int target = k + 1 - partition_weight(mu);
        int out_weight = partition_weight(lam) - target;
        if (out_weight < 0 || out_weight > cap) return out;
        std::vector<int> chosen(mu.size(), 0);
        enumerate(mu, lam, q, out_weight, 0, target, chosen, out);
        return out;
    }

    FockVector mode(const Partition& mu, int k, const FockVector& v, long long q,
                    int cap) const {
        FockVector out;
        for (const auto& [lam, c] : v)
            for (const auto& [r, d] : mode(mu, k, lam, q, cap)) fock_add(out, r, c * d);
        return out;
    }

private:
    Rational g_;

    static std::vector<int> distinct_parts(const Partition& p) {
        std::vector<int> d;
        for (int x : p)
            if (d.empty() || d.back() != x) d.push_back(x);
        return d;
    }

    // choose alpha-mode m_i for factor i; per-factor candidates are
    // annihilation of a part of lam, alpha(0) when the charge acts, or a
    // creation of depth <= out_weight
    void enumerate(const Partition& mu, const Partition& lam, long long q,
                   int out_weight, std::size_t i, int rem, std::vector<int>& chosen,
                   FockVector& out) const {
        if (i == mu.size()) {
            if (rem == 0) apply_tuple(mu, lam, q, chosen, out);
            return;
        }
        // feasibility bounds for the remaining factors
        int left = static_cast<int>(mu.size() - i);
        int max_part = lam.empty() ? 0 : lam.front();
        if (rem > left * max_part || rem < -left * out_weight) return;

        for (int part : distinct_parts(lam)) {
            chosen[i] = part;
            enumerate(mu, lam, q, out_weight, i + 1, rem - part, chosen, out);
        }
        if (q != 0 && !g_.is_zero()) {
            chosen[i] = 0;
            enumerate(mu, lam, q, out_weight, i + 1, rem, chosen, out);
        }
        for (int depth = static_cast<int>(mu[i]); depth <= out_weight; ++depth) {
            chosen[i] = -depth;
            enumerate(mu, lam, q, out_weight, i + 1, rem + depth, chosen, out);
        }
    }

    void apply_tuple(const Partition& mu, const Partition& lam, long long q,
                     const std::vector<int>& chosen, FockVector& out) const {
        Rational coeff(1);
        // binomial factors (-1)^(mu_i - 1) C(m_i + mu_i - 1, mu_i - 1)
        for (std::size_t i = 0; i < mu.size(); ++i) {
            Rational b = binomial(chosen[i] + mu[i] - 1, mu[i] - 1);
            if (b.is_zero()) return;
            if (mu[i] % 2 == 0) b = -b;
            coeff *= b;
        }
        // normal order: annihilators and alpha(0) first, then creators
        Partition state = lam;
        for (std::size_t i = 0; i < mu.size(); ++i) {
            int m = chosen[i];
            if (m > 0) {
                auto mult = static_cast<long long>(
                    std::count(state.begin(), state.end(), m));
                if (mult == 0) return;
                coeff *= Rational(m) * Rational(mult) * g_;
                state.erase(std::find(state.begin(), state.end(), m));
            } else if (m == 0) {
                coeff *= Rational(q) * g_;
            }
        }
        if (coeff.is_zero()) return;
        for (std::size_t i = 0; i < mu.size(); ++i)
            if (chosen[i] < 0)
                state.insert(std::upper_bound(state.begin(), state.end(), -chosen[i],
                                              std::greater<int>()),
                             -chosen[i]);
        fock_add(out, state, coeff);
    }
};

}  // namespace voa
