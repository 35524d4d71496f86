#pragma once

// Axiom verification for truncated VOAs.
//
// Every check instance is an identity between rational vectors. An instance
// is Exact when every intermediate term of its defining sum has weight inside
// the window, in which case window arithmetic reproduces the genuine VOA
// computation and the identity must hold on the nose. When an intermediate
// exits through the top of the window the instance is Skipped and counted,
// never silently passed. Weights below n_min are empty by convention, so
// low-side terms vanish exactly and all sums here are finite.
//
// Mode index ranges are the stored ones: for a pair (a, b), every k whose
// output weight lies in the window. These are exactly the operators any
// downstream computation can use.

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "voa/core.hpp"

namespace voa {

inline std::string wi_str(WeightedIndex wi) {
    std::ostringstream os;
    os << "(" << wi.weight << "," << wi.index << ")";
    return os.str();
}

inline std::string gv_str(const GradedVector& v) {
    if (v.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [wi, c] : v.components()) {
        if (!first) os << " + ";
        os << c.to_string() << "*" << wi_str(wi);
        first = false;
    }
    return os.str();
}

struct AxiomCounts {
    long exact = 0;
    long failed = 0;
    long skipped = 0;
};

struct AxiomReport {
    std::map<std::string, AxiomCounts> families;
    std::vector<std::string> failures;   // deterministic order, capped
    std::map<int, long> skip_weights;    // forcing weight -> instance count
    long failure_overflow = 0;           // failures beyond the stored cap

    static constexpr std::size_t kMaxStoredFailures = 100;

    bool ok() const {
        for (const auto& [name, c] : families)
            if (c.failed) return false;
        return true;
    }
    long total_exact() const {
        long t = 0;
        for (const auto& [name, c] : families) t += c.exact;
        return t;
    }
    long total_skipped() const {
        long t = 0;
        for (const auto& [name, c] : families) t += c.skipped;
        return t;
    }
    long total_failed() const {
        long t = 0;
        for (const auto& [name, c] : families) t += c.failed;
        return t;
    }

    std::string summary() const {
        std::ostringstream os;
        for (const auto& [name, c] : families)
            os << name << ": exact=" << c.exact << " failed=" << c.failed
               << " skipped=" << c.skipped << "\n";
        for (const auto& f : failures) os << "FAIL " << f << "\n";
        if (failure_overflow) os << "(" << failure_overflow << " further failures)\n";
        return os.str();
    }
};

namespace detail {

class AxiomChecker {
public:
    explicit AxiomChecker(const TruncatedVOA& V) : V_(V) {}

    AxiomReport run() {
        basis_ = V_.basis();
        check_weight_rule();
        check_vacuum();
        check_creation();
        check_grading();
        check_skew();
        check_commutator();
        check_translation();
        check_virasoro();
        return std::move(report_);
    }

private:
    const TruncatedVOA& V_;
    std::vector<WeightedIndex> basis_;
    AxiomReport report_;

    const GradedVector& entry(WeightedIndex a, int k, WeightedIndex b) const {
        return V_.modes.get({a.weight, a.index, k, b.weight, b.index});
    }

    // an intermediate of this weight was truncated away (never on a complete
    // host, where weights above the window are genuinely empty)
    bool lost(int w) const { return w > V_.n_max && !V_.complete; }

    void pass(const std::string& fam) { ++report_.families[fam].exact; }
    void skip(const std::string& fam, int weight) {
        ++report_.families[fam].skipped;
        ++report_.skip_weights[weight];
    }
    void fail(const std::string& fam, const std::string& detail) {
        auto& c = report_.families[fam];
        ++c.failed;
        if (report_.failures.size() < AxiomReport::kMaxStoredFailures)
            report_.failures.push_back(fam + ": " + detail);
        else
            ++report_.failure_overflow;
    }
    void expect(const std::string& fam, const GradedVector& lhs,
                const GradedVector& rhs, const std::string& where) {
        if (lhs == rhs) {
            pass(fam);
        } else {
            fail(fam, where + " lhs=" + gv_str(lhs) + " rhs=" + gv_str(rhs));
        }
    }

    void check_weight_rule() {
        for (const auto& [key, val] : V_.modes.entries()) {
            int w_out = key.wa + key.wb - key.k - 1;
            bool good = V_.in_window(w_out) && key.ia < V_.dim(key.wa) &&
                        key.ib < V_.dim(key.wb);
            for (const auto& [wi, c] : val.components())
                good = good && wi.weight == w_out && wi.index < V_.dim(wi.weight);
            if (good) {
                pass("weight_rule");
            } else {
                std::ostringstream os;
                os << "entry a=(" << key.wa << "," << key.ia << ") k=" << key.k
                   << " b=(" << key.wb << "," << key.ib << ")";
                fail("weight_rule", os.str());
            }
        }
    }

    // 1(k) = delta_{k,-1} id
    void check_vacuum() {
        for (auto b : basis_) {
            auto [klo, khi] = V_.k_range(0, b.weight);
            for (int k = klo; k <= khi; ++k) {
                GradedVector want = k == -1 ? GradedVector::unit(b) : GradedVector();
                expect("vacuum", entry(V_.vacuum, k, b), want,
                       "1(" + std::to_string(k) + ")" + wi_str(b));
            }
        }
    }

    // a(-1)1 = a, a(k)1 = 0 for k >= 0
    void check_creation() {
        for (auto a : basis_) {
            expect("creation", entry(a, -1, V_.vacuum), GradedVector::unit(a),
                   wi_str(a) + "(-1)1");
            auto [klo, khi] = V_.k_range(a.weight, 0);
            for (int k = std::max(0, klo); k <= khi; ++k)
                expect("creation", entry(a, k, V_.vacuum), GradedVector(),
                       wi_str(a) + "(" + std::to_string(k) + ")1");
        }
    }

    // L(0)v = wt(v) v
    void check_grading() {
        for (auto v : basis_) {
            GradedVector lhs = virasoro_op(V_, 0, GradedVector::unit(v));
            GradedVector rhs =
                Rational(static_cast<long long>(v.weight)) * GradedVector::unit(v);
            expect("grading", lhs, rhs, "L(0)" + wi_str(v));
        }
    }

    // b(k)a = -sum_{j>=0} (-1)^{k+j} (L(-1)^j / j!) a(k+j)b
    // All intermediates have weight <= w_out, so these instances are always
    // exact.
    void check_skew() {
        for (auto a : basis_) {
            for (auto b : basis_) {
                auto [klo, khi] = V_.k_range(a.weight, b.weight);
                for (int k = klo; k <= khi; ++k) {
                    int w_out = a.weight + b.weight - k - 1;
                    GradedVector rhs;
                    for (int j = 0; w_out - j >= V_.n_min; ++j) {
                        GradedVector term = entry(a, k + j, b);
                        for (int s = 0; s < j; ++s) term = virasoro_op(V_, -1, term);
                        int sgn = ((k + j) % 2 == 0) ? 1 : -1;
                        rhs.add_scaled(term, Rational(-sgn) / factorial(static_cast<unsigned>(j)));
                    }
                    std::ostringstream os;
                    os << wi_str(b) << "(" << k << ")" << wi_str(a);
                    expect("skew", entry(b, k, a), rhs, os.str());
                }
            }
        }
    }

    // [a(m), b(n)]c = sum_{j>=0} C(m, j) (a(j)b)(m+n-j) c
    void check_commutator() {
        for (auto a : basis_) {
            for (auto b : basis_) {
                // j with output weight above the window; a(j)b is unknowable
                // there, and C(m, 0) = 1 always, so every instance of this
                // pair skips when the range is nonempty
                int j_trunc = a.weight + b.weight - 1 - V_.n_max;
                int j_max = a.weight + b.weight - 1 - V_.n_min;
                for (auto c : basis_) {
                    auto [nlo, nhi] = V_.k_range(b.weight, c.weight);
                    for (int n = nlo; n <= nhi; ++n) {
                        int w_bnc = b.weight + c.weight - n - 1;
                        auto [mlo, mhi] = V_.k_range(a.weight, w_bnc);
                        for (int m = mlo; m <= mhi; ++m)
                            commutator_instance(a, b, c, m, n, j_trunc, j_max);
                    }
                }
            }
        }
    }

    void commutator_instance(WeightedIndex a, WeightedIndex b, WeightedIndex c,
                             int m, int n, int j_trunc, int j_max) {
        if (j_trunc > 0 && !V_.complete) {
            skip("commutator", a.weight + b.weight - 1);
            return;
        }
        int w_amc = a.weight + c.weight - m - 1;
        if (lost(w_amc)) {
            skip("commutator", w_amc);
            return;
        }
        GradedVector lhs = mode_apply(V_, GradedVector::unit(a), m, entry(b, n, c));
        lhs -= mode_apply(V_, GradedVector::unit(b), n, entry(a, m, c));
        GradedVector rhs;
        for (int j = 0; j <= j_max; ++j) {
            Rational coeff = binomial(m, j);
            if (coeff.is_zero()) continue;
            const GradedVector& ajb = entry(a, j, b);
            if (ajb.is_zero()) continue;
            rhs.add_scaled(mode_apply(V_, ajb, m + n - j, GradedVector::unit(c)), coeff);
        }
        std::ostringstream os;
        os << "a=" << wi_str(a) << " b=" << wi_str(b) << " c=" << wi_str(c)
           << " m=" << m << " n=" << n;
        expect("commutator", lhs, rhs, os.str());
    }

    // (L(-1)a)(n) = -n a(n-1)
    void check_translation() {
        for (auto a : basis_) {
            if (lost(a.weight + 1)) {
                skip("translation", a.weight + 1);
                continue;
            }
            GradedVector ta = virasoro_op(V_, -1, GradedVector::unit(a));
            for (auto c : basis_) {
                auto [nlo, nhi] = V_.k_range(a.weight + 1, c.weight);
                for (int n = nlo; n <= nhi; ++n) {
                    GradedVector lhs = mode_apply(V_, ta, n, GradedVector::unit(c));
                    GradedVector rhs =
                        Rational(-static_cast<long long>(n)) * entry(a, n - 1, c);
                    std::ostringstream os;
                    os << "a=" << wi_str(a) << " n=" << n << " c=" << wi_str(c);
                    expect("translation", lhs, rhs, os.str());
                }
            }
        }
    }

    // [L(m), L(n)] = (m-n) L(m+n) + delta_{m+n,0} (c/12)(m^3 - m)
    void check_virasoro() {
        for (auto c : basis_) {
            GradedVector cv = GradedVector::unit(c);
            for (int n = c.weight - V_.n_max; n <= c.weight - V_.n_min; ++n) {
                GradedVector lnc = virasoro_op(V_, n, cv);
                int w2 = c.weight - n;
                for (int m = w2 - V_.n_max; m <= w2 - V_.n_min; ++m) {
                    int w_lmc = c.weight - m;
                    if (lost(w_lmc)) {
                        skip("virasoro", w_lmc);
                        continue;
                    }
                    GradedVector lhs = virasoro_op(V_, m, lnc);
                    lhs -= virasoro_op(V_, n, virasoro_op(V_, m, cv));
                    GradedVector rhs = Rational(static_cast<long long>(m - n)) *
                                       virasoro_op(V_, m + n, cv);
                    if (m + n == 0) {
                        long long mm = m;
                        rhs.add_scaled(cv, V_.central_charge *
                                               Rational(mm * mm * mm - mm, 12));
                    }
                    std::ostringstream os;
                    os << "m=" << m << " n=" << n << " c=" << wi_str(c);
                    expect("virasoro", lhs, rhs, os.str());
                }
            }
        }
    }
};

}  // namespace detail

inline AxiomReport verify_axioms(const TruncatedVOA& V) {
    return detail::AxiomChecker(V).run();
}

}  // namespace voa
