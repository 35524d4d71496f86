#pragma once

// Exact arbitrary-precision integers and rationals. Everything downstream
// assumes these never round: all algebraic identities in the library are
// checked by literal equality of Rational values.

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <iosfwd>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace voa {

class BigInt {
public:
    BigInt() = default;
    BigInt(long long v) {
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        // careful with LLONG_MIN
        unsigned long long u = v < 0 ? ~static_cast<unsigned long long>(v) + 1ull
                                     : static_cast<unsigned long long>(v);
        mag_.push_back(static_cast<uint32_t>(u & 0xffffffffu));
        if (u >> 32) mag_.push_back(static_cast<uint32_t>(u >> 32));
    }

    static BigInt parse(std::string_view s) {
        BigInt r;
        bool neg = false;
        size_t i = 0;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            neg = s[i] == '-';
            ++i;
        }
        if (i == s.size()) throw std::invalid_argument("BigInt: empty literal");
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("BigInt: bad digit in literal");
            r.mul_small_inplace(10);
            r.add_small_inplace(static_cast<uint32_t>(s[i] - '0'));
        }
        if (!r.mag_.empty()) r.sign_ = neg ? -1 : 1;
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    bool fits_u64() const { return mag_.size() <= 2; }
    unsigned long long to_u64() const {
        unsigned long long v = 0;
        if (mag_.size() > 1) v = static_cast<unsigned long long>(mag_[1]) << 32;
        if (!mag_.empty()) v |= mag_[0];
        return v;
    }
    // value must fit; used for small exponents/indices only
    long long to_ll() const {
        assert(fits_u64() && to_u64() <= 0x7fffffffffffffffull);
        long long v = static_cast<long long>(to_u64());
        return sign_ < 0 ? -v : v;
    }

    friend BigInt operator-(BigInt a) {
        a.sign_ = -a.sign_;
        return a;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return r;
            if (c > 0) {
                r.mag_ = sub_mag(a.mag_, b.mag_);
                r.sign_ = a.sign_;
            } else {
                r.mag_ = sub_mag(b.mag_, a.mag_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (size_t i = 0; i < a.mag_.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < b.mag_.size(); ++j) {
                uint64_t cur = static_cast<uint64_t>(a.mag_[i]) * b.mag_[j] +
                               r.mag_[i + j] + carry;
                r.mag_[i + j] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
            }
            size_t k = i + b.mag_.size();
            while (carry) {
                uint64_t cur = r.mag_[k] + carry;
                r.mag_[k] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        r.trim();
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    // truncated toward zero, like C++ integer division
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
        int c = cmp_mag(a.mag_, b.mag_);
        if (c < 0) {
            q = BigInt();
            r = a;
            return;
        }
        divmod_mag(a.mag_, b.mag_, q.mag_, r.mag_);
        q.trim();
        r.trim();
        q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
        r.sign_ = r.mag_.empty() ? 0 : a.sign_;
    }
    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a.sign_ = a.mag_.empty() ? 0 : 1;
        b.sign_ = b.mag_.empty() ? 0 : 1;
        // fast path covers nearly every gcd at desk scale
        if (a.fits_u64() && b.fits_u64()) {
            unsigned long long x = a.to_u64(), y = b.to_u64();
            while (y) {
                unsigned long long t = x % y;
                x = y;
                y = t;
            }
            return from_u64(x);
        }
        while (!b.is_zero()) {
            BigInt t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static BigInt pow(const BigInt& base, unsigned e) {
        BigInt r(1), b = base;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
        int c = cmp_mag(a.mag_, b.mag_);
        if (a.sign_ < 0) c = -c;
        return c <=> 0;
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::vector<uint32_t> m = mag_;
        std::string digits;
        while (!m.empty()) {
            uint64_t rem = 0;
            for (size_t i = m.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | m[i];
                m[i] = static_cast<uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (!m.empty() && m.back() == 0) m.pop_back();
            for (int d = 0; d < 9; ++d) {
                digits.push_back(static_cast<char>('0' + rem % 10));
                rem /= 10;
            }
        }
        while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
        if (sign_ < 0) digits.push_back('-');
        std::reverse(digits.begin(), digits.end());
        return digits;
    }

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v) {
        return os << v.to_string();
    }

private:
    int sign_ = 0;
    std::vector<uint32_t> mag_;  // little-endian, no leading zero limbs

    static BigInt from_u64(unsigned long long u) {
        BigInt r;
        if (u == 0) return r;
        r.sign_ = 1;
        r.mag_.push_back(static_cast<uint32_t>(u & 0xffffffffu));
        if (u >> 32) r.mag_.push_back(static_cast<uint32_t>(u >> 32));
        return r;
    }

    void trim() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) sign_ = 0;
    }

    void mul_small_inplace(uint32_t f) {
        uint64_t carry = 0;
        for (auto& limb : mag_) {
            uint64_t cur = static_cast<uint64_t>(limb) * f + carry;
            limb = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) mag_.push_back(static_cast<uint32_t>(carry));
    }
    void add_small_inplace(uint32_t v) {
        uint64_t carry = v;
        for (size_t i = 0; carry && i < mag_.size(); ++i) {
            uint64_t cur = mag_[i] + carry;
            mag_[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) mag_.push_back(static_cast<uint32_t>(carry));
    }

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        const auto& lo = a.size() < b.size() ? a : b;
        const auto& hi = a.size() < b.size() ? b : a;
        std::vector<uint32_t> r = hi;
        uint64_t carry = 0;
        for (size_t i = 0; i < lo.size(); ++i) {
            uint64_t cur = static_cast<uint64_t>(r[i]) + lo[i] + carry;
            r[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        for (size_t i = lo.size(); carry && i < r.size(); ++i) {
            uint64_t cur = static_cast<uint64_t>(r[i]) + carry;
            r[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) r.push_back(static_cast<uint32_t>(carry));
        return r;
    }
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r = a;
        int64_t borrow = 0;
        for (size_t i = 0; i < b.size() || borrow; ++i) {
            int64_t cur = static_cast<int64_t>(r[i]) - borrow -
                          (i < b.size() ? b[i] : 0);
            borrow = cur < 0;
            if (cur < 0) cur += (1ll << 32);
            r[i] = static_cast<uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // Knuth algorithm D on magnitudes; |a| >= |b|, b nonzero
    static void divmod_mag(const std::vector<uint32_t>& a,
                           const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
        if (b.size() == 1) {
            q.assign(a.size(), 0);
            uint64_t rem = 0;
            for (size_t i = a.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | a[i];
                q[i] = static_cast<uint32_t>(cur / b[0]);
                rem = cur % b[0];
            }
            r.clear();
            if (rem) r.push_back(static_cast<uint32_t>(rem));
            return;
        }
        // normalize so the top limb of b has its high bit set
        int shift = 0;
        for (uint32_t top = b.back(); !(top & 0x80000000u); top <<= 1) ++shift;
        std::vector<uint32_t> u = shl_bits(a, shift);
        std::vector<uint32_t> v = shl_bits(b, shift);
        u.push_back(0);
        size_t n = v.size(), m = u.size() - n - 1;
        q.assign(m + 1, 0);
        for (size_t j = m + 1; j-- > 0;) {
            uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
            uint64_t qhat = num / v[n - 1];
            uint64_t rhat = num % v[n - 1];
            while (qhat >= (1ull << 32) ||
                   qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
                --qhat;
                rhat += v[n - 1];
                if (rhat >= (1ull << 32)) break;
            }
            // multiply-subtract
            int64_t borrow = 0;
            uint64_t carry = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t p = qhat * v[i] + carry;
                carry = p >> 32;
                int64_t t = static_cast<int64_t>(u[i + j]) -
                            static_cast<int64_t>(p & 0xffffffffu) - borrow;
                borrow = t < 0;
                if (t < 0) t += (1ll << 32);
                u[i + j] = static_cast<uint32_t>(t);
            }
            int64_t t = static_cast<int64_t>(u[j + n]) -
                        static_cast<int64_t>(carry) - borrow;
            if (t < 0) {
                // qhat was one too large; add back
                t += (1ll << 32);
                --qhat;
                uint64_t c2 = 0;
                for (size_t i = 0; i < n; ++i) {
                    uint64_t cur = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
                    u[i + j] = static_cast<uint32_t>(cur);
                    c2 = cur >> 32;
                }
                t += static_cast<int64_t>(c2);
            }
            u[j + n] = static_cast<uint32_t>(t);
            q[j] = static_cast<uint32_t>(qhat);
        }
        u.resize(n);
        r = shr_bits(u, shift);
    }
    static std::vector<uint32_t> shl_bits(const std::vector<uint32_t>& a, int s) {
        if (s == 0) return a;
        std::vector<uint32_t> r(a.size() + 1, 0);
        for (size_t i = 0; i < a.size(); ++i) {
            r[i] |= a[i] << s;
            r[i + 1] = a[i] >> (32 - s);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
    static std::vector<uint32_t> shr_bits(const std::vector<uint32_t>& a, int s) {
        if (s == 0) {
            auto r = a;
            while (!r.empty() && r.back() == 0) r.pop_back();
            return r;
        }
        std::vector<uint32_t> r(a.size(), 0);
        for (size_t i = 0; i < a.size(); ++i) {
            r[i] |= a[i] >> s;
            if (i + 1 < a.size()) r[i] |= a[i + 1] << (32 - s);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
};

// Rational number in lowest terms, denominator > 0.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
        normalize();
    }

    // parses "p" or "p/q"
    static Rational parse(std::string_view s) {
        size_t slash = s.find('/');
        if (slash == std::string_view::npos) return Rational(BigInt::parse(s), BigInt(1));
        return Rational(BigInt::parse(s.substr(0, slash)),
                        BigInt::parse(s.substr(slash + 1)));
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == BigInt(1) && den_ == BigInt(1); }
    bool is_integer() const { return den_ == BigInt(1); }
    int sign() const { return num_.sign(); }

    friend Rational operator-(Rational a) {
        a.num_ = -a.num_;
        return a;
    }
    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        if (a.is_zero() || b.is_zero()) return Rational();
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(den_, num_);
    }

    static Rational pow(const Rational& base, unsigned e) {
        return Rational(BigInt::pow(base.num_, e), BigInt::pow(base.den_, e));
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    // "p" when integral, else "p/q"
    std::string to_string() const {
        if (is_integer()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }
    friend std::ostream& operator<<(std::ostream& os, const Rational& v) {
        return os << v.to_string();
    }

private:
    BigInt num_, den_;

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        if (den_.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = BigInt::gcd(num_, den_);
        if (!(g == BigInt(1))) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
};

// binomial with arbitrary integer top, nonnegative bottom: C(m, j)
inline Rational binomial(long long m, long long j) {
    if (j < 0) return Rational(0);
    Rational r(1);
    for (long long i = 0; i < j; ++i)
        r *= Rational(m - i, i + 1);
    return r;
}

inline Rational factorial(unsigned n) {
    Rational r(1);
    for (unsigned i = 2; i <= n; ++i) r *= Rational(static_cast<long long>(i));
    return r;
}

}  // namespace voa
