#pragma once

// Weight-truncated vertex operator algebra by structure constants.
//
// The window [n_min, n_max] is a quotient: any product component whose weight
// leaves the window is projected to zero, so every mode is a total linear
// operator on a finite-dimensional graded space. Weights below n_min are
// declared empty in the modeled object (the window is only ever cut from
// above), which is what makes the skew-symmetry and commutator sums finite.
// A host with `complete` set models a VOA with no states above n_max either;
// nothing is ever lost to truncation on such a host.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "voa/errors.hpp"
#include "voa/linalg.hpp"
#include "voa/rational.hpp"

namespace voa {

struct WeightedIndex {
    int weight = 0;
    int index = 0;
    friend auto operator<=>(const WeightedIndex&, const WeightedIndex&) = default;
};

// Sparse graded vector: no stored zeros.
class GradedVector {
public:
    GradedVector() = default;

    static GradedVector unit(WeightedIndex wi) {
        GradedVector v;
        v.comps_[wi] = Rational(1);
        return v;
    }

    bool is_zero() const { return comps_.empty(); }
    const std::map<WeightedIndex, Rational>& components() const { return comps_; }

    Rational coeff(WeightedIndex wi) const {
        auto it = comps_.find(wi);
        return it == comps_.end() ? Rational(0) : it->second;
    }
    void set(WeightedIndex wi, const Rational& c) {
        if (c.is_zero())
            comps_.erase(wi);
        else
            comps_[wi] = c;
    }
    void add(WeightedIndex wi, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = comps_.try_emplace(wi, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) comps_.erase(it);
        }
    }
    void add_scaled(const GradedVector& v, const Rational& c) {
        if (c.is_zero()) return;
        for (const auto& [wi, x] : v.comps_) add(wi, c * x);
    }
    GradedVector& operator+=(const GradedVector& v) {
        add_scaled(v, Rational(1));
        return *this;
    }
    GradedVector& operator-=(const GradedVector& v) {
        add_scaled(v, Rational(-1));
        return *this;
    }
    friend GradedVector operator+(GradedVector a, const GradedVector& b) {
        a += b;
        return a;
    }
    friend GradedVector operator-(GradedVector a, const GradedVector& b) {
        a -= b;
        return a;
    }
    friend GradedVector operator*(const Rational& c, const GradedVector& v) {
        GradedVector r;
        r.add_scaled(v, c);
        return r;
    }

    // weight when homogeneous (zero vector reports nullopt)
    std::optional<int> homogeneous_weight() const {
        if (comps_.empty()) return std::nullopt;
        int w = comps_.begin()->first.weight;
        for (const auto& [wi, c] : comps_)
            if (wi.weight != w) return std::nullopt;
        return w;
    }

    friend bool operator==(const GradedVector&, const GradedVector&) = default;
    friend auto operator<=>(const GradedVector& a, const GradedVector& b) {
        return a.comps_ <=> b.comps_;
    }

private:
    std::map<WeightedIndex, Rational> comps_;
};

struct ModeKey {
    int wa = 0, ia = 0;
    int k = 0;
    int wb = 0, ib = 0;
    friend auto operator<=>(const ModeKey&, const ModeKey&) = default;
};

// Sparse table of basis products a(k)b. Entries conceptually exist for every
// triple whose output weight lands in the window; zero outputs are not stored.
class ModeTable {
public:
    void set(const ModeKey& key, GradedVector value) {
        if (value.is_zero())
            entries_.erase(key);
        else
            entries_[key] = std::move(value);
    }
    const GradedVector& get(const ModeKey& key) const {
        auto it = entries_.find(key);
        return it == entries_.end() ? empty_ : it->second;
    }
    const std::map<ModeKey, GradedVector>& entries() const { return entries_; }
    friend bool operator==(const ModeTable&, const ModeTable&) = default;

private:
    std::map<ModeKey, GradedVector> entries_;
    inline static const GradedVector empty_{};
};

struct CheckOutcome {
    enum class Status { Exact, Skipped };
    Status status = Status::Exact;
    int skip_weight = 0;  // the out-of-window intermediate weight when Skipped

    static CheckOutcome exact() { return {Status::Exact, 0}; }
    static CheckOutcome skipped(int w) { return {Status::Skipped, w}; }
    bool is_exact() const { return status == Status::Exact; }
};

struct TruncatedVOA {
    std::string name;
    int n_min = -1;
    int n_max = 0;
    std::vector<int> dims;  // per weight, n_min..n_max
    bool complete = false;  // modeled object has no states above n_max
    WeightedIndex vacuum{0, 0};
    GradedVector omega;  // homogeneous of weight 2, possibly zero
    Rational central_charge;
    ModeTable modes;

    bool in_window(int w) const { return w >= n_min && w <= n_max; }
    int dim(int w) const { return in_window(w) ? dims[static_cast<std::size_t>(w - n_min)] : 0; }
    int total_dim() const {
        int t = 0;
        for (int d : dims) t += d;
        return t;
    }

    // all k with output weight wa + wb - k - 1 inside the window
    std::pair<int, int> k_range(int wa, int wb) const {
        return {wa + wb - 1 - n_max, wa + wb - 1 - n_min};
    }

    std::vector<WeightedIndex> basis() const {
        std::vector<WeightedIndex> r;
        for (int w = n_min; w <= n_max; ++w)
            for (int i = 0; i < dim(w); ++i) r.push_back({w, i});
        return r;
    }

    GradedVector vacuum_vector() const { return GradedVector::unit(vacuum); }

    // dense coordinates of the weight-w component
    Vec weight_component(const GradedVector& v, int w) const {
        Vec r = zero_vec(static_cast<std::size_t>(dim(w)));
        auto it = v.components().lower_bound({w, 0});
        for (; it != v.components().end() && it->first.weight == w; ++it)
            r[static_cast<std::size_t>(it->first.index)] = it->second;
        return r;
    }
    GradedVector from_weight_vec(int w, const Vec& coords) const {
        GradedVector v;
        for (std::size_t i = 0; i < coords.size(); ++i)
            v.set({w, static_cast<int>(i)}, coords[i]);
        return v;
    }

    friend bool operator==(const TruncatedVOA& a, const TruncatedVOA& b) {
        return a.name == b.name && a.n_min == b.n_min && a.n_max == b.n_max &&
               a.dims == b.dims && a.complete == b.complete && a.vacuum == b.vacuum &&
               a.omega == b.omega && a.central_charge == b.central_charge &&
               a.modes == b.modes;
    }

    void validate_entry_shapes() const {
        for (const auto& [key, val] : modes.entries()) {
            int w_out = key.wa + key.wb - key.k - 1;
            if (!in_window(w_out) || !in_window(key.wa) || !in_window(key.wb))
                throw input_error(name + ": mode entry outside window");
            if (key.ia >= dim(key.wa) || key.ib >= dim(key.wb))
                throw input_error(name + ": mode entry index out of range");
            for (const auto& [wi, c] : val.components())
                if (wi.weight != w_out || wi.index >= dim(wi.weight))
                    throw input_error(name + ": mode entry violates the weight rule");
        }
    }
};

// Bilinear extension of the table; components leaving the window were already
// projected away when the table was built.
inline GradedVector mode_apply(const TruncatedVOA& V, const GradedVector& a, int k,
                               const GradedVector& b) {
    GradedVector out;
    for (const auto& [ai, ca] : a.components()) {
        for (const auto& [bi, cb] : b.components()) {
            int w_out = ai.weight + bi.weight - k - 1;
            if (!V.in_window(w_out)) continue;
            const GradedVector& e =
                V.modes.get({ai.weight, ai.index, k, bi.weight, bi.index});
            out.add_scaled(e, ca * cb);
        }
    }
    return out;
}

// L(n) = omega(n+1)
inline GradedVector virasoro_op(const TruncatedVOA& V, int n, const GradedVector& v) {
    return mode_apply(V, V.omega, n + 1, v);
}

// matrix of v(k): V_w -> V_{w + wt(v) - k - 1} for homogeneous v
inline Matrix mode_matrix(const TruncatedVOA& V, const GradedVector& v, int k, int w) {
    auto wv = v.homogeneous_weight();
    int weight_v = wv.value_or(0);
    if (!v.is_zero() && !wv) throw input_error("mode_matrix: inhomogeneous operator state");
    int w_out = weight_v + w - k - 1;
    Matrix m(static_cast<std::size_t>(V.dim(w_out)), static_cast<std::size_t>(V.dim(w)));
    for (int j = 0; j < V.dim(w); ++j) {
        GradedVector img = mode_apply(V, v, k, GradedVector::unit({w, j}));
        Vec col = V.weight_component(img, w_out);
        for (std::size_t i = 0; i < col.size(); ++i)
            if (!col[i].is_zero()) m.set(i, static_cast<std::size_t>(j), col[i]);
    }
    return m;
}

}  // namespace voa
