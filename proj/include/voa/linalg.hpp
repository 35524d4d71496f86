#pragma once

// Exact linear algebra over Q: row reduction, kernels, canonical subspaces,
// membership and intersection. Subspaces are kept in reduced row-echelon
// form so that equality of subspaces is equality of their basis matrices.

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "voa/errors.hpp"
#include "voa/rational.hpp"

namespace voa {

using Vec = std::vector<Rational>;

inline Vec zero_vec(std::size_t n) { return Vec(n, Rational(0)); }

inline bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

inline Vec& axpy(Vec& y, const Rational& a, const Vec& x) {
    for (std::size_t i = 0; i < y.size(); ++i)
        if (!x[i].is_zero()) y[i] += a * x[i];
    return y;
}

inline Vec scaled(Vec v, const Rational& a) {
    for (auto& x : v) x *= a;
    return v;
}

inline Vec vec_add(Vec a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, Rational(1));
        return m;
    }
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (!rows[i][j].is_zero()) m.set(i, j, rows[i][j]);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    // zero entries are never stored
    void set(std::size_t i, std::size_t j, const Rational& v) {
        if (i >= rows_ || j >= cols_) throw input_error("Matrix: index out of bounds");
        if (v.is_zero())
            entries_.erase({i, j});
        else
            entries_[{i, j}] = v;
    }
    Rational get(std::size_t i, std::size_t j) const {
        auto it = entries_.find({i, j});
        return it == entries_.end() ? Rational(0) : it->second;
    }
    const std::map<std::pair<std::size_t, std::size_t>, Rational>& entries() const {
        return entries_;
    }

    Vec row(std::size_t i) const {
        Vec r = zero_vec(cols_);
        for (auto it = entries_.lower_bound({i, 0});
             it != entries_.end() && it->first.first == i; ++it)
            r[it->first.second] = it->second;
        return r;
    }

    Vec apply(const Vec& v) const {
        if (v.size() != cols_) throw input_error("Matrix: vector length mismatch");
        Vec r = zero_vec(rows_);
        for (const auto& [ij, a] : entries_) r[ij.first] += a * v[ij.second];
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw input_error("Matrix: product shape mismatch");
        Matrix r(a.rows_, b.cols_);
        std::map<std::pair<std::size_t, std::size_t>, Rational> acc;
        for (const auto& [ij, x] : a.entries_)
            for (auto it = b.entries_.lower_bound({ij.second, 0});
                 it != b.entries_.end() && it->first.first == ij.second; ++it) {
                auto& slot = acc[{ij.first, it->first.second}];
                slot += x * it->second;
            }
        for (const auto& [ij, x] : acc)
            if (!x.is_zero()) r.entries_[ij] = x;
        return r;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw input_error("Matrix: sum shape mismatch");
        Matrix r = a;
        for (const auto& [ij, x] : b.entries_) {
            Rational v = r.get(ij.first, ij.second) + x;
            r.set(ij.first, ij.second, v);
        }
        return r;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::map<std::pair<std::size_t, std::size_t>, Rational> entries_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

namespace detail {

// Gauss-Jordan on dense rows; returns pivot columns. Rows end up reduced,
// pivot entry 1, pivot column otherwise zero, zero rows removed.
inline std::vector<std::size_t> rref_rows(std::vector<Vec>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        Rational inv = rows[r][c].inverse();
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            Rational f = -rows[i][c];
            axpy(rows[i], f, rows[r]);
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

}  // namespace detail

inline RrefResult rref(const Matrix& m) {
    std::vector<Vec> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    RrefResult res;
    res.pivots = detail::rref_rows(rows, m.cols());
    res.rank = res.pivots.size();
    // keep the original row count: reduced form pads with zero rows
    std::vector<Vec> padded = rows;
    padded.resize(m.rows(), zero_vec(m.cols()));
    res.reduced = Matrix::from_rows(padded, m.cols());
    return res;
}

// Subspace of Q^n in canonical (RREF) form.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

    static Subspace span(std::size_t ambient_dim, std::vector<Vec> gens) {
        for (const auto& g : gens)
            if (g.size() != ambient_dim) throw input_error("Subspace: generator length mismatch");
        detail::rref_rows(gens, ambient_dim);
        Subspace s(ambient_dim);
        s.basis_ = std::move(gens);
        s.recompute_pivots();
        return s;
    }
    static Subspace full(std::size_t ambient_dim) {
        std::vector<Vec> gens;
        for (std::size_t i = 0; i < ambient_dim; ++i) {
            Vec e = zero_vec(ambient_dim);
            e[i] = Rational(1);
            gens.push_back(std::move(e));
        }
        return span(ambient_dim, std::move(gens));
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    bool is_zero() const { return basis_.empty(); }
    bool is_full() const { return basis_.size() == ambient_; }

    // coordinates of v in the canonical basis, or nullopt if v is outside
    std::optional<Vec> coordinates(const Vec& v) const {
        if (v.size() != ambient_) throw input_error("Subspace: vector length mismatch");
        Vec rem = v;
        Vec coords = zero_vec(basis_.size());
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            const Rational& c = rem[pivots_[i]];
            if (c.is_zero()) continue;
            coords[i] = c;
            axpy(rem, -c, basis_[i]);
        }
        if (!is_zero_vec(rem)) return std::nullopt;
        return coords;
    }
    bool contains(const Vec& v) const { return coordinates(v).has_value(); }
    bool contains(const Subspace& other) const {
        for (const auto& b : other.basis_)
            if (!contains(b)) return false;
        return true;
    }

    // membership remainder: v reduced modulo this subspace
    Vec reduce(const Vec& v) const {
        Vec rem = v;
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            const Rational& c = rem[pivots_[i]];
            if (!c.is_zero()) axpy(rem, -c, basis_[i]);
        }
        return rem;
    }

    friend Subspace operator+(const Subspace& a, const Subspace& b) {
        if (a.ambient_ != b.ambient_) throw input_error("Subspace: ambient dimension mismatch");
        std::vector<Vec> gens = a.basis_;
        gens.insert(gens.end(), b.basis_.begin(), b.basis_.end());
        return span(a.ambient_, std::move(gens));
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_ = 0;
    std::vector<Vec> basis_;
    std::vector<std::size_t> pivots_;

    void recompute_pivots() {
        pivots_.clear();
        for (const auto& row : basis_) {
            std::size_t c = 0;
            while (c < ambient_ && row[c].is_zero()) ++c;
            pivots_.push_back(c);
        }
    }
};

// {v : m v = 0} in canonical form
inline Subspace kernel(const Matrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<Vec> gens;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v = zero_vec(m.cols());
        v[free] = Rational(1);
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            v[r.pivots[i]] = -r.reduced.get(i, free);
        gens.push_back(std::move(v));
    }
    return Subspace::span(m.cols(), std::move(gens));
}

inline std::optional<Vec> membership(const Subspace& s, const Vec& v) {
    return s.coordinates(v);
}

// a ∩ b via the kernel of the stacked relation Σ x_i a_i - Σ y_j b_j = 0
inline Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw input_error("intersect: ambient dimension mismatch");
    const std::size_t n = a.ambient_dim();
    const std::size_t da = a.dim(), db = b.dim();
    if (da == 0 || db == 0) return Subspace::span(n, {});
    Matrix sys(n, da + db);
    for (std::size_t j = 0; j < da; ++j)
        for (std::size_t i = 0; i < n; ++i)
            if (!a.basis()[j][i].is_zero()) sys.set(i, j, a.basis()[j][i]);
    for (std::size_t j = 0; j < db; ++j)
        for (std::size_t i = 0; i < n; ++i)
            if (!b.basis()[j][i].is_zero()) sys.set(i, da + j, -b.basis()[j][i]);
    Subspace rel = kernel(sys);
    std::vector<Vec> gens;
    for (const auto& x : rel.basis()) {
        Vec v = zero_vec(n);
        for (std::size_t j = 0; j < da; ++j)
            if (!x[j].is_zero()) axpy(v, x[j], a.basis()[j]);
        gens.push_back(std::move(v));
    }
    return Subspace::span(n, std::move(gens));
}

// solve M x = rhs; nullopt when inconsistent
inline std::optional<Vec> solve(const Matrix& m, const Vec& rhs) {
    if (rhs.size() != m.rows()) throw input_error("solve: rhs length mismatch");
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Vec r = m.row(i);
        r.push_back(rhs[i]);
        rows.push_back(std::move(r));
    }
    auto pivots = detail::rref_rows(rows, m.cols() + 1);
    Vec x = zero_vec(m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == m.cols()) return std::nullopt;  // 0 = 1 row
        x[pivots[i]] = rows[i][m.cols()];
    }
    return x;
}

}  // namespace voa
