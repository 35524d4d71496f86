#pragma once

// The .voa interchange format: line-oriented, diff-friendly, canonical.
//
//   # comment
//   name <label>
//   charge <p>/<q>
//   window <n_min> <N>
//   dims <d_nmin> ... <d_N>
//   vacuum <weight> <index>
//   omega [<weight> <index> <p>/<q>]...
//   complete                     (optional: no states outside the window)
//   p <wa> <ia> <k> <wb> <ib> -> <ic> <p>/<q> [, <ic> <p>/<q> ...]
//
// The output weight of a product line is implied by the weight rule
// wa + wb - k - 1. Serialization is canonical: headers in the order above,
// product lines sorted by (wa, ia, k, wb, ib), components sorted by index,
// rationals in lowest terms with the denominator omitted when 1.

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "voa/core.hpp"

namespace voa {

struct parse_error : input_error {
    parse_error(int line, int column, const std::string& what)
        : input_error(".voa:" + std::to_string(line) + ":" + std::to_string(column) +
                      ": " + what),
          line(line),
          column(column) {}
    int line;
    int column;
};

namespace detail {

class LineLexer {
public:
    LineLexer(std::string line, int line_no)
        : line_(std::move(line)), line_no_(line_no) {}

    bool done() {
        skip_ws();
        return pos_ >= line_.size();
    }
    int column() const { return static_cast<int>(pos_) + 1; }

    std::string word() {
        skip_ws();
        if (pos_ >= line_.size()) throw parse_error(line_no_, column(), "unexpected end of line");
        std::size_t start = pos_;
        while (pos_ < line_.size() && !std::isspace(static_cast<unsigned char>(line_[pos_])) &&
               line_[pos_] != ',')
            ++pos_;
        return line_.substr(start, pos_ - start);
    }
    long long integer() {
        skip_ws();
        std::size_t col = pos_;
        std::string w = word();
        try {
            std::size_t used = 0;
            long long v = std::stoll(w, &used);
            if (used != w.size()) throw std::invalid_argument(w);
            return v;
        } catch (...) {
            throw parse_error(line_no_, static_cast<int>(col) + 1, "expected an integer, got '" + w + "'");
        }
    }
    Rational rational() {
        skip_ws();
        std::size_t col = pos_;
        std::string w = word();
        try {
            return Rational::parse(w);
        } catch (...) {
            throw parse_error(line_no_, static_cast<int>(col) + 1,
                              "expected a rational p or p/q, got '" + w + "'");
        }
    }
    bool try_comma() {
        skip_ws();
        if (pos_ < line_.size() && line_[pos_] == ',') {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(const std::string& tok) {
        std::size_t col = pos_;
        std::string w = word();
        if (w != tok)
            throw parse_error(line_no_, static_cast<int>(col) + 1,
                              "expected '" + tok + "', got '" + w + "'");
    }
    std::string rest() {
        skip_ws();
        std::string r = line_.substr(pos_);
        while (!r.empty() && std::isspace(static_cast<unsigned char>(r.back()))) r.pop_back();
        pos_ = line_.size();
        return r;
    }

private:
    std::string line_;
    int line_no_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_])))
            ++pos_;
    }
};

}  // namespace detail

inline TruncatedVOA parse_voa(const std::string& text) {
    TruncatedVOA V;
    bool have_name = false, have_charge = false, have_window = false, have_dims = false,
         have_vacuum = false, have_omega = false;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;

    auto require_window = [&](int line, int col) {
        if (!have_window || !have_dims)
            throw parse_error(line, col, "window and dims must precede this line");
    };

    while (std::getline(in, raw)) {
        ++line_no;
        std::string stripped = raw;
        auto hash = stripped.find('#');
        if (hash != std::string::npos) stripped.resize(hash);
        detail::LineLexer lex(stripped, line_no);
        if (lex.done()) continue;
        std::string head = lex.word();
        if (head == "name") {
            V.name = lex.rest();
            have_name = true;
        } else if (head == "charge") {
            V.central_charge = lex.rational();
            have_charge = true;
        } else if (head == "window") {
            V.n_min = static_cast<int>(lex.integer());
            V.n_max = static_cast<int>(lex.integer());
            if (V.n_min > 0 || V.n_max < 0)
                throw parse_error(line_no, 1, "window must contain weight 0");
            have_window = true;
        } else if (head == "dims") {
            if (!have_window) throw parse_error(line_no, 1, "dims before window");
            for (int w = V.n_min; w <= V.n_max; ++w) {
                long long d = lex.integer();
                if (d < 0) throw parse_error(line_no, lex.column(), "negative dimension");
                V.dims.push_back(static_cast<int>(d));
            }
            if (!lex.done()) throw parse_error(line_no, lex.column(), "too many dims entries");
            have_dims = true;
        } else if (head == "vacuum") {
            require_window(line_no, 1);
            int w = static_cast<int>(lex.integer());
            int i = static_cast<int>(lex.integer());
            if (w != 0) throw parse_error(line_no, 1, "vacuum weight must be 0");
            if (i < 0 || i >= V.dim(0))
                throw parse_error(line_no, 1, "vacuum index out of range");
            V.vacuum = {0, i};
            have_vacuum = true;
        } else if (head == "omega") {
            require_window(line_no, 1);
            while (!lex.done()) {
                int w = static_cast<int>(lex.integer());
                int i = static_cast<int>(lex.integer());
                Rational c = lex.rational();
                if (w != 2)
                    throw parse_error(line_no, 1, "omega components must have weight 2");
                if (!V.in_window(2) || i < 0 || i >= V.dim(2))
                    throw parse_error(line_no, 1, "omega index out of range");
                V.omega.add({w, i}, c);
            }
            have_omega = true;
        } else if (head == "complete") {
            V.complete = true;
        } else if (head == "p") {
            require_window(line_no, 1);
            int wa = static_cast<int>(lex.integer());
            int ia = static_cast<int>(lex.integer());
            int k = static_cast<int>(lex.integer());
            int wb = static_cast<int>(lex.integer());
            int ib = static_cast<int>(lex.integer());
            std::ostringstream id;
            id << "entry (" << wa << "," << ia << ")(" << k << ")(" << wb << "," << ib << ")";
            if (!V.in_window(wa) || ia < 0 || ia >= V.dim(wa) || !V.in_window(wb) ||
                ib < 0 || ib >= V.dim(wb))
                throw parse_error(line_no, 1, id.str() + ": operand out of range");
            int w_out = wa + wb - k - 1;
            if (!V.in_window(w_out))
                throw parse_error(line_no, 1,
                                  id.str() + ": output weight " + std::to_string(w_out) +
                                      " is outside the window");
            lex.expect("->");
            GradedVector val;
            bool first = true;
            while (first || lex.try_comma()) {
                first = false;
                int ic = static_cast<int>(lex.integer());
                Rational c = lex.rational();
                if (ic < 0 || ic >= V.dim(w_out))
                    throw parse_error(line_no, 1, id.str() + ": component index out of range");
                val.add({w_out, ic}, c);
            }
            ModeKey key{wa, ia, k, wb, ib};
            if (!V.modes.get(key).is_zero())
                throw parse_error(line_no, 1, id.str() + ": duplicate product line");
            V.modes.set(key, std::move(val));
        } else {
            throw parse_error(line_no, 1, "unknown directive '" + head + "'");
        }
        if (head != "name" && head != "omega" && head != "p" && !lex.done())
            throw parse_error(line_no, lex.column(), "trailing tokens");
    }
    if (!have_name) throw parse_error(line_no, 1, "missing 'name'");
    if (!have_charge) throw parse_error(line_no, 1, "missing 'charge'");
    if (!have_window) throw parse_error(line_no, 1, "missing 'window'");
    if (!have_dims) throw parse_error(line_no, 1, "missing 'dims'");
    if (!have_vacuum) throw parse_error(line_no, 1, "missing 'vacuum'");
    (void)have_omega;  // an absent omega line means omega = 0
    V.validate_entry_shapes();
    return V;
}

inline std::string serialize_voa(const TruncatedVOA& V) {
    std::ostringstream os;
    os << "name " << V.name << "\n";
    os << "charge " << V.central_charge.to_string() << "\n";
    os << "window " << V.n_min << " " << V.n_max << "\n";
    os << "dims";
    for (int d : V.dims) os << " " << d;
    os << "\n";
    os << "vacuum 0 " << V.vacuum.index << "\n";
    os << "omega";
    for (const auto& [wi, c] : V.omega.components())
        os << " " << wi.weight << " " << wi.index << " " << c.to_string();
    os << "\n";
    if (V.complete) os << "complete\n";
    for (const auto& [key, val] : V.modes.entries()) {
        if (val.is_zero()) continue;
        os << "p " << key.wa << " " << key.ia << " " << key.k << " " << key.wb << " "
           << key.ib << " ->";
        bool first = true;
        for (const auto& [wi, c] : val.components()) {
            if (!first) os << ",";
            os << " " << wi.index << " " << c.to_string();
            first = false;
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace voa
