#pragma once

#include <stdexcept>
#include <string>

namespace voa {

// caller handed us malformed data (bad dimensions, bad file, bad flag)
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// an internal re-verification of a proved statement failed; the input object
// violates its own invariants (corrupted table, broken algebra axioms)
struct integrity_error : std::runtime_error {
    explicit integrity_error(const std::string& what) : std::runtime_error(what) {}
};

// semisimple splitting needs a field extension of Q; names the factor
struct unsplittable_error : std::runtime_error {
    explicit unsplittable_error(const std::string& factor)
        : std::runtime_error("minimal polynomial factor does not split over Q: " + factor),
          offending_factor(factor) {}
    std::string offending_factor;
};

}  // namespace voa
