#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace powsem {

// Base class for everything this library throws on purpose.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct division_by_zero : error {
    division_by_zero() : error("division by zero") {}
};

// order() was asked of a series whose known window is all zero but which
// is not an exact polynomial, so the order cannot be determined.
struct indeterminate_order : error {
    indeterminate_order() : error("order is indeterminate: all known coefficients vanish") {}
};

// A ∘ B requires ord B >= 1.
struct composition_undefined : error {
    composition_undefined() : error("composition undefined: right operand has nonzero constant term") {}
};

// compositional inverse requires an order-one series
struct not_invertible : error {
    explicit not_invertible(const std::string& what) : error(what) {}
};

// no representable root for the requested Böttcher branch
struct root_unavailable : error {
    explicit root_unavailable(const std::string& what) : error(what) {}
};

// a monomial coefficient was required to be a root of unity and is not
struct not_in_zu : error {
    explicit not_in_zu(const std::string& what) : error(what) {}
};

struct resource_limit : error {
    explicit resource_limit(const std::string& what) : error(what) {}
};

struct parse_error : error {
    std::size_t position;
    parse_error(const std::string& what, std::size_t pos)
        : error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

} // namespace powsem
