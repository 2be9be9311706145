#pragma once

#include "qsp/coideal.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsp {

// Parse failure with a 0-based byte offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t pos() const { return pos_; }

private:
    std::size_t pos_;
};

// Expressions over the generators B1, B-1 (or Bm1), B0, Dd, D1 and their inverses, the aliases
// X, Y, Z, W, K, Kinv, and scalars built from integers, q, i, mu and [n]. Grammar in docs/grammar.md.
// Element::str output parses back to an equal element.
Element parse_element(const std::string& s);
// same grammar, but the result must not involve generators
Scalar parse_scalar(const std::string& s);

}  // namespace qsp
