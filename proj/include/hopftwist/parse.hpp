#pragma once

// Field elements written as expressions in the generator symbol and the ring's
// named constants: sums, products, quotients, integer powers, parentheses.

#include <string>

#include "hopftwist/ring.hpp"

namespace hopftwist {

/// Throws ParseError on malformed input or unknown names.
FieldElem parse_element(const std::string& text, const RingSpec& r);

}  // namespace hopftwist
