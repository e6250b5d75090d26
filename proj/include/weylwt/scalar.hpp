#pragma once

#include <string>

#include "weylwt/poly.hpp"

namespace weylwt {

// A formal transcendental parameter. Distinct names denote algebraically
// independent values, none of which is an integer.
using Symbol = std::string;

// Element of Q[s1, s2, ...]: the subfield of the ground field actually
// reachable by any finite computation. Zero testing is exact.
using Scalar = Poly<Symbol>;

inline Scalar scalar_symbol(const Symbol& s) { return Scalar::variable(s); }

inline std::string scalar_to_string(const Scalar& a) {
    return a.to_string([](const Symbol& s) { return s; });
}

}  // namespace weylwt
