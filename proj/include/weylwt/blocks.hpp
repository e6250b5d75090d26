#pragma once

#include <string>
#include <vector>

#include "weylwt/induced.hpp"
#include "weylwt/quiver.hpp"

namespace weylwt {

// The weight p^(U): coordinatewise unchanged off U and at non-integer
// coordinates; 0 for i in U with p_i < 0; -1 for i in U with p_i >= 0.
// Throws on i in U with non-integer p_i.
Weight weight_pU(const Weight& p, const Vertex& U);

// U(m): the integer coordinates where m crossed to the opposite sign class
// from p. Requires m in p + Z_f^I.
Vertex vertex_of_weight(const Weight& p, const Weight& m);

enum class BlockMapDir { Alpha, Beta };

// The generator homomorphisms of the block functor:
//   p_i < 0:  alpha: v_U -> Y_i^{-p_i} v_{U+i},  beta: v_{U+i} -> X_i^{-p_i} v_U
//   p_i >= 0: alpha: v_U -> X_i^{p_i+1} v_{U+i}, beta: v_{U+i} -> Y_i^{p_i+1} v_U
// between P(p^(U)) and P(p^(U+i)). Requires integer p_i, i not in U.
ModHom block_generator_map(const Weight& p, const Vertex& U, Index i, BlockMapDir dir);

struct BlockReport {
    bool ok = true;
    int checks = 0;
    std::vector<std::string> failures;
};

// Verifies on E (finite nonempty subset of the integer coordinates of p)
// that the generator maps realize C_E: double toggles compose to zero,
// squares commute, reduced-path composites are nonzero, and all hom spaces
// between the projectives are one-dimensional.
BlockReport verify_block(const Weight& p, const std::set<Index>& E);

}  // namespace weylwt
