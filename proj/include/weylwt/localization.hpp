#pragma once

#include <string>
#include <vector>

#include "weylwt/modules.hpp"

namespace weylwt {

// Effect of the Ore localization at {X_i : i in J} on a monomial module:
// support constraints on J are relaxed to Free. Requires Plain mode on all
// of J (X_i must act injectively; on a twisted coordinate X_i acts locally
// nilpotently and localization annihilates, which is rejected).
MonomialModule localize(const MonomialModule& M, const IndexSet& J);

// Integral twist phi_x: shifts the base weight by x. Requires M to be Free
// at every coordinate of the support of x.
MonomialModule phi_twist(const MonomialModule& M, const Shift& x);

// Non-integral analogue used by the localization realizations: re-seat the
// base on a new lattice representative. Every coordinate whose value (or
// coset) changes must be Free.
MonomialModule reseat_base(const MonomialModule& M, const Weight& new_base);

struct LocalizationReport {
    bool ok = true;
    int probes = 0;
    std::vector<std::string> failures;
};

// Verifies the two localization realizations of the simple and dense
// modules at probe radius `radius`:
//  (a) L(p) is the twist-by-p' of L(0) localized away from the integral
//      coordinates (support and action coefficients agree on the box);
//  (b) localizing L(p) at its integral coordinates yields B(p), via the
//      monomial map x^m x^q -> x^{m+q} (intertwining checked on the box).
// Requires p in k^I_+.
LocalizationReport verify_localization_realizations(const Weight& p, int radius);

}  // namespace weylwt
