#pragma once

#include <string>
#include <vector>

#include "avgroups/intpoly.hpp"
#include "avgroups/lattice.hpp"

namespace avgroups::fixtures {

/// (t^2 - 2t + 9)(t + 3)^2 over F_9.
IntPoly nonsimple_surface_weil_polynomial();

/// Nested factors ((t^2 - 2t + 9)(t + 3), t + 3) of the polynomial above.
std::vector<IntPoly> nonsimple_surface_factors();

/// Action of 1 - F on the basis u_1..u_4 of the non-split 2-adic lattice of
/// that surface, one column per basis vector:
///   (1-F)u_1 = 4u_1 + 2u_3 - u_4,  (1-F)u_2 = 16u_3,
///   (1-F)u_3 = 4u_1 - u_2 + 4u_3,  (1-F)u_4 = 8u_1.
IntMatrix nonsimple_surface_relations();

struct FixtureOutcome {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Reruns the regression fixtures: the two small Hodge polygons, the
/// (t-3)^2 class, and the non-split surface lattice.
std::vector<FixtureOutcome> run_all();

} // namespace avgroups::fixtures
