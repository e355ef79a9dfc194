#pragma once

// Fixed polynomial set shared by the test suites.

#include "lcmlab/polynomial.hpp"

#include <vector>

namespace lcmlab::testing {

inline std::vector<IntPoly> acceptance_polys() {
    return {
        IntPoly{1, 0, 1},       // x^2 + 1
        IntPoly{1, 1, 1},       // x^2 + x + 1
        IntPoly{2, 0, 0, 1},    // x^3 + 2
        IntPoly{7, -1, 0, 2},   // 2x^3 - x + 7
    };
}

/// Squarefree polynomials used for property checks; includes ramified and
/// non-monic cases and one reducible example.
inline std::vector<IntPoly> property_polys() {
    return {
        IntPoly{1, 0, 1},
        IntPoly{1, 1, 1},
        IntPoly{2, 0, 0, 1},
        IntPoly{7, -1, 0, 2},
        IntPoly{1, 2, 3},
        IntPoly{-2, 0, 1},
        IntPoly{5, 0, 0, 0, 1},
        IntPoly{1, 1, 0, 0, 0, 1},
        IntPoly{3, -7, 0, 4},
        IntPoly{-1, 0, 1},      // reducible
        IntPoly{41, 1, 1},      // Euler's prime generator
        IntPoly{1, -3, 0, 1},
    };
}

}  // namespace lcmlab::testing
