#pragma once

#include "embfilt/curve.hpp"

// Minimal embedded resolution graphs used across the test suites.
namespace fixtures {

using namespace embfilt;

// x^2 + y^3: chain E1 - E3 - E2, strict transform through E3.
inline ResolutionGraph cusp23() {
    return ResolutionGraph({1, 2, 3},
                           {{-3, 0, 1}, {0, -2, 1}, {1, 1, -1}},
                           {{3, 1}});
}

// x^2 + y^5: chain E1 - E2 - E4 - E3, strict transform through E4.
inline ResolutionGraph cusp25() {
    return ResolutionGraph({1, 2, 3, 4},
                           {{-2, 1, 0, 0}, {1, -3, 0, 1}, {0, 0, -2, 1}, {0, 1, 1, -1}},
                           {{4, 1}});
}

// x^3 + y^4: chain E2 - E3 - E4 - E1, strict transform through E4.
inline ResolutionGraph cusp34() {
    return ResolutionGraph({1, 2, 3, 4},
                           {{-4, 0, 0, 1}, {0, -2, 1, 0}, {0, 1, -2, 1}, {1, 0, 1, -1}},
                           {{4, 1}});
}

// one blow-up, n transversal branches
inline ResolutionGraph single_vertex(Int arrows) {
    return ResolutionGraph({1}, {{-1}}, {{1, arrows}});
}

inline ResolutionGraph two_chain(Int arrows_on_second) {
    return ResolutionGraph({1, 2}, {{-2, 1}, {1, -1}}, {{2, arrows_on_second}});
}

} // namespace fixtures
