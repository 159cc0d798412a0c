#pragma once

// Variable lists used by the two constructions. The coefficient ring is the
// Poly template argument, so one list serves e.g. ZZ[i][x] and ZZ[C4][x].

#include "nilk/poly.hpp"

namespace nilk::rings {

/// t, s
inline const RingPtr &ts() {
    static const RingPtr r = make_ring({ordinary("t"), ordinary("s")});
    return r;
}

/// t, s with t^2 = 0
inline const RingPtr &ts_mod_t2() {
    static const RingPtr r = make_ring({truncated("t", 2), ordinary("s")});
    return r;
}

/// t, s, z, z^-1
inline const RingPtr &tsz() {
    static const RingPtr r = make_ring({ordinary("t"), ordinary("s"), laurent_var("z")});
    return r;
}

/// x
inline const RingPtr &x() {
    static const RingPtr r = make_ring({ordinary("x")});
    return r;
}

} // namespace nilk::rings
