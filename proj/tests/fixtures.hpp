#pragma once

#include "rational/transducer.hpp"

namespace rational::testing {

// Two-state asynchronous machine: s0 reads 0 silently into s1 and echoes
// "11" on 1; s1 returns to s0 emitting "0" or "10". Induces a homeomorphism
// that is not bilipschitz.
inline Transducer example_machine() {
    Transducer T;
    StateId s0 = T.add_state("s0");
    StateId s1 = T.add_state("s1");
    T.set_arc(s0, 0, s1, {});
    T.set_arc(s0, 1, s0, {1, 1});
    T.set_arc(s1, 0, s0, {0});
    T.set_arc(s1, 1, s0, {1, 0});
    T.set_initial(s0);
    return T;
}

// One state, both outputs starting with 1: a map into the 1 cone.
inline Transducer shifted_machine() {
    Transducer T;
    StateId q = T.add_state();
    T.set_arc(q, 0, q, {1, 0});
    T.set_arc(q, 1, q, {1, 1});
    return T;
}

// Constant map onto 000...: not injective, residues diverge.
inline Transducer constant_machine() {
    Transducer T;
    StateId q = T.add_state();
    T.set_arc(q, 0, q, {0});
    T.set_arc(q, 1, q, {0});
    return T;
}

} // namespace rational::testing
