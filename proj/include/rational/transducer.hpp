#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "rational/word.hpp"

namespace rational {

using StateId = std::uint32_t;
inline constexpr StateId kNoState = std::numeric_limits<StateId>::max();

// One labelled edge: reading `bit` emits `out` and moves to `to`.
struct Arc {
    StateId to = kNoState;
    Word out;

    bool operator==(const Arc&) const = default;
};

// A complete deterministic binary transducer: finite state set, initial
// state, and for every (state, bit) a target state and a finite output word.
// States are dense integers 0..n-1; optional names are kept for interchange.
// Immutable in spirit: build with add_state/set_arc, then treat as a value.
class Transducer {
public:
    Transducer() = default;

    StateId add_state(std::string name = {});
    void set_arc(StateId s, int bit, StateId to, Word out);
    void set_initial(StateId s);

    std::size_t num_states() const noexcept { return arcs_.size(); }
    StateId initial() const noexcept { return initial_; }
    const Arc& arc(StateId s, int bit) const { return arcs_[s][bit]; }

    // State name for interchange; auto-generated "s<k>" when never set.
    std::string name(StateId s) const;
    bool has_names() const noexcept { return !names_.empty(); }

    bool operator==(const Transducer&) const = default;

private:
    std::vector<std::array<Arc, 2>> arcs_;
    std::vector<std::string> names_;
    StateId initial_ = kNoState;
};

// The record of one run: the visited state sequence (|input|+1 long), the
// concatenated output, and the final state.
struct Trajectory {
    std::vector<StateId> visited;
    Word emitted;
    StateId final;
};

// Empty list iff the machine satisfies every invariant; otherwise one entry
// per missing initial state, missing transition/output, or dangling target.
std::vector<std::string> validate(const Transducer& T);

// Extends t and o from single bits to words: o(s, uv) = o(s,u)o(t(s,u),v).
// Throws std::invalid_argument for an unknown state id.
Trajectory run(const Transducer& T, StateId s, const Word& w);

// Like run but without recording the state sequence.
std::pair<Word, StateId> walk(const Transducer& T, StateId s, const Word& w);

// o(s0, w): for every infinite continuation z, eval_prefix(T, w) is a prefix
// of the image of wz.
Word eval_prefix(const Transducer& T, const Word& w);

// The one-state copy machine.
Transducer identity_machine();

// Product machine realizing outer∘inner (inner reads the raw input, its
// output drives outer). States are reachable (inner state, outer state)
// pairs, numbered in BFS order from (inner initial, outer initial).
Transducer compose_machines(const Transducer& outer, const Transducer& inner);

// Rooted-graph isomorphism up to state renaming: simultaneous traversal from
// the initial states matching bits and outputs exactly, plus equal state
// counts so unreachable parts cannot hide differences.
bool isomorphic(const Transducer& A, const Transducer& B);

} // namespace rational
