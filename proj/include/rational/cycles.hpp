#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "rational/transducer.hpp"

namespace rational {

// Per-SCC cycle statistics of the accessible part of a machine. Only SCCs
// that contain at least one edge are listed; `period` is the gcd of the
// lengths of all directed cycles through the SCC.
struct SccInfo {
    std::vector<StateId> states;
    std::size_t period = 0;
    // Minimum total output length over simple cycles; only meaningful when
    // the enumeration finished within its cap (see CycleReport::complete).
    std::size_t min_output_per_cycle = 0;
    bool has_empty_output_cycle = false;
};

struct CycleReport {
    std::vector<SccInfo> sccs;
    std::size_t accessible_count = 0;
    // False when the simple-cycle enumeration hit its cap; period and the
    // empty-output flag are exact regardless.
    bool complete = true;
};

struct LipschitzReport {
    double min_ratio = 0.0;
    double max_ratio = 0.0;
    bool has_empty_output_cycle = false;
    bool complete = true;
};

inline constexpr std::size_t kCycleEnumerationCap = 100000;

bool is_prime(std::uint64_t p);

// States reachable from the initial state.
std::vector<StateId> accessible_states(const Transducer& T);

CycleReport analyze_cycles(const Transducer& T);

// True iff some accessible cycle has length not divisible by the prime p,
// decided through SCC periods. Throws std::invalid_argument for non-prime p.
bool is_oblivious(const Transducer& T, std::uint64_t p);

// Brute-force reference: enumerates accessible simple cycles directly and
// checks their lengths mod p. Returns nullopt when the cap is hit.
std::optional<bool> is_oblivious_bruteforce(const Transducer& T, std::uint64_t p,
                                            std::size_t cap = kCycleEnumerationCap);

// Min and max of (output length / cycle length) over accessible simple
// cycles. Evidence only: an empty-output cycle rules out bilipschitz, the
// ratios do not decide membership.
LipschitzReport lipschitz_report(const Transducer& T);

// Every accessible simple cycle as (total output length, cycle length),
// including parallel-edge variants. Stops at `cap` cycles (complete=false).
struct SimpleCycles {
    std::vector<std::pair<std::size_t, std::size_t>> cycles;
    bool complete = true;
};
SimpleCycles enumerate_simple_cycles(const Transducer& T,
                                     std::size_t cap = kCycleEnumerationCap);

} // namespace rational
