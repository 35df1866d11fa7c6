#pragma once

#include <array>
#include <cstdint>

#include "rational/element.hpp"

namespace rational {

// Reproducible pseudo-random construction: the same spec always yields the
// same element or machine. Generated elements are constructor-built from
// invertible leaves, so they are homeomorphisms and carry inverse machines;
// generated raw machines always pass validate (and nothing more).
struct GeneratorSpec {
    std::uint64_t seed = 0;
    std::size_t max_states = 32; // reduction threshold / raw machine cap
    int depth = 3;               // constructor tree depth
    // weights at inner nodes: pair, fix, compose, inverse, leaf
    std::array<int, 5> weights{3, 2, 2, 2, 3};
};

Element gen_element(const GeneratorSpec& spec);
Transducer gen_machine(const GeneratorSpec& spec);

// Duplicates random states (splitting their incoming edges) for the given
// number of rounds; the induced map is unchanged.
Transducer obfuscate(const Transducer& T, std::uint64_t seed, int rounds);

} // namespace rational
