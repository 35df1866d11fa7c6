#pragma once

#include <cstddef>
#include <vector>

#include "rational/transducer.hpp"

namespace rational {

// Trimmed, onward, minimized machine: the unique representative of a rational
// homeomorphism. Its states realize the distinct restrictions of the map.
struct CanonicalForm {
    Transducer machine;
    std::size_t restriction_count = 0;
};

// The restriction of the induced map to the cone of some word a:
// f(a w) = prefix_out · f|_a(w), with machine realizing f|_a.
struct RestrictionResult {
    Word prefix_out;
    CanonicalForm machine;
};

// Default bound for the residue fixpoint: a common prefix longer than every
// simple path's output forces a pumping cycle with constant output, so
// exceeding |states|*(1+max step output)+1 means the map is not injective.
std::size_t default_lcp_bound(const Transducer& T);

// L(s) for every state: the longest common prefix of all output streams from
// s, as the least fixpoint of L(s) = lcp over bits of out(s,b)·L(t(s,b)).
// Throws DivergenceError if some residue exceeds `bound` without stabilizing.
std::vector<Word> output_residues(const Transducer& T, std::size_t bound);

// L(s) for one state (the fixpoint is global; this extracts one entry).
Word lcp_from_state(const Transducer& T, StateId s, std::size_t bound);
Word lcp_from_state(const Transducer& T, StateId s);

// Keeps only states reachable from the initial state; induced map unchanged.
Transducer trim(const Transducer& T);

// Earliest-output form: pushes every residue onto incoming edges so that
// L = ε at every state. Requires L(initial) = ε (InitialResidueError
// otherwise) and convergence of the residues (DivergenceError otherwise).
// The result is trimmed.
Transducer make_onward(const Transducer& T);

// Trim, make onward, then merge behaviorally equivalent states by partition
// refinement; states are renumbered in BFS order from the initial state so
// equal maps yield byte-identical machines.
CanonicalForm minimize(const Transducer& T);

// True iff A and B induce the same map: canonical forms isomorphic as rooted
// labelled graphs.
bool equal(const Transducer& A, const Transducer& B);

// f|_alpha together with the stripped cone prefix; machine is re-minimized.
RestrictionResult restriction(const Transducer& T, const Word& alpha);

// Number of distinct restrictions of the induced map = canonical state count.
std::size_t num_restrictions(const Transducer& T);

// Bounded-depth bijectivity evidence for a raw machine: canonicalization
// succeeds, state images stabilize, and the images of the depth-d cones are
// pairwise disjoint and jointly cover the space. Constructor-built elements
// are homeomorphisms by construction and do not need this.
bool bijectivity_probe(const Transducer& T, std::size_t depth);

// The image of the cone of alpha under the induced map, as a canonical cone
// set (exact; the image of a cone under a homeomorphism's machine is clopen).
std::vector<Word> image_of_cone(const Transducer& T, const Word& alpha);

} // namespace rational
