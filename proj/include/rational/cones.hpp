#pragma once

#include <cstddef>
#include <vector>

#include "rational/transducer.hpp"
#include "rational/word.hpp"

namespace rational {

// Prefix code: no word is a prefix of another. Complete: every infinite
// sequence extends exactly one word (the code's trie is a full binary tree).
bool is_prefix_code(const std::vector<Word>& words);
bool is_complete_prefix_code(const std::vector<Word>& words);

// Minimal cones covering the complement of the union of the given cones.
// Input must be a prefix code; the result is sorted and disjoint from it.
std::vector<Word> complement_cones(const std::vector<Word>& code);

// Canonical representation of a union of cones: redundant (nested) cones
// dropped, full sibling subtrees merged, sorted. {ε} means the whole space.
std::vector<Word> normalize_cone_set(std::vector<Word> cones);

// Replaces the lexicographically last cone a by a0, a1.
void split_last_cone(std::vector<Word>& code);

// True iff the unions of the two cone sets do not intersect.
bool cone_sets_disjoint(const std::vector<Word>& a, const std::vector<Word>& b);

// For every state, the image of its stream map as a canonical cone set,
// computed as a descending fixpoint from the whole space. The image of a
// state of a homeomorphism's machine is clopen and the fixpoint stabilizes;
// otherwise the representation outgrows `max_len` and DivergenceError is
// thrown (the machine does not induce a homeomorphism).
std::vector<std::vector<Word>> state_images(const Transducer& T,
                                            std::size_t max_len = 64);

} // namespace rational
