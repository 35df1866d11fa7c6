#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rational/transducer.hpp"

namespace rational {

struct ExchangeRule {
    Word domain;
    Word range;
};

// Prefix-exchange data a_i -> b_i: both columns must be complete prefix
// codes, so every stream starts with exactly one domain word and the induced
// map a_i z -> b_i z is a homeomorphism (an element of Thompson's group V).
struct ExchangeTable {
    std::vector<ExchangeRule> rules;

    ExchangeTable flipped() const;
};

// An element of the group of rational homeomorphisms, held as an expression
// tree over the constructors below together with its realized machine and,
// when structurally available, the machine of its inverse.
//
// Composition convention: Compose(a,b) is a∘b, apply b first.
class Element {
public:
    enum class Kind { Raw, PrefixExchange, Fp, Identity, Pair, Fix, Compose, Inverse };

    Kind kind() const;
    const Transducer& forward() const;
    bool has_inverse() const noexcept;
    const Transducer& backward() const; // throws InvariantError when absent
    Element child(int i) const;         // Pair/Compose: 0,1; Fix/Inverse: 0
    const ExchangeTable& table() const; // PrefixExchange only
    std::uint64_t prime() const;        // Fp only

    // Expression rendering in the CLI mini-language; raw machines render as
    // an opaque placeholder.
    std::string describe() const;

private:
    struct Node;
    explicit Element(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;

    friend struct ElementFactory;
};

// The one-state copy machine; its own inverse.
Element identity();

// Wraps a user machine, optionally with a machine for the inverse map.
Element raw(Transducer forward, std::optional<Transducer> backward = {});

// The V-element mapping a z -> b z per rule (a,b). The machine is a spine of
// states spelling the domain code, emitting the range word on completing a
// domain word, then copying. Throws InvariantError unless both columns are
// complete prefix codes.
Element prefix_exchange(ExchangeTable tbl);

// The first generator of Thompson's group F:
//   00 z -> 0 z,  01 z -> 10 z,  1 z -> 11 z.
Element x0();

// The prefix exchange 0 z -> 1 z, 1 z -> 0 z.
Element swap_halves();

// Switches every p'th digit (1-indexed), leaving the rest unchanged: a cycle
// of p states whose last one emits the flipped bit. Involution. Throws
// std::invalid_argument unless p is prime.
Element fp(std::uint64_t p);

// (f,g): acts as f below the 0 cone and as g below the 1 cone.
Element pair(const Element& f, const Element& g);

// The solution g of g = (f, g): f's machine plus a new initial state that
// copies 1s and enters f after the first 0.
Element fix(const Element& f);

// a∘b (apply b first): the product machine on reachable (b-state, a-state)
// pairs, b reading the input and a reading b's output.
Element compose(const Element& a, const Element& b);

// Structural inverse: distributes over Pair/Fix, reverses Compose, flips
// exchange tables, fixes Fp and Identity, unwraps Inverse. A Raw element
// without a supplied inverse machine throws InvariantError.
Element inverse(const Element& e);

// h agreeing with g_i below each cone a_i; the a_i must form a complete
// prefix code. h is a homeomorphism iff the images g_i(I_{a_i}) partition
// the space, which is the caller's to ensure (images_partition below); the
// returned element therefore carries no inverse machine.
Element glue(const std::vector<std::pair<Word, Element>>& pieces);

// Exact partition check for glue pieces: images of the pieces' cones are
// pairwise disjoint and jointly cover the space.
bool images_partition(const std::vector<std::pair<Word, Element>>& pieces);

// A prefix exchange g with g(I_{from}) contained in I_{to}: the first `to`
// cone is subdivided to receive every `from` cone and the complements are
// matched bijectively after equalizing their sizes by cone splitting.
// Arguments must be nonempty prefix codes defining proper clopen sets.
Element mover(const std::vector<Word>& from, const std::vector<Word>& to);

struct SmallSupportFactorization {
    Element g;  // agrees with f on I_E, with f^{-1} on f(I_E), identity elsewhere
    Element gf; // compose(g, f); the identity on I_E
    std::vector<Word> support;  // cones of I_E ∪ f(I_E)
    bool small_support = false; // whether the support misses part of the space
};

// f = g^{-1}·(gf) with both factors supported on I_E ∪ f(I_E). Requires an
// invertible f and f(I_E) disjoint from I_E (InvariantError otherwise).
SmallSupportFactorization small_support_factor(const Element& f,
                                               const std::vector<Word>& E);

// Raw element with canonical forward/backward machines; same induced map.
// Keeps repeated products from compounding state counts.
Element reduced(const Element& e);

// Canonical equality of the induced maps.
bool equal(const Element& a, const Element& b);

} // namespace rational
