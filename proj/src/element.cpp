#include "rational/element.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "rational/cones.hpp"
#include "rational/cycles.hpp"
#include "rational/errors.hpp"
#include "rational/normalize.hpp"

namespace rational {

struct Element::Node {
    Kind kind = Kind::Identity;
    std::shared_ptr<const Node> a, b;
    ExchangeTable table;
    std::uint64_t p = 0;
    Transducer forward;
    std::optional<Transducer> backward;
};

struct ElementFactory {
    using Node = Element::Node;
    static Element make(Node node) {
        return Element(std::make_shared<const Node>(std::move(node)));
    }
    static Element wrap(std::shared_ptr<const Node> node) {
        return Element(std::move(node));
    }
    static const std::shared_ptr<const Node>& node_of(const Element& e) {
        return e.node_;
    }
};

Element::Kind Element::kind() const { return node_->kind; }
const Transducer& Element::forward() const { return node_->forward; }
bool Element::has_inverse() const noexcept { return node_->backward.has_value(); }

const Transducer& Element::backward() const {
    if (!node_->backward)
        throw InvariantError("element carries no inverse machine");
    return *node_->backward;
}

Element Element::child(int i) const {
    const auto& c = i == 0 ? node_->a : node_->b;
    if (!c) throw std::invalid_argument("element has no such child");
    return Element(c);
}

const ExchangeTable& Element::table() const {
    if (node_->kind != Kind::PrefixExchange)
        throw std::invalid_argument("not a prefix exchange");
    return node_->table;
}

std::uint64_t Element::prime() const {
    if (node_->kind != Kind::Fp) throw std::invalid_argument("not an fp element");
    return node_->p;
}

namespace {

// Disjoint-union copy of M into T; returns the id offset mapping.
std::vector<StateId> embed(Transducer& T, const Transducer& M) {
    std::vector<StateId> remap(M.num_states());
    for (StateId s = 0; s < M.num_states(); ++s) remap[s] = T.add_state();
    for (StateId s = 0; s < M.num_states(); ++s)
        for (int bit = 0; bit < 2; ++bit) {
            const Arc& a = M.arc(s, bit);
            T.set_arc(remap[s], bit, remap[a.to], a.out);
        }
    return remap;
}

Transducer pair_machine(const Transducer& F, const Transducer& G) {
    Transducer T;
    StateId root = T.add_state();
    auto fmap = embed(T, F);
    auto gmap = embed(T, G);
    T.set_arc(root, 0, fmap[F.initial()], Word{0});
    T.set_arc(root, 1, gmap[G.initial()], Word{1});
    T.set_initial(root);
    return T;
}

Transducer fix_machine(const Transducer& F) {
    Transducer T;
    StateId root = T.add_state();
    auto fmap = embed(T, F);
    T.set_arc(root, 0, fmap[F.initial()], Word{0});
    T.set_arc(root, 1, root, Word{1});
    T.set_initial(root);
    return T;
}

void validate_table(const ExchangeTable& tbl) {
    std::vector<Word> domains, ranges;
    domains.reserve(tbl.rules.size());
    ranges.reserve(tbl.rules.size());
    for (const auto& r : tbl.rules) {
        domains.push_back(r.domain);
        ranges.push_back(r.range);
    }
    if (!is_complete_prefix_code(domains))
        throw InvariantError("exchange domains are not a complete prefix code");
    if (!is_complete_prefix_code(ranges))
        throw InvariantError("exchange ranges are not a complete prefix code");
}

// Machine whose states spell a complete prefix code silently; completing the
// i-th domain word emits outputs[i] and enters targets[i] at its initial
// state (the shared copy state for exchanges, a re-rooted piece for glue).
Transducer spine_machine(const std::vector<Word>& domains,
                         const std::vector<Word>& outputs,
                         const std::vector<const Transducer*>& targets) {
    // Trie over the domain words; completeness is the caller's contract.
    struct TrieNode {
        int child[2] = {-1, -1};
        int rule = -1;
    };
    std::vector<TrieNode> trie(1);
    for (std::size_t i = 0; i < domains.size(); ++i) {
        int at = 0;
        const Word& w = domains[i];
        for (std::size_t k = 0; k < w.size(); ++k) {
            int b = w[k];
            if (trie[at].child[b] < 0) {
                trie[at].child[b] = static_cast<int>(trie.size());
                trie.emplace_back();
            }
            at = trie[at].child[b];
        }
        trie[at].rule = static_cast<int>(i);
    }

    Transducer T;
    if (trie[0].rule >= 0) {
        // Single rule with empty domain: the machine is the target itself,
        // entered immediately (spelling nothing, emitting nothing).
        const Transducer& M = *targets[0];
        auto remap = embed(T, M);
        T.set_initial(remap[M.initial()]);
        return T;
    }

    // Internal trie nodes in BFS order become the spine.
    std::vector<StateId> spine(trie.size(), kNoState);
    std::deque<int> queue{0};
    spine[0] = T.add_state();
    std::vector<int> order{0};
    while (!queue.empty()) {
        int at = queue.front();
        queue.pop_front();
        for (int b = 0; b < 2; ++b) {
            int c = trie[at].child[b];
            if (c >= 0 && trie[c].rule < 0) {
                spine[c] = T.add_state();
                order.push_back(c);
                queue.push_back(c);
            }
        }
    }
    // Embed each rule's target machine once (rules may share a target, as
    // the prefix exchanges all share the single copy state).
    std::map<const Transducer*, StateId> shared_entry;
    std::vector<StateId> entry(domains.size());
    for (std::size_t i = 0; i < domains.size(); ++i) {
        const Transducer* M = targets[i];
        auto it = shared_entry.find(M);
        if (it == shared_entry.end()) {
            auto remap = embed(T, *M);
            it = shared_entry.emplace(M, remap[M->initial()]).first;
        }
        entry[i] = it->second;
    }
    for (int at : order) {
        for (int b = 0; b < 2; ++b) {
            int c = trie[at].child[b];
            if (trie[c].rule >= 0) {
                int i = trie[c].rule;
                T.set_arc(spine[at], b, entry[i], outputs[i]);
            } else {
                T.set_arc(spine[at], b, spine[c], Word{});
            }
        }
    }
    T.set_initial(spine[0]);
    return T;
}

Transducer exchange_machine(const ExchangeTable& tbl) {
    // Sorted rule order keeps construction deterministic.
    std::vector<ExchangeRule> rules = tbl.rules;
    std::sort(rules.begin(), rules.end(),
              [](const ExchangeRule& x, const ExchangeRule& y) { return x.domain < y.domain; });
    Transducer copy = identity_machine();
    std::vector<Word> domains, outputs;
    std::vector<const Transducer*> targets;
    for (const auto& r : rules) {
        domains.push_back(r.domain);
        outputs.push_back(r.range);
        targets.push_back(&copy);
    }
    return spine_machine(domains, outputs, targets);
}

} // namespace

ExchangeTable ExchangeTable::flipped() const {
    ExchangeTable t;
    t.rules.reserve(rules.size());
    for (const auto& r : rules) t.rules.push_back({r.range, r.domain});
    return t;
}

Element identity() {
    ElementFactory::Node n;
    n.kind = Element::Kind::Identity;
    n.forward = identity_machine();
    n.backward = n.forward;
    return ElementFactory::make(std::move(n));
}

namespace {

Element raw_unchecked(Transducer forward, std::optional<Transducer> backward) {
    ElementFactory::Node n;
    n.kind = Element::Kind::Raw;
    n.forward = std::move(forward);
    n.backward = std::move(backward);
    return ElementFactory::make(std::move(n));
}

} // namespace

Element raw(Transducer forward, std::optional<Transducer> backward) {
    auto violations = validate(forward);
    if (!violations.empty())
        throw InvariantError("raw element machine invalid: " + violations.front());
    if (backward) {
        auto v2 = validate(*backward);
        if (!v2.empty())
            throw InvariantError("raw element inverse machine invalid: " + v2.front());
        if (!equal(compose_machines(forward, *backward), identity_machine()) ||
            !equal(compose_machines(*backward, forward), identity_machine()))
            throw InvariantError("supplied machine does not invert the element");
    }
    return raw_unchecked(std::move(forward), std::move(backward));
}

Element prefix_exchange(ExchangeTable tbl) {
    validate_table(tbl);
    ElementFactory::Node n;
    n.kind = Element::Kind::PrefixExchange;
    n.forward = exchange_machine(tbl);
    n.backward = exchange_machine(tbl.flipped());
    n.table = std::move(tbl);
    return ElementFactory::make(std::move(n));
}

Element x0() {
    return prefix_exchange(ExchangeTable{{{Word{0, 0}, Word{0}},
                                          {Word{0, 1}, Word{1, 0}},
                                          {Word{1}, Word{1, 1}}}});
}

Element swap_halves() {
    return prefix_exchange(ExchangeTable{{{Word{0}, Word{1}}, {Word{1}, Word{0}}}});
}

Element fp(std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("fp needs a prime");
    Transducer T;
    for (std::uint64_t i = 0; i < p; ++i) T.add_state();
    for (std::uint64_t i = 0; i < p; ++i) {
        StateId next = static_cast<StateId>((i + 1) % p);
        bool flip = (i + 1 == p);
        T.set_arc(static_cast<StateId>(i), 0, next, Word{flip ? 1 : 0});
        T.set_arc(static_cast<StateId>(i), 1, next, Word{flip ? 0 : 1});
    }
    T.set_initial(0);
    ElementFactory::Node n;
    n.kind = Element::Kind::Fp;
    n.p = p;
    n.forward = std::move(T);
    n.backward = n.forward; // switching the same digits twice undoes it
    return ElementFactory::make(std::move(n));
}

Element pair(const Element& f, const Element& g) {
    ElementFactory::Node n;
    n.kind = Element::Kind::Pair;
    n.a = ElementFactory::node_of(f);
    n.b = ElementFactory::node_of(g);
    n.forward = pair_machine(f.forward(), g.forward());
    if (f.has_inverse() && g.has_inverse())
        n.backward = pair_machine(f.backward(), g.backward());
    return ElementFactory::make(std::move(n));
}

Element fix(const Element& f) {
    ElementFactory::Node n;
    n.kind = Element::Kind::Fix;
    n.a = ElementFactory::node_of(f);
    n.forward = fix_machine(f.forward());
    if (f.has_inverse()) n.backward = fix_machine(f.backward());
    return ElementFactory::make(std::move(n));
}

Element compose(const Element& a, const Element& b) {
    ElementFactory::Node n;
    n.kind = Element::Kind::Compose;
    n.a = ElementFactory::node_of(a);
    n.b = ElementFactory::node_of(b);
    n.forward = compose_machines(a.forward(), b.forward());
    if (a.has_inverse() && b.has_inverse())
        n.backward = compose_machines(b.backward(), a.backward());
    return ElementFactory::make(std::move(n));
}

Element inverse(const Element& e) {
    switch (e.kind()) {
        case Element::Kind::Identity:
        case Element::Kind::Fp:
            return e;
        case Element::Kind::PrefixExchange:
            return prefix_exchange(e.table().flipped());
        case Element::Kind::Pair:
            return pair(inverse(e.child(0)), inverse(e.child(1)));
        case Element::Kind::Fix:
            return fix(inverse(e.child(0)));
        case Element::Kind::Compose:
            return compose(inverse(e.child(1)), inverse(e.child(0)));
        case Element::Kind::Inverse:
            return e.child(0);
        case Element::Kind::Raw: {
            if (!e.has_inverse())
                throw InvariantError(
                    "not invertible structurally: raw element without an inverse machine");
            ElementFactory::Node n;
            n.kind = Element::Kind::Inverse;
            n.a = ElementFactory::node_of(e);
            n.forward = e.backward();
            n.backward = e.forward();
            return ElementFactory::make(std::move(n));
        }
    }
    throw std::logic_error("unreachable");
}

Element glue(const std::vector<std::pair<Word, Element>>& pieces) {
    std::vector<Word> domains;
    domains.reserve(pieces.size());
    for (const auto& [alpha, g] : pieces) domains.push_back(alpha);
    if (!is_complete_prefix_code(domains))
        throw InvariantError("glue pieces must form a complete prefix code");

    // Completing a domain word alpha emits what the piece would have emitted
    // on alpha and continues inside the piece from where alpha leads it.
    std::vector<std::pair<Word, Element>> sorted = pieces;
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<Word> doms, outs;
    std::vector<Transducer> rerooted;
    rerooted.reserve(sorted.size());
    for (const auto& [alpha, g] : sorted) {
        auto [emitted, s] = walk(g.forward(), g.forward().initial(), alpha);
        Transducer m = g.forward();
        m.set_initial(s);
        doms.push_back(alpha);
        outs.push_back(std::move(emitted));
        rerooted.push_back(std::move(m));
    }
    std::vector<const Transducer*> targets;
    targets.reserve(rerooted.size());
    for (const auto& m : rerooted) targets.push_back(&m);
    return raw(spine_machine(doms, outs, targets));
}

bool images_partition(const std::vector<std::pair<Word, Element>>& pieces) {
    std::vector<std::vector<Word>> images;
    images.reserve(pieces.size());
    for (const auto& [alpha, g] : pieces)
        images.push_back(image_of_cone(g.forward(), alpha));
    std::vector<Word> all;
    for (std::size_t i = 0; i < images.size(); ++i) {
        for (std::size_t j = i + 1; j < images.size(); ++j)
            if (!cone_sets_disjoint(images[i], images[j])) return false;
        all.insert(all.end(), images[i].begin(), images[i].end());
    }
    all = normalize_cone_set(std::move(all));
    return all.size() == 1 && all.front().empty();
}

Element mover(const std::vector<Word>& from, const std::vector<Word>& to) {
    auto proper = [](const std::vector<Word>& code) {
        return !code.empty() && is_prefix_code(code) && !complement_cones(code).empty();
    };
    if (!proper(from) || !proper(to))
        throw InvariantError(
            "mover needs nonempty prefix codes defining proper clopen sets");

    const std::size_t k = from.size();
    const Word& receiver = to.front();

    // k subcones of the receiving cone: 0, 10, ..., 1^{k-2}0, 1^{k-1}.
    std::vector<Word> sub(k);
    for (std::size_t i = 0; i < k; ++i) {
        Word c;
        for (std::size_t j = 0; j < i; ++j) c.push_back(1);
        if (i + 1 < k) c.push_back(0);
        sub[i] = receiver + c;
    }

    ExchangeTable tbl;
    for (std::size_t i = 0; i < k; ++i) tbl.rules.push_back({from[i], sub[i]});

    auto dom_rest = complement_cones(from);
    auto ran_rest = complement_cones({receiver});
    while (dom_rest.size() < ran_rest.size()) split_last_cone(dom_rest);
    while (ran_rest.size() < dom_rest.size()) split_last_cone(ran_rest);
    std::sort(dom_rest.begin(), dom_rest.end());
    std::sort(ran_rest.begin(), ran_rest.end());
    for (std::size_t i = 0; i < dom_rest.size(); ++i)
        tbl.rules.push_back({dom_rest[i], ran_rest[i]});
    return prefix_exchange(std::move(tbl));
}

SmallSupportFactorization small_support_factor(const Element& f,
                                               const std::vector<Word>& E) {
    if (!f.has_inverse())
        throw InvariantError("small-support factorization needs an invertible element");
    if (E.empty() || !is_prefix_code(E))
        throw InvariantError("E must be a nonempty prefix code");

    CanonicalForm C = minimize(f.forward());
    auto images = state_images(C.machine);
    std::vector<Word> image;
    for (const auto& alpha : E) {
        auto [beta, s] = walk(C.machine, C.machine.initial(), alpha);
        for (const auto& g : images[s]) image.push_back(beta + g);
    }
    image = normalize_cone_set(std::move(image));
    if (!cone_sets_disjoint(image, E))
        throw InvariantError("disjointness check failed: f(I_E) meets I_E");

    std::vector<Word> support = E;
    support.insert(support.end(), image.begin(), image.end());
    support = normalize_cone_set(std::move(support));
    auto rest = complement_cones(support);

    Element finv = inverse(f);
    std::vector<std::pair<Word, Element>> pieces;
    for (const auto& alpha : E) pieces.emplace_back(alpha, f);
    for (const auto& gamma : image) pieces.emplace_back(gamma, finv);
    for (const auto& delta : rest) pieces.emplace_back(delta, identity());
    Element glued = glue(pieces);

    // g swaps I_E with f(I_E) (acting by f and f^{-1}) and fixes the rest,
    // so it is an involution: its own inverse machine.
    Element g = raw(glued.forward(), glued.forward());
    Element gf = compose(g, f);
    return SmallSupportFactorization{std::move(g), std::move(gf), std::move(support),
                                     !rest.empty()};
}

Element reduced(const Element& e) {
    // The machines are already a valid inverse pair, so skip raw()'s checks.
    std::optional<Transducer> back;
    if (e.has_inverse()) back = minimize(e.backward()).machine;
    return raw_unchecked(minimize(e.forward()).machine, std::move(back));
}

bool equal(const Element& a, const Element& b) {
    return equal(a.forward(), b.forward());
}

std::string Element::describe() const {
    std::ostringstream os;
    switch (kind()) {
        case Kind::Identity:
            os << "id";
            break;
        case Kind::Raw:
            os << "raw(<" << forward().num_states() << " states>)";
            break;
        case Kind::Fp:
            os << "fp(" << prime() << ")";
            break;
        case Kind::PrefixExchange: {
            os << "pex(";
            bool first = true;
            for (const auto& r : table().rules) {
                if (!first) os << ", ";
                first = false;
                os << r.domain.str() << "->" << r.range.str();
            }
            os << ")";
            break;
        }
        case Kind::Pair:
            os << "pair(" << child(0).describe() << ", " << child(1).describe() << ")";
            break;
        case Kind::Fix:
            os << "fix(" << child(0).describe() << ")";
            break;
        case Kind::Compose:
            os << "comp(" << child(0).describe() << ", " << child(1).describe() << ")";
            break;
        case Kind::Inverse:
            os << "inv(" << child(0).describe() << ")";
            break;
    }
    return os.str();
}

} // namespace rational
