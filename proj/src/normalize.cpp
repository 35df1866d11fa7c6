#include "rational/normalize.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

#include "rational/cones.hpp"
#include "rational/errors.hpp"

namespace rational {

namespace {

std::vector<char> reachable_mask(const Transducer& T, StateId root) {
    std::vector<char> seen(T.num_states(), 0);
    std::deque<StateId> queue{root};
    seen[root] = 1;
    while (!queue.empty()) {
        StateId s = queue.front();
        queue.pop_front();
        for (int b = 0; b < 2; ++b) {
            StateId to = T.arc(s, b).to;
            if (!seen[to]) {
                seen[to] = 1;
                queue.push_back(to);
            }
        }
    }
    return seen;
}

// Least fixpoint of L(s) = lcp(out(s,0)·L(t0), out(s,1)·L(t1)) over the
// states marked in `mask`, starting from ε. Values only ever extend, so the
// loop stops at the first full pass without change; a residue passing
// `bound` witnesses a pumping cycle with constant output.
std::vector<Word> residues_over(const Transducer& T, const std::vector<char>& mask,
                                std::size_t bound) {
    std::vector<Word> L(T.num_states());
    bool changed = true;
    while (changed) {
        changed = false;
        for (StateId s = 0; s < T.num_states(); ++s) {
            if (!mask[s]) continue;
            const Arc& a0 = T.arc(s, 0);
            const Arc& a1 = T.arc(s, 1);
            Word next = Word::lcp(a0.out + L[a0.to], a1.out + L[a1.to]);
            if (next != L[s]) {
                if (next.size() > bound)
                    throw DivergenceError(
                        "output residue at state " + T.name(s) + " exceeded " +
                        std::to_string(bound) +
                        " without stabilizing: the machine is not injective and "
                        "induces no homeomorphism");
                L[s] = std::move(next);
                changed = true;
            }
        }
    }
    return L;
}

} // namespace

std::size_t default_lcp_bound(const Transducer& T) {
    std::size_t maxout = 0;
    for (StateId s = 0; s < T.num_states(); ++s)
        for (int b = 0; b < 2; ++b)
            maxout = std::max(maxout, T.arc(s, b).out.size());
    return T.num_states() * (1 + maxout) + 1;
}

std::vector<Word> output_residues(const Transducer& T, std::size_t bound) {
    return residues_over(T, std::vector<char>(T.num_states(), 1), bound);
}

Word lcp_from_state(const Transducer& T, StateId s, std::size_t bound) {
    if (s >= T.num_states()) throw std::invalid_argument("unknown state id");
    return residues_over(T, reachable_mask(T, s), bound)[s];
}

Word lcp_from_state(const Transducer& T, StateId s) {
    return lcp_from_state(T, s, default_lcp_bound(T));
}

Transducer trim(const Transducer& T) {
    auto seen = reachable_mask(T, T.initial());
    std::vector<StateId> remap(T.num_states(), kNoState);
    Transducer R;
    for (StateId s = 0; s < T.num_states(); ++s)
        if (seen[s]) remap[s] = R.add_state(T.has_names() ? T.name(s) : std::string{});
    for (StateId s = 0; s < T.num_states(); ++s) {
        if (!seen[s]) continue;
        for (int b = 0; b < 2; ++b) {
            const Arc& a = T.arc(s, b);
            R.set_arc(remap[s], b, remap[a.to], a.out);
        }
    }
    R.set_initial(remap[T.initial()]);
    return R;
}

Transducer make_onward(const Transducer& T) {
    Transducer R = trim(T);
    auto L = output_residues(R, default_lcp_bound(R));
    if (!L[R.initial()].empty())
        throw InitialResidueError(
            "nonempty initial residue " + L[R.initial()].str() +
            ": the induced map is not onto the whole space");
    Transducer O;
    for (StateId s = 0; s < R.num_states(); ++s)
        O.add_state(R.has_names() ? R.name(s) : std::string{});
    for (StateId s = 0; s < R.num_states(); ++s) {
        for (int b = 0; b < 2; ++b) {
            const Arc& a = R.arc(s, b);
            // o'(s,b) = L(s)^{-1} · o(s,b) · L(t(s,b)); the fixpoint equation
            // guarantees L(s) prefixes the concatenation.
            Word pushed = a.out + L[a.to];
            O.set_arc(s, b, a.to, pushed.suffix_from(L[s].size()));
        }
    }
    O.set_initial(R.initial());
    return O;
}

CanonicalForm minimize(const Transducer& T) {
    Transducer O = make_onward(T);
    const std::size_t n = O.num_states();

    // Moore partition refinement; classes are assigned in sorted state order
    // so every run of the algorithm produces the same partition.
    std::vector<int> cls(n, 0);
    std::size_t count = 1;
    while (true) {
        std::map<std::tuple<Word, int, Word, int>, int> key_to_class;
        std::vector<int> next(n);
        for (StateId s = 0; s < n; ++s) {
            const Arc& a0 = O.arc(s, 0);
            const Arc& a1 = O.arc(s, 1);
            auto key = std::make_tuple(a0.out, cls[a0.to], a1.out, cls[a1.to]);
            auto [it, fresh] = key_to_class.try_emplace(key, static_cast<int>(key_to_class.size()));
            (void)fresh;
            next[s] = it->second;
        }
        bool stable = key_to_class.size() == count && next == cls;
        cls = std::move(next);
        count = key_to_class.size();
        if (stable) break;
    }

    // Quotient, renumbered by BFS from the initial class (bit 0 first).
    std::vector<StateId> class_rep(count, kNoState);
    for (StateId s = 0; s < n; ++s)
        if (class_rep[cls[s]] == kNoState) class_rep[cls[s]] = s;

    std::vector<StateId> order_of_class(count, kNoState);
    std::deque<int> queue{cls[O.initial()]};
    Transducer M;
    order_of_class[cls[O.initial()]] = M.add_state();
    while (!queue.empty()) {
        int c = queue.front();
        queue.pop_front();
        for (int b = 0; b < 2; ++b) {
            int to = cls[O.arc(class_rep[c], b).to];
            if (order_of_class[to] == kNoState) {
                order_of_class[to] = M.add_state();
                queue.push_back(to);
            }
        }
    }
    for (std::size_t c = 0; c < count; ++c) {
        for (int b = 0; b < 2; ++b) {
            const Arc& a = O.arc(class_rep[c], b);
            M.set_arc(order_of_class[c], b, order_of_class[cls[a.to]], a.out);
        }
    }
    M.set_initial(order_of_class[cls[O.initial()]]);
    return CanonicalForm{std::move(M), count};
}

bool equal(const Transducer& A, const Transducer& B) {
    return isomorphic(minimize(A).machine, minimize(B).machine);
}

RestrictionResult restriction(const Transducer& T, const Word& alpha) {
    CanonicalForm C = minimize(T);
    auto [prefix_out, s] = walk(C.machine, C.machine.initial(), alpha);
    Transducer rerooted = C.machine;
    rerooted.set_initial(s);
    return RestrictionResult{std::move(prefix_out), minimize(rerooted)};
}

std::size_t num_restrictions(const Transducer& T) {
    return minimize(T).restriction_count;
}

std::vector<Word> image_of_cone(const Transducer& T, const Word& alpha) {
    CanonicalForm C = minimize(T);
    auto images = state_images(C.machine);
    auto [beta, s] = walk(C.machine, C.machine.initial(), alpha);
    std::vector<Word> out;
    out.reserve(images[s].size());
    for (const auto& g : images[s]) out.push_back(beta + g);
    return out;
}

bool bijectivity_probe(const Transducer& T, std::size_t depth) {
    CanonicalForm C;
    std::vector<std::vector<Word>> images;
    try {
        C = minimize(T);
        images = state_images(C.machine);
    } catch (const DivergenceError&) {
        return false;
    } catch (const InitialResidueError&) {
        return false;
    }
    // Images of the depth-d cones must tile the space.
    std::vector<std::vector<Word>> cone_images;
    for (const auto& w : all_words(depth, depth)) {
        auto [beta, s] = walk(C.machine, C.machine.initial(), w);
        std::vector<Word> img;
        img.reserve(images[s].size());
        for (const auto& g : images[s]) img.push_back(beta + g);
        cone_images.push_back(std::move(img));
    }
    std::vector<Word> everything;
    for (std::size_t i = 0; i < cone_images.size(); ++i) {
        for (std::size_t j = i + 1; j < cone_images.size(); ++j)
            if (!cone_sets_disjoint(cone_images[i], cone_images[j])) return false;
        everything.insert(everything.end(), cone_images[i].begin(),
                          cone_images[i].end());
    }
    everything = normalize_cone_set(std::move(everything));
    return everything.size() == 1 && everything.front().empty();
}

} // namespace rational
