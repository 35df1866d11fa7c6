#include "rational/cones.hpp"

#include <algorithm>
#include <map>

#include "rational/errors.hpp"

namespace rational {

namespace {

// Explicit binary trie over a finite word set.
struct Trie {
    struct Node {
        int child[2] = {-1, -1};
        bool is_word = false;
    };
    std::vector<Node> nodes{1, Node{}};

    int insert(const Word& w) {
        int at = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            int b = w[i];
            if (nodes[at].child[b] < 0) {
                nodes[at].child[b] = static_cast<int>(nodes.size());
                nodes.emplace_back();
            }
            at = nodes[at].child[b];
        }
        nodes[at].is_word = true;
        return at;
    }
};

void emit_covered(const Trie& t, int at, Word& path, std::vector<Word>& out,
                  std::vector<char>& covered) {
    if (covered[at]) {
        out.push_back(path);
        return;
    }
    for (int b = 0; b < 2; ++b) {
        int c = t.nodes[at].child[b];
        if (c < 0) continue;
        path.push_back(b);
        emit_covered(t, c, path, out, covered);
        path = path.prefix(path.size() - 1);
    }
}

std::vector<char> cover_flags(const Trie& t) {
    // covered[n] = the whole subtree at n lies under some inserted word.
    // Nodes are created parent-before-child, so a reverse scan suffices.
    std::vector<char> covered(t.nodes.size(), 0);
    for (int n = static_cast<int>(t.nodes.size()) - 1; n >= 0; --n) {
        if (t.nodes[n].is_word) {
            covered[n] = 1;
            continue;
        }
        int c0 = t.nodes[n].child[0], c1 = t.nodes[n].child[1];
        covered[n] = c0 >= 0 && c1 >= 0 && covered[c0] && covered[c1];
    }
    return covered;
}

} // namespace

bool is_prefix_code(const std::vector<Word>& words) {
    std::vector<Word> sorted = words;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
        if (sorted[i] == sorted[i + 1]) return false;
        if (sorted[i].is_prefix_of(sorted[i + 1])) return false;
    }
    return true;
}

bool is_complete_prefix_code(const std::vector<Word>& words) {
    if (words.empty() || !is_prefix_code(words)) return false;
    Trie t;
    for (const auto& w : words) t.insert(w);
    for (const auto& n : t.nodes) {
        if (n.is_word) continue;
        if (n.child[0] < 0 || n.child[1] < 0) return false;
    }
    return true;
}

std::vector<Word> complement_cones(const std::vector<Word>& code) {
    Trie t;
    for (const auto& w : code) t.insert(w);
    std::vector<Word> out;
    // Walk the trie; any absent branch below a non-word node is complement.
    std::vector<std::pair<int, Word>> stack{{0, Word{}}};
    while (!stack.empty()) {
        auto [at, path] = stack.back();
        stack.pop_back();
        if (t.nodes[at].is_word) continue;
        for (int b = 0; b < 2; ++b) {
            int c = t.nodes[at].child[b];
            Word next = path;
            next.push_back(b);
            if (c < 0)
                out.push_back(std::move(next));
            else
                stack.emplace_back(c, std::move(next));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Word> normalize_cone_set(std::vector<Word> cones) {
    if (cones.empty()) return {};
    Trie t;
    for (const auto& w : cones) t.insert(w);
    auto covered = cover_flags(t);
    std::vector<Word> out;
    Word path;
    emit_covered(t, 0, path, out, covered);
    std::sort(out.begin(), out.end());
    return out;
}

void split_last_cone(std::vector<Word>& code) {
    auto it = std::max_element(code.begin(), code.end());
    Word base = *it;
    code.erase(it);
    Word a = base, b = base;
    a.push_back(0);
    b.push_back(1);
    code.push_back(std::move(a));
    code.push_back(std::move(b));
}

bool cone_sets_disjoint(const std::vector<Word>& a, const std::vector<Word>& b) {
    for (const auto& u : a)
        for (const auto& v : b)
            if (u.is_prefix_of(v) || v.is_prefix_of(u)) return false;
    return true;
}

std::vector<std::vector<Word>> state_images(const Transducer& T,
                                            std::size_t max_len) {
    const std::size_t n = T.num_states();
    std::vector<std::vector<Word>> im(n, std::vector<Word>{Word{}});
    // Descending Kleene iteration: the chain strictly shrinks until the
    // greatest fixpoint, which equals the true image when that is clopen.
    for (std::size_t iter = 0; iter < 8 * (max_len + n) + 64; ++iter) {
        bool changed = false;
        std::vector<std::vector<Word>> next(n);
        for (StateId s = 0; s < n; ++s) {
            std::vector<Word> cones;
            for (int b = 0; b < 2; ++b) {
                const Arc& a = T.arc(s, b);
                for (const auto& g : im[a.to]) {
                    Word c = a.out + g;
                    if (c.size() > max_len)
                        throw DivergenceError(
                            "state image did not stabilize below the length cap; "
                            "the machine does not induce a homeomorphism");
                    cones.push_back(std::move(c));
                }
            }
            next[s] = normalize_cone_set(std::move(cones));
            if (next[s] != im[s]) changed = true;
        }
        im = std::move(next);
        if (!changed) return im;
    }
    throw DivergenceError("state image iteration exceeded its round cap");
}

} // namespace rational
