#include "rational/cycles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace rational {

namespace {

// Tarjan SCCs over the accessible subgraph; returns component index per
// accessible state (kNoComp elsewhere) and the member lists.
constexpr int kNoComp = -1;

struct SccDecomposition {
    std::vector<int> comp;
    std::vector<std::vector<StateId>> members;
};

SccDecomposition tarjan(const Transducer& T, const std::vector<StateId>& accessible) {
    const std::size_t n = T.num_states();
    SccDecomposition d;
    d.comp.assign(n, kNoComp);
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<char> on_stack(n, 0), in_scope(n, 0);
    std::vector<StateId> stack;
    int next_index = 0;
    for (StateId s : accessible) in_scope[s] = 1;

    // Iterative Tarjan to keep deep product machines off the call stack.
    struct Frame {
        StateId s;
        int bit;
    };
    for (StateId root : accessible) {
        if (index[root] >= 0) continue;
        std::vector<Frame> frames{{root, 0}};
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.bit < 2) {
                StateId to = T.arc(f.s, f.bit).to;
                ++f.bit;
                if (!in_scope[to]) continue;
                if (index[to] < 0) {
                    index[to] = low[to] = next_index++;
                    stack.push_back(to);
                    on_stack[to] = 1;
                    frames.push_back({to, 0});
                } else if (on_stack[to]) {
                    low[f.s] = std::min(low[f.s], index[to]);
                }
            } else {
                if (low[f.s] == index[f.s]) {
                    std::vector<StateId> comp;
                    while (true) {
                        StateId w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        d.comp[w] = static_cast<int>(d.members.size());
                        comp.push_back(w);
                        if (w == f.s) break;
                    }
                    std::sort(comp.begin(), comp.end());
                    d.members.push_back(std::move(comp));
                }
                StateId done = f.s;
                frames.pop_back();
                if (!frames.empty())
                    low[frames.back().s] = std::min(low[frames.back().s], low[done]);
            }
        }
    }
    return d;
}

// gcd over intra-SCC edges (u,b)->v of |level(u)+1-level(v)|, levels from a
// BFS inside the SCC; equals the gcd of the lengths of all its cycles.
std::size_t scc_period(const Transducer& T, const SccDecomposition& d, int c) {
    const auto& members = d.members[c];
    std::vector<long long> level(T.num_states(), -1);
    std::deque<StateId> queue{members.front()};
    level[members.front()] = 0;
    while (!queue.empty()) {
        StateId u = queue.front();
        queue.pop_front();
        for (int b = 0; b < 2; ++b) {
            StateId v = T.arc(u, b).to;
            if (d.comp[v] == c && level[v] < 0) {
                level[v] = level[u] + 1;
                queue.push_back(v);
            }
        }
    }
    long long g = 0;
    for (StateId u : members)
        for (int b = 0; b < 2; ++b) {
            StateId v = T.arc(u, b).to;
            if (d.comp[v] == c) g = std::gcd(g, std::abs(level[u] + 1 - level[v]));
        }
    return static_cast<std::size_t>(g);
}

bool scc_has_edge(const Transducer& T, const SccDecomposition& d, int c) {
    for (StateId u : d.members[c])
        for (int b = 0; b < 2; ++b)
            if (d.comp[T.arc(u, b).to] == c) return true;
    return false;
}

// True iff the edges with empty output inside component c contain a cycle.
bool has_empty_cycle(const Transducer& T, const SccDecomposition& d, int c) {
    const auto& members = d.members[c];
    std::vector<int> color(T.num_states(), 0); // 0 white, 1 gray, 2 black
    std::function<bool(StateId)> dfs = [&](StateId u) {
        color[u] = 1;
        for (int b = 0; b < 2; ++b) {
            const Arc& a = T.arc(u, b);
            if (d.comp[a.to] != c || !a.out.empty()) continue;
            if (color[a.to] == 1) return true;
            if (color[a.to] == 0 && dfs(a.to)) return true;
        }
        color[u] = 2;
        return false;
    };
    for (StateId u : members)
        if (color[u] == 0 && dfs(u)) return true;
    return false;
}

} // namespace

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::vector<StateId> accessible_states(const Transducer& T) {
    std::vector<char> seen(T.num_states(), 0);
    std::vector<StateId> order;
    std::deque<StateId> queue{T.initial()};
    seen[T.initial()] = 1;
    while (!queue.empty()) {
        StateId s = queue.front();
        queue.pop_front();
        order.push_back(s);
        for (int b = 0; b < 2; ++b) {
            StateId to = T.arc(s, b).to;
            if (!seen[to]) {
                seen[to] = 1;
                queue.push_back(to);
            }
        }
    }
    std::sort(order.begin(), order.end());
    return order;
}

SimpleCycles enumerate_simple_cycles(const Transducer& T, std::size_t cap) {
    SimpleCycles result;
    auto accessible = accessible_states(T);
    std::vector<char> in_scope(T.num_states(), 0);
    for (StateId s : accessible) in_scope[s] = 1;

    // Vertex-simple cycles with every parallel-edge (bit) choice counted
    // separately; each cycle is found once, rooted at its smallest state.
    std::vector<char> on_path(T.num_states(), 0);
    for (StateId root : accessible) {
        std::function<bool(StateId, std::size_t, std::size_t)> dfs =
            [&](StateId u, std::size_t len, std::size_t out_len) -> bool {
            on_path[u] = 1;
            for (int b = 0; b < 2; ++b) {
                const Arc& a = T.arc(u, b);
                StateId v = a.to;
                if (!in_scope[v] || v < root) continue;
                if (v == root) {
                    result.cycles.emplace_back(out_len + a.out.size(), len + 1);
                    if (result.cycles.size() >= cap) {
                        result.complete = false;
                        on_path[u] = 0;
                        return false;
                    }
                } else if (!on_path[v]) {
                    if (!dfs(v, len + 1, out_len + a.out.size())) {
                        on_path[u] = 0;
                        return false;
                    }
                }
            }
            on_path[u] = 0;
            return true;
        };
        if (!dfs(root, 0, 0)) break;
    }
    return result;
}

CycleReport analyze_cycles(const Transducer& T) {
    CycleReport report;
    auto accessible = accessible_states(T);
    report.accessible_count = accessible.size();
    auto d = tarjan(T, accessible);

    // Walk components in ascending order of their smallest state.
    std::vector<int> comps(d.members.size());
    std::iota(comps.begin(), comps.end(), 0);
    std::sort(comps.begin(), comps.end(), [&](int a, int b) {
        return d.members[a].front() < d.members[b].front();
    });

    for (int c : comps) {
        if (!scc_has_edge(T, d, c)) continue;
        SccInfo info;
        info.states = d.members[c];
        info.period = scc_period(T, d, c);
        info.has_empty_output_cycle = has_empty_cycle(T, d, c);
        info.min_output_per_cycle = std::numeric_limits<std::size_t>::max();
        report.sccs.push_back(std::move(info));
    }

    // A simple cycle lives entirely inside one component; enumerate per SCC
    // for the minimum total output length.
    for (auto& info : report.sccs) {
        std::vector<char> in_comp(T.num_states(), 0);
        for (StateId s : info.states) in_comp[s] = 1;
        std::vector<char> on_path(T.num_states(), 0);
        std::size_t found = 0;
        for (StateId root : info.states) {
            std::function<bool(StateId, std::size_t)> dfs =
                [&](StateId u, std::size_t out_len) -> bool {
                on_path[u] = 1;
                for (int b = 0; b < 2; ++b) {
                    const Arc& a = T.arc(u, b);
                    StateId v = a.to;
                    if (!in_comp[v] || v < root) continue;
                    if (v == root) {
                        info.min_output_per_cycle =
                            std::min(info.min_output_per_cycle, out_len + a.out.size());
                        if (++found >= kCycleEnumerationCap) {
                            on_path[u] = 0;
                            return false;
                        }
                    } else if (!on_path[v]) {
                        if (!dfs(v, out_len + a.out.size())) {
                            on_path[u] = 0;
                            return false;
                        }
                    }
                }
                on_path[u] = 0;
                return true;
            };
            if (!dfs(root, 0)) {
                report.complete = false;
                break;
            }
        }
        if (info.has_empty_output_cycle) info.min_output_per_cycle = 0;
    }
    return report;
}

bool is_oblivious(const Transducer& T, std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    auto accessible = accessible_states(T);
    auto d = tarjan(T, accessible);
    for (int c = 0; c < static_cast<int>(d.members.size()); ++c) {
        if (!scc_has_edge(T, d, c)) continue;
        if (scc_period(T, d, c) % p != 0) return true;
    }
    return false;
}

std::optional<bool> is_oblivious_bruteforce(const Transducer& T, std::uint64_t p,
                                            std::size_t cap) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    auto cycles = enumerate_simple_cycles(T, cap);
    for (const auto& [out_len, len] : cycles.cycles)
        if (len % p != 0) return true;
    if (!cycles.complete) return std::nullopt;
    return false;
}

LipschitzReport lipschitz_report(const Transducer& T) {
    LipschitzReport report;
    auto cycles = enumerate_simple_cycles(T);
    report.complete = cycles.complete;
    if (cycles.cycles.empty()) return report;
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (const auto& [out_len, len] : cycles.cycles) {
        double r = static_cast<double>(out_len) / static_cast<double>(len);
        lo = std::min(lo, r);
        hi = std::max(hi, r);
        if (out_len == 0) report.has_empty_output_cycle = true;
    }
    report.min_ratio = lo;
    report.max_ratio = hi;
    return report;
}

} // namespace rational
