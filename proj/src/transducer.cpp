#include "rational/transducer.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace rational {

StateId Transducer::add_state(std::string name) {
    arcs_.emplace_back();
    if (!name.empty()) {
        names_.resize(arcs_.size());
        names_.back() = std::move(name);
    } else if (!names_.empty()) {
        names_.resize(arcs_.size());
    }
    if (initial_ == kNoState) initial_ = 0;
    return static_cast<StateId>(arcs_.size() - 1);
}

void Transducer::set_arc(StateId s, int bit, StateId to, Word out) {
    if (s >= arcs_.size()) throw std::invalid_argument("unknown state id");
    if (bit != 0 && bit != 1) throw std::invalid_argument("bit must be 0 or 1");
    arcs_[s][bit] = Arc{to, std::move(out)};
}

void Transducer::set_initial(StateId s) {
    if (s >= arcs_.size()) throw std::invalid_argument("unknown state id");
    initial_ = s;
}

std::string Transducer::name(StateId s) const {
    if (s < names_.size() && !names_[s].empty()) return names_[s];
    return "s" + std::to_string(s);
}

std::vector<std::string> validate(const Transducer& T) {
    std::vector<std::string> violations;
    if (T.num_states() == 0) {
        violations.push_back("empty state set");
        return violations;
    }
    if (T.initial() >= T.num_states())
        violations.push_back("initial state missing from state set");
    for (StateId s = 0; s < T.num_states(); ++s) {
        for (int bit = 0; bit < 2; ++bit) {
            const Arc& a = T.arc(s, bit);
            if (a.to == kNoState)
                violations.push_back("missing transition (" + T.name(s) + "," +
                                     std::to_string(bit) + ")");
            else if (a.to >= T.num_states())
                violations.push_back("dangling target of (" + T.name(s) + "," +
                                     std::to_string(bit) + ")");
        }
    }
    return violations;
}

Trajectory run(const Transducer& T, StateId s, const Word& w) {
    if (s >= T.num_states()) throw std::invalid_argument("unknown state id");
    Trajectory traj;
    traj.visited.reserve(w.size() + 1);
    traj.visited.push_back(s);
    for (std::size_t i = 0; i < w.size(); ++i) {
        const Arc& a = T.arc(s, w[i]);
        traj.emitted.append(a.out);
        s = a.to;
        traj.visited.push_back(s);
    }
    traj.final = s;
    return traj;
}

std::pair<Word, StateId> walk(const Transducer& T, StateId s, const Word& w) {
    if (s >= T.num_states()) throw std::invalid_argument("unknown state id");
    Word emitted;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const Arc& a = T.arc(s, w[i]);
        emitted.append(a.out);
        s = a.to;
    }
    return {std::move(emitted), s};
}

Word eval_prefix(const Transducer& T, const Word& w) {
    return walk(T, T.initial(), w).first;
}

Transducer identity_machine() {
    Transducer T;
    StateId q = T.add_state();
    T.set_arc(q, 0, q, Word{0});
    T.set_arc(q, 1, q, Word{1});
    return T;
}

Transducer compose_machines(const Transducer& outer, const Transducer& inner) {
    Transducer P;
    std::unordered_map<std::uint64_t, StateId> index;
    auto key = [](StateId in, StateId out) {
        return (static_cast<std::uint64_t>(in) << 32) | out;
    };
    std::deque<std::pair<StateId, StateId>> queue;

    auto intern = [&](StateId in, StateId out) {
        auto [it, fresh] = index.try_emplace(key(in, out), 0);
        if (fresh) {
            it->second = P.add_state();
            queue.emplace_back(in, out);
        }
        return it->second;
    };

    intern(inner.initial(), outer.initial());
    while (!queue.empty()) {
        auto [si, so] = queue.front();
        queue.pop_front();
        StateId from = index.at(key(si, so));
        for (int bit = 0; bit < 2; ++bit) {
            const Arc& a = inner.arc(si, bit);
            auto [emitted, so2] = walk(outer, so, a.out);
            StateId to = intern(a.to, so2);
            P.set_arc(from, bit, to, std::move(emitted));
        }
    }
    return P;
}

bool isomorphic(const Transducer& A, const Transducer& B) {
    if (A.num_states() != B.num_states()) return false;
    std::vector<StateId> a2b(A.num_states(), kNoState);
    std::vector<StateId> b2a(B.num_states(), kNoState);
    std::deque<std::pair<StateId, StateId>> queue;

    auto match = [&](StateId a, StateId b) {
        if (a2b[a] != kNoState || b2a[b] != kNoState)
            return a2b[a] == b && b2a[b] == a;
        a2b[a] = b;
        b2a[b] = a;
        queue.emplace_back(a, b);
        return true;
    };

    if (!match(A.initial(), B.initial())) return false;
    while (!queue.empty()) {
        auto [a, b] = queue.front();
        queue.pop_front();
        for (int bit = 0; bit < 2; ++bit) {
            const Arc& ea = A.arc(a, bit);
            const Arc& eb = B.arc(b, bit);
            if (ea.out != eb.out) return false;
            if (!match(ea.to, eb.to)) return false;
        }
    }
    return true;
}

} // namespace rational
