#include "rational/generate.hpp"

#include <random>

namespace rational {

namespace {

// Draws go through the engine output directly: the standard guarantees the
// mt19937_64 stream, while distribution classes vary between libraries.
std::uint64_t pick(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

std::vector<Word> random_complete_code(std::mt19937_64& rng, int splits) {
    std::vector<Word> code{Word{0}, Word{1}};
    for (int i = 0; i < splits; ++i) {
        std::size_t at = pick(rng, code.size());
        Word base = code[at];
        code.erase(code.begin() + static_cast<std::ptrdiff_t>(at));
        Word a = base, b = base;
        a.push_back(0);
        b.push_back(1);
        code.push_back(std::move(a));
        code.push_back(std::move(b));
    }
    return code;
}

Element random_exchange(std::mt19937_64& rng) {
    int splits = static_cast<int>(pick(rng, 3));
    auto domains = random_complete_code(rng, splits);
    auto ranges = random_complete_code(rng, splits);
    // Fisher-Yates on the range column.
    for (std::size_t i = ranges.size(); i > 1; --i)
        std::swap(ranges[i - 1], ranges[pick(rng, i)]);
    ExchangeTable tbl;
    for (std::size_t i = 0; i < domains.size(); ++i)
        tbl.rules.push_back({domains[i], ranges[i]});
    return prefix_exchange(std::move(tbl));
}

Element leaf(std::mt19937_64& rng) {
    switch (pick(rng, 7)) {
        case 0: return identity();
        case 1: return x0();
        case 2: return swap_halves();
        case 3: return fp(2);
        case 4: return fp(3);
        case 5: return fp(5);
        default: return random_exchange(rng);
    }
}

Element gen_tree(std::mt19937_64& rng, const GeneratorSpec& spec, int depth) {
    auto guard = [&](Element e) {
        return e.forward().num_states() > spec.max_states ? reduced(e) : e;
    };
    if (depth <= 0) return leaf(rng);
    int total = 0;
    for (int w : spec.weights) total += w;
    int roll = static_cast<int>(pick(rng, static_cast<std::uint64_t>(total)));
    int choice = 0;
    for (; choice < 4; ++choice) {
        roll -= spec.weights[static_cast<std::size_t>(choice)];
        if (roll < 0) break;
    }
    switch (choice) {
        case 0: {
            Element a = gen_tree(rng, spec, depth - 1);
            Element b = gen_tree(rng, spec, depth - 1);
            return guard(pair(a, b));
        }
        case 1: return guard(fix(gen_tree(rng, spec, depth - 1)));
        case 2: {
            Element a = gen_tree(rng, spec, depth - 1);
            Element b = gen_tree(rng, spec, depth - 1);
            return guard(compose(a, b));
        }
        case 3: return inverse(gen_tree(rng, spec, depth - 1));
        default: return leaf(rng);
    }
}

} // namespace

Element gen_element(const GeneratorSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    return gen_tree(rng, spec, spec.depth);
}

Transducer gen_machine(const GeneratorSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    std::size_t n = 1 + pick(rng, spec.max_states);
    Transducer T;
    for (std::size_t i = 0; i < n; ++i) T.add_state();
    for (StateId s = 0; s < n; ++s) {
        for (int bit = 0; bit < 2; ++bit) {
            // output length skewed toward single bits: 0..3
            std::uint64_t r = pick(rng, 9);
            std::size_t len = r < 2 ? 0 : r < 6 ? 1 : r < 8 ? 2 : 3;
            Word out;
            for (std::size_t i = 0; i < len; ++i)
                out.push_back(static_cast<int>(pick(rng, 2)));
            T.set_arc(s, bit, static_cast<StateId>(pick(rng, n)), std::move(out));
        }
    }
    T.set_initial(0);
    return T;
}

Transducer obfuscate(const Transducer& T, std::uint64_t seed, int rounds) {
    std::mt19937_64 rng(seed);
    Transducer M = T;
    for (int round = 0; round < rounds; ++round) {
        StateId victim = static_cast<StateId>(pick(rng, M.num_states()));
        Transducer next;
        for (StateId s = 0; s < M.num_states(); ++s) next.add_state();
        StateId twin = next.add_state();
        for (StateId s = 0; s < M.num_states(); ++s) {
            for (int bit = 0; bit < 2; ++bit) {
                const Arc& a = M.arc(s, bit);
                StateId to = a.to;
                if (to == victim && pick(rng, 2) == 0) to = twin;
                next.set_arc(s, bit, to, a.out);
            }
        }
        for (int bit = 0; bit < 2; ++bit) {
            const Arc& a = M.arc(victim, bit);
            next.set_arc(twin, bit, a.to, a.out);
        }
        next.set_initial(M.initial());
        M = std::move(next);
    }
    return M;
}

} // namespace rational
