#include "rational/verify.hpp"

#include <chrono>
#include <deque>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rational/cones.hpp"
#include "rational/cycles.hpp"
#include "rational/errors.hpp"
#include "rational/io.hpp"
#include "rational/normalize.hpp"

namespace rational {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::uint64_t derive(std::uint64_t base, std::uint64_t salt) {
    return splitmix64(base ^ splitmix64(salt));
}

Element gen_invertible(std::uint64_t seed, const SuiteOptions& opt,
                       std::size_t max_states = 0) {
    GeneratorSpec spec;
    spec.seed = seed;
    spec.depth = opt.element_depth;
    spec.max_states = max_states ? max_states : opt.max_states;
    return gen_element(spec);
}

std::string machine_witness(const std::string& label, const Transducer& T) {
    return label + ":\n" + serialize_machine(T);
}

void record(SuiteResult& r, std::string name, bool passed, std::string witness = {}) {
    r.cases.push_back(CaseResult{std::move(name), passed,
                                 passed ? std::string{} : std::move(witness)});
}

// [a,b] = a b a^{-1} b^{-1}, reduced stage by stage so repeated products do
// not compound state counts.
Element bracket(const Element& a, const Element& b) {
    Element ab = reduced(compose(a, b));
    Element aba = reduced(compose(ab, inverse(a)));
    return reduced(compose(aba, inverse(b)));
}

const std::vector<std::uint64_t> kSmallPrimes{2, 3, 5, 7, 11, 13};

std::vector<std::uint64_t> primes_for(const SuiteOptions& opt,
                                      std::vector<std::uint64_t> defaults) {
    if (opt.prime) return {*opt.prime};
    return defaults;
}

// ---------------------------------------------------------------------------
// Independent restriction-count oracles for synchronous machines (exactly one
// output bit per input bit). For such machines the cone prefix of any input
// word has the word's own length, so the suffix behaviors of the accessible
// states are exactly the restriction maps of the induced homeomorphism; no
// residue or refinement machinery is involved here.

bool is_synchronous(const Transducer& T) {
    for (StateId s = 0; s < T.num_states(); ++s)
        for (int b = 0; b < 2; ++b)
            if (T.arc(s, b).out.size() != 1) return false;
    return true;
}

// Shortest word on which the behaviors of s and t differ; nullopt when the
// pair automaton closes without an output mismatch (behaviors equal).
std::optional<std::size_t> separating_word_length(const Transducer& T, StateId s,
                                                  StateId t) {
    std::set<std::pair<StateId, StateId>> seen;
    std::deque<std::pair<std::pair<StateId, StateId>, std::size_t>> queue;
    queue.push_back({{s, t}, 0});
    seen.insert({s, t});
    while (!queue.empty()) {
        auto [pair, depth] = queue.front();
        queue.pop_front();
        for (int b = 0; b < 2; ++b) {
            const Arc& au = T.arc(pair.first, b);
            const Arc& av = T.arc(pair.second, b);
            if (au.out != av.out) return depth + 1;
            if (seen.insert({au.to, av.to}).second)
                queue.push_back({{au.to, av.to}, depth + 1});
        }
    }
    return std::nullopt;
}

struct BehaviorClasses {
    std::size_t count = 0;
    std::size_t max_separator = 0;
};

std::optional<BehaviorClasses> synchronous_behavior_classes(const Transducer& T) {
    if (!is_synchronous(T)) return std::nullopt;
    auto states = accessible_states(T);
    std::vector<StateId> reps;
    BehaviorClasses result;
    for (StateId s : states) {
        bool fresh = true;
        for (StateId r : reps) {
            auto sep = separating_word_length(T, s, r);
            if (!sep) {
                fresh = false;
                break;
            }
            result.max_separator = std::max(result.max_separator, *sep);
        }
        if (fresh) reps.push_back(s);
    }
    result.count = reps.size();
    return result;
}

// Exhaustive variant: counts the distinct suffix behaviors of all cone words
// up to depth_alpha, each probed on every word up to depth_probe. Distinct
// signatures never overcount (equal restrictions give equal signatures), so
// asserting the expected count also certifies the probe depth was enough.
std::optional<std::size_t> bruteforce_restriction_count(const Transducer& T,
                                                        std::size_t depth_alpha,
                                                        std::size_t depth_probe) {
    if (!is_synchronous(T)) return std::nullopt;
    auto probes = all_words(0, depth_probe);
    std::set<std::string> signatures;
    for (const auto& alpha : all_words(0, depth_alpha)) {
        std::string sig;
        for (const auto& w : probes) {
            Word image = eval_prefix(T, alpha + w);
            sig += image.suffix_from(alpha.size()).str();
            sig += '/';
        }
        signatures.insert(std::move(sig));
    }
    return signatures.size();
}

// ---------------------------------------------------------------------------
// Suites

SuiteResult suite_hilbert(const SuiteOptions& opt) {
    SuiteResult r;
    r.suite = "hilbert";
    std::vector<std::pair<std::string, Element>> subjects{
        {"x0", x0()},
        {"swap", swap_halves()},
        {"fp(2)", fp(2)},
        {"fp(3)", fp(3)},
    };
    for (std::size_t i = 0; i < opt.samples; ++i) {
        Element g = gen_invertible(derive(opt.seed, i), opt);
        subjects.emplace_back("gen[" + std::to_string(i) + "] " + g.describe(),
                              std::move(g));
    }
    for (const auto& [name, f] : subjects) {
        Element lhs = fix(f);
        Element rhs = pair(f, fix(f));
        bool ok = equal(lhs, rhs);
        record(r, "fix(f) = pair(f, fix(f)) with f = " + name, ok,
               machine_witness("f", f.forward()));
    }
    return r;
}

SuiteResult suite_commutator(const SuiteOptions& opt) {
    SuiteResult r;
    r.suite = "commutator";
    for (std::size_t i = 0; i < opt.samples; ++i) {
        Element g = gen_invertible(derive(opt.seed, 0x10000 + i), opt);
        Element f = pair(pair(identity(), g), identity());
        Element h = fix(g);
        Element k = pair(identity(), h);
        Element lhs = reduced(compose(inverse(x0()), k));
        lhs = reduced(compose(lhs, x0()));
        lhs = reduced(compose(lhs, inverse(k)));
        bool ok = equal(lhs, f);
        record(r, "x0^-1 k x0 k^-1 = ((1,g),1) for gen[" + std::to_string(i) + "]", ok,
               machine_witness("g", g.forward()));
    }
    return r;
}

SuiteResult suite_simplicity_step(const SuiteOptions& opt) {
    SuiteResult r;
    r.suite = "simplicity-step";
    Element f1 = swap_halves(); // f1(I_0) is disjoint from I_0
    for (std::size_t i = 0; i < opt.samples; ++i) {
        Element g = gen_invertible(derive(opt.seed, 0x20000 + 2 * i), opt);
        Element h = gen_invertible(derive(opt.seed, 0x20000 + 2 * i + 1), opt);
        Element gpad = pair(g, identity());
        Element gp = reduced(compose(gpad, f1));
        gp = reduced(compose(gp, inverse(gpad)));
        gp = reduced(compose(gp, inverse(f1)));
        Element lhs = bracket(gp, pair(h, identity()));
        Element rhs = pair(bracket(g, h), identity());
        bool ok = equal(lhs, rhs);
        record(r, "[g',(h,1)] = ([g,h],1) for gen[" + std::to_string(i) + "]", ok,
               machine_witness("g", g.forward()) + machine_witness("h", h.forward()));
    }
    return r;
}

SuiteResult suite_small_support(const SuiteOptions& opt) {
    SuiteResult r;
    r.suite = "small-support";
    std::mt19937_64 rng(derive(opt.seed, 0x30000));
    std::size_t found = 0, attempts = 0;
    const std::size_t max_attempts = opt.samples * 200 + 200;
    while (found < opt.samples && attempts < max_attempts) {
        ++attempts;
        Element f = gen_invertible(derive(opt.seed, 0x31000 + attempts), opt);
        // random nonempty proper subset of a random complete prefix code
        std::vector<Word> code{Word{0}, Word{1}};
        for (std::uint64_t s = rng() % 3; s > 0; --s) split_last_cone(code);
        std::vector<Word> E;
        for (const auto& w : code)
            if (rng() % 2 == 0) E.push_back(w);
        if (E.empty() || E.size() == code.size()) continue;

        try {
            auto fact = small_support_factor(f, E);
            ++found;
            std::string tag = "gen[" + std::to_string(found) + "]";
            std::string witness = machine_witness("f", f.forward());
            record(r, "f = g^-1 (gf) for " + tag,
                   equal(compose(inverse(fact.g), fact.gf), f), witness);
            record(r, "g is an involution for " + tag,
                   equal(compose(fact.g, fact.g), identity()), witness);
            bool fixed_on_E = true;
            for (const auto& alpha : E) {
                auto res = restriction(fact.gf.forward(), alpha);
                if (res.prefix_out != alpha ||
                    !isomorphic(res.machine.machine, identity_machine()))
                    fixed_on_E = false;
            }
            record(r, "gf is the identity on I_E for " + tag, fixed_on_E, witness);
        } catch (const InvariantError&) {
            continue; // disjointness check rejected the pair
        }
    }
    record(r, "enough disjoint (f, E) pairs were found", found >= opt.samples,
           "found " + std::to_string(found) + " of " + std::to_string(opt.samples));
    return r;
}

SuiteResult suite_oblivious_product(const SuiteOptions& opt) {
    SuiteResult r;
    r.suite = "oblivious-product";
    for (std::uint64_t p : primes_for(opt, {2, 3, 5, 7})) {
        std::size_t product_failures = 0;
        std::size_t small_failures = 0;
        std::size_t pairs_tested = 0;
        std::string witness;
        for (std::size_t i = 0; i < opt.samples; ++i) {
            GeneratorSpec small_spec;
            small_spec.seed = derive(opt.seed, 0x40000 + p * 1000 + i);
            small_spec.max_states = p - 1; // p >= 2, so at least one state
            Transducer fprime = gen_machine(small_spec);
            if (!is_oblivious(fprime, p)) {
                ++small_failures;
                witness = machine_witness("f'", fprime);
            }

            Transducer fm;
            bool have = false;
            for (std::size_t t = 0; t < 100 && !have; ++t) {
                GeneratorSpec spec;
                spec.seed = derive(opt.seed, 0x41000 + p * 10000 + i * 100 + t);
                spec.max_states = 8;
                fm = gen_machine(spec);
                have = is_oblivious(fm, p);
            }
            if (!have) continue;
            ++pairs_tested;
            Transducer product = compose_machines(fprime, fm);
            if (!is_oblivious(product, p)) {
                ++product_failures;
                witness = machine_witness("f'", fprime) + machine_witness("f", fm);
            }
        }
        record(r,
               "machines with fewer than " + std::to_string(p) +
                   " states are oblivious to " + std::to_string(p),
               small_failures == 0, witness);
        record(r,
               "product with an oblivious machine stays oblivious to " +
                   std::to_string(p) + " (" + std::to_string(pairs_tested) + " pairs)",
               product_failures == 0 && pairs_tested == opt.samples, witness);

        std::size_t oracle_mismatch = 0;
        for (std::size_t i = 0; i < opt.samples; ++i) {
            GeneratorSpec spec;
            spec.seed = derive(opt.seed, 0x42000 + p * 1000 + i);
            spec.max_states = 6;
            Transducer m = gen_machine(spec);
            auto brute = is_oblivious_bruteforce(m, p);
            if (brute && *brute != is_oblivious(m, p)) {
                ++oracle_mismatch;
                witness = machine_witness("machine", m);
            }
        }
        record(r,
               "period test agrees with the simple-cycle oracle mod " +
                   std::to_string(p),
               oracle_mismatch == 0, witness);
    }
    return r;
}

SuiteResult suite_fp_canonical(const SuiteOptions& opt) {
    SuiteResult r;
    r.suite = "fp-canonical";
    for (std::uint64_t p : primes_for(opt, kSmallPrimes)) {
        Element el = fp(p);
        const Transducer& M = el.forward();
        std::string witness = machine_witness("fp", M);
        std::string tag = "fp(" + std::to_string(p) + ")";

        CanonicalForm C = minimize(M);
        record(r, tag + " minimizes to exactly " + std::to_string(p) + " states",
               C.restriction_count == p,
               witness + "\ncanonical count " + std::to_string(C.restriction_count));

        auto oracle = synchronous_behavior_classes(M);
        record(r, tag + " has " + std::to_string(p) + " distinct state behaviors (oracle)",
               oracle && oracle->count == p && oracle->max_separator <= 2 * p, witness);

        if (p <= 5) {
            auto brute = bruteforce_restriction_count(M, 2 * p, p + 1);
            record(r,
                   tag + " depth-" + std::to_string(2 * p) +
                       " cone enumeration finds " + std::to_string(p) + " behaviors",
                   brute && *brute == p, witness);
        }

        record(r, tag + " machine is not oblivious to " + std::to_string(p),
               !is_oblivious(M, p), witness);
        for (std::uint64_t q : kSmallPrimes) {
            if (q == p) continue;
            record(r, tag + " machine is oblivious to " + std::to_string(q),
                   is_oblivious(M, q), witness);
        }

        record(r, tag + " composed with itself is the identity",
               equal(compose(el, el), identity()), witness);

        auto report = analyze_cycles(M);
        record(r, tag + " machine is one component of period " + std::to_string(p),
               report.sccs.size() == 1 && report.sccs.front().period == p, witness);
    }
    return r;
}

SuiteResult suite_involution(const SuiteOptions& opt) {
    SuiteResult r;
    r.suite = "involution";
    record(r, "swap composed with itself is the identity",
           equal(compose(swap_halves(), swap_halves()), identity()));
    record(r, "x0 composed with inv(x0) is the identity",
           equal(compose(x0(), inverse(x0())), identity()));
    record(r, "inv(x0) composed with x0 is the identity",
           equal(compose(inverse(x0()), x0()), identity()));
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull})
        record(r, "fp(" + std::to_string(p) + ") is an involution",
               equal(compose(fp(p), fp(p)), identity()));
    for (std::size_t i = 0; i < opt.samples; ++i) {
        GeneratorSpec spec;
        spec.seed = derive(opt.seed, 0x50000 + i);
        spec.depth = 0; // leaves only; exchanges dominate
        Element e = gen_element(spec);
        record(r, "e inv(e) = 1 for leaf[" + std::to_string(i) + "] " + e.describe(),
               equal(compose(e, inverse(e)), identity()),
               machine_witness("e", e.forward()));
    }
    return r;
}

SuiteResult suite_group_axioms(const SuiteOptions& opt) {
    SuiteResult r;
    r.suite = "group-axioms";
    const std::size_t cap = std::min<std::size_t>(opt.max_states, 12);
    for (std::size_t i = 0; i < opt.samples; ++i) {
        Element a = gen_invertible(derive(opt.seed, 0x60000 + 3 * i), opt, cap);
        Element b = gen_invertible(derive(opt.seed, 0x60000 + 3 * i + 1), opt, cap);
        Element c = gen_invertible(derive(opt.seed, 0x60000 + 3 * i + 2), opt, cap);
        std::string tag = "gen[" + std::to_string(i) + "]";
        std::string witness = machine_witness("a", a.forward()) +
                              machine_witness("b", b.forward()) +
                              machine_witness("c", c.forward());

        Element lhs = compose(a, reduced(compose(b, c)));
        Element rhs = compose(reduced(compose(a, b)), c);
        record(r, "a(bc) = (ab)c for " + tag, equal(lhs, rhs), witness);
        record(r, "a a^-1 = 1 for " + tag,
               equal(compose(a, inverse(a)), identity()), witness);
        record(r, "a^-1 a = 1 for " + tag,
               equal(compose(inverse(a), a), identity()), witness);
        record(r, "a·1 = a for " + tag, equal(compose(a, identity()), a), witness);
        record(r, "1·a = a for " + tag, equal(compose(identity(), a), a), witness);

        // pairing laws: the two cone restrictions of (a,b) recover a and b
        Element paired = pair(a, b);
        auto r0 = restriction(paired.forward(), Word{0});
        auto r1 = restriction(paired.forward(), Word{1});
        bool laws = isomorphic(r0.machine.machine, minimize(a.forward()).machine) &&
                    isomorphic(r1.machine.machine, minimize(b.forward()).machine);
        record(r, "(a,b)|_0 = a and (a,b)|_1 = b for " + tag, laws, witness);

        // and one level deeper on a derived word
        Word alpha;
        std::uint64_t bitsrc = derive(opt.seed, 0x61000 + i);
        for (int k = 0; k < 3; ++k) alpha.push_back(static_cast<int>((bitsrc >> k) & 1));
        auto deep = restriction(paired.forward(), Word{0} + alpha);
        auto expect = restriction(a.forward(), alpha);
        record(r, "(a,b)|_{0w} = a|_w for " + tag,
               isomorphic(deep.machine.machine, expect.machine.machine) &&
                   deep.prefix_out == Word{0} + expect.prefix_out,
               witness);
    }
    return r;
}

SuiteResult suite_canonicity(const SuiteOptions& opt) {
    SuiteResult r;
    r.suite = "canonicity";
    for (std::size_t i = 0; i < opt.samples; ++i) {
        Element e = gen_invertible(derive(opt.seed, 0x70000 + i), opt);
        const Transducer& T = e.forward();
        std::string witness = machine_witness("machine", T);
        std::string tag = "gen[" + std::to_string(i) + "]";

        CanonicalForm C = minimize(T);
        Transducer O = make_onward(T);

        bool prefix_ok = true, onward_exact = true;
        for (const auto& w : all_words(0, opt.probe_depth)) {
            Word a = eval_prefix(C.machine, w);
            Word b = eval_prefix(T, w);
            if (!a.is_prefix_of(b) && !b.is_prefix_of(a)) prefix_ok = false;
            if (eval_prefix(O, w) != a) onward_exact = false;
            if (!prefix_ok || !onward_exact) break;
        }
        record(r, "minimization preserves outputs (prefix contract) for " + tag,
               prefix_ok, witness);
        record(r, "canonical outputs match the onward machine exactly for " + tag,
               onward_exact, witness);

        CanonicalForm C2 = minimize(C.machine);
        record(r, "minimize is idempotent and byte-stable for " + tag,
               C2.restriction_count == C.restriction_count &&
                   serialize_machine(C2.machine) == serialize_machine(C.machine),
               witness);

        Transducer obf = obfuscate(C.machine, derive(opt.seed, 0x71000 + i),
                                   1 + static_cast<int>(i % 3));
        CanonicalForm CR = minimize(obf);
        record(r, "state-duplication obfuscation recovers the canonical form for " + tag,
               CR.restriction_count == C.restriction_count &&
                   isomorphic(CR.machine, C.machine),
               machine_witness("obfuscated", obf));

        // f(aw) = beta · f|_a(w) on the canonical machine, exactly.
        bool coherent = true;
        const std::size_t d = 6;
        for (const auto& alpha : all_words(0, d)) {
            auto [beta, s] = walk(C.machine, C.machine.initial(), alpha);
            for (const auto& w : all_words(0, d)) {
                if (eval_prefix(C.machine, alpha + w) != beta + walk(C.machine, s, w).first) {
                    coherent = false;
                    break;
                }
            }
            if (!coherent) break;
        }
        record(r, "restriction coherence to depth 6x6 for " + tag, coherent, witness);
    }
    return r;
}

} // namespace

std::size_t SuiteResult::failed() const {
    std::size_t n = 0;
    for (const auto& c : cases)
        if (!c.passed) ++n;
    return n;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "hilbert",        "commutator",   "simplicity-step",
        "small-support",  "oblivious-product", "fp-canonical",
        "involution",     "group-axioms", "canonicity",
    };
    return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
    auto start = std::chrono::steady_clock::now();
    SuiteResult r;
    if (name == "hilbert") r = suite_hilbert(opt);
    else if (name == "commutator") r = suite_commutator(opt);
    else if (name == "simplicity-step") r = suite_simplicity_step(opt);
    else if (name == "small-support") r = suite_small_support(opt);
    else if (name == "oblivious-product") r = suite_oblivious_product(opt);
    else if (name == "fp-canonical") r = suite_fp_canonical(opt);
    else if (name == "involution") r = suite_involution(opt);
    else if (name == "group-axioms") r = suite_group_axioms(opt);
    else if (name == "canonicity") r = suite_canonicity(opt);
    else throw std::invalid_argument("unknown suite '" + name + "'");
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                    .count();
    return r;
}

std::vector<SuiteResult> run_all_suites(const SuiteOptions& opt) {
    std::vector<SuiteResult> out;
    for (const auto& name : suite_names()) out.push_back(run_suite(name, opt));
    return out;
}

} // namespace rational
