#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "rational/element.hpp"
#include "rational/generate.hpp"
#include "rational/transducer.hpp"

using namespace rational;
using rational::testing::example_machine;

TEST_CASE("validate accepts complete machines") {
    CHECK(validate(example_machine()).empty());
    CHECK(validate(identity_machine()).empty());
}

TEST_CASE("validate reports missing transitions and dangling targets") {
    Transducer T;
    StateId s0 = T.add_state();
    StateId s1 = T.add_state();
    T.set_arc(s0, 0, s1, {});
    T.set_arc(s0, 1, s0, {1});
    T.set_arc(s1, 0, s0, {0});
    auto v = validate(T); // (s1, 1) missing
    REQUIRE(v.size() == 1);
    CHECK(v.front().find("missing transition") != std::string::npos);

    T.set_arc(s1, 1, 7, {0});
    auto v2 = validate(T);
    REQUIRE(v2.size() == 1);
    CHECK(v2.front().find("dangling") != std::string::npos);
}

TEST_CASE("run extends transitions and outputs to words") {
    Transducer T = example_machine();
    auto traj = run(T, T.initial(), Word::from_string("01"));
    CHECK(traj.emitted.str() == "10");
    CHECK(traj.final == T.initial());
    CHECK(traj.visited == std::vector<StateId>{0, 1, 0});

    auto empty = run(T, 1, Word{});
    CHECK(empty.emitted.empty());
    CHECK(empty.final == 1);
    CHECK(empty.visited.size() == 1);

    CHECK_THROWS_AS(run(T, 9, Word{}), std::invalid_argument);
}

TEST_CASE("run walks the flip-every-2nd machine") {
    auto traj = run(fp(2).forward(), 0, Word::from_string("0011"));
    CHECK(traj.emitted.str() == "0110");
}

TEST_CASE("eval_prefix is o from the initial state") {
    Transducer T = example_machine();
    CHECK(eval_prefix(T, Word::from_string("1")).str() == "11");
    CHECK(eval_prefix(T, Word::from_string("01")).str() == "10");
    Word w = Word::from_string("0110");
    CHECK(eval_prefix(identity_machine(), w) == w);
}

TEST_CASE("run concatenation law on random machines") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 40; ++i) {
        GeneratorSpec spec;
        spec.seed = rng();
        spec.max_states = 6;
        Transducer T = gen_machine(spec);
        Word u, v;
        for (int k = 0; k < 5; ++k) {
            u.push_back(static_cast<int>(rng() % 2));
            v.push_back(static_cast<int>(rng() % 2));
        }
        StateId s = static_cast<StateId>(rng() % T.num_states());
        auto [ou, su] = walk(T, s, u);
        auto [ov, sv] = walk(T, su, v);
        auto [ouv, suv] = walk(T, s, u + v);
        CHECK(ouv == ou + ov);
        CHECK(suv == sv);
    }
}

TEST_CASE("eval_prefix is monotone in the input") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        GeneratorSpec spec;
        spec.seed = rng();
        spec.max_states = 5;
        Transducer T = gen_machine(spec);
        Word w;
        Word prev;
        for (int k = 0; k < 8; ++k) {
            w.push_back(static_cast<int>(rng() % 2));
            Word cur = eval_prefix(T, w);
            CHECK(prev.is_prefix_of(cur));
            prev = cur;
        }
    }
}

TEST_CASE("machine composition feeds outputs through") {
    Transducer T = example_machine();
    Transducer P = compose_machines(identity_machine(), T);
    for (const auto& w : all_words(0, 6)) CHECK(eval_prefix(P, w) == eval_prefix(T, w));

    // outer reads the inner output, so lengths multiply through
    Transducer Q = compose_machines(T, identity_machine());
    for (const auto& w : all_words(0, 6)) CHECK(eval_prefix(Q, w) == eval_prefix(T, w));
}

TEST_CASE("isomorphism is renaming-invariance") {
    Transducer A = example_machine();
    Transducer B;
    StateId b1 = B.add_state("other");
    StateId b0 = B.add_state("names");
    B.set_arc(b0, 0, b1, {});
    B.set_arc(b0, 1, b0, {1, 1});
    B.set_arc(b1, 0, b0, {0});
    B.set_arc(b1, 1, b0, {1, 0});
    B.set_initial(b0);
    CHECK(isomorphic(A, B));
    CHECK(!isomorphic(A, identity_machine()));
}
