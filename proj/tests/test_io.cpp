#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "rational/errors.hpp"
#include "rational/generate.hpp"
#include "rational/io.hpp"

using namespace rational;
using rational::testing::example_machine;

TEST_CASE("serialize then parse is the identity up to renaming") {
    Transducer T = example_machine();
    Transducer back = parse_machine(serialize_machine(T));
    CHECK(isomorphic(T, back));
    CHECK(back.name(0) == "s0");

    std::mt19937_64 rng(3);
    for (int i = 0; i < 30; ++i) {
        GeneratorSpec spec;
        spec.seed = rng();
        spec.max_states = 7;
        Transducer M = gen_machine(spec);
        CHECK(isomorphic(M, parse_machine(serialize_machine(M))));
    }
}

TEST_CASE("parse rejects an empty state list") {
    CHECK_THROWS_AS(
        parse_machine(R"({"states": [], "initial": "a", "transitions": {}})"),
        InvariantError);
}

TEST_CASE("parse rejects non-binary output symbols") {
    std::string text = R"({
      "states": ["a"],
      "initial": "a",
      "transitions": {"a": {"0": {"out": "2", "to": "a"},
                            "1": {"out": "", "to": "a"}}}
    })";
    CHECK_THROWS_AS(parse_machine(text), ParseError);
}

TEST_CASE("parse reports incomplete machines as invariant violations") {
    std::string text = R"({
      "states": ["a", "b"],
      "initial": "a",
      "transitions": {"a": {"0": {"out": "", "to": "b"},
                            "1": {"out": "1", "to": "a"}},
                      "b": {"0": {"out": "0", "to": "a"}}}
    })";
    try {
        parse_machine(text);
        FAIL("expected InvariantError");
    } catch (const InvariantError& e) {
        CHECK(std::string(e.what()).find("missing transition") != std::string::npos);
    }
}

TEST_CASE("syntax errors carry a position") {
    try {
        parse_machine("{\n  \"states\": [,]\n}");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() > 0);
    }
}

TEST_CASE("unknown target states are named") {
    std::string text = R"({
      "states": ["a"],
      "initial": "a",
      "transitions": {"a": {"0": {"out": "", "to": "ghost"},
                            "1": {"out": "1", "to": "a"}}}
    })";
    try {
        parse_machine(text);
        FAIL("expected InvariantError");
    } catch (const InvariantError& e) {
        CHECK(std::string(e.what()).find("ghost") != std::string::npos);
    }
}

TEST_CASE("dot export labels edges with bit and output") {
    std::string dot = to_dot(example_machine());
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("0|ε") != std::string::npos);
    CHECK(dot.find("1|11") != std::string::npos);
    CHECK(dot.find("0|0") != std::string::npos);
    CHECK(dot.find("1|10") != std::string::npos);

    std::string id_dot = to_dot(identity_machine());
    // both self-loops share the target: one edge, two labels
    CHECK(id_dot.find("0|0\\n1|1") != std::string::npos);
}

TEST_CASE("dot export draws the 3-cycle of the third digit flipper") {
    std::string dot = to_dot(fp(3).forward());
    for (const char* node : {"\"s0\"", "\"s1\"", "\"s2\""})
        CHECK(dot.find(node) != std::string::npos);
    CHECK(dot.find("\"s3\"") == std::string::npos);
    // each state feeds the next with both bits on one drawn edge
    CHECK(dot.find("\"s0\" -> \"s1\"") != std::string::npos);
    CHECK(dot.find("\"s1\" -> \"s2\"") != std::string::npos);
    CHECK(dot.find("\"s2\" -> \"s0\"") != std::string::npos);
}
