#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "fixtures.hpp"
#include "rational/errors.hpp"
#include "rational/exprlang.hpp"
#include "rational/io.hpp"
#include "rational/normalize.hpp"

using namespace rational;

TEST_CASE("leaf expressions") {
    CHECK(equal(parse_element("id"), identity()));
    CHECK(equal(parse_element("x0"), x0()));
    CHECK(equal(parse_element("swap"), swap_halves()));
    CHECK(equal(parse_element("fp(3)"), fp(3)));
}

TEST_CASE("composite expressions and whitespace") {
    Element e = parse_element("  comp( inv(x0) ,  pair(fp(2), fix(swap)) ) ");
    Element expect = compose(inverse(x0()), pair(fp(2), fix(swap_halves())));
    CHECK(equal(e, expect));
}

TEST_CASE("exchange tables in expressions") {
    CHECK(equal(parse_element("pex(00->0, 01->10, 1->11)"), x0()));
    CHECK(equal(parse_element("pex(0->1,1->0)"), swap_halves()));
    CHECK(equal(parse_element("pex(->)"), identity()));
}

TEST_CASE("glue expressions") {
    Element e = parse_element("glue(0: swap, 1: inv(swap))");
    CHECK(equal(e, swap_halves()));
}

TEST_CASE("raw file references") {
    std::string path = "exprlang_fig1_test.json";
    {
        std::ofstream out(path);
        out << serialize_machine(rational::testing::example_machine());
    }
    Element e = parse_element("raw(" + path + ")");
    CHECK(num_restrictions(e.forward()) == 2);
    CHECK(!e.has_inverse());
    std::remove(path.c_str());

    CHECK_THROWS_AS(parse_element("raw(no_such_file.json)"), ParseError);
}

TEST_CASE("parse errors carry positions") {
    for (const char* bad : {"", "pair(id", "comp(id,)", "pex(0->1)", "frob(id)",
                            "id extra", "fp(x)", "glue(0:id)"}) {
        CHECK_THROWS(parse_element(bad));
    }
    try {
        parse_element("pair(id; id)");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.column() > 0);
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    } catch (const InvariantError&) {
        FAIL("expected ParseError, got InvariantError");
    }
}

TEST_CASE("described expressions parse back") {
    Element e = compose(inverse(x0()), pair(fp(2), fix(swap_halves())));
    CHECK(equal(parse_element(e.describe()), e));
}
