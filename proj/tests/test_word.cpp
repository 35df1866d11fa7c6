#include <doctest.h>

#include <stdexcept>

#include "rational/word.hpp"

using namespace rational;

TEST_CASE("words parse and print") {
    Word w = Word::from_string("0110");
    CHECK(w.size() == 4);
    CHECK(w.str() == "0110");
    CHECK(w[1] == 1);
    CHECK(Word::from_string("").empty());
    CHECK_THROWS_AS(Word::from_string("012"), std::invalid_argument);
}

TEST_CASE("concatenation and prefixes") {
    Word a = Word::from_string("01");
    Word b = Word::from_string("10");
    CHECK((a + b).str() == "0110");
    CHECK(a.is_prefix_of(a + b));
    CHECK(!b.is_prefix_of(a + b));
    CHECK(Word{}.is_prefix_of(a));
    CHECK((a + b).suffix_from(2) == b);
    CHECK((a + b).prefix(2) == a);
}

TEST_CASE("longest common prefix") {
    CHECK(Word::lcp(Word::from_string("10"), Word::from_string("11")).str() == "1");
    CHECK(Word::lcp(Word::from_string("0"), Word::from_string("10")).empty());
    CHECK(Word::lcp(Word{}, Word::from_string("1")).empty());
    CHECK(Word::lcp(Word::from_string("011"), Word::from_string("0110")).str() == "011");
}

TEST_CASE("word enumeration is shortlex and complete") {
    auto words = all_words(0, 3);
    CHECK(words.size() == 1 + 2 + 4 + 8);
    CHECK(words.front().empty());
    CHECK(words.back().str() == "111");
    auto depth2 = all_words(2, 2);
    CHECK(depth2.size() == 4);
    CHECK(depth2[0].str() == "00");
    CHECK(depth2[3].str() == "11");
}
