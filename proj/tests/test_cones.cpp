#include <doctest.h>

#include "fixtures.hpp"
#include "rational/cones.hpp"
#include "rational/errors.hpp"
#include "rational/normalize.hpp"

using namespace rational;

namespace {
std::vector<Word> words(std::initializer_list<const char*> items) {
    std::vector<Word> out;
    for (const char* s : items) out.push_back(Word::from_string(s));
    return out;
}
} // namespace

TEST_CASE("prefix code recognition") {
    CHECK(is_prefix_code(words({"00", "01", "1"})));
    CHECK(!is_prefix_code(words({"0", "01"})));
    CHECK(!is_prefix_code(words({"0", "0"})));
    CHECK(is_prefix_code({}));

    CHECK(is_complete_prefix_code(words({"00", "01", "1"})));
    CHECK(is_complete_prefix_code(words({""})));
    CHECK(!is_complete_prefix_code(words({"00", "1"})));
    CHECK(!is_complete_prefix_code({}));
}

TEST_CASE("complement cones cover exactly the rest") {
    auto rest = complement_cones(words({"00"}));
    CHECK(rest == words({"01", "1"}));
    CHECK(complement_cones(words({""})).empty());
    auto rest2 = complement_cones(words({"01", "10"}));
    CHECK(rest2 == words({"00", "11"}));
}

TEST_CASE("cone set normalization merges and dedupes") {
    CHECK(normalize_cone_set(words({"0", "1"})) == words({""}));
    CHECK(normalize_cone_set(words({"0", "00"})) == words({"0"}));
    CHECK(normalize_cone_set(words({"0", "10", "11"})) == words({""}));
    CHECK(normalize_cone_set(words({"01", "10"})) == words({"01", "10"}));
    CHECK(normalize_cone_set({}).empty());
}

TEST_CASE("splitting the last cone keeps completeness") {
    auto code = words({"0", "1"});
    split_last_cone(code);
    CHECK(is_complete_prefix_code(code));
    CHECK(code.size() == 3);
    std::sort(code.begin(), code.end());
    CHECK(code == words({"0", "10", "11"}));
}

TEST_CASE("cone set disjointness") {
    CHECK(cone_sets_disjoint(words({"00"}), words({"01", "1"})));
    CHECK(!cone_sets_disjoint(words({"0"}), words({"01"})));
}

TEST_CASE("state images of the example machine") {
    auto im = state_images(rational::testing::example_machine());
    CHECK(im[0] == words({""}));       // initial state is onto
    CHECK(im[1] == words({"0", "10"})); // misses the 11 cone

    auto id_im = state_images(identity_machine());
    CHECK(id_im[0] == words({""}));
}

TEST_CASE("image computation diverges on the constant machine") {
    CHECK_THROWS_AS(state_images(rational::testing::constant_machine()),
                    DivergenceError);
}

TEST_CASE("cone images through the map") {
    Transducer T = rational::testing::example_machine();
    CHECK(image_of_cone(T, Word::from_string("0")) == words({"0", "10"}));
    CHECK(image_of_cone(T, Word{}) == words({""}));
    CHECK(image_of_cone(T, Word::from_string("1")) == words({"11"}));
}
