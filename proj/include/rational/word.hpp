#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace rational {

// A finite binary word. The empty word is a valid value, distinct from
// the absence of a value; it prints as "ε".
class Word {
public:
    Word() = default;
    Word(std::initializer_list<int> bits);

    // Throws std::invalid_argument if text contains anything but '0'/'1'.
    static Word from_string(std::string_view text);

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    int operator[](std::size_t i) const { return bits_[i]; }

    void push_back(int bit);
    void append(const Word& w);
    Word operator+(const Word& w) const;

    bool is_prefix_of(const Word& w) const;
    Word prefix(std::size_t n) const;
    Word suffix_from(std::size_t n) const;

    static Word lcp(const Word& a, const Word& b);

    std::string str() const;

    auto operator<=>(const Word&) const = default;

    const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

private:
    std::vector<std::uint8_t> bits_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

// All binary words of length min_len..max_len in shortlex order.
std::vector<Word> all_words(std::size_t min_len, std::size_t max_len);

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
};

} // namespace rational
