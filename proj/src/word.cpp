#include "rational/word.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace rational {

Word::Word(std::initializer_list<int> bits) {
    bits_.reserve(bits.size());
    for (int b : bits) push_back(b);
}

Word Word::from_string(std::string_view text) {
    Word w;
    w.bits_.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1')
            throw std::invalid_argument(std::string("invalid symbol '") + c +
                                        "' in binary word");
        w.bits_.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return w;
}

void Word::push_back(int bit) {
    if (bit != 0 && bit != 1) throw std::invalid_argument("bit must be 0 or 1");
    bits_.push_back(static_cast<std::uint8_t>(bit));
}

void Word::append(const Word& w) {
    bits_.insert(bits_.end(), w.bits_.begin(), w.bits_.end());
}

Word Word::operator+(const Word& w) const {
    Word r = *this;
    r.append(w);
    return r;
}

bool Word::is_prefix_of(const Word& w) const {
    return size() <= w.size() &&
           std::equal(bits_.begin(), bits_.end(), w.bits_.begin());
}

Word Word::prefix(std::size_t n) const {
    Word r;
    n = std::min(n, size());
    r.bits_.assign(bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(n));
    return r;
}

Word Word::suffix_from(std::size_t n) const {
    Word r;
    if (n < size())
        r.bits_.assign(bits_.begin() + static_cast<std::ptrdiff_t>(n), bits_.end());
    return r;
}

Word Word::lcp(const Word& a, const Word& b) {
    std::size_t n = std::min(a.size(), b.size());
    std::size_t i = 0;
    while (i < n && a.bits_[i] == b.bits_[i]) ++i;
    return a.prefix(i);
}

std::string Word::str() const {
    std::string s;
    s.reserve(size());
    for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
    return s;
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
    if (w.empty()) return os << "ε";
    return os << w.str();
}

std::vector<Word> all_words(std::size_t min_len, std::size_t max_len) {
    std::vector<Word> out;
    for (std::size_t len = min_len; len <= max_len; ++len) {
        Word w;
        for (std::size_t i = 0; i < len; ++i) w.push_back(0);
        while (true) {
            out.push_back(w);
            // increment as a binary counter; stop after 1^len
            std::size_t i = len;
            while (i > 0 && w[i - 1] == 1) --i;
            if (i == 0) break;
            Word next = w.prefix(i - 1);
            next.push_back(1);
            while (next.size() < len) next.push_back(0);
            w = std::move(next);
        }
    }
    return out;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto b : w.bits()) {
        h ^= b;
        h *= 1099511628211ull;
    }
    h ^= w.size() + 0x9e3779b97f4a7c15ull;
    return h;
}

} // namespace rational
