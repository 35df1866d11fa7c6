#include "rational/exprlang.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "rational/errors.hpp"
#include "rational/io.hpp"

namespace rational {

namespace {

class Parser {
public:
    Parser(std::string_view text, const MachineLoader& load)
        : text_(text), load_(load) {}

    Element parse() {
        Element e = expression();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return e;
    }

private:
    std::string_view text_;
    const MachineLoader& load_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at position " + std::to_string(pos_), 1,
                         static_cast<int>(pos_) + 1);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_]))))
            ++pos_;
        if (start == pos_) fail("expected an expression");
        return std::string(text_.substr(start, pos_ - start));
    }

    Word bits() {
        skip_ws();
        Word w;
        while (pos_ < text_.size() && (text_[pos_] == '0' || text_[pos_] == '1')) {
            w.push_back(text_[pos_] - '0');
            ++pos_;
        }
        return w; // possibly empty: ε is a valid word
    }

    std::uint64_t integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_) fail("expected an integer");
        return std::stoull(std::string(text_.substr(start, pos_ - start)));
    }

    std::string filename() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != ')') ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back())))
            name.pop_back();
        if (name.empty()) fail("expected a file name");
        return name;
    }

    Element expression() {
        std::string head = ident();
        if (head == "id") return identity();
        if (head == "x0") return x0();
        if (head == "swap") return swap_halves();
        if (head == "fp") {
            expect('(');
            std::uint64_t p = integer();
            expect(')');
            return fp(p);
        }
        if (head == "pex") {
            expect('(');
            ExchangeTable tbl;
            do {
                Word dom = bits();
                skip_ws();
                if (pos_ + 1 >= text_.size() || text_[pos_] != '-' || text_[pos_ + 1] != '>')
                    fail("expected '->'");
                pos_ += 2;
                Word ran = bits();
                tbl.rules.push_back({std::move(dom), std::move(ran)});
            } while (eat(','));
            expect(')');
            return prefix_exchange(std::move(tbl));
        }
        if (head == "pair" || head == "comp") {
            expect('(');
            Element a = expression();
            expect(',');
            Element b = expression();
            expect(')');
            return head == "pair" ? pair(a, b) : compose(a, b);
        }
        if (head == "fix" || head == "inv") {
            expect('(');
            Element a = expression();
            expect(')');
            return head == "fix" ? fix(a) : inverse(a);
        }
        if (head == "raw") {
            expect('(');
            std::string path = filename();
            expect(')');
            return raw(load_(path));
        }
        if (head == "glue") {
            expect('(');
            std::vector<std::pair<Word, Element>> pieces;
            do {
                Word alpha = bits();
                expect(':');
                pieces.emplace_back(std::move(alpha), expression());
            } while (eat(','));
            expect(')');
            return glue(pieces);
        }
        fail("unknown constructor '" + head + "'");
    }
};

Transducer load_from_disk(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open machine file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_machine(buf.str());
}

} // namespace

Element parse_element(std::string_view text, const MachineLoader& load_machine) {
    return Parser(text, load_machine).parse();
}

Element parse_element(std::string_view text) {
    return parse_element(text, load_from_disk);
}

} // namespace rational
