#include "tessella/word.hpp"

#include <cctype>

namespace tessella {

char to_char(Letter l) { return "PQR"[index(l)]; }

std::vector<Letter> free_reduce(const std::vector<Letter>& raw) {
    std::vector<Letter> out;
    out.reserve(raw.size());
    for (Letter l : raw) {
        if (!out.empty() && out.back() == l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word::Word(std::vector<Letter> letters) : letters_(free_reduce(letters)) {}
Word::Word(std::initializer_list<Letter> letters)
    : letters_(free_reduce(std::vector<Letter>(letters))) {}

Word Word::inverse() const {
    Word w;
    w.letters_.assign(letters_.rbegin(), letters_.rend());
    return w;
}

Word& Word::operator*=(const Word& rhs) {
    for (Letter l : rhs.letters_) {
        if (!letters_.empty() && letters_.back() == l)
            letters_.pop_back();
        else
            letters_.push_back(l);
    }
    return *this;
}

Word Word::operator*(const Word& rhs) const {
    Word w = *this;
    w *= rhs;
    return w;
}

Word Word::pow(int n) const {
    Word base = n < 0 ? inverse() : *this;
    Word out;
    for (int i = 0; i < (n < 0 ? -n : n); ++i) out *= base;
    return out;
}

std::string Word::str() const {
    if (letters_.empty()) return "1";
    std::string s;
    for (Letter l : letters_) s.push_back(to_char(l));
    return s;
}

namespace {

// word   := factor*
// factor := atom ('^' int)?
// atom   := 'P' | 'Q' | 'R' | '(' word ')'
struct Parser {
    std::string_view s;
    std::size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("word syntax: " + what + " at offset " + std::to_string(i) +
                         " in '" + std::string(s) + "'");
    }

    std::vector<Letter> word() {
        std::vector<Letter> out;
        for (;;) {
            skip();
            if (i >= s.size() || s[i] == ')') return out;
            auto f = factor();
            out.insert(out.end(), f.begin(), f.end());
        }
    }

    std::vector<Letter> factor() {
        std::vector<Letter> atom;
        char c = s[i];
        if (c == 'P' || c == 'Q' || c == 'R') {
            atom.push_back(static_cast<Letter>(c == 'P' ? 0 : c == 'Q' ? 1 : 2));
            ++i;
        } else if (c == '(') {
            ++i;
            atom = word();
            skip();
            if (i >= s.size() || s[i] != ')') fail("unbalanced '('");
            ++i;
        } else {
            fail(std::string("unexpected '") + c + "'");
        }
        skip();
        if (i < s.size() && s[i] == '^') {
            ++i;
            skip();
            std::size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (start == i) fail("expected exponent");
            int n = std::stoi(std::string(s.substr(start, i - start)));
            std::vector<Letter> rep;
            for (int k = 0; k < n; ++k) rep.insert(rep.end(), atom.begin(), atom.end());
            return rep;
        }
        return atom;
    }
};

}  // namespace

Word Word::parse(std::string_view text) {
    Parser p{text};
    p.skip();
    if (p.i < text.size() && (text.substr(p.i) == "1" || text.substr(p.i) == "e"))
        return Word{};
    auto letters = p.word();
    p.skip();
    if (p.i != text.size()) p.fail("unbalanced ')'");
    return Word(std::move(letters));
}

std::string join(const std::vector<Word>& ws, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < ws.size(); ++i) {
        if (i) out += sep;
        out += ws[i].str();
    }
    return out;
}

std::vector<Word> parse_word_list(std::string_view text) {
    std::vector<Word> out;
    std::size_t a = text.find_first_not_of(" <");
    std::size_t b = text.find_last_not_of(" >");
    if (a == std::string_view::npos || b < a) return out;
    text = text.substr(a, b - a + 1);
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i < text.size() && text[i] == '(') ++depth;
        if (i < text.size() && text[i] == ')') --depth;
        if (i == text.size() || (text[i] == ',' && depth == 0)) {
            out.push_back(Word::parse(text.substr(start, i - start)));
            start = i + 1;
        }
    }
    return out;
}

}  // namespace tessella
