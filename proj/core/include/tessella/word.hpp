#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tessella {

// The three mirror generators. Each is an involution.
enum class Letter : std::uint8_t { P = 0, Q = 1, R = 2 };

constexpr int index(Letter l) { return static_cast<int>(l); }
char to_char(Letter l);

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Words are kept freely reduced: no two adjacent letters agree.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters);
    Word(std::initializer_list<Letter> letters);

    static Word parse(std::string_view text);

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }

    Word inverse() const;
    Word operator*(const Word& rhs) const;
    Word& operator*=(const Word& rhs);
    Word pow(int n) const;

    std::string str() const;

    auto operator<=>(const Word&) const = default;
    bool operator==(const Word&) const = default;

private:
    std::vector<Letter> letters_;
};

std::vector<Letter> free_reduce(const std::vector<Letter>& raw);
inline Word free_reduce(const Word& w) { return w; }

// Word lists are printed as "<A,B,C>" in the CLI and serializations.
std::string join(const std::vector<Word>& ws, std::string_view sep = ",");
std::vector<Word> parse_word_list(std::string_view text);

}  // namespace tessella
