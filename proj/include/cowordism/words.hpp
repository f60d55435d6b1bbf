#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cow {

// A letter is an index into an Alphabet; a word is a sequence of letters.
// Lexicographic order on words follows letter indices, i.e. declaration order.
using Symbol = int32_t;
using Word = std::vector<Symbol>;

// Finite set of letter tokens. Tokens may be multi-byte (UTF-8 passes through
// unharmed) or multi-character (e.g. "John"); ids are dense and assigned in
// declaration order.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(const std::vector<std::string>& tokens);

    Symbol add(const std::string& token);  // idempotent
    bool contains(const std::string& token) const;
    Symbol id(const std::string& token) const;  // throws std::out_of_range
    const std::string& token(Symbol s) const;
    size_t size() const { return tokens_.size(); }
    const std::vector<std::string>& tokens() const { return tokens_; }
    bool operator==(const Alphabet& o) const { return tokens_ == o.tokens_; }

    // Greedy longest-match tokenization; ASCII whitespace separates letters but
    // is never required. Throws std::runtime_error on an unmatchable position.
    Word parse_word(const std::string& text) const;
    // Inverse-ish of parse_word: letters joined without separator when every
    // token is a single code point, with single spaces otherwise.
    std::string format_word(const Word& w) const;

private:
    std::vector<std::string> tokens_;
    std::map<std::string, Symbol> index_;
};

// A word up to rotation, stored as its lexicographically least rotation.
struct CyclicWord {
    Word rep;

    static CyclicWord of(const Word& w);
    bool operator==(const CyclicWord&) const = default;
    auto operator<=>(const CyclicWord&) const = default;
};

Word concat(const Word& a, const Word& b);
std::map<Symbol, int> letter_multiset(const Word& w);
size_t utf8_length(const std::string& s);

}  // namespace cow
