#include "cowordism/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace cow {

Alphabet::Alphabet(const std::vector<std::string>& tokens) {
    for (const auto& t : tokens) add(t);
}

Symbol Alphabet::add(const std::string& token) {
    if (token.empty()) throw std::invalid_argument("alphabet token must be nonempty");
    auto it = index_.find(token);
    if (it != index_.end()) return it->second;
    Symbol s = static_cast<Symbol>(tokens_.size());
    tokens_.push_back(token);
    index_.emplace(token, s);
    return s;
}

bool Alphabet::contains(const std::string& token) const {
    return index_.count(token) != 0;
}

Symbol Alphabet::id(const std::string& token) const {
    auto it = index_.find(token);
    if (it == index_.end()) throw std::out_of_range("unknown letter: " + token);
    return it->second;
}

const std::string& Alphabet::token(Symbol s) const {
    if (s < 0 || static_cast<size_t>(s) >= tokens_.size())
        throw std::out_of_range("symbol id out of range");
    return tokens_[static_cast<size_t>(s)];
}

static bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

Word Alphabet::parse_word(const std::string& text) const {
    Word w;
    size_t i = 0;
    while (i < text.size()) {
        if (is_space(text[i])) { ++i; continue; }
        // longest token matching at position i
        size_t best = 0;
        Symbol sym = -1;
        for (size_t t = 0; t < tokens_.size(); ++t) {
            const std::string& tok = tokens_[t];
            if (tok.size() > best && text.compare(i, tok.size(), tok) == 0) {
                best = tok.size();
                sym = static_cast<Symbol>(t);
            }
        }
        if (sym < 0)
            throw std::runtime_error("cannot tokenize word at byte " + std::to_string(i) +
                                     " of \"" + text + "\"");
        w.push_back(sym);
        i += best;
    }
    return w;
}

std::string Alphabet::format_word(const Word& w) const {
    bool compact = true;
    for (const auto& t : tokens_)
        if (utf8_length(t) != 1) { compact = false; break; }
    std::string out;
    for (size_t k = 0; k < w.size(); ++k) {
        if (k && !compact) out += ' ';
        out += token(w[k]);
    }
    return out;
}

CyclicWord CyclicWord::of(const Word& w) {
    CyclicWord c{w};
    const size_t n = w.size();
    for (size_t r = 1; r < n; ++r) {
        Word rot;
        rot.reserve(n);
        rot.insert(rot.end(), w.begin() + static_cast<long>(r), w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(r));
        if (rot < c.rep) c.rep = std::move(rot);
    }
    return c;
}

Word concat(const Word& a, const Word& b) {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

std::map<Symbol, int> letter_multiset(const Word& w) {
    std::map<Symbol, int> m;
    for (Symbol s : w) ++m[s];
    return m;
}

size_t utf8_length(const std::string& s) {
    size_t n = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++n;  // count non-continuation bytes
    return n;
}

}  // namespace cow
