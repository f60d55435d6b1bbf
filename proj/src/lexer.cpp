#include "cowordism/lexer.hpp"

#include <array>
#include <cctype>

namespace cow {

namespace {

bool ident_char(unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '\'' || c >= 0x80;
}

}  // namespace

Lexer::Lexer(std::string text, std::string filename)
    : text_(std::move(text)), filename_(std::move(filename)) {}

const Token& Lexer::peek(size_t ahead) {
    while (lookahead_.size() <= ahead) lookahead_.push_back(lex());
    return lookahead_[ahead];
}

Token Lexer::next() {
    peek();
    Token t = lookahead_.front();
    lookahead_.erase(lookahead_.begin());
    return t;
}

bool Lexer::at_end() { return peek().kind == Token::Kind::End; }

int Lexer::line() { return peek().line; }

Token Lexer::expect_ident(const std::string& what) {
    Token t = next();
    if (t.kind != Token::Kind::Ident)
        fail("expected " + what + ", got '" + (t.kind == Token::Kind::End ? "<eof>" : t.text) + "'",
             t.line);
    return t;
}

void Lexer::expect_symbol(const std::string& s) {
    Token t = next();
    if (t.kind != Token::Kind::Symbol || t.text != s)
        fail("expected '" + s + "', got '" + (t.kind == Token::Kind::End ? "<eof>" : t.text) + "'",
             t.line);
}

bool Lexer::accept_symbol(const std::string& s) {
    const Token& t = peek();
    if (t.kind == Token::Kind::Symbol && t.text == s) {
        next();
        return true;
    }
    return false;
}

bool Lexer::accept_ident(const std::string& word) {
    const Token& t = peek();
    if (t.kind == Token::Kind::Ident && t.text == word) {
        next();
        return true;
    }
    return false;
}

Token Lexer::expect_string(const std::string& what) {
    Token t = next();
    if (t.kind != Token::Kind::String)
        fail("expected " + what + " in double quotes", t.line);
    return t;
}

std::vector<std::string> Lexer::rest_of_line_words() {
    if (!lookahead_.empty())
        throw std::logic_error("rest_of_line_words called with pending lookahead");
    std::vector<std::string> out;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
    };
    while (pos_ < text_.size()) {
        char c = text_[pos_];
        if (c == '\n' || c == '#') break;
        if (c == ' ' || c == '\t' || c == '\r') {
            flush();
        } else {
            cur += c;
        }
        ++pos_;
    }
    flush();
    return out;
}

void Lexer::fail(const std::string& msg, int at_line) const {
    std::string where = filename_.empty() ? "input" : filename_;
    where += ":" + std::to_string(at_line < 0 ? line_ : at_line);
    throw ParseError(where + ": " + msg);
}

Token Lexer::lex() {
    // skip whitespace and comments
    while (pos_ < text_.size()) {
        char c = text_[pos_];
        if (c == '\n') {
            ++line_;
            ++pos_;
        } else if (c == ' ' || c == '\t' || c == '\r') {
            ++pos_;
        } else if (c == '#') {
            while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
        } else {
            break;
        }
    }
    if (pos_ >= text_.size()) return Token{Token::Kind::End, "", line_};

    int at = line_;
    char c = text_[pos_];
    if (c == '"') {
        ++pos_;
        std::string s;
        while (pos_ < text_.size() && text_[pos_] != '"') {
            if (text_[pos_] == '\n') fail("unterminated string", at);
            s += text_[pos_++];
        }
        if (pos_ >= text_.size()) fail("unterminated string", at);
        ++pos_;  // closing quote
        return Token{Token::Kind::String, std::move(s), at};
    }
    if (ident_char(static_cast<unsigned char>(c))) {
        std::string s;
        while (pos_ < text_.size() && ident_char(static_cast<unsigned char>(text_[pos_])))
            s += text_[pos_++];
        return Token{Token::Kind::Ident, std::move(s), at};
    }
    // multi-character symbols first
    static const std::array<const char*, 3> multi = {"-o", ":-", "->"};
    for (const char* m : multi) {
        size_t len = std::char_traits<char>::length(m);
        if (text_.compare(pos_, len, m) == 0) {
            pos_ += len;
            return Token{Token::Kind::Symbol, m, at};
        }
    }
    ++pos_;
    return Token{Token::Kind::Symbol, std::string(1, c), at};
}

}  // namespace cow
