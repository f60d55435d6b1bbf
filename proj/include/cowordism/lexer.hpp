#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cow {

// Parse/validation failure with a "file:line: message" what() string.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

struct Token {
    enum class Kind { Ident, Symbol, String, End };
    Kind kind = Kind::End;
    std::string text;  // for String: the unquoted contents
    int line = 1;
};

// Hand-rolled tokenizer shared by every text format. Identifiers are runs of
// alphanumerics, '_', '\'' and non-ASCII bytes; '#' starts a to-end-of-line
// comment; strings are double-quoted, no escapes.
class Lexer {
public:
    explicit Lexer(std::string text, std::string filename = "");

    const Token& peek(size_t ahead = 0);
    Token next();
    bool at_end();
    int line();  // current line for error reporting

    Token expect_ident(const std::string& what);
    void expect_symbol(const std::string& s);
    bool accept_symbol(const std::string& s);
    bool accept_ident(const std::string& word);  // exact keyword match
    Token expect_string(const std::string& what);

    // Raw whitespace-separated chunks until end of line (for alphabet lines);
    // '#' still starts a comment.
    std::vector<std::string> rest_of_line_words();

    [[noreturn]] void fail(const std::string& msg, int at_line = -1) const;

private:
    Token lex();

    std::string text_;
    std::string filename_;
    size_t pos_ = 0;
    int line_ = 1;
    std::vector<Token> lookahead_;
};

}  // namespace cow
