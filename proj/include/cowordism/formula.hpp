#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cowordism/cowordism.hpp"
#include "cowordism/lexer.hpp"

namespace cow {

// Multiplicative formulas over named atoms, kept in negation normal form:
// negation lives on literals only and is pushed inward on construction.
class Formula {
public:
    enum class Kind { Lit, NegLit, Tensor, Par };

    Formula() : Formula(lit("")) {}
    static Formula lit(std::string atom);
    static Formula neglit(std::string atom);
    static Formula tensor(Formula a, Formula b);
    static Formula par(Formula a, Formula b);

    Kind kind() const { return n_->kind; }
    bool is_literal() const { return kind() == Kind::Lit || kind() == Kind::NegLit; }
    const std::string& atom() const;  // literals only
    Formula left() const;             // binary only
    Formula right() const;

    bool operator==(const Formula& o) const { return repr_equal(o); }
    bool operator!=(const Formula& o) const { return !repr_equal(o); }
    bool operator<(const Formula& o) const;

private:
    struct Node {
        Kind kind;
        std::string atom;
        std::shared_ptr<const Node> l, r;
    };
    explicit Formula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
    bool repr_equal(const Formula& o) const;

    std::shared_ptr<const Node> n_;
};

Formula neg(const Formula& f);                         // De Morgan dual
Formula loli(const Formula& a, const Formula& b);      // A -o B = A^ par B
std::string repr(const Formula& f);                    // fully parenthesized
int literal_count(const Formula& f);
int tensor_count(const Formula& f);

// Flattened literal occurrences, left to right: (atom, is_positive).
std::vector<std::pair<std::string, bool>> literals_of(const Formula& f);

// Boundaries of the atoms give the boundary of any formula: a literal gets the
// atom's boundary, a negated literal its dual, and both connectives
// concatenate.
using AtomBoundaries = std::map<std::string, Boundary>;
Boundary formula_boundary(const Formula& f, const AtomBoundaries& atoms);

using Sequent = std::vector<Formula>;
std::string repr(const Sequent& s);  // comma-separated
Boundary sequent_boundary(const Sequent& s, const AtomBoundaries& atoms);

// Formula syntax: atom, F^, (F), A * B, A @ B (equal precedence, left
// associative), A -o B (weakest, right associative, sugar for A^ @ B).
Formula parse_formula(Lexer& lx);
Formula parse_formula(const std::string& text);

}  // namespace cow
