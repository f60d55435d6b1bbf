#pragma once

#include <set>

#include "cowordism/llg.hpp"

namespace cow {

// ---------------------------------------------------------------------------
// Ordinary multiple context-free grammars (string tuples and productions).
// ---------------------------------------------------------------------------

// One token inside a production component: either a terminal letter or a
// variable standing for argument `arg` of premise `premise`.
struct McfgItem {
    int premise = -1;   // -1: terminal, otherwise index into the rule's rhs
    int arg = 0;        // argument position within that premise
    Symbol letter = 0;  // the terminal (only when premise == -1)
    bool is_var() const { return premise >= 0; }
    auto operator<=>(const McfgItem&) const = default;
};

// lhs(components...) :- rhs[0](args...), rhs[1](args...), ...
// components.size() is the arity of lhs; every (premise, arg) pair must be
// used exactly once across all components (the non-erasing condition).
struct McfgRule {
    std::string lhs;
    std::vector<std::string> rhs;
    std::vector<std::vector<McfgItem>> components;
};

struct Mcfg {
    Alphabet alphabet;  // terminals
    std::vector<std::string> nt_order;
    std::map<std::string, int> arity;
    std::string start;  // must be unary
    std::vector<McfgRule> rules;

    void validate() const;  // throws std::invalid_argument
};

Mcfg parse_mcfg(const std::string& text, const std::string& filename = "");
Mcfg load_mcfg(const std::string& path);
std::string write_mcfg(const Mcfg& g);

struct PredicateFormula {
    std::string nonterminal;
    std::vector<Word> words;
    auto operator<=>(const PredicateFormula&) const = default;
};

// Clause (ii) of derivability: plug argument tuples into a rule.
PredicateFormula substitute(const McfgRule& r, const std::vector<PredicateFormula>& args);

// The brute-force oracle: every derivable predicate formula whose words total
// at most max_total_len letters, by naive fixpoint over strings. Because every
// variable is used exactly once, substitution never shrinks the total length,
// so the cutoff is exact: this is the full derivable set, filtered.
// Deliberately independent of the cowordism machinery; every other path in
// the library is tested against it.
std::set<PredicateFormula> derive(const Mcfg& g, int max_total_len);

// Words w with S(w) derivable and |w| <= max_len, sorted by length then
// lexicographically.
std::vector<Word> mcfg_language(const Mcfg& g, int max_len);

// ---------------------------------------------------------------------------
// The cowordism reading of productions.
// ---------------------------------------------------------------------------

// Ports of an arity-k nonterminal: l1 r1 l2 r2 ... lk rk.
Boundary boundary_of(int arity);

// The wiring of a production, |rhs[0]| x ... x |rhs[n-1]| -> |lhs|: component
// m becomes a chain from the lhs right port m through the argument ports of
// its variables (entering at r, leaving at l) to the lhs left port m, with
// the terminal blocks as edge labels.
Cowordism graph_of(const Mcfg& g, const McfgRule& r);

// The closed diagram of a predicate formula: edge r_m -> l_m labeled words[m].
Cowordism represent(const PredicateFormula& f);

// Encode as a grammar over atoms = nonterminals: each rule becomes an axiom
// named p1, p2, ... with the tensor-free type (B1^ @ ... @ Bn^) @ A and value
// name(graph_of(rule)).
Llg mcfg_to_llg(const Mcfg& g);

// ---------------------------------------------------------------------------
// Extended grammars: productions are arbitrary cowordisms between boundaries.
// ---------------------------------------------------------------------------

struct ExtRule {
    std::string lhs;
    std::vector<std::string> rhs;
    Cowordism value;  // |rhs[0]| x ... -> |lhs|
};

struct ExtMcfg {
    Alphabet alphabet;
    std::vector<std::string> type_order;
    std::map<std::string, Boundary> types;
    std::string start;  // boundary (L, R)
    std::vector<ExtRule> rules;

    void validate() const;
};

// An ordinary grammar is an extended one whose rule values are the graphs of
// its productions.
ExtMcfg mcfg_as_extended(const Mcfg& g);

// All derivable regular values per type carrying at most max_len letters, by
// fixpoint. Exact at the bound: composition never erases letters, and values
// with cyclic components are dropped since a cycle can never be removed by
// further composition and the language consists of regular values only.
std::map<std::string, std::set<Cowordism>> extended_generate(const ExtMcfg& g, int max_len);

// Labels of single-edge values at the start type, sorted (length, lex).
std::vector<Word> extended_language(const ExtMcfg& g, int max_len);

// Patterns (letter-erased shapes) of derivable regular values, as an exact
// least fixpoint; every reported pattern is witnessed by a derivable value.
// A type with an empty set derives no regular value at all.
std::map<std::string, std::set<Cowordism>> possible_patterns(const ExtMcfg& g);

// Split every type A into types (A, pi), one per possible pattern, so that
// each resulting type has at most one possible pattern ("simple"). Language
// is preserved. When the start type has no pattern the language is empty and
// an empty grammar is returned.
ExtMcfg disambiguate(const ExtMcfg& g);

// Read a simple extended grammar back as an ordinary MCFG: each type with
// pattern pi becomes a nonterminal of arity = number of edges of pi, and each
// rule's string tuple is read off by walking its wiring with the argument
// pattern edges replaced by variables. Rules whose composite wiring closes a
// cycle are dropped. Nonterminals are renamed T0 (the start), T1, ... in
// discovery order; only nonterminals reachable from the start are kept.
// Throws if the input is not simple.
Mcfg simple_to_mcfg(const ExtMcfg& g);

// The inverse encoding for grammars with tensor-free lexicon types: types are
// the subformulas of the lexicon and their duals, nullary rules are the
// lexicon entries, and binary rules are the interpretations of the standard
// proofs |- A, A^ * B^, B (one per par subformula A @ B, in all six argument
// arrangements). Throws std::invalid_argument naming the first offending
// entry when some lexicon type contains a tensor.
ExtMcfg tensorfree_llg_to_extended(const Llg& g);

// Full pipeline: simple_to_mcfg(disambiguate(tensorfree_llg_to_extended(g))).
Mcfg llg_to_mcfg(const Llg& g);

}  // namespace cow
