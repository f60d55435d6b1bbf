#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cowordism/value_search.hpp"
#include "cowordism/words.hpp"

namespace cow {

// One lexicon axiom: a named closed cowordism 1 -> |type|.
struct LexEntry {
    std::string name;
    Formula type;
    Cowordism value;
};

// A grammar: declared alphabet, atom boundaries, a start atom with boundary
// (L,R), and a finite lexicon. A word w is generated when some derivation --
// a multiset of lexicon entries together with a proof that their types entail
// the start atom -- has the single-edge diagram of w as its value.
struct Llg {
    Alphabet alphabet;
    std::vector<std::string> atom_order;  // declaration order, for writing
    AtomBoundaries atoms;
    std::string start;
    std::vector<LexEntry> lexicon;

    void validate() const;  // throws std::invalid_argument on inconsistencies
};

Llg parse_llg(const std::string& text, const std::string& filename = "");
Llg load_llg(const std::string& path);
std::string write_llg(const Llg& g);

// The value of one derivation: the interpretation of `pi`, which must prove
// |- T1^, ..., Tn^, start (the negated types in entry order), paired against
// the entry values. Used by tests and by hand-built derivations; the search
// below never materializes proofs.
Cowordism derivation_value(const Llg& g, const std::vector<size_t>& entries,
                           const Proof& pi);

struct Derivation {
    std::vector<std::string> entries;  // lexicon names, in declaration order
    Cowordism value;                   // closed, boundary |start|
};

struct GenerateOptions {
    int max_len = -1;                 // if >= 0, drop values carrying more letters
    const Word* exact_word = nullptr; // if set, entry letters must add up to exactly
                                      // this word's letters (recognition mode)
};

// Every distinct closed value of type `start` derivable from at most
// max_axioms lexicon entries (counted with multiplicity), sorted.
std::vector<Derivation> generate(const Llg& g, int max_axioms,
                                 const GenerateOptions& opts = {});

// The generated words: labels of the regular single-edge values, sorted by
// length then lexicographically (in alphabet order).
std::vector<Word> language(const Llg& g, int max_axioms, int max_len = -1);

// Recognition: a derivation whose value is exactly the diagram of w.
std::optional<Derivation> member(const Llg& g, const Word& w, int max_axioms);

}  // namespace cow
