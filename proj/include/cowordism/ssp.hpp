#pragma once

#include <map>
#include <string>
#include <vector>

#include "cowordism/llg.hpp"

namespace cow {

// The nine generating cowordisms of the zero-sum-list system, over three
// atomic boundaries P, H, S (one Left and one Right port each):
//   cons    : S (x) S -> S   concatenates two lists
//   open    : H -> S         turns a balanced slot into a list
//   push    : H (x) H -> H (x) H   prepends "+" to one slot, "-" to another
//   close   : 1 -> H          a fresh slot holding just the bullet terminator
//   open_P  : P (x) S -> S    prepends a free slot to a list
//   close_P : 1 -> P          a fresh free slot
//   push_plus, push_minus : P -> P   prepend a sign to a free slot
//   open_P_after : S (x) P -> S   appends a free slot to a list
// Balanced slots receive signs only in +/- pairs, so the numerals they carry
// sum to zero across the word; free slots take anything. Without the
// appending opener every derivable list would end in a balanced slot and
// lists whose zero-sum witness excludes the final entry would be lost.
std::map<std::string, Cowordism> builtin_cowordisms();

// The grammar over {+, -, •} whose lexicon is the nine cowordisms above,
// named, with start atom S. Its language is exactly the lists of numerals
// containing a nonempty zero-sum sub-list of balanced slots.
Llg ssp_grammar();

// Brute force over all nonempty subsequences: does any sum to zero?
bool ssp_oracle(const std::vector<long long>& s);

// The canonical word of an integer sequence: each entry as a run of its sign
// (empty for zero) followed by a bullet terminator, e.g. (2,-1) -> "++•-•".
Word irreducible_list(const std::vector<long long>& s);

// A sufficient axiom budget for recognizing w in ssp_grammar(): every slot
// needs at most three axioms of plumbing (close/open/merge) and every sign
// one push.
int ssp_axiom_budget(const Word& w);

}  // namespace cow
