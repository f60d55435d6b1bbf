#pragma once

#include <map>
#include <string>
#include <vector>

#include "cowordism/proof.hpp"

namespace cow {

// One slot of a semantic sequent. `tag` groups slots that are interchangeable
// for the caller: slots holding the same formula AND the same tag may be
// permuted freely without changing what the caller ultimately computes (the
// caller promises to pair equal-tagged slots against equal closed values).
// Untagged slots (tag = kUntagged) and the distinguished goal slot
// (tag = kGoal) are never grouped with anything else.
struct SemItem {
    Formula formula;
    int tag = -1;

    static constexpr int kUntagged = -1;
    static constexpr int kGoal = -2;
};

// Enumerates the interpretations of all cut-free proofs of a sequent, with
// memoization on the sequent-as-multiset and with values deduplicated at
// every step. Two proofs whose interpretations agree are never distinguished,
// which keeps the search polynomial where plain proof enumeration explodes.
//
// Splits over a run of identical slots are enumerated by count only (the
// first k copies go left); this is exactly the quotient justified by the
// caller's equal-pairing promise above.
class ValueSearch {
public:
    explicit ValueSearch(AtomBoundaries atoms) : atoms_(std::move(atoms)) {}

    // Values 1 -> |items| of cut-free proofs of the given sequent, in the
    // given slot order. Results are sorted and duplicate-free.
    const std::vector<Cowordism>& values(const std::vector<SemItem>& items);

private:
    struct Slot {
        std::string repr;  // cached formula text, sort key
        Formula formula;
        int tag;
        bool operator<(const Slot& o) const {
            return repr != o.repr ? repr < o.repr : tag < o.tag;
        }
        bool same_group(const Slot& o) const { return repr == o.repr && tag == o.tag; }
    };

    const std::vector<Cowordism>& canonical_values(const std::vector<Slot>& sorted);
    std::vector<Cowordism> expand(const std::vector<Slot>& s);

    AtomBoundaries atoms_;
    std::map<std::string, std::vector<Cowordism>> memo_;
};

}  // namespace cow
