#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cowordism/multiword.hpp"
#include "cowordism/words.hpp"

namespace cow {

enum class Tag : uint8_t { Left = 0, Right = 1 };

// An ordered list of tagged ports; the order is significant (it fixes tensor
// positions). The empty boundary is the monoidal unit.
struct Boundary {
    std::vector<Tag> tags;

    size_t size() const { return tags.size(); }
    int lefts() const;
    int rights() const;
    bool operator==(const Boundary&) const = default;
    auto operator<=>(const Boundary&) const = default;
};

Boundary dual(const Boundary& b);                    // flips every tag in place
Boundary tensor(const Boundary& a, const Boundary& b);
Boundary tensor_all(const std::vector<Boundary>& bs);
// Canonical layout for declared port counts: L/R pairs interleaved, then the
// excess tags of the larger side.
Boundary boundary_from_counts(int lefts, int rights);

// Reference to one port of a cowordism: on its source or target boundary.
struct Port {
    enum class Side : uint8_t { Source = 0, Target = 1 };
    Side side = Side::Source;
    int32_t index = 0;

    static Port src(int32_t i) { return {Side::Source, i}; }
    static Port tgt(int32_t i) { return {Side::Target, i}; }
    bool operator==(const Port&) const = default;
    auto operator<=>(const Port&) const = default;
};

struct CwEdge {
    Port from;
    Port to;
    Word label;

    bool operator==(const CwEdge&) const = default;
    auto operator<=>(const CwEdge&) const = default;
};

// A morphism X -> Y: a multiword whose boundary vertices are identified with
// the ports of X and Y. Stored in canonical form: the edges are a perfect
// matching from (target-Right + source-Left) ports to (target-Left +
// source-Right) ports, sorted by origin port; cyclic words are sorted.
// Equality is literal equality of this form.
class Cowordism {
public:
    Cowordism() = default;  // empty morphism 1 -> 1
    Cowordism(Boundary source, Boundary target, std::vector<CwEdge> edges,
              std::vector<CyclicWord> cycles = {});

    const Boundary& source() const { return src_; }
    const Boundary& target() const { return tgt_; }
    const std::vector<CwEdge>& edges() const { return edges_; }
    const std::vector<CyclicWord>& cycles() const { return cycles_; }
    bool regular() const { return cycles_.empty(); }

    bool operator==(const Cowordism&) const = default;
    auto operator<=>(const Cowordism&) const = default;

private:
    Boundary src_;
    Boundary tgt_;
    std::vector<CwEdge> edges_;
    std::vector<CyclicWord> cycles_;
};

// Composition by gluing at the shared boundary: for f: X->Y and g: Y->Z this
// is "f then g" (diagrammatic order).
Cowordism compose(const Cowordism& f, const Cowordism& g);
Cowordism identity(const Boundary& x);
Cowordism tensor(const Cowordism& f, const Cowordism& g);
Cowordism tensor_all(const std::vector<Cowordism>& fs);
// The braiding X (x) Y -> Y (x) X made of empty-labeled wires.
Cowordism symmetry(const Boundary& x, const Boundary& y);
// Wiring that reorders tensor blocks: source blocks[0..n)*, target
// blocks[perm[0]], ..., blocks[perm[n-1]] (equals the evident composite of
// adjacent symmetries).
Cowordism permute(const std::vector<Boundary>& blocks, const std::vector<int>& perm);
Cowordism dual(const Cowordism& f);  // Y* -> X*, same underlying multiword
// Name of f: X -> Y, a closed morphism 1 -> X* (x) Y (pure port re-indexing).
Cowordism name_of(const Cowordism& f);
// Inverse of name_of: reads a closed morphism 1 -> X* (x) Y back as X -> Y.
// x must be the boundary X (the target must start with its dual).
Cowordism unname(const Cowordism& f, const Boundary& x);
Cowordism counit(const Boundary& a);      // A (x) A* -> 1, empty-labeled caps
Cowordism evaluation(const Boundary& a, const Boundary& b);  // counit (x) id
// apply(sigma: 1 -> A* (x) B, tau: 1 -> A) = evaluation o (tau (x) sigma).
Cowordism apply(const Cowordism& sigma, const Cowordism& tau);
// Partial pairing over U: tau: 1 -> A (x) U, sigma: 1 -> U* (x) B |-> 1 -> A (x) B.
Cowordism partial_pair(const Cowordism& tau, const Cowordism& sigma, const Boundary& u);
// Erase all letters; cycles become empty cyclic words.
Cowordism pattern(const Cowordism& f);

// The single-edge closed morphism 1 -> (L,R) carrying a word.
Cowordism word_diagram(const Word& w);

std::map<Symbol, int> letters(const Cowordism& f);

// The underlying multiword together with the vertex ids assigned to ports
// (source ports first, then target ports, in boundary order).
Multiword underlying_multiword(const Cowordism& f);

std::string describe(const Boundary& b);  // e.g. "LRLR" (debugging aid)

// DOT rendering: one circle node per port (source ports s0..., target ports
// t0..., in boundary order) annotated with its L/R tag, one arrow per edge
// labeled with its quoted word, and each cyclic word as a free-standing loop.
std::string to_dot(const Cowordism& f, const Alphabet& a);

}  // namespace cow
