#pragma once

#include <utility>
#include <vector>

#include "cowordism/words.hpp"

namespace cow {

using VertexId = int32_t;

// Directed edge of the regular part, labeled by a word.
struct MwEdge {
    VertexId tail = 0;
    VertexId head = 0;
    Word label;

    bool operator==(const MwEdge&) const = default;
    auto operator<=>(const MwEdge&) const = default;
};

// A multiword: a perfect matching on an abstract vertex set (every vertex is
// an endpoint of exactly one edge), edges labeled by words, plus a multiset of
// cyclic words. Vertex ids are opaque and unique within one multiword; two
// multiwords are compared literally (renaming-insensitive comparison happens
// at the cowordism level, where ports fix a canonical order).
struct Multiword {
    std::vector<MwEdge> edges;       // sorted
    std::vector<CyclicWord> cycles;  // sorted

    void normalize();
    void validate() const;  // throws std::invalid_argument on broken matching

    std::vector<VertexId> heads() const;  // left boundary: vertices edges enter
    std::vector<VertexId> tails() const;  // right boundary: vertices edges leave

    bool operator==(const Multiword&) const = default;
};

// Disjoint union; vertex ids of b are shifted above a's to keep them fresh.
Multiword disjoint_union(const Multiword& a, const Multiword& b);

// Contract a head vertex x with a tail vertex y. Distinct edges t -u-> x and
// y -v-> z fuse into t -uv-> z (the incoming label read first); if x and y are
// the two ends of one edge y -w-> x, that edge closes into the cyclic word [w].
Multiword contract(const Multiword& m, VertexId x, VertexId y);

// Iterated contraction; the result does not depend on pair order.
Multiword contract_many(const Multiword& m, std::vector<std::pair<VertexId, VertexId>> pairs);

// Disjoint union followed by contraction of the given (vertex of a, vertex of b)
// pairs; each pair must be head/tail or tail/head across the two parts.
Multiword glue(const Multiword& a, const Multiword& b,
               const std::vector<std::pair<VertexId, VertexId>>& pairs);

}  // namespace cow
