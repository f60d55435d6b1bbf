#include "cowordism/multiword.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cow {

void Multiword::normalize() {
    std::sort(edges.begin(), edges.end());
    std::sort(cycles.begin(), cycles.end());
}

void Multiword::validate() const {
    std::set<VertexId> seen;
    for (const auto& e : edges) {
        if (e.tail == e.head) throw std::invalid_argument("multiword: self-loop edge");
        if (!seen.insert(e.tail).second)
            throw std::invalid_argument("multiword: vertex adjacent to two edges");
        if (!seen.insert(e.head).second)
            throw std::invalid_argument("multiword: vertex adjacent to two edges");
    }
}

std::vector<VertexId> Multiword::heads() const {
    std::vector<VertexId> v;
    v.reserve(edges.size());
    for (const auto& e : edges) v.push_back(e.head);
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<VertexId> Multiword::tails() const {
    std::vector<VertexId> v;
    v.reserve(edges.size());
    for (const auto& e : edges) v.push_back(e.tail);
    std::sort(v.begin(), v.end());
    return v;
}

static VertexId shift_for(const Multiword& a, const Multiword& b) {
    VertexId a_max = -1;
    for (const auto& e : a.edges) a_max = std::max({a_max, e.tail, e.head});
    VertexId b_min = 0;
    bool first = true;
    for (const auto& e : b.edges) {
        VertexId m = std::min(e.tail, e.head);
        b_min = first ? m : std::min(b_min, m);
        first = false;
    }
    return a_max + 1 - b_min;
}

Multiword disjoint_union(const Multiword& a, const Multiword& b) {
    VertexId d = shift_for(a, b);
    Multiword m = a;
    for (auto e : b.edges) {
        e.tail += d;
        e.head += d;
        m.edges.push_back(std::move(e));
    }
    m.cycles.insert(m.cycles.end(), b.cycles.begin(), b.cycles.end());
    m.normalize();
    m.validate();
    return m;
}

Multiword contract(const Multiword& m, VertexId x, VertexId y) {
    size_t into = m.edges.size(), out = m.edges.size();
    for (size_t i = 0; i < m.edges.size(); ++i) {
        if (m.edges[i].head == x) into = i;
        if (m.edges[i].tail == y) out = i;
    }
    if (into == m.edges.size())
        throw std::invalid_argument("contract: x is not a head vertex");
    if (out == m.edges.size())
        throw std::invalid_argument("contract: y is not a tail vertex");

    Multiword r;
    r.cycles = m.cycles;
    if (into == out) {
        // single edge y -w-> x closes into a cycle
        for (size_t i = 0; i < m.edges.size(); ++i)
            if (i != into) r.edges.push_back(m.edges[i]);
        r.cycles.push_back(CyclicWord::of(m.edges[into].label));
    } else {
        for (size_t i = 0; i < m.edges.size(); ++i)
            if (i != into && i != out) r.edges.push_back(m.edges[i]);
        r.edges.push_back(MwEdge{m.edges[into].tail, m.edges[out].head,
                                 concat(m.edges[into].label, m.edges[out].label)});
    }
    r.normalize();
    return r;
}

Multiword contract_many(const Multiword& m, std::vector<std::pair<VertexId, VertexId>> pairs) {
    Multiword cur = m;
    for (const auto& [x, y] : pairs) cur = contract(cur, x, y);
    return cur;
}

Multiword glue(const Multiword& a, const Multiword& b,
               const std::vector<std::pair<VertexId, VertexId>>& pairs) {
    VertexId d = shift_for(a, b);
    Multiword u = disjoint_union(a, b);
    std::set<VertexId> heads;
    for (const auto& e : u.edges) heads.insert(e.head);
    std::vector<std::pair<VertexId, VertexId>> ps;
    for (auto [va, vb] : pairs) {
        VertexId w = vb + d;
        if (heads.count(va))
            ps.emplace_back(va, w);
        else if (heads.count(w))
            ps.emplace_back(w, va);
        else
            throw std::invalid_argument("glue: neither vertex of a pair is a head");
    }
    return contract_many(u, ps);
}

}  // namespace cow
