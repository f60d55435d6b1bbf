#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "cowordism/multiword.hpp"

using namespace cow;

namespace {

Multiword mw(std::vector<MwEdge> es, std::vector<CyclicWord> cs = {}) {
    Multiword m;
    m.edges = std::move(es);
    m.cycles = std::move(cs);
    m.normalize();
    m.validate();
    return m;
}

}  // namespace

TEST_CASE("validate rejects broken matchings") {
    Multiword shared;  // vertex 1 is the head of two edges
    shared.edges = {MwEdge{0, 1, {}}, MwEdge{2, 1, {}}};
    CHECK_THROWS_AS(shared.validate(), std::invalid_argument);

    Multiword loop;  // a self-loop is not a matching
    loop.edges = {MwEdge{0, 0, {}}};
    CHECK_THROWS_AS(loop.validate(), std::invalid_argument);

    Multiword both;  // vertex used as head of one edge and tail of another
    both.edges = {MwEdge{0, 1, {}}, MwEdge{1, 2, {}}};
    CHECK_THROWS_AS(both.validate(), std::invalid_argument);

    CHECK_NOTHROW(mw({MwEdge{0, 1, {5}}, MwEdge{3, 2, {}}}));
}

TEST_CASE("heads and tails") {
    auto m = mw({MwEdge{0, 1, {}}, MwEdge{3, 2, {}}});
    CHECK(m.heads() == std::vector<VertexId>{1, 2});
    CHECK(m.tails() == std::vector<VertexId>{0, 3});
}

TEST_CASE("disjoint_union freshens ids") {
    auto a = mw({MwEdge{0, 1, {7}}});
    auto b = mw({MwEdge{0, 1, {9}}}, {CyclicWord::of({4})});
    auto u = disjoint_union(a, b);
    u.validate();
    CHECK(u.edges.size() == 2);
    CHECK(u.cycles.size() == 1);
    // 4 distinct endpoints after the shift
    std::vector<VertexId> vs;
    for (const auto& e : u.edges) {
        vs.push_back(e.tail);
        vs.push_back(e.head);
    }
    std::sort(vs.begin(), vs.end());
    CHECK(std::adjacent_find(vs.begin(), vs.end()) == vs.end());
    // labels survive untouched
    CHECK(std::any_of(u.edges.begin(), u.edges.end(),
                      [](const MwEdge& e) { return e.label == Word{7}; }));
    CHECK(std::any_of(u.edges.begin(), u.edges.end(),
                      [](const MwEdge& e) { return e.label == Word{9}; }));
}

TEST_CASE("contract fuses two edges, incoming label first") {
    // 0 -"u"-> 1   and   2 -"v"-> 3, contract head 1 with tail 2
    auto m = mw({MwEdge{0, 1, {10}}, MwEdge{2, 3, {11}}});
    auto c = contract(m, 1, 2);
    c.validate();
    REQUIRE(c.edges.size() == 1);
    CHECK(c.edges[0].tail == 0);
    CHECK(c.edges[0].head == 3);
    CHECK(c.edges[0].label == Word{10, 11});  // u then v
    CHECK(c.cycles.empty());
}

TEST_CASE("contract closes a single edge into a cyclic word") {
    auto m = mw({MwEdge{5, 9, {1, 2}}});
    auto c = contract(m, 9, 5);
    CHECK(c.edges.empty());
    REQUIRE(c.cycles.size() == 1);
    CHECK(c.cycles[0] == CyclicWord::of({1, 2}));
}

TEST_CASE("contract demands a head and a tail") {
    auto m = mw({MwEdge{0, 1, {}}, MwEdge{2, 3, {}}});
    CHECK_THROWS_AS(contract(m, 0, 2), std::invalid_argument);  // 0 is a tail
    CHECK_THROWS_AS(contract(m, 1, 3), std::invalid_argument);  // 3 is a head
}

TEST_CASE("contractions commute") {
    // chain: 0 -a-> 1, 2 -b-> 3, 4 -c-> 5; contract (1,2) and (3,4)
    auto m = mw({MwEdge{0, 1, {0}}, MwEdge{2, 3, {1}}, MwEdge{4, 5, {2}}});
    auto ab = contract(contract(m, 1, 2), 3, 4);
    auto ba = contract(contract(m, 3, 4), 1, 2);
    CHECK(ab == ba);
    CHECK(ab == contract_many(m, {{1, 2}, {3, 4}}));
    CHECK(ab == contract_many(m, {{3, 4}, {1, 2}}));
    REQUIRE(ab.edges.size() == 1);
    CHECK(ab.edges[0].label == Word{0, 1, 2});
}

TEST_CASE("contract_many closing a two-edge loop") {
    // 0 -x-> 1, 2 -y-> 3; contract (1,2) then (3,0): cyclic word "xy"
    auto m = mw({MwEdge{0, 1, {8}}, MwEdge{2, 3, {9}}});
    auto c = contract_many(m, {{1, 2}, {3, 0}});
    CHECK(c.edges.empty());
    REQUIRE(c.cycles.size() == 1);
    CHECK(c.cycles[0] == CyclicWord::of({8, 9}));
    // same loop, contractions in the other order
    CHECK(contract_many(m, {{3, 0}, {1, 2}}) == c);
}

TEST_CASE("glue matches heads to tails in either orientation") {
    auto a = mw({MwEdge{0, 1, {3}}});
    auto b = mw({MwEdge{0, 1, {4}}});
    // head of a (vertex 1) against tail of b (its vertex 0)
    auto g = glue(a, b, {{1, 0}});
    g.validate();
    REQUIRE(g.edges.size() == 1);
    CHECK(g.edges[0].label == Word{3, 4});
    // tail of a (vertex 0) against head of b (its vertex 1): b's word comes first
    auto h = glue(a, b, {{0, 1}});
    REQUIRE(h.edges.size() == 1);
    CHECK(h.edges[0].label == Word{4, 3});
    // head-to-head is rejected
    CHECK_THROWS_AS(glue(a, b, {{1, 1}}), std::invalid_argument);
}
