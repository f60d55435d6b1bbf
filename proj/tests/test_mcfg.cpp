#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cowordism/mcfg.hpp"

using namespace cow;

namespace {

Mcfg load(const char* name) { return load_mcfg(std::string(GRAMMARS_DIR "/") + name); }

Word w(const Alphabet& a, const std::string& s) { return a.parse_word(s); }

std::vector<Word> words_of(const Alphabet& a, const std::vector<std::string>& ss) {
    std::vector<Word> out;
    for (const auto& s : ss) out.push_back(a.parse_word(s));
    return out;
}

}  // namespace

TEST_CASE("parsing, writing and validation") {
    Mcfg g = load("anbn.mcfg");
    CHECK(g.start == "S");
    CHECK(g.arity.at("S") == 1);
    CHECK(g.arity.at("A") == 2);
    REQUIRE(g.rules.size() == 3);
    CHECK(g.rules[0].rhs == std::vector<std::string>{"A"});
    CHECK(g.rules[2].rhs.empty());
    CHECK(g.rules[2].components == std::vector<std::vector<McfgItem>>{{}, {}});

    std::string once = write_mcfg(g);
    CHECK(once == write_mcfg(parse_mcfg(once, "again.mcfg")));

    auto fails_with = [](const std::string& text, const std::string& needle) {
        try {
            parse_mcfg(text, "g.mcfg");
            FAIL_CHECK("expected a parse error containing '" << needle << "'");
        } catch (const ParseError& ex) {
            std::string msg = ex.what();
            CHECK(msg.substr(0, 7) == "g.mcfg:");
            if (msg.find(needle) == std::string::npos)
                FAIL_CHECK("error '" << msg << "' does not mention '" << needle << "'");
        }
    };
    fails_with("terminals a;\nstart S;\nS(x1) :- A(x1).\nA(a x1) :- A(x1, x2).\n", "arity");
    fails_with("terminals a;\nstart S;\nS(c) .\n", "neither a variable nor a terminal");
    fails_with("terminals a;\nstart S;\nS(x1) :- A(x1, x1).\n", "bound twice");
    fails_with("terminals a;\nstart S;\nS(a) :- A(x1).\n", "exactly once");
    fails_with("terminals a;\nstart S;\nS(x1 x1) :- A(x1).\n", "exactly once");
    fails_with("terminals a;\nstart S;\nS(eps a) .\n", "stand alone");
    fails_with("terminals a;\nstart S;\nS(a x1) :- S(a).\n", "variable");
    fails_with("terminals a;\nA(a, a) .\nstart A;\n", "unary");
    fails_with("terminals a;\nS(a) .\n", "no start");
}

TEST_CASE("derive oracle on a^n b^n") {
    Mcfg g = load("anbn.mcfg");
    auto derived = derive(g, 8);
    auto has = [&](const std::string& nt, const std::vector<std::string>& tuple) {
        return derived.count(PredicateFormula{nt, words_of(g.alphabet, tuple)}) > 0;
    };
    CHECK(has("A", {"", ""}));
    CHECK(has("A", {"a", "b"}));
    CHECK(has("A", {"a a a a", "b b b b"}));
    CHECK(!has("A", {"a a", "b"}));
    CHECK(has("S", {"a b"}));
    CHECK(has("S", {"a a b b"}));
    CHECK(!has("S", {"b a"}));

    CHECK(mcfg_language(g, 8) ==
          words_of(g.alphabet, {"", "a b", "a a b b", "a a a b b b", "a a a a b b b b"}));
    CHECK(mcfg_language(g, 3) == words_of(g.alphabet, {"", "a b"}));
}

TEST_CASE("derive oracle on the copy language") {
    Mcfg g = load("copy.mcfg");
    std::vector<Word> lang = mcfg_language(g, 12);
    CHECK(lang.size() == 127);  // all ww with |w| <= 6, including the empty word
    CHECK(std::count(lang.begin(), lang.end(), w(g.alphabet, "a b a a b a")) == 1);
    CHECK(std::count(lang.begin(), lang.end(), w(g.alphabet, "a b b a")) == 0);
}

TEST_CASE("production wirings and represented formulas") {
    Mcfg g = load("anbn.mcfg");

    // S(x1 x2) :- A(x1, x2): a chain through both argument coordinates
    Cowordism s = graph_of(g, g.rules[0]);
    Cowordism expect(boundary_of(2), boundary_of(1),
                     {CwEdge{Port::tgt(1), Port::src(1), {}},
                      CwEdge{Port::src(0), Port::src(3), {}},
                      CwEdge{Port::src(2), Port::tgt(0), {}}});
    CHECK(s == expect);

    // A(eps, eps): same diagram as the represented formula A("", "")
    CHECK(graph_of(g, g.rules[2]) ==
          represent(PredicateFormula{"A", {Word{}, Word{}}}));

    // represent: one labeled edge per coordinate
    PredicateFormula f{"A", words_of(g.alphabet, {"a a", "b"})};
    Cowordism rf = represent(f);
    CHECK(rf.target() == boundary_of(2));
    CHECK(rf.edges().size() == 2);
    CHECK(rf.edges()[0].label == w(g.alphabet, "a a"));
}

TEST_CASE("substitution lemma: composing graphs realizes substitution") {
    for (const char* name : {"anbn.mcfg", "copy.mcfg"}) {
        Mcfg g = load(name);
        auto derived = derive(g, 6);
        std::map<std::string, std::vector<PredicateFormula>> by_nt;
        for (const auto& f : derived) by_nt[f.nonterminal].push_back(f);
        int checked = 0;
        for (const McfgRule& r : g.rules) {
            // all argument tuples drawn from the derivable set
            std::vector<size_t> pick(r.rhs.size(), 0);
            while (true) {
                std::vector<PredicateFormula> args;
                bool ok = true;
                for (size_t i = 0; i < pick.size(); ++i) {
                    const auto& pool = by_nt[r.rhs[i]];
                    if (pick[i] >= pool.size()) {
                        ok = false;
                        break;
                    }
                    args.push_back(pool[pick[i]]);
                }
                if (ok) {
                    std::vector<Cowordism> reps;
                    for (const auto& a : args) reps.push_back(represent(a));
                    CHECK(compose(tensor_all(reps), graph_of(g, r)) ==
                          represent(substitute(r, args)));
                    ++checked;
                }
                size_t i = 0;
                for (; i < pick.size(); ++i) {
                    if (!by_nt[r.rhs[i]].empty() && ++pick[i] < by_nt[r.rhs[i]].size()) break;
                    pick[i] = 0;
                }
                if (i == pick.size()) break;
                if (pick.empty()) break;
            }
        }
        CHECK(checked >= 9);
    }
}

TEST_CASE("encoding into a grammar of typed cowordisms") {
    Mcfg g = load("anbn.mcfg");
    Llg llg = mcfg_to_llg(g);
    CHECK(llg.start == "S");
    CHECK(llg.atoms.at("A") == boundary_of(2));
    REQUIRE(llg.lexicon.size() == 3);
    CHECK(repr(llg.lexicon[0].type) == "(A^ @ S)");
    CHECK(repr(llg.lexicon[1].type) == "(A^ @ A)");
    CHECK(repr(llg.lexicon[2].type) == "A");

    // the encoded grammar is serializable and round-trips
    std::string text = write_llg(llg);
    CHECK(text == write_llg(parse_llg(text, "anbn.llg")));

    // language at <= 6 axioms == oracle language at length <= 8 (each grow
    // production carries two letters, so the bounds coincide exactly)
    CHECK(language(llg, 6) == mcfg_language(g, 8));

    Mcfg copy = load("copy.mcfg");
    CHECK(language(mcfg_to_llg(copy), 6) == mcfg_language(copy, 8));
}

TEST_CASE("extended grammars: generation agrees with the oracle") {
    Mcfg g = load("anbn.mcfg");
    ExtMcfg ext = mcfg_as_extended(g);
    CHECK(extended_language(ext, 8) == mcfg_language(g, 8));

    auto values = extended_generate(ext, 8);
    CHECK(values.at("A").count(represent(PredicateFormula{"A", words_of(g.alphabet, {"a a", "b b"})})));

    Mcfg copy = load("copy.mcfg");
    CHECK(extended_language(mcfg_as_extended(copy), 8) == mcfg_language(copy, 8));
}

TEST_CASE("possible patterns") {
    Mcfg g = load("anbn.mcfg");
    ExtMcfg ext = mcfg_as_extended(g);

    // an unproductive extra type derives nothing
    ext.type_order.push_back("U");
    ext.types.emplace("U", boundary_of(1));
    Cowordism loop(boundary_of(1), boundary_of(1),
                   {CwEdge{Port::tgt(1), Port::src(1), w(g.alphabet, "a")},
                    CwEdge{Port::src(0), Port::tgt(0), {}}});
    ext.rules.push_back(ExtRule{"U", {"U"}, loop});

    auto pats = possible_patterns(ext);
    CHECK(pats.at("U").empty());
    REQUIRE(pats.at("S").size() == 1);
    CHECK(*pats.at("S").begin() == pattern(represent(PredicateFormula{"S", {Word{}}})));
    REQUIRE(pats.at("A").size() == 1);
    CHECK(*pats.at("A").begin() ==
          pattern(represent(PredicateFormula{"A", {Word{}, Word{}}})));
}

TEST_CASE("disambiguation splits a two-pattern type and keeps the language") {
    Alphabet ab;
    Symbol a = ab.add("a"), b = ab.add("b");
    ExtMcfg g;
    g.alphabet = ab;
    g.start = "S";
    g.type_order = {"S", "B"};
    g.types.emplace("S", boundary_of(1));
    g.types.emplace("B", boundary_of(2));
    // two closed B-values with different shapes: parallel and crossing
    Cowordism straight(Boundary{}, boundary_of(2),
                       {CwEdge{Port::tgt(1), Port::tgt(0), {a}},
                        CwEdge{Port::tgt(3), Port::tgt(2), {b}}});
    Cowordism crossed(Boundary{}, boundary_of(2),
                      {CwEdge{Port::tgt(1), Port::tgt(2), {a}},
                       CwEdge{Port::tgt(3), Port::tgt(0), {b}}});
    // readers concatenating the two coordinates of each shape
    Cowordism read_straight(boundary_of(2), boundary_of(1),
                            {CwEdge{Port::tgt(1), Port::src(1), {}},
                             CwEdge{Port::src(0), Port::src(3), {}},
                             CwEdge{Port::src(2), Port::tgt(0), {}}});
    Cowordism read_crossed(boundary_of(2), boundary_of(1),
                           {CwEdge{Port::tgt(1), Port::src(1), {}},
                            CwEdge{Port::src(2), Port::src(3), {}},
                            CwEdge{Port::src(0), Port::tgt(0), {}}});
    g.rules.push_back(ExtRule{"B", {}, straight});
    g.rules.push_back(ExtRule{"B", {}, crossed});
    g.rules.push_back(ExtRule{"S", {"B"}, read_straight});
    g.rules.push_back(ExtRule{"S", {"B"}, read_crossed});

    CHECK(possible_patterns(g).at("B").size() == 2);
    CHECK(extended_language(g, 4) == std::vector<Word>{w(ab, "a b")});

    ExtMcfg simple = disambiguate(g);
    CHECK(possible_patterns(simple).at("B#0").size() <= 1);
    CHECK(simple.types.size() == 3);  // S#0, B#0, B#1
    CHECK(extended_language(simple, 4) == std::vector<Word>{w(ab, "a b")});

    Mcfg m = simple_to_mcfg(simple);
    CHECK(m.nt_order.size() == 3);
    CHECK(mcfg_language(m, 4) == std::vector<Word>{w(ab, "a b")});

    // the mismatched reader-value combinations close cycles and are dropped
    CHECK(m.rules.size() == 4);
}

TEST_CASE("simple extended grammars read back as ordinary ones") {
    Mcfg g = load("anbn.mcfg");
    Mcfg back = simple_to_mcfg(mcfg_as_extended(g));
    CHECK(back.start == "T0");
    CHECK(mcfg_language(back, 10) == mcfg_language(g, 10));
    std::string text = write_mcfg(back);
    CHECK(text == write_mcfg(parse_mcfg(text, "back.mcfg")));
}

TEST_CASE("tensor-free lexicons convert to extended grammars") {
    Mcfg g = load("anbn.mcfg");
    Llg llg = mcfg_to_llg(g);
    ExtMcfg ext = tensorfree_llg_to_extended(llg);
    CHECK(ext.start == "S");
    CHECK(ext.types.count("(A^ @ S)"));
    CHECK(ext.types.count("(A * S^)"));
    // languages agree with the string oracle
    CHECK(extended_language(ext, 8) == mcfg_language(g, 8));

    // full pipeline back to an ordinary grammar
    Mcfg back = llg_to_mcfg(llg);
    CHECK(mcfg_language(back, 8) == mcfg_language(g, 8));

    Mcfg copy = load("copy.mcfg");
    Mcfg copy_back = llg_to_mcfg(mcfg_to_llg(copy));
    CHECK(mcfg_language(copy_back, 6) == mcfg_language(copy, 6));
}

TEST_CASE("lexicons with tensors are rejected by name") {
    Llg g;
    g.alphabet.add("h");
    g.start = "S";
    g.atom_order = {"S", "H"};
    g.atoms.emplace("S", boundary_of(1));
    g.atoms.emplace("H", boundary_of(1));
    g.lexicon.push_back(LexEntry{
        "push", Formula::tensor(Formula::lit("H"), Formula::lit("H")),
        Cowordism(Boundary{}, boundary_of(2),
                  {CwEdge{Port::tgt(1), Port::tgt(0), {}},
                   CwEdge{Port::tgt(3), Port::tgt(2), {}}})});
    try {
        tensorfree_llg_to_extended(g);
        FAIL_CHECK("expected rejection of the tensor-typed entry");
    } catch (const std::invalid_argument& ex) {
        std::string msg = ex.what();
        CHECK(msg.find("push") != std::string::npos);
        CHECK(msg.find("tensor") != std::string::npos);
    }
}

TEST_CASE("empty lexicon gives the empty language end to end") {
    Llg g;
    g.start = "S";
    g.atom_order = {"S"};
    g.atoms.emplace("S", boundary_of(1));
    ExtMcfg ext = tensorfree_llg_to_extended(g);
    CHECK(ext.rules.empty());
    CHECK(extended_language(ext, 5).empty());
    Mcfg m = llg_to_mcfg(g);
    CHECK(m.rules.empty());
    CHECK(mcfg_language(m, 5).empty());
}
