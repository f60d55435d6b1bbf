#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "cowordism/acg.hpp"
#include "cowordism/mcfg.hpp"
#include "cowordism/proof.hpp"
#include "term_gen.hpp"

using namespace cow;
using cowtest::TermGen;

namespace {

Alphabet ab_alpha() { return Alphabet({"a", "b"}); }

Word rand_word(std::mt19937& rng, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len), letter(0, 1);
    Word w;
    for (int n = len(rng); n > 0; --n) w.push_back(letter(rng));
    return w;
}

}  // namespace

TEST_CASE("term and type syntax round-trips") {
    Term t = parse_term("\\x. a (b x)");
    CHECK(repr(t) == "\\x. a (b x)");
    CHECK(t.kind() == Term::Kind::Abs);
    CHECK(t.body().fun().kind() == Term::Kind::Const);
    CHECK(term_size(t) == 6);  // abs, two apps, two constants, one variable

    CHECK(repr(parse_term("(\\x. x) (\\y. y)")) == "(\\x. x) (\\y. y)");
    CHECK(repr(parse_term("f x (g y)")) == "f x (g y)");
    CHECK(repr(parse_term("f (x y z)")) == "f (x y z)");

    CHECK(alpha_equal(parse_term("\\x. a x"), parse_term("\\y. a y")));
    CHECK(!alpha_equal(parse_term("\\x. a x"), parse_term("\\y. b y")));
    CHECK(!alpha_equal(parse_term("\\x. \\y. f x y"), parse_term("\\x. \\y. f y x")));

    CHECK_THROWS_WITH_AS(parse_term("\\x. \\x. x"),
                         doctest::Contains("shadows"), ParseError);
    CHECK_THROWS_WITH_AS(parse_term("f \\x. x"),
                         doctest::Contains("parentheses"), ParseError);

    Alphabet ab = ab_alpha();
    CHECK(repr(word_term(ab, ab.parse_word("aba"))) == "\\x. a (b (a x))");
    CHECK(repr(word_term(ab, {})) == "\\x. x");

    ImplType fun = ImplType::arrow(ImplType::arrow(ImplType::atom("A"), ImplType::atom("B")),
                                   ImplType::atom("C"));
    CHECK(repr(fun) == "(A -o B) -o C");
    CHECK(repr(ImplType::arrow(ImplType::atom("A"),
                               ImplType::arrow(ImplType::atom("B"), ImplType::atom("C")))) ==
          "A -o B -o C");
}

TEST_CASE("type inference follows the typing rules") {
    Alphabet ab = ab_alpha();
    Signature sig = string_signature(ab);

    CHECK(infer_type(sig, {}, Term::constant("a")) == str_type());
    ImplType o = ImplType::atom("O");
    CHECK(infer_type(sig, {{"x", o}}, Term::var("x")) == o);
    CHECK(infer_type(sig, {}, parse_term("\\x. a x")) == str_type());
    CHECK(infer_type(sig, {}, parse_term("\\x. a (b x)")) == str_type());
    CHECK(infer_type(sig, {}, parse_term("\\f. \\x. b (f (a x))")) ==
          ImplType::arrow(str_type(), str_type()));

    CHECK_THROWS_WITH_AS(infer_type(sig, {}, parse_term("\\f. \\x. f x x")),
                         doctest::Contains("more than once"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(infer_type(sig, {}, parse_term("\\f. \\x. f")),
                         doctest::Contains("never used"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(infer_type(sig, {}, Term::constant("q")),
                         doctest::Contains("unknown constant"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(infer_type(sig, {}, parse_term("a a")),
                         doctest::Contains("type clash"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(infer_type(sig, {}, parse_term("\\x. x")),
                         doctest::Contains("ambiguous"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(infer_type(sig, {{"x", o}}, Term::constant("a")),
                         doctest::Contains("never used"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(infer_type(sig, {}, Term::var("x")),
                         doctest::Contains("unbound"), std::invalid_argument);
}

TEST_CASE("beta normalization") {
    Alphabet ab = ab_alpha();
    Signature sig = string_signature(ab);

    CHECK(alpha_equal(beta_normalize(parse_term("(\\x. x) a")), Term::constant("a")));
    CHECK(alpha_equal(beta_normalize(parse_term("(\\f. \\x. f x) a")), parse_term("\\x. a x")));
    // normalization under binders, nested redexes
    Term t = parse_term("\\y. (\\f. \\x. f (f' x)) ((\\g. g) a) y");
    Term n = beta_normalize(t);
    CHECK(alpha_equal(n, parse_term("\\y. a (f' y)")));
    // substitution must not capture: the argument mentions a variable with
    // the same name as an inner binder
    Term tricky = Term::abs(
        "y",
        Term::app(Term::abs("x", Term::abs("y", Term::app(Term::constant("b"),
                                                          Term::app(Term::var("y"),
                                                                    Term::var("x"))))),
                  Term::app(Term::constant("a"), Term::var("y"))));
    Term tn = beta_normalize(tricky);  // \y. \z. b (z (a y)), NOT \y. \y. b (y (a y))
    CHECK(alpha_equal(tn, parse_term("\\y. \\z. b (z (a y))")));
    CHECK(infer_type(sig, {}, tn) == infer_type(sig, {}, tricky));
}

TEST_CASE("interpretation of string terms") {
    Alphabet ab = ab_alpha();
    Signature sig = string_signature(ab);
    Interpretation env = standard_interpretation(ab);

    // graph(/w/) equals the one-edge diagram of w, 100 random words
    std::mt19937 rng(7);
    ImplType str = str_type();
    for (int i = 0; i < 100; ++i) {
        Word w = rand_word(rng, 8);
        Cowordism g = interpret_term(sig, env, word_term(ab, w), &str);
        CHECK(g == word_diagram(w));
        CHECK(string_readback(g) == w);
    }
    CHECK(string_readback(word_diagram(ab.parse_word("ab"))) == ab.parse_word("ab"));
    CHECK(string_readback(word_diagram({})).empty());
    CHECK_THROWS_WITH_AS(string_readback(identity(Boundary{{Tag::Right}})),
                         doctest::Contains("not a string value"), std::invalid_argument);
}

TEST_CASE("interpretation laws on random well-typed terms") {
    Alphabet ab = ab_alpha();
    Signature sig = string_signature(ab);
    Interpretation env = standard_interpretation(ab);
    TermGen gen;

    std::vector<ImplType> targets = {
        str_type(), ImplType::arrow(str_type(), str_type()),
        ImplType::arrow(ImplType::arrow(str_type(), str_type()), str_type())};
    std::map<std::string, std::vector<Term>> by_type;
    int collected = 0;
    for (int round = 0; round < 4000 && collected < 60; ++round) {
        const ImplType& want = targets[static_cast<size_t>(gen.pick(3))];
        auto t = gen.gen(want, {}, 5);
        if (!t || term_size(*t) > 12) continue;
        ++collected;
        by_type[repr(want)].push_back(*t);

        Term n = beta_normalize(*t);
        try {  // subject reduction, whenever the term pins its type by itself
            ImplType principal = infer_type(sig, {}, *t);
            CHECK(infer_type(sig, {}, n) == principal);
        } catch (const std::invalid_argument&) {
        }
        {
            // the principal type may be more general; checking against the
            // target type must succeed both before and after normalization
            Cowordism before = interpret_term(sig, env, *t, &want);
            Cowordism after = interpret_term(sig, env, n, &want);  // beta
            CHECK(before == after);
            if (want.kind() == ImplType::Kind::Arrow) {  // eta
                Term etad = Term::abs("w0", Term::app(*t, Term::var("w0")));
                CHECK(interpret_term(sig, env, etad, &want) == before);
            }
        }
    }
    CHECK(collected >= 40);

    // application law: [t s] equals [s] composed with [t] read as a morphism
    ImplType strty = str_type();
    ImplType funty = ImplType::arrow(strty, strty);
    const auto& funs = by_type[repr(funty)];
    const auto& args = by_type[repr(strty)];
    REQUIRE(!funs.empty());
    REQUIRE(!args.empty());
    Boundary bstr = type_boundary(strty, env.atoms);
    int pairs = 0;
    for (size_t i = 0; i < funs.size() && pairs < 40; ++i)
        for (size_t j = 0; j < args.size() && pairs < 40; ++j, ++pairs) {
            Cowordism lhs =
                interpret_term(sig, env, Term::app(funs[i], args[j]), &strty);
            Cowordism rhs = compose(interpret_term(sig, env, args[j], &strty),
                                    unname(interpret_term(sig, env, funs[i], &funty), bstr));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("a shipped grammar loads, validates and encodes") {
    Acg g = load_acg(GRAMMARS_DIR "/anbn.acg");
    CHECK(g.start == "S");
    CHECK(g.abstract_sig.const_order == std::vector<std::string>{"base", "grow", "finish"});

    // lexicon images of abstract terms normalize to /w/ form
    Term t = parse_term("finish (grow (grow base))");
    CHECK(infer_type(g.abstract_sig, {}, t) == ImplType::atom("S"));
    Term image = beta_normalize(apply_const_map(g.lexicon, t));
    CHECK(alpha_equal(image, word_term(g.alphabet, g.alphabet.parse_word("aabb"))));

    Llg llg = acg_to_llg(g);
    CHECK(llg.start == "S");
    CHECK(llg.atoms.at("S") == boundary_from_counts(1, 1));
    CHECK(llg.atoms.at("A") == boundary_from_counts(4, 4));
    REQUIRE(llg.lexicon.size() == 3);
    CHECK(repr(llg.lexicon[1].type) == "(A^ @ A)");

    // the encoded grammar is a valid grammar file
    CHECK(write_llg(parse_llg(write_llg(llg), "anbn.llg")) == write_llg(llg));

    // language agreement with the derivation oracle of the matching MCFG:
    // a term with k constants uses k axioms, so bound 7 reaches a^5 b^5
    Mcfg m = load_mcfg(GRAMMARS_DIR "/anbn.mcfg");
    CHECK(language(llg, 7) == mcfg_language(m, 10));
}

TEST_CASE("values of abstract terms appear among derivation values") {
    Acg g = load_acg(GRAMMARS_DIR "/anbn.acg");
    Llg llg = acg_to_llg(g);

    // brute force: every entry multiset of size <= k, every cut-free proof of
    // |- entries^, goal; the term's value must show up
    auto found = [&](const std::string& goal, const Term& t, int k) {
        Llg at = llg;
        at.start = goal;
        Cowordism v = graph_of_term(g, t);
        std::vector<size_t> pick;
        std::function<bool(size_t, int)> rec = [&](size_t lo, int left) {
            Sequent s;
            for (size_t e : pick) s.push_back(neg(at.lexicon[e].type));
            s.push_back(Formula::lit(goal));
            for (const Proof& p : enumerate_cut_free_proofs(s, 500))
                if (derivation_value(at, pick, p) == v) return true;
            for (size_t e = lo; left > 0 && e < at.lexicon.size(); ++e) {
                pick.push_back(e);
                bool hit = rec(e, left - 1);
                pick.pop_back();
                if (hit) return true;
            }
            return false;
        };
        return rec(0, k);
    };
    CHECK(found("A", parse_term("base"), 1));
    CHECK(found("A", parse_term("grow base"), 2));
    CHECK(found("A", parse_term("grow (grow base)"), 3));
    CHECK(found("S", parse_term("finish (grow base)"), 3));
    CHECK(!found("S", parse_term("finish (grow base)"), 2));  // needs all three

    // S-typed terms interpret to plain word diagrams
    CHECK(graph_of_term(g, parse_term("finish (grow base)")) ==
          word_diagram(g.alphabet.parse_word("ab")));
}

TEST_CASE("degenerate grammars") {
    // a single constant whose image is /ab/ generates exactly that word
    Acg g;
    g.alphabet = ab_alpha();
    g.abstract_sig.atom_order = {"S"};
    g.abstract_sig.const_order = {"c"};
    g.abstract_sig.tau.emplace("c", ImplType::atom("S"));
    g.lexicon.type_map.emplace("S", str_type());
    g.lexicon.const_map.emplace("c", word_term(g.alphabet, g.alphabet.parse_word("ab")));
    g.start = "S";
    g.validate();
    Llg llg = acg_to_llg(g);
    CHECK(language(llg, 1) == std::vector<Word>{g.alphabet.parse_word("ab")});

    // no constants: nothing is generated
    Acg empty;
    empty.alphabet = ab_alpha();
    empty.abstract_sig.atom_order = {"S"};
    empty.lexicon.type_map.emplace("S", str_type());
    empty.start = "S";
    empty.validate();
    CHECK(language(acg_to_llg(empty), 5).empty());
}

TEST_CASE("grammar file errors") {
    auto fails_with = [](const std::string& text, const std::string& needle) {
        try {
            parse_acg(text, "g.acg");
            FAIL_CHECK("expected a parse error containing '" << needle << "'");
        } catch (const ParseError& ex) {
            std::string msg = ex.what();
            CHECK(msg.substr(0, 6) == "g.acg:");
            if (msg.find(needle) == std::string::npos)
                FAIL_CHECK("error '" << msg << "' does not mention '" << needle << "'");
        }
    };
    std::string ok =
        "alphabet a\n"
        "abstract atom S;\n"
        "start S;\n"
        "typemap S = str;\n"
        "const c : S;\n"
        "lexicon c = \\x. a x;\n";
    CHECK(parse_acg(ok, "g.acg").abstract_sig.const_order == std::vector<std::string>{"c"});

    fails_with("abstract atom S;\nstart S;\ntypemap S = str;\n", "no alphabet");
    fails_with("alphabet a\nabstract atom S;\ntypemap S = str;\n", "no start");
    fails_with("alphabet a\nabstract atom S;\nstart S;\n", "no typemap");
    fails_with(
        "alphabet a\nabstract atom S T;\nstart S;\ntypemap S = str;\ntypemap T = O;\n"
        "const c : T;\nlexicon c = \\x. x;\n",
        "type clash");
    fails_with(
        "alphabet a\nabstract atom S;\nstart S;\ntypemap S = O;\n", "must map to str");
    fails_with(
        "alphabet a\nabstract atom S;\nstart S;\ntypemap S = str;\nconst c : S;\n"
        "lexicon c = \\x. q x;\n",
        "unknown constant 'q'");
    fails_with(
        "alphabet a\nabstract atom S;\nstart S;\ntypemap S = str;\nconst c : S;\n"
        "lexicon c = \\x. \\y. x y;\n",
        "lexicon term for 'c'");
    fails_with(
        "alphabet a\nabstract atom S;\nstart S;\ntypemap S = str;\nconst c : S;\n"
        "lexicon c = \\a. a;\n",
        "also a letter");
    fails_with("alphabet a\nfoo bar;\n", "expected a declaration");
}
