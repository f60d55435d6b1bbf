#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cowordism/cowordism.hpp"
#include "cowordism/llg.hpp"

namespace cow {

// Linear implicational types over named atoms.
class ImplType {
public:
    enum class Kind { Atom, Arrow };

    ImplType() : ImplType(atom("")) {}
    static ImplType atom(std::string name);
    static ImplType arrow(ImplType from, ImplType to);

    Kind kind() const { return n_->kind; }
    const std::string& name() const;  // atoms only
    ImplType from() const;            // arrows only
    ImplType to() const;

    bool operator==(const ImplType& o) const { return repr_equal(o); }
    bool operator!=(const ImplType& o) const { return !repr_equal(o); }

private:
    struct Node {
        Kind kind;
        std::string name;
        std::shared_ptr<const Node> l, r;
    };
    explicit ImplType(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
    bool repr_equal(const ImplType& o) const;

    std::shared_ptr<const Node> n_;
};

// Minimal parentheses, "-o" right associative: "A -o B -o C", "(A -o B) -o C".
std::string repr(const ImplType& t);

// Linear lambda terms: variables, constants, application, abstraction.
class Term {
public:
    enum class Kind { Var, Const, App, Abs };

    Term() : Term(var("")) {}
    static Term var(std::string name);
    static Term constant(std::string name);
    static Term app(Term fun, Term arg);
    static Term abs(std::string binder, Term body);

    Kind kind() const { return n_->kind; }
    const std::string& name() const;  // Var, Const, and Abs (the binder)
    Term fun() const;                 // App only
    Term arg() const;
    Term body() const;  // Abs only

private:
    struct Node {
        Kind kind;
        std::string name;
        std::shared_ptr<const Node> l, r;
    };
    explicit Term(std::shared_ptr<const Node> n) : n_(std::move(n)) {}

    std::shared_ptr<const Node> n_;
};

// "\x. a (b x)": backslash abstraction, juxtaposition application (left
// associative, binding tighter than the lambda body), parentheses for
// grouping.
std::string repr(const Term& t);
// Parses the syntax above. Bound identifiers become variables; free ones
// become constants (their existence is checked by type inference later).
// Rejects a binder that shadows another binder in scope.
Term parse_term(const std::string& text);
bool alpha_equal(const Term& a, const Term& b);
// The string term /w/ = \x. a1 (a2 (... (an x))) for w = a1 a2 ... an.
Term word_term(const Alphabet& alphabet, const Word& w);
int term_size(const Term& t);  // number of nodes

// A higher-order linear signature: atomic types plus typed constants.
struct Signature {
    std::vector<std::string> atom_order;
    std::vector<std::string> const_order;
    std::map<std::string, ImplType> tau;  // constant -> its type

    void validate() const;  // throws std::invalid_argument
};

// The string signature over an alphabet: one atom O, every letter typed
// O -o O (the type abbreviated "str").
Signature string_signature(const Alphabet& alphabet);
ImplType str_type();

using TypingContext = std::vector<std::pair<std::string, ImplType>>;

// The unique type of t with the given free-variable typing, or throws
// std::invalid_argument: non-linear variable use, unknown constant, a type
// clash, or a type left ambiguous by inference.
ImplType infer_type(const Signature& sig, const TypingContext& ctx, const Term& t);

// Full beta normalization; linear terms strongly normalize. Binders are
// renamed to fresh names first, so substitution can never capture.
Term beta_normalize(const Term& t);

// Interpretation of a signature in the category: a boundary per atomic type
// and a closed cowordism 1 -> boundary(tau(c)) per constant.
struct Interpretation {
    std::map<std::string, Boundary> atoms;
    std::map<std::string, Cowordism> constants;
};

// boundary(A -o B) = dual(boundary(A)) (x) boundary(B).
Boundary type_boundary(const ImplType& t, const std::map<std::string, Boundary>& atoms);

// The standard interpretation of the string signature: the atom O is a single
// Right port and each letter c is the one-edge diagram of the word "c".
Interpretation standard_interpretation(const Alphabet& alphabet);

// Value of a closed typeable term, 1 -> boundary of its type: constants map
// to their given values, application to evaluation after tensoring, and
// abstraction to a boundary reshuffle (the last source factor bends around to
// the target, dualized). When the term alone does not determine every type
// (e.g. \x. x), pass the intended type as `expected`.
Cowordism interpret_term(const Signature& sig, const Interpretation& env, const Term& t,
                         const ImplType* expected = nullptr);

// Reads a value 1 -> boundary(str) back as the word on its single edge;
// throws std::invalid_argument when the value is not of that shape.
Word string_readback(const Cowordism& c);

// A map of signatures into the string signature: a type map on atoms
// (extended homomorphically) and a string-signature term per constant.
struct SignatureMap {
    std::map<std::string, ImplType> type_map;
    std::map<std::string, Term> const_map;
};

ImplType apply_type_map(const SignatureMap& m, const ImplType& t);
Term apply_const_map(const SignatureMap& m, const Term& t);

// A string abstract categorial grammar: an abstract signature, an alphabet,
// a lexicon mapping the signature into the string signature over the
// alphabet, and a start atom whose image is str.
struct Acg {
    Signature abstract_sig;
    Alphabet alphabet;
    SignatureMap lexicon;
    std::string start;

    // Checks that every atom has a type-map image over O, every constant a
    // lexicon term of exactly the mapped type, and that start maps to str.
    void validate() const;
};

// Grammar file syntax, one declaration per statement:
//   alphabet a b;                letters of the generated language
//   abstract atom S A;           atomic types of the abstract signature
//   const c : A -o S;            an abstract constant and its type
//   typemap A = str -o str;      type-map image of an atom (over "O"; "str"
//                                abbreviates O -o O)
//   lexicon c = \x. a (b x);     lexicon term of a constant
//   start S;                     the start atom
Acg parse_acg(const std::string& text, const std::string& filename);
Acg load_acg(const std::string& path);

// The grammar of typed cowordisms with one axiom per abstract constant c:
// its type reads A -o B as A^ par B over the abstract atoms, its value is the
// interpretation of the lexicon term. Atom boundaries are the boundaries of
// the type-map images, relaid out in the canonical interleaved order the
// grammar file format can declare (an isomorphism applied uniformly to every
// axiom, so the generated language is unchanged).
Llg acg_to_llg(const Acg& g);

// Value of a closed abstract term under the same interpretation and relayout
// that acg_to_llg applies; for a term of type A this lands in the boundary of
// the corresponding grammar formula, so it can be compared against generated
// derivation values directly.
Cowordism graph_of_term(const Acg& g, const Term& t);

}  // namespace cow
