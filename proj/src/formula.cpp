#include "cowordism/formula.hpp"

#include <stdexcept>

namespace cow {

Formula Formula::lit(std::string atom) {
    return Formula(std::make_shared<Node>(Node{Kind::Lit, std::move(atom), nullptr, nullptr}));
}

Formula Formula::neglit(std::string atom) {
    return Formula(std::make_shared<Node>(Node{Kind::NegLit, std::move(atom), nullptr, nullptr}));
}

Formula Formula::tensor(Formula a, Formula b) {
    return Formula(std::make_shared<Node>(Node{Kind::Tensor, "", a.n_, b.n_}));
}

Formula Formula::par(Formula a, Formula b) {
    return Formula(std::make_shared<Node>(Node{Kind::Par, "", a.n_, b.n_}));
}

const std::string& Formula::atom() const {
    if (!is_literal()) throw std::logic_error("atom() on a compound formula");
    return n_->atom;
}

Formula Formula::left() const {
    if (is_literal()) throw std::logic_error("left() on a literal");
    return Formula(n_->l);
}

Formula Formula::right() const {
    if (is_literal()) throw std::logic_error("right() on a literal");
    return Formula(n_->r);
}

bool Formula::repr_equal(const Formula& o) const {
    return n_ == o.n_ || repr(*this) == repr(o);
}

bool Formula::operator<(const Formula& o) const { return repr(*this) < repr(o); }

Formula neg(const Formula& f) {
    switch (f.kind()) {
        case Formula::Kind::Lit: return Formula::neglit(f.atom());
        case Formula::Kind::NegLit: return Formula::lit(f.atom());
        case Formula::Kind::Tensor: return Formula::par(neg(f.left()), neg(f.right()));
        case Formula::Kind::Par: return Formula::tensor(neg(f.left()), neg(f.right()));
    }
    throw std::logic_error("unreachable");
}

Formula loli(const Formula& a, const Formula& b) { return Formula::par(neg(a), b); }

std::string repr(const Formula& f) {
    switch (f.kind()) {
        case Formula::Kind::Lit: return f.atom();
        case Formula::Kind::NegLit: return f.atom() + "^";
        case Formula::Kind::Tensor: return "(" + repr(f.left()) + " * " + repr(f.right()) + ")";
        case Formula::Kind::Par: return "(" + repr(f.left()) + " @ " + repr(f.right()) + ")";
    }
    throw std::logic_error("unreachable");
}

int literal_count(const Formula& f) {
    if (f.is_literal()) return 1;
    return literal_count(f.left()) + literal_count(f.right());
}

int tensor_count(const Formula& f) {
    if (f.is_literal()) return 0;
    int here = (f.kind() == Formula::Kind::Tensor) ? 1 : 0;
    return here + tensor_count(f.left()) + tensor_count(f.right());
}

static void collect_literals(const Formula& f,
                             std::vector<std::pair<std::string, bool>>& out) {
    if (f.kind() == Formula::Kind::Lit) {
        out.emplace_back(f.atom(), true);
    } else if (f.kind() == Formula::Kind::NegLit) {
        out.emplace_back(f.atom(), false);
    } else {
        collect_literals(f.left(), out);
        collect_literals(f.right(), out);
    }
}

std::vector<std::pair<std::string, bool>> literals_of(const Formula& f) {
    std::vector<std::pair<std::string, bool>> out;
    collect_literals(f, out);
    return out;
}

Boundary formula_boundary(const Formula& f, const AtomBoundaries& atoms) {
    switch (f.kind()) {
        case Formula::Kind::Lit: {
            auto it = atoms.find(f.atom());
            if (it == atoms.end())
                throw std::invalid_argument("no boundary declared for atom '" + f.atom() + "'");
            return it->second;
        }
        case Formula::Kind::NegLit: {
            auto it = atoms.find(f.atom());
            if (it == atoms.end())
                throw std::invalid_argument("no boundary declared for atom '" + f.atom() + "'");
            return dual(it->second);
        }
        default:
            return tensor(formula_boundary(f.left(), atoms),
                          formula_boundary(f.right(), atoms));
    }
}

std::string repr(const Sequent& s) {
    std::string r;
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) r += ", ";
        r += repr(s[i]);
    }
    return r;
}

Boundary sequent_boundary(const Sequent& s, const AtomBoundaries& atoms) {
    Boundary b;
    for (const auto& f : s) b = tensor(b, formula_boundary(f, atoms));
    return b;
}

namespace {

Formula parse_primary(Lexer& lx) {
    Formula f;
    if (lx.accept_symbol("(")) {
        f = parse_formula(lx);
        lx.expect_symbol(")");
    } else {
        Token t = lx.expect_ident("an atom");
        f = Formula::lit(t.text);
    }
    while (lx.accept_symbol("^")) f = neg(f);
    return f;
}

Formula parse_tensor_level(Lexer& lx) {
    Formula f = parse_primary(lx);
    while (true) {
        if (lx.accept_symbol("*"))
            f = Formula::tensor(f, parse_primary(lx));
        else if (lx.accept_symbol("@"))
            f = Formula::par(f, parse_primary(lx));
        else
            return f;
    }
}

}  // namespace

Formula parse_formula(Lexer& lx) {
    Formula f = parse_tensor_level(lx);
    if (lx.accept_symbol("-o")) return loli(f, parse_formula(lx));  // right associative
    return f;
}

Formula parse_formula(const std::string& text) {
    Lexer lx(text);
    Formula f = parse_formula(lx);
    if (!lx.at_end()) lx.fail("unexpected trailing input after formula");
    return f;
}

}  // namespace cow
