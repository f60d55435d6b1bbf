#include "cowordism/acg.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cowordism/lexer.hpp"

namespace cow {

// ---------------------------------------------------------------------------
// Types and terms

ImplType ImplType::atom(std::string name) {
    return ImplType(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), {}, {}}));
}

ImplType ImplType::arrow(ImplType from, ImplType to) {
    return ImplType(std::make_shared<const Node>(Node{Kind::Arrow, "", from.n_, to.n_}));
}

const std::string& ImplType::name() const {
    if (kind() != Kind::Atom) throw std::logic_error("name() on an arrow type");
    return n_->name;
}

ImplType ImplType::from() const {
    if (kind() != Kind::Arrow) throw std::logic_error("from() on an atomic type");
    return ImplType(n_->l);
}

ImplType ImplType::to() const {
    if (kind() != Kind::Arrow) throw std::logic_error("to() on an atomic type");
    return ImplType(n_->r);
}

bool ImplType::repr_equal(const ImplType& o) const { return repr(*this) == repr(o); }

std::string repr(const ImplType& t) {
    if (t.kind() == ImplType::Kind::Atom) return t.name();
    std::string lhs = repr(t.from());
    if (t.from().kind() == ImplType::Kind::Arrow) lhs = "(" + lhs + ")";
    return lhs + " -o " + repr(t.to());
}

Term Term::var(std::string name) {
    return Term(std::make_shared<const Node>(Node{Kind::Var, std::move(name), {}, {}}));
}

Term Term::constant(std::string name) {
    return Term(std::make_shared<const Node>(Node{Kind::Const, std::move(name), {}, {}}));
}

Term Term::app(Term fun, Term arg) {
    return Term(std::make_shared<const Node>(Node{Kind::App, "", fun.n_, arg.n_}));
}

Term Term::abs(std::string binder, Term body) {
    return Term(std::make_shared<const Node>(Node{Kind::Abs, std::move(binder), {}, body.n_}));
}

const std::string& Term::name() const {
    if (kind() == Kind::App) throw std::logic_error("name() on an application");
    return n_->name;
}

Term Term::fun() const {
    if (kind() != Kind::App) throw std::logic_error("fun() on a non-application");
    return Term(n_->l);
}

Term Term::arg() const {
    if (kind() != Kind::App) throw std::logic_error("arg() on a non-application");
    return Term(n_->r);
}

Term Term::body() const {
    if (kind() != Kind::Abs) throw std::logic_error("body() on a non-abstraction");
    return Term(n_->r);
}

namespace {

// In application position the function needs parentheses only when it is an
// abstraction; the argument also when it is an application.
std::string repr_at(const Term& t, bool fun_pos, bool arg_pos) {
    switch (t.kind()) {
        case Term::Kind::Var:
        case Term::Kind::Const:
            return t.name();
        case Term::Kind::App: {
            std::string s = repr_at(t.fun(), true, false) + " " + repr_at(t.arg(), false, true);
            return arg_pos ? "(" + s + ")" : s;
        }
        case Term::Kind::Abs: {
            std::string s = "\\" + t.name() + ". " + repr_at(t.body(), false, false);
            return (fun_pos || arg_pos) ? "(" + s + ")" : s;
        }
    }
    return "";
}

}  // namespace

std::string repr(const Term& t) { return repr_at(t, false, false); }

int term_size(const Term& t) {
    switch (t.kind()) {
        case Term::Kind::Var:
        case Term::Kind::Const:
            return 1;
        case Term::Kind::App:
            return 1 + term_size(t.fun()) + term_size(t.arg());
        case Term::Kind::Abs:
            return 1 + term_size(t.body());
    }
    return 0;
}

namespace {

bool alpha_equal_at(const Term& a, const Term& b, std::vector<std::pair<std::string, std::string>>& bound) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case Term::Kind::Var:
            // the most recent binding of either name must pair them together
            for (auto it = bound.rbegin(); it != bound.rend(); ++it) {
                if (it->first == a.name() || it->second == b.name())
                    return it->first == a.name() && it->second == b.name();
            }
            return a.name() == b.name();
        case Term::Kind::Const:
            return a.name() == b.name();
        case Term::Kind::App:
            return alpha_equal_at(a.fun(), b.fun(), bound) &&
                   alpha_equal_at(a.arg(), b.arg(), bound);
        case Term::Kind::Abs: {
            bound.emplace_back(a.name(), b.name());
            bool ok = alpha_equal_at(a.body(), b.body(), bound);
            bound.pop_back();
            return ok;
        }
    }
    return false;
}

}  // namespace

bool alpha_equal(const Term& a, const Term& b) {
    std::vector<std::pair<std::string, std::string>> bound;
    return alpha_equal_at(a, b, bound);
}

Term word_term(const Alphabet& alphabet, const Word& w) {
    std::string x = "x";
    while (alphabet.contains(x)) x += "'";
    Term body = Term::var(x);
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        body = Term::app(Term::constant(alphabet.token(*it)), body);
    return Term::abs(x, body);
}

// ---------------------------------------------------------------------------
// Parsing terms

namespace {

Term parse_term_at(Lexer& lx, std::vector<std::string>& bound);

Term parse_term_atom(Lexer& lx, std::vector<std::string>& bound) {
    if (lx.accept_symbol("(")) {
        Term t = parse_term_at(lx, bound);
        lx.expect_symbol(")");
        return t;
    }
    Token name = lx.expect_ident("a term");
    if (std::find(bound.begin(), bound.end(), name.text) != bound.end())
        return Term::var(name.text);
    return Term::constant(name.text);
}

bool term_starts(Lexer& lx) {
    const Token& t = lx.peek();
    if (t.kind == Token::Kind::Ident) return true;
    return t.kind == Token::Kind::Symbol && (t.text == "(" || t.text == "\\");
}

Term parse_term_at(Lexer& lx, std::vector<std::string>& bound) {
    if (lx.accept_symbol("\\")) {
        Token binder = lx.expect_ident("a variable to bind");
        if (std::find(bound.begin(), bound.end(), binder.text) != bound.end())
            lx.fail("binder '" + binder.text + "' shadows an enclosing binder", binder.line);
        lx.expect_symbol(".");
        bound.push_back(binder.text);
        Term body = parse_term_at(lx, bound);
        bound.pop_back();
        return Term::abs(binder.text, body);
    }
    Term t = parse_term_atom(lx, bound);
    while (term_starts(lx)) {
        if (lx.peek().kind == Token::Kind::Symbol && lx.peek().text == "\\") {
            // a lambda argument must be parenthesized; catch the common slip
            lx.fail("lambda in application position needs parentheses");
        }
        t = Term::app(t, parse_term_atom(lx, bound));
    }
    return t;
}

ImplType parse_impl_type(Lexer& lx) {
    ImplType lhs;
    if (lx.accept_symbol("(")) {
        lhs = parse_impl_type(lx);
        lx.expect_symbol(")");
    } else {
        lhs = ImplType::atom(lx.expect_ident("an atomic type").text);
    }
    if (lx.accept_symbol("-o")) return ImplType::arrow(lhs, parse_impl_type(lx));
    return lhs;
}

}  // namespace

Term parse_term(const std::string& text) {
    Lexer lx(text, "");
    std::vector<std::string> bound;
    Term t = parse_term_at(lx, bound);
    if (!lx.at_end()) lx.fail("trailing input after term");
    return t;
}

// ---------------------------------------------------------------------------
// Linearity, freshening, normalization

namespace {

// Multiset of free-variable occurrences; throws on any non-linear use.
std::map<std::string, int> linear_uses(const Term& t) {
    switch (t.kind()) {
        case Term::Kind::Var:
            return {{t.name(), 1}};
        case Term::Kind::Const:
            return {};
        case Term::Kind::App: {
            auto uses = linear_uses(t.fun());
            for (const auto& [x, n] : linear_uses(t.arg())) {
                if (uses.count(x))
                    throw std::invalid_argument("variable '" + x + "' is used more than once");
                uses.emplace(x, n);
            }
            return uses;
        }
        case Term::Kind::Abs: {
            auto uses = linear_uses(t.body());
            auto it = uses.find(t.name());
            if (it == uses.end())
                throw std::invalid_argument("bound variable '" + t.name() + "' is never used");
            uses.erase(it);
            return uses;
        }
    }
    return {};
}

// Renames every binder to a fresh "#n" name ('#' cannot occur in parsed
// identifiers, so fresh names never collide with user names).
Term freshen_at(const Term& t, std::vector<std::pair<std::string, std::string>>& ren, int& ctr) {
    switch (t.kind()) {
        case Term::Kind::Var:
            for (auto it = ren.rbegin(); it != ren.rend(); ++it)
                if (it->first == t.name()) return Term::var(it->second);
            return t;
        case Term::Kind::Const:
            return t;
        case Term::Kind::App:
            return Term::app(freshen_at(t.fun(), ren, ctr), freshen_at(t.arg(), ren, ctr));
        case Term::Kind::Abs: {
            std::string fresh = "#" + std::to_string(++ctr);
            ren.emplace_back(t.name(), fresh);
            Term body = freshen_at(t.body(), ren, ctr);
            ren.pop_back();
            return Term::abs(fresh, body);
        }
    }
    return t;
}

Term freshen(const Term& t, int& ctr) {
    std::vector<std::pair<std::string, std::string>> ren;
    return freshen_at(t, ren, ctr);
}

// Substitution after freshening: all binders are distinct from each other and
// from every free variable, so capture is impossible.
Term subst(const Term& t, const std::string& x, const Term& s) {
    switch (t.kind()) {
        case Term::Kind::Var:
            return t.name() == x ? s : t;
        case Term::Kind::Const:
            return t;
        case Term::Kind::App:
            return Term::app(subst(t.fun(), x, s), subst(t.arg(), x, s));
        case Term::Kind::Abs:
            if (t.name() == x) throw std::logic_error("substitution under a capturing binder");
            return Term::abs(t.name(), subst(t.body(), x, s));
    }
    return t;
}

Term normalize_at(const Term& t) {
    switch (t.kind()) {
        case Term::Kind::Var:
        case Term::Kind::Const:
            return t;
        case Term::Kind::Abs:
            return Term::abs(t.name(), normalize_at(t.body()));
        case Term::Kind::App: {
            Term f = normalize_at(t.fun());
            Term a = normalize_at(t.arg());
            if (f.kind() == Term::Kind::Abs) return normalize_at(subst(f.body(), f.name(), a));
            return Term::app(f, a);
        }
    }
    return t;
}

}  // namespace

Term beta_normalize(const Term& t) {
    linear_uses(t);  // reject non-linear input up front
    int ctr = 0;
    return normalize_at(freshen(t, ctr));
}

// ---------------------------------------------------------------------------
// Type inference

namespace {

// Inference types: implicational types extended with mutable metavariables.
struct MType {
    enum class Kind { Atom, Arrow, Meta };
    Kind kind = Kind::Atom;
    std::string name;               // Atom
    std::shared_ptr<MType> l, r;    // Arrow
    int id = 0;                     // Meta
};

using MTypeP = std::shared_ptr<MType>;

struct Infer {
    const Signature* sig;
    std::map<int, MTypeP> bind;
    int next_meta = 0;

    MTypeP atom(const std::string& name) {
        auto t = std::make_shared<MType>();
        t->kind = MType::Kind::Atom;
        t->name = name;
        return t;
    }
    MTypeP arrow(MTypeP a, MTypeP b) {
        auto t = std::make_shared<MType>();
        t->kind = MType::Kind::Arrow;
        t->l = std::move(a);
        t->r = std::move(b);
        return t;
    }
    MTypeP meta() {
        auto t = std::make_shared<MType>();
        t->kind = MType::Kind::Meta;
        t->id = next_meta++;
        return t;
    }
    MTypeP of_impl(const ImplType& t) {
        if (t.kind() == ImplType::Kind::Atom) return atom(t.name());
        return arrow(of_impl(t.from()), of_impl(t.to()));
    }

    MTypeP shallow(MTypeP t) {
        while (t->kind == MType::Kind::Meta) {
            auto it = bind.find(t->id);
            if (it == bind.end()) break;
            t = it->second;
        }
        return t;
    }

    bool occurs(int id, const MTypeP& t0) {
        MTypeP t = shallow(t0);
        if (t->kind == MType::Kind::Meta) return t->id == id;
        if (t->kind == MType::Kind::Arrow) return occurs(id, t->l) || occurs(id, t->r);
        return false;
    }

    std::string show(const MTypeP& t0) {
        MTypeP t = shallow(t0);
        switch (t->kind) {
            case MType::Kind::Atom:
                return t->name;
            case MType::Kind::Meta:
                return "?" + std::to_string(t->id);
            case MType::Kind::Arrow: {
                std::string lhs = show(t->l);
                if (shallow(t->l)->kind == MType::Kind::Arrow) lhs = "(" + lhs + ")";
                return lhs + " -o " + show(t->r);
            }
        }
        return "";
    }

    void unify(MTypeP a0, MTypeP b0) {
        MTypeP a = shallow(std::move(a0)), b = shallow(std::move(b0));
        if (a->kind == MType::Kind::Meta && b->kind == MType::Kind::Meta && a->id == b->id)
            return;
        if (a->kind == MType::Kind::Meta) {
            if (occurs(a->id, b)) throw std::invalid_argument("type clash: circular type");
            bind.emplace(a->id, b);
            return;
        }
        if (b->kind == MType::Kind::Meta) {
            unify(b, a);
            return;
        }
        if (a->kind != b->kind ||
            (a->kind == MType::Kind::Atom && a->name != b->name))
            throw std::invalid_argument("type clash: " + show(a) + " vs " + show(b));
        if (a->kind == MType::Kind::Arrow) {
            unify(a->l, b->l);
            unify(a->r, b->r);
        }
    }

    ImplType resolve(const MTypeP& t0) {
        MTypeP t = shallow(t0);
        switch (t->kind) {
            case MType::Kind::Atom:
                return ImplType::atom(t->name);
            case MType::Kind::Arrow:
                return ImplType::arrow(resolve(t->l), resolve(t->r));
            case MType::Kind::Meta:
                throw std::invalid_argument("ambiguous type: nothing determines ?" +
                                            std::to_string(t->id));
        }
        return ImplType();
    }

    // ctx maps variable names to their types; innermost binding last.
    MTypeP infer(const Term& t, std::vector<std::pair<std::string, MTypeP>>& ctx) {
        switch (t.kind()) {
            case Term::Kind::Var:
                for (auto it = ctx.rbegin(); it != ctx.rend(); ++it)
                    if (it->first == t.name()) return it->second;
                throw std::invalid_argument("unbound variable '" + t.name() + "'");
            case Term::Kind::Const: {
                auto it = sig->tau.find(t.name());
                if (it == sig->tau.end())
                    throw std::invalid_argument("unknown constant '" + t.name() + "'");
                return of_impl(it->second);
            }
            case Term::Kind::App: {
                MTypeP tf = infer(t.fun(), ctx);
                MTypeP ta = infer(t.arg(), ctx);
                MTypeP res = meta();
                try {
                    unify(tf, arrow(ta, res));
                } catch (const std::invalid_argument& ex) {
                    throw std::invalid_argument(std::string(ex.what()) + " in application '" +
                                                repr(t) + "'");
                }
                return res;
            }
            case Term::Kind::Abs: {
                ctx.emplace_back(t.name(), meta());
                MTypeP body = infer(t.body(), ctx);
                MTypeP a = ctx.back().second;
                ctx.pop_back();
                return arrow(a, body);
            }
        }
        throw std::logic_error("unreachable");
    }
};

// Shared inference entry: linearity and context checks, then inference, then
// an optional unification against an expected type before resolving.
ImplType infer_impl(const Signature& sig, const TypingContext& ctx, const Term& t,
                    const ImplType* expected) {
    auto uses = linear_uses(t);
    std::set<std::string> declared;
    for (const auto& [x, ty] : ctx) {
        if (!declared.insert(x).second)
            throw std::invalid_argument("variable '" + x + "' declared twice in the context");
        if (!uses.count(x))
            throw std::invalid_argument("context variable '" + x + "' is never used");
    }
    for (const auto& [x, n] : uses)
        if (!declared.count(x))
            throw std::invalid_argument("unbound variable '" + x + "'");

    Infer inf{&sig, {}, 0};
    std::vector<std::pair<std::string, MTypeP>> mctx;
    for (const auto& [x, ty] : ctx) mctx.emplace_back(x, inf.of_impl(ty));
    MTypeP ty = inf.infer(t, mctx);
    if (expected) inf.unify(ty, inf.of_impl(*expected));
    return inf.resolve(ty);
}

}  // namespace

ImplType infer_type(const Signature& sig, const TypingContext& ctx, const Term& t) {
    return infer_impl(sig, ctx, t, nullptr);
}

// ---------------------------------------------------------------------------
// Interpretation

Boundary type_boundary(const ImplType& t, const std::map<std::string, Boundary>& atoms) {
    if (t.kind() == ImplType::Kind::Atom) {
        auto it = atoms.find(t.name());
        if (it == atoms.end())
            throw std::invalid_argument("no boundary for atomic type '" + t.name() + "'");
        return it->second;
    }
    return tensor(dual(type_boundary(t.from(), atoms)), type_boundary(t.to(), atoms));
}

Interpretation standard_interpretation(const Alphabet& alphabet) {
    Interpretation env;
    env.atoms.emplace("O", Boundary{{Tag::Right}});
    for (Symbol s = 0; s < static_cast<Symbol>(alphabet.size()); ++s)
        env.constants.emplace(alphabet.token(s), word_diagram(Word{s}));
    return env;
}

namespace {

// Transpose over the last source factor a: X (x) A -> B becomes
// X -> A* (x) B. A pure port re-indexing; tags flip along with the side, so
// the canonical edge orientation is preserved.
Cowordism curry_last(const Cowordism& f, const Boundary& a) {
    auto na = static_cast<int32_t>(a.size());
    auto nx = static_cast<int32_t>(f.source().size()) - na;
    Boundary src{std::vector<Tag>(f.source().tags.begin(), f.source().tags.begin() + nx)};
    Boundary tgt = tensor(dual(a), f.target());
    auto remap = [&](Port p) {
        if (p.side == Port::Side::Source)
            return p.index < nx ? Port::src(p.index) : Port::tgt(p.index - nx);
        return Port::tgt(na + p.index);
    };
    std::vector<CwEdge> es;
    es.reserve(f.edges().size());
    for (const auto& e : f.edges()) es.push_back(CwEdge{remap(e.from), remap(e.to), e.label});
    return Cowordism(std::move(src), std::move(tgt), std::move(es), f.cycles());
}

}  // namespace

Cowordism interpret_term(const Signature& sig, const Interpretation& env, const Term& t,
                         const ImplType* expected) {
    // Inference with per-subterm resolution: rerun the shared engine, keeping
    // the metavariable of every binder so variable boundaries are available.
    linear_uses(t);
    int ctr = 0;
    Term ft = freshen(t, ctr);

    Infer inf{&sig, {}, 0};
    std::map<std::string, MTypeP> binder_types;

    // local recursive inference that records binder metas by (fresh) name
    std::function<MTypeP(const Term&, std::vector<std::pair<std::string, MTypeP>>&)> infer_rec =
        [&](const Term& u, std::vector<std::pair<std::string, MTypeP>>& ctx) -> MTypeP {
        switch (u.kind()) {
            case Term::Kind::Var:
                for (auto it = ctx.rbegin(); it != ctx.rend(); ++it)
                    if (it->first == u.name()) return it->second;
                throw std::invalid_argument("unbound variable '" + u.name() + "'");
            case Term::Kind::Const: {
                auto it = sig.tau.find(u.name());
                if (it == sig.tau.end())
                    throw std::invalid_argument("unknown constant '" + u.name() + "'");
                return inf.of_impl(it->second);
            }
            case Term::Kind::App: {
                MTypeP tf = infer_rec(u.fun(), ctx);
                MTypeP ta = infer_rec(u.arg(), ctx);
                MTypeP res = inf.meta();
                try {
                    inf.unify(tf, inf.arrow(ta, res));
                } catch (const std::invalid_argument& ex) {
                    throw std::invalid_argument(std::string(ex.what()) + " in application '" +
                                                repr(u) + "'");
                }
                return res;
            }
            case Term::Kind::Abs: {
                MTypeP a = inf.meta();
                binder_types.emplace(u.name(), a);
                ctx.emplace_back(u.name(), a);
                MTypeP body = infer_rec(u.body(), ctx);
                ctx.pop_back();
                return inf.arrow(a, body);
            }
        }
        throw std::logic_error("unreachable");
    };

    std::vector<std::pair<std::string, MTypeP>> mctx;
    MTypeP root = infer_rec(ft, mctx);
    if (expected) inf.unify(root, inf.of_impl(*expected));
    inf.resolve(root);  // force a fully determined overall type

    std::map<std::string, ImplType> var_types;
    for (const auto& [x, mt] : binder_types) var_types.emplace(x, inf.resolve(mt));

    auto bd = [&](const ImplType& ty) { return type_boundary(ty, env.atoms); };

    // Values of judgements together with the context order on the source and
    // the resolved type, computed structurally.
    struct Res {
        Cowordism value;
        std::vector<std::string> ctx;
        ImplType type;
    };
    std::function<Res(const Term&)> build = [&](const Term& u) -> Res {
        switch (u.kind()) {
            case Term::Kind::Var: {
                ImplType ty = var_types.at(u.name());
                return Res{identity(bd(ty)), {u.name()}, ty};
            }
            case Term::Kind::Const: {
                auto it = env.constants.find(u.name());
                if (it == env.constants.end())
                    throw std::invalid_argument("no value for constant '" + u.name() + "'");
                ImplType ty = infer_type(sig, {}, u);
                return Res{it->second, {}, ty};
            }
            case Term::Kind::App: {
                Res arg = build(u.arg());
                Res fun = build(u.fun());
                if (fun.type.kind() != ImplType::Kind::Arrow)
                    throw std::logic_error("application of a non-arrow after inference");
                ImplType res_ty = fun.type.to();
                Cowordism m = compose(tensor(arg.value, fun.value),
                                      evaluation(bd(fun.type.from()), bd(res_ty)));
                std::vector<std::string> ctx = arg.ctx;
                ctx.insert(ctx.end(), fun.ctx.begin(), fun.ctx.end());
                return Res{std::move(m), std::move(ctx), res_ty};
            }
            case Term::Kind::Abs: {
                Res body = build(u.body());
                ImplType xty = var_types.at(u.name());
                auto pos = std::find(body.ctx.begin(), body.ctx.end(), u.name());
                if (pos == body.ctx.end())
                    throw std::logic_error("binder lost during interpretation");
                size_t i = static_cast<size_t>(pos - body.ctx.begin());
                size_t n = body.ctx.size();
                Cowordism m = body.value;
                if (i + 1 != n) {
                    // reorder the source so the bound variable comes last
                    std::vector<Boundary> newblocks;
                    std::vector<std::string> newctx;
                    for (size_t k = 0; k < n; ++k)
                        if (k != i) {
                            newblocks.push_back(bd(var_types.at(body.ctx[k])));
                            newctx.push_back(body.ctx[k]);
                        }
                    newblocks.push_back(bd(xty));
                    std::vector<int> perm;
                    for (size_t k = 0; k < n; ++k) {
                        if (k < i)
                            perm.push_back(static_cast<int>(k));
                        else if (k == i)
                            perm.push_back(static_cast<int>(n - 1));
                        else
                            perm.push_back(static_cast<int>(k - 1));
                    }
                    m = compose(permute(newblocks, perm), m);
                    body.ctx = std::move(newctx);
                } else {
                    body.ctx.pop_back();
                }
                return Res{curry_last(m, bd(xty)), body.ctx,
                           ImplType::arrow(xty, body.type)};
            }
        }
        throw std::logic_error("unreachable");
    };

    Res r = build(ft);
    if (!r.ctx.empty()) throw std::invalid_argument("interpret_term needs a closed term");
    return r.value;
}

ImplType str_type() { return ImplType::arrow(ImplType::atom("O"), ImplType::atom("O")); }

Signature string_signature(const Alphabet& alphabet) {
    Signature sig;
    sig.atom_order = {"O"};
    for (const std::string& tok : alphabet.tokens()) {
        sig.const_order.push_back(tok);
        sig.tau.emplace(tok, str_type());
    }
    return sig;
}

Word string_readback(const Cowordism& c) {
    Boundary want{{Tag::Left, Tag::Right}};
    if (!c.source().tags.empty() || c.target() != want || !c.regular() ||
        c.edges().size() != 1)
        throw std::invalid_argument("not a string value: expected a single edge 1 -> [L,R]");
    return c.edges()[0].label;
}

// ---------------------------------------------------------------------------
// Signatures, maps, grammars

void Signature::validate() const {
    std::set<std::string> atoms(atom_order.begin(), atom_order.end());
    if (atoms.size() != atom_order.size())
        throw std::invalid_argument("duplicate atomic type");
    if (const_order.size() != tau.size())
        throw std::invalid_argument("constant list and typing disagree");
    std::set<std::string> consts;
    for (const std::string& c : const_order) {
        if (!consts.insert(c).second)
            throw std::invalid_argument("constant '" + c + "' declared twice");
        if (!tau.count(c)) throw std::invalid_argument("constant '" + c + "' has no type");
    }
    auto check_atoms = [&](const ImplType& t, auto&& self) -> void {
        if (t.kind() == ImplType::Kind::Atom) {
            if (!atoms.count(t.name()))
                throw std::invalid_argument("type uses undeclared atom '" + t.name() + "'");
        } else {
            self(t.from(), self);
            self(t.to(), self);
        }
    };
    for (const auto& [c, t] : tau) check_atoms(t, check_atoms);
}

ImplType apply_type_map(const SignatureMap& m, const ImplType& t) {
    if (t.kind() == ImplType::Kind::Atom) {
        auto it = m.type_map.find(t.name());
        if (it == m.type_map.end())
            throw std::invalid_argument("no type-map image for atom '" + t.name() + "'");
        return it->second;
    }
    return ImplType::arrow(apply_type_map(m, t.from()), apply_type_map(m, t.to()));
}

Term apply_const_map(const SignatureMap& m, const Term& t) {
    switch (t.kind()) {
        case Term::Kind::Var:
            return t;
        case Term::Kind::Const: {
            auto it = m.const_map.find(t.name());
            if (it == m.const_map.end())
                throw std::invalid_argument("no lexicon term for constant '" + t.name() + "'");
            return it->second;
        }
        case Term::Kind::App:
            return Term::app(apply_const_map(m, t.fun()), apply_const_map(m, t.arg()));
        case Term::Kind::Abs:
            return Term::abs(t.name(), apply_const_map(m, t.body()));
    }
    return t;
}

void Acg::validate() const {
    abstract_sig.validate();
    Signature strsig = string_signature(alphabet);
    for (const std::string& a : abstract_sig.atom_order) {
        auto it = lexicon.type_map.find(a);
        if (it == lexicon.type_map.end())
            throw std::invalid_argument("atom '" + a + "' has no typemap");
        auto check = [&](const ImplType& t, auto&& self) -> void {
            if (t.kind() == ImplType::Kind::Atom) {
                if (t.name() != "O")
                    throw std::invalid_argument("typemap of '" + a +
                                                "' uses atom '" + t.name() +
                                                "'; only O (or str) is allowed");
            } else {
                self(t.from(), self);
                self(t.to(), self);
            }
        };
        check(it->second, check);
    }
    if (lexicon.type_map.size() != abstract_sig.atom_order.size())
        throw std::invalid_argument("typemap mentions an undeclared atom");
    for (const std::string& c : abstract_sig.const_order) {
        auto it = lexicon.const_map.find(c);
        if (it == lexicon.const_map.end())
            throw std::invalid_argument("constant '" + c + "' has no lexicon term");
        ImplType expected = apply_type_map(lexicon, abstract_sig.tau.at(c));
        try {
            infer_impl(strsig, {}, it->second, &expected);
        } catch (const std::invalid_argument& ex) {
            throw std::invalid_argument("lexicon term for '" + c + "' does not have type " +
                                        repr(expected) + ": " + ex.what());
        }
    }
    if (lexicon.const_map.size() != abstract_sig.const_order.size())
        throw std::invalid_argument("lexicon mentions an undeclared constant");
    if (std::find(abstract_sig.atom_order.begin(), abstract_sig.atom_order.end(), start) ==
        abstract_sig.atom_order.end())
        throw std::invalid_argument("start atom '" + start + "' is not declared");
    if (lexicon.type_map.at(start) != str_type())
        throw std::invalid_argument("start atom '" + start + "' must map to str");
}

namespace {

// typemap types are over the single atom O, with "str" sugar for O -o O
ImplType parse_str_type(Lexer& lx) {
    ImplType lhs;
    if (lx.accept_symbol("(")) {
        lhs = parse_str_type(lx);
        lx.expect_symbol(")");
    } else {
        Token a = lx.expect_ident("an atomic type");
        lhs = (a.text == "str") ? str_type() : ImplType::atom(a.text);
    }
    if (lx.accept_symbol("-o")) return ImplType::arrow(lhs, parse_str_type(lx));
    return lhs;
}

}  // namespace

Acg parse_acg(const std::string& text, const std::string& filename) {
    Lexer lx(text, filename);
    Acg g;
    std::set<std::string> atoms, consts;
    bool saw_alphabet = false;
    while (!lx.at_end()) {
        if (lx.accept_ident("alphabet")) {
            saw_alphabet = true;
            for (const auto& tok : lx.rest_of_line_words()) g.alphabet.add(tok);
        } else if (lx.accept_ident("abstract")) {
            Token kw = lx.expect_ident("'atom'");
            if (kw.text != "atom") lx.fail("expected 'atom', got '" + kw.text + "'", kw.line);
            do {
                Token name = lx.expect_ident("an atom name");
                if (!atoms.insert(name.text).second)
                    lx.fail("atom '" + name.text + "' declared twice", name.line);
                g.abstract_sig.atom_order.push_back(name.text);
            } while (!lx.accept_symbol(";"));
        } else if (lx.accept_ident("const")) {
            Token name = lx.expect_ident("a constant name");
            if (!consts.insert(name.text).second)
                lx.fail("constant '" + name.text + "' declared twice", name.line);
            lx.expect_symbol(":");
            ImplType ty = parse_impl_type(lx);
            lx.expect_symbol(";");
            g.abstract_sig.const_order.push_back(name.text);
            g.abstract_sig.tau.emplace(name.text, ty);
        } else if (lx.accept_ident("typemap")) {
            Token name = lx.expect_ident("an atom name");
            if (g.lexicon.type_map.count(name.text))
                lx.fail("typemap for '" + name.text + "' given twice", name.line);
            lx.expect_symbol("=");
            ImplType ty = parse_str_type(lx);
            lx.expect_symbol(";");
            g.lexicon.type_map.emplace(name.text, ty);
        } else if (lx.accept_ident("lexicon")) {
            Token name = lx.expect_ident("a constant name");
            if (g.lexicon.const_map.count(name.text))
                lx.fail("lexicon for '" + name.text + "' given twice", name.line);
            lx.expect_symbol("=");
            std::vector<std::string> bound;
            Term t = parse_term_at(lx, bound);
            lx.expect_symbol(";");
            g.lexicon.const_map.emplace(name.text, t);
        } else if (lx.accept_ident("start")) {
            if (!g.start.empty()) lx.fail("start declared twice");
            g.start = lx.expect_ident("the start atom").text;
            lx.expect_symbol(";");
        } else {
            Token t = lx.next();
            lx.fail("expected a declaration (alphabet, abstract atom, const, typemap, "
                    "lexicon, start), got '" +
                        t.text + "'",
                    t.line);
        }
    }
    if (!saw_alphabet) lx.fail("no alphabet declared", 1);
    if (g.start.empty()) lx.fail("no start atom declared", 1);
    // binder names may not collide with letters (constants of the lexicon)
    for (const auto& [c, t] : g.lexicon.const_map) {
        auto walk = [&](const Term& u, auto&& self) -> void {
            if (u.kind() == Term::Kind::Abs) {
                if (g.alphabet.contains(u.name()))
                    lx.fail("in the lexicon for '" + c + "': binder '" + u.name() +
                                "' is also a letter",
                            1);
                self(u.body(), self);
            } else if (u.kind() == Term::Kind::App) {
                self(u.fun(), self);
                self(u.arg(), self);
            }
        };
        walk(t, walk);
    }
    try {
        g.validate();
    } catch (const std::invalid_argument& ex) {
        lx.fail(ex.what(), 1);
    }
    return g;
}

Acg load_acg(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_acg(ss.str(), path);
}

// ---------------------------------------------------------------------------
// Encoding into a grammar of typed cowordisms

namespace {

Formula ll_formula(const ImplType& t) {
    if (t.kind() == ImplType::Kind::Atom) return Formula::lit(t.name());
    return loli(ll_formula(t.from()), ll_formula(t.to()));
}

// Port relayout raw -> canonical for one atom: the i-th Left port maps to the
// i-th Left port, likewise Right. The same index map works for the dual
// layouts (both sides flip).
std::vector<int> layout_map(const Boundary& raw, const Boundary& canon) {
    std::vector<int> map(raw.size(), -1);
    for (Tag side : {Tag::Left, Tag::Right}) {
        std::vector<int> rawixs, canixs;
        for (size_t i = 0; i < raw.size(); ++i)
            if (raw.tags[i] == side) rawixs.push_back(static_cast<int>(i));
        for (size_t i = 0; i < canon.size(); ++i)
            if (canon.tags[i] == side) canixs.push_back(static_cast<int>(i));
        for (size_t k = 0; k < rawixs.size(); ++k)
            map[static_cast<size_t>(rawixs[k])] = canixs[k];
    }
    return map;
}

// Empty-labeled wiring src -> tgt along a tag-preserving index bijection.
Cowordism bijection_wiring(const Boundary& src, const Boundary& tgt,
                           const std::vector<int>& to_tgt) {
    std::vector<CwEdge> es;
    for (size_t i = 0; i < src.size(); ++i) {
        int j = to_tgt[i];
        if (src.tags[i] == Tag::Left)
            es.push_back(CwEdge{Port::src(static_cast<int32_t>(i)), Port::tgt(j), {}});
        else
            es.push_back(CwEdge{Port::tgt(j), Port::src(static_cast<int32_t>(i)), {}});
    }
    return Cowordism(src, tgt, std::move(es));
}

// Isomorphism from the formula boundary under the raw atom layouts to the one
// under the canonical layouts, literal occurrence by literal occurrence.
Cowordism formula_relayout(const Formula& f, const AtomBoundaries& raw,
                           const AtomBoundaries& canon,
                           const std::map<std::string, std::vector<int>>& maps) {
    Boundary src = formula_boundary(f, raw);
    Boundary tgt = formula_boundary(f, canon);
    std::vector<int> to_tgt(src.size());
    size_t off = 0;  // both sides advance in lockstep (equal per-literal sizes)
    for (const auto& [atom, positive] : literals_of(f)) {
        const std::vector<int>& m = maps.at(atom);
        for (size_t i = 0; i < m.size(); ++i)
            to_tgt[off + i] = static_cast<int>(off) + m[i];
        off += m.size();
    }
    return bijection_wiring(src, tgt, to_tgt);
}

}  // namespace

Llg acg_to_llg(const Acg& g) {
    g.validate();
    Interpretation env = standard_interpretation(g.alphabet);
    Signature strsig = string_signature(g.alphabet);

    Llg out;
    out.alphabet = g.alphabet;
    out.start = g.start;
    AtomBoundaries raw;
    std::map<std::string, std::vector<int>> maps;
    for (const std::string& a : g.abstract_sig.atom_order) {
        Boundary rb = type_boundary(g.lexicon.type_map.at(a), env.atoms);
        Boundary cb = boundary_from_counts(rb.lefts(), rb.rights());
        raw.emplace(a, rb);
        maps.emplace(a, layout_map(rb, cb));
        out.atom_order.push_back(a);
        out.atoms.emplace(a, cb);
    }
    for (const std::string& c : g.abstract_sig.const_order) {
        ImplType expected = apply_type_map(g.lexicon, g.abstract_sig.tau.at(c));
        Cowordism val = interpret_term(strsig, env, g.lexicon.const_map.at(c), &expected);
        Formula type = ll_formula(g.abstract_sig.tau.at(c));
        Cowordism iso = formula_relayout(type, raw, out.atoms, maps);
        out.lexicon.push_back(LexEntry{c, type, compose(val, iso)});
    }
    out.validate();
    return out;
}

Cowordism graph_of_term(const Acg& g, const Term& t) {
    ImplType ty = infer_type(g.abstract_sig, {}, t);
    Interpretation env = standard_interpretation(g.alphabet);
    Signature strsig = string_signature(g.alphabet);
    ImplType expected = apply_type_map(g.lexicon, ty);
    Cowordism val = interpret_term(strsig, env, apply_const_map(g.lexicon, t), &expected);

    AtomBoundaries raw;
    AtomBoundaries canon;
    std::map<std::string, std::vector<int>> maps;
    for (const std::string& a : g.abstract_sig.atom_order) {
        Boundary rb = type_boundary(g.lexicon.type_map.at(a), env.atoms);
        Boundary cb = boundary_from_counts(rb.lefts(), rb.rights());
        raw.emplace(a, rb);
        canon.emplace(a, cb);
        maps.emplace(a, layout_map(rb, cb));
    }
    return compose(val, formula_relayout(ll_formula(ty), raw, canon, maps));
}

}  // namespace cow
