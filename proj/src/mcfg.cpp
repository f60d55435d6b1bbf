#include "cowordism/mcfg.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "cowordism/lexer.hpp"

namespace cow {

// ---------------------------------------------------------------------------
// Ordinary MCFG
// ---------------------------------------------------------------------------

void Mcfg::validate() const {
    if (start.empty()) throw std::invalid_argument("grammar: no start nonterminal");
    auto sit = arity.find(start);
    if (sit == arity.end())
        throw std::invalid_argument("grammar: start nonterminal '" + start + "' unknown");
    if (sit->second != 1)
        throw std::invalid_argument("grammar: start nonterminal '" + start + "' must be unary");
    for (const auto& [nt, k] : arity)
        if (k < 1)
            throw std::invalid_argument("grammar: nonterminal '" + nt + "' has arity < 1");
    for (const McfgRule& r : rules) {
        auto at = [&](const std::string& nt) {
            auto it = arity.find(nt);
            if (it == arity.end())
                throw std::invalid_argument("rule: unknown nonterminal '" + nt + "'");
            return it->second;
        };
        if (static_cast<int>(r.components.size()) != at(r.lhs))
            throw std::invalid_argument("rule for '" + r.lhs +
                                        "': component count does not match its arity");
        std::vector<std::vector<int>> used;
        for (const auto& b : r.rhs) used.push_back(std::vector<int>(at(b), 0));
        for (const auto& comp : r.components)
            for (const McfgItem& it : comp) {
                if (it.is_var()) {
                    if (it.premise >= static_cast<int>(r.rhs.size()) ||
                        it.arg >= static_cast<int>(used[it.premise].size()))
                        throw std::invalid_argument("rule for '" + r.lhs +
                                                    "': variable out of range");
                    ++used[it.premise][it.arg];
                } else if (it.letter < 0 ||
                           static_cast<size_t>(it.letter) >= alphabet.size()) {
                    throw std::invalid_argument("rule for '" + r.lhs +
                                                "': letter outside the alphabet");
                }
            }
        for (const auto& u : used)
            for (int c : u)
                if (c != 1)
                    throw std::invalid_argument(
                        "rule for '" + r.lhs +
                        "': every premise argument must be used exactly once");
    }
}

Mcfg parse_mcfg(const std::string& text, const std::string& filename) {
    Lexer lx(text, filename);
    Mcfg g;
    auto note_arity = [&](const Token& nt, int k) {
        auto it = g.arity.find(nt.text);
        if (it == g.arity.end()) {
            g.arity.emplace(nt.text, k);
            g.nt_order.push_back(nt.text);
        } else if (it->second != k) {
            lx.fail("nonterminal '" + nt.text + "' used with arity " +
                        std::to_string(it->second) + " and " + std::to_string(k),
                    nt.line);
        }
    };
    while (!lx.at_end()) {
        if (lx.accept_ident("terminals")) {
            while (!lx.accept_symbol(";")) g.alphabet.add(lx.expect_ident("a terminal").text);
        } else if (lx.accept_ident("start")) {
            if (!g.start.empty()) lx.fail("start declared twice");
            g.start = lx.expect_ident("the start nonterminal").text;
            lx.expect_symbol(";");
        } else {
            Token lhs = lx.expect_ident("a nonterminal");
            McfgRule r;
            r.lhs = lhs.text;
            lx.expect_symbol("(");
            std::vector<std::vector<Token>> raw;
            do {
                raw.emplace_back();
                while (lx.peek().kind == Token::Kind::Ident) raw.back().push_back(lx.next());
                if (raw.back().empty())
                    lx.fail("empty component; write 'eps' for the empty word");
            } while (lx.accept_symbol(","));
            lx.expect_symbol(")");
            std::map<std::string, std::pair<int, int>> vars;
            if (!lx.accept_symbol(".")) {
                lx.expect_symbol(":-");
                do {
                    Token b = lx.expect_ident("a premise nonterminal");
                    lx.expect_symbol("(");
                    int args = 0;
                    do {
                        Token v = lx.expect_ident("a variable");
                        if (g.alphabet.contains(v.text))
                            lx.fail("variable '" + v.text + "' is also a terminal", v.line);
                        if (!vars.emplace(v.text,
                                          std::make_pair(static_cast<int>(r.rhs.size()), args))
                                 .second)
                            lx.fail("variable '" + v.text + "' bound twice", v.line);
                        ++args;
                    } while (lx.accept_symbol(","));
                    lx.expect_symbol(")");
                    note_arity(b, args);
                    r.rhs.push_back(b.text);
                } while (lx.accept_symbol(","));
                lx.expect_symbol(".");
            }
            for (const auto& comp : raw) {
                r.components.emplace_back();
                for (const Token& t : comp) {
                    if (t.text == "eps") {
                        if (comp.size() != 1)
                            lx.fail("'eps' must stand alone in a component", t.line);
                        continue;
                    }
                    auto vit = vars.find(t.text);
                    McfgItem item;
                    if (vit != vars.end()) {
                        item.premise = vit->second.first;
                        item.arg = vit->second.second;
                    } else if (g.alphabet.contains(t.text)) {
                        item.letter = g.alphabet.id(t.text);
                    } else {
                        lx.fail("'" + t.text + "' is neither a variable nor a terminal",
                                t.line);
                    }
                    r.components.back().push_back(item);
                }
            }
            note_arity(lhs, static_cast<int>(r.components.size()));
            // exactly-once use of every variable, reported with this rule's line
            std::map<std::pair<int, int>, int> used;
            for (const auto& comp : r.components)
                for (const McfgItem& it : comp)
                    if (it.is_var()) ++used[{it.premise, it.arg}];
            for (const auto& [name, pa] : vars)
                if (used[pa] != 1)
                    lx.fail("variable '" + name + "' must be used exactly once on the left",
                            lhs.line);
            g.rules.push_back(std::move(r));
        }
    }
    try {
        g.validate();
    } catch (const std::invalid_argument& ex) {
        lx.fail(ex.what(), 1);
    }
    return g;
}

Mcfg load_mcfg(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_mcfg(ss.str(), path);
}

std::string write_mcfg(const Mcfg& g) {
    std::ostringstream out;
    out << "terminals";
    for (const auto& t : g.alphabet.tokens()) out << ' ' << t;
    out << ";\n";
    out << "start " << g.start << ";\n";
    for (const McfgRule& r : g.rules) {
        // flat variable names x1, x2, ... across premises, left to right
        std::vector<int> offset(r.rhs.size() + 1, 0);
        for (size_t i = 0; i < r.rhs.size(); ++i)
            offset[i + 1] = offset[i] + g.arity.at(r.rhs[i]);
        auto var = [&](int premise, int arg) {
            return "x" + std::to_string(offset[premise] + arg + 1);
        };
        out << r.lhs << '(';
        for (size_t m = 0; m < r.components.size(); ++m) {
            if (m) out << ", ";
            if (r.components[m].empty()) {
                out << "eps";
                continue;
            }
            for (size_t i = 0; i < r.components[m].size(); ++i) {
                const McfgItem& it = r.components[m][i];
                if (i) out << ' ';
                if (it.is_var())
                    out << var(it.premise, it.arg);
                else
                    out << g.alphabet.token(it.letter);
            }
        }
        out << ')';
        if (!r.rhs.empty()) {
            out << " :- ";
            for (size_t i = 0; i < r.rhs.size(); ++i) {
                if (i) out << ", ";
                out << r.rhs[i] << '(';
                for (int a = 0; a < g.arity.at(r.rhs[i]); ++a)
                    out << (a ? ", " : "") << var(static_cast<int>(i), a);
                out << ')';
            }
        }
        out << ".\n";
    }
    return out.str();
}

PredicateFormula substitute(const McfgRule& r, const std::vector<PredicateFormula>& args) {
    if (args.size() != r.rhs.size())
        throw std::invalid_argument("substitute: argument count mismatch");
    for (size_t i = 0; i < args.size(); ++i)
        if (args[i].nonterminal != r.rhs[i])
            throw std::invalid_argument("substitute: argument " + std::to_string(i) +
                                        " is not a '" + r.rhs[i] + "' formula");
    PredicateFormula out;
    out.nonterminal = r.lhs;
    for (const auto& comp : r.components) {
        Word w;
        for (const McfgItem& it : comp) {
            if (it.is_var()) {
                const Word& s = args[it.premise].words.at(it.arg);
                w.insert(w.end(), s.begin(), s.end());
            } else {
                w.push_back(it.letter);
            }
        }
        out.words.push_back(std::move(w));
    }
    return out;
}

namespace {

int total_length(const std::vector<Word>& words) {
    int n = 0;
    for (const Word& w : words) n += static_cast<int>(w.size());
    return n;
}

}  // namespace

std::set<PredicateFormula> derive(const Mcfg& g, int max_total_len) {
    g.validate();
    std::map<std::string, std::set<std::vector<Word>>> have;
    for (const auto& [nt, k] : g.arity) have[nt];  // ensure keys
    bool changed = true;
    while (changed) {
        changed = false;
        // snapshot so iteration order is stable while inserting
        std::map<std::string, std::vector<std::vector<Word>>> snap;
        for (const auto& [nt, s] : have) snap.emplace(nt, std::vector(s.begin(), s.end()));
        for (const McfgRule& r : g.rules) {
            std::vector<const std::vector<std::vector<Word>>*> pools;
            bool feasible = true;
            for (const auto& b : r.rhs) {
                pools.push_back(&snap.at(b));
                if (pools.back()->empty()) feasible = false;
            }
            if (!feasible) continue;
            std::vector<size_t> pick(r.rhs.size(), 0);
            while (true) {
                std::vector<PredicateFormula> args;
                for (size_t i = 0; i < pick.size(); ++i)
                    args.push_back(PredicateFormula{r.rhs[i], (*pools[i])[pick[i]]});
                PredicateFormula f = substitute(r, args);
                if (total_length(f.words) <= max_total_len)
                    changed |= have[r.lhs].insert(std::move(f.words)).second;
                size_t i = 0;
                for (; i < pick.size(); ++i) {
                    if (++pick[i] < pools[i]->size()) break;
                    pick[i] = 0;
                }
                if (i == pick.size()) break;
                if (pick.empty()) break;
            }
        }
    }
    std::set<PredicateFormula> out;
    for (auto& [nt, tuples] : have)
        for (auto& t : tuples) out.insert(PredicateFormula{nt, t});
    return out;
}

std::vector<Word> mcfg_language(const Mcfg& g, int max_len) {
    std::set<Word> words;
    for (const PredicateFormula& f : derive(g, max_len))
        if (f.nonterminal == g.start) words.insert(f.words.at(0));
    std::vector<Word> out(words.begin(), words.end());
    std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Cowordism reading
// ---------------------------------------------------------------------------

Boundary boundary_of(int arity) { return boundary_from_counts(arity, arity); }

Cowordism graph_of(const Mcfg& g, const McfgRule& r) {
    g.validate();  // cheap at our scale; guarantees the recipe below is defined
    std::vector<int> offset(r.rhs.size() + 1, 0);
    for (size_t i = 0; i < r.rhs.size(); ++i)
        offset[i + 1] = offset[i] + 2 * g.arity.at(r.rhs[i]);
    auto l_src = [&](int i, int j) { return Port::src(offset[i] + 2 * j); };
    auto r_src = [&](int i, int j) { return Port::src(offset[i] + 2 * j + 1); };

    std::vector<Boundary> srcs;
    for (const auto& b : r.rhs) srcs.push_back(boundary_of(g.arity.at(b)));
    Boundary source = tensor_all(srcs);
    Boundary target = boundary_of(static_cast<int>(r.components.size()));

    std::vector<CwEdge> edges;
    for (size_t m = 0; m < r.components.size(); ++m) {
        Port from = Port::tgt(2 * m + 1);  // lhs right port m
        Word label;
        for (const McfgItem& it : r.components[m]) {
            if (it.is_var()) {
                edges.push_back(CwEdge{from, r_src(it.premise, it.arg), std::move(label)});
                label = {};
                from = l_src(it.premise, it.arg);
            } else {
                label.push_back(it.letter);
            }
        }
        edges.push_back(CwEdge{from, Port::tgt(2 * m), std::move(label)});  // lhs left port m
    }
    return Cowordism(source, target, std::move(edges));
}

Cowordism represent(const PredicateFormula& f) {
    std::vector<CwEdge> edges;
    for (size_t m = 0; m < f.words.size(); ++m)
        edges.push_back(CwEdge{Port::tgt(2 * m + 1), Port::tgt(2 * m), f.words[m]});
    return Cowordism(Boundary{}, boundary_of(static_cast<int>(f.words.size())),
                     std::move(edges));
}

Llg mcfg_to_llg(const Mcfg& g) {
    g.validate();
    Llg out;
    out.alphabet = g.alphabet;
    out.start = g.start;
    for (const auto& nt : g.nt_order) {
        out.atom_order.push_back(nt);
        out.atoms.emplace(nt, boundary_of(g.arity.at(nt)));
    }
    for (size_t i = 0; i < g.rules.size(); ++i) {
        const McfgRule& r = g.rules[i];
        Formula type = Formula::lit(r.lhs);
        if (!r.rhs.empty()) {
            Formula acc = Formula::neglit(r.rhs[0]);
            for (size_t j = 1; j < r.rhs.size(); ++j)
                acc = Formula::par(acc, Formula::neglit(r.rhs[j]));
            type = Formula::par(acc, type);
        }
        out.lexicon.push_back(LexEntry{"p" + std::to_string(i + 1), type,
                                       name_of(graph_of(g, r))});
    }
    out.validate();
    return out;
}

// ---------------------------------------------------------------------------
// Extended grammars
// ---------------------------------------------------------------------------

void ExtMcfg::validate() const {
    if (start.empty()) throw std::invalid_argument("extended grammar: no start type");
    auto sit = types.find(start);
    if (sit == types.end())
        throw std::invalid_argument("extended grammar: start type '" + start + "' unknown");
    if (sit->second != Boundary{{Tag::Left, Tag::Right}})
        throw std::invalid_argument(
            "extended grammar: start type must have one left and one right port");
    for (const ExtRule& r : rules) {
        auto boundary = [&](const std::string& t) {
            auto it = types.find(t);
            if (it == types.end())
                throw std::invalid_argument("extended rule: unknown type '" + t + "'");
            return it->second;
        };
        std::vector<Boundary> srcs;
        for (const auto& b : r.rhs) srcs.push_back(boundary(b));
        if (r.value.source() != tensor_all(srcs) || r.value.target() != boundary(r.lhs))
            throw std::invalid_argument("extended rule for '" + r.lhs +
                                        "': cowordism boundaries do not match the types");
        for (auto& [sym, cnt] : letters(r.value)) {
            (void)cnt;
            if (sym < 0 || static_cast<size_t>(sym) >= alphabet.size())
                throw std::invalid_argument("extended rule for '" + r.lhs +
                                            "': uses a letter outside the alphabet");
        }
    }
}

ExtMcfg mcfg_as_extended(const Mcfg& g) {
    g.validate();
    ExtMcfg out;
    out.alphabet = g.alphabet;
    out.start = g.start;
    out.type_order = g.nt_order;
    for (const auto& [nt, k] : g.arity) out.types.emplace(nt, boundary_of(k));
    for (const McfgRule& r : g.rules)
        out.rules.push_back(ExtRule{r.lhs, r.rhs, graph_of(g, r)});
    return out;
}

namespace {

int total_letters(const Cowordism& v) {
    int n = 0;
    for (auto& [sym, cnt] : letters(v)) {
        (void)sym;
        n += cnt;
    }
    return n;
}

// Generic, exact bounded fixpoint over rule applications. `combine` returns
// the composed value or nothing when the candidate must be dropped.
template <class Combine>
std::map<std::string, std::set<Cowordism>> rule_fixpoint(const ExtMcfg& g, Combine&& combine) {
    std::map<std::string, std::set<Cowordism>> have;
    for (const auto& [t, b] : g.types) {
        (void)b;
        have[t];
    }
    bool changed = true;
    while (changed) {
        changed = false;
        std::map<std::string, std::vector<Cowordism>> snap;
        for (const auto& [t, s] : have) snap.emplace(t, std::vector(s.begin(), s.end()));
        for (const ExtRule& r : g.rules) {
            std::vector<const std::vector<Cowordism>*> pools;
            bool feasible = true;
            for (const auto& b : r.rhs) {
                pools.push_back(&snap.at(b));
                if (pools.back()->empty()) feasible = false;
            }
            if (!feasible) continue;
            std::vector<size_t> pick(r.rhs.size(), 0);
            while (true) {
                std::vector<Cowordism> args;
                for (size_t i = 0; i < pick.size(); ++i)
                    args.push_back((*pools[i])[pick[i]]);
                if (auto v = combine(r, args)) changed |= have[r.lhs].insert(*v).second;
                size_t i = 0;
                for (; i < pick.size(); ++i) {
                    if (++pick[i] < pools[i]->size()) break;
                    pick[i] = 0;
                }
                if (i == pick.size()) break;
                if (pick.empty()) break;
            }
        }
    }
    return have;
}

}  // namespace

std::map<std::string, std::set<Cowordism>> extended_generate(const ExtMcfg& g, int max_len) {
    g.validate();
    return rule_fixpoint(g, [&](const ExtRule& r,
                                const std::vector<Cowordism>& args) -> std::optional<Cowordism> {
        Cowordism v = compose(tensor_all(args), r.value);
        if (!v.regular() || total_letters(v) > max_len) return std::nullopt;
        return v;
    });
}

std::vector<Word> extended_language(const ExtMcfg& g, int max_len) {
    auto have = extended_generate(g, max_len);
    std::set<Word> words;
    for (const Cowordism& v : have.at(g.start)) words.insert(v.edges().at(0).label);
    std::vector<Word> out(words.begin(), words.end());
    std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

std::map<std::string, std::set<Cowordism>> possible_patterns(const ExtMcfg& g) {
    g.validate();
    return rule_fixpoint(g, [&](const ExtRule& r,
                                const std::vector<Cowordism>& args) -> std::optional<Cowordism> {
        Cowordism v = pattern(compose(tensor_all(args), r.value));
        if (!v.regular()) return std::nullopt;
        return v;
    });
}

namespace {

int pattern_index(const std::set<Cowordism>& pats, const Cowordism& p) {
    int k = 0;
    for (const Cowordism& q : pats) {
        if (q == p) return k;
        ++k;
    }
    return -1;
}

}  // namespace

ExtMcfg disambiguate(const ExtMcfg& g) {
    auto pats = possible_patterns(g);
    ExtMcfg out;
    out.alphabet = g.alphabet;
    if (pats.at(g.start).empty()) {
        // empty language: just the start type, no rules
        out.start = g.start + "#0";
        out.type_order = {out.start};
        out.types.emplace(out.start, g.types.at(g.start));
        return out;
    }
    auto name_of_pair = [&](const std::string& t, const Cowordism& p) {
        return t + "#" + std::to_string(pattern_index(pats.at(t), p));
    };
    for (const auto& t : g.type_order) {
        int k = 0;
        for (const Cowordism& p : pats.at(t)) {
            (void)p;
            std::string n = t + "#" + std::to_string(k++);
            out.type_order.push_back(n);
            out.types.emplace(n, g.types.at(t));
        }
    }
    out.start = name_of_pair(g.start, *pats.at(g.start).begin());
    for (const ExtRule& r : g.rules) {
        std::vector<std::vector<Cowordism>> pools;
        bool feasible = true;
        for (const auto& b : r.rhs) {
            pools.emplace_back(pats.at(b).begin(), pats.at(b).end());
            if (pools.back().empty()) feasible = false;
        }
        if (!feasible) continue;
        std::vector<size_t> pick(r.rhs.size(), 0);
        while (true) {
            std::vector<Cowordism> args;
            std::vector<std::string> rhs;
            for (size_t i = 0; i < pick.size(); ++i) {
                args.push_back(pools[i][pick[i]]);
                rhs.push_back(name_of_pair(r.rhs[i], pools[i][pick[i]]));
            }
            Cowordism composite = pattern(compose(tensor_all(args), r.value));
            if (composite.regular())
                out.rules.push_back(ExtRule{name_of_pair(r.lhs, composite), std::move(rhs),
                                            r.value});
            size_t i = 0;
            for (; i < pick.size(); ++i) {
                if (++pick[i] < pools[i].size()) break;
                pick[i] = 0;
            }
            if (i == pick.size()) break;
            if (pick.empty()) break;
        }
    }
    return out;
}

Mcfg simple_to_mcfg(const ExtMcfg& g) {
    auto pats = possible_patterns(g);
    for (const auto& [t, set] : pats)
        if (set.size() > 1)
            throw std::invalid_argument("not simple: type '" + t + "' has " +
                                        std::to_string(set.size()) + " possible patterns");
    Mcfg out;
    out.alphabet = g.alphabet;
    if (pats.at(g.start).empty()) {
        out.start = "T0";
        out.nt_order = {"T0"};
        out.arity.emplace("T0", 1);
        return out;
    }

    // read each rule back as a string production via letter markers
    const Symbol base = static_cast<Symbol>(g.alphabet.size());
    struct Candidate {
        std::string lhs;
        std::vector<std::string> rhs;
        std::vector<std::vector<McfgItem>> components;
    };
    std::vector<Candidate> cands;
    for (const ExtRule& r : g.rules) {
        bool feasible = true;
        for (const auto& b : r.rhs)
            if (pats.at(b).empty()) feasible = false;
        if (!feasible) continue;
        std::vector<int> offset(r.rhs.size() + 1, 0);
        std::vector<Cowordism> marked;
        for (size_t i = 0; i < r.rhs.size(); ++i) {
            const Cowordism& pi = *pats.at(r.rhs[i]).begin();
            offset[i + 1] = offset[i] + static_cast<int>(pi.edges().size());
            std::vector<CwEdge> edges;
            for (size_t j = 0; j < pi.edges().size(); ++j)
                edges.push_back(CwEdge{pi.edges()[j].from, pi.edges()[j].to,
                                       Word{base + offset[i] + static_cast<Symbol>(j)}});
            marked.push_back(Cowordism(pi.source(), pi.target(), std::move(edges)));
        }
        Cowordism composite = compose(tensor_all(marked), r.value);
        if (!composite.regular()) continue;  // closes a cycle: never part of the language
        Candidate c;
        c.lhs = r.lhs;
        c.rhs = r.rhs;
        for (const CwEdge& e : composite.edges()) {
            c.components.emplace_back();
            for (Symbol s : e.label) {
                McfgItem item;
                if (s >= base) {
                    int flat = s - base;
                    int i = 0;
                    while (offset[i + 1] <= flat) ++i;
                    item.premise = i;
                    item.arg = flat - offset[i];
                } else {
                    item.letter = s;
                }
                c.components.back().push_back(item);
            }
        }
        cands.push_back(std::move(c));
    }

    // breadth-first reachability from the start type; rename on discovery
    std::map<std::string, std::string> rename;
    std::deque<std::string> queue;
    auto discover = [&](const std::string& t) {
        if (rename.count(t)) return;
        std::string n = "T" + std::to_string(rename.size());
        rename.emplace(t, n);
        out.nt_order.push_back(n);
        out.arity.emplace(n, static_cast<int>(pats.at(t).begin()->edges().size()));
        queue.push_back(t);
    };
    discover(g.start);
    while (!queue.empty()) {
        std::string t = queue.front();
        queue.pop_front();
        for (const Candidate& c : cands)
            if (c.lhs == t)
                for (const auto& b : c.rhs) discover(b);
    }
    out.start = rename.at(g.start);
    for (const Candidate& c : cands) {
        auto it = rename.find(c.lhs);
        if (it == rename.end()) continue;
        McfgRule r;
        r.lhs = it->second;
        for (const auto& b : c.rhs) r.rhs.push_back(rename.at(b));
        r.components = c.components;
        out.rules.push_back(std::move(r));
    }
    out.validate();
    return out;
}

namespace {

bool has_tensor(const Formula& f) {
    switch (f.kind()) {
        case Formula::Kind::Lit:
        case Formula::Kind::NegLit: return false;
        case Formula::Kind::Tensor: return true;
        case Formula::Kind::Par: return has_tensor(f.left()) || has_tensor(f.right());
    }
    return false;
}

void subformulas(const Formula& f, std::set<Formula>& out) {
    out.insert(f);
    if (f.kind() == Formula::Kind::Par || f.kind() == Formula::Kind::Tensor) {
        subformulas(f.left(), out);
        subformulas(f.right(), out);
    }
}

}  // namespace

ExtMcfg tensorfree_llg_to_extended(const Llg& g) {
    g.validate();
    for (const LexEntry& e : g.lexicon)
        if (has_tensor(e.type))
            throw std::invalid_argument("axiom '" + e.name + "' has type " + repr(e.type) +
                                        " containing a tensor; only tensor-free lexicons "
                                        "translate to an MCFG");
    std::set<Formula> phi;
    for (const LexEntry& e : g.lexicon) subformulas(e.type, phi);
    std::set<Formula> all = phi;
    for (const Formula& f : phi) all.insert(neg(f));
    all.insert(Formula::lit(g.start));
    all.insert(Formula::neglit(g.start));

    ExtMcfg out;
    out.alphabet = g.alphabet;
    out.start = repr(Formula::lit(g.start));
    for (const Formula& f : all) {
        std::string n = repr(f);
        out.type_order.push_back(n);
        out.types.emplace(n, formula_boundary(f, g.atoms));
    }
    std::sort(out.type_order.begin(), out.type_order.end());

    for (const LexEntry& e : g.lexicon)
        out.rules.push_back(ExtRule{repr(e.type), {}, e.value});

    // one rule per par subformula A @ B and argument arrangement of the
    // standard proof of |- A, A^ * B^, B
    static const std::array<std::array<int, 3>, 6> arrangements = {
        {{{1, 2, 0}}, {{2, 1, 0}}, {{0, 1, 2}}, {{1, 0, 2}}, {{0, 2, 1}}, {{2, 0, 1}}}};
    for (const Formula& f : phi) {
        if (f.kind() != Formula::Kind::Par) continue;
        Proof std_pf = Proof::tensor(Proof::axiom(neg(f.left())), Proof::axiom(f.right()), 1,
                                     {0});  // |- A, A^ * B^, B
        for (const auto& perm : arrangements) {
            Proof pf = Proof::exchange(std_pf, {perm[0], perm[1], perm[2]});
            const Sequent& s = pf.conclusion();
            Formula f1 = neg(s[0]), f2 = neg(s[1]);
            Boundary src = tensor(formula_boundary(f1, g.atoms), formula_boundary(f2, g.atoms));
            out.rules.push_back(ExtRule{repr(s[2]),
                                        {repr(f1), repr(f2)},
                                        unname(interpret(pf, g.atoms), src)});
        }
    }
    out.validate();
    return out;
}

Mcfg llg_to_mcfg(const Llg& g) {
    return simple_to_mcfg(disambiguate(tensorfree_llg_to_extended(g)));
}

}  // namespace cow
