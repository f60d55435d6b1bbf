#include "cowordism/llg.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cow {

void Llg::validate() const {
    if (start.empty()) throw std::invalid_argument("grammar: no start atom");
    auto sit = atoms.find(start);
    if (sit == atoms.end())
        throw std::invalid_argument("grammar: start atom '" + start + "' not declared");
    if (sit->second != Boundary{{Tag::Left, Tag::Right}})
        throw std::invalid_argument("grammar: start atom must have one left and one right port");
    std::set<std::string> names;
    for (const auto& e : lexicon) {
        if (!names.insert(e.name).second)
            throw std::invalid_argument("grammar: duplicate axiom name '" + e.name + "'");
        Boundary want = formula_boundary(e.type, atoms);  // throws on unknown atoms
        if (!e.value.source().tags.empty() || e.value.target() != want)
            throw std::invalid_argument("grammar: axiom '" + e.name +
                                        "' value does not fit its type");
        for (auto& [sym, cnt] : letters(e.value)) {
            (void)cnt;
            if (sym < 0 || static_cast<size_t>(sym) >= alphabet.size())
                throw std::invalid_argument("grammar: axiom '" + e.name +
                                            "' uses a letter outside the alphabet");
        }
    }
}

namespace {

int parse_count(Lexer& lx, const std::string& what) {
    Token t = lx.expect_ident(what);
    if (t.text.empty() || t.text.find_first_not_of("0123456789") != std::string::npos)
        lx.fail("expected a number for " + what + ", got '" + t.text + "'", t.line);
    return std::stoi(t.text);
}

int parse_port(Lexer& lx, size_t limit) {
    Token t = lx.expect_ident("a port");
    std::string digits = t.text;
    if (!digits.empty() && digits[0] == 'p') digits = digits.substr(1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        lx.fail("expected a port like p3, got '" + t.text + "'", t.line);
    int n = std::stoi(digits);
    if (n < 1 || static_cast<size_t>(n) > limit)
        lx.fail("port " + t.text + " out of range 1.." + std::to_string(limit), t.line);
    return n - 1;
}

}  // namespace

Llg parse_llg(const std::string& text, const std::string& filename) {
    Lexer lx(text, filename);
    Llg g;
    while (!lx.at_end()) {
        if (lx.accept_ident("alphabet")) {
            for (const auto& tok : lx.rest_of_line_words()) g.alphabet.add(tok);
        } else if (lx.accept_ident("atom")) {
            Token name = lx.expect_ident("an atom name");
            if (g.atoms.count(name.text))
                lx.fail("atom '" + name.text + "' declared twice", name.line);
            Token kw = lx.expect_ident("left=");
            if (kw.text != "left") lx.fail("expected 'left', got '" + kw.text + "'", kw.line);
            lx.expect_symbol("=");
            int l = parse_count(lx, "left port count");
            kw = lx.expect_ident("right=");
            if (kw.text != "right") lx.fail("expected 'right', got '" + kw.text + "'", kw.line);
            lx.expect_symbol("=");
            int r = parse_count(lx, "right port count");
            g.atom_order.push_back(name.text);
            g.atoms.emplace(name.text, boundary_from_counts(l, r));
        } else if (lx.accept_ident("start")) {
            if (!g.start.empty()) lx.fail("start declared twice");
            g.start = lx.expect_ident("the start atom").text;
        } else if (lx.accept_ident("axiom")) {
            Token name = lx.expect_ident("an axiom name");
            lx.expect_symbol(":");
            Formula type = parse_formula(lx);
            Boundary ports;
            try {
                ports = formula_boundary(type, g.atoms);
            } catch (const std::invalid_argument& ex) {
                lx.fail(ex.what(), name.line);
            }
            std::vector<CwEdge> edges;
            std::vector<CyclicWord> cycles;
            lx.expect_symbol("{");
            while (!lx.accept_symbol("}")) {
                if (lx.accept_ident("edges")) {
                    lx.expect_symbol(":");
                    if (!lx.accept_symbol(";")) {
                        do {
                            int from = parse_port(lx, ports.size());
                            lx.expect_symbol("->");
                            int to = parse_port(lx, ports.size());
                            lx.expect_symbol(":");
                            Token w = lx.expect_string("an edge label");
                            Word label;
                            try {
                                label = g.alphabet.parse_word(w.text);
                            } catch (const std::runtime_error& ex) {
                                lx.fail(ex.what(), w.line);
                            }
                            edges.push_back(
                                CwEdge{Port::tgt(from), Port::tgt(to), std::move(label)});
                        } while (lx.accept_symbol(","));
                        lx.expect_symbol(";");
                    }
                } else if (lx.accept_ident("cycles")) {
                    lx.expect_symbol(":");
                    if (!lx.accept_symbol(";")) {
                        do {
                            Token w = lx.expect_string("a cycle label");
                            try {
                                cycles.push_back(CyclicWord::of(g.alphabet.parse_word(w.text)));
                            } catch (const std::runtime_error& ex) {
                                lx.fail(ex.what(), w.line);
                            }
                        } while (lx.accept_symbol(","));
                        lx.expect_symbol(";");
                    }
                } else {
                    lx.fail("expected 'edges:' or 'cycles:' inside an axiom body");
                }
            }
            try {
                g.lexicon.push_back(LexEntry{
                    name.text, type,
                    Cowordism(Boundary{}, ports, std::move(edges), std::move(cycles))});
            } catch (const std::invalid_argument& ex) {
                lx.fail(std::string("axiom '") + name.text + "': " + ex.what(), name.line);
            }
        } else {
            Token t = lx.next();
            lx.fail("expected 'alphabet', 'atom', 'start' or 'axiom', got '" + t.text + "'",
                    t.line);
        }
    }
    try {
        g.validate();
    } catch (const std::invalid_argument& ex) {
        lx.fail(ex.what(), 1);
    }
    return g;
}

Llg load_llg(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_llg(ss.str(), path);
}

std::string write_llg(const Llg& g) {
    std::ostringstream out;
    out << "alphabet";
    for (const auto& t : g.alphabet.tokens()) out << ' ' << t;
    out << '\n';
    for (const auto& a : g.atom_order) {
        const Boundary& b = g.atoms.at(a);
        if (b != boundary_from_counts(b.lefts(), b.rights()))
            throw std::invalid_argument("atom '" + a +
                                        "' has a non-canonical port layout; conjugate first");
        out << "atom " << a << " left=" << b.lefts() << " right=" << b.rights() << '\n';
    }
    out << "start " << g.start << '\n';
    for (const auto& e : g.lexicon) {
        out << "axiom " << e.name << " : " << repr(e.type) << " {\n";
        out << "  edges:";
        for (size_t i = 0; i < e.value.edges().size(); ++i) {
            const CwEdge& ed = e.value.edges()[i];
            out << (i ? "," : "") << " p" << (ed.from.index + 1) << " -> p"
                << (ed.to.index + 1) << " : \"" << g.alphabet.format_word(ed.label) << '"';
        }
        out << ";\n";
        if (!e.value.cycles().empty()) {
            out << "  cycles:";
            for (size_t i = 0; i < e.value.cycles().size(); ++i)
                out << (i ? "," : "") << " \""
                    << g.alphabet.format_word(e.value.cycles()[i].rep) << '"';
            out << ";\n";
        }
        out << "}\n";
    }
    return out.str();
}

Cowordism derivation_value(const Llg& g, const std::vector<size_t>& entries,
                           const Proof& pi) {
    Sequent want;
    std::vector<Cowordism> vals;
    for (size_t e : entries) {
        want.push_back(neg(g.lexicon.at(e).type));
        vals.push_back(g.lexicon.at(e).value);
    }
    want.push_back(Formula::lit(g.start));
    if (pi.conclusion() != want)
        throw std::invalid_argument("derivation: proof does not match the entry types");
    return apply(interpret(pi, g.atoms), tensor_all(vals));
}

namespace {

// Per-entry data shared by the derivation searches.
struct EntryInfo {
    std::map<Symbol, int> letters;
    int total = 0;              // letters carried, with multiplicity
    Formula negated;            // neg(type), the sequent slot
    std::map<std::string, int> balance;  // positive minus negative literals
    int lits = 0, tens = 0;     // connective counts of the slot
    bool regular = false;
};

std::vector<EntryInfo> entry_infos(const Llg& g) {
    std::vector<EntryInfo> out;
    out.reserve(g.lexicon.size());
    for (const auto& e : g.lexicon) {
        EntryInfo info;
        info.letters = letters(e.value);
        for (auto& [s, c] : info.letters) {
            (void)s;
            info.total += c;
        }
        info.negated = neg(e.type);
        for (auto& [atom, positive] : literals_of(info.negated))
            info.balance[atom] += positive ? 1 : -1;
        info.lits = literal_count(info.negated);
        info.tens = tensor_count(info.negated);
        info.regular = e.value.regular();
        out.push_back(std::move(info));
    }
    return out;
}

// Iterates all non-decreasing entry multisets of size 1..max_axioms that pass
// the letter-budget prunes and whose sequent balances every atom (axiom links
// pair a positive with a negative literal, so unbalanced sequents have no
// proofs); `fn` returns true to stop the whole walk.
template <class F>
void enumerate_multisets(const Llg& g, const std::vector<EntryInfo>& info, int max_axioms,
                         const GenerateOptions& opts, F&& fn) {
    std::map<Symbol, int> want_letters;
    int want_total = -1;
    if (opts.exact_word) {
        want_letters = letter_multiset(*opts.exact_word);
        want_total = static_cast<int>(opts.exact_word->size());
    }

    std::vector<size_t> multiset;
    std::map<Symbol, int> have;
    int have_total = 0;
    bool stop = false;

    auto try_multiset = [&]() {
        if (opts.exact_word && have != want_letters) return;
        std::map<std::string, int> balance{{g.start, 1}};
        for (size_t e : multiset)
            for (auto& [atom, delta] : info[e].balance) balance[atom] += delta;
        for (auto& [atom, delta] : balance) {
            (void)atom;
            if (delta != 0) return;
        }
        if (fn(static_cast<const std::vector<size_t>&>(multiset))) stop = true;
    };

    auto rec = [&](auto&& self, size_t first) -> void {
        if (!multiset.empty()) try_multiset();
        if (stop || multiset.size() >= static_cast<size_t>(max_axioms)) return;
        for (size_t e = first; e < g.lexicon.size() && !stop; ++e) {
            // letter budget: letters only ever accumulate along a derivation
            if (opts.max_len >= 0 && have_total + info[e].total > opts.max_len) continue;
            if (opts.exact_word) {
                if (have_total + info[e].total > want_total) continue;
                bool fits = true;
                for (auto& [s, c] : info[e].letters) {
                    auto it = want_letters.find(s);
                    int limit = it == want_letters.end() ? 0 : it->second;
                    auto h = have.find(s);
                    if ((h == have.end() ? 0 : h->second) + c > limit) {
                        fits = false;
                        break;
                    }
                }
                if (!fits) continue;
            }
            multiset.push_back(e);
            for (auto& [s, c] : info[e].letters) have[s] += c;
            have_total += info[e].total;
            self(self, e);
            have_total -= info[e].total;
            for (auto& [s, c] : info[e].letters) {
                have[s] -= c;
                if (have[s] == 0) have.erase(s);
            }
            multiset.pop_back();
        }
    };
    if (max_axioms > 0) rec(rec, 0);
}

// Runs the semantic value search per multiset and reports every derivation;
// `visit` returns true to stop the whole search.
template <class F>
void search_derivations(const Llg& g, int max_axioms, const GenerateOptions& opts,
                        F&& visit) {
    g.validate();
    ValueSearch engine(g.atoms);
    const Formula start = Formula::lit(g.start);
    const std::vector<EntryInfo> info = entry_infos(g);

    enumerate_multisets(g, info, max_axioms, opts, [&](const std::vector<size_t>& multiset) {
        std::vector<SemItem> items;
        std::vector<Cowordism> vals;
        for (size_t e : multiset) {
            items.push_back(SemItem{info[e].negated, static_cast<int>(e)});
            vals.push_back(g.lexicon[e].value);
        }
        items.push_back(SemItem{start, SemItem::kGoal});
        for (const Cowordism& sigma : engine.values(items)) {
            Derivation d;
            for (size_t e : multiset) d.entries.push_back(g.lexicon[e].name);
            d.value = apply(sigma, tensor_all(vals));
            if (visit(std::move(d))) return true;
        }
        return false;
    });
}

// ---- recognition ----------------------------------------------------------
//
// member(w) needs one derivation with one fixed value, so enumerating whole
// value sets per sequent is wasteful: their size explodes with plumbing-heavy
// lexica long before the matching value shows up. Instead we search directly
// over axiom matchings of the sequent's literal occurrences, gluing the entry
// values' labeled wires as links are chosen. Every partial glued wire must
// read as a contiguous piece of w (a prefix once it starts at the output's
// right port, a suffix once it ends at the left one), closed loops are
// rejected outright, and interchangeable untouched entry copies are tried
// only once. A complete matching is accepted only if it passes the switching
// criterion, i.e. really is the axiom structure of a sequent proof.
class Recognizer {
public:
    Recognizer(const Llg& g, const std::vector<EntryInfo>& info,
               const std::vector<size_t>& multiset, const Word& w)
        : word_(w) {
        const size_t n = multiset.size();
        items_.reserve(n + 1);
        for (size_t e : multiset) items_.push_back(Item{info[e].negated, static_cast<int>(e)});
        items_.push_back(Item{Formula::lit(g.start), -1});

        for (size_t i = 0; i < items_.size(); ++i) {
            port_base_.push_back(static_cast<int>(at_tail_.size()));
            int32_t off = 0;
            int occ_pos = 0;
            add_tree(items_[i].formula, i, off, occ_pos, g.atoms);
            at_tail_.resize(at_tail_.size() + off, -1);
            at_head_.resize(at_head_.size() + off, -1);
        }
        goal_head_ = port_base_.back();      // left port of the output
        goal_tail_ = port_base_.back() + 1;  // right port of the output

        for (size_t i = 0; i < n; ++i)
            for (const CwEdge& ed : g.lexicon[multiset[i]].value.edges()) {
                int from = port_base_[i] + ed.from.index;
                int to = port_base_[i] + ed.to.index;
                int id = static_cast<int>(chains_.size());
                chains_.push_back(Chain{from, to, ed.label});
                at_tail_[from] = id;
                at_head_[to] = id;
            }

        partner_.assign(occs_.size(), -1);
        touched_.assign(items_.size(), 0);
        for (size_t o = 0; o < occs_.size(); ++o)
            if (occs_[o].positive) order_.push_back(o);
        std::stable_partition(order_.begin(), order_.end(),
                              [&](size_t o) { return items_[occs_[o].item].lex < 0; });
    }

    bool search() { return extend(0); }

private:
    struct Item {
        Formula formula;
        int lex;  // lexicon index, or -1 for the goal
    };
    struct Occ {
        std::string atom;
        bool positive;
        size_t item;
        int port0;
        int width;
        size_t leaf;  // node in the correctness forest
        long sym;     // (lexicon id, position in item): untouched copies collide
    };
    struct Chain {
        int tail, head;
        Word label;
    };
    struct Touch {
        bool tail;
        int port;
        int old;
    };

    const Word& word_;
    std::vector<Item> items_;
    std::vector<int> port_base_;
    int goal_head_ = 0, goal_tail_ = 0;

    // formula forest plus axiom links, for the switching criterion
    struct Node {
        size_t left = 0, right = 0;
        bool is_par = false;
    };
    std::vector<Node> nodes_;
    std::vector<std::pair<size_t, size_t>> tree_edges_;
    std::vector<size_t> par_nodes_;

    std::vector<Occ> occs_;
    std::vector<size_t> order_;  // positive occurrences, goal first
    std::vector<int> partner_;
    std::vector<int> touched_;

    std::vector<Chain> chains_;
    std::vector<int> at_tail_, at_head_;  // live chain ends per port
    std::vector<Touch> undo_;

    size_t add_tree(const Formula& f, size_t item, int32_t& off, int& occ_pos,
                    const AtomBoundaries& atoms) {
        size_t id = nodes_.size();
        nodes_.push_back(Node{});
        if (f.is_literal()) {
            int width = static_cast<int>(atoms.at(f.atom()).size());
            occs_.push_back(Occ{f.atom(), f.kind() == Formula::Kind::Lit, item,
                                port_base_[item] + off, width, id,
                                static_cast<long>(items_[item].lex) * 4096 + occ_pos});
            off += width;
            ++occ_pos;
            return id;
        }
        nodes_[id].is_par = f.kind() == Formula::Kind::Par;
        size_t l = add_tree(f.left(), item, off, occ_pos, atoms);
        size_t r = add_tree(f.right(), item, off, occ_pos, atoms);
        nodes_[id].left = l;
        nodes_[id].right = r;
        if (nodes_[id].is_par) {
            par_nodes_.push_back(id);
        } else {
            tree_edges_.emplace_back(id, l);
            tree_edges_.emplace_back(id, r);
        }
        return id;
    }

    bool label_fits(const Chain& c) const {
        const bool pre = c.tail == goal_tail_, suf = c.head == goal_head_;
        const size_t n = c.label.size(), m = word_.size();
        if (n > m || (pre && suf && n != m)) return false;
        if (pre) return std::equal(c.label.begin(), c.label.end(), word_.begin());
        if (suf) return std::equal(c.label.rbegin(), c.label.rend(), word_.rbegin());
        if (n == 0) return true;
        return std::search(word_.begin(), word_.end(), c.label.begin(), c.label.end()) !=
               word_.end();
    }

    void set_end(bool tail, int port, int chain) {
        auto& slot = tail ? at_tail_[port] : at_head_[port];
        undo_.push_back(Touch{tail, port, slot});
        slot = chain;
    }

    // Glues one matched pair of ports; on false the caller must roll back to
    // its marks. State per port: 0 = a chain ends here, 1 = a chain starts
    // here, 2 = free output port. Matched tags are always opposite, so the
    // pair is (0,1) -- merge -- or has one free output port -- re-anchor.
    bool glue(int p, int q) {
        auto state = [&](int x) { return at_head_[x] >= 0 ? 0 : at_tail_[x] >= 0 ? 1 : 2; };
        int sp = state(p), sq = state(q);
        if (sp > sq) {
            std::swap(p, q);
            std::swap(sp, sq);
        }
        if (sp == 0 && sq == 1) {
            int a = at_head_[p], b = at_tail_[q];
            if (a == b) return false;  // a closed loop can never read as w
            Chain merged{chains_[a].tail, chains_[b].head, chains_[a].label};
            merged.label.insert(merged.label.end(), chains_[b].label.begin(),
                                chains_[b].label.end());
            if (!label_fits(merged)) return false;
            int id = static_cast<int>(chains_.size());
            chains_.push_back(std::move(merged));
            set_end(false, p, -1);
            set_end(true, q, -1);
            set_end(true, chains_[id].tail, id);
            set_end(false, chains_[id].head, id);
            return true;
        }
        // sq == 2: q is a free output port adopting the chain end at p
        const bool tail_side = sp == 1;
        int c = tail_side ? at_tail_[p] : at_head_[p];
        Chain moved = chains_[c];
        (tail_side ? moved.tail : moved.head) = q;
        if (!label_fits(moved)) return false;
        int id = static_cast<int>(chains_.size());
        chains_.push_back(std::move(moved));
        set_end(tail_side, p, -1);
        set_end(tail_side, q, id);
        set_end(!tail_side, tail_side ? chains_[id].head : chains_[id].tail, id);
        return true;
    }

    void rollback(size_t undo_mark, size_t chain_mark) {
        while (undo_.size() > undo_mark) {
            const Touch& t = undo_.back();
            (t.tail ? at_tail_ : at_head_)[t.port] = t.old;
            undo_.pop_back();
        }
        chains_.resize(chain_mark);
    }

    bool extend(size_t next) {
        while (next < order_.size() && partner_[order_[next]] >= 0) ++next;
        if (next == order_.size()) return correct();
        const size_t o = order_[next];
        std::set<long> seen;
        for (size_t c = 0; c < occs_.size(); ++c) {
            if (occs_[c].positive || partner_[c] >= 0 || occs_[c].atom != occs_[o].atom)
                continue;
            if (!touched_[occs_[c].item] && !seen.insert(occs_[c].sym).second)
                continue;  // an identical untouched copy was already tried
            const size_t undo_mark = undo_.size(), chain_mark = chains_.size();
            partner_[o] = static_cast<int>(c);
            partner_[c] = static_cast<int>(o);
            ++touched_[occs_[o].item];
            ++touched_[occs_[c].item];
            bool ok = true;
            for (int k = 0; ok && k < occs_[o].width; ++k)
                ok = glue(occs_[o].port0 + k, occs_[c].port0 + k);
            if (ok && extend(next + 1)) return true;
            rollback(undo_mark, chain_mark);
            --touched_[occs_[o].item];
            --touched_[occs_[c].item];
            partner_[o] = partner_[c] = -1;
        }
        return false;
    }

    // Danos-Regnier: with the axiom links of the found matching, every way of
    // keeping one premise edge per par node must yield a tree.
    bool correct() const {
        const size_t V = nodes_.size();
        const size_t E = tree_edges_.size() + occs_.size() / 2 + par_nodes_.size();
        if (E + 1 != V) return false;
        std::vector<std::pair<size_t, size_t>> base = tree_edges_;
        for (size_t o = 0; o < occs_.size(); ++o)
            if (occs_[o].positive)
                base.emplace_back(occs_[o].leaf, occs_[partner_[o]].leaf);
        const size_t switchings = size_t{1} << par_nodes_.size();
        std::vector<std::vector<size_t>> adj(V);
        for (size_t s = 0; s < switchings; ++s) {
            for (auto& v : adj) v.clear();
            auto link = [&](size_t a, size_t b) {
                adj[a].push_back(b);
                adj[b].push_back(a);
            };
            for (auto& [a, b] : base) link(a, b);
            for (size_t k = 0; k < par_nodes_.size(); ++k) {
                const Node& pn = nodes_[par_nodes_[k]];
                link(par_nodes_[k], (s >> k & 1) ? pn.right : pn.left);
            }
            std::vector<char> vis(V, 0);
            std::vector<size_t> stack{0};
            vis[0] = 1;
            size_t count = 1;
            while (!stack.empty()) {
                size_t v = stack.back();
                stack.pop_back();
                for (size_t u : adj[v])
                    if (!vis[u]) {
                        vis[u] = 1;
                        ++count;
                        stack.push_back(u);
                    }
            }
            if (count != V) return false;
        }
        return true;
    }
};

}  // namespace

std::vector<Derivation> generate(const Llg& g, int max_axioms, const GenerateOptions& opts) {
    std::map<Cowordism, Derivation> found;
    search_derivations(g, max_axioms, opts, [&](Derivation&& d) {
        if (opts.max_len >= 0) {
            int total = 0;
            for (auto& [s, c] : letters(d.value)) {
                (void)s;
                total += c;
            }
            if (total > opts.max_len) return false;
        }
        found.try_emplace(d.value, std::move(d));
        return false;
    });
    std::vector<Derivation> out;
    out.reserve(found.size());
    for (auto& [v, d] : found) out.push_back(std::move(d));
    return out;
}

std::vector<Word> language(const Llg& g, int max_axioms, int max_len) {
    GenerateOptions opts;
    opts.max_len = max_len;
    std::set<Word> words;
    search_derivations(g, max_axioms, opts, [&](Derivation&& d) {
        if (d.value.regular()) {
            const Word& w = d.value.edges().at(0).label;
            if (max_len < 0 || static_cast<int>(w.size()) <= max_len) words.insert(w);
        }
        return false;
    });
    std::vector<Word> out(words.begin(), words.end());
    std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

std::optional<Derivation> member(const Llg& g, const Word& w, int max_axioms) {
    g.validate();
    const std::vector<EntryInfo> info = entry_infos(g);
    GenerateOptions opts;
    opts.exact_word = &w;
    std::optional<Derivation> hit;
    enumerate_multisets(g, info, max_axioms, opts, [&](const std::vector<size_t>& multiset) {
        // a value with closed loops can never compose to the plain diagram of w
        int lits = 1, tens = 0;
        for (size_t e : multiset) {
            if (!info[e].regular) return false;
            lits += info[e].lits;
            tens += info[e].tens;
        }
        if (lits != 2 * (tens + 1)) return false;  // axiom/connective count of any proof
        Recognizer rec(g, info, multiset, w);
        if (!rec.search()) return false;
        Derivation d;
        for (size_t e : multiset) d.entries.push_back(g.lexicon[e].name);
        d.value = word_diagram(w);
        hit = std::move(d);
        return true;
    });
    return hit;
}

}  // namespace cow
