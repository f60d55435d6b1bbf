#include "cowordism/proof.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cow {

struct Proof::Node {
    Rule rule = Rule::Axiom;
    Sequent conclusion;
    Formula ax;               // axiom
    std::vector<Proof> prem;  // 0, 1 or 2
    int i = 0, j = 0;         // cut i,j / tensor principal / par i
    std::vector<int> positions;  // tensor left slots / exchange permutation
};

Proof Proof::axiom(Formula f) {
    auto n = std::make_shared<Node>();
    n->rule = Rule::Axiom;
    n->conclusion = {neg(f), f};
    n->ax = f;
    return Proof(std::move(n));
}

Proof Proof::cut(Proof l, Proof r, int i, int j) {
    const Sequent& g = l.conclusion();
    const Sequent& d = r.conclusion();
    if (i < 0 || static_cast<size_t>(i) >= g.size() || j < 0 ||
        static_cast<size_t>(j) >= d.size())
        throw std::invalid_argument("cut: position out of range");
    if (g[static_cast<size_t>(i)] != neg(d[static_cast<size_t>(j)]))
        throw std::invalid_argument("cut: formulas are not dual");
    auto n = std::make_shared<Node>();
    n->rule = Rule::Cut;
    for (size_t k = 0; k < g.size(); ++k)
        if (k != static_cast<size_t>(i)) n->conclusion.push_back(g[k]);
    for (size_t k = 0; k < d.size(); ++k)
        if (k != static_cast<size_t>(j)) n->conclusion.push_back(d[k]);
    n->prem = {std::move(l), std::move(r)};
    n->i = i;
    n->j = j;
    return Proof(std::move(n));
}

Proof Proof::tensor(Proof l, Proof r, int principal, std::vector<int> left_positions) {
    const Sequent& g = l.conclusion();
    const Sequent& d = r.conclusion();
    if (g.empty() || d.empty()) throw std::invalid_argument("tensor: empty premise");
    const size_t p = g.size() - 1, q = d.size() - 1;
    const size_t total = p + q + 1;
    if (principal < 0 || static_cast<size_t>(principal) >= total)
        throw std::invalid_argument("tensor: principal slot out of range");
    if (left_positions.size() != p)
        throw std::invalid_argument("tensor: wrong number of left slots");
    if (!std::is_sorted(left_positions.begin(), left_positions.end()))
        throw std::invalid_argument("tensor: left slots must be ascending");
    std::vector<bool> used(total, false);
    used[static_cast<size_t>(principal)] = true;
    for (int s : left_positions) {
        if (s < 0 || static_cast<size_t>(s) >= total || used[static_cast<size_t>(s)])
            throw std::invalid_argument("tensor: bad left slot");
        used[static_cast<size_t>(s)] = true;
    }
    auto n = std::make_shared<Node>();
    n->rule = Rule::Tensor;
    n->conclusion.resize(total);
    n->conclusion[static_cast<size_t>(principal)] = Formula::tensor(g.back(), d.front());
    for (size_t t = 0; t < p; ++t)
        n->conclusion[static_cast<size_t>(left_positions[t])] = g[t];
    size_t next_right = 1;
    for (size_t s = 0; s < total; ++s) {
        if (static_cast<int>(s) == principal ||
            std::binary_search(left_positions.begin(), left_positions.end(),
                               static_cast<int>(s)))
            continue;
        n->conclusion[s] = d[next_right++];
    }
    n->prem = {std::move(l), std::move(r)};
    n->i = principal;
    n->positions = std::move(left_positions);
    return Proof(std::move(n));
}

Proof Proof::par(Proof s, int i) {
    const Sequent& g = s.conclusion();
    if (i < 0 || static_cast<size_t>(i) + 1 >= g.size())
        throw std::invalid_argument("par: position out of range");
    auto n = std::make_shared<Node>();
    n->rule = Rule::Par;
    for (size_t k = 0; k < g.size(); ++k) {
        if (k == static_cast<size_t>(i)) {
            n->conclusion.push_back(Formula::par(g[k], g[k + 1]));
            ++k;
        } else {
            n->conclusion.push_back(g[k]);
        }
    }
    n->prem = {std::move(s)};
    n->i = i;
    return Proof(std::move(n));
}

Proof Proof::exchange(Proof s, std::vector<int> perm) {
    const Sequent& g = s.conclusion();
    if (perm.size() != g.size()) throw std::invalid_argument("exchange: size mismatch");
    std::vector<bool> seen(g.size(), false);
    for (int p : perm) {
        if (p < 0 || static_cast<size_t>(p) >= g.size() || seen[static_cast<size_t>(p)])
            throw std::invalid_argument("exchange: not a permutation");
        seen[static_cast<size_t>(p)] = true;
    }
    auto n = std::make_shared<Node>();
    n->rule = Rule::Exchange;
    for (int p : perm) n->conclusion.push_back(g[static_cast<size_t>(p)]);
    n->prem = {std::move(s)};
    n->positions = std::move(perm);
    return Proof(std::move(n));
}

Proof::Rule Proof::rule() const { return n_->rule; }
const Sequent& Proof::conclusion() const { return n_->conclusion; }
const Formula& Proof::axiom_formula() const { return n_->ax; }
const Proof& Proof::premise() const { return n_->prem.at(0); }
const Proof& Proof::left_premise() const { return n_->prem.at(0); }
const Proof& Proof::right_premise() const { return n_->prem.at(1); }
int Proof::position() const { return n_->i; }
int Proof::right_position() const { return n_->j; }
const std::vector<int>& Proof::positions() const { return n_->positions; }

size_t Proof::size() const {
    size_t s = 1;
    for (const auto& p : n_->prem) s += p.size();
    return s;
}

namespace {

std::vector<Boundary> sequent_blocks(const Sequent& s, const AtomBoundaries& atoms) {
    std::vector<Boundary> bs;
    bs.reserve(s.size());
    for (const auto& f : s) bs.push_back(formula_boundary(f, atoms));
    return bs;
}

std::vector<int> move_to_back(size_t n, size_t i) {
    std::vector<int> perm;
    for (size_t k = 0; k < n; ++k)
        if (k != i) perm.push_back(static_cast<int>(k));
    perm.push_back(static_cast<int>(i));
    return perm;
}

std::vector<int> move_to_front(size_t n, size_t j) {
    std::vector<int> perm{static_cast<int>(j)};
    for (size_t k = 0; k < n; ++k)
        if (k != j) perm.push_back(static_cast<int>(k));
    return perm;
}

}  // namespace

Cowordism interpret(const Proof& p, const AtomBoundaries& atoms) {
    switch (p.rule()) {
        case Proof::Rule::Axiom:
            return name_of(identity(formula_boundary(p.axiom_formula(), atoms)));
        case Proof::Rule::Par:
            // A @ B and A, B share a boundary: nothing to do
            return interpret(p.premise(), atoms);
        case Proof::Rule::Exchange: {
            Cowordism sub = interpret(p.premise(), atoms);
            return compose(sub, permute(sequent_blocks(p.premise().conclusion(), atoms),
                                        p.positions()));
        }
        case Proof::Rule::Tensor: {
            Cowordism il = interpret(p.left_premise(), atoms);
            Cowordism ir = interpret(p.right_premise(), atoms);
            const Sequent& g = p.left_premise().conclusion();
            const Sequent& d = p.right_premise().conclusion();
            std::vector<Boundary> blocks = sequent_blocks(g, atoms);
            std::vector<Boundary> dblocks = sequent_blocks(d, atoms);
            blocks.insert(blocks.end(), dblocks.begin(), dblocks.end());
            const int xb = static_cast<int>(g.size()) - 1;  // block of X, then Y
            std::vector<int> perm;
            const auto& lefts = p.positions();
            size_t nl = 0, nr = 0;
            for (size_t s = 0; s < p.conclusion().size(); ++s) {
                if (static_cast<int>(s) == p.position()) {
                    perm.push_back(xb);
                    perm.push_back(xb + 1);
                } else if (nl < lefts.size() && lefts[nl] == static_cast<int>(s)) {
                    perm.push_back(static_cast<int>(nl++));
                } else {
                    perm.push_back(xb + 2 + static_cast<int>(nr++));
                }
            }
            return compose(tensor(il, ir), permute(blocks, perm));
        }
        case Proof::Rule::Cut: {
            Cowordism il = interpret(p.left_premise(), atoms);
            Cowordism ir = interpret(p.right_premise(), atoms);
            const Sequent& g = p.left_premise().conclusion();
            const Sequent& d = p.right_premise().conclusion();
            auto i = static_cast<size_t>(p.position());
            auto j = static_cast<size_t>(p.right_position());
            Cowordism tau =
                compose(il, permute(sequent_blocks(g, atoms), move_to_back(g.size(), i)));
            Cowordism sigma =
                compose(ir, permute(sequent_blocks(d, atoms), move_to_front(d.size(), j)));
            return partial_pair(tau, sigma, formula_boundary(g[i], atoms));
        }
    }
    throw std::logic_error("unreachable");
}

Proof eta_proof(const Formula& f) {
    if (f.is_literal()) return Proof::axiom(f);
    Formula a = f.left(), b = f.right();
    if (f.kind() == Formula::Kind::Tensor) {
        // |- A^, A   and   |- B, B^  combine to |- A^, A*B, B^
        Proof t = Proof::tensor(eta_proof(a), Proof::exchange(eta_proof(b), {1, 0}), 1, {0});
        Proof e = Proof::exchange(t, {0, 2, 1});  // |- A^, B^, A*B
        return Proof::par(e, 0);                  // |- A^ @ B^, A*B
    }
    // Par: |- A, A^  and  |- B^, B  combine to |- A^*B^, A, B
    Proof t = Proof::tensor(Proof::exchange(eta_proof(a), {1, 0}), eta_proof(b), 0, {1});
    return Proof::par(t, 1);  // |- A^ * B^, A @ B
}

namespace {

int leftmost_par(const Sequent& s) {
    for (size_t i = 0; i < s.size(); ++i)
        if (s[i].kind() == Formula::Kind::Par) return static_cast<int>(i);
    return -1;
}

bool may_be_provable(const Sequent& s) {
    std::map<std::string, int> balance;
    int lits = 0, tens = 0;
    for (const auto& f : s) {
        for (auto& [atom, pos] : literals_of(f)) balance[atom] += pos ? 1 : -1;
        lits += literal_count(f);
        tens += tensor_count(f);
    }
    for (auto& [atom, b] : balance)
        if (b != 0) return false;
    return lits == 2 * (tens + 1);
}

struct Enumerator {
    std::map<std::string, std::vector<Proof>> memo;

    const std::vector<Proof>& run(const Sequent& s) {
        std::string key = repr(s);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        std::vector<Proof> out;
        if (may_be_provable(s)) {
            int pi = leftmost_par(s);
            if (pi >= 0) {
                Sequent t;
                for (size_t k = 0; k < s.size(); ++k) {
                    if (k == static_cast<size_t>(pi)) {
                        t.push_back(s[k].left());
                        t.push_back(s[k].right());
                    } else {
                        t.push_back(s[k]);
                    }
                }
                for (const Proof& sub : run(t)) out.push_back(Proof::par(sub, pi));
            } else if (s.size() == 2 && s[0].is_literal() && s[1].is_literal() &&
                       s[0] == neg(s[1])) {
                out.push_back(Proof::axiom(s[1]));
            } else {
                for (size_t t = 0; t < s.size(); ++t) {
                    if (s[t].kind() != Formula::Kind::Tensor) continue;
                    std::vector<int> rest;
                    for (size_t k = 0; k < s.size(); ++k)
                        if (k != t) rest.push_back(static_cast<int>(k));
                    const size_t m = rest.size();
                    for (size_t mask = 0; mask < (size_t{1} << m); ++mask) {
                        Sequent ls, rs;
                        std::vector<int> lefts;
                        for (size_t b = 0; b < m; ++b) {
                            if (mask & (size_t{1} << b)) {
                                ls.push_back(s[static_cast<size_t>(rest[b])]);
                                lefts.push_back(rest[b]);
                            }
                        }
                        ls.push_back(s[t].left());
                        rs.push_back(s[t].right());
                        for (size_t b = 0; b < m; ++b)
                            if (!(mask & (size_t{1} << b)))
                                rs.push_back(s[static_cast<size_t>(rest[b])]);
                        if (!may_be_provable(ls) || !may_be_provable(rs)) continue;
                        const auto& lp = run(ls);
                        if (lp.empty()) continue;
                        const auto& rp = run(rs);
                        for (const Proof& a : lp)
                            for (const Proof& b : rp)
                                out.push_back(
                                    Proof::tensor(a, b, static_cast<int>(t), lefts));
                    }
                }
            }
        }
        return memo.emplace(std::move(key), std::move(out)).first->second;
    }
};

}  // namespace

std::vector<Proof> enumerate_cut_free_proofs(const Sequent& s, size_t max_proofs) {
    Enumerator e;
    std::vector<Proof> all = e.run(s);
    if (all.size() > max_proofs)
        all.erase(all.begin() + static_cast<long>(max_proofs), all.end());
    return all;
}

bool provable(const Sequent& s) { return !enumerate_cut_free_proofs(s, 1).empty(); }

}  // namespace cow
