#pragma once

#include <memory>
#include <vector>

#include "cowordism/formula.hpp"

namespace cow {

// One-sided sequent proofs. Construction validates the rule application, so a
// Proof object always carries a correct conclusion.
//
//   axiom(F)                     |- F^, F
//   cut(l, r, i, j)              from l |- G and r |- D with G[i] = neg(D[j]),
//                                concludes G\i, D\j
//   tensor(l, r, principal, left_positions)
//                                from l |- g0..g(p-1), X and r |- Y, d0..d(q-1),
//                                concludes an interleaving of the g's and d's
//                                with X*Y at index `principal`; `left_positions`
//                                lists the conclusion slots of g0..g(p-1)
//   par(s, i)                    from s |- G with G[i] = A, G[i+1] = B,
//                                concludes with A@B replacing the pair
//   exchange(s, perm)            conclusion[k] = G[perm[k]]
class Proof {
public:
    enum class Rule { Axiom, Cut, Tensor, Par, Exchange };

    static Proof axiom(Formula f);
    static Proof cut(Proof l, Proof r, int i, int j);
    static Proof tensor(Proof l, Proof r, int principal, std::vector<int> left_positions);
    static Proof par(Proof s, int i);
    static Proof exchange(Proof s, std::vector<int> perm);

    Rule rule() const;
    const Sequent& conclusion() const;
    const Formula& axiom_formula() const;
    const Proof& premise() const;        // par/exchange
    const Proof& left_premise() const;   // cut/tensor
    const Proof& right_premise() const;
    int position() const;                // par i / cut i / tensor principal
    int right_position() const;          // cut j
    const std::vector<int>& positions() const;  // tensor left_positions / exchange perm

    size_t size() const;  // number of rule applications

private:
    struct Node;
    explicit Proof(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
    std::shared_ptr<const Node> n_;
};

// The cowordism denoted by a proof: a closed morphism 1 -> |conclusion|.
Cowordism interpret(const Proof& p, const AtomBoundaries& atoms);

// Cut-free proof of |- F^, F built from literal axioms only.
Proof eta_proof(const Formula& f);

// All cut-free proofs of the sequent in a canonical form: the leftmost
// top-level par is always split first; when none remains every way of picking
// a tensor formula and distributing the rest over its two premises is tried.
// Counting these proofs counts axiom linkings. Stops early after max_proofs.
std::vector<Proof> enumerate_cut_free_proofs(const Sequent& s,
                                             size_t max_proofs = SIZE_MAX);
bool provable(const Sequent& s);

}  // namespace cow
