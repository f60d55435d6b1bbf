#pragma once

// Test-side helpers for the sequent calculus: an independent provability
// oracle (multiset-based, no canonical ordering, no sharing with the library
// enumerator beyond the Formula type) and small formula generators.

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "cowordism/formula.hpp"

namespace cowtest {

// Decides provability by brute force over sequents-as-sorted-multisets:
// invert any par immediately, otherwise try every tensor and every way of
// distributing the remaining formulas over its premises.
class MllOracle {
public:
    bool provable(std::vector<cow::Formula> ms) {
        std::sort(ms.begin(), ms.end());
        std::string key = cow::repr(ms);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        bool ok = decide(ms);
        memo_[key] = ok;
        return ok;
    }

private:
    bool decide(const std::vector<cow::Formula>& ms) {
        using cow::Formula;
        for (size_t i = 0; i < ms.size(); ++i) {
            if (ms[i].kind() == Formula::Kind::Par) {
                std::vector<Formula> t;
                for (size_t k = 0; k < ms.size(); ++k)
                    if (k != i) t.push_back(ms[k]);
                t.push_back(ms[i].left());
                t.push_back(ms[i].right());
                return provable(std::move(t));
            }
        }
        if (ms.size() == 2 && ms[0].is_literal() && ms[1].is_literal() &&
            ms[0] == cow::neg(ms[1]))
            return true;
        for (size_t i = 0; i < ms.size(); ++i) {
            if (ms[i].kind() != Formula::Kind::Tensor) continue;
            std::vector<Formula> rest;
            for (size_t k = 0; k < ms.size(); ++k)
                if (k != i) rest.push_back(ms[k]);
            const size_t m = rest.size();
            for (size_t mask = 0; mask < (size_t{1} << m); ++mask) {
                std::vector<Formula> l{ms[i].left()}, r{ms[i].right()};
                for (size_t b = 0; b < m; ++b)
                    (((mask >> b) & 1) ? l : r).push_back(rest[b]);
                if (provable(std::move(l)) && provable(std::move(r))) return true;
            }
        }
        return false;
    }

    std::map<std::string, bool> memo_;
};

// All formulas of the given height over the atoms (height 1 = literals).
inline std::vector<cow::Formula> formulas_up_to_height(
    const std::vector<std::string>& atoms, int height) {
    using cow::Formula;
    std::vector<std::vector<Formula>> by_h(static_cast<size_t>(height) + 1);
    for (const auto& a : atoms) {
        by_h[1].push_back(Formula::lit(a));
        by_h[1].push_back(Formula::neglit(a));
    }
    std::vector<Formula> all = by_h[1];
    for (int h = 2; h <= height; ++h) {
        // exactly one child of height h-1, the other anything shorter
        std::vector<Formula> shorter;
        for (int k = 1; k < h; ++k)
            shorter.insert(shorter.end(), by_h[static_cast<size_t>(k)].begin(),
                           by_h[static_cast<size_t>(k)].end());
        for (const auto& l : shorter) {
            for (const auto& r : shorter) {
                by_h[static_cast<size_t>(h)].push_back(Formula::tensor(l, r));
                by_h[static_cast<size_t>(h)].push_back(Formula::par(l, r));
            }
        }
        // keep only pairs where max height is exactly h: cheaper to rebuild
        // honestly than to filter, so just deduplicate against `all`
        std::vector<Formula> fresh;
        for (const auto& f : by_h[static_cast<size_t>(h)]) {
            bool dup = false;
            for (const auto& g : all)
                if (f == g) {
                    dup = true;
                    break;
                }
            if (!dup) fresh.push_back(f);
        }
        by_h[static_cast<size_t>(h)] = fresh;
        all.insert(all.end(), fresh.begin(), fresh.end());
    }
    return all;
}

inline cow::Formula random_formula(std::mt19937& rng, const std::vector<std::string>& atoms,
                                   int max_height) {
    std::uniform_int_distribution<size_t> pick(0, atoms.size() - 1);
    std::uniform_int_distribution<int> kind(0, 3);
    if (max_height <= 1 || kind(rng) < 2) {
        const auto& a = atoms[pick(rng)];
        return (kind(rng) % 2) ? cow::Formula::lit(a) : cow::Formula::neglit(a);
    }
    auto l = random_formula(rng, atoms, max_height - 1);
    auto r = random_formula(rng, atoms, max_height - 1);
    return (kind(rng) % 2) ? cow::Formula::tensor(l, r) : cow::Formula::par(l, r);
}

}  // namespace cowtest
