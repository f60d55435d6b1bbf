#include "cowordism/value_search.hpp"

#include <algorithm>
#include <numeric>

namespace cow {

// Balance prefilter: every atom must occur as often positively as negatively,
// and #literals must equal 2 * (#tensor connectives + 1), both invariants of
// cut-free provability with atomic axioms.
static bool prefilter(const std::vector<Formula>& fs) {
    std::map<std::string, int> balance;
    int lits = 0, tens = 0;
    for (const auto& f : fs) {
        for (auto& [atom, pos] : literals_of(f)) balance[atom] += pos ? 1 : -1;
        lits += literal_count(f);
        tens += tensor_count(f);
    }
    for (auto& [atom, b] : balance)
        if (b != 0) return false;
    return lits == 2 * (tens + 1);
}

const std::vector<Cowordism>& ValueSearch::values(const std::vector<SemItem>& items) {
    std::vector<Slot> slots;
    slots.reserve(items.size());
    for (const auto& it : items) slots.push_back(Slot{repr(it.formula), it.formula, it.tag});
    std::vector<size_t> order(slots.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return slots[a] < slots[b]; });
    bool already_sorted = std::is_sorted(order.begin(), order.end());

    std::vector<Slot> sorted;
    sorted.reserve(slots.size());
    for (size_t i : order) sorted.push_back(slots[i]);
    const std::vector<Cowordism>& canon = canonical_values(sorted);
    if (already_sorted) return canon;

    // permute each canonical value back into the requested slot order
    std::vector<size_t> pos_in_sorted(order.size());
    for (size_t k = 0; k < order.size(); ++k) pos_in_sorted[order[k]] = k;
    std::vector<Boundary> blocks;
    for (const auto& sl : sorted) blocks.push_back(formula_boundary(sl.formula, atoms_));
    std::vector<int> perm;
    for (size_t k = 0; k < items.size(); ++k)
        perm.push_back(static_cast<int>(pos_in_sorted[k]));
    Cowordism mover = permute(blocks, perm);

    std::string key = "reorder";
    for (size_t k = 0; k < sorted.size(); ++k)
        key += '|' + sorted[k].repr + '#' + std::to_string(sorted[k].tag) + '@' +
               std::to_string(perm[k]);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<Cowordism> out;
    out.reserve(canon.size());
    for (const auto& v : canon) out.push_back(compose(v, mover));
    std::sort(out.begin(), out.end());
    return memo_.emplace(std::move(key), std::move(out)).first->second;
}

const std::vector<Cowordism>& ValueSearch::canonical_values(const std::vector<Slot>& sorted) {
    std::string key;
    for (const auto& sl : sorted) key += sl.repr + '#' + std::to_string(sl.tag) + '|';
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<Cowordism> out = expand(sorted);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return memo_.emplace(std::move(key), std::move(out)).first->second;
}

std::vector<Cowordism> ValueSearch::expand(const std::vector<Slot>& s) {
    {
        std::vector<Formula> fs;
        fs.reserve(s.size());
        for (const auto& sl : s) fs.push_back(sl.formula);
        if (!prefilter(fs)) return {};
    }

    // par slots are split in place (the boundary does not change), one
    // canonical copy per group
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i].formula.kind() != Formula::Kind::Par) continue;
        std::vector<SemItem> child;
        for (size_t k = 0; k < s.size(); ++k) {
            if (k == i) {
                child.push_back(SemItem{s[k].formula.left(), SemItem::kUntagged});
                child.push_back(SemItem{s[k].formula.right(), SemItem::kUntagged});
            } else {
                child.push_back(SemItem{s[k].formula, s[k].tag});
            }
        }
        return values(child);  // same boundary, same order
    }

    if (s.size() == 2 && s[0].formula.is_literal() && s[1].formula.is_literal() &&
        s[0].formula == neg(s[1].formula)) {
        return {name_of(identity(formula_boundary(s[1].formula, atoms_)))};
    }

    // group equal-tagged runs; untagged slots always stand alone
    struct Run {
        size_t start, count;
    };
    std::vector<Run> runs;
    for (size_t i = 0; i < s.size();) {
        size_t j = i + 1;
        if (s[i].tag >= 0)
            while (j < s.size() && s[j].tag == s[i].tag && s[j].repr == s[i].repr) ++j;
        runs.push_back(Run{i, j - i});
        i = j;
    }

    std::vector<Cowordism> out;
    for (size_t pr = 0; pr < runs.size(); ++pr) {
        if (s[runs[pr].start].formula.kind() != Formula::Kind::Tensor) continue;
        const size_t principal = runs[pr].start + runs[pr].count - 1;  // last copy
        Formula x = s[principal].formula.left();
        Formula y = s[principal].formula.right();

        // choose, per run, how many of its assignable copies go left
        std::vector<size_t> avail(runs.size());
        for (size_t g = 0; g < runs.size(); ++g)
            avail[g] = runs[g].count - (g == pr ? 1 : 0);
        std::vector<size_t> take(runs.size(), 0);
        while (true) {
            // materialize this assignment: first `take[g]` copies of run g go left
            std::vector<SemItem> litems, ritems;
            std::vector<char> is_left(s.size(), 0);
            for (size_t g = 0; g < runs.size(); ++g) {
                size_t placed = 0;
                for (size_t k = runs[g].start; k < runs[g].start + runs[g].count; ++k) {
                    if (k == principal) continue;
                    if (placed < take[g]) {
                        is_left[k] = 1;
                        ++placed;
                    }
                }
            }
            for (size_t k = 0; k < s.size(); ++k)
                if (k != principal && is_left[k])
                    litems.push_back(SemItem{s[k].formula, s[k].tag});
            litems.push_back(SemItem{x, SemItem::kUntagged});
            ritems.push_back(SemItem{y, SemItem::kUntagged});
            for (size_t k = 0; k < s.size(); ++k)
                if (k != principal && !is_left[k])
                    ritems.push_back(SemItem{s[k].formula, s[k].tag});

            const size_t nl = litems.size() - 1;  // left slots besides X
            std::vector<Formula> lf, rf;
            for (const auto& itm : litems) lf.push_back(itm.formula);
            for (const auto& itm : ritems) rf.push_back(itm.formula);
            if (prefilter(lf) && prefilter(rf)) {
                const auto& lvals = values(litems);
                if (!lvals.empty()) {
                    const auto& rvals = values(ritems);
                    if (!rvals.empty()) {
                        // composite: tensor then put every block back in place
                        std::vector<Boundary> blocks;
                        for (const auto& itm : litems)
                            blocks.push_back(formula_boundary(itm.formula, atoms_));
                        for (const auto& itm : ritems)
                            blocks.push_back(formula_boundary(itm.formula, atoms_));
                        std::vector<int> perm;
                        size_t li = 0, ri = 0;
                        for (size_t k = 0; k < s.size(); ++k) {
                            if (k == principal) {
                                perm.push_back(static_cast<int>(nl));      // X
                                perm.push_back(static_cast<int>(nl + 1));  // Y
                            } else if (is_left[k]) {
                                perm.push_back(static_cast<int>(li++));
                            } else {
                                perm.push_back(static_cast<int>(nl + 2 + ri++));
                            }
                        }
                        Cowordism mover = permute(blocks, perm);
                        for (const auto& vl : lvals)
                            for (const auto& vr : rvals)
                                out.push_back(compose(tensor(vl, vr), mover));
                    }
                }
            }

            // odometer over per-run counts
            size_t g = 0;
            while (g < runs.size() && take[g] == avail[g]) take[g++] = 0;
            if (g == runs.size()) break;
            ++take[g];
        }
    }
    return out;
}

}  // namespace cow
