#include "cowordism/ssp.hpp"

#include <cstdlib>
#include <stdexcept>

namespace cow {

namespace {

// Symbol ids in declaration order of the grammar's alphabet.
constexpr Symbol kPlus = 0;
constexpr Symbol kMinus = 1;
constexpr Symbol kBullet = 2;

Alphabet ssp_alphabet() { return Alphabet({"+", "-", "•"}); }

}  // namespace

std::map<std::string, Cowordism> builtin_cowordisms() {
    const Boundary one = boundary_from_counts(1, 1);     // any of P, H, S
    const Boundary two = tensor(one, one);
    const Word plus{kPlus}, minus{kMinus}, bullet{kBullet};

    std::map<std::string, Cowordism> m;
    // Concatenation: the first list's tail feeds the second list's head.
    const Cowordism concat(two, one,
                           {{Port::tgt(1), Port::src(1), {}},
                            {Port::src(0), Port::src(3), {}},
                            {Port::src(2), Port::tgt(0), {}}});
    const Cowordism wires(one, one,
                          {{Port::tgt(1), Port::src(1), {}},
                           {Port::src(0), Port::tgt(0), {}}});
    const Cowordism cap({}, one, {{Port::tgt(1), Port::tgt(0), bullet}});
    auto prepend = [&](const Word& sign) {
        return Cowordism(one, one,
                         {{Port::tgt(1), Port::src(1), sign},
                          {Port::src(0), Port::tgt(0), {}}});
    };
    m.emplace("cons", concat);
    m.emplace("open", wires);
    m.emplace("push", Cowordism(two, two,
                                {{Port::tgt(1), Port::src(1), plus},
                                 {Port::src(0), Port::tgt(0), {}},
                                 {Port::tgt(3), Port::src(3), minus},
                                 {Port::src(2), Port::tgt(2), {}}}));
    m.emplace("close", cap);
    m.emplace("open_P", concat);
    m.emplace("close_P", cap);
    m.emplace("push_plus", prepend(plus));
    m.emplace("push_minus", prepend(minus));
    m.emplace("open_P_after", concat);
    return m;
}

Llg ssp_grammar() {
    const Boundary one = boundary_from_counts(1, 1);
    const Formula P = Formula::lit("P"), H = Formula::lit("H"),
                  S = Formula::lit("S");
    auto b = builtin_cowordisms();

    Llg g;
    g.alphabet = ssp_alphabet();
    g.atom_order = {"P", "H", "S"};
    g.atoms = {{"P", one}, {"H", one}, {"S", one}};
    g.start = "S";
    auto add = [&](const std::string& name, Formula type) {
        g.lexicon.push_back({name, type, name_of(b.at(name))});
    };
    add("cons", loli(Formula::tensor(S, S), S));
    add("open", loli(H, S));
    add("push", loli(Formula::tensor(H, H), Formula::tensor(H, H)));
    add("close", H);
    add("open_P", loli(Formula::tensor(P, S), S));
    add("close_P", P);
    add("push_plus", loli(P, P));
    add("push_minus", loli(P, P));
    add("open_P_after", loli(Formula::tensor(S, P), S));
    g.validate();
    return g;
}

bool ssp_oracle(const std::vector<long long>& s) {
    if (s.size() > 24)
        throw std::invalid_argument("ssp_oracle: sequence too long for brute force");
    for (unsigned long long mask = 1; mask < (1ull << s.size()); ++mask) {
        long long sum = 0;
        for (size_t i = 0; i < s.size(); ++i)
            if (mask >> i & 1) sum += s[i];
        if (sum == 0) return true;
    }
    return false;
}

Word irreducible_list(const std::vector<long long>& s) {
    Word w;
    for (long long z : s) {
        for (long long k = std::llabs(z); k > 0; --k)
            w.push_back(z > 0 ? kPlus : kMinus);
        w.push_back(kBullet);
    }
    return w;
}

int ssp_axiom_budget(const Word& w) {
    int bullets = 0;
    for (Symbol a : w)
        if (a == kBullet) ++bullets;
    return 3 * bullets + static_cast<int>(w.size() - bullets);
}

}  // namespace cow
