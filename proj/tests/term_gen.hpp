#pragma once

// Random closed well-typed linear terms over the string signature, built by
// bounded backtracking on the typing rules. Shared by the unit tests and the
// acceptance binary.

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cowordism/acg.hpp"

namespace cowtest {

struct TermGen {
    std::mt19937 rng{20260814};
    cow::Alphabet ab{std::vector<std::string>{"a", "b"}};
    int fresh = 0;

    int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

    std::optional<cow::Term> gen(const cow::ImplType& want,
                                 std::vector<std::pair<std::string, cow::ImplType>> ctx,
                                 int fuel) {
        using cow::ImplType;
        using cow::Term;
        for (int attempt = 0; attempt < 4; ++attempt) {
            switch (pick(4)) {
                case 0:  // variable leaf
                    if (ctx.size() == 1 && ctx[0].second == want) return Term::var(ctx[0].first);
                    break;
                case 1:  // constant leaf
                    if (ctx.empty() && want == cow::str_type())
                        return Term::constant(ab.token(pick(static_cast<int>(ab.size()))));
                    break;
                case 2: {  // abstraction
                    if (want.kind() != ImplType::Kind::Arrow || fuel <= 0) break;
                    std::string x = "v" + std::to_string(++fresh);
                    auto inner = ctx;
                    inner.emplace_back(x, want.from());
                    if (auto body = gen(want.to(), inner, fuel - 1))
                        return Term::abs(x, *body);
                    break;
                }
                case 3: {  // application
                    if (fuel <= 0) break;
                    static const char* pool[] = {"O", "str", "fun"};
                    const char* which = pool[pick(3)];
                    ImplType a = which == std::string("O") ? ImplType::atom("O")
                                 : which == std::string("str")
                                     ? cow::str_type()
                                     : ImplType::arrow(cow::str_type(), cow::str_type());
                    // split the context randomly between argument and function
                    std::vector<std::pair<std::string, ImplType>> ca, cf;
                    for (auto& e : ctx) (pick(2) ? ca : cf).push_back(e);
                    auto arg = gen(a, ca, fuel - 1);
                    if (!arg) break;
                    auto fun = gen(ImplType::arrow(a, want), cf, fuel - 1);
                    if (!fun) break;
                    return Term::app(*fun, *arg);
                }
            }
        }
        return std::nullopt;
    }
};

}  // namespace cowtest
