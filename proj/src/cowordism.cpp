#include "cowordism/cowordism.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cow {

int Boundary::lefts() const {
    int n = 0;
    for (Tag t : tags)
        if (t == Tag::Left) ++n;
    return n;
}

int Boundary::rights() const { return static_cast<int>(tags.size()) - lefts(); }

Boundary dual(const Boundary& b) {
    Boundary d;
    d.tags.reserve(b.tags.size());
    for (Tag t : b.tags) d.tags.push_back(t == Tag::Left ? Tag::Right : Tag::Left);
    return d;
}

Boundary tensor(const Boundary& a, const Boundary& b) {
    Boundary r = a;
    r.tags.insert(r.tags.end(), b.tags.begin(), b.tags.end());
    return r;
}

Boundary tensor_all(const std::vector<Boundary>& bs) {
    Boundary r;
    for (const auto& b : bs) r.tags.insert(r.tags.end(), b.tags.begin(), b.tags.end());
    return r;
}

Boundary boundary_from_counts(int lefts, int rights) {
    if (lefts < 0 || rights < 0) throw std::invalid_argument("negative port count");
    Boundary b;
    for (int i = 0; i < std::max(lefts, rights); ++i) {
        if (i < lefts) b.tags.push_back(Tag::Left);
        if (i < rights) b.tags.push_back(Tag::Right);
    }
    return b;
}

std::string describe(const Boundary& b) {
    std::string s;
    for (Tag t : b.tags) s += (t == Tag::Left ? 'L' : 'R');
    return s;
}

// A port is an edge origin iff it is target-Right or source-Left.
static bool is_from_port(const Boundary& src, const Boundary& tgt, Port p) {
    Tag t = (p.side == Port::Side::Source) ? src.tags.at(static_cast<size_t>(p.index))
                                           : tgt.tags.at(static_cast<size_t>(p.index));
    return (p.side == Port::Side::Target) == (t == Tag::Right);
}

Cowordism::Cowordism(Boundary source, Boundary target, std::vector<CwEdge> edges,
                     std::vector<CyclicWord> cycles)
    : src_(std::move(source)), tgt_(std::move(target)), edges_(std::move(edges)),
      cycles_(std::move(cycles)) {
    size_t want = 0;
    for (size_t i = 0; i < src_.size(); ++i)
        if (src_.tags[i] == Tag::Left) ++want;
    for (size_t i = 0; i < tgt_.size(); ++i)
        if (tgt_.tags[i] == Tag::Right) ++want;
    if (edges_.size() != want)
        throw std::invalid_argument("cowordism: edge count does not match boundary");

    std::vector<bool> from_seen(src_.size() + tgt_.size(), false);
    std::vector<bool> to_seen(src_.size() + tgt_.size(), false);
    auto slot = [&](Port p) -> size_t {
        size_t base = (p.side == Port::Side::Source) ? 0 : src_.size();
        size_t limit = (p.side == Port::Side::Source) ? src_.size() : tgt_.size();
        if (p.index < 0 || static_cast<size_t>(p.index) >= limit)
            throw std::invalid_argument("cowordism: port index out of range");
        return base + static_cast<size_t>(p.index);
    };
    for (const auto& e : edges_) {
        size_t fs = slot(e.from), ts = slot(e.to);  // range-checks first
        if (!is_from_port(src_, tgt_, e.from) || is_from_port(src_, tgt_, e.to))
            throw std::invalid_argument("cowordism: edge violates port orientation");
        if (from_seen[fs] || to_seen[ts])
            throw std::invalid_argument("cowordism: port used twice");
        from_seen[fs] = to_seen[ts] = true;
    }
    std::sort(edges_.begin(), edges_.end());
    std::sort(cycles_.begin(), cycles_.end());
}

Cowordism compose(const Cowordism& f, const Cowordism& g) {
    if (f.target() != g.source())
        throw std::invalid_argument("compose: middle boundaries differ");
    const size_t m = f.source().size();
    const size_t k = f.target().size();
    const size_t n = g.target().size();
    // global endpoint ids: f.src, f.tgt, g.src, g.tgt
    auto fsrc = [&](int32_t i) { return static_cast<size_t>(i); };
    auto ftgt = [&](int32_t i) { return m + static_cast<size_t>(i); };
    auto gsrc = [&](int32_t i) { return m + k + static_cast<size_t>(i); };
    auto gtgt = [&](int32_t i) { return m + 2 * k + static_cast<size_t>(i); };
    const size_t total = m + 2 * k + n;

    struct E {
        size_t from, to;
        const Word* label;
    };
    std::vector<E> es;
    es.reserve(f.edges().size() + g.edges().size());
    auto put = [&](const Cowordism& c, auto at_src, auto at_tgt) {
        for (const auto& e : c.edges()) {
            size_t a = (e.from.side == Port::Side::Source) ? at_src(e.from.index)
                                                           : at_tgt(e.from.index);
            size_t b = (e.to.side == Port::Side::Source) ? at_src(e.to.index)
                                                         : at_tgt(e.to.index);
            es.push_back(E{a, b, &e.label});
        }
    };
    put(f, fsrc, ftgt);
    put(g, gsrc, gtgt);

    constexpr size_t none = static_cast<size_t>(-1);
    std::vector<size_t> edge_at_tail(total, none);
    for (size_t i = 0; i < es.size(); ++i) edge_at_tail[es[i].from] = i;
    // identify the shared boundary: each pair is (head endpoint -> next tail)
    std::vector<size_t> next_tail(total, none);
    for (size_t p = 0; p < k; ++p) {
        if (f.target().tags[p] == Tag::Right)
            next_tail[gsrc(static_cast<int32_t>(p))] = ftgt(static_cast<int32_t>(p));
        else
            next_tail[ftgt(static_cast<int32_t>(p))] = gsrc(static_cast<int32_t>(p));
    }

    std::vector<bool> visited(es.size(), false);
    std::vector<CwEdge> out_edges;
    auto walk = [&](size_t start_tail) {
        size_t ei = edge_at_tail[start_tail];
        if (ei == none) throw std::logic_error("compose: dangling tail");
        Word label = *es[ei].label;
        visited[ei] = true;
        size_t h = es[ei].to;
        while (next_tail[h] != none) {
            size_t t = next_tail[h];
            ei = edge_at_tail[t];
            visited[ei] = true;
            label.insert(label.end(), es[ei].label->begin(), es[ei].label->end());
            h = es[ei].to;
        }
        auto decode = [&](size_t v) -> Port {
            if (v < m) return Port::src(static_cast<int32_t>(v));
            if (v >= m + 2 * k) return Port::tgt(static_cast<int32_t>(v - m - 2 * k));
            throw std::logic_error("compose: walk ended on glued boundary");
        };
        out_edges.push_back(CwEdge{decode(start_tail), decode(h), std::move(label)});
    };
    for (size_t i = 0; i < m; ++i)
        if (f.source().tags[i] == Tag::Left) walk(i);
    for (size_t j = 0; j < n; ++j)
        if (g.target().tags[j] == Tag::Right) walk(gtgt(static_cast<int32_t>(j)));

    std::vector<CyclicWord> cycles = f.cycles();
    cycles.insert(cycles.end(), g.cycles().begin(), g.cycles().end());
    for (size_t i = 0; i < es.size(); ++i) {
        if (visited[i]) continue;
        // closed loop through the glued boundary
        Word acc = *es[i].label;
        visited[i] = true;
        size_t h = es[i].to;
        while (true) {
            size_t t = next_tail[h];
            if (t == none) throw std::logic_error("compose: broken loop");
            size_t ei = edge_at_tail[t];
            if (ei == i) break;
            visited[ei] = true;
            acc.insert(acc.end(), es[ei].label->begin(), es[ei].label->end());
            h = es[ei].to;
        }
        cycles.push_back(CyclicWord::of(acc));
    }
    return Cowordism(f.source(), g.target(), std::move(out_edges), std::move(cycles));
}

Cowordism identity(const Boundary& x) {
    std::vector<CwEdge> es;
    for (size_t i = 0; i < x.size(); ++i) {
        auto idx = static_cast<int32_t>(i);
        if (x.tags[i] == Tag::Right)
            es.push_back(CwEdge{Port::tgt(idx), Port::src(idx), {}});
        else
            es.push_back(CwEdge{Port::src(idx), Port::tgt(idx), {}});
    }
    return Cowordism(x, x, std::move(es));
}

Cowordism tensor(const Cowordism& f, const Cowordism& g) {
    auto ds = static_cast<int32_t>(f.source().size());
    auto dt = static_cast<int32_t>(f.target().size());
    std::vector<CwEdge> es = f.edges();
    auto shift = [&](Port p) {
        return Port{p.side, p.index + (p.side == Port::Side::Source ? ds : dt)};
    };
    for (const auto& e : g.edges())
        es.push_back(CwEdge{shift(e.from), shift(e.to), e.label});
    std::vector<CyclicWord> cyc = f.cycles();
    cyc.insert(cyc.end(), g.cycles().begin(), g.cycles().end());
    return Cowordism(tensor(f.source(), g.source()), tensor(f.target(), g.target()),
                     std::move(es), std::move(cyc));
}

Cowordism tensor_all(const std::vector<Cowordism>& fs) {
    Cowordism r;
    for (const auto& f : fs) r = tensor(r, f);
    return r;
}

static CwEdge wire(Tag t, int32_t src_index, int32_t tgt_index) {
    if (t == Tag::Right) return CwEdge{Port::tgt(tgt_index), Port::src(src_index), {}};
    return CwEdge{Port::src(src_index), Port::tgt(tgt_index), {}};
}

Cowordism symmetry(const Boundary& x, const Boundary& y) {
    auto nx = static_cast<int32_t>(x.size());
    auto ny = static_cast<int32_t>(y.size());
    std::vector<CwEdge> es;
    for (int32_t i = 0; i < nx; ++i)
        es.push_back(wire(x.tags[static_cast<size_t>(i)], i, ny + i));
    for (int32_t j = 0; j < ny; ++j)
        es.push_back(wire(y.tags[static_cast<size_t>(j)], nx + j, j));
    return Cowordism(tensor(x, y), tensor(y, x), std::move(es));
}

Cowordism permute(const std::vector<Boundary>& blocks, const std::vector<int>& perm) {
    const size_t n = blocks.size();
    if (perm.size() != n) throw std::invalid_argument("permute: size mismatch");
    std::vector<bool> seen(n, false);
    for (int p : perm) {
        if (p < 0 || static_cast<size_t>(p) >= n || seen[static_cast<size_t>(p)])
            throw std::invalid_argument("permute: not a permutation");
        seen[static_cast<size_t>(p)] = true;
    }
    std::vector<int32_t> src_off(n + 1, 0);
    for (size_t b = 0; b < n; ++b)
        src_off[b + 1] = src_off[b] + static_cast<int32_t>(blocks[b].size());
    std::vector<CwEdge> es;
    Boundary tgt;
    int32_t t_off = 0;
    for (size_t k = 0; k < n; ++k) {
        const Boundary& blk = blocks[static_cast<size_t>(perm[k])];
        for (size_t o = 0; o < blk.size(); ++o)
            es.push_back(wire(blk.tags[o], src_off[static_cast<size_t>(perm[k])] + static_cast<int32_t>(o),
                              t_off + static_cast<int32_t>(o)));
        tgt.tags.insert(tgt.tags.end(), blk.tags.begin(), blk.tags.end());
        t_off += static_cast<int32_t>(blk.size());
    }
    return Cowordism(tensor_all(blocks), std::move(tgt), std::move(es));
}

Cowordism dual(const Cowordism& f) {
    auto flip = [](Port p) {
        return Port{p.side == Port::Side::Source ? Port::Side::Target : Port::Side::Source,
                    p.index};
    };
    std::vector<CwEdge> es;
    es.reserve(f.edges().size());
    for (const auto& e : f.edges()) es.push_back(CwEdge{flip(e.from), flip(e.to), e.label});
    return Cowordism(dual(f.target()), dual(f.source()), std::move(es), f.cycles());
}

Cowordism name_of(const Cowordism& f) {
    auto m = static_cast<int32_t>(f.source().size());
    auto bend = [&](Port p) {
        return Port::tgt(p.side == Port::Side::Source ? p.index : m + p.index);
    };
    std::vector<CwEdge> es;
    es.reserve(f.edges().size());
    for (const auto& e : f.edges()) es.push_back(CwEdge{bend(e.from), bend(e.to), e.label});
    return Cowordism(Boundary{}, tensor(dual(f.source()), f.target()), std::move(es),
                     f.cycles());
}

Cowordism unname(const Cowordism& f, const Boundary& x) {
    if (!f.source().tags.empty())
        throw std::invalid_argument("unname: operand must be closed (source 1)");
    const Boundary dx = dual(x);
    if (f.target().size() < dx.size() ||
        !std::equal(dx.tags.begin(), dx.tags.end(), f.target().tags.begin()))
        throw std::invalid_argument("unname: target does not start with the dual boundary");
    auto m = static_cast<int32_t>(x.size());
    Boundary tgt{std::vector<Tag>(f.target().tags.begin() + m, f.target().tags.end())};
    auto remap = [&](Port p) {
        return p.index < m ? Port::src(p.index) : Port::tgt(p.index - m);
    };
    std::vector<CwEdge> es;
    es.reserve(f.edges().size());
    for (const auto& e : f.edges()) es.push_back(CwEdge{remap(e.from), remap(e.to), e.label});
    return Cowordism(x, std::move(tgt), std::move(es), f.cycles());
}

Cowordism counit(const Boundary& a) {
    auto n = static_cast<int32_t>(a.size());
    std::vector<CwEdge> es;
    for (int32_t i = 0; i < n; ++i) {
        if (a.tags[static_cast<size_t>(i)] == Tag::Right)
            es.push_back(CwEdge{Port::src(n + i), Port::src(i), {}});
        else
            es.push_back(CwEdge{Port::src(i), Port::src(n + i), {}});
    }
    return Cowordism(tensor(a, dual(a)), Boundary{}, std::move(es));
}

Cowordism evaluation(const Boundary& a, const Boundary& b) {
    return tensor(counit(a), identity(b));
}

Cowordism apply(const Cowordism& sigma, const Cowordism& tau) {
    if (!tau.source().tags.empty() || !sigma.source().tags.empty())
        throw std::invalid_argument("apply: operands must be closed (source 1)");
    const Boundary& a = tau.target();
    const Boundary da = dual(a);
    if (sigma.target().size() < da.size() ||
        !std::equal(da.tags.begin(), da.tags.end(), sigma.target().tags.begin()))
        throw std::invalid_argument("apply: sigma target does not start with the dual argument");
    Boundary b;
    b.tags.assign(sigma.target().tags.begin() + static_cast<long>(da.size()),
                  sigma.target().tags.end());
    return compose(tensor(tau, sigma), evaluation(a, b));
}

Cowordism partial_pair(const Cowordism& tau, const Cowordism& sigma, const Boundary& u) {
    if (!tau.source().tags.empty() || !sigma.source().tags.empty())
        throw std::invalid_argument("partial_pair: operands must be closed (source 1)");
    if (tau.target().size() < u.size() ||
        !std::equal(u.tags.begin(), u.tags.end(),
                    tau.target().tags.end() - static_cast<long>(u.size())))
        throw std::invalid_argument("partial_pair: tau target does not end with U");
    const Boundary du = dual(u);
    if (sigma.target().size() < du.size() ||
        !std::equal(du.tags.begin(), du.tags.end(), sigma.target().tags.begin()))
        throw std::invalid_argument("partial_pair: sigma target does not start with U dual");
    Boundary a, b;
    a.tags.assign(tau.target().tags.begin(),
                  tau.target().tags.end() - static_cast<long>(u.size()));
    b.tags.assign(sigma.target().tags.begin() + static_cast<long>(du.size()),
                  sigma.target().tags.end());
    return compose(tensor(tau, sigma),
                   tensor(tensor(identity(a), counit(u)), identity(b)));
}

Cowordism pattern(const Cowordism& f) {
    std::vector<CwEdge> es;
    es.reserve(f.edges().size());
    for (const auto& e : f.edges()) es.push_back(CwEdge{e.from, e.to, {}});
    std::vector<CyclicWord> cyc(f.cycles().size(), CyclicWord{});
    return Cowordism(f.source(), f.target(), std::move(es), std::move(cyc));
}

Cowordism word_diagram(const Word& w) {
    Boundary s{{Tag::Left, Tag::Right}};
    return Cowordism(Boundary{}, s, {CwEdge{Port::tgt(1), Port::tgt(0), w}});
}

std::map<Symbol, int> letters(const Cowordism& f) {
    std::map<Symbol, int> m;
    for (const auto& e : f.edges())
        for (Symbol s : e.label) ++m[s];
    for (const auto& c : f.cycles())
        for (Symbol s : c.rep) ++m[s];
    return m;
}

Multiword underlying_multiword(const Cowordism& f) {
    auto at = [&](Port p) {
        return static_cast<VertexId>(
            p.side == Port::Side::Source ? p.index
                                         : static_cast<int32_t>(f.source().size()) + p.index);
    };
    Multiword m;
    for (const auto& e : f.edges()) m.edges.push_back(MwEdge{at(e.from), at(e.to), e.label});
    m.cycles = f.cycles();
    m.normalize();
    m.validate();
    return m;
}

std::string to_dot(const Cowordism& f, const Alphabet& a) {
    auto quoted = [&](const Word& w) {
        std::string out = "\\\"";
        for (char c : a.format_word(w)) {
            if (c == '"' || c == '\\') out += '\\';
            out += c;
        }
        out += "\\\"";
        return out;
    };
    auto node = [](Port p) {
        return (p.side == Port::Side::Source ? "s" : "t") + std::to_string(p.index);
    };
    std::string out = "digraph cowordism {\n";
    for (size_t i = 0; i < f.source().size(); ++i)
        out += "  s" + std::to_string(i) + " [shape=circle label=\"s" + std::to_string(i) +
               (f.source().tags[i] == Tag::Left ? ":L" : ":R") + "\"];\n";
    for (size_t i = 0; i < f.target().size(); ++i)
        out += "  t" + std::to_string(i) + " [shape=circle label=\"t" + std::to_string(i) +
               (f.target().tags[i] == Tag::Left ? ":L" : ":R") + "\"];\n";
    for (const auto& e : f.edges())
        out += "  " + node(e.from) + " -> " + node(e.to) + " [label=\"" + quoted(e.label) +
               "\"];\n";
    for (size_t i = 0; i < f.cycles().size(); ++i) {
        std::string c = "c" + std::to_string(i);
        out += "  " + c + " [shape=point];\n";
        out += "  " + c + " -> " + c + " [label=\"" + quoted(f.cycles()[i].rep) + "\"];\n";
    }
    out += "}\n";
    return out;
}

}  // namespace cow
