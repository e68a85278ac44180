#include "subiso/decomposition.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>

#include "subiso/core.hpp"

namespace subiso {
namespace {

using Mask = std::uint32_t;

struct Masks {
    std::vector<Mask> adj;
    explicit Masks(const Pattern& H) {
        if (H.n() > kMaxPatternNodes) throw InputError("pattern too large for decomposition");
        adj.assign(H.n(), 0);
        for (auto [u, v] : H.edges()) adj[u] |= Mask(1) << v, adj[v] |= Mask(1) << u;
    }
};

std::vector<int> to_vec(Mask m) {
    std::vector<int> v;
    for (int i = 0; m; ++i, m >>= 1)
        if (m & 1) v.push_back(i);
    return v;
}

Mask to_mask(const std::vector<int>& v) {
    Mask m = 0;
    for (int x : v) m |= Mask(1) << x;
    return m;
}

int count_components(const Masks& g, Mask s, int stop_at = 2) {
    int comps = 0;
    while (s) {
        Mask seen = s & (~s + 1), frontier = seen;
        while (frontier) {
            int u = __builtin_ctz(frontier);
            frontier &= frontier - 1;
            Mask nxt = g.adj[u] & s & ~seen;
            seen |= nxt;
            frontier |= nxt;
        }
        s &= ~seen;
        if (++comps >= stop_at) return comps;
    }
    return comps;
}

std::vector<Mask> components(const Masks& g, Mask s) {
    std::vector<Mask> out;
    while (s) {
        Mask seen = s & (~s + 1), frontier = seen;
        while (frontier) {
            int u = __builtin_ctz(frontier);
            frontier &= frontier - 1;
            Mask nxt = g.adj[u] & s & ~seen;
            seen |= nxt;
            frontier |= nxt;
        }
        out.push_back(seen);
        s &= ~seen;
    }
    return out;
}

// All cliques (including the empty one) inside `within`.
void for_each_clique(const Masks& g, Mask within, const std::function<void(Mask)>& fn) {
    std::function<void(Mask, Mask)> rec = [&](Mask clique, Mask cand) {
        fn(clique);
        while (cand) {
            int u = __builtin_ctz(cand);
            cand &= cand - 1;
            rec(clique | (Mask(1) << u), cand & g.adj[u]);
        }
    };
    rec(0, within);
}

bool separates(const Masks& g, Mask within, Mask c) {
    return c != within && count_components(g, within & ~c) >= 2;
}

std::vector<Mask> all_separators(const Masks& g, Mask within) {
    std::vector<Mask> out;
    for_each_clique(g, within, [&](Mask c) {
        if (separates(g, within, c)) out.push_back(c);
    });
    return out;
}

bool lex_less(Mask a, Mask b) { return to_vec(a) < to_vec(b); }

std::optional<Mask> lex_min(const std::vector<Mask>& v) {
    if (v.empty()) return std::nullopt;
    return *std::min_element(v.begin(), v.end(), lex_less);
}

std::optional<Mask> minimal_sep(const Masks& g, Mask within) {
    auto seps = all_separators(g, within);
    std::vector<Mask> minimal;
    for (Mask c : seps) {
        bool ok = true;
        for (Mask d : seps)
            if (d != c && (d & c) == d) {
                ok = false;
                break;
            }
        if (ok) minimal.push_back(c);
    }
    return lex_min(minimal);
}

std::optional<Mask> random_minimal_sep(const Masks& g, Mask within, std::mt19937_64& rng) {
    auto seps = all_separators(g, within);
    if (seps.empty()) return std::nullopt;
    Mask c = seps[std::uniform_int_distribution<std::size_t>(0, seps.size() - 1)(rng)];
    // shrink loop: drop single nodes while the rest still separates
    bool changed = true;
    while (changed) {
        changed = false;
        auto nodes = to_vec(c);
        std::shuffle(nodes.begin(), nodes.end(), rng);
        for (int x : nodes) {
            Mask d = c & ~(Mask(1) << x);
            if (separates(g, within, d)) {
                c = d;
                changed = true;
                break;
            }
        }
    }
    return c;
}

using SepFn = std::function<std::optional<Mask>(Mask)>;

SplitNode split_rec(const Masks& g, Mask within, const SepFn& sep) {
    SplitNode node;
    node.nodes = to_vec(within);
    auto c = sep(within);
    if (!c) return node;
    node.separator = to_vec(*c);
    for (Mask comp : components(g, within & ~*c)) node.children.push_back(split_rec(g, comp | *c, sep));
    return node;
}

void collect(const SplitNode& s, std::set<std::vector<int>>& out) {
    if (s.is_piece()) {
        out.insert(s.nodes);
        return;
    }
    for (auto& c : s.children) collect(c, out);
}

Decomposition from_tree(const SplitNode& root) {
    std::set<std::vector<int>> pieces;
    collect(root, pieces);
    return {std::vector<std::vector<int>>(pieces.begin(), pieces.end())};
}

Mask full_mask(const Pattern& H) { return H.n() == 32 ? ~Mask(0) : (Mask(1) << H.n()) - 1; }

}  // namespace

bool is_clique_separator(const Pattern& H, const std::vector<int>& C) {
    Masks g(H);
    Mask c = to_mask(C);
    for (int u : C)
        if ((g.adj[u] | (Mask(1) << u)) != ((g.adj[u] | (Mask(1) << u)) | c)) return false;
    return separates(g, full_mask(H), c);
}

std::optional<std::vector<int>> find_clique_separator(const Pattern& H) {
    Masks g(H);
    auto c = lex_min(all_separators(g, full_mask(H)));
    if (!c) return std::nullopt;
    return to_vec(*c);
}

std::optional<std::vector<int>> minimal_clique_separator(const Pattern& H) {
    Masks g(H);
    auto c = minimal_sep(g, full_mask(H));
    if (!c) return std::nullopt;
    return to_vec(*c);
}

std::optional<std::vector<int>> random_minimal_clique_separator(const Pattern& H, std::mt19937_64& rng) {
    Masks g(H);
    auto c = random_minimal_sep(g, full_mask(H), rng);
    if (!c) return std::nullopt;
    return to_vec(*c);
}

SplitNode split_tree(const Pattern& H) {
    Masks g(H);
    return split_rec(g, full_mask(H), [&](Mask w) { return minimal_sep(g, w); });
}

Decomposition decompose(const Pattern& H) { return from_tree(split_tree(H)); }

Decomposition decompose_randomized(const Pattern& H, std::mt19937_64& rng) {
    Masks g(H);
    return from_tree(split_rec(g, full_mask(H), [&](Mask w) { return random_minimal_sep(g, w, rng); }));
}

Decomposition decompose_brute(const Pattern& H) {
    Masks g(H);
    Mask full = full_mask(H);
    std::vector<Mask> free;
    for (Mask s = 1; s != 0 && s <= full; ++s) {
        if ((s & full) != s) continue;
        if (all_separators(g, s).empty()) free.push_back(s);
    }
    std::set<std::vector<int>> out;
    for (Mask s : free) {
        bool maximal = true;
        for (Mask t : free)
            if (t != s && (t & s) == s) {
                maximal = false;
                break;
            }
        if (maximal) out.insert(to_vec(s));
    }
    return {std::vector<std::vector<int>>(out.begin(), out.end())};
}

}  // namespace subiso
