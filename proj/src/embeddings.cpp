#include "subiso/embeddings.hpp"

#include <algorithm>
#include <bitset>
#include <functional>

#include "subiso/lift.hpp"

namespace subiso {

void CliqueEmbedding::normalize() {
    for (auto& im : images) {
        std::sort(im.begin(), im.end());
        im.erase(std::unique(im.begin(), im.end()), im.end());
    }
    std::sort(images.begin(), images.end());
}

bool images_touch(const Pattern& H, const std::vector<int>& x, const std::vector<int>& y) {
    for (int u : x)
        for (int v : y)
            if (u == v || H.has_edge(u, v)) return true;
    return false;
}

std::string embedding_error(const Pattern& H, const CliqueEmbedding& psi) {
    for (std::size_t i = 0; i < psi.images.size(); ++i) {
        const auto& im = psi.images[i];
        if (im.empty()) return "image " + std::to_string(i) + " is empty";
        for (int u : im)
            if (u < 0 || u >= H.n()) return "image " + std::to_string(i) + " leaves the pattern";
        if (!H.connected_subset(im)) return "image " + std::to_string(i) + " is disconnected";
    }
    for (std::size_t i = 0; i < psi.images.size(); ++i)
        for (std::size_t j = i + 1; j < psi.images.size(); ++j)
            if (!images_touch(H, psi.images[i], psi.images[j]))
                return "images " + std::to_string(i) + " and " + std::to_string(j) + " do not touch";
    return {};
}

bool validate(const Pattern& H, const CliqueEmbedding& psi) { return embedding_error(H, psi).empty(); }

int weak_edge_depth(const Pattern& H, const CliqueEmbedding& psi) {
    if (auto err = embedding_error(H, psi); !err.empty()) throw InputError("invalid clique embedding: " + err);
    int best = 0;
    for (auto [a, b] : H.edges()) {
        int d = 0;
        for (const auto& im : psi.images)
            d += std::binary_search(im.begin(), im.end(), a) || std::binary_search(im.begin(), im.end(), b);
        best = std::max(best, d);
    }
    return best;
}

CliqueEmbedding lift_embedding(const Pattern& H, const Pattern& Hp, const std::vector<std::vector<int>>& branch_sets,
                               const CliqueEmbedding& psi) {
    check_minor_witness(H, Hp, branch_sets);
    CliqueEmbedding out;
    for (const auto& im : psi.images) {
        std::vector<int> big;
        for (int x : im) big.insert(big.end(), branch_sets[x].begin(), branch_sets[x].end());
        out.images.push_back(std::move(big));
    }
    out.normalize();
    return out;
}

CliqueEmbedding goggles_embedding() {
    Pattern g = patterns::goggles();
    auto ids = [&](std::initializer_list<const char*> xs) {
        std::vector<int> v;
        for (const char* x : xs) v.push_back(g.find(x));
        return v;
    };
    CliqueEmbedding e{{ids({"b3"}), ids({"a3"}), ids({"b2", "a1", "a2"}), ids({"b4", "a1", "a4"})}};
    e.normalize();
    return e;
}

namespace {

// Node ids of p_triple(alpha, beta, gamma); b_0 = a_0 and b_beta = a_alpha.
struct PNodes {
    int alpha, beta, gamma;
    int a(int i) const { return i; }
    int b(int j) const { return j == 0 ? 0 : j == beta ? alpha : alpha + j; }
    int c(int l) const { return alpha + std::max(beta - 1, 0) + l; }
};

// Builds one image as a walk of path segments; repeated junction nodes collapse.
class Walk {
public:
    explicit Walk(const PNodes& p) : p_(p) {}
    Walk& a(int from, int to) { return seg(from, to, [&](int i) { return p_.a(i); }); }
    Walk& b(int from, int to) { return seg(from, to, [&](int j) { return p_.b(j); }); }
    Walk& c(int l) {
        push(p_.c(l));
        return *this;
    }
    std::vector<int> nodes() const { return nodes_; }

private:
    template <class F>
    Walk& seg(int from, int to, F id) {
        const int step = from <= to ? 1 : -1;
        for (int i = from;; i += step) {
            push(id(i));
            if (i == to) break;
        }
        return *this;
    }
    void push(int v) {
        if (nodes_.empty() || nodes_.back() != v) nodes_.push_back(v);
    }
    const PNodes& p_;
    std::vector<int> nodes_;
};

void put(CliqueEmbedding& e, int times, const Walk& w) {
    if (times < 0) throw std::logic_error("negative multiplicity in a construction");
    for (int i = 0; i < times; ++i) e.images.push_back(w.nodes());
}

void need(bool ok, const char* what) {
    if (!ok) throw InputError(std::string("parameters outside the range of ") + what);
}

// Contract the path x_1 .. x_{cut+1} of `path` (given as node ids of H, starting next to a hub) so that
// the result is H with that path shortened by `cut` edges. Returns branch sets indexed by Hp's nodes.
std::vector<std::vector<int>> shorten_branches(const PTriple& big, const PTriple& small, bool on_a) {
    PNodes H{big.alpha, big.beta, big.gamma}, Hp{small.alpha, small.beta, small.gamma};
    const int n = small.alpha + 1 + std::max(small.beta - 1, 0) + small.gamma;
    std::vector<std::vector<int>> br(n);
    const int cut = on_a ? big.alpha - small.alpha : big.beta - small.beta;
    for (int i = 0; i <= small.alpha; ++i) {
        if (on_a && i == 1) {
            for (int t = 1; t <= 1 + cut; ++t) br[Hp.a(i)].push_back(H.a(t));
        } else {
            br[Hp.a(i)].push_back(H.a(on_a && i > 1 ? i + cut : i));
        }
    }
    for (int j = 1; j < small.beta; ++j) {
        if (!on_a && j == 1) {
            for (int t = 1; t <= 1 + cut; ++t) br[Hp.b(j)].push_back(H.b(t));
        } else {
            br[Hp.b(j)].push_back(H.b(!on_a && j > 1 ? j + cut : j));
        }
    }
    for (int l = 1; l <= small.gamma; ++l) br[Hp.c(l)].push_back(H.c(l));
    return br;
}

LowerBound shifted(const LowerBound& inner, const PTriple& big, const PTriple& small, bool on_a) {
    Pattern H = patterns::p_triple(big.alpha, big.beta, big.gamma);
    auto br = shorten_branches(big, small, on_a);
    LowerBound out{H, lift_embedding(H, inner.pattern, br, inner.psi), {}};
    out.how = inner.how + " on P(" + std::to_string(small.alpha) + "," + std::to_string(small.beta) + "," +
              std::to_string(small.gamma) + ")";
    return out;
}

}  // namespace

LowerBound build_embedding_pa2c(int alpha, int gamma) {
    need(alpha >= 3 && alpha % 2 == 1 && gamma >= 2, "the P(alpha, gamma x 2) construction");
    const PNodes P{alpha, 0, gamma};
    const int l = (alpha - 1) / 2;
    LowerBound out{patterns::p_triple(alpha, 0, gamma), {}, "pa2c"};
    auto& e = out.psi;
    // the cycle a_0 .. a_alpha c_1, as a node list of length 2l+3
    std::vector<int> cyc;
    for (int i = 0; i <= alpha; ++i) cyc.push_back(P.a(i));
    cyc.push_back(P.c(1));
    const int len = static_cast<int>(cyc.size());
    for (int s = 0; s < len; ++s) {  // A: every path of l edges on the cycle
        std::vector<int> im;
        for (int t = 0; t <= l; ++t) im.push_back(cyc[(s + t) % len]);
        e.images.push_back(im);
    }
    put(e, gamma - 1, Walk(P).a(0, l));  // B
    put(e, gamma - 1, Walk(P).a(l + 1, alpha));
    for (int i = 2; i <= gamma; ++i) {  // C
        put(e, 1, Walk(P).c(i).a(0, l - 1));
        put(e, 1, Walk(P).c(i).a(alpha, l + 2));
    }
    e.normalize();
    return out;
}

Rational pabc_construction_value(PabcConstruction which, int alpha, int beta, int gamma) {
    const Rational a = alpha, b = beta, g = gamma;
    switch (which) {
        case PabcConstruction::OddWide: return 2 * b * g + a * b / 2 - b * b / 2 + 2 * b - a / 2 - 4 * g - Rational(3, 2);
        case PabcConstruction::OddNarrow: return 2 * b * g + a * b / 2 - b * b / 2 + b - a / 2 - 2 * g + Rational(3, 2);
        default: return 2 * b * g + a * b / 2 - b * b / 2 + 3 * b / 2 - a / 2 - 3 * g;
    }
}

LowerBound build_pabc_construction(PabcConstruction which, int alpha, int beta, int gamma) {
    const int al = alpha, be = beta, ga = gamma;
    const bool odd = (al + be) % 2 == 1;
    const PNodes P{al, be, ga};
    LowerBound out{patterns::p_triple(al, be, ga), {}, {}};
    auto& e = out.psi;
    auto W = [&] { return Walk(P); };

    if (which == PabcConstruction::OddWide) {
        need(al >= be && be >= 5 && odd && ga >= 1, "the odd-wide construction");
        out.how = "pabc-odd-wide";
        const int h = (al - be + 3) / 2, L = (al + be - 3) / 2;
        for (int l = 1; l <= h; ++l) put(e, 1, W().a(l, l + L - 1));  // A
        put(e, ga + h, W().b(be - 2, 0).a(0, h - 1));                  // B
        for (int l = 0; l <= be - 4; ++l) put(e, 2 * ga + h, W().b(be - 3 - l, 0).a(0, h + l));
        put(e, ga + h, W().a(L + 1, al).b(be - 1, 2));  // C
        // heavy C paths start at a_{L-l}; printed elsewhere as a_{L+l}, which breaks the stated lengths
        for (int l = 0; l <= be - 4; ++l) put(e, 2 * ga + h, W().a(L - l, al).b(be - 1, l + 3));
        for (int l = 2; l <= h; ++l) put(e, 1, W().a(L + l, al).c(1).a(0, l - 2));  // D
        for (int l = 1; l <= ga; ++l) put(e, 1, W().c(l).a(0, h - 1));             // E
        for (int l = 1; l <= ga; ++l) put(e, 1, W().a(L + 1, al).c(l));            // F
    } else if (which == PabcConstruction::OddNarrow) {
        need(al >= be && be >= 3 && odd && ga >= 1, "the odd-narrow construction");
        out.how = "pabc-odd-narrow";
        const int h = (al - be - 1) / 2, M = (al + be + 1) / 2;
        for (int l = 1; l <= h + 1; ++l) put(e, 1, W().a(l, l + M - 2));  // A
        put(e, 1, W().b(be - 1, 0).a(0, h));                              // B
        for (int l = 1; l <= be - 2; ++l) put(e, 2 * ga + h + 1, W().b(be - l - 1, 0).a(0, h + l));
        put(e, ga + 1, W().a(0, M - 2));
        put(e, 1, W().a(M, al).b(be - 1, 1));  // C
        for (int l = 3; l <= be; ++l) put(e, 2 * ga + h + 1, W().a(h + l, al).b(be - 1, be - l + 2));
        put(e, ga + 1, W().a(h + 2, al));
        if (al >= be + 3)
            for (int l = 1; l <= h; ++l) put(e, 1, W().a(M + l, al).c(1).a(0, l - 1));  // D
        for (int l = 1; l <= ga; ++l) put(e, 1, W().c(l).a(0, h));                      // E
        for (int l = 1; l <= ga; ++l) put(e, 1, W().a(M, al).c(l));                     // F
    } else {
        need(al >= be && be >= 3 && !odd && ga >= 1, "the even construction");
        out.how = "pabc-even";
        const int h = (al - be) / 2, M = (al + be) / 2;
        for (int l = 1; l <= h + 1; ++l) put(e, 1, W().a(l, l + M - 2));  // A
        put(e, 1, W().b(be - 1, 0).a(0, h));                              // B
        for (int l = 1; l <= be - 2; ++l) put(e, 2 * ga + h + 1, W().b(be - l - 1, 0).a(0, h + l));
        put(e, ga + 1, W().a(h + 2, al));  // C
        for (int l = 3; l <= be - 1; ++l) put(e, 2 * ga + h + 1, W().a(h + l, al).b(be - 1, be - l + 2));
        put(e, ga + h + 1, W().a(M, al).b(be - 1, 2));
        if (al > be)
            for (int l = 1; l <= h; ++l) put(e, 1, W().a(M + l, al).c(1).a(0, l - 1));  // D
        for (int l = 1; l <= ga; ++l) put(e, 1, W().c(l).a(0, h));                      // E
        for (int l = 1; l <= ga; ++l) put(e, 1, W().a(M, al).c(l));                     // F
    }
    e.normalize();
    return out;
}

LowerBound build_embedding_pabc(int alpha, int beta, int gamma) {
    const PTriple t{alpha, beta, gamma};
    need(alpha >= beta && beta >= 3 && gamma >= 1, "the P(alpha, beta, gamma x 2) dispatch");
    switch (savings_case(t)) {
        case 1: {
            PTriple s{alpha - 1, beta, gamma};
            return shifted(build_pabc_construction(PabcConstruction::OddNarrow, s.alpha, s.beta, s.gamma), t, s, true);
        }
        case 2: return build_pabc_construction(PabcConstruction::Even, alpha, beta, gamma);
        case 3: {
            PTriple s{alpha, beta - 1, gamma};
            return shifted(build_pabc_construction(PabcConstruction::OddWide, s.alpha, s.beta, s.gamma), t, s, false);
        }
        case 4: return build_pabc_construction(PabcConstruction::OddNarrow, alpha, beta, gamma);
        case 5: return build_pabc_construction(PabcConstruction::OddWide, alpha, beta, gamma);
        default: {
            const int x2 = ((alpha - 1) % 4) + 3;  // twice the offset
            PTriple s{alpha, (alpha + x2) / 2 + 2 * gamma, gamma};
            return shifted(build_pabc_construction(PabcConstruction::OddWide, s.alpha, s.beta, s.gamma), t, s, false);
        }
    }
}

LowerBound build_embedding_for_triple(const PTriple& t) {
    if (!in_p_prime(t)) throw InputError("triple outside the simple family");
    if (t.alpha == 1 && t.beta == 0) {
        LowerBound out{patterns::p_triple(1, 0, 0), {{{0}, {0}, {0}}}, "edge"};
        return out;
    }
    if (t.alpha == 2 && t.beta == 1) {
        LowerBound out{patterns::p_triple(2, 1, 0), {{{0}, {1}, {2}}}, "triangle"};
        out.psi.normalize();
        return out;
    }
    if (t.beta >= 3) return build_embedding_pabc(t.alpha, t.beta, t.gamma);
    if (t.beta == 2 && t.alpha >= 3 && t.gamma >= 1) {
        // b_1 plays the part of one more length-2 path
        const int g = t.gamma + 1;
        if (t.alpha % 2 == 1) return build_embedding_pa2c(t.alpha, g);
        LowerBound inner = build_embedding_pa2c(t.alpha - 1, g);
        return shifted(inner, {t.alpha, 0, g}, {t.alpha - 1, 0, g}, true);
    }
    // cycles and two-hub bicliques: exhaustive search, so only small ones
    Pattern H = patterns::p_triple(t.alpha, t.beta, t.gamma);
    const int want = savings(t);
    if (H.n() > 8 || 2 * want - 1 > 10) throw InputError("no construction for this triple; too large for search");
    ClembResult r = clemb_search(H, 2 * want - 1);
    return {H, r.best, "search"};
}

// ---------- exhaustive search ----------

ClembResult clemb_search(const Pattern& H, int k_max) {
    const int n = H.n();
    if (n > 8) throw InputError("clemb_search: at most 8 pattern nodes");
    if (k_max < 3 || k_max > 10) throw InputError("clemb_search: k_max must be in 3..10");
    using Bits = std::bitset<256>;
    // connected subsets as bitmasks, in increasing mask order
    std::vector<unsigned> sets;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> v;
        for (int u = 0; u < n; ++u)
            if (mask >> u & 1) v.push_back(u);
        if (H.connected_subset(v)) sets.push_back(mask);
    }
    const int S = static_cast<int>(sets.size());
    const int m = H.m();
    std::vector<Bits> touch(S);
    std::vector<std::vector<int>> hits(S);  // edges meeting each set
    for (int i = 0; i < S; ++i) {
        for (int j = 0; j < S; ++j) {
            bool t = (sets[i] & sets[j]) != 0;
            for (auto [a, b] : H.edges())
                t = t || ((sets[i] >> a & 1) && (sets[j] >> b & 1)) || ((sets[i] >> b & 1) && (sets[j] >> a & 1));
            touch[i][j] = t;
        }
        for (int e = 0; e < m; ++e) {
            auto [a, b] = H.edges()[e];
            if ((sets[i] >> a & 1) || (sets[i] >> b & 1)) hits[i].push_back(e);
        }
    }

    ClembResult res;
    std::vector<int> depth(m, 0), chosen;
    // Is there a multiset of `k` pairwise-touching sets with every edge depth <= cap?
    std::function<bool(int, int, const Bits&, int)> dfs = [&](int from, int left, const Bits& cand, int cap) -> bool {
        if (left == 0) return true;
        for (int i = from; i < S; ++i) {
            if (!cand[i]) continue;
            bool ok = true;
            for (int e : hits[i]) ok = ok && depth[e] < cap;
            if (!ok) continue;
            for (int e : hits[i]) ++depth[e];
            chosen.push_back(i);
            if (dfs(i, left - 1, cand & touch[i], cap)) return true;
            chosen.pop_back();
            for (int e : hits[i]) --depth[e];
        }
        return false;
    };
    Bits all;
    for (int i = 0; i < S; ++i) all[i] = true;
    for (int k = 3; k <= k_max; ++k) {
        // smallest cap that still beats the incumbent; try caps upward so the first hit is the best for k
        for (int cap = 1; cap <= k; ++cap) {
            Rational r(k, cap);
            if (res.ratio.numerator() != 0 && !(r > res.ratio)) break;
            std::fill(depth.begin(), depth.end(), 0);
            chosen.clear();
            if (dfs(0, k, all, cap)) {
                res.ratio = r;
                res.best.images.clear();
                for (int i : chosen) {
                    std::vector<int> im;
                    for (int u = 0; u < n; ++u)
                        if (sets[i] >> u & 1) im.push_back(u);
                    res.best.images.push_back(im);
                }
                res.best.normalize();
                break;
            }
        }
    }
    return res;
}

// ---------- clique to pattern host ----------

CliqueReduction reduce_clique_to_host(const Pattern& H, const CliqueEmbedding& psi, const HostGraph& clique_host) {
    if (auto err = embedding_error(H, psi); !err.empty()) throw InputError("invalid clique embedding: " + err);
    const int k = psi.k();
    const Pattern& K = clique_host.pattern();
    if (K.n() != k || K.m() != k * (k - 1) / 2) throw InputError("clique instance must be a host for K_k");
    CliqueReduction R;
    R.psi = psi;
    R.embedded.assign(H.n(), {});
    for (int x = 0; x < k; ++x)
        for (int a : psi.images[x]) R.embedded[a].push_back(x);
    auto in_image = [&](int x, int a) {
        return std::binary_search(psi.images[x].begin(), psi.images[x].end(), a);
    };
    // each clique edge is charged to the first H edge whose endpoints' images cover both clique nodes
    std::vector<std::vector<std::pair<int, int>>> charged(H.m());
    for (int x = 0; x < k; ++x)
        for (int y = x + 1; y < k; ++y) {
            int pick = -1;
            for (int e = 0; e < H.m() && pick < 0; ++e) {
                auto [a, b] = H.edges()[e];
                if ((in_image(x, a) || in_image(x, b)) && (in_image(y, a) || in_image(y, b))) pick = e;
            }
            if (pick < 0) throw std::logic_error("touching images without a covering edge");
            charged[pick].push_back({x, y});
            R.charged_edge.push_back(H.edges()[pick]);
        }

    HostBuilder B(H);
    B.set_weighted(clique_host.weighted());
    std::vector<std::vector<std::vector<int>>> keys(H.n());
    std::vector<std::vector<int>> raw(H.n());
    for (int a = 0; a < H.n(); ++a) {
        // all tuples of instance nodes over embedded[a], in odometer order
        const auto& xs = R.embedded[a];
        std::vector<int> pos(xs.size(), 0);
        while (true) {
            std::vector<int> key;
            bool empty_part = false;
            for (std::size_t i = 0; i < xs.size(); ++i) {
                const auto& part = clique_host.part(xs[i]);
                if (part.empty()) {
                    empty_part = true;
                    break;
                }
                key.push_back(part[pos[i]]);
            }
            if (empty_part) break;
            std::string id = H.label(a) + "[";
            for (std::size_t i = 0; i < key.size(); ++i) id += (i ? "," : "") + clique_host.id(key[i]);
            raw[a].push_back(B.add_node(a, id + "]"));
            keys[a].push_back(key);
            std::size_t i = 0;
            for (; i < xs.size(); ++i) {
                if (++pos[i] < static_cast<int>(clique_host.part(xs[i]).size())) break;
                pos[i] = 0;
            }
            if (i == xs.size()) break;
        }
    }
    for (int e = 0; e < H.m(); ++e) {
        auto [a, b] = H.edges()[e];
        for (std::size_t i = 0; i < keys[a].size(); ++i)
            for (std::size_t j = 0; j < keys[b].size(); ++j) {
                // instance node chosen for each clique node seen from a or b
                std::vector<int> pick(k, -1);
                bool ok = true;
                for (std::size_t q = 0; q < R.embedded[a].size(); ++q) pick[R.embedded[a][q]] = keys[a][i][q];
                for (std::size_t q = 0; q < R.embedded[b].size() && ok; ++q) {
                    int x = R.embedded[b][q], v = keys[b][j][q];
                    if (pick[x] >= 0 && pick[x] != v) ok = false;
                    pick[x] = v;
                }
                for (int x = 0; x < k && ok; ++x)
                    for (int y = x + 1; y < k && ok; ++y)
                        if (pick[x] >= 0 && pick[y] >= 0 && !clique_host.has_edge(pick[x], pick[y])) ok = false;
                if (!ok) continue;
                Weight w = 0;
                for (auto [x, y] : charged[e]) w += clique_host.weight(pick[x], pick[y]);
                B.add_edge(raw[a][i], raw[b][j], w);
            }
    }
    std::vector<int> remap;
    R.host = B.build(&remap);
    R.node_of.assign(H.n(), {});
    R.code.assign(R.host.n(), {});
    for (int a = 0; a < H.n(); ++a)
        for (std::size_t i = 0; i < keys[a].size(); ++i) {
            int v = remap[raw[a][i]];
            if (v < 0) continue;
            R.node_of[a][keys[a][i]] = v;
            R.code[v] = keys[a][i];
        }
    return R;
}

Tuple CliqueReduction::forward(const Tuple& clique) const {
    Tuple t(embedded.size());
    for (std::size_t a = 0; a < embedded.size(); ++a) {
        std::vector<int> key;
        for (int x : embedded[a]) key.push_back(clique[x]);
        auto it = node_of[a].find(key);
        if (it == node_of[a].end()) throw InputError("not a clique of the instance");
        t[a] = it->second;
    }
    return t;
}

Tuple CliqueReduction::backward(const Tuple& t) const {
    Tuple c(psi.k(), -1);
    for (std::size_t a = 0; a < embedded.size(); ++a)
        for (std::size_t q = 0; q < embedded[a].size(); ++q) {
            int x = embedded[a][q];
            if (c[x] < 0) c[x] = code[t[a]][q];
        }
    return c;
}

}  // namespace subiso
