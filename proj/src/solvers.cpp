#include "subiso/solvers.hpp"

#include <algorithm>
#include <numeric>

#include "subiso/encoders.hpp"

namespace subiso {

namespace {

int add_tree_node(TreeInstance& T, int parent) {
    T.parent.push_back(parent);
    T.count.push_back(0);
    T.offs.emplace_back();
    T.ids.emplace_back();
    T.edge_w.emplace_back();
    T.rows.emplace_back();
    return T.size() - 1;
}

// Lexicographic comparison of two rows restricted to the given columns.
int cmp_proj(const int* x, const std::vector<int>& cx, const int* y, const std::vector<int>& cy) {
    for (std::size_t i = 0; i < cx.size(); ++i) {
        if (x[cx[i]] != y[cy[i]]) return x[cx[i]] < y[cy[i]] ? -1 : 1;
    }
    return 0;
}

std::vector<int> sorted_by_proj(const Relation& r, const std::vector<int>& cols) {
    std::vector<int> idx(r.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return cmp_proj(r.row(a), cols, r.row(b), cols) < 0; });
    return idx;
}

// Odometer over the positions of one pruned instance (position = tree node, parents first).
struct Odometer {
    const TreeInstance* T = nullptr;
    std::vector<int>* idx;
    std::vector<int>* base;
    std::vector<int>* len;
    std::vector<int>* chosen;

    void reset(int i) {
        auto& b = (*base)[i];
        auto& l = (*len)[i];
        (*idx)[i] = 0;
        if (i == 0) {
            b = 0;
            l = static_cast<int>(T->roots.size());
            (*chosen)[i] = T->roots[0];
        } else {
            int x = (*chosen)[T->parent[i]];
            b = static_cast<int>(T->offs[i][x]);
            l = static_cast<int>(T->offs[i][x + 1]) - b;
            (*chosen)[i] = T->ids[i][b];
        }
    }
    // One full pass from the last position down; returns the position that moved, or -1.
    int carry(std::uint64_t& steps) {
        int moved = -1;
        for (int i = T->size() - 1; i >= 0; --i) {
            ++steps;
            if (moved >= 0) continue;
            if ((*idx)[i] + 1 < (*len)[i]) {
                int k = ++(*idx)[i];
                (*chosen)[i] = i == 0 ? T->roots[k] : T->ids[i][(*base)[i] + k];
                moved = i;
            }
        }
        return moved;
    }
    void reset_after(int moved, std::uint64_t& steps) {
        for (int i = 0; i < T->size(); ++i) {
            ++steps;
            if (i > moved) reset(i);
        }
    }
    void emit(Tuple& out, std::uint64_t& steps) const {
        out.resize(T->out_map.size());
        for (std::size_t a = 0; a < T->out_map.size(); ++a) {
            ++steps;
            auto [t, col] = T->out_map[a];
            out[a] = T->rows[t]->row((*chosen)[t])[col];
        }
    }
};

}  // namespace

TreeInstance to_tree_instance(const HostGraph& G, const PartialEncoding& E) {
    const Pattern& H = G.pattern();
    auto bags = E.td.bags;
    auto sub = E.sub;
    auto edges = E.td.edges;
    if (bags.empty()) throw std::logic_error("to_tree_instance: no bags");
    if (bags.size() == 1) {  // a lone bag becomes two equal bags so the tree has an edge
        bags.push_back(bags[0]);
        sub.push_back(sub[0]);
        edges = {{0, 1}};
    }
    const int nb = static_cast<int>(bags.size());
    auto& cnt = counters().solve;

    // each pattern edge is charged to the first bag holding both ends
    std::vector<std::vector<std::pair<int, int>>> charged(nb);
    if (G.weighted())
        for (auto [u, v] : H.edges())
            for (int b = 0; b < nb; ++b) {
                int pu = sub[b]->pos(u), pv = sub[b]->pos(v);
                if (pu >= 0 && pv >= 0) {
                    charged[b].emplace_back(pu, pv);
                    break;
                }
            }
    auto row_weight = [&](int b, int r) {
        Weight w = 0;
        const int* row = sub[b]->row(r);
        for (auto [i, j] : charged[b]) w = add_weight(w, G.weight(row[i], row[j]));
        return w;
    };

    std::vector<std::vector<int>> adj(nb);
    for (auto [x, y] : edges) adj[x].push_back(y), adj[y].push_back(x);

    TreeInstance T;
    std::vector<int> tnode(nb, -1);
    tnode[0] = add_tree_node(T, -1);
    T.rows[0] = sub[0];
    T.count[0] = static_cast<int>(sub[0]->size());
    bool root_folded = false;
    std::vector<int> queue{0};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const int P = queue[qi];
        for (int C : adj[P]) {
            if (tnode[C] >= 0) continue;
            queue.push_back(C);
            const Relation& rp = *sub[P];
            const Relation& rc = *sub[C];
            std::vector<int> sep;
            std::set_intersection(rp.attrs.begin(), rp.attrs.end(), rc.attrs.begin(), rc.attrs.end(),
                                  std::back_inserter(sep));
            std::vector<int> colp, colc;
            for (int a : sep) colp.push_back(rp.pos(a)), colc.push_back(rc.pos(a));

            const int s = add_tree_node(T, tnode[P]);
            const int c = add_tree_node(T, s);
            tnode[C] = c;
            T.rows[c] = sub[C];
            T.count[c] = static_cast<int>(rc.size());

            // group child rows by separator key
            std::vector<int> oc = sorted_by_proj(rc, colc);
            std::vector<int> key_row;  // a representative child row per key
            auto& offc = T.offs[c];
            for (std::size_t i = 0; i < oc.size(); ++i) {
                ++cnt;
                if (i == 0 || cmp_proj(rc.row(oc[i - 1]), colc, rc.row(oc[i]), colc) != 0) {
                    key_row.push_back(oc[i]);
                    offc.push_back(static_cast<std::uint32_t>(i));
                }
            }
            offc.push_back(static_cast<std::uint32_t>(oc.size()));
            T.ids[c] = oc;
            if (G.weighted()) {
                T.edge_w[c].reserve(oc.size());
                for (int r : oc) T.edge_w[c].push_back(row_weight(C, r));
            }
            T.count[s] = static_cast<int>(key_row.size());

            // parent rows -> their key (at most one)
            std::vector<int> op = sorted_by_proj(rp, colp);
            std::vector<int> key_of(rp.size(), -1);
            std::size_t k = 0;
            for (int r : op) {
                ++cnt;
                while (k < key_row.size() && cmp_proj(rc.row(key_row[k]), colc, rp.row(r), colp) < 0) ++k;
                if (k < key_row.size() && cmp_proj(rc.row(key_row[k]), colc, rp.row(r), colp) == 0) key_of[r] = static_cast<int>(k);
            }
            const bool fold = P == 0 && !root_folded && G.weighted();
            root_folded = root_folded || P == 0;
            auto& offs = T.offs[s];
            offs.reserve(rp.size() + 1);
            offs.push_back(0);
            for (std::size_t r = 0; r < rp.size(); ++r) {
                if (key_of[r] >= 0) {
                    T.ids[s].push_back(key_of[r]);
                    if (G.weighted()) T.edge_w[s].push_back(fold ? row_weight(P, static_cast<int>(r)) : 0);
                }
                offs.push_back(static_cast<std::uint32_t>(T.ids[s].size()));
            }
        }
    }
    T.out_map.assign(H.n(), {-1, -1});
    for (int a = 0; a < H.n(); ++a)
        for (int b = 0; b < nb; ++b)
            if (int p = sub[b]->pos(a); p >= 0) {
                T.out_map[a] = {tnode[b], p};
                break;
            }
    T.roots.resize(T.count[0]);
    std::iota(T.roots.begin(), T.roots.end(), 0);
    return T;
}

TreeInstance tree_instance_of(const HostGraph& Th) {
    const Pattern& P = Th.pattern();
    if (!P.is_tree()) throw InputError("tree solver: pattern is not a tree");
    std::vector<int> loc(Th.n(), -1);
    for (int a = 0; a < P.n(); ++a)
        for (std::size_t i = 0; i < Th.part(a).size(); ++i) loc[Th.part(a)[i]] = static_cast<int>(i);
    TreeInstance T;
    std::vector<int> tnode(P.n(), -1), queue{0};
    auto install = [&](int a, int parent) {
        int t = add_tree_node(T, parent);
        tnode[a] = t;
        auto r = std::make_shared<Relation>();
        r->attrs = {a};
        r->data = Th.part(a);
        T.rows[t] = r;
        T.count[t] = static_cast<int>(r->size());
        return t;
    };
    install(0, -1);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int pa = queue[qi];
        for (int a : P.nbrs(pa)) {
            if (tnode[a] >= 0) continue;
            queue.push_back(a);
            int t = install(a, tnode[pa]);
            auto& offs = T.offs[t];
            offs.push_back(0);
            for (int v : Th.part(pa)) {
                for (int w : Th.nbrs(v, a)) {
                    T.ids[t].push_back(loc[w]);
                    if (Th.weighted()) T.edge_w[t].push_back(Th.weight(v, w));
                }
                offs.push_back(static_cast<std::uint32_t>(T.ids[t].size()));
            }
        }
    }
    T.out_map.resize(P.n());
    for (int a = 0; a < P.n(); ++a) T.out_map[a] = {tnode[a], 0};
    T.roots.resize(T.count[0]);
    std::iota(T.roots.begin(), T.roots.end(), 0);
    return T;
}

void prune(TreeInstance& T) {
    const int n = T.size();
    auto& cnt = counters().solve;
    std::vector<std::vector<char>> alive(n), reach(n);
    for (int t = 0; t < n; ++t) alive[t].assign(T.count[t], 1);
    for (int t = n - 1; t >= 1; --t) {
        const int p = T.parent[t];
        for (int x = 0; x < T.count[p]; ++x) {
            bool any = false;
            for (auto e = T.offs[t][x]; e < T.offs[t][x + 1] && !any; ++e) {
                ++cnt;
                any = alive[t][T.ids[t][e]] != 0;
            }
            if (!any) alive[p][x] = 0;
        }
    }
    reach[0] = alive[0];
    for (int t = 1; t < n; ++t) {
        const int p = T.parent[t];
        reach[t].assign(T.count[t], 0);
        std::vector<std::uint32_t> offs{0};
        std::vector<int> ids;
        std::vector<Weight> w;
        offs.reserve(T.count[p] + 1);
        for (int x = 0; x < T.count[p]; ++x) {
            if (reach[p][x])
                for (auto e = T.offs[t][x]; e < T.offs[t][x + 1]; ++e) {
                    ++cnt;
                    int y = T.ids[t][e];
                    if (!alive[t][y]) continue;
                    reach[t][y] = 1;
                    ids.push_back(y);
                    if (!T.edge_w[t].empty()) w.push_back(T.edge_w[t][e]);
                }
            offs.push_back(static_cast<std::uint32_t>(ids.size()));
        }
        T.offs[t].swap(offs);
        T.ids[t].swap(ids);
        T.edge_w[t].swap(w);
    }
    T.roots.clear();
    for (int x = 0; x < T.count[0]; ++x)
        if (reach[0][x]) T.roots.push_back(x);
}

std::vector<Tuple> tree_list(const TreeInstance& T) {
    std::vector<Tuple> out;
    if (T.roots.empty()) return out;
    const int n = T.size();
    std::vector<int> idx(n), base(n), len(n), chosen(n);
    Odometer od{&T, &idx, &base, &len, &chosen};
    std::uint64_t& steps = counters().solve;
    od.reset_after(-1, steps);
    Tuple t;
    do {
        od.emit(t, steps);
        out.push_back(t);
        int moved = od.carry(steps);
        if (moved < 0) break;
        od.reset_after(moved, steps);
    } while (true);
    return out;
}

Weight tree_min(const TreeInstance& T) {
    const int n = T.size();
    std::vector<std::vector<Weight>> best(n);
    for (int t = 0; t < n; ++t) best[t].assign(T.count[t], 0);
    for (int t = n - 1; t >= 1; --t) {
        const int p = T.parent[t];
        for (int x = 0; x < T.count[p]; ++x) {
            Weight m = kInf;
            for (auto e = T.offs[t][x]; e < T.offs[t][x + 1]; ++e) {
                ++counters().solve;
                Weight w = T.edge_w[t].empty() ? 0 : T.edge_w[t][e];
                m = std::min(m, add_weight(w, best[t][T.ids[t][e]]));
            }
            best[p][x] = add_weight(best[p][x], m);
        }
    }
    Weight m = kInf;
    for (int x : T.roots) m = std::min(m, best[0][x]);
    return m;
}

ExplicitTree explicit_tree(const TreeInstance& T) {
    Pattern P;
    for (int t = 0; t < T.size(); ++t) P.add_node("t" + std::to_string(t));
    for (int t = 1; t < T.size(); ++t) P.add_edge(T.parent[t], t);
    HostBuilder B(P);
    bool weighted = false;
    for (auto& w : T.edge_w) weighted = weighted || !w.empty();
    B.set_weighted(weighted);
    std::vector<int> first(T.size()), raw_index;
    for (int t = 0; t < T.size(); ++t) {
        first[t] = B.node_count();
        for (int i = 0; i < T.count[t]; ++i) {
            B.add_node(t, "t" + std::to_string(t) + ":" + std::to_string(i));
            raw_index.push_back(i);
        }
    }
    for (int t = 1; t < T.size(); ++t) {
        const int p = T.parent[t];
        for (int x = 0; x < T.count[p]; ++x)
            for (auto e = T.offs[t][x]; e < T.offs[t][x + 1]; ++e)
                B.add_edge(first[p] + x, first[t] + T.ids[t][e], T.edge_w[t].empty() ? 0 : T.edge_w[t][e]);
    }
    std::vector<int> remap;
    ExplicitTree X{B.build(&remap), {}};
    X.index.assign(X.host.n(), -1);
    for (std::size_t i = 0; i < remap.size(); ++i)
        if (remap[i] >= 0) X.index[remap[i]] = raw_index[i];
    return X;
}

Tuple ExplicitTree::back(const TreeInstance& T, const Tuple& tree_tuple) const {
    Tuple out(T.out_map.size());
    for (std::size_t a = 0; a < out.size(); ++a) {
        auto [t, col] = T.out_map[a];
        out[a] = T.rows[t]->row(index[tree_tuple[t]])[col];
    }
    return out;
}

Enumerator::Enumerator(const HostGraph& G) {
    FullEncoding E = encode(G);
    for (const auto& p : E.partials) {
        TreeInstance T = to_tree_instance(G, p);
        prune(T);
        if (!T.roots.empty()) parts_.push_back(std::move(T));
    }
}

bool Enumerator::next(Tuple& out) {
    steps_ = 0;
    while (true) {
        if (cur_ >= static_cast<int>(parts_.size())) return false;
        if (cur_ < 0 || fresh_) {
            if (cur_ < 0) cur_ = 0;
            if (cur_ >= static_cast<int>(parts_.size())) return false;
            const int n = parts_[cur_].size();
            idx_.assign(n, 0), base_.assign(n, 0), len_.assign(n, 0), chosen_.assign(n, 0);
            Odometer od{&parts_[cur_], &idx_, &base_, &len_, &chosen_};
            steps_ += n;  // stands in for the carry pass so every call walks the positions twice
            od.reset_after(-1, steps_);
            od.emit(out, steps_);
            fresh_ = false;
            return true;
        }
        Odometer od{&parts_[cur_], &idx_, &base_, &len_, &chosen_};
        int moved = od.carry(steps_);
        if (moved < 0) {
            ++cur_;
            fresh_ = true;
            continue;
        }
        od.reset_after(moved, steps_);
        od.emit(out, steps_);
        return true;
    }
}

std::vector<Tuple> list_all(const HostGraph& G) {
    FullEncoding E = encode(G);
    std::vector<Tuple> out;
    for (const auto& p : E.partials) {
        TreeInstance T = to_tree_instance(G, p);
        prune(T);
        auto part = tree_list(T);
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

Weight min_weight(const HostGraph& G) {
    FullEncoding E = encode(G);
    Weight m = kInf;
    for (const auto& p : E.partials) m = std::min(m, tree_min(to_tree_instance(G, p)));
    return m;
}

}  // namespace subiso
