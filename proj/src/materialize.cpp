#include "subiso/materialize.hpp"

#include <algorithm>
#include <stdexcept>

namespace subiso {

std::size_t Dict::count(const std::vector<int>& key) const {
    auto it = map.find(key);
    return it == map.end() ? 0 : it->second.size() / std::max<std::size_t>(1, outs.size());
}

Dict build_dict(const Relation& r, const std::vector<int>& keys, const std::vector<int>& outs) {
    Dict d;
    d.keys = keys;
    d.outs = outs;
    std::vector<int> kp, op;
    for (int a : keys) kp.push_back(r.pos(a));
    for (int a : outs) op.push_back(r.pos(a));
    if (std::count(kp.begin(), kp.end(), -1) || std::count(op.begin(), op.end(), -1))
        throw std::logic_error("build_dict: attribute missing");
    std::vector<int> key(keys.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        const int* row = r.row(i);
        for (std::size_t j = 0; j < kp.size(); ++j) key[j] = row[kp[j]];
        auto& vals = d.map[key];
        for (int p : op) vals.push_back(row[p]);
        ++counters().gen;
    }
    return d;
}

Relation dict_keys(const Dict& d, std::uint64_t threshold, bool hi) {
    // rows laid out in d.keys order, then permuted into sorted attribute order
    std::vector<int> perm(d.keys.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::sort(perm.begin(), perm.end(), [&](int x, int y) { return d.keys[x] < d.keys[y]; });
    Relation out;
    for (int p : perm) out.attrs.push_back(d.keys[p]);
    for (auto& [key, vals] : d.map) {
        std::uint64_t c = vals.size() / std::max<std::size_t>(1, d.outs.size());
        if ((c >= threshold) != hi) continue;
        for (int p : perm) out.data.push_back(key[p]);
    }
    out.sort_unique();
    return out;
}

Dict dict_filter(const Dict& d, std::uint64_t threshold, bool hi) {
    Dict out;
    out.keys = d.keys;
    out.outs = d.outs;
    for (auto& [key, vals] : d.map) {
        std::uint64_t c = vals.size() / std::max<std::size_t>(1, d.outs.size());
        if ((c >= threshold) == hi) out.map.emplace(key, vals);
    }
    return out;
}

Ctx::Ctx(const HostGraph& G, const DegreeProfile& prof, const Guard& g) : G_(G), prof_(prof) {
    const int k = G.pattern().n();
    ok_.assign(G.n(), 0);
    part_.assign(k, {});
    for (int x = 0; x < k; ++x)
        for (int v : G.part(x))
            if (prof.cls[v] >= g.lo[x] && prof.cls[v] <= g.hi[x]) {
                ok_[v] = 1;
                part_[x].push_back(v);
            }
}

bool Ctx::any_empty() const {
    for (auto& p : part_)
        if (p.empty()) return true;
    return false;
}

RelPtr Ctx::run(const Plan& plan) const {
    const Pattern& H = G_.pattern();
    std::vector<int> placed_order;
    std::vector<char> placed(H.n(), 0);
    auto place = [&](int x) {
        if (placed[x]) throw std::logic_error("plan places a node twice");
        placed[x] = 1;
        placed_order.push_back(x);
    };
    for (int x : plan.seed_attrs) place(x);

    struct Compiled {
        int node = -1;
        std::vector<int> back;  // placed pattern neighbours
        const Dict* dict = nullptr;
        std::vector<std::vector<int>> out_back;  // per dict output: neighbours to verify
    };
    std::vector<Compiled> steps;
    for (const Step& s : plan.steps) {
        Compiled c;
        if (s.dict) {
            c.dict = s.dict;
            for (int k : s.dict->keys)
                if (!placed[k]) throw std::logic_error("dict key not placed");
            for (int o : s.dict->outs) {
                std::vector<int> back;
                for (int y : H.nbrs(o))
                    if (placed[y]) back.push_back(y);
                c.out_back.push_back(back);
                place(o);
            }
        } else {
            c.node = s.node;
            for (int y : H.nbrs(s.node))
                if (placed[y]) c.back.push_back(y);
            place(s.node);
        }
        steps.push_back(std::move(c));
    }

    auto out = std::make_shared<Relation>();
    out->attrs = placed_order;
    std::sort(out->attrs.begin(), out->attrs.end());
    std::vector<int> val(H.n(), -1);
    auto& gen = counters().gen;

    auto emit = [&] {
        for (int a : out->attrs) out->data.push_back(val[a]);
    };

    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == steps.size()) {
            emit();
            return;
        }
        const Compiled& c = steps[i];
        if (c.dict) {
            std::vector<int> key;
            key.reserve(c.dict->keys.size());
            for (int k : c.dict->keys) key.push_back(val[k]);
            ++gen;
            auto it = c.dict->map.find(key);
            if (it == c.dict->map.end()) return;
            const auto& vals = it->second;
            const std::size_t w = c.dict->outs.size();
            for (std::size_t r = 0; r < vals.size(); r += w) {
                ++gen;
                bool good = true;
                for (std::size_t j = 0; j < w && good; ++j) {
                    int v = vals[r + j];
                    if (!ok_[v]) good = false;
                    val[c.dict->outs[j]] = v;
                }
                for (std::size_t j = 0; j < w && good; ++j)
                    for (int y : c.out_back[j])
                        if (!G_.has_edge(val[c.dict->outs[j]], val[y])) {
                            good = false;
                            break;
                        }
                if (good) rec(i + 1);
            }
            for (int o : c.dict->outs) val[o] = -1;
            return;
        }
        const int x = c.node;
        std::span<const int> cand = part_[x];
        int from = -1;
        for (int y : c.back) {
            auto s = G_.nbrs(val[y], x);
            if (s.size() < cand.size()) cand = s, from = y;
        }
        for (int v : cand) {
            ++gen;
            if (from >= 0 && !ok_[v]) continue;
            bool good = true;
            for (int y : c.back)
                if (y != from && !G_.has_edge(v, val[y])) {
                    good = false;
                    break;
                }
            if (!good) continue;
            val[x] = v;
            rec(i + 1);
        }
        val[x] = -1;
    };

    if (plan.seed) {
        Relation proj;
        const Relation* src = plan.seed.get();
        std::vector<int> sorted_seed = plan.seed_attrs;
        std::sort(sorted_seed.begin(), sorted_seed.end());
        if (sorted_seed != plan.seed->attrs) {
            proj = project(*plan.seed, plan.seed_attrs);
            src = &proj;
        }
        for (std::size_t r = 0; r < src->size(); ++r) {
            ++gen;
            const int* row = src->row(r);
            bool good = true;
            for (std::size_t j = 0; j < src->arity(); ++j) {
                val[src->attrs[j]] = row[j];
                if (!ok_[row[j]]) good = false;
            }
            if (good) rec(0);
        }
    } else {
        if (!plan.seed_attrs.empty()) throw std::logic_error("seed attributes without seed");
        rec(0);
    }
    out->sort_unique();
    return out;
}

RelPtr Ctx::extend(RelPtr seed, const std::vector<int>& seed_attrs, const std::vector<int>& order) const {
    Plan p;
    p.seed = std::move(seed);
    p.seed_attrs = seed_attrs;
    for (int x : order) p.steps.push_back(Step{x, nullptr});
    return run(p);
}

int PartialMaker::bag(RelPtr r) {
    pe_.td.bags.push_back(r->attrs);
    pe_.sub.push_back(std::move(r));
    return static_cast<int>(pe_.sub.size()) - 1;
}

bool Branch::ge(int x, int t) {
    if (g_.lo[x] >= t) return true;
    if (g_.hi[x] < t) return false;
    if (frozen_) throw std::logic_error("class query after materialization started");
    throw SplitRequest{x, t};
}

namespace {

bool arc_consistent(const HostGraph& G, const DegreeProfile& prof, const Guard& g) {
    const Pattern& H = G.pattern();
    std::vector<char> alive(G.n(), 0);
    std::vector<std::vector<int>> part(H.n());
    for (int x = 0; x < H.n(); ++x) {
        for (int v : G.part(x))
            if (prof.cls[v] >= g.lo[x] && prof.cls[v] <= g.hi[x]) alive[v] = 1, part[x].push_back(v);
        if (part[x].empty()) return false;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0; x < H.n(); ++x) {
            std::vector<int> keep;
            for (int v : part[x]) {
                bool good = true;
                for (int y : H.nbrs(x)) {
                    bool any = false;
                    for (int w : G.nbrs(v, y))
                        if (alive[w]) {
                            any = true;
                            break;
                        }
                    if (!any) {
                        good = false;
                        break;
                    }
                }
                if (good)
                    keep.push_back(v);
                else
                    alive[v] = 0, changed = true;
            }
            if (keep.empty()) return false;
            part[x].swap(keep);
        }
    }
    return true;
}

}  // namespace

std::vector<PartialEncoding> run_cases(const HostGraph& G, const DegreeProfile& prof, const CaseFn& fn) {
    const int k = G.pattern().n();
    std::vector<PartialEncoding> out;
    Guard root{std::vector<int>(k, 1), std::vector<int>(k, prof.max_class)};
    if (!arc_consistent(G, prof, root)) return out;
    std::vector<Guard> stack{root};
    while (!stack.empty()) {
        Guard g = std::move(stack.back());
        stack.pop_back();
        Branch br(g);
        Ctx ctx(G, prof, g);
        std::vector<PartialEncoding> got;
        try {
            fn(br, ctx, got);
        } catch (const SplitRequest& s) {
            Guard lo = g, hi = g;
            lo.hi[s.node] = s.threshold - 1;
            hi.lo[s.node] = s.threshold;
            if (arc_consistent(G, prof, hi)) stack.push_back(std::move(hi));
            if (arc_consistent(G, prof, lo)) stack.push_back(std::move(lo));
            continue;
        }
        for (auto& p : got)
            if (!p.has_empty_bag()) out.push_back(std::move(p));
    }
    return out;
}

void star_plus_tree(PartialMaker& pm, const Ctx& ctx, const std::vector<int>& center, RelPtr seed,
                    std::vector<int> seed_attrs) {
    const Pattern& H = ctx.pattern();
    std::vector<char> in_center(H.n(), 0);
    for (int x : center) in_center[x] = 1;
    int root = -1;
    for (int x = 0; x < H.n() && root < 0; ++x)
        if (!in_center[x]) root = x;
    if (root < 0) throw std::logic_error("star_plus_tree: nothing outside the center");

    if (seed && seed_attrs.empty()) seed_attrs = center;
    std::vector<int> unseeded;
    for (int x : center)
        if (std::find(seed_attrs.begin(), seed_attrs.end(), x) == seed_attrs.end()) unseeded.push_back(x);

    auto make = [&](std::vector<int> rest) {
        if (seed) return ctx.extend(seed, seed_attrs, concat({unseeded, rest}));
        return ctx.path(concat({center, rest}));
    };

    std::vector<int> parent(H.n(), -2), bfs{root};
    parent[root] = -1;
    for (std::size_t i = 0; i < bfs.size(); ++i)
        for (int y : H.nbrs(bfs[i]))
            if (!in_center[y] && parent[y] == -2) parent[y] = bfs[i], bfs.push_back(y);
    for (int x = 0; x < H.n(); ++x)
        if (!in_center[x] && parent[x] == -2) throw std::logic_error("star_plus_tree: remainder is disconnected");

    if (bfs.size() == 1) {
        pm.bag(make({root}));
        return;
    }
    std::vector<int> bag_of(H.n(), -1);  // bag of the edge to the parent
    int prev_root_child = -1;
    for (std::size_t i = 1; i < bfs.size(); ++i) {
        int v = bfs[i], p = parent[v];
        int b = pm.bag(make({p, v}));
        bag_of[v] = b;
        if (p == root) {
            if (prev_root_child >= 0) pm.link(prev_root_child, b);
            prev_root_child = b;
        } else {
            pm.link(bag_of[p], b);
        }
    }
}

std::vector<int> concat(std::initializer_list<std::vector<int>> parts) {
    std::vector<int> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

}  // namespace subiso
