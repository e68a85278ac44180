#include "subiso/lift.hpp"

#include <algorithm>
#include <map>

namespace subiso {

void check_minor_witness(const Pattern& H, const Pattern& Hp, const std::vector<std::vector<int>>& branch_sets) {
    if (static_cast<int>(branch_sets.size()) != Hp.n()) throw InputError("minor map: one branch set per node needed");
    std::vector<int> owner(H.n(), -1);
    for (int x = 0; x < Hp.n(); ++x) {
        if (branch_sets[x].empty()) throw InputError("minor map: empty branch set");
        for (int a : branch_sets[x]) {
            if (a < 0 || a >= H.n()) throw InputError("minor map: node out of range");
            if (owner[a] >= 0) throw InputError("minor map: branch sets overlap");
            owner[a] = x;
        }
        if (!H.connected_subset(branch_sets[x])) throw InputError("minor map: branch set not connected");
    }
    for (int x = 0; x < Hp.n(); ++x)
        for (int y = x + 1; y < Hp.n(); ++y) {
            bool touch = false;
            for (int a : branch_sets[x])
                for (int b : branch_sets[y]) touch = touch || H.has_edge(a, b);
            if (touch != Hp.has_edge(x, y)) throw InputError("minor map: edge condition fails");
        }
}

MinorLift lift_host_via_minor(const Pattern& H, const HostGraph& Gp, const std::vector<std::vector<int>>& branch_sets) {
    const Pattern& Hp = Gp.pattern();
    check_minor_witness(H, Hp, branch_sets);
    MinorLift L;
    L.owner.assign(H.n(), -1);
    for (int x = 0; x < Hp.n(); ++x)
        for (int a : branch_sets[x]) L.owner[a] = x;

    // the H edge that carries the weight of each H' edge: lexicographically first candidate
    std::map<std::pair<int, int>, std::pair<int, int>> carrier;
    for (auto [x, y] : Hp.edges()) {
        std::pair<int, int> best{H.n(), H.n()};
        for (auto [a, b] : H.edges()) {
            int oa = L.owner[a], ob = L.owner[b];
            if ((oa == x && ob == y) || (oa == y && ob == x)) best = std::min(best, std::make_pair(a, b));
        }
        carrier[{x, y}] = best;
        L.weight_edge.push_back(best);
    }

    HostBuilder B(H);
    B.set_weighted(Gp.weighted());
    // node index of (a, i): base[a] + index of Gp node in its part
    std::vector<int> base(H.n());
    std::vector<int> idx_in_part(Gp.n(), -1);
    for (int x = 0; x < Hp.n(); ++x)
        for (std::size_t i = 0; i < Gp.part(x).size(); ++i) idx_in_part[Gp.part(x)[i]] = static_cast<int>(i);
    std::vector<int> back_raw;
    for (int a = 0; a < H.n(); ++a) {
        base[a] = B.node_count();
        int x = L.owner[a];
        if (x < 0) {
            B.add_node(a, "_" + H.label(a));
            back_raw.push_back(-1);
        } else {
            for (int v : Gp.part(x)) {
                B.add_node(a, Gp.id(v) + "@" + H.label(a));
                back_raw.push_back(v);
            }
        }
    }
    auto node = [&](int a, int v) { return L.owner[a] < 0 ? base[a] : base[a] + idx_in_part[v]; };
    for (auto [a, b] : H.edges()) {
        int x = L.owner[a], y = L.owner[b];
        if (x < 0 || y < 0) {
            int na = x < 0 ? 1 : static_cast<int>(Gp.part(x).size());
            int nb = y < 0 ? 1 : static_cast<int>(Gp.part(y).size());
            for (int i = 0; i < na; ++i)
                for (int j = 0; j < nb; ++j) B.add_edge(base[a] + i, base[b] + j, 0);
        } else if (x == y) {
            for (int v : Gp.part(x)) B.add_edge(node(a, v), node(b, v), 0);
        } else {
            auto key = std::minmax(x, y);
            bool carries = carrier[{key.first, key.second}] == std::make_pair(std::min(a, b), std::max(a, b));
            for (int v : Gp.part(x))
                for (int w : Gp.nbrs(v, y)) B.add_edge(node(a, v), node(b, w), carries ? Gp.weight(v, w) : 0);
        }
    }
    std::vector<int> remap;
    L.host = B.build(&remap);
    L.back.assign(L.host.n(), -1);
    for (std::size_t i = 0; i < remap.size(); ++i)
        if (remap[i] >= 0) L.back[remap[i]] = back_raw[i];
    return L;
}

Tuple lower_tuple(const MinorLift& L, int hp_nodes, const Tuple& t) {
    Tuple out(hp_nodes, -1);
    for (std::size_t a = 0; a < t.size(); ++a)
        if (L.owner[a] >= 0) out[L.owner[a]] = L.back[t[a]];
    return out;
}

Tuple raise_tuple(const MinorLift& L, const Tuple& tp) {
    const Pattern& H = L.host.pattern();
    Tuple out(H.n(), -1);
    for (int a = 0; a < H.n(); ++a) {
        if (L.owner[a] < 0) {
            if (L.host.part(a).empty()) throw std::logic_error("raise_tuple: filler node missing");
            out[a] = L.host.part(a)[0];
            continue;
        }
        for (int v : L.host.part(a))
            if (L.back[v] == tp[L.owner[a]]) {
                out[a] = v;
                break;
            }
    }
    return out;
}

FullEncoding lower_encoding(const FullEncoding& E, const MinorLift& L, int hp_nodes) {
    FullEncoding out;
    std::map<const Relation*, std::shared_ptr<const Relation>> memo;
    auto lower_rel = [&](const Relation& r) {
        auto nr = std::make_shared<Relation>();
        for (int a : r.attrs)
            if (L.owner[a] >= 0) nr->attrs.push_back(L.owner[a]);
        std::sort(nr->attrs.begin(), nr->attrs.end());
        nr->attrs.erase(std::unique(nr->attrs.begin(), nr->attrs.end()), nr->attrs.end());
        if (nr->attrs.empty()) throw std::logic_error("lower_encoding: bag maps to nothing");
        std::vector<int> val(hp_nodes, -1);
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::fill(val.begin(), val.end(), -1);
            bool consistent = true;
            for (std::size_t j = 0; j < r.arity() && consistent; ++j) {
                int x = L.owner[r.attrs[j]];
                if (x < 0) continue;
                int v = L.back[r.row(i)[j]];
                if (val[x] >= 0 && val[x] != v) consistent = false;
                val[x] = v;
            }
            if (!consistent) continue;
            for (int x : nr->attrs) nr->data.push_back(val[x]);
        }
        nr->sort_unique();
        return std::shared_ptr<const Relation>(nr);
    };
    for (const auto& p : E.partials) {
        PartialEncoding q;
        q.tag = p.tag;
        q.td.edges = p.td.edges;
        for (const auto& r : p.sub) {
            auto it = memo.find(r.get());
            if (it == memo.end()) it = memo.emplace(r.get(), lower_rel(*r)).first;
            q.td.bags.push_back(it->second->attrs);
            q.sub.push_back(it->second);
        }
        out.partials.push_back(std::move(q));
    }
    return out;
}

}  // namespace subiso
