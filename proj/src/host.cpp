#include "subiso/host.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace subiso {

std::vector<std::pair<int, int>> HostGraph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n(); ++u) {
        int a = color_[u];
        for (int b : pattern_.nbrs(a))
            for (int v : nbrs(u, b))
                if (u < v) out.emplace_back(u, v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int HostGraph::find_id(const std::string& id) const {
    for (int v = 0; v < n(); ++v)
        if (ids_[v] == id) return v;
    return -1;
}

std::string HostGraph::serialize() const {
    std::ostringstream out;
    for (int v = 0; v < n(); ++v) out << "node " << ids_[v] << " " << pattern_.label(color_[v]) << "\n";
    for (auto [u, v] : edge_list()) {
        out << "edge " << ids_[u] << " " << ids_[v];
        if (weighted_) out << " " << weight(u, v);
        out << "\n";
    }
    return out.str();
}

int HostBuilder::add_node(int color, std::string id) {
    if (color < 0 || color >= pattern_.n()) throw InputError("bad color index");
    if (id.empty()) id = std::to_string(color_.size());
    color_.push_back(color);
    ids_.push_back(std::move(id));
    return static_cast<int>(color_.size()) - 1;
}

void HostBuilder::add_edge(int u, int v, Weight w) {
    if (u < 0 || v < 0 || u >= node_count() || v >= node_count()) throw InputError("edge endpoint out of range");
    if (w == kInf) throw InputError("weight out of range");
    if (color_[u] == color_[v] || !pattern_.has_edge(color_[u], color_[v])) {
        ++dropped_;
        return;
    }
    edges_.push_back({u, v, w});
}

HostGraph HostBuilder::build(std::vector<int>* remap) const {
    HostGraph g;
    g.pattern_ = pattern_;
    g.weighted_ = weighted_;
    g.dropped_ = dropped_;
    const int k = pattern_.n();

    std::unordered_map<std::uint64_t, Weight> emap;
    emap.reserve(edges_.size() * 2 + 1);
    std::vector<E> kept;
    kept.reserve(edges_.size());
    Weight maxabs = 0;
    for (const E& e : edges_) {
        auto key = HostGraph::key(e.u, e.v);
        if (!emap.emplace(key, e.w).second) {
            ++g.dropped_;
            continue;
        }
        kept.push_back(e);
        if (e.w == std::numeric_limits<Weight>::min()) throw InputError("weight out of range");
        maxabs = std::max(maxabs, e.w < 0 ? -e.w : e.w);
    }
    if (pattern_.m() > 0 && maxabs > (kInf - 1) / pattern_.m())
        throw OverflowError("edge weights could overflow a subgraph sum");

    std::vector<int> deg(color_.size(), 0);
    for (const E& e : kept) ++deg[e.u], ++deg[e.v];
    std::vector<int> map(color_.size(), -1);
    for (std::size_t v = 0; v < color_.size(); ++v)
        if (deg[v] > 0) {
            map[v] = static_cast<int>(g.color_.size());
            g.color_.push_back(color_[v]);
            g.ids_.push_back(ids_[v]);
        }
    if (remap) *remap = map;
    const int n = static_cast<int>(g.color_.size());
    g.parts_.assign(k, {});
    for (int v = 0; v < n; ++v) g.parts_[g.color_[v]].push_back(v);

    g.nbr_slot_.assign(static_cast<std::size_t>(k) * k, -1);
    for (int a = 0; a < k; ++a)
        for (int j = 0; j < pattern_.degree(a); ++j) g.nbr_slot_[a * k + pattern_.nbrs(a)[j]] = j;
    g.slot_base_.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) g.slot_base_[v + 1] = g.slot_base_[v] + pattern_.degree(g.color_[v]);
    std::vector<std::size_t> cnt(g.slot_base_[n] + 1, 0);
    auto slot_of = [&](int v, int other) { return g.slot_base_[v] + g.nbr_slot_[g.color_[v] * k + g.color_[other]]; };
    for (const E& e : kept) {
        int u = map[e.u], v = map[e.v];
        ++cnt[slot_of(u, v) + 1];
        ++cnt[slot_of(v, u) + 1];
    }
    for (std::size_t i = 1; i < cnt.size(); ++i) cnt[i] += cnt[i - 1];
    g.off_ = cnt;
    g.adj_.assign(kept.size() * 2, 0);
    std::vector<std::size_t> fill(cnt.begin(), cnt.end() - 1);
    for (const E& e : kept) {
        int u = map[e.u], v = map[e.v];
        g.adj_[fill[slot_of(u, v)]++] = v;
        g.adj_[fill[slot_of(v, u)]++] = u;
        g.edges_.emplace(HostGraph::key(u, v), e.w);
    }
    for (std::size_t s = 0; s + 1 < g.off_.size(); ++s)
        std::sort(g.adj_.begin() + g.off_[s], g.adj_.begin() + g.off_[s + 1]);
    g.m_ = kept.size();
    return g;
}

HostGraph load_host(std::istream& in, const Pattern& pattern) {
    HostBuilder b(pattern);
    std::unordered_map<std::string, int> ids;
    std::string line;
    int lineno = 0;
    bool weighted = false;
    auto fail = [&](const std::string& msg) { throw InputError("host line " + std::to_string(lineno) + ": " + msg); };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string kw, a, c, extra;
        if (!(ls >> kw)) continue;
        if (kw == "node") {
            if (!(ls >> a >> c) || (ls >> extra)) fail("malformed node");
            int col = pattern.find(c);
            if (col < 0) fail("unknown color label " + c);
            if (ids.count(a)) fail("duplicate node id " + a);
            ids[a] = b.add_node(col, a);
        } else if (kw == "edge") {
            if (!(ls >> a >> c)) fail("malformed edge");
            Weight w = 0;
            std::string ws;
            if (ls >> ws) {
                std::size_t pos = 0;
                try {
                    w = std::stoll(ws, &pos);
                } catch (const std::exception&) {
                    fail("bad weight " + ws);
                }
                if (pos != ws.size()) fail("bad weight " + ws);
                weighted = true;
            }
            if (ls >> extra) fail("malformed edge");
            auto ia = ids.find(a), ic = ids.find(c);
            if (ia == ids.end() || ic == ids.end()) fail("edge references unknown node");
            if (ia->second == ic->second) fail("loop edge");
            b.add_edge(ia->second, ic->second, w);
        } else {
            fail("unknown keyword " + kw);
        }
    }
    b.set_weighted(weighted);
    return b.build();
}

HostGraph load_host_string(const std::string& text, const Pattern& pattern) {
    std::istringstream in(text);
    return load_host(in, pattern);
}

bool is_h_subgraph(const Pattern& H, const HostGraph& G, const Tuple& t) {
    if (static_cast<int>(t.size()) != H.n()) return false;
    for (int a = 0; a < H.n(); ++a)
        if (t[a] < 0 || t[a] >= G.n() || G.color(t[a]) != a) return false;
    for (auto [a, b] : H.edges())
        if (!G.has_edge(t[a], t[b])) return false;
    return true;
}

Weight tuple_weight(const HostGraph& G, const Tuple& t) {
    Weight s = 0;
    for (auto [a, b] : G.pattern().edges()) s = add_weight(s, G.weight(t[a], t[b]));
    return s;
}

Restricted restrict_host(const HostGraph& G, const std::vector<int>& nodes) {
    Pattern sub = G.pattern().induced(nodes);
    std::vector<int> pos(G.pattern().n(), -1);
    for (std::size_t i = 0; i < nodes.size(); ++i) pos[nodes[i]] = static_cast<int>(i);
    HostBuilder b(sub);
    b.set_weighted(G.weighted());
    std::vector<int> local(G.n(), -1), orig;
    for (int v = 0; v < G.n(); ++v)
        if (pos[G.color(v)] >= 0) {
            local[v] = b.add_node(pos[G.color(v)], G.id(v));
            orig.push_back(v);
        }
    for (int v = 0; v < G.n(); ++v) {
        int a = G.color(v);
        if (pos[a] < 0) continue;
        for (int c : G.pattern().nbrs(a)) {
            if (pos[c] < 0) continue;
            for (int u : G.nbrs(v, c))
                if (v < u) b.add_edge(local[v], local[u], G.weight(v, u));
        }
    }
    std::vector<int> remap;
    Restricted r{b.build(&remap), {}};
    r.orig.assign(r.host.n(), -1);
    for (std::size_t i = 0; i < remap.size(); ++i)
        if (remap[i] >= 0) r.orig[remap[i]] = orig[i];
    return r;
}

}  // namespace subiso
