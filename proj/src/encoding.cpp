#include "subiso/encoding.hpp"

#include <algorithm>
#include <numeric>
#include "json.hpp"

namespace subiso {

int Relation::pos(int attr) const {
    auto it = std::lower_bound(attrs.begin(), attrs.end(), attr);
    if (it == attrs.end() || *it != attr) return -1;
    return static_cast<int>(it - attrs.begin());
}

void Relation::sort_unique() {
    const std::size_t k = arity(), n = size();
    if (k == 0 || n <= 1) return;
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    auto less = [&](std::size_t x, std::size_t y) {
        return std::lexicographical_compare(data.begin() + x * k, data.begin() + (x + 1) * k, data.begin() + y * k,
                                            data.begin() + (y + 1) * k);
    };
    if (std::is_sorted(idx.begin(), idx.end(), less)) {
        // still drop duplicates
    } else {
        std::sort(idx.begin(), idx.end(), less);
    }
    std::vector<int> out;
    out.reserve(data.size());
    for (std::size_t i = 0; i < n; ++i) {
        const int* r = data.data() + idx[i] * k;
        if (!out.empty() && std::equal(r, r + k, out.end() - static_cast<std::ptrdiff_t>(k))) continue;
        out.insert(out.end(), r, r + k);
    }
    data.swap(out);
}

bool Relation::contains(const int* key) const {
    const std::size_t k = arity();
    std::size_t lo = 0, hi = size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        const int* r = row(mid);
        if (std::lexicographical_compare(r, r + k, key, key + k))
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo < size() && std::equal(key, key + k, row(lo));
}

bool Relation::contains_tuple(const Tuple& t) const {
    std::vector<int> key(attrs.size());
    for (std::size_t i = 0; i < attrs.size(); ++i) key[i] = t[attrs[i]];
    return contains(key.data());
}

Relation project(const Relation& r, const std::vector<int>& attrs) {
    Relation out;
    out.attrs = attrs;
    std::sort(out.attrs.begin(), out.attrs.end());
    std::vector<int> p;
    for (int a : out.attrs) {
        int x = r.pos(a);
        if (x < 0) throw std::logic_error("project: attribute not in relation");
        p.push_back(x);
    }
    out.data.reserve(r.size() * p.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        for (int x : p) out.data.push_back(r.row(i)[x]);
    out.sort_unique();
    return out;
}

std::string check_tree_decomposition(const Pattern& H, const TreeDecomposition& td) {
    const int nb = static_cast<int>(td.bags.size());
    if (nb == 0) return "no bags";
    if (static_cast<int>(td.edges.size()) != nb - 1) return "bag graph is not a tree (edge count)";
    std::vector<std::vector<int>> adj(nb);
    for (auto [x, y] : td.edges) {
        if (x < 0 || y < 0 || x >= nb || y >= nb || x == y) return "bad tree edge";
        adj[x].push_back(y);
        adj[y].push_back(x);
    }
    {
        std::vector<char> seen(nb, 0);
        std::vector<int> st{0};
        seen[0] = 1;
        int cnt = 1;
        while (!st.empty()) {
            int u = st.back();
            st.pop_back();
            for (int v : adj[u])
                if (!seen[v]) seen[v] = 1, ++cnt, st.push_back(v);
        }
        if (cnt != nb) return "bag graph is not connected";
    }
    auto in_bag = [&](int b, int x) { return std::binary_search(td.bags[b].begin(), td.bags[b].end(), x); };
    for (int b = 0; b < nb; ++b)
        if (!std::is_sorted(td.bags[b].begin(), td.bags[b].end())) return "bag not sorted";
    for (int x = 0; x < H.n(); ++x) {
        std::vector<int> holders;
        for (int b = 0; b < nb; ++b)
            if (in_bag(b, x)) holders.push_back(b);
        if (holders.empty()) return "node " + H.label(x) + " in no bag";
        std::vector<char> seen(nb, 0);
        std::vector<int> st{holders[0]};
        seen[holders[0]] = 1;
        std::size_t cnt = 1;
        while (!st.empty()) {
            int u = st.back();
            st.pop_back();
            for (int v : adj[u])
                if (!seen[v] && in_bag(v, x)) seen[v] = 1, ++cnt, st.push_back(v);
        }
        if (cnt != holders.size()) return "bags of node " + H.label(x) + " are not connected";
    }
    for (auto [u, v] : H.edges()) {
        bool ok = false;
        for (int b = 0; b < nb && !ok; ++b) ok = in_bag(b, u) && in_bag(b, v);
        if (!ok) return "edge " + H.label(u) + "-" + H.label(v) + " in no bag";
    }
    return {};
}

bool PartialEncoding::encodes(const Tuple& t) const {
    for (const auto& r : sub)
        if (!r->contains_tuple(t)) return false;
    return true;
}

bool PartialEncoding::has_empty_bag() const {
    for (const auto& r : sub)
        if (r->size() == 0) return true;
    return false;
}

std::size_t PartialEncoding::size() const {
    std::size_t s = 0;
    for (const auto& r : sub) s += r->size();
    return s;
}

std::size_t FullEncoding::size() const {
    std::size_t s = 0;
    for (const auto& p : partials) s += p.size();
    return s;
}

std::vector<int> encoding_partials_of(const FullEncoding& E, const Tuple& t) {
    std::vector<int> out;
    for (std::size_t i = 0; i < E.partials.size(); ++i)
        if (E.partials[i].encodes(t)) out.push_back(static_cast<int>(i));
    return out;
}

std::string dump_encoding(const Pattern& H, const HostGraph& G, const FullEncoding& E, bool with_tuples) {
    std::string out;
    for (std::size_t i = 0; i < E.partials.size(); ++i) {
        const auto& p = E.partials[i];
        nlohmann::ordered_json j;
        j["partial"] = i;
        j["tag"] = p.tag;
        nlohmann::ordered_json bags = nlohmann::ordered_json::array();
        for (std::size_t b = 0; b < p.td.bags.size(); ++b) {
            nlohmann::ordered_json bj;
            std::vector<std::string> labels;
            for (int x : p.td.bags[b]) labels.push_back(H.label(x));
            bj["nodes"] = labels;
            bj["tuples"] = p.sub[b]->size();
            if (with_tuples) {
                nlohmann::ordered_json rows = nlohmann::ordered_json::array();
                for (std::size_t r = 0; r < p.sub[b]->size(); ++r) {
                    std::vector<std::string> row;
                    for (std::size_t c = 0; c < p.sub[b]->arity(); ++c) row.push_back(G.id(p.sub[b]->row(r)[c]));
                    rows.push_back(row);
                }
                bj["rows"] = rows;
            }
            bags.push_back(bj);
        }
        j["bags"] = bags;
        j["edges"] = p.td.edges;
        out += j.dump() + "\n";
    }
    return out;
}

}  // namespace subiso
