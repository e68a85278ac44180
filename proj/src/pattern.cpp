#include "subiso/pattern.hpp"

#include <algorithm>
#include <istream>
#include <regex>
#include <sstream>

#include "subiso/core.hpp"

namespace subiso {

Pattern::Pattern(int n) {
    for (int i = 0; i < n; ++i) add_node(std::to_string(i));
}

int Pattern::add_node(const std::string& label) {
    labels_.push_back(label);
    adj_.emplace_back();
    return n() - 1;
}

bool Pattern::add_edge(int u, int v) {
    if (u == v) throw InputError("pattern loop at " + labels_[u]);
    if (has_edge(u, v)) return false;
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    std::pair<int, int> e = std::minmax(u, v);
    edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), e), e);
    return true;
}

bool Pattern::add_edge(const std::string& u, const std::string& v) {
    int a = find(u), b = find(v);
    if (a < 0 || b < 0) throw InputError("unknown pattern node in edge " + u + " " + v);
    return add_edge(a, b);
}

int Pattern::find(const std::string& label) const {
    for (int i = 0; i < n(); ++i)
        if (labels_[i] == label) return i;
    return -1;
}

bool Pattern::has_edge(int u, int v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

int Pattern::nbr_index(int u, int v) const {
    auto it = std::lower_bound(adj_[u].begin(), adj_[u].end(), v);
    if (it == adj_[u].end() || *it != v) return -1;
    return static_cast<int>(it - adj_[u].begin());
}

bool Pattern::connected_subset(const std::vector<int>& nodes) const {
    if (nodes.empty()) return true;
    std::vector<char> in(n(), 0), seen(n(), 0);
    for (int u : nodes) in[u] = 1;
    std::vector<int> st{nodes[0]};
    seen[nodes[0]] = 1;
    size_t cnt = 1;
    while (!st.empty()) {
        int u = st.back();
        st.pop_back();
        for (int v : adj_[u])
            if (in[v] && !seen[v]) {
                seen[v] = 1;
                ++cnt;
                st.push_back(v);
            }
    }
    return cnt == nodes.size();
}

bool Pattern::connected() const {
    std::vector<int> all(n());
    for (int i = 0; i < n(); ++i) all[i] = i;
    return connected_subset(all);
}

Pattern Pattern::induced(const std::vector<int>& nodes) const {
    Pattern p;
    std::vector<int> pos(n(), -1);
    for (size_t i = 0; i < nodes.size(); ++i) {
        pos[nodes[i]] = static_cast<int>(i);
        p.add_node(labels_[nodes[i]]);
    }
    for (auto [u, v] : edges_)
        if (pos[u] >= 0 && pos[v] >= 0) p.add_edge(pos[u], pos[v]);
    return p;
}

Pattern Pattern::permuted(const std::vector<int>& perm) const {
    Pattern p;
    std::vector<std::string> lab(n());
    for (int u = 0; u < n(); ++u) lab[perm[u]] = labels_[u];
    for (auto& s : lab) p.add_node(s);
    for (auto [u, v] : edges_) p.add_edge(perm[u], perm[v]);
    return p;
}

Pattern Pattern::parse(std::istream& in) {
    Pattern p;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        std::string a, b, extra;
        if (kw == "node") {
            if (!(ls >> a) || (ls >> extra)) throw InputError("pattern line " + std::to_string(lineno) + ": malformed node");
            if (p.find(a) >= 0) throw InputError("pattern line " + std::to_string(lineno) + ": duplicate node " + a);
            p.add_node(a);
        } else if (kw == "edge") {
            if (!(ls >> a >> b) || (ls >> extra)) throw InputError("pattern line " + std::to_string(lineno) + ": malformed edge");
            if (a == b) throw InputError("pattern line " + std::to_string(lineno) + ": loop");
            p.add_edge(a, b);
        } else {
            throw InputError("pattern line " + std::to_string(lineno) + ": unknown keyword " + kw);
        }
    }
    return p;
}

Pattern Pattern::parse_string(const std::string& text) {
    std::istringstream in(text);
    return parse(in);
}

std::string Pattern::serialize() const {
    std::ostringstream out;
    for (auto& l : labels_) out << "node " << l << "\n";
    for (auto [u, v] : edges_) out << "edge " << labels_[u] << " " << labels_[v] << "\n";
    return out.str();
}

namespace patterns {

Pattern edge() { return path(1); }

Pattern path(int edges) {
    Pattern p;
    for (int i = 0; i <= edges; ++i) p.add_node("v" + std::to_string(i));
    for (int i = 0; i < edges; ++i) p.add_edge(i, i + 1);
    return p;
}

Pattern cycle(int k) {
    Pattern p;
    for (int i = 0; i < k; ++i) p.add_node("v" + std::to_string(i));
    for (int i = 0; i < k; ++i) p.add_edge(i, (i + 1) % k);
    return p;
}

Pattern star(int leaves) {
    Pattern p;
    p.add_node("x");
    for (int i = 1; i <= leaves; ++i) p.add_edge(0, p.add_node("l" + std::to_string(i)));
    return p;
}

Pattern biclique2(int k) {
    Pattern p;
    p.add_node("a1");
    p.add_node("a2");
    for (int i = 1; i <= k; ++i) {
        int b = p.add_node("b" + std::to_string(i));
        p.add_edge(0, b);
        p.add_edge(1, b);
    }
    return p;
}

Pattern p_graph(const std::vector<int>& lengths) {
    Pattern p;
    int s = p.add_node("s"), t = p.add_node("t");
    for (size_t i = 0; i < lengths.size(); ++i) {
        int len = lengths[i];
        if (len < 1) throw InputError("path length must be positive");
        int prev = s;
        for (int j = 1; j < len; ++j) {
            int x = p.add_node("p" + std::to_string(i + 1) + "_" + std::to_string(j));
            p.add_edge(prev, x);
            prev = x;
        }
        if (!p.add_edge(prev, t)) throw InputError("p_graph: repeated direct edge");
    }
    return p;
}

Pattern p_triple(int alpha, int beta, int gamma) {
    Pattern p;
    for (int i = 0; i <= alpha; ++i) p.add_node("a" + std::to_string(i));
    for (int i = 0; i < alpha; ++i) p.add_edge(i, i + 1);
    int a0 = 0, aa = alpha;
    if (beta >= 1) {
        int prev = a0;
        for (int j = 1; j < beta; ++j) {
            int x = p.add_node("b" + std::to_string(j));
            p.add_edge(prev, x);
            prev = x;
        }
        p.add_edge(prev, aa);
    }
    for (int j = 1; j <= gamma; ++j) {
        int c = p.add_node("c" + std::to_string(j));
        p.add_edge(a0, c);
        p.add_edge(c, aa);
    }
    return p;
}

Pattern goggles() {
    Pattern p;
    for (auto s : {"a1", "a2", "a3", "a4", "b2", "b3", "b4"}) p.add_node(s);
    p.add_edge("a1", "a2");
    p.add_edge("a2", "a3");
    p.add_edge("a3", "a4");
    p.add_edge("a4", "a1");
    p.add_edge("a1", "b2");
    p.add_edge("b2", "b3");
    p.add_edge("b3", "b4");
    p.add_edge("b4", "a1");
    p.add_edge("a3", "b3");
    return p;
}

Pattern complete(int k) {
    Pattern p;
    for (int i = 0; i < k; ++i) p.add_node("v" + std::to_string(i));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) p.add_edge(i, j);
    return p;
}

Pattern named(const std::string& name) {
    std::smatch m;
    auto num = [&](int i) { return std::stoi(m[i].str()); };
    auto list = [](const std::string& s) {
        std::vector<int> out;
        std::stringstream ss(s);
        for (std::string x; std::getline(ss, x, ',');) out.push_back(std::stoi(x));
        return out;
    };
    auto small = [&](int k, int lo) {
        if (k < lo || k > 64) throw InputError("size out of range in pattern name: " + name);
        return k;
    };
    if (name == "edge") return edge();
    if (name == "triangle") return cycle(3);
    if (name == "goggles") return goggles();
    if (std::regex_match(name, m, std::regex(R"(C(\d+))"))) return cycle(small(num(1), 3));
    if (std::regex_match(name, m, std::regex(R"(K(\d+))"))) return complete(small(num(1), 1));
    if (std::regex_match(name, m, std::regex(R"(K(\d+),2)")) || std::regex_match(name, m, std::regex(R"(K2,(\d+))")))
        return biclique2(small(num(1), 1));
    if (std::regex_match(name, m, std::regex(R"(path(\d+))"))) return path(small(num(1), 1));
    if (std::regex_match(name, m, std::regex(R"(star(\d+))"))) return star(small(num(1), 1));
    if (std::regex_match(name, m, std::regex(R"(P\((\d+(,\d+)*)\))"))) {
        auto l = list(m[1].str());
        for (int x : l) small(x, 1);
        return p_graph(l);
    }
    if (std::regex_match(name, m, std::regex(R"(T\((\d+),(\d+),(\d+)\))")))
        return p_triple(small(num(1), 1), small(num(2), 0), small(num(3), 0));
    throw InputError("unknown pattern name: " + name);
}

}  // namespace patterns

}  // namespace subiso
