#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace subiso {

// Small simple undirected graph with labelled nodes.
class Pattern {
public:
    Pattern() = default;
    explicit Pattern(int n);

    int add_node(const std::string& label);
    // Returns false if the edge already exists. Loops are rejected.
    bool add_edge(int u, int v);
    bool add_edge(const std::string& u, const std::string& v);

    int n() const { return static_cast<int>(adj_.size()); }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<int>& nbrs(int u) const { return adj_[u]; }
    int degree(int u) const { return static_cast<int>(adj_[u].size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::string& label(int u) const { return labels_[u]; }
    const std::vector<std::string>& labels() const { return labels_; }
    void set_label(int u, std::string s) { labels_[u] = std::move(s); }
    int find(const std::string& label) const;  // -1 if absent
    bool has_edge(int u, int v) const;
    // Index of v in nbrs(u), or -1.
    int nbr_index(int u, int v) const;

    bool connected() const;
    bool connected_subset(const std::vector<int>& nodes) const;
    bool is_tree() const { return connected() && m() == n() - 1; }
    // Induced subgraph on `nodes` (any order); node i of the result is nodes[i].
    Pattern induced(const std::vector<int>& nodes) const;
    // Same graph with nodes renumbered: new node perm[u] is old node u.
    Pattern permuted(const std::vector<int>& perm) const;

    static Pattern parse(std::istream& in);
    static Pattern parse_string(const std::string& text);
    std::string serialize() const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;
};

namespace patterns {
Pattern edge();
Pattern path(int edges);
Pattern cycle(int k);
Pattern star(int leaves);
// K_{2,k}: hubs "a1","a2" and side "b1".."bk".
Pattern biclique2(int k);
// P(l_1, ..., l_k): hubs "s","t"; inner nodes "p<i>_<j>".
Pattern p_graph(const std::vector<int>& lengths);
// P(alpha, beta, gamma x 2) with role labels a0..a_alpha, b1..b_{beta-1}, c1..c_gamma.
// beta may be 2 (then b1 is a length-2 path) or 0/1 for the cycle corner cases.
Pattern p_triple(int alpha, int beta, int gamma);
Pattern goggles();
Pattern complete(int k);
// Short names: edge, triangle, goggles, C<k>, K<k>, K<k>,2 or K2,<k>, path<k>, star<k>,
// P(l1,...,lk) for p_graph, T(alpha,beta,gamma) for p_triple. Throws InputError otherwise.
Pattern named(const std::string& name);
}  // namespace patterns

}  // namespace subiso
