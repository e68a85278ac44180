#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "subiso/core.hpp"
#include "subiso/pattern.hpp"

namespace subiso {

using Tuple = std::vector<int>;  // indexed by pattern node

// Colored host graph. Immutable once built; use HostBuilder.
class HostGraph {
public:
    const Pattern& pattern() const { return pattern_; }
    int n() const { return static_cast<int>(color_.size()); }
    std::size_t m() const { return m_; }
    int color(int v) const { return color_[v]; }
    const std::vector<int>& part(int a) const { return parts_[a]; }
    const std::string& id(int v) const { return ids_[v]; }
    int degree(int v) const { return static_cast<int>(off_[slot_base_[v + 1]] - off_[slot_base_[v]]); }
    // Neighbours of v inside part b (b must be a pattern neighbour of color(v)); sorted.
    std::span<const int> nbrs(int v, int b) const {
        int j = nbr_slot_[color_[v] * pattern_.n() + b];
        if (j < 0) return {};
        std::size_t s = slot_base_[v] + j;
        return {adj_.data() + off_[s], adj_.data() + off_[s + 1]};
    }
    bool has_edge(int u, int v) const { return edges_.count(key(u, v)) != 0; }
    Weight weight(int u, int v) const {
        auto it = edges_.find(key(u, v));
        return it == edges_.end() ? 0 : it->second;
    }
    bool weighted() const { return weighted_; }
    std::uint64_t dropped_edges() const { return dropped_; }
    // All edges (u < v) in sorted order.
    std::vector<std::pair<int, int>> edge_list() const;
    int find_id(const std::string& id) const;

    std::string serialize() const;

private:
    friend class HostBuilder;
    static std::uint64_t key(int u, int v) {
        if (u > v) std::swap(u, v);
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) | static_cast<std::uint32_t>(v);
    }
    Pattern pattern_;
    std::vector<int> color_;
    std::vector<std::string> ids_;
    std::vector<std::vector<int>> parts_;
    std::vector<int> nbr_slot_;
    std::vector<std::size_t> slot_base_;
    std::vector<std::size_t> off_;
    std::vector<int> adj_;
    std::unordered_map<std::uint64_t, Weight> edges_;
    std::size_t m_ = 0;
    bool weighted_ = false;
    std::uint64_t dropped_ = 0;
};

class HostBuilder {
public:
    explicit HostBuilder(Pattern pattern) : pattern_(std::move(pattern)) {}
    int add_node(int color, std::string id = {});
    // Edges between non-adjacent colors are counted and dropped; parallel edges keep the first.
    void add_edge(int u, int v, Weight w = 0);
    void set_weighted(bool w) { weighted_ = w; }
    int node_count() const { return static_cast<int>(color_.size()); }
    // Removes isolated nodes and renumbers densely in insertion order.
    // If remap is given it receives old id -> new id (-1 when removed).
    HostGraph build(std::vector<int>* remap = nullptr) const;

private:
    Pattern pattern_;
    std::vector<int> color_;
    std::vector<std::string> ids_;
    struct E {
        int u, v;
        Weight w;
    };
    std::vector<E> edges_;
    std::uint64_t dropped_ = 0;
    bool weighted_ = false;
};

HostGraph load_host(std::istream& in, const Pattern& pattern);
HostGraph load_host_string(const std::string& text, const Pattern& pattern);

bool is_h_subgraph(const Pattern& H, const HostGraph& G, const Tuple& t);
// Total edge weight of an H-subgraph.
Weight tuple_weight(const HostGraph& G, const Tuple& t);

// Host restricted to the colors in `nodes` (pattern becomes H[nodes], color i <- nodes[i]).
struct Restricted {
    HostGraph host;
    std::vector<int> orig;  // node id in restricted host -> original id
};
Restricted restrict_host(const HostGraph& G, const std::vector<int>& nodes);

}  // namespace subiso
