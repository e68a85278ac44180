#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "subiso/host.hpp"

namespace subiso {

// Set of tuples over a sorted list of pattern nodes, stored row-major, sorted and unique.
struct Relation {
    std::vector<int> attrs;
    std::vector<int> data;

    std::size_t arity() const { return attrs.size(); }
    std::size_t size() const { return attrs.empty() ? 0 : data.size() / attrs.size(); }
    const int* row(std::size_t i) const { return data.data() + i * attrs.size(); }
    int pos(int attr) const;  // -1 if absent
    void sort_unique();
    bool contains(const int* key) const;  // key laid out in attrs order
    bool contains_tuple(const Tuple& t) const;
};

Relation project(const Relation& r, const std::vector<int>& attrs);

struct TreeDecomposition {
    std::vector<std::vector<int>> bags;  // sorted pattern nodes
    std::vector<std::pair<int, int>> edges;
};

// Empty string when the three tree-decomposition axioms hold (and the bag graph is a tree).
std::string check_tree_decomposition(const Pattern& H, const TreeDecomposition& td);

struct PartialEncoding {
    TreeDecomposition td;
    std::vector<std::shared_ptr<const Relation>> sub;  // one per bag
    std::string tag;                                   // which case produced it

    bool encodes(const Tuple& t) const;
    bool has_empty_bag() const;
    std::size_t size() const;  // total tuples
};

struct FullEncoding {
    std::vector<PartialEncoding> partials;
    std::size_t size() const;
};

// Indices of partials encoding t.
std::vector<int> encoding_partials_of(const FullEncoding& E, const Tuple& t);

// One JSON object per line: partial index, tag, bags with labels and tuple counts.
std::string dump_encoding(const Pattern& H, const HostGraph& G, const FullEncoding& E, bool with_tuples);

}  // namespace subiso
