#pragma once

#include <cstdint>
#include <vector>

#include "subiso/encoding.hpp"

namespace subiso {

// Tree-shaped join instance. Tree nodes are listed in preorder (parents first).
// Host nodes of tree node t are 0..count[t]-1. For non-root t, the host nodes adjacent to
// parent host node x are ids[t][offs[t][x] .. offs[t][x+1]) with weights edge_w[t] (empty: all 0).
struct TreeInstance {
    std::vector<int> parent;
    std::vector<int> count;
    std::vector<std::vector<std::uint32_t>> offs;
    std::vector<std::vector<int>> ids;
    std::vector<std::vector<Weight>> edge_w;
    std::vector<std::shared_ptr<const Relation>> rows;                // per tree node: tuples behind each host node (null for separators)
    std::vector<std::pair<int, int>> out_map;     // per output node: (tree node, column of rows)
    std::vector<int> roots;                       // surviving root host nodes (all before pruning)
    int size() const { return static_cast<int>(parent.size()); }
};

// Subdivided decomposition tree of one partial encoding: bag nodes and separator nodes.
// Edge weights fold the host's edge weights in: each pattern edge is charged to the first bag containing it.
TreeInstance to_tree_instance(const HostGraph& G, const PartialEncoding& E);
// Tree pattern host used directly (pattern of T must be a tree).
TreeInstance tree_instance_of(const HostGraph& T);

// Keeps exactly the host nodes that take part in some solution.
void prune(TreeInstance& T);

// All solutions as output tuples; T must be pruned.
std::vector<Tuple> tree_list(const TreeInstance& T);
// Minimum total edge weight of a solution, kInf if none.
Weight tree_min(const TreeInstance& T);

// The instance as an explicit tree pattern with a host graph; solutions of the two correspond.
struct ExplicitTree {
    HostGraph host;
    // host tuple over tree nodes -> output tuple
    Tuple back(const TreeInstance& T, const Tuple& tree_tuple) const;
    std::vector<int> index;  // host node -> index inside its tree node
};
ExplicitTree explicit_tree(const TreeInstance& T);

class Enumerator {
public:
    explicit Enumerator(const HostGraph& G);  // encodes and prunes
    bool next(Tuple& out);
    std::uint64_t last_steps() const { return steps_; }
    int partials() const { return static_cast<int>(parts_.size()); }

private:
    std::vector<TreeInstance> parts_;
    int cur_ = -1;
    bool fresh_ = true;
    std::vector<int> idx_, base_, len_, chosen_;
    std::uint64_t steps_ = 0;
};

std::vector<Tuple> list_all(const HostGraph& G);
Weight min_weight(const HostGraph& G);

}  // namespace subiso
