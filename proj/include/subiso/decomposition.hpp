#pragma once

#include <optional>
#include <random>
#include <vector>

#include "subiso/pattern.hpp"

namespace subiso {

inline constexpr int kMaxPatternNodes = 24;

// Some clique separator (lexicographically smallest), or none.
std::optional<std::vector<int>> find_clique_separator(const Pattern& H);
// Lexicographically smallest inclusion-minimal clique separator, or none.
std::optional<std::vector<int>> minimal_clique_separator(const Pattern& H);
// Random clique separator shrunk one node at a time in random order until minimal.
std::optional<std::vector<int>> random_minimal_clique_separator(const Pattern& H, std::mt19937_64& rng);
bool is_clique_separator(const Pattern& H, const std::vector<int>& C);

struct Decomposition {
    std::vector<std::vector<int>> pieces;  // sorted node sets, sorted lexicographically
    bool operator==(const Decomposition&) const = default;
};

Decomposition decompose(const Pattern& H);
Decomposition decompose_randomized(const Pattern& H, std::mt19937_64& rng);
// Reference: all node subsets without a clique separator, inclusion-maximal ones kept.
Decomposition decompose_brute(const Pattern& H);

// One recursion step of the decomposition, kept for stitching encodings.
struct SplitNode {
    std::vector<int> nodes;      // node set of this subgraph (sorted, ids of the original pattern)
    std::vector<int> separator;  // empty when this is a piece
    std::vector<SplitNode> children;
    bool is_piece() const { return children.empty(); }
};
SplitNode split_tree(const Pattern& H);

}  // namespace subiso
