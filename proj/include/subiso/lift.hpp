#pragma once

#include <vector>

#include "subiso/encoding.hpp"

namespace subiso {

// Host for a larger pattern H built from a host G' of an induced minor H' of H.
// branch_sets[x] is the connected node set of H contracted onto node x of H'.
struct MinorLift {
    HostGraph host;
    std::vector<int> owner;    // H node -> H' node, or -1 when unmapped
    std::vector<int> back;     // lifted host node -> G' node, or -1 for the filler node of an unmapped part
    std::vector<std::pair<int, int>> weight_edge;  // per H' edge (sorted order): the H edge carrying its weight
};

void check_minor_witness(const Pattern& H, const Pattern& Hp, const std::vector<std::vector<int>>& branch_sets);

MinorLift lift_host_via_minor(const Pattern& H, const HostGraph& Gp, const std::vector<std::vector<int>>& branch_sets);

// H-subgraph of the lifted host -> H'-subgraph of G' (nullopt-free: caller passes genuine tuples).
Tuple lower_tuple(const MinorLift& L, int hp_nodes, const Tuple& t);
// H'-subgraph of G' -> H-subgraph of the lifted host.
Tuple raise_tuple(const MinorLift& L, const Tuple& tp);

// Encoding of the lifted host mapped back to an encoding of G'.
FullEncoding lower_encoding(const FullEncoding& E, const MinorLift& L, int hp_nodes);

}  // namespace subiso
