#pragma once

#include <vector>

#include "subiso/classifier.hpp"
#include "subiso/degree.hpp"
#include "subiso/encoding.hpp"

namespace subiso {

// Full encoding for any pattern whose classification is subquadratic; throws HardPattern otherwise.
FullEncoding encode(const HostGraph& G);
// Full encoding when G's pattern is a single piece (no clique separator) from the simple family.
FullEncoding encode_piece(const HostGraph& G);

FullEncoding encode_edge(const HostGraph& G);
// `order` walks the cycle; odd lengths go through a host for the cycle one longer.
FullEncoding encode_cycle(const HostGraph& G, const std::vector<int>& order);
FullEncoding encode_biclique(const HostGraph& G, int hub1, int hub2, const std::vector<int>& side);
// a: the long hub-to-hub path; c: middles of the length-2 paths (at least two). Odd paths are lifted.
FullEncoding encode_pa2c(const HostGraph& G, const std::vector<int>& a, const std::vector<int>& c);
// Three or more paths with the two longest of length >= 3.
FullEncoding encode_pabc(const HostGraph& G, const Roles& roles);

// Standalone cycle-closing routine. G's pattern must contain the path d[0..k];
// `red` lists allowed (d[0], d[k]) pairs. Degree classes use threshold m^f with two classes,
// and every part must lie in a single class. Throws InputError otherwise.
PartialEncoding biased_cycle(const HostGraph& G, const std::vector<int>& d, const Relation& red, Rational f, int ell);

}  // namespace subiso
