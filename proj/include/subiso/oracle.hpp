#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "subiso/host.hpp"

namespace subiso {

struct OracleOptions {
    // Refuse when the product of part sizes exceeds this (0 = no limit).
    double max_product = 1e8;
};

// Backtracking over all color-respecting tuples. fn returns false to stop early.
void brute_for_each(const HostGraph& G, const std::function<bool(const Tuple&)>& fn, const OracleOptions& opt = {});
std::vector<Tuple> brute_list(const HostGraph& G, const OracleOptions& opt = {});
std::uint64_t brute_count(const HostGraph& G, const OracleOptions& opt = {});

struct MinResult {
    Tuple tuple;
    Weight weight = kInf;
};
std::optional<MinResult> brute_min_weight(const HostGraph& G, const OracleOptions& opt = {});

}  // namespace subiso
