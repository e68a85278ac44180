#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "subiso/host.hpp"

namespace subiso {

// Host families for scaling runs. target_m is approximate; use HostGraph::m() for fits.

// Random, few solutions: parts of size about (target_m / |E(H)|)^(5/6), so degrees grow like m^(1/6).
HostGraph sparse_random_host(const Pattern& H, std::uint64_t target_m, std::uint64_t seed);
// For K_{2,k}, k >= 3 (patterns::biclique2). Hub parts of size r ~ sqrt(m); side b1 complete to
// both hub parts, side b2 has one node per hub pair, sides b3.. a matching of hub pairs padded with
// pendant nodes so the oracle visits them last. About r^2 solutions, about r^4 oracle states.
HostGraph hub_pair_host(const Pattern& H, std::uint64_t target_m, std::uint64_t seed);
// hub_pair_host when H is a two-hub biclique with at least three sides, sparse_random_host otherwise.
HostGraph bench_host(const Pattern& H, std::uint64_t target_m, std::uint64_t seed);
// Every part gets a hub of degree about sqrt(m) and 30 solutions are planted through the hubs.
HostGraph planted_hub_host(const Pattern& H, std::uint64_t target_m, std::uint64_t seed);

struct BenchRow {
    std::string pattern;
    std::size_t m = 0;
    std::uint64_t t = 0;
    double wall_ms = 0;
    std::uint64_t counter = 0;  // tuple generation plus solver work
    // filled when the oracle also ran
    bool brute = false;
    double brute_ms = 0;
    std::uint64_t brute_counter = 0;
};

// Lists all solutions with the solver (and the oracle when with_brute); throws on a count mismatch.
BenchRow bench_once(const std::string& id, const HostGraph& G, bool with_brute);

// "2^10..2^16" (every power in between), "2^12", or a comma list of plain numbers and powers.
std::vector<std::uint64_t> parse_sizes(const std::string& text);
// Least-squares slope of log y against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

std::string bench_csv_header(bool with_brute);
std::string bench_csv_row(const BenchRow& r, bool with_brute);

struct DelayProbe {
    std::uint64_t outputs = 0;
    std::uint64_t max_steps = 0;
    int live_partials = 0;
};
// Runs the enumerator to exhaustion (or limit outputs when limit > 0).
DelayProbe probe_delay(const HostGraph& G, std::uint64_t limit = 0);

}  // namespace subiso
