#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "subiso/degree.hpp"
#include "subiso/host.hpp"

namespace subiso {

enum class Skew { Uniform, PowerLaw, TwoClass };

struct GenSpec {
    Pattern pattern;
    std::vector<int> part_sizes;    // one per pattern node
    std::uint64_t target_m = 0;     // random edges, spread evenly over pattern edges
    double density = -1;            // if >= 0: each allowed pair independently (overrides target_m)
    int plant = 0;                  // planted solutions
    std::vector<Skew> skew;         // per pattern node; missing entries mean uniform
    std::vector<Rational> hub_exp;  // TwoClass: the hub of that part gets ceil(m^x) neighbours per incident edge
    double power = 1.0;             // PowerLaw exponent
    bool weighted = false;
    Weight max_weight = 100;
    std::uint64_t seed = 1;
};

struct Generated {
    HostGraph host;
    std::vector<Tuple> planted;  // host node ids
};

Generated generate(const GenSpec& spec);

// Parses key=value lines (pattern given separately): sizes, m, density, plant, skew, hub, power, weighted, seed.
GenSpec parse_gen_config(const std::string& text, Pattern pattern);

// Patterns for randomized corpora.
// Random P-graph with alpha <= max_a, beta <= max_b, gamma <= max_g drawn from the simple family
// (edge, triangle and cycles included).
Pattern random_family_pattern(std::mt19937_64& rng, int max_a, int max_b, int max_g);
// 1..max_pieces family pieces glued one after another at a shared node or a shared edge.
Pattern random_stitched_pattern(std::mt19937_64& rng, int max_pieces);

}  // namespace subiso
