#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <vector>

#include "subiso/host.hpp"

namespace subiso {

using Rational = boost::rational<std::int64_t>;

// ceil(m^x) for rational x >= 0, exact.
std::uint64_t ceil_pow(std::uint64_t m, Rational x);

// Edge count that degree and hyper-degree thresholds are computed from: G.m() unless overridden.
std::uint64_t threshold_basis(const HostGraph& G);

// Scoped override of the threshold basis (per thread). Only the choice of cases changes, never the
// encoded set, so tests use it to reach every case on hosts small enough for the oracle.
class ThresholdBasisOverride {
public:
    explicit ThresholdBasisOverride(std::uint64_t m);
    ~ThresholdBasisOverride();
    ThresholdBasisOverride(const ThresholdBasisOverride&) = delete;
    ThresholdBasisOverride& operator=(const ThresholdBasisOverride&) = delete;

private:
    std::uint64_t saved_;
};

struct DegreeProfile {
    Rational f;
    int max_class = 1;
    std::vector<std::uint64_t> bounds;  // bounds[j] = ceil(m^{j f}), j = 0..max_class
    std::vector<int> cls;               // per host node, 1..max_class
    int class_of_degree(std::uint64_t d) const;
};

// Splits nodes into classes [m^{(j-1)f}, m^{jf}); the top class max_class = ceil(1/f) is closed.
DegreeProfile degree_split(const HostGraph& G, Rational f);
// Same with an explicit number of classes (anything above the last bound falls in the top class).
DegreeProfile degree_split(const HostGraph& G, Rational f, int max_class);

}  // namespace subiso
