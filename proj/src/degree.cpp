#include "subiso/degree.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace subiso {

using boost::multiprecision::cpp_int;

std::uint64_t ceil_pow(std::uint64_t m, Rational x) {
    if (x < 0) throw std::invalid_argument("negative exponent");
    if (x.numerator() == 0 || m <= 1) return m == 0 && x.numerator() > 0 ? 0 : 1;
    const auto p = static_cast<unsigned>(x.numerator());
    const auto q = static_cast<unsigned>(x.denominator());
    // smallest t with t^q >= m^p
    cpp_int target = boost::multiprecision::pow(cpp_int(m), p);
    std::uint64_t lo = 1, hi = 1;
    while (boost::multiprecision::pow(cpp_int(hi), q) < target) {
        lo = hi;
        hi *= 2;
    }
    while (lo < hi) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        if (boost::multiprecision::pow(cpp_int(mid), q) >= target)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

namespace {
thread_local std::uint64_t basis_override = 0;
}

std::uint64_t threshold_basis(const HostGraph& G) { return basis_override ? basis_override : G.m(); }

ThresholdBasisOverride::ThresholdBasisOverride(std::uint64_t m) : saved_(basis_override) { basis_override = m; }
ThresholdBasisOverride::~ThresholdBasisOverride() { basis_override = saved_; }

int DegreeProfile::class_of_degree(std::uint64_t d) const {
    for (int j = 1; j < max_class; ++j)
        if (d < bounds[j]) return j;
    return max_class;
}

DegreeProfile degree_split(const HostGraph& G, Rational f, int max_class) {
    if (f <= 0 || f > 1) throw std::invalid_argument("degree_split: need 0 < f <= 1");
    DegreeProfile p;
    p.f = f;
    p.max_class = max_class;
    for (int j = 0; j <= max_class; ++j) p.bounds.push_back(ceil_pow(threshold_basis(G), f * j));
    p.cls.resize(G.n());
    for (int v = 0; v < G.n(); ++v) p.cls[v] = p.class_of_degree(static_cast<std::uint64_t>(G.degree(v)));
    return p;
}

DegreeProfile degree_split(const HostGraph& G, Rational f) {
    Rational inv = 1 / f;
    auto k = inv.numerator() / inv.denominator() + (inv.denominator() == 1 ? 0 : 1);
    return degree_split(G, f, static_cast<int>(k));
}

}  // namespace subiso
