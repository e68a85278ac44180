#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace subiso {

using Weight = std::int64_t;
inline constexpr Weight kInf = std::numeric_limits<Weight>::max();

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct HardPattern : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OverflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sum of finite weights; kInf absorbs.
inline Weight add_weight(Weight a, Weight b) {
    if (a == kInf || b == kInf) return kInf;
    Weight r;
    if (__builtin_add_overflow(a, b, &r) || r == kInf) throw OverflowError("weight overflow");
    return r;
}

// Instrumentation. Plain counters, reset by callers that measure.
struct Counters {
    std::uint64_t gen = 0;      // tuples and candidates touched while building encodings
    std::uint64_t solve = 0;    // work inside tree solvers
    std::uint64_t brute = 0;    // oracle search states
    void reset() { *this = Counters{}; }
};

Counters& counters();

}  // namespace subiso
