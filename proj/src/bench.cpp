#include "subiso/bench.hpp"

#include <chrono>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

#include "subiso/generators.hpp"
#include "subiso/oracle.hpp"
#include "subiso/solvers.hpp"

namespace subiso {
namespace {

// Hubs (first two) and sides of a two-hub biclique with at least three sides.
std::optional<std::vector<int>> biclique_layout(const Pattern& H) {
    const int n = H.n();
    if (n < 5) return std::nullopt;
    std::vector<int> hubs, sides;
    for (int u = 0; u < n; ++u) (H.degree(u) == n - 2 ? hubs : sides).push_back(u);
    if (hubs.size() != 2 || H.has_edge(hubs[0], hubs[1])) return std::nullopt;
    for (int s : sides)
        if (H.degree(s) != 2 || !H.has_edge(s, hubs[0]) || !H.has_edge(s, hubs[1])) return std::nullopt;
    std::vector<int> out = hubs;
    out.insert(out.end(), sides.begin(), sides.end());
    return out;
}

}  // namespace

HostGraph sparse_random_host(const Pattern& H, std::uint64_t target_m, std::uint64_t seed) {
    if (H.m() == 0) throw InputError("bench: pattern has no edges");
    GenSpec s;
    s.pattern = H;
    s.target_m = target_m;
    s.seed = seed;
    const double n = std::pow(static_cast<double>(target_m) / H.m(), 5.0 / 6.0);
    s.part_sizes.assign(H.n(), std::max(2, static_cast<int>(n)));
    return generate(s).host;
}

HostGraph hub_pair_host(const Pattern& H, std::uint64_t target_m, std::uint64_t seed) {
    auto layout = biclique_layout(H);
    if (!layout) throw InputError("hub_pair_host: pattern is not K_{2,k} with k >= 3");
    const int k = H.n() - 2;
    const int x0 = (*layout)[0], x1 = (*layout)[1];
    const int r = std::max(2, static_cast<int>(std::sqrt(static_cast<double>(target_m) / (k + 2))));
    std::mt19937_64 rng(seed);
    HostBuilder B(H);
    std::vector<int> h0, h1;
    for (int i = 0; i < r; ++i) {
        h0.push_back(B.add_node(x0, "h" + std::to_string(i)));
        h1.push_back(B.add_node(x1, "g" + std::to_string(i)));
    }
    std::vector<int> match(r);
    std::iota(match.begin(), match.end(), 0);
    std::shuffle(match.begin(), match.end(), rng);
    for (int j = 0; j < k; ++j) {
        const int x = (*layout)[2 + j];
        const std::string p = "s" + std::to_string(j) + "_";
        int id = 0;
        auto node = [&] { return B.add_node(x, p + std::to_string(id++)); };
        if (j == 0) {
            for (int i = 0; i < r; ++i) {
                int s = node();
                for (int y = 0; y < r; ++y) B.add_edge(s, h0[y]), B.add_edge(s, h1[y]);
            }
        } else if (j == 1) {
            for (int a = 0; a < r; ++a)
                for (int b = 0; b < r; ++b) {
                    int s = node();
                    B.add_edge(s, h0[a]), B.add_edge(s, h1[b]);
                }
        } else {
            for (int a = 0; a < r; ++a) {
                int s = node();
                B.add_edge(s, h0[a]), B.add_edge(s, h1[match[a]]);
            }
            for (int i = 0; i < r * r + r; ++i) B.add_edge(node(), h0[rng() % r]);
        }
    }
    return B.build();
}

HostGraph bench_host(const Pattern& H, std::uint64_t target_m, std::uint64_t seed) {
    return biclique_layout(H) ? hub_pair_host(H, target_m, seed) : sparse_random_host(H, target_m, seed);
}

HostGraph planted_hub_host(const Pattern& H, std::uint64_t target_m, std::uint64_t seed) {
    if (H.m() == 0) throw InputError("bench: pattern has no edges");
    GenSpec s;
    s.pattern = H;
    s.target_m = target_m;
    s.seed = seed;
    s.plant = 30;
    const double n = std::pow(static_cast<double>(target_m) / H.m(), 5.0 / 6.0);
    s.part_sizes.assign(H.n(), std::max(6, static_cast<int>(n)));
    s.skew.assign(H.n(), Skew::TwoClass);
    s.hub_exp.assign(H.n(), Rational(1, 2));
    return generate(s).host;
}

BenchRow bench_once(const std::string& id, const HostGraph& G, bool with_brute) {
    using clock = std::chrono::steady_clock;
    BenchRow r;
    r.pattern = id;
    r.m = G.m();
    counters().reset();
    auto t0 = clock::now();
    auto sols = list_all(G);
    r.wall_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    r.t = sols.size();
    r.counter = counters().gen + counters().solve;
    if (with_brute) {
        r.brute = true;
        counters().reset();
        OracleOptions unlimited;
        unlimited.max_product = 0;
        t0 = clock::now();
        const std::uint64_t c = brute_count(G, unlimited);
        r.brute_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
        r.brute_counter = counters().brute;
        if (c != r.t)
            throw std::runtime_error("bench: solver found " + std::to_string(r.t) + " solutions, oracle " +
                                     std::to_string(c));
    }
    return r;
}

std::vector<std::uint64_t> parse_sizes(const std::string& text) {
    auto one = [&](const std::string& s) -> std::uint64_t {
        try {
            std::size_t used = 0;
            if (s.rfind("2^", 0) == 0) {
                int e = std::stoi(s.substr(2), &used);
                if (used + 2 != s.size() || e < 0 || e > 40) throw InputError("");
                return std::uint64_t{1} << e;
            }
            std::uint64_t v = std::stoull(s, &used);
            if (used != s.size() || v == 0) throw InputError("");
            return v;
        } catch (const std::exception&) {
            throw InputError("bad size: '" + s + "'");
        }
    };
    std::vector<std::uint64_t> out;
    auto dots = text.find("..");
    if (dots != std::string::npos) {
        std::string a = text.substr(0, dots), b = text.substr(dots + 2);
        if (a.rfind("2^", 0) != 0 || b.rfind("2^", 0) != 0) throw InputError("ranges take powers of two: " + text);
        for (std::uint64_t v = one(a), hi = one(b); v <= hi; v *= 2) out.push_back(v);
    } else {
        std::stringstream ss(text);
        for (std::string s; std::getline(ss, s, ',');) out.push_back(one(s));
    }
    if (out.empty()) throw InputError("no sizes in '" + text + "'");
    return out;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw InputError("slope needs at least two points");
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double a = std::log(x[i]), b = std::log(y[i]);
        sx += a, sy += b, sxx += a * a, sxy += a * b;
    }
    const double den = n * sxx - sx * sx;
    if (den == 0) throw InputError("slope needs two distinct sizes");
    return (n * sxy - sx * sy) / den;
}

std::string bench_csv_header(bool with_brute) {
    return with_brute ? "pattern,m,t,wall_ms,counter,brute_ms,brute_counter" : "pattern,m,t,wall_ms,counter";
}

std::string bench_csv_row(const BenchRow& r, bool with_brute) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(3);
    os << r.pattern << ',' << r.m << ',' << r.t << ',' << r.wall_ms << ',' << r.counter;
    if (with_brute) os << ',' << r.brute_ms << ',' << r.brute_counter;
    return os.str();
}

DelayProbe probe_delay(const HostGraph& G, std::uint64_t limit) {
    Enumerator en(G);
    DelayProbe p;
    p.live_partials = en.partials();
    Tuple t;
    while ((limit == 0 || p.outputs < limit) && en.next(t)) {
        ++p.outputs;
        p.max_steps = std::max(p.max_steps, en.last_steps());
    }
    return p;
}

}  // namespace subiso
