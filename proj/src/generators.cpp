#include "subiso/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "subiso/classifier.hpp"

namespace subiso {

namespace {

struct PartSampler {
    std::discrete_distribution<int> dist;
    bool uniform = true;
    int size = 0;
    int operator()(std::mt19937_64& rng) {
        if (uniform) return std::uniform_int_distribution<int>(0, size - 1)(rng);
        return dist(rng);
    }
};

}  // namespace

Generated generate(const GenSpec& spec) {
    const Pattern& H = spec.pattern;
    const int k = H.n();
    if (static_cast<int>(spec.part_sizes.size()) != k) throw InputError("gen: one part size per pattern node");
    for (int s : spec.part_sizes)
        if (s < 1 || s > (1 << 24)) throw InputError("gen: part size out of range");
    double capacity = 1;
    for (int s : spec.part_sizes) capacity *= s;
    if (spec.plant < 0 || spec.plant > capacity) throw InputError("gen: more planted solutions than tuples");

    std::mt19937_64 rng(spec.seed);
    HostBuilder B(H);
    B.set_weighted(spec.weighted);
    std::vector<int> first(k);
    for (int a = 0; a < k; ++a) {
        first[a] = B.node_count();
        for (int i = 0; i < spec.part_sizes[a]; ++i) B.add_node(a, H.label(a) + "_" + std::to_string(i));
    }
    auto skew = [&](int a) { return a < static_cast<int>(spec.skew.size()) ? spec.skew[a] : Skew::Uniform; };
    std::vector<PartSampler> samp(k);
    for (int a = 0; a < k; ++a) {
        samp[a].size = spec.part_sizes[a];
        if (skew(a) == Skew::PowerLaw) {
            std::vector<double> w(spec.part_sizes[a]);
            for (int i = 0; i < spec.part_sizes[a]; ++i) w[i] = std::pow(i + 1.0, -spec.power);
            samp[a].dist = std::discrete_distribution<int>(w.begin(), w.end());
            samp[a].uniform = false;
        }
    }
    std::uniform_int_distribution<Weight> wdist(1, std::max<Weight>(1, spec.max_weight));
    std::set<std::pair<int, int>> seen;
    auto put = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) return false;
        B.add_edge(u, v, spec.weighted ? wdist(rng) : 0);
        return true;
    };

    // planted solutions first so they keep their identity
    std::set<Tuple> planted_local;
    while (static_cast<int>(planted_local.size()) < spec.plant) {
        Tuple t(k);
        for (int a = 0; a < k; ++a) {
            t[a] = std::uniform_int_distribution<int>(0, spec.part_sizes[a] - 1)(rng);
            if (skew(a) == Skew::TwoClass && rng() % 2 == 0) t[a] = 0;  // the hub
        }
        if (!planted_local.insert(t).second) continue;
        for (auto [a, b] : H.edges()) put(first[a] + t[a], first[b] + t[b]);
    }

    const std::uint64_t m_target = spec.target_m;
    for (auto [a, b] : H.edges()) {
        const double pairs = static_cast<double>(spec.part_sizes[a]) * spec.part_sizes[b];
        if (spec.density >= 0) {
            std::bernoulli_distribution coin(std::min(1.0, spec.density));
            for (int i = 0; i < spec.part_sizes[a]; ++i)
                for (int j = 0; j < spec.part_sizes[b]; ++j)
                    if (coin(rng)) put(first[a] + i, first[b] + j);
            continue;
        }
        std::uint64_t want = m_target / std::max(1, H.m());
        want = static_cast<std::uint64_t>(std::min<double>(want, pairs));
        std::uint64_t have = 0;
        for (int side = 0; side < 2; ++side) {
            int x = side == 0 ? a : b, y = side == 0 ? b : a;
            if (skew(x) != Skew::TwoClass) continue;
            Rational e = x < static_cast<int>(spec.hub_exp.size()) ? spec.hub_exp[x] : Rational(1, 2);
            std::uint64_t deg = std::min<std::uint64_t>(ceil_pow(std::max<std::uint64_t>(m_target, 1), e), spec.part_sizes[y]);
            std::vector<int> others(spec.part_sizes[y]);
            std::iota(others.begin(), others.end(), 0);
            std::shuffle(others.begin(), others.end(), rng);
            for (std::uint64_t i = 0; i < deg; ++i) have += put(first[x], first[y] + others[i]);
        }
        std::uint64_t attempts = 0;
        while (have < want && attempts < 20 * want + 100) {
            ++attempts;
            int u = first[a] + (skew(a) == Skew::TwoClass ? std::uniform_int_distribution<int>(0, spec.part_sizes[a] - 1)(rng) : samp[a](rng));
            int v = first[b] + (skew(b) == Skew::TwoClass ? std::uniform_int_distribution<int>(0, spec.part_sizes[b] - 1)(rng) : samp[b](rng));
            have += put(u, v);
        }
    }

    std::vector<int> remap;
    Generated g{B.build(&remap), {}};
    for (const Tuple& t : planted_local) {
        Tuple h(k);
        for (int a = 0; a < k; ++a) h[a] = remap[first[a] + t[a]];
        g.planted.push_back(h);
    }
    std::sort(g.planted.begin(), g.planted.end());
    return g;
}

GenSpec parse_gen_config(const std::string& text, Pattern pattern) {
    GenSpec s;
    s.pattern = std::move(pattern);
    const int k = s.pattern.n();
    s.part_sizes.assign(k, 10);
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) { throw InputError("gen config line " + std::to_string(lineno) + ": " + msg); };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        auto eq = line.find('=');
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (eq == std::string::npos) fail("expected key=value");
        auto trim = [](std::string x) {
            x.erase(0, x.find_first_not_of(" \t\r"));
            x.erase(x.find_last_not_of(" \t\r") + 1);
            return x;
        };
        std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        try {
            if (key == "sizes") {
                std::vector<int> v;
                std::stringstream ss(val);
                std::string tok;
                while (std::getline(ss, tok, ',')) v.push_back(std::stoi(tok));
                if (v.size() == 1) v.assign(k, v[0]);
                if (static_cast<int>(v.size()) != k) fail("sizes needs 1 or " + std::to_string(k) + " values");
                s.part_sizes = v;
            } else if (key == "m") {
                s.target_m = std::stoull(val);
            } else if (key == "density") {
                s.density = std::stod(val);
            } else if (key == "plant") {
                s.plant = std::stoi(val);
            } else if (key == "seed") {
                s.seed = std::stoull(val);
            } else if (key == "power") {
                s.power = std::stod(val);
            } else if (key == "weighted") {
                s.weighted = val == "1" || val == "true";
            } else if (key == "skew") {  // skew=<node label>:<uniform|power|two>, repeatable
                auto c = val.find(':');
                if (c == std::string::npos) fail("skew=<node>:<kind>");
                int a = s.pattern.find(trim(val.substr(0, c)));
                if (a < 0) fail("unknown node in skew");
                std::string kind = trim(val.substr(c + 1));
                s.skew.resize(k, Skew::Uniform);
                if (kind == "uniform") s.skew[a] = Skew::Uniform;
                else if (kind == "power") s.skew[a] = Skew::PowerLaw;
                else if (kind == "two") s.skew[a] = Skew::TwoClass;
                else fail("unknown skew kind");
            } else if (key == "hub") {  // hub=<node label>:<p>/<q>
                auto c = val.find(':'), sl = val.find('/');
                if (c == std::string::npos || sl == std::string::npos) fail("hub=<node>:<p>/<q>");
                int a = s.pattern.find(trim(val.substr(0, c)));
                if (a < 0) fail("unknown node in hub");
                s.hub_exp.resize(k, Rational(1, 2));
                s.hub_exp[a] = Rational(std::stoll(val.substr(c + 1, sl - c - 1)), std::stoll(val.substr(sl + 1)));
            } else {
                fail("unknown key " + key);
            }
        } catch (const std::logic_error&) {
            fail("bad value for " + key);
        }
    }
    return s;
}

Pattern random_family_pattern(std::mt19937_64& rng, int max_a, int max_b, int max_g) {
    std::vector<PTriple> all;
    for (int a = 1; a <= max_a; ++a)
        for (int b = 0; b <= std::min(a, max_b); ++b)
            for (int g = 0; g <= max_g; ++g)
                if (in_p_prime({a, b, g})) all.push_back({a, b, g});
    const PTriple t = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
    Pattern p = patterns::p_triple(t.alpha, t.beta, t.gamma);
    std::vector<int> perm(p.n());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return p.permuted(perm);
}

Pattern random_stitched_pattern(std::mt19937_64& rng, int max_pieces) {
    const int pieces = std::uniform_int_distribution<int>(1, std::max(1, max_pieces))(rng);
    Pattern acc;
    for (int i = 0; i < pieces; ++i) {
        Pattern q = random_family_pattern(rng, 4, 3, 2);
        std::vector<int> id(q.n(), -1);
        if (i > 0) {
            bool at_edge = acc.m() > 0 && q.m() > 0 && std::uniform_int_distribution<int>(0, 1)(rng) == 1;
            if (at_edge) {
                auto e1 = acc.edges()[std::uniform_int_distribution<std::size_t>(0, acc.edges().size() - 1)(rng)];
                auto e2 = q.edges()[std::uniform_int_distribution<std::size_t>(0, q.edges().size() - 1)(rng)];
                if (std::uniform_int_distribution<int>(0, 1)(rng)) std::swap(e2.first, e2.second);
                id[e2.first] = e1.first;
                id[e2.second] = e1.second;
            } else {
                id[std::uniform_int_distribution<int>(0, q.n() - 1)(rng)] = std::uniform_int_distribution<int>(0, acc.n() - 1)(rng);
            }
        }
        for (int u = 0; u < q.n(); ++u)
            if (id[u] < 0) id[u] = acc.add_node("p" + std::to_string(i) + "_" + q.label(u));
        for (auto [u, v] : q.edges()) acc.add_edge(id[u], id[v]);
    }
    return acc;
}

}  // namespace subiso
