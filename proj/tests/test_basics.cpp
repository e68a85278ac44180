#include <boost/multiprecision/cpp_int.hpp>
#include <random>
#include <sstream>

#include "doctest.h"
#include "subiso/classifier.hpp"
#include "subiso/decomposition.hpp"
#include "subiso/degree.hpp"
#include "subiso/host.hpp"

using namespace subiso;

TEST_CASE("pattern text round trip") {
    Pattern p = patterns::p_triple(4, 3, 1);
    Pattern q = Pattern::parse_string(p.serialize());
    CHECK(q.n() == p.n());
    CHECK(q.edges() == p.edges());
    CHECK(q.labels() == p.labels());
}

TEST_CASE("pattern parse errors") {
    CHECK_THROWS_AS(Pattern::parse_string("node a\nnode a\n"), InputError);
    CHECK_THROWS_AS(Pattern::parse_string("node a\nedge a\n"), InputError);
    CHECK_THROWS_AS(Pattern::parse_string("node a\nedge a a\n"), InputError);
    CHECK_THROWS_AS(Pattern::parse_string("node a\nnode b\nedge a c\n"), InputError);
    CHECK_THROWS_AS(Pattern::parse_string("vertex a\n"), InputError);
    CHECK_NOTHROW(Pattern::parse_string("# comment\n\nnode a\nnode b\nedge a b\n"));
}

TEST_CASE("host loading") {
    Pattern H = patterns::path(2);  // v0 - v1 - v2
    auto G = load_host_string("node x v0\nnode y v1\nnode z v2\nnode w v0\nedge x y 3\nedge y z\nedge x z\n", H);
    CHECK(G.n() == 3);  // w is isolated and removed
    CHECK(G.m() == 2);
    CHECK(G.dropped_edges() == 1);  // x-z joins non-adjacent colors
    CHECK(G.weighted());
    int x = G.find_id("x"), y = G.find_id("y");
    CHECK(G.weight(x, y) == 3);
    CHECK(G.nbrs(y, 0).size() == 1);
    CHECK(G.nbrs(y, 2).size() == 1);
    CHECK(G.nbrs(x, 2).size() == 0);

    CHECK_THROWS_AS(load_host_string("node x v0\nnode x v1\n", H), InputError);
    CHECK_THROWS_AS(load_host_string("node x q9\n", H), InputError);
    CHECK_THROWS_AS(load_host_string("node x\n", H), InputError);
    CHECK_THROWS_AS(load_host_string("node x v0\nedge x y\n", H), InputError);
    CHECK_THROWS_AS(load_host_string("node x v0\nnode y v1\nedge x y abc\n", H), InputError);
}

TEST_CASE("weights that could overflow are rejected") {
    Pattern H = patterns::path(2);
    HostBuilder b(H);
    int u = b.add_node(0), v = b.add_node(1), w = b.add_node(2);
    b.add_edge(u, v, kInf / 2 + 1);
    b.add_edge(v, w, kInf / 2);
    CHECK_THROWS_AS(b.build(), OverflowError);
    HostBuilder ok(patterns::edge());
    ok.add_edge(ok.add_node(0), ok.add_node(1), kInf / 2);
    CHECK_NOTHROW(ok.build());
}

TEST_CASE("ceil_pow is exact") {
    for (std::uint64_t m = 1; m <= 300; ++m)
        for (int q = 1; q <= 6; ++q)
            for (int p = 0; p <= q; ++p) {
                std::uint64_t t = ceil_pow(m, Rational(p, q));
                auto pw = [](std::uint64_t b, int e) {
                    boost::multiprecision::cpp_int r = 1;
                    for (int i = 0; i < e; ++i) r *= b;
                    return r;
                };
                CHECK(pw(t, q) >= pw(m, p));
                if (t > 0) CHECK(pw(t - 1, q) < pw(m, p));
            }
}

TEST_CASE("degree classes partition nodes") {
    Pattern H = patterns::edge();
    HostBuilder b(H);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 40; ++i) b.add_node(i % 2);
    for (int i = 0; i < 200; ++i) {
        int u = 2 * (rng() % 20), v = 2 * (rng() % 20) + 1;
        b.add_edge(u, v);
    }
    HostGraph G = b.build();
    for (Rational f : {Rational(1, 2), Rational(1, 3), Rational(2, 5)}) {
        auto prof = degree_split(G, f);
        CHECK(prof.max_class == (f.denominator() + f.numerator() - 1) / f.numerator());
        for (int v = 0; v < G.n(); ++v) {
            int j = prof.cls[v];
            REQUIRE(j >= 1);
            REQUIRE(j <= prof.max_class);
            std::uint64_t d = G.degree(v);
            CHECK(d >= prof.bounds[j - 1]);
            if (j < prof.max_class) CHECK(d < prof.bounds[j]);
        }
    }
}

namespace {
Pattern random_connected(std::mt19937_64& rng, int n, double p) {
    while (true) {
        Pattern H(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (std::uniform_real_distribution<>(0, 1)(rng) < p) H.add_edge(u, v);
        if (H.connected()) return H;
    }
}
}  // namespace

TEST_CASE("decomposition agrees with brute force and ignores tie-breaks") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 60; ++it) {
        int n = 2 + static_cast<int>(rng() % 7);
        Pattern H = random_connected(rng, n, 0.35);
        auto d = decompose(H);
        CHECK(d == decompose_brute(H));
        for (int r = 0; r < 5; ++r) CHECK(decompose_randomized(H, rng) == d);
        for (auto& piece : d.pieces) CHECK(!find_clique_separator(H.induced(piece)));
    }
}

TEST_CASE("clique separators") {
    CHECK(!minimal_clique_separator(patterns::goggles()));
    Pattern H = patterns::path(3);
    auto c = minimal_clique_separator(H);
    REQUIRE(c);
    CHECK(*c == std::vector<int>{1});
    CHECK(is_clique_separator(H, *c));
    CHECK(!minimal_clique_separator(patterns::cycle(5)));
    CHECK(!is_clique_separator(patterns::cycle(5), {0, 2}));  // not a clique
}

TEST_CASE("canonical triples") {
    CHECK(*canonical_triple({1}) == PTriple{1, 0, 0});
    CHECK(*canonical_triple({1, 2}) == PTriple{2, 1, 0});
    CHECK(*canonical_triple({2, 3}) == PTriple{3, 2, 0});
    CHECK(*canonical_triple({2, 2, 2}) == PTriple{2, 2, 1});
    CHECK(*canonical_triple({2, 2, 5, 4}) == PTriple{5, 4, 2});
    CHECK(!canonical_triple({2, 3, 3, 3}));
    CHECK(!canonical_triple({1, 2, 2}));
    CHECK(*recognize_p_graph(patterns::cycle(7)) == std::vector<int>{2, 5});
}

TEST_CASE("savings: both forms agree and are positive integers") {
    for (int a = 2; a <= 30; ++a)
        for (int b = 2; b <= a; ++b)
            for (int g = 0; g <= 8; ++g) {
                PTriple t{a, b, g};
                if (!in_p_prime(t)) continue;
                CHECK_NOTHROW(savings_case(t));
                Rational v = savings_exact(t);
                CHECK(v == savings_alternative(t));
                CHECK(v.denominator() == 1);
                CHECK(v > 0);
            }
}

TEST_CASE("classifier landmarks") {
    CHECK(classify(patterns::star(4)).k == 1);
    CHECK(classify(patterns::path(5)).k == 1);
    CHECK(classify(patterns::complete(3)).k == 2);
    for (int k = 3; k <= 12; ++k) CHECK(classify(patterns::cycle(k)).k == (k + 1) / 2);
    for (int k = 2; k <= 8; ++k) CHECK(classify(patterns::biclique2(k)).k == k);
    CHECK(classify(patterns::p_graph({9, 2, 2})).k == 8);
    auto hard = classify(patterns::p_graph({3, 3, 3}));
    CHECK(!hard.subquadratic);
    CHECK(hard.hard_witness);
    CHECK(!classify(patterns::complete(4)).subquadratic);
}
