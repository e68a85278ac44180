#include <random>
#include <set>

#include "doctest.h"
#include "subiso/embeddings.hpp"
#include "subiso/oracle.hpp"

using namespace subiso;

namespace {

void check_ratio(const LowerBound& lb, int X) {
    INFO(lb.how << "\n" << lb.pattern.serialize());
    REQUIRE(embedding_error(lb.pattern, lb.psi) == "");
    CHECK(lb.psi.k() == 2 * X - 1);
    CHECK(weak_edge_depth(lb.pattern, lb.psi) == X);
}

// Weighted k-partite instance with edge probability p between different parts.
HostGraph clique_instance(int k, int per_part, double p, std::mt19937_64& rng) {
    HostBuilder B(patterns::complete(k));
    B.set_weighted(true);
    std::vector<std::vector<int>> parts(k);
    for (int x = 0; x < k; ++x)
        for (int i = 0; i < per_part; ++i) parts[x].push_back(B.add_node(x, "v" + std::to_string(x) + "_" + std::to_string(i)));
    std::bernoulli_distribution coin(p);
    std::uniform_int_distribution<Weight> w(1, 50);
    for (int x = 0; x < k; ++x)
        for (int y = x + 1; y < k; ++y)
            for (int u : parts[x])
                for (int v : parts[y])
                    if (coin(rng)) B.add_edge(u, v, w(rng));
    return B.build();
}

}  // namespace

TEST_CASE("validation and weak edge depth examples") {
    Pattern gog = patterns::goggles();
    CliqueEmbedding g = goggles_embedding();
    CHECK(validate(gog, g));
    CHECK(weak_edge_depth(gog, g) == 2);

    Pattern p4 = patterns::path(3);
    CHECK_FALSE(validate(p4, CliqueEmbedding{{{0}, {3}}}));
    CHECK_FALSE(validate(p4, CliqueEmbedding{{{0, 2}}}));
    CHECK_THROWS_AS(weak_edge_depth(p4, CliqueEmbedding{{{0}, {3}}}), InputError);

    CHECK(weak_edge_depth(patterns::edge(), CliqueEmbedding{{{0}, {0}, {0}}}) == 3);
    CHECK(weak_edge_depth(patterns::complete(4), CliqueEmbedding{{{0}, {1}, {2}, {3}}}) == 2);
}

TEST_CASE("two paths on a cycle touch when their lengths are long enough") {
    for (int k = 3; k <= 12; ++k) {
        Pattern C = patterns::cycle(k);
        for (int l1 = 0; l1 < k; ++l1)
            for (int l2 = std::max(0, k - 3 - l1); l2 < k; ++l2)
                for (int s1 = 0; s1 < k; ++s1)
                    for (int s2 = 0; s2 < k; ++s2) {
                        std::vector<int> x, y;
                        for (int t = 0; t <= l1; ++t) x.push_back((s1 + t) % k);
                        for (int t = 0; t <= l2; ++t) y.push_back((s2 + t) % k);
                        REQUIRE(images_touch(C, x, y));
                    }
    }
}

TEST_CASE("long path with length-2 paths") {
    check_ratio(build_embedding_pa2c(9, 2), 8);
    check_ratio(build_embedding_pa2c(3, 2), 5);
    check_ratio(build_embedding_pa2c(5, 3), 8);
    for (int a = 3; a <= 9; a += 2)
        for (int g = 2; g <= 4; ++g) check_ratio(build_embedding_pa2c(a, g), 2 * g + (a - 1) / 2);
    CHECK_THROWS_AS(build_embedding_pa2c(4, 2), InputError);
    CHECK_THROWS_AS(build_embedding_pa2c(5, 1), InputError);
}

TEST_CASE("three parameterized constructions hit their value") {
    using C = PabcConstruction;
    int built = 0;
    for (int a = 3; a <= 12; ++a)
        for (int b = 3; b <= std::min(a, 7); ++b)
            for (int g = 1; g <= 3; ++g)
                for (C which : {C::OddWide, C::OddNarrow, C::Even}) {
                    const bool odd = (a + b) % 2 == 1;
                    const bool applies = which == C::Even ? !odd : odd && (which == C::OddNarrow || b >= 5);
                    if (!applies) {
                        CHECK_THROWS_AS(build_pabc_construction(which, a, b, g), InputError);
                        continue;
                    }
                    Rational X = pabc_construction_value(which, a, b, g);
                    REQUIRE(X.denominator() == 1);
                    check_ratio(build_pabc_construction(which, a, b, g), static_cast<int>(X.numerator()));
                    ++built;
                }
    CHECK(built > 100);
    // the worked figure instance
    LowerBound fig = build_pabc_construction(C::OddWide, 12, 7, 2);
    check_ratio(fig, static_cast<int>(pabc_construction_value(C::OddWide, 12, 7, 2).numerator()));
}

TEST_CASE("dispatch reaches two minus one over the savings value") {
    check_ratio(build_embedding_pabc(3, 3, 1), 6);
    check_ratio(build_embedding_pabc(4, 4, 1), 9);
    std::set<int> cases;
    for (int a = 1; a <= 9; ++a)
        for (int b = 0; b <= std::min(a, 7); ++b)
            for (int g = 0; g <= 3; ++g) {
                PTriple t{a, b, g};
                if (!in_p_prime(t) || b < 2 || (b == 2 && (a == 2 || g == 0))) continue;  // cycles and bicliques: search only
                LowerBound lb = build_embedding_for_triple(t);
                INFO("P(" << a << "," << b << "," << g << ")");
                check_ratio(lb, savings(t));
            }
    // the cases that shift beta need 2 beta > alpha + 4 gamma + 6, so a longer alpha range
    for (int a = 3; a <= 16; ++a)
        for (int b = 3; b <= a; ++b)
            for (int g = 1; g <= 3; ++g) {
                PTriple t{a, b, g};
                cases.insert(savings_case(t));
                INFO("P(" << a << "," << b << "," << g << ")");
                check_ratio(build_embedding_pabc(a, b, g), savings(t));
            }
    CHECK(cases.size() == 8);
}

TEST_CASE("shifted constructions live in the requested pattern") {
    LowerBound lb = build_embedding_pabc(8, 8, 1);  // savings case with a shifted beta
    CHECK(lb.pattern.serialize() == patterns::p_triple(8, 8, 1).serialize());
    CHECK(lb.how.find(" on P(") != std::string::npos);
}

TEST_CASE("exhaustive search") {
    CHECK(clemb_search(patterns::edge(), 3).ratio >= Rational(1));
    CHECK(clemb_search(patterns::complete(4), 4).ratio >= Rational(2));
    CHECK(clemb_search(patterns::goggles(), 4).ratio >= Rational(2));
    CHECK_THROWS_AS(clemb_search(patterns::cycle(9), 4), InputError);
    CHECK_THROWS_AS(clemb_search(patterns::cycle(4), 11), InputError);
    auto r = clemb_search(patterns::cycle(5), 5);
    CHECK(validate(patterns::cycle(5), r.best));
    CHECK(Rational(r.best.k(), weak_edge_depth(patterns::cycle(5), r.best)) == r.ratio);
}

TEST_CASE("cycles and two-hub bicliques by search") {
    for (int k = 3; k <= 8; ++k) {
        const int half = (k + 1) / 2;
        auto r = clemb_search(patterns::cycle(k), std::min(10, 2 * half - 1));
        INFO("C" << k);
        CHECK(r.ratio >= Rational(2 * half - 1, half));
    }
    for (int k = 2; k <= 5; ++k) {
        auto r = clemb_search(patterns::biclique2(k), 2 * k - 1);
        INFO("K_{2," << k << "}");
        CHECK(r.ratio >= Rational(2 * k - 1, k));
    }
    for (PTriple t : {PTriple{2, 2, 0}, PTriple{3, 2, 0}, PTriple{4, 2, 0}, PTriple{2, 2, 1}, PTriple{2, 2, 2}})
        check_ratio(build_embedding_for_triple(t), savings(t));
}

TEST_CASE("search never drops under an induced minor") {
    // (H, minor) pairs where the minor comes from contracting one edge or deleting a node
    std::vector<std::pair<Pattern, Pattern>> pairs = {
        {patterns::cycle(6), patterns::cycle(5)},
        {patterns::cycle(5), patterns::cycle(4)},
        {patterns::goggles(), patterns::cycle(4)},
        {patterns::biclique2(3), patterns::cycle(4)},
        {patterns::p_triple(3, 3, 1), patterns::p_triple(3, 2, 1)},
        {patterns::complete(4), patterns::cycle(3)},
    };
    for (auto& [H, Hp] : pairs) CHECK(clemb_search(H, 6).ratio >= clemb_search(Hp, 6).ratio);
}

TEST_CASE("lifting through an induced minor keeps validity and depth") {
    // C5 is C6 with one edge contracted
    Pattern C6 = patterns::cycle(6), C5 = patterns::cycle(5);
    auto r = clemb_search(C5, 5);
    CliqueEmbedding up = lift_embedding(C6, C5, {{0}, {1}, {2}, {3}, {4, 5}}, r.best);
    CHECK(validate(C6, up));
    CHECK(weak_edge_depth(C6, up) <= weak_edge_depth(C5, r.best));
}

TEST_CASE("clique reduction is a weight-preserving bijection") {
    std::mt19937_64 rng(21);
    struct Case {
        Pattern H;
        CliqueEmbedding psi;
    };
    std::vector<Case> cases = {
        {patterns::edge(), CliqueEmbedding{{{0}, {0}, {0}}}},
        {patterns::cycle(3), CliqueEmbedding{{{0}, {1}, {2}}}},
        {patterns::complete(4), CliqueEmbedding{{{0}, {1}, {2}, {3}}}},
        {patterns::goggles(), goggles_embedding()},
        {patterns::cycle(5), clemb_search(patterns::cycle(5), 5).best},
    };
    OracleOptions unlimited;
    unlimited.max_product = 0;
    for (const auto& c : cases) {
        const int k = c.psi.k();
        if (k > 4) continue;
        for (int rep = 0; rep < 20; ++rep) {
            const int n = 2 + static_cast<int>(rng() % 5);
            HostGraph inst = clique_instance(k, n, 0.3 + 0.1 * (rep % 6), rng);
            CliqueReduction R = reduce_clique_to_host(c.H, c.psi, inst);
            auto cliques = brute_list(inst, unlimited);
            auto subs = brute_list(R.host, unlimited);
            REQUIRE(cliques.size() == subs.size());
            std::set<Tuple> image;
            for (const Tuple& q : cliques) {
                Tuple t = R.forward(q);
                CHECK(is_h_subgraph(c.H, R.host, t));
                CHECK(tuple_weight(R.host, t) == tuple_weight(inst, q));
                CHECK(R.backward(t) == q);
                image.insert(t);
            }
            CHECK(image == std::set<Tuple>(subs.begin(), subs.end()));
            auto a = brute_min_weight(inst, unlimited), b = brute_min_weight(R.host, unlimited);
            REQUIRE(a.has_value() == b.has_value());
            if (a) CHECK(a->weight == b->weight);
        }
    }
}

TEST_CASE("clique reduction of an instance without cliques") {
    HostBuilder B(patterns::complete(3));
    int u = B.add_node(0, "u"), v = B.add_node(1, "v"), w = B.add_node(2, "w");
    B.add_edge(u, v, 0);
    B.add_edge(v, w, 0);
    HostGraph inst = B.build();
    CliqueReduction R = reduce_clique_to_host(patterns::cycle(3), CliqueEmbedding{{{0}, {1}, {2}}}, inst);
    CHECK(brute_list(R.host).empty());
    CHECK_THROWS_AS(reduce_clique_to_host(patterns::path(3), CliqueEmbedding{{{0}, {3}, {1}}}, inst), InputError);
}
