#include "addramsey/avoiders.hpp"
#include "addramsey/hypergraph.hpp"

#include <doctest.h>

#include <set>

using namespace addramsey;

namespace {

// every pair of edges {u, u + d1}, {v, v + d2} with a d1 = b d2
bool naive_ratio_ok(std::int64_t a, std::int64_t b, const EdgeColoring& c)
{
    const int n = c.n();
    for (int d1 = 1; d1 < n; ++d1)
        for (int d2 = 1; d2 < n; ++d2) {
            if (a * d1 != b * d2)
                continue;
            for (int u = 1; u + d1 <= n; ++u)
                for (int v = 1; v + d2 <= n; ++v)
                    if (c.color(u, u + d1) == c.color(v, v + d2))
                        return false;
        }
    return true;
}

bool naive_schur_ok(const std::vector<int>& a, int b, const EdgeColoring& c)
{
    const int n = c.n();
    // two-variable equations only
    for (int z = 1; z <= n; ++z)
        for (int x = 1; x <= n; ++x)
            for (int y = 1; y <= n; ++y) {
                if (a[0] * x + a[1] * y != b * z)
                    continue;
                if (x == y || x == z || y == z)
                    continue;
                if (c.color(x, z) == c.color(y, z))
                    return false;
            }
    return true;
}

} // namespace

TEST_SUITE("avoiders")
{
    TEST_CASE("valuation")
    {
        CHECK(valuation(12, 2) == 2);
        CHECK(valuation(7, 2) == 0);
        CHECK(valuation(54, 3) == 3);
        CHECK_THROWS_AS(valuation(0, 2), std::invalid_argument);
        CHECK_THROWS_AS(valuation(4, 1), std::invalid_argument);
    }

    TEST_CASE("ratio equation normalizes and rejects a == b")
    {
        const RatioEquation eq(4, 6);
        CHECK(eq.a() == 2);
        CHECK(eq.b() == 3);
        CHECK_THROWS_AS(RatioEquation(2, 2), std::invalid_argument);
        CHECK_THROWS_AS(RatioEquation(0, 2), std::invalid_argument);
    }

    TEST_CASE("3-AP avoider: no monochromatic {a, a+d}, {a, a+2d}")
    {
        const RatioEquation eq(1, 2);
        const auto c = ratio_avoider_coloring(eq, 128);
        for (int a = 1; a <= 128; ++a)
            for (int d = 1; a + 2 * d <= 128; ++d)
                CHECK_FALSE(c.color(a, a + d) == c.color(a, a + 2 * d));
    }

    TEST_CASE("ratio checker agrees with the naive check")
    {
        for (auto [a, b] : {std::pair{1, 2}, {2, 3}, {1, 3}, {3, 1}, {2, 5}}) {
            const RatioEquation eq(a, b);
            const auto rep = ratio_star_check(eq, 48);
            CHECK(rep.pass);
            CHECK(naive_ratio_ok(eq.a(), eq.b(), ratio_avoider_coloring(eq, 48)));
        }
    }

    TEST_CASE("ratio checker finds the least counterexample")
    {
        const auto rep = ratio_star_check(RatioEquation(1, 2), EdgeColoring::constant(6, 2));
        CHECK_FALSE(rep.pass);
        CHECK(rep.witness == std::vector<std::int64_t>{1, 3, 1, 2});
        CHECK(rep.property == "ratio(1,2)");
        // threads do not change the witness
        const auto c = EdgeColoring::from_rule(40, 2, [](int u, int v) { return 1 + ((u * v) % 5 == 0); });
        CHECK(ratio_star_check(RatioEquation(2, 3), c, {1}).witness
              == ratio_star_check(RatioEquation(2, 3), c, {3}).witness);
    }

    TEST_CASE("schur avoider against the naive check")
    {
        const SchurEquation s11({1, 1}, 1);
        CHECK(schur_star_check(s11, 60).pass);
        CHECK(naive_schur_ok({1, 1}, 1, schur_avoider_coloring(s11, 60)));
        const SchurEquation s23({2, 3}, 2);
        CHECK(schur_star_check(s23, 60).pass);
        CHECK(naive_schur_ok({2, 3}, 2, schur_avoider_coloring(s23, 60)));
        CHECK(schur_star_check(SchurEquation({1, 1, 1}, 1), 40).pass);
    }

    TEST_CASE("schur solution count for x + y = z")
    {
        // ordered pairs of distinct x, y with x + y = z <= n
        const int n = 30;
        std::uint64_t want = 0;
        for (int z = 1; z <= n; ++z)
            for (int x = 1; x < z; ++x)
                want += (z - x != x);
        CHECK(schur_star_check(SchurEquation({1, 1}, 1), n).checked == want);
    }

    TEST_CASE("schur witness on a constant coloring")
    {
        const auto rep = schur_star_check(SchurEquation({1, 1}, 1), EdgeColoring::constant(5, 2));
        CHECK_FALSE(rep.pass);
        CHECK(rep.witness == std::vector<std::int64_t>{1, 2, 3});
    }

    TEST_CASE("schur threshold color")
    {
        const SchurEquation eq({1, 1}, 1);
        CHECK(schur_avoider_color(eq, 1, 2) == PairColor::Red);
        CHECK(schur_avoider_color(eq, 3, 5) == PairColor::Blue);
        CHECK(schur_avoider_color(eq, 5, 3) == PairColor::Blue);
        CHECK_THROWS_AS(SchurEquation({1, 2}, 3), std::invalid_argument);
        CHECK_THROWS_AS(SchurEquation({1}, 1), std::invalid_argument);
    }
}

TEST_SUITE("hypergraph")
{
    TEST_CASE("primes and equation validation")
    {
        CHECK(is_prime(2));
        CHECK(is_prime(31));
        CHECK_FALSE(is_prime(1));
        CHECK_FALSE(is_prime(25));
        CHECK_THROWS_AS(ModularTripleEquation(1, 1, 1, 9), std::invalid_argument);
        CHECK_THROWS_AS(ModularTripleEquation(1, 7, 1, 7), std::invalid_argument);
    }

    TEST_CASE("edges and degrees match brute force")
    {
        for (int p : {5, 7, 11, 13})
            for (int a = 1; a < p; a += 2)
                for (int c = 1; c < p; c += 3) {
                    const ModularTripleEquation eq(a, 1, c, p);
                    const auto h = build_solution_hypergraph(eq);
                    std::set<std::set<int>> want;
                    for (int x = 0; x < p; ++x)
                        for (int y = 0; y < p; ++y)
                            for (int z = 0; z < p; ++z)
                                if (x != y && y != z && x != z && (a * x + y + c * z) % p == 0)
                                    want.insert({x, y, z});
                    CHECK(h.graph.edges().size() == want.size());
                    std::vector<int> degree(h.pairs.size(), 0);
                    for (const auto& s : want) {
                        const std::vector<int> v(s.begin(), s.end());
                        ++degree[static_cast<std::size_t>(h.pair_index(v[0], v[1]))];
                        ++degree[static_cast<std::size_t>(h.pair_index(v[0], v[2]))];
                        ++degree[static_cast<std::size_t>(h.pair_index(v[1], v[2]))];
                    }
                    CHECK(h.graph.max_degree() == *std::max_element(degree.begin(), degree.end()));
                    CHECK(h.graph.max_degree() <= 6);
                }
    }

    TEST_CASE("p = 7, (1, 1, 2)")
    {
        const auto h = build_solution_hypergraph(ModularTripleEquation(1, 1, 2, 7));
        CHECK(h.graph.edges().size() == 15);
        CHECK(h.graph.max_degree() == 3);
        const auto col = color_hypergraph(h.graph, 3, 1'000'000);
        REQUIRE(col.outcome == ColoringOutcome::Found);
        CHECK(is_proper_coloring(h.graph, col.colors));
    }

    TEST_CASE("coloring outcomes")
    {
        const Hypergraph3 tri(3, {{0, 1, 2}});
        CHECK(color_hypergraph(tri, 1, 100).outcome == ColoringOutcome::NotFound);
        CHECK(color_hypergraph(tri, 2, 100).outcome == ColoringOutcome::Found);
        const auto big = build_solution_hypergraph(ModularTripleEquation(1, 2, 3, 11));
        CHECK(color_hypergraph(big.graph, 2, 3).outcome == ColoringOutcome::BudgetExceeded);
        CHECK_FALSE(is_proper_coloring(tri, {1, 1, 1}));
        CHECK_THROWS_AS(Hypergraph3(3, {{0, 0, 1}}), std::invalid_argument);
    }

    TEST_CASE("edge coloring export keeps pair colors")
    {
        const auto h = build_solution_hypergraph(ModularTripleEquation(1, 2, 3, 11));
        const auto col = color_hypergraph(h.graph, 6, 1'000'000);
        REQUIRE(col.outcome == ColoringOutcome::Found);
        const auto e = to_edge_coloring(h, col.colors, 6);
        CHECK(e.n() == 11);
        for (const auto& [u, v] : h.pairs)
            CHECK(e.color(u + 1, v + 1) == col.colors[static_cast<std::size_t>(h.pair_index(u, v))]);
    }
}
