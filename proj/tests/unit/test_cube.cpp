#include "../oracles.hpp"
#include "addramsey/cnf.hpp"
#include "addramsey/cube.hpp"

#include <doctest.h>

using namespace addramsey;

TEST_SUITE("cube")
{
    TEST_CASE("cube elements and properness")
    {
        const HilbertCube h(1, {2, 1});
        CHECK(h.increments() == std::vector<std::int64_t>{1, 2});
        CHECK(h.elements() == std::vector<std::int64_t>{1, 2, 3, 4});
        CHECK(h.is_proper());
        CHECK(h.edges().size() == 6);
        CHECK(h.max_element() == 4);
        CHECK_FALSE(HilbertCube(1, {1, 1}).is_proper());
        CHECK_THROWS_AS(HilbertCube(1, {1, 1}).edges(), std::invalid_argument);
        CHECK(HilbertCube(1, {1, 2}) == HilbertCube(1, {2, 1}));
        CHECK(HilbertCube(1, {1, 2}) < HilbertCube(1, {1, 3}));
    }

    TEST_CASE("constant K_4 has H(1; 1, 2)")
    {
        const auto r = find_mono_cube(EdgeColoring::constant(4, 1), 2);
        REQUIRE(r.cube);
        CHECK(*r.cube == HilbertCube(1, {1, 2}));
        CHECK(r.color == 1);
        CHECK(find_mono_cube(EdgeColoring::constant(3, 1), 2).outcome == CubeOutcome::NotFound);
    }

    TEST_CASE("find_mono_cube matches the naive enumerator")
    {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 40; ++trial) {
            const int n = 4 + trial % 9, k = 1 + trial % 3, r = 1 + trial % 2;
            const auto c = oracle::random_edge_coloring(rng, n, r);
            const auto got = find_mono_cube(c, k);
            const auto want = oracle::mono_cube(c, k);
            REQUIRE(got.cube.has_value() == want.has_value());
            if (want)
                CHECK(*got.cube == HilbertCube(want->a, want->d));
        }
    }

    TEST_CASE("thread count does not change the witness")
    {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 10; ++trial) {
            const auto c = oracle::random_edge_coloring(rng, 14, 2);
            CHECK(find_mono_cube(c, 2, {1}).cube == find_mono_cube(c, 2, {4}).cube);
        }
    }

    TEST_CASE("proper cube enumeration count")
    {
        // brute force count of proper 2-cubes in [8]
        int want = 0;
        for (int a = 1; a <= 8; ++a)
            for (int d1 = 1; d1 <= 8; ++d1)
                for (int d2 = d1; a + d1 + d2 <= 8; ++d2)
                    want += d1 != d2;
        int got = 0;
        for_each_proper_cube(8, 2, [&](const HilbertCube&) {
            ++got;
            return true;
        });
        CHECK(got == want);
    }

    TEST_CASE("n(1, k) = 2^k and n(r, 1) = 2")
    {
        for (int k = 1; k <= 3; ++k) {
            const auto r = ramsey_cube_number(1, k, 16, 1'000'000);
            CHECK(r.kind == NumberKind::Exact);
            CHECK(r.value == (1 << k));
            REQUIRE(r.certificate);
            CHECK_FALSE(oracle::mono_cube(*r.certificate, k));
        }
        const auto r1 = ramsey_cube_number(3, 1, 8, 1000);
        CHECK(r1.kind == NumberKind::Exact);
        CHECK(r1.value == 2);
    }

    TEST_CASE("ramsey_cube_number reports budget exhaustion")
    {
        const auto r = ramsey_cube_number(2, 2, 30, 50);
        CHECK(r.kind == NumberKind::Unknown);
    }

    TEST_CASE("cnf encoding agrees with brute force")
    {
        for (int n = 2; n <= 5; ++n) {
            const Cnf cnf = export_cnf(1, 2, n);
            CHECK(cnf.num_vars == static_cast<int>(EdgeColoring::pair_count(n)));
            bool any = false;
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << cnf.num_vars) && !any; ++m) {
                std::vector<bool> model(static_cast<std::size_t>(cnf.num_vars) + 1);
                for (int v = 1; v <= cnf.num_vars; ++v)
                    model[static_cast<std::size_t>(v)] = m >> (v - 1) & 1;
                any = satisfies(cnf, model);
            }
            CHECK(any == (n < 4));
            CHECK((solve_cnf(cnf, 1'000'000).status == SatStatus::Satisfiable) == (n < 4));
        }
        const Cnf c = export_cnf(2, 2, 6);
        CHECK(c.num_vars == 30);
    }

    TEST_CASE("sat models decode to avoiding colorings")
    {
        const Cnf cnf = export_cnf(2, 2, 8);
        const auto res = solve_cnf(cnf, 10'000'000);
        REQUIRE(res.status == SatStatus::Satisfiable);
        CHECK(satisfies(cnf, res.model));
        std::vector<std::uint8_t> colors;
        for (int e = 1; e <= 28; ++e)
            colors.push_back(res.model[static_cast<std::size_t>(2 * (e - 1) + 1)] ? 1 : 2);
        CHECK_FALSE(oracle::mono_cube(EdgeColoring(8, 2, colors), 2));
    }

    TEST_CASE("dimacs round trip and malformed input")
    {
        const Cnf c = export_cnf(2, 2, 5);
        const Cnf back = Cnf::parse_dimacs("c comment\n" + c.to_dimacs());
        CHECK(back.num_vars == c.num_vars);
        CHECK(back.clauses == c.clauses);
        CHECK_THROWS_AS(Cnf::parse_dimacs("1 2 0\n"), std::invalid_argument);
        CHECK_THROWS_AS(Cnf::parse_dimacs("p cnf 1 1\n2 0\n"), std::invalid_argument);
        CHECK_THROWS_AS(Cnf::parse_dimacs("p cnf 2 2\n1 2 0\n"), std::invalid_argument);
    }

    TEST_CASE("edge coloring validation")
    {
        CHECK_THROWS_AS(EdgeColoring(4, 2, std::vector<std::uint8_t>(5, 1)), std::invalid_argument);
        CHECK_THROWS_AS(EdgeColoring(3, 2, std::vector<std::uint8_t>{1, 3, 1}), std::invalid_argument);
        const auto c = EdgeColoring::from_rule(5, 3, [](int u, int v) { return 1 + (u + v) % 3; });
        CHECK(c.color(2, 4) == c.color(4, 2));
        CHECK(c.color(2, 4) == 1 + 6 % 3);
        CHECK(EdgeColoring::index(5, 1, 2) == 0);
        CHECK(EdgeColoring::index(5, 2, 3) == 4);
        CHECK(EdgeColoring::index(5, 4, 5) == 9);
    }
}
