#include "../oracles.hpp"
#include "addramsey/io.hpp"
#include "addramsey/proof_trace.hpp"

#include <doctest.h>

using namespace addramsey;

namespace {

// the identities, re-derived from the raw trace
void check_identities(const CubeTrace& t, int k)
{
    const auto& nodes = t.tower.nodes;
    for (std::size_t v = 0; 2 * v + 2 < nodes.size(); ++v)
        CHECK(nodes[2 * v + 2].X - nodes[2 * v + 1].X == nodes[v].Y - nodes[v].X);
    std::int64_t scale = 1;
    for (const auto& s : t.tower.stages) {
        scale *= s.step;
        CHECK(s.scale_out == scale);
    }
    REQUIRE(t.embedding);
    const TreeShape src(2, k - 1);
    for (int l = 1; l <= k; ++l)
        for (std::size_t s = src.level_offset(l - 1); s < src.level_offset(l - 1) + src.level_size(l - 1); ++s) {
            const auto& node = nodes[t.embedding->image[s]];
            CHECK(t.b[static_cast<std::size_t>(l - 1)] == node.Y - node.X);
        }
    CHECK(t.a == nodes[t.embedding->image[src.level_offset(k - 1)]].X);
}

} // namespace

TEST_SUITE("proof-trace")
{
    TEST_CASE("constant K_16, k = 2")
    {
        const auto chi = EdgeColoring::constant(16, 2);
        const auto r = extract_cube(chi, 2);
        REQUIRE(r.outcome == ExtractOutcome::Found);
        REQUIRE(r.cube);
        CHECK(*r.cube == HilbertCube(1, {4, 8}));
        CHECK(oracle::mono_set(chi, r.cube->elements()));
        check_identities(r.trace, 2);
        CHECK_FALSE(verify_trace(chi, 2, r.trace));
    }

    TEST_CASE("constant colorings for k = 3")
    {
        const auto chi = EdgeColoring::constant(64, 1);
        const auto r = extract_cube(chi, 3);
        REQUIRE(r.outcome == ExtractOutcome::Found);
        CHECK(r.cube->is_proper());
        check_identities(r.trace, 3);
    }

    TEST_CASE("non-constant colorings")
    {
        const auto chi = EdgeColoring::from_rule(128, 2, [](int u, int v) { return 1 + (v > 2 * u); });
        const auto r = extract_cube(chi, 2);
        REQUIRE(r.outcome == ExtractOutcome::Found);
        CHECK(oracle::mono_set(chi, r.cube->elements()));
        check_identities(r.trace, 2);
        const auto par = EdgeColoring::from_rule(64, 2, [](int u, int v) { return 1 + (u + v) % 2; });
        const auto q = extract_cube(par, 2);
        REQUIRE(q.outcome == ExtractOutcome::Found);
        CHECK(oracle::mono_set(par, q.cube->elements()));
    }

    TEST_CASE("failures are reported, not guessed")
    {
        std::mt19937_64 rng(5);
        const auto chi = oracle::random_edge_coloring(rng, 16, 3);
        const auto r = extract_cube(chi, 3);
        if (r.outcome == ExtractOutcome::Found)
            CHECK(oracle::mono_set(chi, r.cube->elements()));
        else
            CHECK(r.outcome == ExtractOutcome::FailedAtDepth);
        CHECK(extract_cube(EdgeColoring::constant(4, 1), 4).outcome == ExtractOutcome::FailedAtDepth);
        CHECK_THROWS_AS(extract_cube(EdgeColoring::constant(7, 1), 2), std::invalid_argument);
        CHECK_THROWS_AS(extract_cube(EdgeColoring::constant(8, 1), 1), std::invalid_argument);
    }

    TEST_CASE("tampering flips the outcome")
    {
        const auto chi = EdgeColoring::constant(16, 2);
        for (int which = 0; which < 4; ++which) {
            ExtractOptions opts;
            opts.tamper = [which](CubeTrace& t) {
                switch (which) {
                case 0: t.b[0] += 1; break;
                case 1: t.a += 1; break;
                case 2: t.tower.nodes[1].color = 2; break;
                default: t.tower.nodes[2].X += 1; break;
                }
            };
            const auto r = extract_cube(chi, 2, opts);
            CHECK(r.outcome == ExtractOutcome::VerificationFailed);
            CHECK_FALSE(r.cube);
        }
        // one recolored input edge inside a reported subgrid
        const auto r = extract_cube(chi, 2);
        const auto& root = r.trace.tower.nodes[0];
        const auto other = chi.recolored(static_cast<int>(root.X), static_cast<int>(root.Y), 2);
        REQUIRE(verify_trace(other, 2, r.trace));
    }

    TEST_CASE("a lying oracle is caught")
    {
        ExtractOptions opts;
        opts.oracle = [](const GridColoring&, int k) -> std::optional<GridWitness> {
            if (k < 2)
                return std::nullopt;
            return GridWitness{1, 1, 1, 1};
        };
        std::vector<std::uint8_t> c(EdgeColoring::pair_count(16), 1);
        c[EdgeColoring::index(16, 1, 10)] = 2;
        CHECK_THROWS_AS(extract_cube(EdgeColoring(16, 2, c), 2, opts), std::logic_error);
    }

    TEST_CASE("two-color construction")
    {
        std::mt19937_64 rng(9);
        int found = 0;
        for (int trial = 0; trial < 20; ++trial) {
            const auto chi = oracle::random_edge_coloring(rng, 24, 2);
            const auto r = extract_cube_two_colors(chi);
            if (r.outcome == ExtractOutcome::Found) {
                ++found;
                CHECK(r.cube->is_proper());
                CHECK(oracle::mono_set(chi, r.cube->elements()));
                if (!r.direct) {
                    CHECK(r.helper.size() == 4);
                    CHECK((r.side == 'A' || r.side == 'B'));
                }
            } else {
                CHECK(r.outcome == ExtractOutcome::FailedAtDepth);
            }
        }
        CHECK(found > 0);
    }

    TEST_CASE("bound recurrences")
    {
        const auto s = s_bound(2, gw_stub_identity);
        REQUIRE(s.enumerated);
        CHECK(s.depth.exact() == 4);
        CHECK(s.values.back() == BoundValue(2));
        CHECK(s.values.front().exact() == 32);
        const auto t = t_bound(2, 2, gw_stub_identity);
        CHECK(t.values == s.values);
        const auto scaled = s_bound(2, gw_stub_scaled);
        // V_j = 2 * V_{j+1} * 2^(2^j), V_4 = 2
        BigInt v = 2;
        for (int j = 3; j >= 0; --j)
            v = 2 * v * (BigInt(1) << (1 << j));
        CHECK(scaled.values.front().exact() == v);
        CHECK(s_bound(1, gw_stub_identity).values.size() == 2);
        const auto deep = t_bound(2, 3, gw_stub_identity);
        CHECK_FALSE(deep.enumerated);
        CHECK_FALSE(deep.note.empty());
    }

    TEST_CASE("trace export")
    {
        const auto r = extract_cube(EdgeColoring::constant(16, 2), 2);
        const auto j = to_json(r.trace);
        CHECK(j["S"] == 8);
        CHECK(j["stages"].size() == r.trace.tower.stages.size());
        CHECK(j["grids"][0]["word"] == "λ");
        CHECK(j["a"] == 1);
        CHECK(j["b"] == Json::array({8, 4}));
    }
}
