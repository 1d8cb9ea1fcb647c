#include "addramsey/io.hpp"

#include <doctest.h>

using namespace addramsey;

TEST_SUITE("io")
{
    TEST_CASE("certificate round trips")
    {
        const auto e = EdgeColoring::from_rule(6, 3, [](int u, int v) { return 1 + (u + 2 * v) % 3; });
        CHECK(edge_coloring_from_json(to_json(e)) == e);
        const GridColoring g(2, 2, {1, 2, 2, 1});
        CHECK(grid_coloring_from_json(to_json(g)) == g);
        const VertexColoring v(3, 2, {1, 2, 1});
        CHECK(vertex_coloring_from_json(to_json(v)) == v);
        const TreeColoring t(2, 1, 2, {1, 2, 1});
        CHECK(tree_coloring_from_json(to_json(t)) == t);
        CHECK(to_json(g)["S"] == 2);
        CHECK(to_json(t)["n"] == 1);
    }

    TEST_CASE("malformed certificates")
    {
        CHECK_THROWS_AS(edge_coloring_from_json(Json::parse(R"({"n":3,"r":2,"colors":[1,2]})")), std::invalid_argument);
        CHECK_THROWS_AS(edge_coloring_from_json(Json::parse(R"({"n":3,"r":2,"colors":[1,2,3]})")), std::invalid_argument);
        CHECK_THROWS_AS(edge_coloring_from_json(Json::parse(R"({"r":2,"colors":[]})")), std::invalid_argument);
        CHECK_THROWS_AS(grid_coloring_from_json(Json::parse(R"({"S":"2","r":2,"colors":[1,1,1,1]})")),
                        std::invalid_argument);
        CHECK_THROWS_AS(tree_coloring_from_json(Json::parse(R"({"k":2,"n":1,"c":2,"colors":[1,1]})")),
                        std::invalid_argument);
        CHECK_THROWS_AS(read_json_file("/nonexistent/x.json"), std::invalid_argument);
    }

    TEST_CASE("reports and bounds")
    {
        VerificationReport r;
        r.property = "ratio(1,2)";
        r.range = 10;
        r.pass = false;
        r.witness = {1, 3, 1, 2};
        const auto j = to_json(r);
        CHECK(j["status"] == "fail");
        CHECK(j["witness"].size() == 4);
        CHECK(to_json(BoundValue(39)) == "39");
        CHECK(to_json(f_recurrence_bound(2, 5000)).is_object());
        CHECK(to_json(HilbertCube(1, {1, 2}))["elements"] == Json::array({1, 2, 3, 4}));
    }
}
