#include "addramsey/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace addramsey {

namespace {

    int int_field(const Json& j, const char* key, int lo)
    {
        if (!j.is_object() || !j.contains(key))
            throw std::invalid_argument(std::string("missing field \"") + key + "\"");
        const auto& v = j.at(key);
        if (!v.is_number_integer())
            throw std::invalid_argument(std::string("field \"") + key + "\" must be an integer");
        const auto x = v.get<std::int64_t>();
        if (x < lo || x > (1 << 26))
            throw std::invalid_argument(std::string("field \"") + key + "\" out of range");
        return static_cast<int>(x);
    }

    std::vector<std::uint8_t> colors_field(const Json& j, std::size_t expected, int max_color)
    {
        if (!j.contains("colors") || !j.at("colors").is_array())
            throw std::invalid_argument("missing array \"colors\"");
        const auto& a = j.at("colors");
        if (a.size() != expected)
            throw std::invalid_argument("\"colors\" has " + std::to_string(a.size()) + " entries, expected "
                                        + std::to_string(expected));
        std::vector<std::uint8_t> out;
        out.reserve(expected);
        for (const auto& v : a) {
            if (!v.is_number_integer())
                throw std::invalid_argument("\"colors\" entries must be integers");
            const auto c = v.get<std::int64_t>();
            if (c < 1 || c > max_color)
                throw std::invalid_argument("color " + std::to_string(c) + " outside 1.." + std::to_string(max_color));
            out.push_back(static_cast<std::uint8_t>(c));
        }
        return out;
    }

    template <class Range>
    Json array_of(const Range& r)
    {
        Json a = Json::array();
        for (const auto& v : r)
            a.push_back(static_cast<std::int64_t>(v));
        return a;
    }

} // namespace

Json to_json(const EdgeColoring& c)
{
    return {{"n", c.n()}, {"r", c.r()}, {"colors", array_of(c.colors())}};
}

Json to_json(const GridColoring& c)
{
    return {{"S", c.side()}, {"r", c.r()}, {"colors", array_of(c.colors())}};
}

Json to_json(const VertexColoring& c)
{
    return {{"n", c.n()}, {"c", c.c()}, {"colors", array_of(c.colors())}};
}

Json to_json(const TreeColoring& c)
{
    return {{"k", c.k()}, {"n", c.height()}, {"c", c.c()}, {"colors", array_of(c.colors())}};
}

EdgeColoring edge_coloring_from_json(const Json& j)
{
    const int n = int_field(j, "n", 0);
    const int r = int_field(j, "r", 1);
    if (r > 255)
        throw std::invalid_argument("at most 255 colors");
    return EdgeColoring(n, r, colors_field(j, EdgeColoring::pair_count(n), r));
}

GridColoring grid_coloring_from_json(const Json& j)
{
    const int s = int_field(j, "S", 0);
    const int r = int_field(j, "r", 1);
    if (r > 255 || s > 1 << 13)
        throw std::invalid_argument("grid too large");
    return GridColoring(s, r, colors_field(j, static_cast<std::size_t>(s) * static_cast<std::size_t>(s), r));
}

VertexColoring vertex_coloring_from_json(const Json& j)
{
    const int n = int_field(j, "n", 0);
    const int c = int_field(j, "c", 1);
    if (c > 255)
        throw std::invalid_argument("at most 255 colors");
    return VertexColoring(n, c, colors_field(j, static_cast<std::size_t>(n), c));
}

TreeColoring tree_coloring_from_json(const Json& j)
{
    const int k = int_field(j, "k", 1);
    const int n = int_field(j, "n", 0);
    const int c = int_field(j, "c", 1);
    if (c > 255)
        throw std::invalid_argument("at most 255 colors");
    const TreeShape shape(k, n);
    return TreeColoring(k, n, c, colors_field(j, shape.node_count(), c));
}

Json to_json(const VerificationReport& r)
{
    return {{"property", r.property},
            {"range", r.range},
            {"status", r.pass ? "pass" : "fail"},
            {"witness", array_of(r.witness)},
            {"checked", r.checked}};
}

Json to_json(const HilbertCube& cube)
{
    return {{"a", cube.base()}, {"b", array_of(cube.increments())}, {"elements", array_of(cube.elements())}};
}

Json to_json(const GridWitness& w)
{
    return {{"x", w.x}, {"y", w.y}, {"d", w.d}, {"color", w.color}};
}

Json to_json(const StarWitness& s)
{
    Json tails = Json::array();
    for (const auto& t : s.tails)
        tails.push_back(to_string(t));
    return {{"root", to_string(s.root)}, {"level", s.level}, {"tails", tails}, {"color", s.color}};
}

Json to_json(const TreeEmbedding& e)
{
    const TreeShape target(e.k, e.target_height);
    Json image = Json::array();
    for (auto v : e.image)
        image.push_back(to_string(target.word(v)));
    return {{"k", e.k},
            {"source_height", e.source_height},
            {"target_height", e.target_height},
            {"levels", array_of(e.levels)},
            {"image", image}};
}

Json to_json(const BoundValue& v)
{
    if (v.is_exact())
        return v.exact().str();
    std::ostringstream l2;
    l2 << v.magnitude().log2().to_string();
    return {{"expression", v.expression()}, {"log2", l2.str()}};
}

Json to_json(const CubeTrace& t)
{
    Json stages = Json::array();
    for (const auto& s : t.tower.stages)
        stages.push_back({{"half", s.half},
                          {"x", s.x},
                          {"y", s.y},
                          {"d", s.step},
                          {"size", s.size},
                          {"scale", s.scale_out},
                          {"product_colors", s.product_colors}});
    Json nodes = Json::array();
    for (const auto& n : t.tower.nodes)
        nodes.push_back({{"word", to_string(n.word)}, {"X", n.X}, {"Y", n.Y}, {"color", n.color}});
    Json out = {{"S", t.tower.half_n}, {"stages", stages}, {"grids", nodes}};
    out["embedding"] = t.embedding ? to_json(*t.embedding) : Json(nullptr);
    out["a"] = t.a;
    out["b"] = array_of(t.b);
    return out;
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << '\n';
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

} // namespace addramsey
