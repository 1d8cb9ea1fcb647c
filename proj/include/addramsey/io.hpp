#pragma once

#include "addramsey/avoiders.hpp"
#include "addramsey/bounds.hpp"
#include "addramsey/cube.hpp"
#include "addramsey/edge_coloring.hpp"
#include "addramsey/grid.hpp"
#include "addramsey/proof_trace.hpp"
#include "addramsey/rado.hpp"
#include "addramsey/tree.hpp"

#include <json.hpp>

#include <string>

namespace addramsey {

using Json = nlohmann::ordered_json;

// Certificates. Readers throw std::invalid_argument on any malformed field.

Json to_json(const EdgeColoring& c);  // { "n", "r", "colors" }, upper triangle row-major
Json to_json(const GridColoring& c);  // { "S", "r", "colors" }, row-major
Json to_json(const VertexColoring& c); // { "n", "c", "colors" }
Json to_json(const TreeColoring& c);  // { "k", "n", "c", "colors" }, BFS order

EdgeColoring edge_coloring_from_json(const Json& j);
GridColoring grid_coloring_from_json(const Json& j);
VertexColoring vertex_coloring_from_json(const Json& j);
TreeColoring tree_coloring_from_json(const Json& j);

// Results.

/// { "property", "range", "status": "pass" | "fail", "witness", "checked" }
Json to_json(const VerificationReport& r);
Json to_json(const HilbertCube& cube);     // { "a", "b", "elements" }
Json to_json(const GridWitness& w);        // { "x", "y", "d", "color" }
Json to_json(const StarWitness& s);
Json to_json(const TreeEmbedding& e);
/// Exact values as decimal strings; symbolic ones as { "expression", "log2" }.
Json to_json(const BoundValue& v);
Json to_json(const CubeTrace& t);          // stages, grid tree, embedding, (a, b)

/// Parses a file; throws std::invalid_argument naming the path on failure.
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

} // namespace addramsey
