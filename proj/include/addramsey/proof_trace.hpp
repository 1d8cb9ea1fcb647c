#pragma once

#include "addramsey/bounds.hpp"
#include "addramsey/common.hpp"
#include "addramsey/cube.hpp"
#include "addramsey/edge_coloring.hpp"
#include "addramsey/grid.hpp"
#include "addramsey/tree.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace addramsey {

/// Given a grid coloring and a size k, a monochromatic k x k homothetic grid
/// or nullopt. Answers are re-checked before use.
using GwOracle = std::function<std::optional<GridWitness>(const GridColoring&, int k)>;

/// find_mono_grid.
GwOracle exhaustive_gw_oracle(const SearchOptions& options = {});

/// Stage i of the grid tower. The product grid has side `half`; its point
/// (a, b) stands for the value pair (R + D a, C + D b) of every current grid,
/// with D = scale_in. The oracle's answer is (x, y, step) of side `size`.
struct TowerStage {
    int half = 0;
    int x = 0;
    int y = 0;
    int step = 0;
    int size = 0;
    std::int64_t scale_in = 1;  // d_0 ... d_{i-1}
    std::int64_t scale_out = 1; // d_0 ... d_i
    int product_colors = 0;
};

/// The grid G_s of tree node s: its monochromatic subgrid sits at
/// (X, Y) = (R + D x, C + D y) with color `color`.
struct TowerNode {
    TreeWord word;
    std::int64_t row_base = 0; // R
    std::int64_t col_base = 0; // C
    std::int64_t X = 0;
    std::int64_t Y = 0;
    int color = 0;
};

struct GridTower {
    int half_n = 0;                 // S, with n = 2S
    std::vector<TowerStage> stages; // stage i colors the nodes of depth i
    std::vector<TowerNode> nodes;   // BFS order over the binary tree
};

struct CubeTrace {
    GridTower tower;
    std::optional<TreeEmbedding> embedding; // aligned, into the node-color tree
    std::int64_t a = 0;
    std::vector<std::int64_t> b; // b_1 .. b_k
};

/// The node colors of the tower as a coloring of the binary tree.
TreeColoring tower_tree_coloring(const GridTower& tower, int colors);

enum class ExtractOutcome { Found, FailedAtDepth, VerificationFailed };

const char* to_string(ExtractOutcome outcome) noexcept;

struct ExtractResult {
    ExtractOutcome outcome = ExtractOutcome::FailedAtDepth;
    int failed_depth = -1;
    std::string detail;
    std::optional<HilbertCube> cube;
    int color = 0;
    CubeTrace trace;
};

struct ExtractOptions {
    GwOracle oracle;    // empty: exhaustive_gw_oracle()
    int max_depth = 8;  // stages beyond this report FailedAtDepth
    /// Called on the finished trace before verification (mutation testing).
    std::function<void(CubeTrace&)> tamper;
};

/// Toy run of the grid-tower construction: quadrant lift, then at each stage
/// the largest monochromatic subgrid the oracle finds in the top-left quadrant
/// of the product coloring, until the node colors contain an aligned
/// monochromatic embedding of height k - 1. The cube is
/// a = X(phi(1^(k-1))), b_l = Y(phi(s)) - X(phi(s)) for s on level l - 1,
/// and is only reported after verify_trace passes. Requires k >= 2, n even.
ExtractResult extract_cube(const EdgeColoring& chi, int k, const ExtractOptions& options = {});

/// Re-derives every claim of a trace from chi: tower positions and scales,
/// X(s.2) - X(s.1) = Y(s) - X(s), monochromatic subgrids, the embedding, the
/// sibling-descendant points, the cube form, and monochromaticity of the
/// cube. Returns the first failure, or nullopt.
std::optional<std::string> verify_trace(const EdgeColoring& chi, int k, const CubeTrace& trace);

/// The r = k = 2 argument: one monochromatic grid in the quadrant lift; a
/// square whose two final edges share its color gives the cube directly,
/// otherwise the difference coloring phi must contain (i, j, i+j, j-i), and
/// the cube sits on side A (x) or side B (y) accordingly.
struct TwoColorResult {
    ExtractOutcome outcome = ExtractOutcome::FailedAtDepth;
    std::string detail;
    std::optional<HilbertCube> cube;
    int color = 0;
    GridWitness grid;
    int grid_size = 0;
    bool direct = false;
    std::vector<std::int64_t> helper; // (i, j, i+j, j-i) when used
    char side = 0;                    // 'A' or 'B' when the helper is used
};

TwoColorResult extract_cube_two_colors(const EdgeColoring& chi, const GwOracle& oracle = {});

/// GW(side, colors) bound used by the recurrences.
using GwBound = std::function<BoundValue(const BoundValue& side, const BoundValue& colors)>;

/// gw(s, r) = s.
BoundValue gw_stub_identity(const BoundValue& side, const BoundValue& colors);
/// gw(s, r) = s * r.
BoundValue gw_stub_scaled(const BoundValue& side, const BoundValue& colors);

/// values[j] = V_j for j = 0..depth, V_depth = 2, V_j = 2 gw(V_{j+1}, r^(2^j)).
/// Only enumerated when the depth is exact and at most max_terms.
struct BoundSequence {
    BoundValue depth;
    bool enumerated = false;
    std::vector<BoundValue> values;
    std::string note;
};

BoundSequence bound_tower(const BoundValue& depth, int r, const GwBound& gw, const BoundOptions& options = {});

/// Depth f(2, r); n(r, 2) <= S_0.
BoundSequence s_bound(int r, const GwBound& gw, const BoundOptions& options = {});

/// Depth E(2, r, k - 1); n(r, k) <= T_0. Requires k >= 2.
BoundSequence t_bound(int r, int k, const GwBound& gw, const BoundOptions& options = {});

} // namespace addramsey
