#include "addramsey/proof_trace.hpp"

#include "addramsey/rado.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace addramsey {

GwOracle exhaustive_gw_oracle(const SearchOptions& options)
{
    return [options](const GridColoring& g, int k) { return find_mono_grid(g, k, options); };
}

const char* to_string(ExtractOutcome outcome) noexcept
{
    switch (outcome) {
    case ExtractOutcome::Found: return "found";
    case ExtractOutcome::FailedAtDepth: return "failed-at-depth";
    case ExtractOutcome::VerificationFailed: return "verification-failed";
    }
    return "failed-at-depth";
}

TreeColoring tower_tree_coloring(const GridTower& tower, int colors)
{
    const int height = static_cast<int>(tower.stages.size()) - 1;
    if (height < 0)
        throw std::invalid_argument("tower_tree_coloring: empty tower");
    std::vector<std::uint8_t> c;
    c.reserve(tower.nodes.size());
    for (const auto& node : tower.nodes)
        c.push_back(static_cast<std::uint8_t>(node.color));
    return TreeColoring(2, height, colors, std::move(c));
}

namespace {

    std::size_t depth_offset(int depth) { return (std::size_t{1} << depth) - 1; }

    // Largest k x k monochromatic grid the oracle reports, checked.
    std::optional<std::pair<GridWitness, int>> largest_grid(const GwOracle& oracle, const GridColoring& g, int lo)
    {
        for (int k = g.side(); k >= lo; --k) {
            auto w = oracle(g, k);
            if (!w)
                continue;
            if (k == 1 && w->d == 0)
                w->d = 1; // a single point; any step will do
            if (!is_mono_grid(g, k, *w) && !(k == 1 && w->x >= 1 && w->y >= 1 && w->x <= g.side() && w->y <= g.side()))
                throw std::logic_error("gw oracle returned a grid that is not monochromatic");
            w->color = g.color(w->x, w->y);
            return std::make_pair(*w, k);
        }
        return std::nullopt;
    }

    bool in_grid(std::int64_t u, std::int64_t v, const TowerNode& node, std::int64_t scale, int size)
    {
        const std::int64_t du = u - node.X, dv = v - node.Y;
        if (du < 0 || dv < 0 || du % scale != 0 || dv % scale != 0)
            return false;
        return du / scale < size && dv / scale < size;
    }

    std::string str(std::int64_t v) { return std::to_string(v); }

} // namespace

std::optional<std::string> verify_trace(const EdgeColoring& chi, int k, const CubeTrace& trace)
{
    const auto& tower = trace.tower;
    const int n = chi.n();
    if (k < 2)
        return "k must be >= 2";
    if (tower.half_n * 2 != n)
        return "tower half size does not match n";
    const int height = static_cast<int>(tower.stages.size()) - 1;
    if (height < 0 || tower.nodes.size() != depth_offset(height + 1))
        return "tower node count does not match its depth";

    // positions and scales
    std::int64_t scale = 1;
    for (int i = 0; i <= height; ++i) {
        const auto& st = tower.stages[static_cast<std::size_t>(i)];
        if (st.scale_in != scale)
            return "stage " + str(i) + ": input scale is not d_0...d_{i-1}";
        if (st.step < 1 || st.size < 1 || st.half < 1)
            return "stage " + str(i) + ": degenerate grid";
        if (st.x < 1 || st.y < 1 || st.x + static_cast<std::int64_t>(st.size - 1) * st.step > st.half
            || st.y + static_cast<std::int64_t>(st.size - 1) * st.step > st.half)
            return "stage " + str(i) + ": subgrid leaves the quadrant";
        scale *= st.step;
        if (st.scale_out != scale)
            return "stage " + str(i) + ": output scale is not d_0...d_i";
        if (i > 0 && st.half * 2 > tower.stages[static_cast<std::size_t>(i - 1)].size)
            return "stage " + str(i) + ": quadrant exceeds the parent grid";
        for (std::size_t v = depth_offset(i); v < depth_offset(i + 1); ++v) {
            const auto& node = tower.nodes[v];
            if (static_cast<int>(node.word.size()) != i)
                return "node " + str(static_cast<std::int64_t>(v)) + ": wrong depth";
            if (i == 0) {
                if (node.row_base != 0 || node.col_base != tower.half_n)
                    return "root: lift bases must be (0, S)";
            } else {
                const auto& parent = tower.nodes[(v - 1) / 2];
                const std::int64_t origin = node.word.back() == 1 ? parent.X : parent.Y;
                if (node.row_base != origin - st.scale_in || node.col_base != origin + st.scale_in * (st.half - 1))
                    return "node " + to_string(node.word) + ": grid is not the quadrant of its parent's subgrid";
            }
            if (node.X != node.row_base + st.scale_in * st.x || node.Y != node.col_base + st.scale_in * st.y)
                return "node " + to_string(node.word) + ": position (X, Y) inconsistent";
            if (i < height) {
                const auto& c1 = tower.nodes[2 * v + 1];
                const auto& c2 = tower.nodes[2 * v + 2];
                const auto& next = tower.stages[static_cast<std::size_t>(i + 1)];
                const std::int64_t x1 = c1.row_base + next.scale_in * next.x;
                const std::int64_t x2 = c2.row_base + next.scale_in * next.x;
                if (x2 - x1 != node.Y - node.X)
                    return "node " + to_string(node.word) + ": X(s.2) - X(s.1) != Y(s) - X(s)";
            }
            // the monochromatic subgrid
            for (int p = 0; p < st.size; ++p) {
                for (int q = 0; q < st.size; ++q) {
                    const std::int64_t u = node.X + st.scale_out * p;
                    const std::int64_t w = node.Y + st.scale_out * q;
                    if (u < 1 || w > n || u >= w)
                        return "node " + to_string(node.word) + ": subgrid point off the upper triangle";
                    if (chi.color(static_cast<int>(u), static_cast<int>(w)) != node.color)
                        return "node " + to_string(node.word) + ": subgrid is not monochromatic";
                }
            }
        }
    }

    // embedding
    if (!trace.embedding)
        return "no embedding";
    const auto& e = *trace.embedding;
    int colors = 1;
    for (const auto& node : tower.nodes)
        colors = std::max(colors, node.color);
    const TreeColoring tc = tower_tree_coloring(tower, std::max(colors, chi.r()));
    const auto rep = verify_embedding(e, tc);
    if (!rep.valid)
        return "embedding invalid: " + rep.violation;
    if (!rep.monochromatic)
        return "embedding is not monochromatic";
    if (e.source_height != k - 1)
        return "embedding has the wrong height";
    const TreeShape source(2, k - 1);
    const TreeShape& target = tc.shape();
    auto node_of = [&](std::size_t s) -> const TowerNode& { return tower.nodes[e.image[s]]; };
    auto stage_of = [&](std::size_t s) -> const TowerStage& {
        return tower.stages[static_cast<std::size_t>(target.level_of(e.image[s]))];
    };

    // reconstruction
    if (trace.b.size() != static_cast<std::size_t>(k))
        return "wrong number of increments";
    const std::size_t first_leaf = source.level_offset(k - 1);
    if (trace.a != node_of(first_leaf).X)
        return "a != X(phi(1^(k-1)))";
    for (int l = 1; l <= k; ++l) {
        const std::size_t lo = source.level_offset(l - 1);
        for (std::size_t s = lo; s < lo + source.level_size(l - 1); ++s)
            if (node_of(s).Y - node_of(s).X != trace.b[static_cast<std::size_t>(l - 1)])
                return "b_" + str(l) + " != Y(s) - X(s) at source node " + to_string(source.word(s));
    }
    for (std::size_t s = 0; s < first_leaf; ++s) {
        const auto& c1 = node_of(source.child(s, 1));
        const auto& c2 = node_of(source.child(s, 2));
        if (c2.X - c1.X != node_of(s).Y - node_of(s).X)
            return "X(phi(s.2)) - X(phi(s.1)) != Y(phi(s)) - X(phi(s)) at " + to_string(source.word(s));
    }

    // sibling-descendant points fall in the ancestor's subgrid
    const std::size_t leaves = source.level_size(k - 1);
    for (std::size_t i = 0; i < leaves; ++i) {
        for (std::size_t j = i + 1; j < leaves; ++j) {
            std::size_t s = first_leaf + i, t = first_leaf + j;
            while (source.parent(s) != source.parent(t)) {
                s = source.parent(s);
                t = source.parent(t);
            }
            const std::size_t sigma = source.parent(s);
            const auto& anc = node_of(sigma);
            const auto& st = stage_of(sigma);
            const auto& ls = node_of(first_leaf + i);
            const auto& lt = node_of(first_leaf + j);
            for (std::int64_t u : {ls.X, ls.Y})
                for (std::int64_t v : {lt.X, lt.Y})
                    if (!in_grid(u, v, anc, st.scale_out, st.size))
                        return "point (" + str(u) + ", " + str(v) + ") is outside the subgrid of "
                               + to_string(target.word(e.image[sigma]));
        }
    }

    // cube form and color
    std::vector<std::int64_t> values;
    for (std::size_t s = first_leaf; s < first_leaf + leaves; ++s) {
        values.push_back(node_of(s).X);
        values.push_back(node_of(s).Y);
    }
    std::sort(values.begin(), values.end());
    const HilbertCube cube(trace.a, trace.b);
    if (cube.elements() != values)
        return "leaf values are not {a + sum_{i in I} b_i}";
    if (!cube.is_proper())
        return "cube is not proper";
    if (cube.max_element() > n || trace.a < 1)
        return "cube leaves [n]";
    int color = 0;
    if (!is_monochromatic(chi, cube, &color) || color != rep.color)
        return "cube is not monochromatic in the embedding color";
    return std::nullopt;
}

ExtractResult extract_cube(const EdgeColoring& chi, int k, const ExtractOptions& options)
{
    if (k < 2)
        throw std::invalid_argument("extract_cube: k must be >= 2");
    if (chi.n() % 2 != 0 || chi.n() < 2)
        throw std::invalid_argument("extract_cube: n must be even and positive");
    const GwOracle oracle = options.oracle ? options.oracle : exhaustive_gw_oracle();

    ExtractResult result;
    auto& tower = result.trace.tower;
    tower.half_n = chi.n() / 2;

    // stage 0 grid bases: (a, b) -> (a, S + b)
    tower.nodes.push_back({{}, 0, tower.half_n, 0, 0, 0});
    int half = tower.half_n;
    std::int64_t scale = 1;
    for (int depth = 0;; ++depth) {
        if (depth > options.max_depth) {
            result.failed_depth = depth;
            result.detail = "depth limit reached";
            return result;
        }
        if (half < 1) {
            result.failed_depth = depth;
            result.detail = "grids too small to split";
            return result;
        }
        const std::size_t first = depth_offset(depth), last = depth_offset(depth + 1);

        // product coloring over all grids of this depth, tuples interned
        std::map<std::vector<std::uint8_t>, int> ids;
        std::vector<std::uint8_t> cells;
        cells.reserve(static_cast<std::size_t>(half) * static_cast<std::size_t>(half));
        bool overflow = false;
        for (int a = 1; a <= half && !overflow; ++a) {
            for (int b = 1; b <= half; ++b) {
                std::vector<std::uint8_t> tuple;
                tuple.reserve(last - first);
                for (std::size_t v = first; v < last; ++v) {
                    const auto& node = tower.nodes[v];
                    tuple.push_back(static_cast<std::uint8_t>(
                        chi.color(static_cast<int>(node.row_base + scale * a), static_cast<int>(node.col_base + scale * b))));
                }
                const auto it = ids.emplace(std::move(tuple), static_cast<int>(ids.size()) + 1).first;
                if (it->second > 255) {
                    overflow = true;
                    break;
                }
                cells.push_back(static_cast<std::uint8_t>(it->second));
            }
        }
        if (overflow) {
            result.failed_depth = depth;
            result.detail = "more than 255 product colors";
            return result;
        }
        const GridColoring product(half, static_cast<int>(std::max<std::size_t>(ids.size(), 1)), std::move(cells));
        const auto found = largest_grid(oracle, product, 1);
        if (!found) {
            result.failed_depth = depth;
            result.detail = "oracle found no monochromatic subgrid";
            return result;
        }
        const auto& [w, size] = *found;
        TowerStage st;
        st.half = half;
        st.x = w.x;
        st.y = w.y;
        st.step = w.d;
        st.size = size;
        st.scale_in = scale;
        st.scale_out = scale * w.d;
        st.product_colors = static_cast<int>(ids.size());
        tower.stages.push_back(st);
        for (std::size_t v = first; v < last; ++v) {
            auto& node = tower.nodes[v];
            node.X = node.row_base + scale * w.x;
            node.Y = node.col_base + scale * w.y;
            node.color = chi.color(static_cast<int>(node.X), static_cast<int>(node.Y));
        }

        // enough levels for an aligned monochromatic tree of height k - 1?
        if (depth >= k - 1) {
            const TreeColoring tc = tower_tree_coloring(tower, chi.r());
            if (auto e = find_aligned_mono_embedding(tc, k - 1)) {
                auto& trace = result.trace;
                trace.embedding = *e;
                const TreeShape source(2, k - 1);
                const auto& leaf = tower.nodes[e->image[source.level_offset(k - 1)]];
                trace.a = leaf.X;
                trace.b.clear();
                for (int l = 1; l <= k; ++l) {
                    const auto& node = tower.nodes[e->image[source.level_offset(l - 1)]];
                    trace.b.push_back(node.Y - node.X);
                }
                if (options.tamper)
                    options.tamper(trace);
                if (auto err = verify_trace(chi, k, trace)) {
                    result.outcome = ExtractOutcome::VerificationFailed;
                    result.detail = *err;
                    return result;
                }
                result.outcome = ExtractOutcome::Found;
                result.cube = HilbertCube(trace.a, trace.b);
                is_monochromatic(chi, *result.cube, &result.color);
                return result;
            }
        }

        // children: G_{s.1} at (X, X), G_{s.2} at (Y, Y), side `size`
        const std::int64_t next_scale = scale * w.d;
        const int next_half = size / 2;
        for (std::size_t v = first; v < last; ++v) {
            for (int j = 1; j <= 2; ++j) {
                const auto& parent = tower.nodes[v];
                TowerNode child;
                child.word = parent.word;
                child.word.push_back(j);
                const std::int64_t origin = j == 1 ? parent.X : parent.Y;
                child.row_base = origin - next_scale;
                child.col_base = origin + next_scale * (next_half - 1);
                tower.nodes.push_back(std::move(child));
            }
        }
        if (next_half < 1) {
            tower.nodes.resize(last);
            result.failed_depth = depth + 1;
            result.detail = "subgrid of side " + std::to_string(size) + " is too small to split";
            return result;
        }
        half = next_half;
        scale = next_scale;
    }
}

TwoColorResult extract_cube_two_colors(const EdgeColoring& chi, const GwOracle& given)
{
    if (chi.r() > 2)
        throw std::invalid_argument("extract_cube_two_colors: at most two colors");
    if (chi.n() % 2 != 0 || chi.n() < 4)
        throw std::invalid_argument("extract_cube_two_colors: n must be even and >= 4");
    const GwOracle oracle = given ? given : exhaustive_gw_oracle();
    TwoColorResult out;
    const int s = chi.n() / 2;
    const GridColoring lift = quadrant_lift(chi);
    const auto found = largest_grid(oracle, lift, 2);
    if (!found) {
        out.detail = "no monochromatic 2 x 2 grid in the lift";
        return out;
    }
    const auto& [w, size] = *found;
    out.grid = w;
    out.grid_size = size;
    const int c = w.color;
    const std::int64_t x = w.x, y = s + w.y, d = w.d;
    auto col = [&](std::int64_t u, std::int64_t v) { return chi.color(static_cast<int>(u), static_cast<int>(v)); };

    auto finish = [&](HilbertCube cube) {
        int color = 0;
        if (!cube.is_proper() || cube.max_element() > chi.n() || !is_monochromatic(chi, cube, &color)) {
            out.outcome = ExtractOutcome::VerificationFailed;
            out.detail = "reconstructed cube is not monochromatic";
            return out;
        }
        out.outcome = ExtractOutcome::Found;
        out.cube = std::move(cube);
        out.color = color;
        return out;
    };

    // a square whose final edges {x+id, x+(i+l)d}, {y+jd, y+(j+l)d} share its color
    for (int l = 1; l < size; ++l)
        for (int i = 0; i + l < size; ++i) {
            if (col(x + i * d, x + (i + l) * d) != c)
                continue;
            for (int j = 0; j + l < size; ++j)
                if (col(y + j * d, y + (j + l) * d) == c) {
                    out.direct = true;
                    return finish(HilbertCube(x + i * d, {l * d, y + j * d - x - i * d}));
                }
        }

    // phi(l) = 1 iff some pair of A_l has the grid color
    std::vector<std::uint8_t> phi(static_cast<std::size_t>(size - 1), 2);
    for (int l = 1; l < size; ++l)
        for (int i = 0; i + l < size; ++i)
            if (col(x + i * d, x + (i + l) * d) == c)
                phi[static_cast<std::size_t>(l - 1)] = 1;
    const VertexColoring pc(size - 1, 2, phi);
    const auto sol = find_mono_distinct_solution(pc, LinearPatternSystem::rado_helper());
    if (!sol) {
        out.detail = "difference coloring of [" + std::to_string(size - 1) + "] has no (i, j, i+j, j-i)";
        return out;
    }
    out.helper = *sol;
    // red differences on A force B entirely off-color there, and vice versa
    const bool red = pc.color((*sol)[0]) == 1;
    out.side = red ? 'B' : 'A';
    const std::int64_t origin = red ? y : x;
    return finish(HilbertCube(origin, {(*sol)[0] * d, (*sol)[1] * d}));
}

BoundValue gw_stub_identity(const BoundValue& side, const BoundValue&) { return side; }

BoundValue gw_stub_scaled(const BoundValue& side, const BoundValue& colors) { return mul(side, colors); }

BoundSequence bound_tower(const BoundValue& depth, int r, const GwBound& gw, const BoundOptions& options)
{
    if (r < 1)
        throw std::invalid_argument("bound_tower: need r >= 1");
    BoundSequence seq;
    seq.depth = depth;
    if (!depth.is_exact() || depth.exact() > options.max_terms) {
        seq.note = "depth " + depth.to_string() + " is too large to unroll";
        return seq;
    }
    const auto top = depth.exact().convert_to<long>();
    seq.values.assign(static_cast<std::size_t>(top) + 1, BoundValue(2));
    for (long j = top - 1; j >= 0; --j) {
        const BoundValue colors = pow(BoundValue(r), pow(BoundValue(2), BoundValue(std::int64_t{j}), options.digit_threshold),
                                      options.digit_threshold);
        seq.values[static_cast<std::size_t>(j)]
            = mul(BoundValue(2), gw(seq.values[static_cast<std::size_t>(j + 1)], colors), options.digit_threshold);
    }
    seq.enumerated = true;
    return seq;
}

BoundSequence s_bound(int r, const GwBound& gw, const BoundOptions& options)
{
    return bound_tower(f_recurrence_bound(2, r, options), r, gw, options);
}

BoundSequence t_bound(int r, int k, const GwBound& gw, const BoundOptions& options)
{
    if (k < 2)
        throw std::invalid_argument("t_bound: need k >= 2");
    return bound_tower(E_bound(2, r, k - 1, options), r, gw, options);
}

} // namespace addramsey
