#include "addramsey/grid.hpp"

#include "prefix_search.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace addramsey {

GridColoring::GridColoring(int side, int r, std::vector<std::uint8_t> colors)
    : side_(side), r_(r), colors_(std::move(colors))
{
    if (side < 0 || r < 1 || r > 255)
        throw std::invalid_argument("grid coloring: need side >= 0 and 1 <= r <= 255");
    if (colors_.size() != static_cast<std::size_t>(side) * static_cast<std::size_t>(side))
        throw std::invalid_argument("grid coloring: expected side^2 colors");
    for (auto c : colors_)
        if (c < 1 || c > r)
            throw std::invalid_argument("grid coloring: color out of range");
}

GridColoring GridColoring::constant(int side, int r, int color)
{
    const auto cells = static_cast<std::size_t>(std::max(side, 0)) * static_cast<std::size_t>(std::max(side, 0));
    return GridColoring(side, r, std::vector<std::uint8_t>(cells, static_cast<std::uint8_t>(color)));
}

bool is_mono_grid(const GridColoring& grid, int k, const GridWitness& w)
{
    if (k < 1 || w.x < 1 || w.y < 1 || (k >= 2 && w.d < 1))
        return false;
    const std::int64_t span = static_cast<std::int64_t>(k - 1) * w.d;
    if (w.x + span > grid.side() || w.y + span > grid.side())
        return false;
    const int c = grid.color(w.x, w.y);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (grid.color(w.x + i * w.d, w.y + j * w.d) != c)
                return false;
    return true;
}

std::optional<GridWitness> find_mono_grid(const GridColoring& grid, int k, const SearchOptions& options)
{
    if (k < 1)
        throw std::invalid_argument("find_mono_grid: k must be >= 1");
    const int s = grid.side();
    if (k == 1) {
        if (s < 1)
            return std::nullopt;
        return GridWitness{1, 1, 0, grid.color(1, 1)};
    }
    std::vector<GridWitness> found(static_cast<std::size_t>(std::max(s, 0)));
    auto hit = [&](std::size_t i) {
        const int x = static_cast<int>(i) + 1;
        for (int y = 1; y <= s; ++y) {
            const int room = s - std::max(x, y);
            for (int d = 1; d * (k - 1) <= room; ++d) {
                GridWitness w{x, y, d, grid.color(x, y)};
                if (is_mono_grid(grid, k, w)) {
                    found[i] = w;
                    return true;
                }
            }
        }
        return false;
    };
    const auto first = first_hit(found.size(), options.threads, hit);
    if (!first)
        return std::nullopt;
    return found[*first];
}

NumberResult<GridColoring> gw_number(int r, int k, int s_max, std::uint64_t budget)
{
    if (r < 1 || k < 1 || s_max < 0)
        throw std::invalid_argument("gw_number: need r, k >= 1 and s_max >= 0");

    // point order: by max(x, y), then min(x, y), then x
    struct Point {
        int x, y;
    };
    std::vector<Point> order;
    for (int x = 1; x <= s_max; ++x)
        for (int y = 1; y <= s_max; ++y)
            order.push_back({x, y});
    auto key = [](const Point& p) { return std::make_tuple(std::max(p.x, p.y), std::min(p.x, p.y), p.x); };
    std::sort(order.begin(), order.end(), [&](const Point& a, const Point& b) { return key(a) < key(b); });
    std::vector<int> pos(static_cast<std::size_t>(s_max) * static_cast<std::size_t>(s_max) + 1, 0);
    auto cell = [s_max](int x, int y) { return static_cast<std::size_t>(x - 1) * static_cast<std::size_t>(s_max) + static_cast<std::size_t>(y - 1); };
    for (std::size_t t = 0; t < order.size(); ++t)
        pos[cell(order[t].x, order[t].y)] = static_cast<int>(t);

    detail::PrefixProblem problem;
    problem.colors = r;
    problem.forbidden.resize(order.size());
    for (int m = 1; m <= s_max; ++m)
        problem.prefix.push_back(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));

    auto add_grid = [&](int x, int y, int d) {
        std::vector<int> members;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                members.push_back(pos[cell(x + i * d, y + j * d)]);
        std::sort(members.begin(), members.end());
        const int last = members.back();
        members.pop_back();
        problem.forbidden[static_cast<std::size_t>(last)].push_back(std::move(members));
    };
    for (int x = 1; x <= s_max; ++x)
        for (int y = 1; y <= s_max; ++y) {
            if (k == 1) {
                add_grid(x, y, 0);
                continue;
            }
            for (int d = 1; std::max(x, y) + d * (k - 1) <= s_max; ++d)
                add_grid(x, y, d);
        }

    const auto out = detail::PrefixSearch(problem, budget).run();

    NumberResult<GridColoring> result;
    result.kind = out.kind;
    result.value = out.value;
    result.nodes = out.nodes;
    const int side = out.best;
    std::vector<std::uint8_t> colors(static_cast<std::size_t>(side) * static_cast<std::size_t>(side), 1);
    for (std::size_t t = 0; t < out.witness.size(); ++t) {
        const auto& p = order[t];
        colors[static_cast<std::size_t>(p.x - 1) * static_cast<std::size_t>(side) + static_cast<std::size_t>(p.y - 1)] = out.witness[t];
    }
    GridColoring cert(side, r, std::move(colors));
    if (find_mono_grid(cert, k))
        throw std::logic_error("gw_number: certificate contains a monochromatic grid");
    result.certificate = std::move(cert);
    return result;
}

GridColoring quadrant_lift(const EdgeColoring& chi)
{
    if (chi.n() % 2 != 0)
        throw std::invalid_argument("quadrant_lift: n must be even");
    const int s = chi.n() / 2;
    std::vector<std::uint8_t> colors;
    colors.reserve(static_cast<std::size_t>(s) * static_cast<std::size_t>(s));
    for (int a = 1; a <= s; ++a)
        for (int b = 1; b <= s; ++b)
            colors.push_back(static_cast<std::uint8_t>(chi.color(a, s + b)));
    return GridColoring(s, chi.r(), std::move(colors));
}

} // namespace addramsey
