#include "addramsey/edge_coloring.hpp"

#include <stdexcept>
#include <string>

namespace addramsey {

EdgeColoring::EdgeColoring(int n, int r, std::vector<std::uint8_t> colors)
    : n_(n), r_(r), colors_(std::move(colors))
{
    if (n < 0)
        throw std::invalid_argument("edge coloring: n must be non-negative");
    if (r < 1 || r > 255)
        throw std::invalid_argument("edge coloring: r must be in 1..255");
    if (colors_.size() != pair_count(n))
        throw std::invalid_argument("edge coloring: expected " + std::to_string(pair_count(n))
                                    + " colors, got " + std::to_string(colors_.size()));
    for (auto c : colors_)
        if (c < 1 || c > r)
            throw std::invalid_argument("edge coloring: color " + std::to_string(c)
                                        + " outside 1.." + std::to_string(r));
}

EdgeColoring EdgeColoring::constant(int n, int r, int color)
{
    return EdgeColoring(n, r, std::vector<std::uint8_t>(pair_count(n), static_cast<std::uint8_t>(color)));
}

EdgeColoring EdgeColoring::from_rule(int n, int r, const std::function<int(int, int)>& rule)
{
    std::vector<std::uint8_t> colors;
    colors.reserve(pair_count(n));
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            colors.push_back(static_cast<std::uint8_t>(rule(u, v)));
    return EdgeColoring(n, r, std::move(colors));
}

EdgeColoring EdgeColoring::recolored(int u, int v, int color) const
{
    if (u == v || u < 1 || v < 1 || u > n_ || v > n_)
        throw std::invalid_argument("edge coloring: bad pair");
    if (u > v)
        std::swap(u, v);
    auto copy = colors_;
    copy[index(n_, u, v)] = static_cast<std::uint8_t>(color);
    return EdgeColoring(n_, r_, std::move(copy));
}

} // namespace addramsey
