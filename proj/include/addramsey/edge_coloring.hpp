#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace addramsey {

/// An r-coloring of the edges of K_n on vertices 1..n. Colors are 1..r and
/// stored upper-triangular row-major: (1,2), (1,3), ..., (1,n), (2,3), ...
class EdgeColoring {
public:
    EdgeColoring(int n, int r, std::vector<std::uint8_t> colors);

    static EdgeColoring constant(int n, int r, int color = 1);

    /// Colors every pair u < v by rule(u, v), which must return 1..r.
    static EdgeColoring from_rule(int n, int r, const std::function<int(int, int)>& rule);

    int n() const noexcept { return n_; }
    int r() const noexcept { return r_; }
    std::size_t edge_count() const noexcept { return colors_.size(); }
    std::span<const std::uint8_t> colors() const noexcept { return colors_; }

    /// Color of {u, v}; argument order is irrelevant. Requires u != v in [1, n].
    int color(int u, int v) const noexcept
    {
        if (u > v)
            std::swap(u, v);
        return colors_[index(n_, u, v)];
    }

    EdgeColoring recolored(int u, int v, int color) const;

    /// 0-based position of the pair u < v in row-major order.
    static constexpr std::size_t index(int n, int u, int v) noexcept
    {
        const auto row = static_cast<std::size_t>(u - 1);
        return row * static_cast<std::size_t>(n) - row * (row + 1) / 2
               + static_cast<std::size_t>(v - u - 1);
    }

    static constexpr std::size_t pair_count(int n) noexcept
    {
        return n < 2 ? 0 : static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    }

    friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

private:
    int n_;
    int r_;
    std::vector<std::uint8_t> colors_;
};

} // namespace addramsey
