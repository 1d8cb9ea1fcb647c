#pragma once

#include "addramsey/common.hpp"
#include "addramsey/edge_coloring.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace addramsey {

/// An r-coloring of [S] x [S], stored row-major: (x, y) at (x-1)*S + (y-1).
class GridColoring {
public:
    GridColoring(int side, int r, std::vector<std::uint8_t> colors);

    static GridColoring constant(int side, int r, int color = 1);

    int side() const noexcept { return side_; }
    int r() const noexcept { return r_; }
    const std::vector<std::uint8_t>& colors() const noexcept { return colors_; }

    int color(int x, int y) const noexcept
    {
        return colors_[static_cast<std::size_t>(x - 1) * static_cast<std::size_t>(side_) + static_cast<std::size_t>(y - 1)];
    }

    friend bool operator==(const GridColoring&, const GridColoring&) = default;

private:
    int side_;
    int r_;
    std::vector<std::uint8_t> colors_;
};

/// The homothetic grid {(x + i d, y + j d) : 0 <= i, j < k}.
struct GridWitness {
    int x = 0;
    int y = 0;
    int d = 0;
    int color = 0;

    friend bool operator==(const GridWitness&, const GridWitness&) = default;
};

/// Least (x, y, d) whose k x k grid lies in [S]^2 and is one color. d >= 1
/// when k >= 2; for k = 1 the answer is (1, 1, 0) on any nonempty grid.
std::optional<GridWitness> find_mono_grid(const GridColoring& grid, int k, const SearchOptions& options = {});

/// Whether the k x k grid at (x, y) with step d lies in [S]^2 and is one color.
bool is_mono_grid(const GridColoring& grid, int k, const GridWitness& w);

/// GW(r, k): least S such that every r-coloring of [S]^2 has a monochromatic
/// k x k homothetic grid. One backtracking pass over points ordered by
/// max(x, y), so [m]^2 is always a prefix. The certificate colors [value-1]^2.
NumberResult<GridColoring> gw_number(int r, int k, int s_max, std::uint64_t budget);

/// chi'(a, b) = chi(a, S + b) for n = 2S. Throws on odd n.
GridColoring quadrant_lift(const EdgeColoring& chi);

} // namespace addramsey
