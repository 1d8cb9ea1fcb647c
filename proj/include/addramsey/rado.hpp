#pragma once

#include "addramsey/common.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace addramsey {

/// A c-coloring of [n]; value v has color colors[v-1].
class VertexColoring {
public:
    VertexColoring(int n, int c, std::vector<std::uint8_t> colors);

    static VertexColoring from_rule(int n, int c, const std::function<int(int)>& rule);

    int n() const noexcept { return n_; }
    int c() const noexcept { return c_; }
    const std::vector<std::uint8_t>& colors() const noexcept { return colors_; }
    int color(std::int64_t v) const noexcept { return colors_[static_cast<std::size_t>(v - 1)]; }

    friend bool operator==(const VertexColoring&, const VertexColoring&) = default;

private:
    int n_;
    int c_;
    std::vector<std::uint8_t> colors_;
};

/// Homogeneous integer forms sum_j B[f][j] x_j = 0 over x_1..x_m.
class LinearPatternSystem {
public:
    /// Every form needs m coefficients, at least one nonzero.
    LinearPatternSystem(int arity, std::vector<std::vector<std::int64_t>> forms, bool distinct = true);

    /// (i, j, i+j, j-i).
    static LinearPatternSystem rado_helper();
    /// (x, y, x+y).
    static LinearPatternSystem schur();

    int arity() const noexcept { return arity_; }
    const std::vector<std::vector<std::int64_t>>& forms() const noexcept { return forms_; }
    bool distinct() const noexcept { return distinct_; }

    bool satisfied(const std::vector<std::int64_t>& x) const;

private:
    int arity_;
    std::vector<std::vector<std::int64_t>> forms_;
    bool distinct_;
};

/// Calls visit(x) for every solution in [n]^m (distinct entries if the system
/// asks for it) in lexicographic order, stopping when visit returns false.
/// A variable that is the last unassigned one of some form is solved for.
void for_each_solution(const LinearPatternSystem& sys, int n,
                       const std::function<bool(const std::vector<std::int64_t>&)>& visit);

/// Lexicographically least solution in [n] whose values share one color.
std::optional<std::vector<std::int64_t>> find_mono_distinct_solution(const VertexColoring& coloring,
                                                                     const LinearPatternSystem& sys);

/// Least T such that every c-coloring of [T] has a monochromatic solution.
/// One backtracking pass over 1..t_max with color(1) = 1; each solution is
/// checked once its largest value is colored.
NumberResult<VertexColoring> pattern_number(const LinearPatternSystem& sys, int c, int t_max, std::uint64_t budget);

/// pattern_number for (i, j, i+j, j-i) with two colors.
NumberResult<VertexColoring> rado_helper_number(int t_max, std::uint64_t budget);

} // namespace addramsey
