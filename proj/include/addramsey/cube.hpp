#pragma once

#include "addramsey/cnf.hpp"
#include "addramsey/common.hpp"
#include "addramsey/edge_coloring.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace addramsey {

/// H(a; d_1..d_k) = { a + sum_{i in I} d_i : I subset of [k] }. Increments
/// are kept sorted nondecreasing, so two cubes with the same base and the same
/// multiset of increments compare equal.
class HilbertCube {
public:
    HilbertCube(std::int64_t base, std::vector<std::int64_t> increments);

    std::int64_t base() const noexcept { return base_; }
    const std::vector<std::int64_t>& increments() const noexcept { return increments_; }
    int dimension() const noexcept { return static_cast<int>(increments_.size()); }

    /// All 2^k subset sums, sorted, with multiplicity.
    std::vector<std::int64_t> elements() const;

    /// True iff the 2^k subset sums are pairwise distinct.
    bool is_proper() const;

    /// All pairs of distinct elements in lexicographic order. Throws
    /// std::invalid_argument on an improper cube.
    std::vector<std::pair<std::int64_t, std::int64_t>> edges() const;

    std::int64_t max_element() const noexcept;

    /// Lexicographic on (a, d_1, ..., d_k).
    friend auto operator<=>(const HilbertCube&, const HilbertCube&) = default;
    friend bool operator==(const HilbertCube&, const HilbertCube&) = default;

private:
    std::int64_t base_;
    std::vector<std::int64_t> increments_;
};

enum class CubeOutcome { Found, NotFound, BudgetExceeded };

struct CubeSearchResult {
    CubeOutcome outcome = CubeOutcome::NotFound;
    std::optional<HilbertCube> cube;
    int color = 0;
};

/// Whether every edge of `cube` has one color under `coloring`; the color is
/// written to *color when it is. The cube must be proper and lie in [n].
bool is_monochromatic(const EdgeColoring& coloring, const HilbertCube& cube, int* color = nullptr);

/// Lexicographically least proper k-cube inside [n] whose edges are one color.
CubeSearchResult find_mono_cube(const EdgeColoring& coloring, int k, const SearchOptions& options = {});

/// Calls visit(cube) for every proper k-cube with elements in [n], in
/// lexicographic order; stops early when visit returns false.
void for_each_proper_cube(int n, int k, const std::function<bool(const HilbertCube&)>& visit);

/// n(r,k): least n such that every r-coloring of K_n has a monochromatic
/// proper k-cube. Backtracks over edge colors in order of the larger endpoint
/// so K_m is always a prefix; χ({1,2}) = 1 and colors appear in first-use
/// order. The certificate is an avoiding coloring of K_{value-1}.
NumberResult<EdgeColoring> ramsey_cube_number(int r, int k, int n_max, std::uint64_t budget);

/// DIMACS instance satisfiable iff some r-coloring of K_n has no
/// monochromatic proper k-cube. Variable (e-1)*r + c means "edge e has color
/// c", edges numbered 1.. in row-major order.
Cnf export_cnf(int r, int k, int n);

} // namespace addramsey
