#pragma once

#include "addramsey/common.hpp"
#include "addramsey/edge_coloring.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace addramsey {

/// Outcome of an exhaustive check. `witness` is the least counterexample
/// when the check fails; its layout depends on the property.
struct VerificationReport {
    std::string property;
    std::int64_t range = 0;
    bool pass = true;
    std::vector<std::int64_t> witness;
    std::uint64_t checked = 0; // solutions (or solution classes) examined
};

// ---------------------------------------------------------------------------
// a(w - x) = b(y - z), a != b

class RatioEquation {
public:
    /// Reduces to gcd(a, b) = 1. Throws on a == b or non-positive input.
    RatioEquation(std::int64_t a, std::int64_t b);

    std::int64_t a() const noexcept { return a_; }
    std::int64_t b() const noexcept { return b_; }

private:
    std::int64_t a_;
    std::int64_t b_;
};

/// Exponent of the largest power of `base` dividing d (base >= 2, d >= 1).
int valuation(std::int64_t d, std::int64_t base);

/// Parity of v_b(|u - v|) when b > 1, else of v_a(|u - v|). For a = 1, b = 2
/// this is the dyadic 3-AP avoider.
int ratio_avoider_color(const RatioEquation& eq, std::int64_t u, std::int64_t v);

/// The avoider on K_n in certificate form: color 1 + ratio_avoider_color.
EdgeColoring ratio_avoider_coloring(const RatioEquation& eq, int n);

/// Checks every pair of edges {w, w+d1}, {y, y+d2} inside [n] with
/// a*d1 = b*d2 for distinct colors. Witness: {w, w+d1, y, y+d2}, least in
/// (d1, w, y) order.
VerificationReport ratio_star_check(const RatioEquation& eq, const EdgeColoring& coloring,
                                    const SearchOptions& options = {});
VerificationReport ratio_star_check(const RatioEquation& eq, int n, const SearchOptions& options = {});

// ---------------------------------------------------------------------------
// a_1 x_1 + ... + a_k x_k = b z, a_i >= b > 0

class SchurEquation {
public:
    /// Requires k >= 2 and every a_i >= b >= 1.
    SchurEquation(std::vector<std::int64_t> coeffs, std::int64_t rhs);

    const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }
    std::int64_t rhs() const noexcept { return rhs_; }
    std::int64_t weight_sum() const noexcept { return weight_sum_; }

private:
    std::vector<std::int64_t> coeffs_;
    std::int64_t rhs_;
    std::int64_t weight_sum_;
};

enum class PairColor { Red = 1, Blue = 2 };

/// With u < v: red iff u*M <= b*v, compared exactly in integers.
PairColor schur_avoider_color(const SchurEquation& eq, std::int64_t u, std::int64_t v);

EdgeColoring schur_avoider_coloring(const SchurEquation& eq, int n);

/// Enumerates every solution by distinct values x_1..x_k, z in [n] and checks
/// that the star {x_i, z} is not monochromatic. Witness: {x_1..x_k, z}, least
/// in (z, x_1, ..., x_k) order.
VerificationReport schur_star_check(const SchurEquation& eq, const EdgeColoring& coloring,
                                    const SearchOptions& options = {});
VerificationReport schur_star_check(const SchurEquation& eq, int n, const SearchOptions& options = {});

} // namespace addramsey
