#include "addramsey/avoiders.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace addramsey {

RatioEquation::RatioEquation(std::int64_t a, std::int64_t b)
{
    if (a < 1 || b < 1)
        throw std::invalid_argument("ratio equation: a and b must be positive");
    if (a == b)
        throw std::invalid_argument("ratio equation: a == b is degenerate");
    const auto g = std::gcd(a, b);
    a_ = a / g;
    b_ = b / g;
}

int valuation(std::int64_t d, std::int64_t base)
{
    if (base < 2 || d < 1)
        throw std::invalid_argument("valuation: need base >= 2 and d >= 1");
    int e = 0;
    while (d % base == 0) {
        d /= base;
        ++e;
    }
    return e;
}

int ratio_avoider_color(const RatioEquation& eq, std::int64_t u, std::int64_t v)
{
    if (u == v)
        throw std::invalid_argument("ratio avoider: u == v");
    const std::int64_t d = u < v ? v - u : u - v;
    const std::int64_t base = eq.b() > 1 ? eq.b() : eq.a();
    return valuation(d, base) % 2;
}

EdgeColoring ratio_avoider_coloring(const RatioEquation& eq, int n)
{
    return EdgeColoring::from_rule(n, 2, [&](int u, int v) { return 1 + ratio_avoider_color(eq, u, v); });
}

VerificationReport ratio_star_check(const RatioEquation& eq, const EdgeColoring& coloring, const SearchOptions& options)
{
    const int n = coloring.n();
    const int r = coloring.r();
    VerificationReport report;
    report.property = "ratio(" + std::to_string(eq.a()) + "," + std::to_string(eq.b()) + ")";
    report.range = n;

    // index i <-> d1 = i + 1
    const std::size_t classes = n > 1 ? static_cast<std::size_t>(n - 1) : 0;
    std::vector<std::vector<std::int64_t>> witness(classes);
    std::vector<std::uint64_t> counted(classes, 0);
    auto hit = [&](std::size_t i) {
        const std::int64_t d1 = static_cast<std::int64_t>(i) + 1;
        if ((eq.a() * d1) % eq.b() != 0)
            return false;
        const std::int64_t d2 = eq.a() * d1 / eq.b();
        if (d2 >= n)
            return false;
        counted[i] = static_cast<std::uint64_t>(n - d1) * static_cast<std::uint64_t>(n - d2);
        // least y realizing each color at difference d2
        std::vector<int> first_y(static_cast<std::size_t>(r) + 1, 0);
        for (int y = 1; y + d2 <= n; ++y) {
            auto& slot = first_y[coloring.color(y, y + static_cast<int>(d2))];
            if (slot == 0)
                slot = y;
        }
        for (int w = 1; w + d1 <= n; ++w) {
            const int y = first_y[coloring.color(w, w + static_cast<int>(d1))];
            if (y != 0) {
                witness[i] = {w, w + d1, y, y + d2};
                return true;
            }
        }
        return false;
    };
    const auto first = first_hit(classes, options.threads, hit);
    const std::size_t upto = first ? *first + 1 : classes;
    for (std::size_t i = 0; i < upto; ++i)
        report.checked += counted[i];
    if (first) {
        report.pass = false;
        report.witness = witness[*first];
    }
    return report;
}

VerificationReport ratio_star_check(const RatioEquation& eq, int n, const SearchOptions& options)
{
    return ratio_star_check(eq, ratio_avoider_coloring(eq, n), options);
}

SchurEquation::SchurEquation(std::vector<std::int64_t> coeffs, std::int64_t rhs)
    : coeffs_(std::move(coeffs)), rhs_(rhs), weight_sum_(0)
{
    if (rhs_ < 1)
        throw std::invalid_argument("schur equation: b must be >= 1");
    if (coeffs_.size() < 2)
        throw std::invalid_argument("schur equation: need at least two coefficients");
    for (auto a : coeffs_) {
        if (a < rhs_)
            throw std::invalid_argument("schur equation: every a_i must be >= b");
        weight_sum_ += a;
    }
}

PairColor schur_avoider_color(const SchurEquation& eq, std::int64_t u, std::int64_t v)
{
    if (u == v)
        throw std::invalid_argument("schur avoider: u == v");
    if (u > v)
        std::swap(u, v);
    return u * eq.weight_sum() <= eq.rhs() * v ? PairColor::Red : PairColor::Blue;
}

EdgeColoring schur_avoider_coloring(const SchurEquation& eq, int n)
{
    return EdgeColoring::from_rule(n, 2, [&](int u, int v) { return static_cast<int>(schur_avoider_color(eq, u, v)); });
}

namespace {

    // Enumerates solutions with largest value z, x tuples in lexicographic
    // order; stops at the first monochromatic star.
    class SchurEnumerator {
    public:
        SchurEnumerator(const SchurEquation& eq, const EdgeColoring& coloring)
            : eq_(eq), coloring_(coloring), x_(eq.coeffs().size())
        {
            const auto& a = eq.coeffs();
            suffix_.assign(a.size() + 1, 0);
            for (std::size_t i = a.size(); i-- > 0;)
                suffix_[i] = suffix_[i + 1] + a[i];
        }

        // true when a monochromatic star was found; witness in x_
        bool run(std::int64_t z)
        {
            z_ = z;
            solutions_ = 0;
            return place(0, eq_.rhs() * z);
        }

        std::uint64_t solutions() const noexcept { return solutions_; }
        std::vector<std::int64_t> witness() const
        {
            auto w = x_;
            w.push_back(z_);
            return w;
        }

    private:
        bool place(std::size_t i, std::int64_t remaining)
        {
            const auto& a = eq_.coeffs();
            if (i + 1 == a.size()) {
                if (remaining % a[i] != 0)
                    return false;
                const std::int64_t x = remaining / a[i];
                if (x < 1 || !fresh(x, i))
                    return false;
                x_[i] = x;
                ++solutions_;
                return star_is_mono();
            }
            for (std::int64_t x = 1; a[i] * x + suffix_[i + 1] <= remaining; ++x) {
                if (!fresh(x, i))
                    continue;
                x_[i] = x;
                if (place(i + 1, remaining - a[i] * x))
                    return true;
            }
            return false;
        }

        bool fresh(std::int64_t x, std::size_t i) const
        {
            if (x == z_ || x > coloring_.n())
                return false;
            for (std::size_t j = 0; j < i; ++j)
                if (x_[j] == x)
                    return false;
            return true;
        }

        bool star_is_mono() const
        {
            const int z = static_cast<int>(z_);
            const int c = coloring_.color(static_cast<int>(x_[0]), z);
            for (std::size_t i = 1; i < x_.size(); ++i)
                if (coloring_.color(static_cast<int>(x_[i]), z) != c)
                    return false;
            return true;
        }

        const SchurEquation& eq_;
        const EdgeColoring& coloring_;
        std::vector<std::int64_t> x_;
        std::vector<std::int64_t> suffix_;
        std::int64_t z_ = 0;
        std::uint64_t solutions_ = 0;
    };

} // namespace

VerificationReport schur_star_check(const SchurEquation& eq, const EdgeColoring& coloring, const SearchOptions& options)
{
    const int n = coloring.n();
    VerificationReport report;
    report.property = "schur(";
    for (std::size_t i = 0; i < eq.coeffs().size(); ++i)
        report.property += (i ? "," : "") + std::to_string(eq.coeffs()[i]);
    report.property += "|" + std::to_string(eq.rhs()) + ")";
    report.range = n;

    // index i <-> z = i + 1
    const auto count = static_cast<std::size_t>(std::max(n, 0));
    std::vector<std::vector<std::int64_t>> witness(count);
    std::vector<std::uint64_t> counted(count, 0);
    auto hit = [&](std::size_t i) {
        SchurEnumerator walk(eq, coloring);
        const bool bad = walk.run(static_cast<std::int64_t>(i) + 1);
        counted[i] = walk.solutions();
        if (bad)
            witness[i] = walk.witness();
        return bad;
    };
    const auto first = first_hit(count, options.threads, hit);
    const std::size_t upto = first ? *first + 1 : count;
    for (std::size_t i = 0; i < upto; ++i)
        report.checked += counted[i];
    if (first) {
        report.pass = false;
        report.witness = witness[*first];
    }
    return report;
}

VerificationReport schur_star_check(const SchurEquation& eq, int n, const SearchOptions& options)
{
    return schur_star_check(eq, schur_avoider_coloring(eq, n), options);
}

} // namespace addramsey
