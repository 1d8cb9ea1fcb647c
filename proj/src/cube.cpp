#include "addramsey/cube.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace addramsey {

HilbertCube::HilbertCube(std::int64_t base, std::vector<std::int64_t> increments)
    : base_(base), increments_(std::move(increments))
{
    if (base_ < 1)
        throw std::invalid_argument("cube: base must be >= 1");
    if (increments_.empty())
        throw std::invalid_argument("cube: dimension must be >= 1");
    if (increments_.size() > 30)
        throw std::invalid_argument("cube: dimension above 30 not supported");
    for (auto d : increments_)
        if (d < 1)
            throw std::invalid_argument("cube: increments must be >= 1");
    std::sort(increments_.begin(), increments_.end());
}

std::vector<std::int64_t> HilbertCube::elements() const
{
    std::vector<std::int64_t> out{base_};
    out.reserve(std::size_t{1} << increments_.size());
    for (auto d : increments_) {
        const std::size_t half = out.size();
        for (std::size_t i = 0; i < half; ++i)
            out.push_back(out[i] + d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool HilbertCube::is_proper() const
{
    const auto e = elements();
    return std::adjacent_find(e.begin(), e.end()) == e.end();
}

std::vector<std::pair<std::int64_t, std::int64_t>> HilbertCube::edges() const
{
    const auto e = elements();
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
        throw std::invalid_argument("cube: edges of an improper cube are undefined");
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    out.reserve(e.size() * (e.size() - 1) / 2);
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j)
            out.emplace_back(e[i], e[j]);
    return out;
}

std::int64_t HilbertCube::max_element() const noexcept
{
    std::int64_t s = base_;
    for (auto d : increments_)
        s += d;
    return s;
}

bool is_monochromatic(const EdgeColoring& coloring, const HilbertCube& cube, int* color)
{
    const auto e = cube.elements();
    if (std::adjacent_find(e.begin(), e.end()) != e.end() || e.back() > coloring.n())
        return false;
    const int c = coloring.color(static_cast<int>(e[0]), static_cast<int>(e[1]));
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j)
            if (coloring.color(static_cast<int>(e[i]), static_cast<int>(e[j])) != c)
                return false;
    if (color)
        *color = c;
    return true;
}

namespace {

    // Depth-first walk over (d_1 <= d_2 <= ... <= d_k) for a fixed base, in
    // lexicographic order. A partial cube must already be proper and, when a
    // coloring is given, monochromatic: both properties are inherited by
    // every sub-cube, so failing prefixes are cut.
    class CubeWalk {
    public:
        CubeWalk(int n, int k, const EdgeColoring* coloring)
            : n_(n), k_(k), coloring_(coloring), present_(static_cast<std::size_t>(n) + 1, 0)
        {
        }

        // Returns false when the visitor asked to stop.
        bool run(std::int64_t base, const std::function<bool(std::int64_t, const std::vector<std::int64_t>&, int)>& visit)
        {
            elements_.assign(1, base);
            increments_.clear();
            present_[static_cast<std::size_t>(base)] = 1;
            color_ = 0;
            const bool keep_going = descend(base, 1, visit);
            present_[static_cast<std::size_t>(base)] = 0;
            return keep_going;
        }

    private:
        bool descend(std::int64_t top, std::int64_t dmin,
                     const std::function<bool(std::int64_t, const std::vector<std::int64_t>&, int)>& visit)
        {
            if (static_cast<int>(increments_.size()) == k_)
                return visit(elements_[0], increments_, color_);
            const std::size_t half = elements_.size();
            for (std::int64_t d = dmin; top + d <= n_; ++d) {
                bool ok = true;
                for (std::size_t i = 0; i < half && ok; ++i)
                    ok = present_[static_cast<std::size_t>(elements_[i] + d)] == 0;
                if (!ok)
                    continue;
                const int saved_color = color_;
                if (coloring_ && !shifted_copy_is_mono(half, d)) {
                    color_ = saved_color;
                    continue;
                }
                for (std::size_t i = 0; i < half; ++i) {
                    elements_.push_back(elements_[i] + d);
                    present_[static_cast<std::size_t>(elements_.back())] = 1;
                }
                increments_.push_back(d);
                const bool keep_going = descend(top + d, d, visit);
                increments_.pop_back();
                for (std::size_t i = 0; i < half; ++i) {
                    present_[static_cast<std::size_t>(elements_.back())] = 0;
                    elements_.pop_back();
                }
                color_ = saved_color;
                if (!keep_going)
                    return false;
            }
            return true;
        }

        // Checks every edge touching the translate elements_ + d against color_
        // (fixing color_ on the very first edge).
        bool shifted_copy_is_mono(std::size_t half, std::int64_t d)
        {
            for (std::size_t i = 0; i < half; ++i) {
                const int f = static_cast<int>(elements_[i] + d);
                for (std::size_t j = 0; j < half; ++j) {
                    const int g = static_cast<int>(elements_[j]);
                    const int c = coloring_->color(f, g);
                    if (color_ == 0)
                        color_ = c;
                    else if (c != color_)
                        return false;
                }
                for (std::size_t j = 0; j < i; ++j) {
                    const int g = static_cast<int>(elements_[j] + d);
                    if (coloring_->color(f, g) != color_)
                        return false;
                }
            }
            return true;
        }

        int n_;
        int k_;
        const EdgeColoring* coloring_;
        std::vector<char> present_;
        std::vector<std::int64_t> elements_;
        std::vector<std::int64_t> increments_;
        int color_ = 0;
    };

    void check_dimension(int k)
    {
        if (k < 1 || k > 30)
            throw std::invalid_argument("cube dimension must be in 1..30");
    }

} // namespace

CubeSearchResult find_mono_cube(const EdgeColoring& coloring, int k, const SearchOptions& options)
{
    check_dimension(k);
    const int n = coloring.n();
    CubeSearchResult result;
    if (n < 2)
        return result;

    // one slot per base a = 1..n-1; each worker writes only its own slot
    std::vector<std::optional<std::pair<HilbertCube, int>>> slots(static_cast<std::size_t>(n - 1));
    auto hit = [&](std::size_t i) {
        const std::int64_t base = static_cast<std::int64_t>(i) + 1;
        CubeWalk walk(n, k, &coloring);
        walk.run(base, [&](std::int64_t a, const std::vector<std::int64_t>& d, int color) {
            slots[i].emplace(HilbertCube(a, d), color);
            return false;
        });
        return slots[i].has_value();
    };
    if (auto first = first_hit(slots.size(), options.threads, hit)) {
        result.outcome = CubeOutcome::Found;
        result.cube = slots[*first]->first;
        result.color = slots[*first]->second;
    }
    return result;
}

void for_each_proper_cube(int n, int k, const std::function<bool(const HilbertCube&)>& visit)
{
    check_dimension(k);
    if (n < 2)
        return;
    CubeWalk walk(n, k, nullptr);
    for (std::int64_t a = 1; a < n; ++a) {
        const bool keep_going = walk.run(a, [&](std::int64_t base, const std::vector<std::int64_t>& d, int) {
            return visit(HilbertCube(base, d));
        });
        if (!keep_going)
            return;
    }
}

namespace {

    // Position of {u, v} (u < v) when edges are ordered by larger endpoint:
    // (1,2), (1,3), (2,3), (1,4), ... so that K_m occupies the first C(m,2).
    std::size_t search_position(int u, int v)
    {
        return static_cast<std::size_t>(v - 1) * static_cast<std::size_t>(v - 2) / 2
               + static_cast<std::size_t>(u - 1);
    }

    class CubeColoringSearch {
    public:
        CubeColoringSearch(int r, int k, int n_max, std::uint64_t budget)
            : r_(r), n_max_(n_max), budget_(budget),
              edges_(EdgeColoring::pair_count(n_max)), assigned_(edges_, 0),
              triggers_(edges_)
        {
            // each cube is checked when its last edge (in search order) is colored
            for_each_proper_cube(n_max, k, [&](const HilbertCube& cube) {
                const auto e = cube.elements();
                std::vector<std::size_t> positions;
                for (std::size_t i = 0; i < e.size(); ++i)
                    for (std::size_t j = i + 1; j < e.size(); ++j)
                        positions.push_back(search_position(static_cast<int>(e[i]), static_cast<int>(e[j])));
                const auto last = *std::max_element(positions.begin(), positions.end());
                std::erase(positions, last);
                triggers_[last].push_back(static_cast<std::uint32_t>(cube_edges_.size()));
                cube_edges_.push_back(std::move(positions));
                return true;
            });
        }

        NumberResult<EdgeColoring> run()
        {
            best_ = 1;
            certificate_ = EdgeColoring(1, r_, {});
            const bool complete = dfs(0, 0);
            NumberResult<EdgeColoring> result;
            result.nodes = budget_.used();
            result.certificate = certificate_;
            if (complete) {
                result.kind = NumberKind::LowerBound;
                result.value = n_max_ + 1;
            }
            else if (budget_.exhausted()) {
                result.kind = NumberKind::Unknown;
                result.value = best_ + 1;
            }
            else {
                result.kind = NumberKind::Exact;
                result.value = best_ + 1;
            }
            return result;
        }

    private:
        // true when every edge of K_{n_max} has been colored
        bool dfs(std::size_t p, int used)
        {
            if (best_ < n_max_ && p == EdgeColoring::pair_count(best_ + 1)) {
                ++best_;
                record_certificate();
            }
            if (p == edges_)
                return true;
            const int limit = std::min(r_, used + 1);
            for (int c = 1; c <= limit; ++c) {
                if (!budget_.charge())
                    return false;
                if (closes_mono_cube(p, c))
                    continue;
                assigned_[p] = static_cast<std::uint8_t>(c);
                const bool complete = dfs(p + 1, std::max(used, c));
                assigned_[p] = 0;
                if (complete || budget_.exhausted())
                    return complete;
            }
            return false;
        }

        bool closes_mono_cube(std::size_t p, int c) const
        {
            for (auto ci : triggers_[p]) {
                bool mono = true;
                for (auto e : cube_edges_[ci])
                    if (assigned_[e] != c) {
                        mono = false;
                        break;
                    }
                if (mono)
                    return true;
            }
            return false;
        }

        void record_certificate()
        {
            const int m = best_;
            std::vector<std::uint8_t> colors;
            colors.reserve(EdgeColoring::pair_count(m));
            for (int u = 1; u <= m; ++u)
                for (int v = u + 1; v <= m; ++v)
                    colors.push_back(assigned_[search_position(u, v)]);
            certificate_ = EdgeColoring(m, r_, std::move(colors));
        }

        int r_;
        int n_max_;
        NodeBudget budget_;
        std::size_t edges_;
        std::vector<std::uint8_t> assigned_;
        std::vector<std::vector<std::uint32_t>> triggers_;
        std::vector<std::vector<std::size_t>> cube_edges_;
        int best_ = 1;
        EdgeColoring certificate_{1, 1, {}};
    };

} // namespace

NumberResult<EdgeColoring> ramsey_cube_number(int r, int k, int n_max, std::uint64_t budget)
{
    if (r < 1 || r > 255)
        throw std::invalid_argument("ramsey_cube_number: r must be in 1..255");
    check_dimension(k);
    if (n_max < 1)
        throw std::invalid_argument("ramsey_cube_number: n_max must be >= 1");
    return CubeColoringSearch(r, k, n_max, budget).run();
}

Cnf export_cnf(int r, int k, int n)
{
    if (r < 1 || n < 1)
        throw std::invalid_argument("export_cnf: r and n must be >= 1");
    check_dimension(k);
    const std::size_t edges = EdgeColoring::pair_count(n);
    auto var = [r](std::size_t edge, int color) { return static_cast<int>(edge) * r + color; };

    Cnf cnf;
    cnf.num_vars = static_cast<int>(edges) * r;
    for (std::size_t e = 0; e < edges; ++e) {
        std::vector<int> alo;
        for (int c = 1; c <= r; ++c)
            alo.push_back(var(e, c));
        cnf.clauses.push_back(std::move(alo));
    }
    for (std::size_t e = 0; e < edges; ++e)
        for (int c1 = 1; c1 <= r; ++c1)
            for (int c2 = c1 + 1; c2 <= r; ++c2)
                cnf.clauses.push_back({-var(e, c1), -var(e, c2)});
    for_each_proper_cube(n, k, [&](const HilbertCube& cube) {
        const auto pairs = cube.edges();
        for (int c = 1; c <= r; ++c) {
            std::vector<int> clause;
            clause.reserve(pairs.size());
            for (const auto& [u, v] : pairs)
                clause.push_back(-var(EdgeColoring::index(n, static_cast<int>(u), static_cast<int>(v)), c));
            cnf.clauses.push_back(std::move(clause));
        }
        return true;
    });
    return cnf;
}

} // namespace addramsey
