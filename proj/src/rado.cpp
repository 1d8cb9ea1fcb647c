#include "addramsey/rado.hpp"

#include "prefix_search.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace addramsey {

VertexColoring::VertexColoring(int n, int c, std::vector<std::uint8_t> colors)
    : n_(n), c_(c), colors_(std::move(colors))
{
    if (n < 0 || c < 1 || c > 255)
        throw std::invalid_argument("vertex coloring: need n >= 0 and 1 <= c <= 255");
    if (colors_.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("vertex coloring: expected n colors");
    for (auto x : colors_)
        if (x < 1 || x > c)
            throw std::invalid_argument("vertex coloring: color out of range");
}

VertexColoring VertexColoring::from_rule(int n, int c, const std::function<int(int)>& rule)
{
    std::vector<std::uint8_t> colors;
    colors.reserve(static_cast<std::size_t>(std::max(n, 0)));
    for (int v = 1; v <= n; ++v)
        colors.push_back(static_cast<std::uint8_t>(rule(v)));
    return VertexColoring(n, c, std::move(colors));
}

LinearPatternSystem::LinearPatternSystem(int arity, std::vector<std::vector<std::int64_t>> forms, bool distinct)
    : arity_(arity), forms_(std::move(forms)), distinct_(distinct)
{
    if (arity < 1)
        throw std::invalid_argument("pattern system: arity must be >= 1");
    for (const auto& f : forms_) {
        if (f.size() != static_cast<std::size_t>(arity))
            throw std::invalid_argument("pattern system: form length must equal arity");
        if (std::all_of(f.begin(), f.end(), [](std::int64_t v) { return v == 0; }))
            throw std::invalid_argument("pattern system: form has no variable");
    }
}

LinearPatternSystem LinearPatternSystem::rado_helper()
{
    // x3 = x1 + x2, x4 = x2 - x1
    return LinearPatternSystem(4, {{1, 1, -1, 0}, {-1, 1, 0, -1}});
}

LinearPatternSystem LinearPatternSystem::schur()
{
    return LinearPatternSystem(3, {{1, 1, -1}});
}

bool LinearPatternSystem::satisfied(const std::vector<std::int64_t>& x) const
{
    if (x.size() != static_cast<std::size_t>(arity_))
        return false;
    for (const auto& f : forms_) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < x.size(); ++j)
            s += f[j] * x[j];
        if (s != 0)
            return false;
    }
    if (distinct_) {
        auto sorted = x;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            return false;
    }
    return true;
}

namespace {

    class SolutionWalk {
    public:
        using Visit = std::function<bool(const std::vector<std::int64_t>&)>;
        using Accept = std::function<bool(std::size_t, std::int64_t)>;

        SolutionWalk(const LinearPatternSystem& sys, int n, Accept accept)
            : sys_(sys), n_(n), accept_(std::move(accept)), x_(static_cast<std::size_t>(sys.arity()), 0),
              closing_(static_cast<std::size_t>(sys.arity()))
        {
            const auto& forms = sys.forms();
            for (std::size_t f = 0; f < forms.size(); ++f) {
                std::size_t last = 0;
                for (std::size_t j = 0; j < forms[f].size(); ++j)
                    if (forms[f][j] != 0)
                        last = j;
                closing_[last].push_back(f);
            }
        }

        bool run(const Visit& visit) { return place(0, visit); }

    private:
        std::int64_t partial(std::size_t f, std::size_t upto) const
        {
            std::int64_t s = 0;
            for (std::size_t j = 0; j < upto; ++j)
                s += sys_.forms()[f][j] * x_[j];
            return s;
        }

        bool usable(std::size_t i, std::int64_t v) const
        {
            if (v < 1 || v > n_)
                return false;
            if (sys_.distinct())
                for (std::size_t j = 0; j < i; ++j)
                    if (x_[j] == v)
                        return false;
            return !accept_ || accept_(i, v);
        }

        // true when visit asked to stop
        bool place(std::size_t i, const Visit& visit)
        {
            if (i == x_.size())
                return !visit(x_);
            const auto& closing = closing_[i];
            if (!closing.empty()) {
                const std::size_t f0 = closing.front();
                const std::int64_t coef = sys_.forms()[f0][i];
                const std::int64_t rest = partial(f0, i);
                if (rest % coef != 0)
                    return false;
                const std::int64_t v = -rest / coef;
                if (!usable(i, v))
                    return false;
                x_[i] = v;
                for (std::size_t f : closing)
                    if (partial(f, i + 1) != 0)
                        return false;
                return place(i + 1, visit);
            }
            for (std::int64_t v = 1; v <= n_; ++v) {
                if (!usable(i, v))
                    continue;
                x_[i] = v;
                if (place(i + 1, visit))
                    return true;
            }
            return false;
        }

        const LinearPatternSystem& sys_;
        std::int64_t n_;
        Accept accept_;
        std::vector<std::int64_t> x_;
        std::vector<std::vector<std::size_t>> closing_;
    };

} // namespace

void for_each_solution(const LinearPatternSystem& sys, int n,
                       const std::function<bool(const std::vector<std::int64_t>&)>& visit)
{
    SolutionWalk(sys, n, nullptr).run(visit);
}

std::optional<std::vector<std::int64_t>> find_mono_distinct_solution(const VertexColoring& coloring,
                                                                     const LinearPatternSystem& sys)
{
    std::vector<std::int64_t> first_value(1, 0);
    auto accept = [&](std::size_t i, std::int64_t v) {
        if (i == 0) {
            first_value[0] = v;
            return true;
        }
        return coloring.color(v) == coloring.color(first_value[0]);
    };
    std::optional<std::vector<std::int64_t>> found;
    SolutionWalk(sys, coloring.n(), accept).run([&](const std::vector<std::int64_t>& x) {
        found = x;
        return false;
    });
    return found;
}

NumberResult<VertexColoring> pattern_number(const LinearPatternSystem& sys, int c, int t_max, std::uint64_t budget)
{
    if (c < 1 || t_max < 0)
        throw std::invalid_argument("pattern_number: need c >= 1 and t_max >= 0");

    detail::PrefixProblem problem;
    problem.colors = c;
    problem.forbidden.resize(static_cast<std::size_t>(t_max));
    for (int m = 1; m <= t_max; ++m)
        problem.prefix.push_back(static_cast<std::size_t>(m));
    std::set<std::vector<int>> seen;
    for_each_solution(sys, t_max, [&](const std::vector<std::int64_t>& x) {
        std::vector<int> members;
        for (auto v : x)
            members.push_back(static_cast<int>(v - 1));
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        if (!seen.insert(members).second)
            return true;
        const int last = members.back();
        members.pop_back();
        problem.forbidden[static_cast<std::size_t>(last)].push_back(std::move(members));
        return true;
    });

    const auto out = detail::PrefixSearch(problem, budget).run();
    NumberResult<VertexColoring> result;
    result.kind = out.kind;
    result.value = out.value;
    result.nodes = out.nodes;
    VertexColoring cert(out.best, c, out.witness);
    if (find_mono_distinct_solution(cert, sys))
        throw std::logic_error("pattern_number: certificate contains a monochromatic solution");
    result.certificate = std::move(cert);
    return result;
}

NumberResult<VertexColoring> rado_helper_number(int t_max, std::uint64_t budget)
{
    return pattern_number(LinearPatternSystem::rado_helper(), 2, t_max, budget);
}

} // namespace addramsey
