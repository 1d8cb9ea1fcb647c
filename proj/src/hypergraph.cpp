#include "addramsey/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace addramsey {

bool is_prime(std::int64_t p) noexcept
{
    if (p < 2)
        return false;
    for (std::int64_t q = 2; q * q <= p; ++q)
        if (p % q == 0)
            return false;
    return true;
}

namespace {

    std::int64_t reduce(std::int64_t x, std::int64_t p) { return ((x % p) + p) % p; }

    std::int64_t inverse(std::int64_t x, std::int64_t p)
    {
        // p is prime: x^(p-2)
        std::int64_t result = 1, base = x % p, e = p - 2;
        while (e > 0) {
            if (e & 1)
                result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return result;
    }

} // namespace

ModularTripleEquation::ModularTripleEquation(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t p)
    : p_(p)
{
    if (!is_prime(p))
        throw std::invalid_argument("modular equation: modulus must be prime");
    if (p > 46340)
        throw std::invalid_argument("modular equation: modulus too large");
    a_ = reduce(a, p);
    b_ = reduce(b, p);
    c_ = reduce(c, p);
    if (a_ == 0 || b_ == 0 || c_ == 0)
        throw std::invalid_argument("modular equation: coefficients must be invertible mod p");
}

bool ModularTripleEquation::satisfied(std::int64_t x, std::int64_t y, std::int64_t z) const noexcept
{
    return reduce(a_ * x + b_ * y + c_ * z, p_) == 0;
}

Hypergraph3::Hypergraph3(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)),
      incidence_(static_cast<std::size_t>(std::max(vertex_count, 0)))
{
    if (vertex_count < 0)
        throw std::invalid_argument("hypergraph: negative vertex count");
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        auto& e = edges_[i];
        std::sort(e.begin(), e.end());
        if (e[0] < 0 || e[2] >= vertex_count || e[0] == e[1] || e[1] == e[2])
            throw std::invalid_argument("hypergraph: edge needs three distinct vertices in range");
        for (int v : e)
            incidence_[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
    }
}

int Hypergraph3::max_degree() const noexcept
{
    std::size_t best = 0;
    for (const auto& inc : incidence_)
        best = std::max(best, inc.size());
    return static_cast<int>(best);
}

int SolutionHypergraph::pair_index(int u, int v) const
{
    const int p = static_cast<int>(equation.p());
    if (u == v || u < 0 || v < 0 || u >= p || v >= p)
        throw std::invalid_argument("pair_index: need distinct residues");
    if (u > v)
        std::swap(u, v);
    // EdgeColoring::index on vertices u+1, v+1
    return static_cast<int>(EdgeColoring::index(p, u + 1, v + 1));
}

SolutionHypergraph build_solution_hypergraph(const ModularTripleEquation& eq)
{
    const int p = static_cast<int>(eq.p());
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(EdgeColoring::pair_count(p));
    for (int u = 0; u < p; ++u)
        for (int v = u + 1; v < p; ++v)
            pairs.emplace_back(u, v);

    const std::int64_t neg_c_inv = reduce(-inverse(eq.c(), eq.p()), eq.p());
    std::set<std::array<int, 3>> sets;
    for (int x = 0; x < p; ++x) {
        for (int y = 0; y < p; ++y) {
            if (x == y)
                continue;
            const auto z = static_cast<int>(reduce((eq.a() * x + eq.b() * y) % eq.p() * neg_c_inv, eq.p()));
            if (z == x || z == y)
                continue;
            std::array<int, 3> s{x, y, z};
            std::sort(s.begin(), s.end());
            sets.insert(s);
        }
    }

    std::vector<std::array<int, 3>> solutions(sets.begin(), sets.end());
    std::vector<Hypergraph3::Edge> edges;
    edges.reserve(solutions.size());
    for (const auto& s : solutions) {
        auto idx = [p](int u, int v) { return static_cast<int>(EdgeColoring::index(p, u + 1, v + 1)); };
        edges.push_back({idx(s[0], s[1]), idx(s[0], s[2]), idx(s[1], s[2])});
    }
    Hypergraph3 graph(static_cast<int>(pairs.size()), std::move(edges));
    return SolutionHypergraph{eq, std::move(pairs), std::move(solutions), std::move(graph)};
}

const char* to_string(ColoringOutcome outcome) noexcept
{
    switch (outcome) {
    case ColoringOutcome::Found: return "found";
    case ColoringOutcome::NotFound: return "not-found";
    case ColoringOutcome::BudgetExceeded: return "budget-exceeded";
    }
    return "not-found";
}

bool is_proper_coloring(const Hypergraph3& h, const std::vector<int>& colors)
{
    if (colors.size() != static_cast<std::size_t>(h.vertex_count()))
        return false;
    for (const auto& e : h.edges())
        if (colors[e[0]] == colors[e[1]] && colors[e[1]] == colors[e[2]])
            return false;
    return true;
}

namespace {

    class HypergraphSearch {
    public:
        HypergraphSearch(const Hypergraph3& h, int max_colors, std::uint64_t budget)
            : h_(h), max_colors_(max_colors), budget_(budget), colors_(static_cast<std::size_t>(h.vertex_count()), 0)
        {
        }

        HypergraphColoring run()
        {
            HypergraphColoring result;
            const bool found = place(0, 0);
            result.nodes = budget_.used();
            if (found) {
                result.outcome = ColoringOutcome::Found;
                result.colors = colors_;
            } else {
                result.outcome = budget_.exhausted() ? ColoringOutcome::BudgetExceeded : ColoringOutcome::NotFound;
            }
            return result;
        }

    private:
        bool allowed(int v, int c) const
        {
            for (int ei : h_.incident(v)) {
                const auto& e = h_.edges()[static_cast<std::size_t>(ei)];
                if (e[2] != v)
                    continue; // not all endpoints colored yet
                if (colors_[e[0]] == c && colors_[e[1]] == c)
                    return false;
            }
            return true;
        }

        bool place(int v, int used)
        {
            if (v == h_.vertex_count())
                return true;
            const int top = std::min(max_colors_, used + 1);
            for (int c = 1; c <= top; ++c) {
                if (!budget_.charge())
                    return false;
                if (!allowed(v, c))
                    continue;
                colors_[static_cast<std::size_t>(v)] = c;
                if (place(v + 1, std::max(used, c)))
                    return true;
                if (budget_.exhausted())
                    return false;
            }
            colors_[static_cast<std::size_t>(v)] = 0;
            return false;
        }

        const Hypergraph3& h_;
        int max_colors_;
        NodeBudget budget_;
        std::vector<int> colors_;
    };

} // namespace

HypergraphColoring color_hypergraph(const Hypergraph3& h, int max_colors, std::uint64_t budget)
{
    if (max_colors < 1)
        throw std::invalid_argument("color_hypergraph: need at least one color");
    auto result = HypergraphSearch(h, max_colors, budget).run();
    if (result.outcome == ColoringOutcome::Found && !is_proper_coloring(h, result.colors))
        throw std::logic_error("color_hypergraph: search produced an improper coloring");
    return result;
}

EdgeColoring to_edge_coloring(const SolutionHypergraph& h, const std::vector<int>& colors, int max_colors)
{
    if (colors.size() != h.pairs.size())
        throw std::invalid_argument("to_edge_coloring: one color per pair required");
    std::vector<std::uint8_t> c(colors.begin(), colors.end());
    return EdgeColoring(static_cast<int>(h.equation.p()), max_colors, std::move(c));
}

} // namespace addramsey
