#pragma once

#include "addramsey/common.hpp"
#include "addramsey/edge_coloring.hpp"

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace addramsey {

/// a x + b y + c z = 0 over Z_p, with a, b, c invertible.
class ModularTripleEquation {
public:
    /// Throws unless p is prime and a, b, c are nonzero mod p. Coefficients
    /// are stored reduced into [1, p).
    ModularTripleEquation(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t p);

    std::int64_t a() const noexcept { return a_; }
    std::int64_t b() const noexcept { return b_; }
    std::int64_t c() const noexcept { return c_; }
    std::int64_t p() const noexcept { return p_; }

    bool satisfied(std::int64_t x, std::int64_t y, std::int64_t z) const noexcept;

private:
    std::int64_t a_, b_, c_, p_;
};

bool is_prime(std::int64_t p) noexcept;

/// A 3-uniform hypergraph on vertices 0..vertex_count-1.
class Hypergraph3 {
public:
    using Edge = std::array<int, 3>;

    /// Each edge must have three distinct in-range vertices; stored sorted.
    Hypergraph3(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const noexcept { return vertex_count_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<int>& incident(int v) const { return incidence_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(incident(v).size()); }
    int max_degree() const noexcept;

private:
    int vertex_count_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incidence_;
};

/// Vertices are the pairs {u < v} of residues mod p, indexed in row-major
/// order; one hyperedge per set {x, y, z} of three distinct residues that
/// solves the equation in some order.
struct SolutionHypergraph {
    ModularTripleEquation equation;
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::array<int, 3>> solutions; // sorted value sets, one per hyperedge
    Hypergraph3 graph;

    int pair_index(int u, int v) const;
};

SolutionHypergraph build_solution_hypergraph(const ModularTripleEquation& eq);

enum class ColoringOutcome { Found, NotFound, BudgetExceeded };

const char* to_string(ColoringOutcome outcome) noexcept;

struct HypergraphColoring {
    ColoringOutcome outcome = ColoringOutcome::NotFound;
    std::vector<int> colors; // 1-based, per vertex, when Found
    std::uint64_t nodes = 0;
};

/// True iff colors has one entry per vertex and no edge is monochromatic.
bool is_proper_coloring(const Hypergraph3& h, const std::vector<int>& colors);

/// Backtracking in vertex order, colors tried least-first with first-use
/// symmetry breaking. Found colorings are verified before returning.
HypergraphColoring color_hypergraph(const Hypergraph3& h, int max_colors, std::uint64_t budget);

/// The pair coloring as an edge coloring of K_p: residue x is vertex x + 1.
EdgeColoring to_edge_coloring(const SolutionHypergraph& h, const std::vector<int>& colors, int max_colors);

} // namespace addramsey
