#pragma once

#include "addramsey/common.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace addramsey {

/// A node of T_n^(k): the word of child letters from the root, 1..k each.
using TreeWord = std::vector<int>;

/// Perfect k-ary tree of height n with nodes numbered in BFS order: the root
/// is 0 and level L starts at (k^L - 1)/(k - 1).
class TreeShape {
public:
    TreeShape(int k, int height);

    int k() const noexcept { return k_; }
    int height() const noexcept { return height_; }
    std::size_t node_count() const noexcept { return offsets_.back(); }
    std::size_t level_offset(int level) const { return offsets_.at(static_cast<std::size_t>(level)); }
    std::size_t level_size(int level) const { return level_offset(level + 1) - level_offset(level); }

    int level_of(std::size_t node) const;
    /// The j-th child, j in 1..k.
    std::size_t child(std::size_t node, int j) const;
    std::size_t parent(std::size_t node) const;

    TreeWord word(std::size_t node) const;
    std::size_t index(const TreeWord& word) const;

    /// Whether `node` lies in the subtree rooted at `root` (a node is in its
    /// own subtree).
    bool in_subtree(std::size_t root, std::size_t node) const;

    /// Nodes of `root`'s subtree at an absolute level, as [first, last).
    std::pair<std::size_t, std::size_t> descendants_at(std::size_t root, int level) const;

private:
    int k_;
    int height_;
    std::vector<std::size_t> offsets_; // height + 2 entries
};

/// (k^(n+1) - 1)/(k - 1), or n + 1 for k = 1.
std::size_t tree_node_count(int k, int height);

std::string to_string(const TreeWord& word);

/// A c-coloring of T_n^(k), colors 1..c in BFS order.
class TreeColoring {
public:
    TreeColoring(int k, int height, int c, std::vector<std::uint8_t> colors);

    static TreeColoring constant(int k, int height, int c, int color = 1);

    const TreeShape& shape() const noexcept { return shape_; }
    int k() const noexcept { return shape_.k(); }
    int height() const noexcept { return shape_.height(); }
    int c() const noexcept { return c_; }
    const std::vector<std::uint8_t>& colors() const noexcept { return colors_; }
    int color(std::size_t node) const { return colors_[node]; }
    int color(const TreeWord& word) const { return colors_[shape_.index(word)]; }

    friend bool operator==(const TreeColoring& a, const TreeColoring& b)
    {
        return a.k() == b.k() && a.height() == b.height() && a.c_ == b.c_ && a.colors_ == b.colors_;
    }

private:
    TreeShape shape_;
    int c_;
    std::vector<std::uint8_t> colors_;
};

/// r, r.1.s_1, ..., r.k.s_k all one color, the last k nodes on level `level`.
struct StarWitness {
    TreeWord root;
    int level = 0;
    std::vector<TreeWord> tails; // s_1..s_k
    int color = 0;
};

/// Least star by (|r|, r, level, s_1, ..., s_k); nullopt iff the coloring is
/// not 1-balanced.
std::optional<StarWitness> find_balanced_star(const TreeColoring& t);

/// Level map `levels` (source level i -> target level) and node map `image`
/// (source BFS index -> target BFS index) from T_m^(k) into T_h^(k).
struct TreeEmbedding {
    int k = 2;
    int source_height = 0;
    int target_height = 0;
    std::vector<int> levels;
    std::vector<std::size_t> image;

    static TreeEmbedding identity(int k, int height);
    static TreeEmbedding from_star(const TreeShape& target, const StarWitness& star);
};

struct EmbeddingReport {
    bool valid = false;
    std::string violation; // empty when valid
    bool monochromatic = false;
    int color = 0;
};

EmbeddingReport verify_embedding(const TreeEmbedding& e, const TreeColoring& target);

/// g after f: f maps A into B, g maps B into C. Throws on mismatched shapes.
TreeEmbedding compose(const TreeEmbedding& g, const TreeEmbedding& f);

/// Least monochromatic embedding of the height-m tree: ordered by root level,
/// then root, then the level sequence, then node images in BFS order. For
/// m = 1 this is the embedding of find_balanced_star's witness.
std::optional<TreeEmbedding> find_mono_embedding(const TreeColoring& t, int target_height);

/// Like find_mono_embedding, restricted to embeddings whose connector depends
/// only on the level: phi(s.j) = phi(s).j.u_l for every s on source level l.
/// Ordered by root level, root, then (x_1, u_0), (x_2, u_1), ...
std::optional<TreeEmbedding> find_aligned_mono_embedding(const TreeColoring& t, int target_height);

/// f(k, c): least height n at which every c-coloring of T_n^(k) is 1-balanced.
/// Backtracks over node colors in BFS order (root color 1, first-use color
/// order) down to height n_max. The search is split by the color of node 1;
/// each branch has its own `budget`, so the answer does not depend on
/// options.threads. The certificate is an unbalanced coloring of height
/// value - 1.
NumberResult<TreeColoring> f_exact(int k, int c, int n_max, std::uint64_t budget, const SearchOptions& options = {});

} // namespace addramsey
