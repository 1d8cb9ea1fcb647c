#include "addramsey/tree.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <thread>

namespace addramsey {

namespace {

    constexpr std::size_t kMaxTreeNodes = std::size_t{1} << 26;

} // namespace

std::size_t tree_node_count(int k, int height)
{
    if (k < 1 || height < 0)
        throw std::invalid_argument("tree: need k >= 1 and height >= 0");
    std::size_t total = 0, level = 1;
    for (int l = 0; l <= height; ++l) {
        total += level;
        if (total > kMaxTreeNodes)
            throw std::invalid_argument("tree: too many nodes");
        level *= static_cast<std::size_t>(k);
    }
    return total;
}

TreeShape::TreeShape(int k, int height) : k_(k), height_(height)
{
    tree_node_count(k, height); // validates
    offsets_.push_back(0);
    std::size_t level = 1;
    for (int l = 0; l <= height; ++l) {
        offsets_.push_back(offsets_.back() + level);
        level *= static_cast<std::size_t>(k);
    }
}

int TreeShape::level_of(std::size_t node) const
{
    if (node >= node_count())
        throw std::out_of_range("tree: node out of range");
    const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), node);
    return static_cast<int>(it - offsets_.begin()) - 1;
}

std::size_t TreeShape::child(std::size_t node, int j) const
{
    const int l = level_of(node);
    if (l >= height_ || j < 1 || j > k_)
        throw std::out_of_range("tree: no such child");
    return offsets_[l + 1] + (node - offsets_[l]) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(j - 1);
}

std::size_t TreeShape::parent(std::size_t node) const
{
    const int l = level_of(node);
    if (l == 0)
        throw std::out_of_range("tree: root has no parent");
    return offsets_[l - 1] + (node - offsets_[l]) / static_cast<std::size_t>(k_);
}

TreeWord TreeShape::word(std::size_t node) const
{
    int l = level_of(node);
    TreeWord w(static_cast<std::size_t>(l));
    std::size_t pos = node - offsets_[l];
    for (int i = l; i-- > 0;) {
        w[static_cast<std::size_t>(i)] = static_cast<int>(pos % static_cast<std::size_t>(k_)) + 1;
        pos /= static_cast<std::size_t>(k_);
    }
    return w;
}

std::size_t TreeShape::index(const TreeWord& word) const
{
    if (word.size() > static_cast<std::size_t>(height_))
        throw std::out_of_range("tree: word longer than height");
    std::size_t pos = 0;
    for (int letter : word) {
        if (letter < 1 || letter > k_)
            throw std::out_of_range("tree: letter out of range");
        pos = pos * static_cast<std::size_t>(k_) + static_cast<std::size_t>(letter - 1);
    }
    return offsets_[word.size()] + pos;
}

std::pair<std::size_t, std::size_t> TreeShape::descendants_at(std::size_t root, int level) const
{
    const int l = level_of(root);
    if (level < l || level > height_)
        return {0, 0};
    std::size_t span = 1;
    for (int i = l; i < level; ++i)
        span *= static_cast<std::size_t>(k_);
    const std::size_t first = offsets_[level] + (root - offsets_[l]) * span;
    return {first, first + span};
}

bool TreeShape::in_subtree(std::size_t root, std::size_t node) const
{
    const auto [first, last] = descendants_at(root, level_of(node));
    return first <= node && node < last;
}

std::string to_string(const TreeWord& word)
{
    if (word.empty())
        return "λ";
    std::string s;
    for (int letter : word) {
        if (!s.empty() && letter > 9)
            s += '.';
        s += std::to_string(letter);
    }
    return s;
}

TreeColoring::TreeColoring(int k, int height, int c, std::vector<std::uint8_t> colors)
    : shape_(k, height), c_(c), colors_(std::move(colors))
{
    if (c < 1 || c > 255)
        throw std::invalid_argument("tree coloring: need 1 <= c <= 255");
    if (colors_.size() != shape_.node_count())
        throw std::invalid_argument("tree coloring: expected one color per node");
    for (auto x : colors_)
        if (x < 1 || x > c)
            throw std::invalid_argument("tree coloring: color out of range");
}

TreeColoring TreeColoring::constant(int k, int height, int c, int color)
{
    return TreeColoring(k, height, c, std::vector<std::uint8_t>(tree_node_count(k, height), static_cast<std::uint8_t>(color)));
}

std::optional<StarWitness> find_balanced_star(const TreeColoring& t)
{
    const auto& shape = t.shape();
    const int k = shape.k();
    std::vector<std::size_t> picked(static_cast<std::size_t>(k));
    for (std::size_t r = 0; r < shape.node_count(); ++r) {
        const int lr = shape.level_of(r);
        const int col = t.color(r);
        for (int level = lr + 1; level <= shape.height(); ++level) {
            bool all = true;
            for (int j = 1; j <= k && all; ++j) {
                const auto [first, last] = shape.descendants_at(shape.child(r, j), level);
                std::size_t v = first;
                while (v < last && t.color(v) != col)
                    ++v;
                if (v == last)
                    all = false;
                else
                    picked[static_cast<std::size_t>(j - 1)] = v;
            }
            if (!all)
                continue;
            StarWitness w;
            w.root = shape.word(r);
            w.level = level;
            w.color = col;
            for (int j = 1; j <= k; ++j) {
                auto word = shape.word(picked[static_cast<std::size_t>(j - 1)]);
                w.tails.emplace_back(word.begin() + static_cast<std::ptrdiff_t>(lr) + 1, word.end());
            }
            return w;
        }
    }
    return std::nullopt;
}

TreeEmbedding TreeEmbedding::identity(int k, int height)
{
    TreeEmbedding e;
    e.k = k;
    e.source_height = e.target_height = height;
    for (int l = 0; l <= height; ++l)
        e.levels.push_back(l);
    const auto n = tree_node_count(k, height);
    for (std::size_t v = 0; v < n; ++v)
        e.image.push_back(v);
    return e;
}

TreeEmbedding TreeEmbedding::from_star(const TreeShape& target, const StarWitness& star)
{
    if (star.tails.size() != static_cast<std::size_t>(target.k()))
        throw std::invalid_argument("from_star: need one tail per child");
    TreeEmbedding e;
    e.k = target.k();
    e.source_height = 1;
    e.target_height = target.height();
    e.levels = {static_cast<int>(star.root.size()), star.level};
    e.image.push_back(target.index(star.root));
    for (int j = 1; j <= target.k(); ++j) {
        auto w = star.root;
        w.push_back(j);
        const auto& tail = star.tails[static_cast<std::size_t>(j - 1)];
        w.insert(w.end(), tail.begin(), tail.end());
        e.image.push_back(target.index(w));
    }
    return e;
}

EmbeddingReport verify_embedding(const TreeEmbedding& e, const TreeColoring& target)
{
    EmbeddingReport rep;
    auto fail = [&](const char* what) {
        rep.violation = what;
        return rep;
    };
    const auto& shape = target.shape();
    if (e.k != shape.k() || e.target_height != shape.height() || e.source_height < 0)
        return fail("shape");
    if (e.levels.size() != static_cast<std::size_t>(e.source_height) + 1)
        return fail("shape");
    if (e.image.size() != tree_node_count(e.k, e.source_height))
        return fail("shape");
    for (std::size_t i = 0; i < e.levels.size(); ++i) {
        if (e.levels[i] < 0 || e.levels[i] > shape.height() || (i > 0 && e.levels[i] <= e.levels[i - 1]))
            return fail("levels-increasing");
    }
    const TreeShape source(e.k, e.source_height);
    for (std::size_t s = 0; s < e.image.size(); ++s) {
        if (e.image[s] >= shape.node_count())
            return fail("shape");
        if (shape.level_of(e.image[s]) != e.levels[static_cast<std::size_t>(source.level_of(s))])
            return fail("level");
    }
    for (std::size_t s = 1; s < e.image.size(); ++s) {
        const std::size_t p = source.parent(s);
        const int j = static_cast<int>((s - source.level_offset(source.level_of(s))) % static_cast<std::size_t>(e.k)) + 1;
        if (!shape.in_subtree(shape.child(e.image[p], j), e.image[s]))
            return fail("subtree");
    }
    rep.valid = true;
    rep.color = target.color(e.image[0]);
    rep.monochromatic = std::all_of(e.image.begin(), e.image.end(), [&](std::size_t v) { return target.color(v) == rep.color; });
    if (!rep.monochromatic)
        rep.color = 0;
    return rep;
}

TreeEmbedding compose(const TreeEmbedding& g, const TreeEmbedding& f)
{
    if (f.k != g.k || f.target_height != g.source_height)
        throw std::invalid_argument("compose: shapes do not chain");
    TreeEmbedding e;
    e.k = f.k;
    e.source_height = f.source_height;
    e.target_height = g.target_height;
    for (int l : f.levels)
        e.levels.push_back(g.levels.at(static_cast<std::size_t>(l)));
    for (std::size_t v : f.image)
        e.image.push_back(g.image.at(v));
    return e;
}

namespace {

    class EmbeddingSearch {
    public:
        EmbeddingSearch(const TreeColoring& t, int m) : t_(t), shape_(t.shape()), m_(m), memo_(shape_.node_count(), 0) {}

        std::optional<TreeEmbedding> run()
        {
            const int h = shape_.height();
            for (int x0 = 0; x0 + m_ <= h; ++x0) {
                const std::size_t first = shape_.level_offset(x0);
                const std::size_t last = first + shape_.level_size(x0);
                for (std::size_t root = first; root < last; ++root) {
                    levels_.assign(1, x0);
                    if (auto e = try_sequences(root))
                        return e;
                }
            }
            return std::nullopt;
        }

    private:
        std::optional<TreeEmbedding> try_sequences(std::size_t root)
        {
            if (static_cast<int>(levels_.size()) == m_ + 1) {
                std::fill(memo_.begin(), memo_.end(), 0);
                color_ = t_.color(root);
                if (!feasible(root, 0))
                    return std::nullopt;
                return build(root);
            }
            const int h = shape_.height();
            const int remaining = m_ + 1 - static_cast<int>(levels_.size());
            for (int x = levels_.back() + 1; x + remaining - 1 <= h; ++x) {
                levels_.push_back(x);
                if (auto e = try_sequences(root))
                    return e;
                levels_.pop_back();
            }
            return std::nullopt;
        }

        bool feasible(std::size_t v, int depth)
        {
            auto& slot = memo_[v];
            if (slot != 0)
                return slot > 0;
            bool ok = t_.color(v) == color_;
            if (ok && depth < m_) {
                for (int j = 1; j <= shape_.k() && ok; ++j)
                    ok = least_feasible(shape_.child(v, j), depth + 1).has_value();
            }
            slot = ok ? 1 : -1;
            return ok;
        }

        std::optional<std::size_t> least_feasible(std::size_t sub, int depth)
        {
            const auto [first, last] = shape_.descendants_at(sub, levels_[static_cast<std::size_t>(depth)]);
            for (std::size_t w = first; w < last; ++w)
                if (feasible(w, depth))
                    return w;
            return std::nullopt;
        }

        TreeEmbedding build(std::size_t root)
        {
            TreeEmbedding e;
            e.k = shape_.k();
            e.source_height = m_;
            e.target_height = shape_.height();
            e.levels = levels_;
            const TreeShape source(e.k, m_);
            e.image.assign(source.node_count(), 0);
            e.image[0] = root;
            for (std::size_t s = 0; s < source.node_count(); ++s) {
                const int depth = source.level_of(s);
                if (depth == m_)
                    break;
                for (int j = 1; j <= e.k; ++j)
                    e.image[source.child(s, j)] = *least_feasible(shape_.child(e.image[s], j), depth + 1);
            }
            return e;
        }

        const TreeColoring& t_;
        const TreeShape& shape_;
        int m_;
        std::vector<int> levels_;
        std::vector<signed char> memo_;
        int color_ = 0;
    };

} // namespace

std::optional<TreeEmbedding> find_mono_embedding(const TreeColoring& t, int target_height)
{
    if (target_height < 1)
        throw std::invalid_argument("find_mono_embedding: target height must be >= 1");
    if (target_height > t.height())
        return std::nullopt;
    return EmbeddingSearch(t, target_height).run();
}

namespace {

    class AlignedSearch {
    public:
        AlignedSearch(const TreeColoring& t, int m) : t_(t), shape_(t.shape()), m_(m) {}

        std::optional<TreeEmbedding> run()
        {
            for (int x0 = 0; x0 + m_ <= shape_.height(); ++x0) {
                const std::size_t first = shape_.level_offset(x0);
                for (std::size_t root = first; root < first + shape_.level_size(x0); ++root) {
                    color_ = t_.color(root);
                    levels_.assign(1, x0);
                    frontier_.assign(1, {root});
                    if (extend())
                        return build();
                }
            }
            return std::nullopt;
        }

    private:
        bool extend()
        {
            const int depth = static_cast<int>(levels_.size()) - 1;
            if (depth == m_)
                return true;
            const int from = levels_.back();
            const int remaining = m_ - depth;
            for (int next = from + 1; next + remaining - 1 <= shape_.height(); ++next) {
                TreeWord connector(static_cast<std::size_t>(next - from - 1), 1);
                for (;;) {
                    if (try_connector(next, connector))
                        return true;
                    if (!advance(connector))
                        break;
                }
            }
            return false;
        }

        bool try_connector(int next, const TreeWord& connector)
        {
            std::vector<std::size_t> images;
            for (std::size_t v : frontier_.back()) {
                for (int j = 1; j <= shape_.k(); ++j) {
                    std::size_t w = shape_.child(v, j);
                    for (int letter : connector)
                        w = shape_.child(w, letter);
                    if (t_.color(w) != color_)
                        return false;
                    images.push_back(w);
                }
            }
            levels_.push_back(next);
            frontier_.push_back(std::move(images));
            if (extend())
                return true;
            levels_.pop_back();
            frontier_.pop_back();
            return false;
        }

        bool advance(TreeWord& word) const
        {
            for (std::size_t i = word.size(); i-- > 0;) {
                if (word[i] < shape_.k()) {
                    ++word[i];
                    return true;
                }
                word[i] = 1;
            }
            return false;
        }

        TreeEmbedding build() const
        {
            TreeEmbedding e;
            e.k = shape_.k();
            e.source_height = m_;
            e.target_height = shape_.height();
            e.levels = levels_;
            for (const auto& level : frontier_)
                e.image.insert(e.image.end(), level.begin(), level.end());
            return e;
        }

        const TreeColoring& t_;
        const TreeShape& shape_;
        int m_;
        int color_ = 0;
        std::vector<int> levels_;
        std::vector<std::vector<std::size_t>> frontier_;
    };

} // namespace

std::optional<TreeEmbedding> find_aligned_mono_embedding(const TreeColoring& t, int target_height)
{
    if (target_height < 1)
        throw std::invalid_argument("find_aligned_mono_embedding: target height must be >= 1");
    if (target_height > t.height())
        return std::nullopt;
    return AlignedSearch(t, target_height).run();
}

namespace {

    struct BranchOutcome {
        bool full = false;
        bool exhausted = false;
        int best = -1;
        std::vector<std::uint8_t> witness;
        std::uint64_t nodes = 0;
    };

    // Colors T_n in BFS order; a node colored like an ancestor a at level L
    // bumps the count for its subtree of a, and the coloring is rejected once
    // every subtree of a has a node of a's color at level L.
    class BalanceSearch {
    public:
        BalanceSearch(const TreeShape& shape, int c, std::uint64_t budget, std::vector<std::uint8_t> forced)
            : shape_(shape), c_(c), k_(shape.k()), levels_(shape.height() + 1), budget_(budget),
              forced_(std::move(forced)), color_(shape.node_count(), 0), ancestors_(shape.node_count())
        {
            for (std::size_t v = 1; v < shape.node_count(); ++v) {
                std::size_t cur = v;
                while (cur != 0) {
                    const std::size_t p = shape.parent(cur);
                    const int l = shape.level_of(cur);
                    const int j = static_cast<int>((cur - shape.level_offset(l)) % static_cast<std::size_t>(k_));
                    ancestors_[v].push_back({p, j});
                    cur = p;
                }
            }
            count_.assign(shape.node_count() * static_cast<std::size_t>(levels_) * static_cast<std::size_t>(k_), 0);
            covered_.assign(shape.node_count() * static_cast<std::size_t>(levels_), 0);
        }

        BranchOutcome run()
        {
            BranchOutcome out;
            out.full = dfs(0, 0);
            out.exhausted = budget_.exhausted();
            out.best = best_;
            out.witness = witness_;
            out.nodes = budget_.used();
            return out;
        }

    private:
        struct Anc {
            std::size_t node;
            int branch; // 0-based child index of node on the path
        };

        void record(std::size_t t)
        {
            while (best_ < shape_.height() && shape_.level_offset(best_ + 2) <= t) {
                ++best_;
                witness_.assign(color_.begin(), color_.begin() + static_cast<std::ptrdiff_t>(shape_.level_offset(best_ + 1)));
            }
        }

        // Applies v := col; returns false (with nothing applied) on a star.
        bool apply(std::size_t v, int col)
        {
            const int lv = shape_.level_of(v);
            const auto& anc = ancestors_[v];
            std::size_t done = 0;
            bool ok = true;
            for (; done < anc.size(); ++done) {
                const auto& a = anc[done];
                if (color_[a.node] != col)
                    continue;
                const std::size_t cell = a.node * static_cast<std::size_t>(levels_) + static_cast<std::size_t>(lv);
                if (count_[cell * static_cast<std::size_t>(k_) + static_cast<std::size_t>(a.branch)]++ == 0
                    && ++covered_[cell] == k_) {
                    ++done;
                    ok = false;
                    break;
                }
            }
            if (!ok) {
                undo(v, col, done);
                return false;
            }
            color_[v] = static_cast<std::uint8_t>(col);
            return true;
        }

        void undo(std::size_t v, int col, std::size_t upto)
        {
            const int lv = shape_.level_of(v);
            const auto& anc = ancestors_[v];
            for (std::size_t i = 0; i < upto; ++i) {
                const auto& a = anc[i];
                if (color_[a.node] != col)
                    continue;
                const std::size_t cell = a.node * static_cast<std::size_t>(levels_) + static_cast<std::size_t>(lv);
                if (--count_[cell * static_cast<std::size_t>(k_) + static_cast<std::size_t>(a.branch)] == 0)
                    --covered_[cell];
            }
        }

        bool dfs(std::size_t t, int used)
        {
            record(t);
            if (t == color_.size())
                return true;
            int lo = 1, hi = std::min(c_, used + 1);
            if (t < forced_.size())
                lo = hi = forced_[t];
            for (int col = lo; col <= hi; ++col) {
                if (!budget_.charge())
                    return false;
                if (!apply(t, col))
                    continue;
                if (dfs(t + 1, std::max(used, col)))
                    return true;
                undo(t, col, ancestors_[t].size());
                color_[t] = 0;
                if (budget_.exhausted())
                    return false;
            }
            return false;
        }

        const TreeShape& shape_;
        int c_;
        int k_;
        int levels_;
        NodeBudget budget_;
        std::vector<std::uint8_t> forced_;
        std::vector<std::uint8_t> color_;
        std::vector<std::vector<Anc>> ancestors_;
        std::vector<std::uint32_t> count_;
        std::vector<int> covered_;
        int best_ = -1;
        std::vector<std::uint8_t> witness_;
    };

} // namespace

NumberResult<TreeColoring> f_exact(int k, int c, int n_max, std::uint64_t budget, const SearchOptions& options)
{
    if (k < 1 || c < 1 || n_max < 0)
        throw std::invalid_argument("f_exact: need k, c >= 1 and n_max >= 0");
    const TreeShape shape(k, n_max);

    std::vector<std::vector<std::uint8_t>> prefixes;
    if (shape.node_count() == 1)
        prefixes.push_back({1});
    else
        for (int b = 1; b <= std::min(c, 2); ++b)
            prefixes.push_back({1, static_cast<std::uint8_t>(b)});

    std::vector<BranchOutcome> branches(prefixes.size());
    auto run_branch = [&](std::size_t i) { branches[i] = BalanceSearch(shape, c, budget, prefixes[i]).run(); };
    if (options.threads > 1 && prefixes.size() > 1) {
        std::vector<std::jthread> pool;
        for (std::size_t i = 0; i < prefixes.size(); ++i)
            pool.emplace_back(run_branch, i);
    } else {
        for (std::size_t i = 0; i < prefixes.size(); ++i)
            run_branch(i);
    }

    NumberResult<TreeColoring> result;
    int best = -1;
    const BranchOutcome* source = nullptr;
    bool exhausted = false, full = false;
    for (const auto& b : branches) {
        result.nodes += b.nodes;
        exhausted = exhausted || b.exhausted;
        if (b.full && !full) {
            full = true;
            source = &b;
        }
        if (!full && b.best > best) {
            best = b.best;
            source = &b;
        }
    }
    if (full) {
        result.kind = NumberKind::LowerBound;
        result.value = n_max + 1;
        best = n_max;
    } else {
        result.kind = exhausted ? NumberKind::Unknown : NumberKind::Exact;
        result.value = best + 1;
    }
    if (best >= 0 && source) {
        TreeColoring cert(k, best, c, std::vector<std::uint8_t>(source->witness.begin(),
                                                             source->witness.begin() + static_cast<std::ptrdiff_t>(tree_node_count(k, best))));
        if (find_balanced_star(cert))
            throw std::logic_error("f_exact: certificate is 1-balanced");
        result.certificate = std::move(cert);
    }
    return result;
}

} // namespace addramsey
