#pragma once

#include "addramsey/common.hpp"

#include <cstdint>
#include <vector>

namespace addramsey::detail {

/// Colors items 0..N-1 in order with colors 1..r (first-use order), rejecting
/// a partial coloring when some forbidden set ends up monochromatic. Each set
/// is registered at its last item: forbidden[t] lists the other members, all
/// with index < t. prefix[m - 1] is the item count of size m; sizes increase.
struct PrefixProblem {
    int colors = 2;
    std::vector<std::vector<std::vector<int>>> forbidden;
    std::vector<std::size_t> prefix;
};

struct PrefixOutcome {
    NumberKind kind = NumberKind::Unknown;
    int value = 0;                  // threshold (Exact) or lower bound
    int best = 0;                   // largest size shown avoidable
    std::vector<std::uint8_t> witness; // coloring of the first prefix[best-1] items
    std::uint64_t nodes = 0;
};

class PrefixSearch {
public:
    PrefixSearch(const PrefixProblem& problem, std::uint64_t budget)
        : p_(problem), budget_(budget), color_(problem.forbidden.size(), 0)
    {
    }

    PrefixOutcome run()
    {
        PrefixOutcome out;
        const bool full = dfs(0, 0);
        out.nodes = budget_.used();
        out.best = best_;
        out.witness = witness_;
        const int top = static_cast<int>(p_.prefix.size());
        if (full) {
            out.kind = NumberKind::LowerBound;
            out.value = top + 1;
        } else if (budget_.exhausted()) {
            out.kind = NumberKind::Unknown;
            out.value = best_ + 1;
        } else {
            out.kind = NumberKind::Exact;
            out.value = best_ + 1;
        }
        return out;
    }

private:
    void record(std::size_t t)
    {
        // items [0, t) colored: note every newly completed size
        while (best_ < static_cast<int>(p_.prefix.size()) && p_.prefix[static_cast<std::size_t>(best_)] <= t) {
            ++best_;
            witness_.assign(color_.begin(), color_.begin() + static_cast<std::ptrdiff_t>(p_.prefix[static_cast<std::size_t>(best_ - 1)]));
        }
    }

    bool dfs(std::size_t t, int used)
    {
        record(t);
        if (t == color_.size())
            return true;
        const int top = used + 1 < p_.colors ? used + 1 : p_.colors;
        for (int c = 1; c <= top; ++c) {
            if (!budget_.charge())
                return false;
            bool ok = true;
            for (const auto& set : p_.forbidden[t]) {
                bool mono = true;
                for (int j : set) {
                    if (color_[static_cast<std::size_t>(j)] != c) {
                        mono = false;
                        break;
                    }
                }
                if (mono) {
                    ok = false;
                    break;
                }
            }
            if (!ok)
                continue;
            color_[t] = static_cast<std::uint8_t>(c);
            if (dfs(t + 1, c > used ? c : used))
                return true;
            if (budget_.exhausted())
                return false;
        }
        color_[t] = 0;
        return false;
    }

    const PrefixProblem& p_;
    NodeBudget budget_;
    std::vector<std::uint8_t> color_;
    int best_ = 0;
    std::vector<std::uint8_t> witness_;
};

} // namespace addramsey::detail
