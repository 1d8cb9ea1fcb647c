#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

namespace addramsey {

/// Decision-tree node budget shared by every exhaustive search.
class NodeBudget {
public:
    explicit NodeBudget(std::uint64_t limit) noexcept : limit_(limit) {}

    /// Spend one node. Returns false once the limit has been passed.
    bool charge() noexcept { return ++used_ <= limit_; }

    bool exhausted() const noexcept { return used_ > limit_; }
    std::uint64_t used() const noexcept { return used_ > limit_ ? limit_ : used_; }
    std::uint64_t limit() const noexcept { return limit_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000ULL;

/// Reads RAMSEY_BUDGET, falling back to kDefaultBudget.
std::uint64_t default_budget();

struct SearchOptions {
    unsigned threads = 1;
};

/// Outcome of an exact threshold computation (n(r,k), GW, T, f).
enum class NumberKind { Exact, LowerBound, Unknown };

const char* to_string(NumberKind kind) noexcept;

/// `value` is the threshold when Exact. For LowerBound and Unknown it is the
/// smallest size not yet shown avoidable, so the true threshold is >= value.
/// `certificate` is an avoiding object of size value - 1.
template <class Certificate>
struct NumberResult {
    NumberKind kind = NumberKind::Unknown;
    int value = 0;
    std::optional<Certificate> certificate;
    std::uint64_t nodes = 0;
};

/// Least index in [0, count) with hit(i) true; indices are farmed out to
/// `threads` workers. Every index below the returned one has been evaluated,
/// so the answer does not depend on the thread count. `hit` must be safe to
/// call concurrently for distinct indices.
template <class Hit>
std::optional<std::size_t> first_hit(std::size_t count, unsigned threads, Hit&& hit)
{
    if (threads <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i)
            if (hit(i))
                return i;
        return std::nullopt;
    }

    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{count};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count || i >= best.load())
                return;
            if (hit(i)) {
                std::size_t cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        const unsigned n = threads < count ? threads : static_cast<unsigned>(count);
        for (unsigned t = 0; t < n; ++t)
            pool.emplace_back(worker);
    }
    const std::size_t found = best.load();
    if (found == count)
        return std::nullopt;
    return found;
}

} // namespace addramsey
