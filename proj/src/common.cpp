#include "addramsey/common.hpp"

#include <cstdlib>
#include <string>

namespace addramsey {

std::uint64_t default_budget()
{
    if (const char* env = std::getenv("RAMSEY_BUDGET")) {
        try {
            std::size_t pos = 0;
            const unsigned long long v = std::stoull(env, &pos);
            if (pos == std::string(env).size() && v > 0)
                return v;
        }
        catch (...) {
        }
    }
    return kDefaultBudget;
}

const char* to_string(NumberKind kind) noexcept
{
    switch (kind) {
    case NumberKind::Exact: return "exact";
    case NumberKind::LowerBound: return "lower-bound";
    case NumberKind::Unknown: return "unknown";
    }
    return "unknown";
}

} // namespace addramsey
