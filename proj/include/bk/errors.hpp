#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bk {

// Thrown when a search runs past its configured node budget. Callers must
// treat this as "no answer", never as a verdict either way.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& where, std::uint64_t nodes)
        : std::runtime_error(where + ": node budget exceeded"), nodes(nodes)
    {
    }

    std::uint64_t nodes;
};

} // namespace bk
