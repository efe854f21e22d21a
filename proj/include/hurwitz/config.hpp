#pragma once

#include <stdexcept>
#include <string>

namespace hurwitz {

inline constexpr const char* kEngineVersion = "1.0.0";

struct EngineConfig {
    int max_degree = 7;
    int max_branch_points = 7;
    int forest_oracle_bound = 8;
    int threads = 1;
};

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hurwitz
