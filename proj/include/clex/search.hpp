#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "clex/model.hpp"

namespace clex {

enum class Outcome { kSolution, kUnsat, kLimitReached };

struct SearchLimits {
    std::optional<std::chrono::milliseconds> time;
    std::optional<long> max_nodes;
};

struct SearchStats {
    long nodes = 0;       // root plus every value assignment tried
    long backtracks = 0;  // assignment attempts whose propagation failed
    long failures = 0;    // propagation failures, root included
    std::chrono::milliseconds wall{0};
    Outcome outcome = Outcome::kUnsat;
    std::vector<Value> solution;  // per var, when outcome == kSolution
};

// Depth-first search with k-way branching: vars are assigned in `order`
// (singletons skipped), values tried ascending. `order` must list every
// variable of the model exactly once.
SearchStats solve(Model& m, const std::vector<int>& order,
                  const SearchLimits& limits = {});

}  // namespace clex
