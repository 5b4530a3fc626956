#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "clex/clex_sequence.hpp"
#include "clex/dfa.hpp"
#include "clex/domain.hpp"

// Brute-force ground truth for tests. Constraints are plain predicates
// over a full assignment (indexed by variable), evaluated by enumeration;
// nothing here shares logic with the propagation code paths it checks.
namespace clex::oracle {

using Tuple = std::vector<Value>;
using Checker = std::function<bool(const Tuple&)>;

Checker lex_leq(std::vector<int> xs, std::vector<int> ys);
Checker among(std::vector<int> vars, std::vector<Value> in_set, int l, int u);
Checker sequence(std::vector<int> vars, SequenceSpec spec);
Checker regular_word(std::vector<int> vars, Dfa dfa);
Checker sum_eq(int y, int x, int z);
Checker at_least(std::vector<int> vars, std::vector<Value> in_set,
                 int demand);

struct DcResult {
    bool satisfiable = false;
    std::vector<Domain> domains;  // empty domains when unsatisfiable
};

inline constexpr std::uint64_t kDefaultCap = 10'000'000;

// Saturating product of the domain sizes.
std::uint64_t domain_product(const std::vector<Domain>& doms);

// Exact domain consistency of the conjunction by full enumeration.
// Throws std::length_error when domain_product(doms) exceeds cap.
DcResult brute_force_dc(const std::vector<Domain>& doms,
                        const std::vector<Checker>& checkers,
                        std::uint64_t cap = kDefaultCap);

// First satisfying tuple in ascending / descending lex order of the
// enumeration, so the scan stops at the answer.
std::optional<Tuple> brute_force_lex_min(const std::vector<Domain>& doms,
                                         const std::vector<Checker>& checkers,
                                         std::uint64_t cap = kDefaultCap);
std::optional<Tuple> brute_force_lex_max(const std::vector<Domain>& doms,
                                         const std::vector<Checker>& checkers,
                                         std::uint64_t cap = kDefaultCap);

}  // namespace clex::oracle
