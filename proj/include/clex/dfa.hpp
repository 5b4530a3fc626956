#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "clex/domain.hpp"

namespace clex {

// Deterministic finite automaton over integer labels. The transition map
// is partial: a missing (state, label) pair rejects.
struct Dfa {
    struct Arc {
        Value label;
        int to;
        bool operator==(const Arc&) const = default;
    };

    int num_states = 0;
    int initial = 0;
    std::vector<int> finals;             // sorted ascending, unique
    std::vector<std::vector<Arc>> next;  // next[s] sorted by label

    bool is_final(int s) const;
    // Target state, or -1 when no transition exists.
    int step(int s, Value label) const;
    bool accepts(const std::vector<Value>& word) const;
    std::vector<Value> alphabet() const;  // sorted unique labels

    // Throws std::invalid_argument on out-of-range states or a duplicate
    // (from, label) pair.
    void add_arc(int from, Value label, int to);

    bool operator==(const Dfa&) const = default;
};

Dfa make_dfa(int num_states, int initial, std::vector<int> finals);

// Text format, one automaton per stream:
//   states K initial I finals F1 F2 ...
//   from label to
// with arcs sorted by (from, label). Parsing a formatted automaton yields
// an equal Dfa; parse errors carry the 1-based line number.
Dfa parse_dfa(std::istream& in);
Dfa parse_dfa_file(const std::string& path);
std::string format_dfa(const Dfa& d);

}  // namespace clex
