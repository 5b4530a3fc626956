#pragma once

#include <vector>

#include "clex/dfa.hpp"
#include "clex/domain.hpp"

namespace clex {

// Unfolding of a DFA over n positions: nodes are (layer, state) for layers
// 0..n, and an arc at layer i carries a value of doms[i] from layer i to
// layer i+1. After a successful build() the alive arcs are exactly those
// on some initial-to-final path, so alive labels per layer are the domain
// consistent values.
class LayeredGraph {
  public:
    struct Arc {
        int from, to;
        Value label;
        bool alive;    // on an accepting path through the given domains
        bool removed;  // scratch deletion used by the bound walks
        bool marked;   // support marking
    };

    // False iff the automaton accepts no word within doms.
    bool build(const Dfa& dfa, const std::vector<Domain>& doms);

    int positions() const { return n_; }
    int states() const { return q_; }
    const std::vector<Arc>& arcs(int layer) const { return arcs_[layer]; }
    std::vector<Arc>& arcs(int layer) { return arcs_[layer]; }
    // Range [begin, end) of `state`'s outgoing arcs in arcs(layer),
    // sorted by label.
    std::pair<int, int> state_range(int layer, int state) const;
    Arc* find_arc(int layer, int from, Value label);
    bool node_alive(int layer, int state) const;

    std::vector<Value> alive_labels(int layer) const;
    std::vector<Value> marked_labels(int layer) const;

  private:
    int n_ = 0, q_ = 0;
    std::vector<std::vector<Arc>> arcs_;         // per layer, sorted (from, label)
    std::vector<std::vector<int>> state_begin_;  // per layer, q_+1 offsets
    std::vector<std::vector<char>> fwd_, bwd_;   // node reachability
};

}  // namespace clex
