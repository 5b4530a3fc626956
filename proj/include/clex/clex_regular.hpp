#pragma once

#include <vector>

#include "clex/layered_graph.hpp"
#include "clex/model.hpp"

namespace clex {

// Mark every alive, non-removed arc lying on some path from (layer, state)
// to a final node of the last layer.
void mark_consistent_arcs(LayeredGraph& g, int layer, int state);

// Domain consistency of Regular(dfa, X) and (lb <=lex X) on the store vars
// xs, computed by support marking on the layered graph. The bound word lb
// is arbitrary; the X == lb case is taken only when the walk along lb stays
// on alive arcs. clex_ub_regular is the dual for (X <=lex ub).
bool clex_lb_regular(VarStore& s, const std::vector<int>& xs, const Dfa& dfa,
                     const std::vector<Value>& lb);
bool clex_ub_regular(VarStore& s, const std::vector<int>& xs, const Dfa& dfa,
                     const std::vector<Value>& ub);

// Regular(X) and Regular(Y) and X <=lex Y through layered-graph marking.
class RegularClexPropagator : public Propagator {
  public:
    RegularClexPropagator(std::vector<int> xs, std::vector<int> ys, Dfa dfa);
    PropStatus propagate(VarStore& store) override;
    const std::vector<int>& scope() const override { return scope_; }
    int priority() const override { return 2; }

  private:
    std::vector<int> xs_, ys_, scope_;
    Dfa dfa_;
};
PropagatorHandle post_clex_regular(Model& m, std::vector<int> xs,
                                   std::vector<int> ys, Dfa dfa);

// DFA accepting the interleaving x1 y1 ... xn yn iff dfa_x accepts x,
// dfa_y accepts y and x <=lex y. Only reachable states that can still
// reach a final state are kept. The three-argument form checks that both
// automata only use labels from `alphabet` (throws std::invalid_argument).
Dfa build_product_dfa(const Dfa& dfa_x, const Dfa& dfa_y);
Dfa build_product_dfa(const Dfa& dfa_x, const Dfa& dfa_y,
                      const std::vector<Value>& alphabet);

// Post the product encoding: one Regular propagator over the interleaved
// variables x1 y1 ... xn yn.
PropagatorHandle post_clex_regular_product(Model& m,
                                           const std::vector<int>& xs,
                                           const std::vector<int>& ys,
                                           const Dfa& dfa);

}  // namespace clex
