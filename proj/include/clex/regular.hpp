#pragma once

#include <optional>
#include <vector>

#include "clex/layered_graph.hpp"
#include "clex/model.hpp"

namespace clex {

// Domain-consistent filter for "the word X is accepted by dfa", applied to
// scratch domains. Returns false iff no accepted word remains.
bool filter_regular(const Dfa& dfa, std::vector<Domain>& doms);

// Lex-least / lex-greatest accepted word within doms, or nullopt.
std::optional<std::vector<Value>> regular_min(const Dfa& dfa,
                                              const std::vector<Domain>& doms);
std::optional<std::vector<Value>> regular_max(const Dfa& dfa,
                                              const std::vector<Domain>& doms);

class RegularPropagator : public Propagator {
  public:
    RegularPropagator(std::vector<int> vars, Dfa dfa);
    PropStatus propagate(VarStore& store) override;
    const std::vector<int>& scope() const override { return vars_; }
    int priority() const override { return 1; }
    const Dfa& dfa() const { return dfa_; }

  private:
    std::vector<int> vars_;
    Dfa dfa_;
};
PropagatorHandle post_regular(Model& m, std::vector<int> vars, Dfa dfa);

}  // namespace clex
