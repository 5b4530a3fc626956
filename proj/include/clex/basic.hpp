#pragma once

#include <vector>

#include "clex/model.hpp"

namespace clex {

// X <=lex Y (non-strict), domain consistent. X and Y must not share vars.
class LexLeqPropagator : public Propagator {
  public:
    LexLeqPropagator(std::vector<int> xs, std::vector<int> ys);
    PropStatus propagate(VarStore& store) override;
    const std::vector<int>& scope() const override { return scope_; }
    int priority() const override { return 0; }

  private:
    std::vector<int> xs_, ys_, scope_;
};
PropagatorHandle post_lex_leq(Model& m, std::vector<int> xs,
                              std::vector<int> ys);

// l <= |{i : X[i] in V}| <= u, domain consistent.
class AmongPropagator : public Propagator {
  public:
    AmongPropagator(std::vector<int> vars, std::vector<Value> in_set, int l,
                    int u);
    PropStatus propagate(VarStore& store) override;
    const std::vector<int>& scope() const override { return vars_; }
    int priority() const override { return 0; }

  private:
    std::vector<int> vars_;
    std::vector<Value> in_set_;  // sorted
    int l_, u_;
};
PropagatorHandle post_among(Model& m, std::vector<int> vars,
                            std::vector<Value> in_set, int l, int u);

// |{i : X[i] in V}| >= demand, domain consistent.
class AtLeastPropagator : public Propagator {
  public:
    AtLeastPropagator(std::vector<int> vars, std::vector<Value> in_set,
                      int demand);
    PropStatus propagate(VarStore& store) override;
    const std::vector<int>& scope() const override { return vars_; }
    int priority() const override { return 0; }

  private:
    std::vector<int> vars_;
    std::vector<Value> in_set_;  // sorted
    int demand_;
};
PropagatorHandle post_at_least(Model& m, std::vector<int> vars,
                               std::vector<Value> in_set, int demand);

// Y = X + Z, domain consistent.
class SumEqPropagator : public Propagator {
  public:
    SumEqPropagator(int y, int x, int z);
    PropStatus propagate(VarStore& store) override;
    const std::vector<int>& scope() const override { return scope_; }
    int priority() const override { return 0; }

  private:
    int y_, x_, z_;
    std::vector<int> scope_;
};
PropagatorHandle post_sum_eq(Model& m, int y, int x, int z);

// Sequence(l,u,k,V) decomposed into one Among per window; the windows
// start at positions 1..n-k+1, so every full length-k window is covered.
std::vector<PropagatorHandle> post_sequence_decomposed(
    Model& m, const std::vector<int>& vars, std::vector<Value> in_set, int l,
    int u, int k);

}  // namespace clex
