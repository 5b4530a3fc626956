#pragma once

#include <optional>
#include <vector>

#include "clex/clex_generic.hpp"
#include "clex/dfa.hpp"
#include "clex/model.hpp"

namespace clex {

// Every window of k consecutive positions holds between l and u values
// from in_set.
struct SequenceSpec {
    int l = 0;
    int u = 0;
    int k = 1;
    std::vector<Value> in_set{1};  // sorted ascending

    void validate() const;  // throws std::invalid_argument
};

// DFA over `alphabet` accepting exactly the words whose every length-k
// window carries l..u members of spec.in_set. States track the membership
// bits of the last k-1 symbols (fewer while the first window fills up).
Dfa build_sequence_dfa(const SequenceSpec& spec,
                       const std::vector<Value>& alphabet);

// Lex-least / lex-greatest word satisfying the sequence within doms.
std::optional<std::vector<Value>> check_consistency_min(
    const SequenceSpec& spec, const std::vector<Domain>& doms);
std::optional<std::vector<Value>> check_consistency_max(
    const SequenceSpec& spec, const std::vector<Domain>& doms);

// Boolean channel of a variable against the set V: bit 1 means the value
// lies in V. Valid only when max(D \ V) < min(V), i.e. the V values sit
// above every other value, which makes lex order of expanded words agree
// with lex order of bit words over the same domains. Comparisons between
// different domain vectors must always use expanded original values.
struct BoolChannel {
    static bool applicable(const Domain& d, const std::vector<Value>& v_set);
    static Domain bit_domain(const Domain& d, const std::vector<Value>& v_set);
    // Least / greatest original value of d with the given membership bit.
    static Value expand_min(int bit, const Domain& d,
                            const std::vector<Value>& v_set);
    static Value expand_max(int bit, const Domain& d,
                            const std::vector<Value>& v_set);
};

// Sequence(X) and Sequence(Y) and X <=lex Y, domain consistent in one run.
// Multi-valued domains go through BoolChannel; posting throws
// std::invalid_argument when some domain violates the channel condition.
class SequenceClexPropagator : public Propagator {
  public:
    SequenceClexPropagator(std::vector<int> xs, std::vector<int> ys,
                           SequenceSpec spec);
    PropStatus propagate(VarStore& store) override;
    const std::vector<int>& scope() const override { return scope_; }
    int priority() const override { return 2; }

  private:
    std::vector<int> xs_, ys_, scope_;
    SequenceSpec spec_;
    Dfa bit_dfa_;  // over {0,1}
};
PropagatorHandle post_clex_sequence(Model& m, std::vector<int> xs,
                                    std::vector<int> ys, SequenceSpec spec);

// Domain-consistent Sequence filter usable as a row constraint of the
// generic combined propagator.
class SequenceAdapter : public ConstraintAdapter {
  public:
    SequenceAdapter(SequenceSpec spec, std::vector<Value> alphabet);
    bool filter(std::vector<Domain>& doms) const override;
    const Dfa& dfa() const { return dfa_; }

  private:
    Dfa dfa_;
};

}  // namespace clex
