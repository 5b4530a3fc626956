#pragma once

#include <array>
#include <deque>
#include <memory>
#include <utility>
#include <vector>

#include "clex/var_store.hpp"

namespace clex {

enum class PropStatus {
    kFixpoint,  // at fixpoint for the current domains
    kEntailed,  // every remaining tuple satisfies the constraint
    kFailed,    // some variable lost all values
};

// A propagator prunes domains towards domain consistency for one
// constraint. propagate() must be monotone and idempotent, touch only
// variables in scope(), and report failure through its return value.
class Propagator {
  public:
    virtual ~Propagator() = default;
    virtual PropStatus propagate(VarStore& store) = 0;
    virtual const std::vector<int>& scope() const = 0;
    // Lower priorities run first: 0 cheap checks, 1 row constraints,
    // 2 heavy combined propagators.
    virtual int priority() const { return 1; }
};

struct PropagatorHandle {
    int id = -1;
    std::vector<int> scope;
    int priority = 1;
};

enum class Consistency { kConsistent, kFailed };

// Variables plus posted propagators, with a priority-bucketed propagation
// queue. Search must enter/leave decision levels through push_level() /
// pop_level() so entailment marks unwind together with the trail.
class Model {
  public:
    Model() = default;
    Model(Model&&) = default;
    Model& operator=(Model&&) = default;

    int add_var(Domain d) { return store_.add_var(std::move(d)); }
    VarStore& store() { return store_; }
    const VarStore& store() const { return store_; }
    int num_propagators() const { return static_cast<int>(props_.size()); }

    PropagatorHandle post(std::unique_ptr<Propagator> p);
    Consistency propagate_to_fixpoint();

    void push_level();
    void pop_level();

  private:
    void enqueue(int pid);
    void drain_dirty(int running_pid);

    VarStore store_;
    std::vector<std::unique_ptr<Propagator>> props_;
    std::vector<std::vector<int>> watchers_;  // per var
    std::array<std::deque<int>, 3> queue_;
    std::vector<char> queued_;
    std::vector<char> entailed_;
    std::vector<std::pair<int, int>> entailed_trail_;  // (pid, level marked)
};

int lex_compare(const std::vector<Value>& a, const std::vector<Value>& b);

}  // namespace clex
