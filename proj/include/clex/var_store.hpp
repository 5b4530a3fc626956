#pragma once

#include <cstdint>
#include <vector>

#include "clex/domain.hpp"

namespace clex {

// Finite-domain variables with a trail. Domain mutations made after a
// push_level() are undone exactly by the matching pop_level().
class VarStore {
  public:
    int add_var(Domain d);  // only before search (at level 0)
    int num_vars() const { return static_cast<int>(doms_.size()); }
    const Domain& dom(int v) const { return doms_[v]; }
    std::vector<Domain> snapshot(const std::vector<int>& vars) const;

    int level() const { return static_cast<int>(marks_.size()); }
    void push_level();
    void pop_level();

    // Trailed mutators. Each returns false iff the domain became empty.
    bool remove(int v, Value val);
    bool remove_below(int v, Value val);
    bool remove_above(int v, Value val);
    bool assign(int v, Value val);
    bool keep_only(int v, const std::vector<Value>& sorted_vals);

    // Vars changed since the last call; each reported once.
    std::vector<int> take_dirty();

  private:
    void save(int v);
    void touch(int v);

    struct Saved {
        int var;
        Domain dom;
    };
    std::vector<Domain> doms_;
    std::vector<Saved> trail_;
    std::vector<std::size_t> marks_;
    std::vector<std::uint64_t> saved_stamp_;
    std::uint64_t epoch_ = 1;
    std::vector<int> dirty_;
    std::vector<char> dirty_flag_;
};

}  // namespace clex
