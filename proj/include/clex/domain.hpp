#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

namespace clex {

using Value = int;

// Finite set of integer values, kept sorted ascending.
class Domain {
  public:
    Domain() = default;
    Domain(std::initializer_list<Value> vs);
    explicit Domain(std::vector<Value> vs);  // sorts and dedups
    static Domain interval(Value lo, Value hi);

    bool empty() const { return vals_.empty(); }
    int size() const { return static_cast<int>(vals_.size()); }
    bool singleton() const { return vals_.size() == 1; }
    Value min() const { return vals_.front(); }
    Value max() const { return vals_.back(); }
    Value value() const;  // the single value; domain must be singleton
    bool contains(Value v) const;
    std::optional<Value> next_geq(Value v) const;
    std::optional<Value> prev_leq(Value v) const;

    // Mutators return true iff the domain changed.
    bool remove(Value v);
    bool remove_below(Value v);  // keeps values >= v
    bool remove_above(Value v);  // keeps values <= v
    bool intersect(const Domain& other);
    bool keep_only(const std::vector<Value>& sorted_vals);
    void assign(Value v);  // pre: contains(v)

    const std::vector<Value>& values() const { return vals_; }
    auto begin() const { return vals_.begin(); }
    auto end() const { return vals_.end(); }
    bool operator==(const Domain&) const = default;

  private:
    std::vector<Value> vals_;
};

}  // namespace clex
