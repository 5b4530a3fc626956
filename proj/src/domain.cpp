#include "clex/domain.hpp"

#include <algorithm>

#include "clex/util.hpp"

namespace clex {

Domain::Domain(std::initializer_list<Value> vs) : vals_(vs) {
    std::sort(vals_.begin(), vals_.end());
    vals_.erase(std::unique(vals_.begin(), vals_.end()), vals_.end());
}

Domain::Domain(std::vector<Value> vs) : vals_(std::move(vs)) {
    std::sort(vals_.begin(), vals_.end());
    vals_.erase(std::unique(vals_.begin(), vals_.end()), vals_.end());
}

Domain Domain::interval(Value lo, Value hi) {
    Domain d;
    d.vals_.reserve(lo <= hi ? static_cast<std::size_t>(hi - lo + 1) : 0);
    for (Value v = lo; v <= hi; ++v) d.vals_.push_back(v);
    return d;
}

Value Domain::value() const {
    CLEX_ASSERT(singleton());
    return vals_.front();
}

bool Domain::contains(Value v) const {
    return std::binary_search(vals_.begin(), vals_.end(), v);
}

std::optional<Value> Domain::next_geq(Value v) const {
    auto it = std::lower_bound(vals_.begin(), vals_.end(), v);
    if (it == vals_.end()) return std::nullopt;
    return *it;
}

std::optional<Value> Domain::prev_leq(Value v) const {
    auto it = std::upper_bound(vals_.begin(), vals_.end(), v);
    if (it == vals_.begin()) return std::nullopt;
    return *(it - 1);
}

bool Domain::remove(Value v) {
    auto it = std::lower_bound(vals_.begin(), vals_.end(), v);
    if (it == vals_.end() || *it != v) return false;
    vals_.erase(it);
    return true;
}

bool Domain::remove_below(Value v) {
    auto it = std::lower_bound(vals_.begin(), vals_.end(), v);
    if (it == vals_.begin()) return false;
    vals_.erase(vals_.begin(), it);
    return true;
}

bool Domain::remove_above(Value v) {
    auto it = std::upper_bound(vals_.begin(), vals_.end(), v);
    if (it == vals_.end()) return false;
    vals_.erase(it, vals_.end());
    return true;
}

bool Domain::intersect(const Domain& other) {
    return keep_only(other.vals_);
}

bool Domain::keep_only(const std::vector<Value>& sorted_vals) {
    std::vector<Value> out;
    out.reserve(vals_.size());
    std::set_intersection(vals_.begin(), vals_.end(), sorted_vals.begin(),
                          sorted_vals.end(), std::back_inserter(out));
    if (out.size() == vals_.size()) return false;
    vals_ = std::move(out);
    return true;
}

void Domain::assign(Value v) {
    CLEX_ASSERT(contains(v));
    vals_ = {v};
}

}  // namespace clex
