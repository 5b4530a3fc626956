#include "clex/var_store.hpp"

#include "clex/util.hpp"

namespace clex {

int VarStore::add_var(Domain d) {
    CLEX_ASSERT(level() == 0);
    CLEX_ASSERT(!d.empty());
    doms_.push_back(std::move(d));
    saved_stamp_.push_back(0);
    dirty_flag_.push_back(0);
    return num_vars() - 1;
}

std::vector<Domain> VarStore::snapshot(const std::vector<int>& vars) const {
    std::vector<Domain> out;
    out.reserve(vars.size());
    for (int v : vars) out.push_back(doms_[v]);
    return out;
}

void VarStore::push_level() {
    marks_.push_back(trail_.size());
    ++epoch_;
}

void VarStore::pop_level() {
    CLEX_ASSERT(!marks_.empty());
    std::size_t mark = marks_.back();
    marks_.pop_back();
    while (trail_.size() > mark) {
        Saved& s = trail_.back();
        doms_[s.var] = std::move(s.dom);
        trail_.pop_back();
    }
    ++epoch_;
}

void VarStore::save(int v) {
    if (level() == 0) return;  // level-0 changes are permanent
    if (saved_stamp_[v] == epoch_) return;
    trail_.push_back({v, doms_[v]});
    saved_stamp_[v] = epoch_;
}

void VarStore::touch(int v) {
    if (!dirty_flag_[v]) {
        dirty_flag_[v] = 1;
        dirty_.push_back(v);
    }
}

bool VarStore::remove(int v, Value val) {
    if (!doms_[v].contains(val)) return !doms_[v].empty();
    save(v);
    doms_[v].remove(val);
    touch(v);
    return !doms_[v].empty();
}

bool VarStore::remove_below(int v, Value val) {
    if (doms_[v].empty() || doms_[v].min() >= val) return !doms_[v].empty();
    save(v);
    doms_[v].remove_below(val);
    touch(v);
    return !doms_[v].empty();
}

bool VarStore::remove_above(int v, Value val) {
    if (doms_[v].empty() || doms_[v].max() <= val) return !doms_[v].empty();
    save(v);
    doms_[v].remove_above(val);
    touch(v);
    return !doms_[v].empty();
}

bool VarStore::assign(int v, Value val) {
    if (doms_[v].singleton() && doms_[v].min() == val) return true;
    save(v);
    touch(v);
    if (!doms_[v].contains(val)) {
        doms_[v] = Domain{};
        return false;
    }
    doms_[v].assign(val);
    return true;
}

bool VarStore::keep_only(int v, const std::vector<Value>& sorted_vals) {
    Domain copy = doms_[v];
    if (!copy.keep_only(sorted_vals)) return true;  // unchanged
    save(v);
    doms_[v] = std::move(copy);
    touch(v);
    return !doms_[v].empty();
}

std::vector<int> VarStore::take_dirty() {
    std::vector<int> out = std::move(dirty_);
    dirty_.clear();
    for (int v : out) dirty_flag_[v] = 0;
    return out;
}

}  // namespace clex
