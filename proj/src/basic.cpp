#include "clex/basic.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <stdexcept>

#include "clex/util.hpp"

namespace clex {

namespace {

std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

bool intersects(const Domain& a, const Domain& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia == *ib) return true;
        if (*ia < *ib)
            ++ia;
        else
            ++ib;
    }
    return false;
}

bool is_member(const std::vector<Value>& sorted_set, Value v) {
    return std::binary_search(sorted_set.begin(), sorted_set.end(), v);
}

}  // namespace

// ---------------------------------------------------------------- LexLeq

LexLeqPropagator::LexLeqPropagator(std::vector<int> xs, std::vector<int> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)), scope_(concat(xs_, ys_)) {
    CLEX_ASSERT(xs_.size() == ys_.size());
}

PropStatus LexLeqPropagator::propagate(VarStore& s) {
    const int n = static_cast<int>(xs_.size());
    if (n == 0) return PropStatus::kEntailed;
    std::vector<Domain> dx = s.snapshot(xs_);
    std::vector<Domain> dy = s.snapshot(ys_);

    // Greatest X word vs least Y word: when even they are ordered, every
    // combination is.
    {
        int cmp = 0;
        for (int i = 0; i < n && cmp == 0; ++i) {
            if (dx[i].max() != dy[i].min())
                cmp = dx[i].max() < dy[i].min() ? -1 : 1;
        }
        if (cmp <= 0) return PropStatus::kEntailed;
    }

    // eq_pref[i]: positions before i can all be made pairwise equal.
    std::vector<char> eq_pref(n + 1, 0);
    eq_pref[0] = 1;
    for (int i = 0; i < n; ++i)
        eq_pref[i + 1] = eq_pref[i] && intersects(dx[i], dy[i]);
    const bool eq_all = eq_pref[n];

    // lt_pos[i]: the words can agree before i and split strictly at i.
    // suffix_lt[i]: some such split position exists at i or later.
    std::vector<char> lt_pos(n, 0), suffix_lt(n + 1, 0);
    int first_lt = n;
    for (int i = n - 1; i >= 0; --i) {
        lt_pos[i] = eq_pref[i] && dx[i].min() < dy[i].max();
        suffix_lt[i] = suffix_lt[i + 1] || lt_pos[i];
        if (lt_pos[i]) first_lt = i;
    }
    if (!suffix_lt[0] && !eq_all) return PropStatus::kFailed;

    // Positions after the first possible split are unconstrained.
    for (int i = 0; i <= first_lt && i < n; ++i) {
        const bool tail_free = suffix_lt[i + 1] || eq_all;
        std::vector<Value> keep_x;
        for (Value v : dx[i]) {
            if (eq_pref[i] &&
                (v < dy[i].max() || (tail_free && dy[i].contains(v))))
                keep_x.push_back(v);
        }
        if (!s.keep_only(xs_[i], keep_x)) return PropStatus::kFailed;
        std::vector<Value> keep_y;
        for (Value w : dy[i]) {
            if (eq_pref[i] &&
                (w > dx[i].min() || (tail_free && dx[i].contains(w))))
                keep_y.push_back(w);
        }
        if (!s.keep_only(ys_[i], keep_y)) return PropStatus::kFailed;
    }
    return PropStatus::kFixpoint;
}

PropagatorHandle post_lex_leq(Model& m, std::vector<int> xs,
                              std::vector<int> ys) {
    return m.post(
        std::make_unique<LexLeqPropagator>(std::move(xs), std::move(ys)));
}

// ----------------------------------------------------------------- Among

AmongPropagator::AmongPropagator(std::vector<int> vars,
                                 std::vector<Value> in_set, int l, int u)
    : vars_(std::move(vars)), in_set_(std::move(in_set)), l_(l), u_(u) {
    std::sort(in_set_.begin(), in_set_.end());
    in_set_.erase(std::unique(in_set_.begin(), in_set_.end()), in_set_.end());
    if (l_ > u_ || l_ < 0) throw std::invalid_argument("among: bad l..u");
}

PropStatus AmongPropagator::propagate(VarStore& s) {
    const int n = static_cast<int>(vars_.size());
    std::vector<Domain> d = s.snapshot(vars_);
    int forced_in = 0, possible_in = 0;
    std::vector<char> all_in(n, 0), any_in(n, 0);
    for (int i = 0; i < n; ++i) {
        bool all = true, any = false;
        for (Value v : d[i]) {
            if (is_member(in_set_, v))
                any = true;
            else
                all = false;
        }
        all_in[i] = all;
        any_in[i] = any;
        forced_in += all;
        possible_in += any;
    }
    if (forced_in > u_ || possible_in < l_) return PropStatus::kFailed;
    if (l_ <= forced_in && possible_in <= u_) return PropStatus::kEntailed;

    for (int i = 0; i < n; ++i) {
        const int c_in = forced_in - all_in[i];
        const int c_poss = possible_in - any_in[i];
        const bool in_ok = c_in + 1 <= u_ && c_poss + 1 >= l_;
        const bool out_ok = c_in <= u_ && c_poss >= l_;
        if (in_ok && out_ok) continue;
        std::vector<Value> keep;
        for (Value v : d[i]) {
            if (is_member(in_set_, v) ? in_ok : out_ok) keep.push_back(v);
        }
        if (!s.keep_only(vars_[i], keep)) return PropStatus::kFailed;
    }
    return PropStatus::kFixpoint;
}

PropagatorHandle post_among(Model& m, std::vector<int> vars,
                            std::vector<Value> in_set, int l, int u) {
    return m.post(std::make_unique<AmongPropagator>(std::move(vars),
                                                    std::move(in_set), l, u));
}

// --------------------------------------------------------------- AtLeast

AtLeastPropagator::AtLeastPropagator(std::vector<int> vars,
                                     std::vector<Value> in_set, int demand)
    : vars_(std::move(vars)), in_set_(std::move(in_set)), demand_(demand) {
    std::sort(in_set_.begin(), in_set_.end());
    in_set_.erase(std::unique(in_set_.begin(), in_set_.end()), in_set_.end());
}

PropStatus AtLeastPropagator::propagate(VarStore& s) {
    if (demand_ <= 0) return PropStatus::kEntailed;
    const int n = static_cast<int>(vars_.size());
    std::vector<Domain> d = s.snapshot(vars_);
    int forced_in = 0, possible_in = 0;
    std::vector<char> any_in(n, 0);
    for (int i = 0; i < n; ++i) {
        bool all = true, any = false;
        for (Value v : d[i]) {
            if (is_member(in_set_, v))
                any = true;
            else
                all = false;
        }
        any_in[i] = any;
        forced_in += all && any;
        possible_in += any;
    }
    if (possible_in < demand_) return PropStatus::kFailed;
    if (forced_in >= demand_) return PropStatus::kEntailed;
    if (possible_in == demand_) {
        // Every variable that can contribute must.
        for (int i = 0; i < n; ++i) {
            if (!any_in[i]) continue;
            std::vector<Value> keep;
            for (Value v : d[i])
                if (is_member(in_set_, v)) keep.push_back(v);
            if (!s.keep_only(vars_[i], keep)) return PropStatus::kFailed;
        }
    }
    return PropStatus::kFixpoint;
}

PropagatorHandle post_at_least(Model& m, std::vector<int> vars,
                               std::vector<Value> in_set, int demand) {
    return m.post(std::make_unique<AtLeastPropagator>(
        std::move(vars), std::move(in_set), demand));
}

// ----------------------------------------------------------------- SumEq

SumEqPropagator::SumEqPropagator(int y, int x, int z)
    : y_(y), x_(x), z_(z), scope_{y, x, z} {}

PropStatus SumEqPropagator::propagate(VarStore& s) {
    const Domain dy = s.dom(y_), dx = s.dom(x_), dz = s.dom(z_);
    std::vector<Value> keep_y, keep_x, keep_z;
    for (Value v : dy) {
        for (Value a : dx) {
            if (dz.contains(v - a)) {
                keep_y.push_back(v);
                break;
            }
        }
    }
    for (Value a : dx) {
        for (Value b : dz) {
            if (dy.contains(a + b)) {
                keep_x.push_back(a);
                break;
            }
        }
    }
    for (Value b : dz) {
        for (Value a : dx) {
            if (dy.contains(a + b)) {
                keep_z.push_back(b);
                break;
            }
        }
    }
    if (!s.keep_only(y_, keep_y) || !s.keep_only(x_, keep_x) ||
        !s.keep_only(z_, keep_z))
        return PropStatus::kFailed;
    if (s.dom(y_).singleton() && s.dom(x_).singleton() &&
        s.dom(z_).singleton())
        return PropStatus::kEntailed;
    return PropStatus::kFixpoint;
}

PropagatorHandle post_sum_eq(Model& m, int y, int x, int z) {
    return m.post(std::make_unique<SumEqPropagator>(y, x, z));
}

// ---------------------------------------------------- Sequence decomposed

std::vector<PropagatorHandle> post_sequence_decomposed(
    Model& m, const std::vector<int>& vars, std::vector<Value> in_set, int l,
    int u, int k) {
    if (k < 1 || l < 0 || l > u || u > k)
        throw std::invalid_argument("sequence: bad l..u within k");
    std::vector<PropagatorHandle> handles;
    const int n = static_cast<int>(vars.size());
    for (int j = 0; j + k <= n; ++j) {
        std::vector<int> window(vars.begin() + j, vars.begin() + j + k);
        handles.push_back(post_among(m, std::move(window), in_set, l, u));
    }
    return handles;
}

}  // namespace clex
