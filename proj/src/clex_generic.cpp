#include "clex/clex_generic.hpp"

#include <algorithm>

#include "clex/regular.hpp"
#include "clex/util.hpp"

namespace clex {

// ------------------------------------------------------------- adapters

bool TrueAdapter::filter(std::vector<Domain>& doms) const {
    for (const Domain& d : doms)
        if (d.empty()) return false;
    return true;
}

bool SumRowAdapter::filter(std::vector<Domain>& doms) const {
    for (const Domain& d : doms)
        if (d.empty()) return false;
    const Domain dy = doms[y_], dx = doms[x_], dz = doms[z_];
    std::vector<Value> keep;
    for (Value v : dy) {
        for (Value a : dx) {
            if (dz.contains(v - a)) {
                keep.push_back(v);
                break;
            }
        }
    }
    doms[y_].keep_only(keep);
    keep.clear();
    for (Value a : dx) {
        for (Value b : dz) {
            if (dy.contains(a + b)) {
                keep.push_back(a);
                break;
            }
        }
    }
    doms[x_].keep_only(keep);
    keep.clear();
    for (Value b : dz) {
        for (Value a : dx) {
            if (dy.contains(a + b)) {
                keep.push_back(b);
                break;
            }
        }
    }
    doms[z_].keep_only(keep);
    return !doms[y_].empty() && !doms[x_].empty() && !doms[z_].empty();
}

bool RegularAdapter::filter(std::vector<Domain>& doms) const {
    return filter_regular(dfa_, doms);
}

// -------------------------------------------------------- lex extremes

namespace {

std::optional<std::vector<Value>> c_extreme(const ConstraintAdapter& c,
                                            std::vector<Domain> doms,
                                            bool want_max) {
    if (!c.filter(doms)) return std::nullopt;
    const int n = static_cast<int>(doms.size());
    std::vector<Value> word(n);
    for (int i = 0; i < n; ++i) {
        const Value v = want_max ? doms[i].max() : doms[i].min();
        doms[i] = Domain{v};
        const bool ok = c.filter(doms);
        // Every value of a domain consistent position extends to a
        // solution, so pinning an extreme one cannot empty anything.
        CLEX_ASSERT(ok);
        word[i] = v;
    }
    return word;
}

}  // namespace

std::optional<std::vector<Value>> c_min(const ConstraintAdapter& c,
                                        std::vector<Domain> doms) {
    return c_extreme(c, std::move(doms), false);
}

std::optional<std::vector<Value>> c_max(const ConstraintAdapter& c,
                                        std::vector<Domain> doms) {
    return c_extreme(c, std::move(doms), true);
}

void mark_consistent_values(const ConstraintAdapter& c,
                            const std::vector<Domain>& base_doms,
                            std::vector<Domain> probe_doms,
                            std::vector<std::set<Value>>& marks) {
    if (!c.filter(probe_doms)) return;
    for (size_t i = 0; i < probe_doms.size(); ++i) {
        for (Value v : probe_doms[i]) {
            CLEX_ASSERT(base_doms[i].contains(v));
            marks[i].insert(v);
        }
    }
}

// ------------------------------------------------------- bound filters

namespace {

// Shared body of clex_lb / clex_ub. Splits the solutions of
// C(X) and (bound <=lex X)   [toward_larger]
// C(X) and (X <=lex bound)   [!toward_larger]
// by the first position where X departs from bound, marks the values
// taking part in each branch, then prunes to the marked values.
bool clex_bound(VarStore& s, const std::vector<int>& xs,
                const ConstraintAdapter& c, const std::vector<Value>& bound,
                bool toward_larger) {
    const int n = static_cast<int>(xs.size());
    CLEX_ASSERT(static_cast<int>(bound.size()) == n);
    std::vector<Domain> work = s.snapshot(xs);
    if (!c.filter(work)) return false;

    std::vector<std::set<Value>> marks(n);
    std::vector<Domain> probe = work;  // bound[j] pinned for j < i
    bool completed = true;
    for (int i = 0; i < n; ++i) {
        std::vector<Domain> branch = probe;
        if (toward_larger)
            branch[i].remove_below(bound[i] + 1);
        else
            branch[i].remove_above(bound[i] - 1);
        if (!branch[i].empty())
            mark_consistent_values(c, work, std::move(branch), marks);
        if (!work[i].contains(bound[i])) {
            completed = false;
            break;
        }
        probe[i] = Domain{bound[i]};
    }
    // X == bound itself; only reachable when every prefix pin succeeded.
    if (completed) mark_consistent_values(c, work, probe, marks);

    for (int i = 0; i < n; ++i) {
        std::vector<Value> keep(marks[i].begin(), marks[i].end());
        if (!s.keep_only(xs[i], keep)) return false;
    }
    return true;
}

}  // namespace

bool clex_lb(VarStore& s, const std::vector<int>& xs,
             const ConstraintAdapter& c, const std::vector<Value>& lb) {
    return clex_bound(s, xs, c, lb, true);
}

bool clex_ub(VarStore& s, const std::vector<int>& xs,
             const ConstraintAdapter& c, const std::vector<Value>& ub) {
    return clex_bound(s, xs, c, ub, false);
}

// ------------------------------------------------------ pair propagator

namespace {

std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

}  // namespace

ClexPropagator::ClexPropagator(std::vector<int> xs, std::vector<int> ys,
                               std::shared_ptr<const ConstraintAdapter> cx,
                               std::shared_ptr<const ConstraintAdapter> cy)
    : xs_(std::move(xs)),
      ys_(std::move(ys)),
      scope_(concat(xs_, ys_)),
      cx_(std::move(cx)),
      cy_(std::move(cy)) {
    CLEX_ASSERT(xs_.size() == ys_.size());
    std::vector<int> check = scope_;
    std::sort(check.begin(), check.end());
    CLEX_ASSERT(std::adjacent_find(check.begin(), check.end()) ==
                check.end());
}

PropStatus ClexPropagator::propagate(VarStore& s) {
    const int n = static_cast<int>(xs_.size());
    std::vector<Domain> dx = s.snapshot(xs_);
    std::vector<Domain> dy = s.snapshot(ys_);

    auto xl = c_min(*cx_, dx);
    if (!xl) return PropStatus::kFailed;
    auto yu = c_max(*cy_, dy);
    if (!yu) return PropStatus::kFailed;
    if (lex_compare(*xl, *yu) > 0) return PropStatus::kFailed;

    // When even the greatest X word precedes the least Y word, the order
    // holds for every combination and the rows decouple: filtering each
    // row alone is domain consistent for the conjunction. The propagator
    // still is not entailed — the rows' own constraints keep filtering.
    {
        int cmp = 0;
        for (int i = 0; i < n && cmp == 0; ++i) {
            if (dx[i].max() != dy[i].min())
                cmp = dx[i].max() < dy[i].min() ? -1 : 1;
        }
        if (cmp <= 0) {
            bool ok = cx_->filter(dx);
            CLEX_ASSERT(ok);  // xl exists
            ok = cy_->filter(dy);
            CLEX_ASSERT(ok);  // yu exists
            for (int i = 0; i < n; ++i) {
                if (!s.keep_only(xs_[i], dx[i].values()))
                    return PropStatus::kFailed;
                if (!s.keep_only(ys_[i], dy[i].values()))
                    return PropStatus::kFailed;
            }
            return PropStatus::kFixpoint;
        }
    }

    if (!clex_ub(s, xs_, *cx_, *yu)) return PropStatus::kFailed;
    if (!clex_lb(s, ys_, *cy_, *xl)) return PropStatus::kFailed;
    return PropStatus::kFixpoint;
}

PropagatorHandle post_clex(Model& m, std::vector<int> xs, std::vector<int> ys,
                           std::shared_ptr<const ConstraintAdapter> cx,
                           std::shared_ptr<const ConstraintAdapter> cy) {
    return m.post(std::make_unique<ClexPropagator>(
        std::move(xs), std::move(ys), std::move(cx), std::move(cy)));
}

PropagatorHandle post_clex(Model& m, std::vector<int> xs, std::vector<int> ys,
                           std::shared_ptr<const ConstraintAdapter> c) {
    auto cy = c;
    return post_clex(m, std::move(xs), std::move(ys), std::move(c),
                     std::move(cy));
}

}  // namespace clex
