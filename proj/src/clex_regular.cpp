#include "clex/clex_regular.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>
#include <tuple>

#include "clex/regular.hpp"
#include "clex/util.hpp"

namespace clex {

void mark_consistent_arcs(LayeredGraph& g, int layer, int state) {
    const int n = g.positions();
    std::vector<char> cur(g.states(), 0), nxt(g.states(), 0);
    cur[state] = 1;
    for (int i = layer; i < n; ++i) {
        std::fill(nxt.begin(), nxt.end(), 0);
        bool any = false;
        for (LayeredGraph::Arc& a : g.arcs(i)) {
            if (!cur[a.from] || !a.alive || a.removed) continue;
            a.marked = true;
            nxt[a.to] = 1;
            any = true;
        }
        if (!any) return;
        std::swap(cur, nxt);
    }
}

namespace {

// Shared body of clex_lb_regular / clex_ub_regular. Solutions of
// Regular(X) and (bound <=lex X)   [toward_larger]
// Regular(X) and (X <=lex bound)   [!toward_larger]
// split by the first position where X departs from bound. The walk
// follows bound through the layered graph; at each step the departing
// arcs out of the walk node are everything on the wrong side of
// bound[i], so masking the rest ("removed") and marking the forward
// cone marks exactly that branch. Removals at earlier walk nodes can
// never be seen again (they sit at earlier layers), so no restore is
// needed. Walk arcs themselves are marked lazily: the prefix [0, i) is
// used by every branch departing at >= i, so it is marked as soon as
// one such branch turns out nonempty, and wholly when X == bound
// survives (the walk completed on alive arcs).
bool clex_bound_regular(VarStore& s, const std::vector<int>& xs,
                        const Dfa& dfa, const std::vector<Value>& bound,
                        bool toward_larger) {
    const int n = static_cast<int>(xs.size());
    CLEX_ASSERT(static_cast<int>(bound.size()) == n);
    LayeredGraph g;
    if (!g.build(dfa, s.snapshot(xs))) return false;

    std::vector<LayeredGraph::Arc*> walk;
    walk.reserve(n);
    int q = dfa.initial;
    int marked_upto = 0;
    bool completed = true;
    for (int i = 0; i < n; ++i) {
        auto [lo, hi] = g.state_range(i, q);
        auto& layer = g.arcs(i);
        if (toward_larger) {
            for (int a = lo; a < hi && layer[a].label <= bound[i]; ++a)
                layer[a].removed = true;
        } else {
            for (int a = hi - 1; a >= lo && layer[a].label >= bound[i]; --a)
                layer[a].removed = true;
        }
        bool branch = false;
        for (int a = lo; a < hi; ++a) {
            if (layer[a].alive && !layer[a].removed) {
                branch = true;
                break;
            }
        }
        if (branch) {
            mark_consistent_arcs(g, i, q);
            for (int j = marked_upto; j < i; ++j) walk[j]->marked = true;
            marked_upto = i;
        }
        LayeredGraph::Arc* step = g.find_arc(i, q, bound[i]);
        if (step == nullptr || !step->alive) {
            completed = false;
            break;
        }
        walk.push_back(step);
        q = step->to;
    }
    if (completed)
        for (int j = marked_upto; j < n; ++j) walk[j]->marked = true;

    for (int i = 0; i < n; ++i)
        if (!s.keep_only(xs[i], g.marked_labels(i))) return false;
    return true;
}

}  // namespace

bool clex_lb_regular(VarStore& s, const std::vector<int>& xs, const Dfa& dfa,
                     const std::vector<Value>& lb) {
    return clex_bound_regular(s, xs, dfa, lb, true);
}

bool clex_ub_regular(VarStore& s, const std::vector<int>& xs, const Dfa& dfa,
                     const std::vector<Value>& ub) {
    return clex_bound_regular(s, xs, dfa, ub, false);
}

// ------------------------------------------------------ pair propagator

namespace {

std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

}  // namespace

RegularClexPropagator::RegularClexPropagator(std::vector<int> xs,
                                             std::vector<int> ys, Dfa dfa)
    : xs_(std::move(xs)),
      ys_(std::move(ys)),
      scope_(concat(xs_, ys_)),
      dfa_(std::move(dfa)) {
    CLEX_ASSERT(xs_.size() == ys_.size());
}

PropStatus RegularClexPropagator::propagate(VarStore& s) {
    const int n = static_cast<int>(xs_.size());
    std::vector<Domain> dx = s.snapshot(xs_);
    std::vector<Domain> dy = s.snapshot(ys_);

    auto xl = regular_min(dfa_, dx);
    if (!xl) return PropStatus::kFailed;
    auto yu = regular_max(dfa_, dy);
    if (!yu) return PropStatus::kFailed;
    if (lex_compare(*xl, *yu) > 0) return PropStatus::kFailed;

    // Decoupled case, as in the generic pair propagator.
    {
        int cmp = 0;
        for (int i = 0; i < n && cmp == 0; ++i) {
            if (dx[i].max() != dy[i].min())
                cmp = dx[i].max() < dy[i].min() ? -1 : 1;
        }
        if (cmp <= 0) {
            bool ok = filter_regular(dfa_, dx);
            CLEX_ASSERT(ok);
            ok = filter_regular(dfa_, dy);
            CLEX_ASSERT(ok);
            for (int i = 0; i < n; ++i) {
                if (!s.keep_only(xs_[i], dx[i].values()))
                    return PropStatus::kFailed;
                if (!s.keep_only(ys_[i], dy[i].values()))
                    return PropStatus::kFailed;
            }
            return PropStatus::kFixpoint;
        }
    }

    if (!clex_ub_regular(s, xs_, dfa_, *yu)) return PropStatus::kFailed;
    if (!clex_lb_regular(s, ys_, dfa_, *xl)) return PropStatus::kFailed;
    return PropStatus::kFixpoint;
}

PropagatorHandle post_clex_regular(Model& m, std::vector<int> xs,
                                   std::vector<int> ys, Dfa dfa) {
    return m.post(std::make_unique<RegularClexPropagator>(
        std::move(xs), std::move(ys), std::move(dfa)));
}

// ------------------------------------------------------ product automaton

namespace {

// Product state kinds. The word read so far is x1 y1 x2 y2 ...; kEq and
// kLt sit on pair boundaries, kPend in the middle of a pair holding the
// x value just read. kLt stores (next mover's state, other state): a
// transition hands the pair over swapped, so no side flag is needed, and
// since acceptance requires both components final, finals need no side
// flag either. Odd-length words ending inside a pair are never accepted
// (kPend is not final); odd-length words accepted through kLt cannot
// arise in use because the propagator always reads complete pairs.
enum Kind : int { kEq = 0, kPend = 1, kLt = 2 };

struct ProductKey {
    int kind, a, b;
    Value v;  // pending x value, kPend only
    bool operator<(const ProductKey& o) const {
        return std::tie(kind, a, b, v) < std::tie(o.kind, o.a, o.b, o.v);
    }
};

}  // namespace

Dfa build_product_dfa(const Dfa& dfa_x, const Dfa& dfa_y) {
    // Identical automata share one state space, so equal-prefix states
    // collapse onto the diagonal; otherwise Y states are offset.
    const bool shared = dfa_x == dfa_y;
    const int base_y = shared ? 0 : dfa_x.num_states;
    auto final_comb = [&](int s) -> bool {
        if (s < base_y || shared) return dfa_x.is_final(s);
        return dfa_y.is_final(s - base_y);
    };
    // Outgoing (label, combined target) pairs of a combined-space state.
    auto out_arcs = [&](int s) {
        const bool y_side = !shared && s >= base_y;
        const auto& arcs = y_side ? dfa_y.next[s - base_y] : dfa_x.next[s];
        const int off = y_side ? base_y : 0;
        std::vector<std::pair<Value, int>> out;
        out.reserve(arcs.size());
        for (const Dfa::Arc& a : arcs) out.emplace_back(a.label, a.to + off);
        return out;
    };

    std::map<ProductKey, int> ids;
    std::vector<ProductKey> keys;
    auto intern = [&](const ProductKey& k) -> int {
        auto [it, fresh] = ids.emplace(k, static_cast<int>(keys.size()));
        if (fresh) keys.push_back(k);
        return it->second;
    };

    struct Edge {
        int from, to;
        Value label;
    };
    std::vector<Edge> edges;

    const ProductKey start{kEq, dfa_x.initial, base_y + dfa_y.initial, 0};
    intern(start);
    for (size_t head = 0; head < keys.size(); ++head) {
        const ProductKey k = keys[head];  // by value: keys grows below
        const int from = static_cast<int>(head);
        switch (k.kind) {
            case kEq:
                for (auto [label, to_x] : out_arcs(k.a)) {
                    const int to = intern(ProductKey{kPend, to_x, k.b, label});
                    edges.push_back({from, to, label});
                }
                break;
            case kPend:
                for (auto [label, to_y] : out_arcs(k.b)) {
                    if (label < k.v) continue;
                    const int kind = label == k.v ? kEq : kLt;
                    const int to = intern(ProductKey{kind, k.a, to_y, 0});
                    edges.push_back({from, to, label});
                }
                break;
            case kLt:
                for (auto [label, to_a] : out_arcs(k.a)) {
                    const int to = intern(ProductKey{kLt, k.b, to_a, 0});
                    edges.push_back({from, to, label});
                }
                break;
        }
    }

    const int total = static_cast<int>(keys.size());
    std::vector<char> is_final(total, 0);
    for (int s = 0; s < total; ++s) {
        const ProductKey& k = keys[s];
        if (k.kind != kPend && final_comb(k.a) && final_comb(k.b))
            is_final[s] = 1;
    }

    // Keep only states from which a final state stays reachable.
    std::vector<std::vector<int>> rev(total);
    for (const Edge& e : edges) rev[e.to].push_back(e.from);
    std::vector<char> useful(total, 0);
    std::vector<int> stack;
    for (int s = 0; s < total; ++s)
        if (is_final[s]) {
            useful[s] = 1;
            stack.push_back(s);
        }
    while (!stack.empty()) {
        const int s = stack.back();
        stack.pop_back();
        for (int p : rev[s])
            if (!useful[p]) {
                useful[p] = 1;
                stack.push_back(p);
            }
    }
    if (!useful[0]) return make_dfa(1, 0, {});  // empty language

    std::vector<int> renum(total, -1);
    int live = 0;
    for (int s = 0; s < total; ++s)
        if (useful[s]) renum[s] = live++;
    std::vector<int> finals;
    for (int s = 0; s < total; ++s)
        if (useful[s] && is_final[s]) finals.push_back(renum[s]);
    Dfa out = make_dfa(live, renum[0], std::move(finals));
    for (const Edge& e : edges)
        if (useful[e.from] && useful[e.to])
            out.add_arc(renum[e.from], e.label, renum[e.to]);
    return out;
}

Dfa build_product_dfa(const Dfa& dfa_x, const Dfa& dfa_y,
                      const std::vector<Value>& alphabet) {
    std::vector<Value> sigma = alphabet;
    std::sort(sigma.begin(), sigma.end());
    for (const Dfa* d : {&dfa_x, &dfa_y})
        for (Value v : d->alphabet())
            if (!std::binary_search(sigma.begin(), sigma.end(), v))
                throw std::invalid_argument(
                    "product: automaton label outside the alphabet");
    return build_product_dfa(dfa_x, dfa_y);
}

PropagatorHandle post_clex_regular_product(Model& m,
                                           const std::vector<int>& xs,
                                           const std::vector<int>& ys,
                                           const Dfa& dfa) {
    CLEX_ASSERT(xs.size() == ys.size());
    std::vector<int> interleaved;
    interleaved.reserve(2 * xs.size());
    for (size_t i = 0; i < xs.size(); ++i) {
        interleaved.push_back(xs[i]);
        interleaved.push_back(ys[i]);
    }
    return post_regular(m, std::move(interleaved),
                        build_product_dfa(dfa, dfa));
}

}  // namespace clex
