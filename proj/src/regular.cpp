#include "clex/regular.hpp"

#include <memory>

#include "clex/util.hpp"

namespace clex {

bool filter_regular(const Dfa& dfa, std::vector<Domain>& doms) {
    LayeredGraph g;
    if (!g.build(dfa, doms)) return false;
    for (int i = 0; i < g.positions(); ++i) {
        bool changed = doms[i].keep_only(g.alive_labels(i));
        (void)changed;
        CLEX_ASSERT(!doms[i].empty());
    }
    return true;
}

namespace {

// Walks the alive part of the graph taking the least (greatest) label at
// every step. Because alive arcs all lie on accepting paths, the greedy
// choice is safe: it is the lex extreme of the accepted words within doms.
std::optional<std::vector<Value>> regular_extreme(
    const Dfa& dfa, const std::vector<Domain>& doms, bool want_max) {
    LayeredGraph g;
    if (!g.build(dfa, doms)) return std::nullopt;
    std::vector<Value> word(g.positions());
    int q = dfa.initial;
    for (int i = 0; i < g.positions(); ++i) {
        auto [lo, hi] = g.state_range(i, q);
        const auto& layer = g.arcs(i);
        int pick = -1;
        if (want_max) {
            for (int a = hi - 1; a >= lo; --a)
                if (layer[a].alive) {
                    pick = a;
                    break;
                }
        } else {
            for (int a = lo; a < hi; ++a)
                if (layer[a].alive) {
                    pick = a;
                    break;
                }
        }
        // Alive nodes before the last layer always have an alive arc out.
        CLEX_ASSERT(pick >= 0);
        word[i] = layer[pick].label;
        q = layer[pick].to;
    }
    return word;
}

}  // namespace

std::optional<std::vector<Value>> regular_min(
    const Dfa& dfa, const std::vector<Domain>& doms) {
    return regular_extreme(dfa, doms, false);
}

std::optional<std::vector<Value>> regular_max(
    const Dfa& dfa, const std::vector<Domain>& doms) {
    return regular_extreme(dfa, doms, true);
}

RegularPropagator::RegularPropagator(std::vector<int> vars, Dfa dfa)
    : vars_(std::move(vars)), dfa_(std::move(dfa)) {}

PropStatus RegularPropagator::propagate(VarStore& s) {
    std::vector<Domain> doms = s.snapshot(vars_);
    if (!filter_regular(dfa_, doms)) return PropStatus::kFailed;
    bool all_fixed = true;
    for (size_t i = 0; i < vars_.size(); ++i) {
        if (!s.keep_only(vars_[i], doms[i].values()))
            return PropStatus::kFailed;
        all_fixed = all_fixed && doms[i].singleton();
    }
    return all_fixed ? PropStatus::kEntailed : PropStatus::kFixpoint;
}

PropagatorHandle post_regular(Model& m, std::vector<int> vars, Dfa dfa) {
    return m.post(
        std::make_unique<RegularPropagator>(std::move(vars), std::move(dfa)));
}

}  // namespace clex
