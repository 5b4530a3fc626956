#include "clex/layered_graph.hpp"

#include <algorithm>

#include "clex/util.hpp"

namespace clex {

bool LayeredGraph::build(const Dfa& dfa, const std::vector<Domain>& doms) {
    n_ = static_cast<int>(doms.size());
    q_ = dfa.num_states;
    arcs_.assign(n_, {});
    state_begin_.assign(n_, std::vector<int>(q_ + 1, 0));
    fwd_.assign(n_ + 1, std::vector<char>(q_, 0));
    bwd_.assign(n_ + 1, std::vector<char>(q_, 0));

    fwd_[0][dfa.initial] = 1;
    for (int i = 0; i < n_; ++i) {
        auto& layer = arcs_[i];
        for (int s = 0; s < q_; ++s) {
            state_begin_[i][s] = static_cast<int>(layer.size());
            if (!fwd_[i][s]) continue;
            // dfa.next[s] is sorted by label, so the layer stays sorted by
            // (from, label).
            for (const Dfa::Arc& a : dfa.next[s]) {
                if (!doms[i].contains(a.label)) continue;
                layer.push_back(Arc{s, a.to, a.label, false, false, false});
                fwd_[i + 1][a.to] = 1;
            }
        }
        state_begin_[i][q_] = static_cast<int>(layer.size());
    }

    for (int f : dfa.finals)
        if (fwd_[n_][f]) bwd_[n_][f] = 1;
    for (int i = n_ - 1; i >= 0; --i) {
        for (Arc& a : arcs_[i]) {
            if (bwd_[i + 1][a.to]) {
                a.alive = true;
                bwd_[i][a.from] = 1;
            }
        }
    }
    // An empty sequence is accepted iff the initial state is final.
    if (n_ == 0) return dfa.is_final(dfa.initial);
    return bwd_[0][dfa.initial] != 0;
}

std::pair<int, int> LayeredGraph::state_range(int layer, int state) const {
    return {state_begin_[layer][state], state_begin_[layer][state + 1]};
}

LayeredGraph::Arc* LayeredGraph::find_arc(int layer, int from, Value label) {
    auto [lo, hi] = state_range(layer, from);
    auto begin = arcs_[layer].begin();
    auto it = std::lower_bound(
        begin + lo, begin + hi, label,
        [](const Arc& a, Value v) { return a.label < v; });
    if (it == begin + hi || it->label != label) return nullptr;
    return &*it;
}

bool LayeredGraph::node_alive(int layer, int state) const {
    return fwd_[layer][state] && bwd_[layer][state];
}

std::vector<Value> LayeredGraph::alive_labels(int layer) const {
    std::vector<Value> out;
    for (const Arc& a : arcs_[layer])
        if (a.alive) out.push_back(a.label);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Value> LayeredGraph::marked_labels(int layer) const {
    std::vector<Value> out;
    for (const Arc& a : arcs_[layer])
        if (a.marked) out.push_back(a.label);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace clex
