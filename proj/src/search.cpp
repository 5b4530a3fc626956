#include "clex/search.hpp"

#include "clex/util.hpp"

namespace clex {

namespace {

struct Dfs {
    Model& m;
    const std::vector<int>& order;
    const SearchLimits& limits;
    SearchStats& st;
    std::chrono::steady_clock::time_point deadline{};
    bool has_deadline = false;
    bool limit_hit = false;

    bool out_of_budget() {
        if (limits.max_nodes && st.nodes >= *limits.max_nodes) return true;
        if (has_deadline && std::chrono::steady_clock::now() >= deadline)
            return true;
        return false;
    }

    // True once a solution is recorded; limit_hit aborts the walk.
    bool run(std::size_t oi) {
        while (oi < order.size() && m.store().dom(order[oi]).singleton())
            ++oi;
        if (oi == order.size()) {
            st.solution.clear();
            for (int v = 0; v < m.store().num_vars(); ++v)
                st.solution.push_back(m.store().dom(v).value());
            return true;
        }
        int var = order[oi];
        const std::vector<Value> vals = m.store().dom(var).values();
        for (Value val : vals) {
            if (out_of_budget()) {
                limit_hit = true;
                return false;
            }
            ++st.nodes;
            m.push_level();
            bool ok = m.store().assign(var, val) &&
                      m.propagate_to_fixpoint() == Consistency::kConsistent;
            if (ok) {
                if (run(oi + 1)) {
                    m.pop_level();
                    return true;
                }
                if (limit_hit) {
                    m.pop_level();
                    return false;
                }
            } else {
                ++st.failures;
                ++st.backtracks;
                m.store().take_dirty();
            }
            m.pop_level();
        }
        return false;
    }
};

}  // namespace

SearchStats solve(Model& m, const std::vector<int>& order,
                  const SearchLimits& limits) {
    CLEX_ASSERT(static_cast<int>(order.size()) == m.store().num_vars());
    SearchStats st;
    st.nodes = 1;  // the root
    auto t0 = std::chrono::steady_clock::now();
    Dfs dfs{m, order, limits, st};
    if (limits.time) {
        dfs.deadline = t0 + *limits.time;
        dfs.has_deadline = true;
    }
    if (m.propagate_to_fixpoint() == Consistency::kConsistent) {
        bool found = dfs.run(0);
        st.outcome = found               ? Outcome::kSolution
                     : dfs.limit_hit     ? Outcome::kLimitReached
                                         : Outcome::kUnsat;
    } else {
        ++st.failures;
        st.outcome = Outcome::kUnsat;
    }
    st.wall = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - t0);
    return st;
}

}  // namespace clex
