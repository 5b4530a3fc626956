#include "clex/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace clex::oracle {

Checker lex_leq(std::vector<int> xs, std::vector<int> ys) {
    return [xs = std::move(xs), ys = std::move(ys)](const Tuple& t) {
        for (size_t i = 0; i < xs.size(); ++i) {
            if (t[xs[i]] != t[ys[i]]) return t[xs[i]] < t[ys[i]];
        }
        return true;
    };
}

Checker among(std::vector<int> vars, std::vector<Value> in_set, int l, int u) {
    std::sort(in_set.begin(), in_set.end());
    return [vars = std::move(vars), in_set = std::move(in_set), l,
            u](const Tuple& t) {
        int count = 0;
        for (int v : vars)
            count += std::binary_search(in_set.begin(), in_set.end(), t[v]);
        return l <= count && count <= u;
    };
}

Checker sequence(std::vector<int> vars, SequenceSpec spec) {
    return [vars = std::move(vars), spec = std::move(spec)](const Tuple& t) {
        const int n = static_cast<int>(vars.size());
        for (int j = 0; j + spec.k <= n; ++j) {
            int count = 0;
            for (int i = j; i < j + spec.k; ++i)
                count += std::binary_search(spec.in_set.begin(),
                                            spec.in_set.end(), t[vars[i]]);
            if (count < spec.l || count > spec.u) return false;
        }
        return true;
    };
}

Checker regular_word(std::vector<int> vars, Dfa dfa) {
    return [vars = std::move(vars), dfa = std::move(dfa)](const Tuple& t) {
        int q = dfa.initial;
        for (int v : vars) {
            q = dfa.step(q, t[v]);
            if (q < 0) return false;
        }
        return dfa.is_final(q);
    };
}

Checker sum_eq(int y, int x, int z) {
    return [y, x, z](const Tuple& t) { return t[y] == t[x] + t[z]; };
}

Checker at_least(std::vector<int> vars, std::vector<Value> in_set,
                 int demand) {
    std::sort(in_set.begin(), in_set.end());
    return [vars = std::move(vars), in_set = std::move(in_set),
            demand](const Tuple& t) {
        int count = 0;
        for (int v : vars)
            count += std::binary_search(in_set.begin(), in_set.end(), t[v]);
        return count >= demand;
    };
}

std::uint64_t domain_product(const std::vector<Domain>& doms) {
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t prod = 1;
    for (const Domain& d : doms) {
        const std::uint64_t n = d.size();
        if (n == 0) return 0;
        if (prod > kMax / n) return kMax;
        prod *= n;
    }
    return prod;
}

namespace {

void check_cap(const std::vector<Domain>& doms, std::uint64_t cap) {
    if (domain_product(doms) > cap)
        throw std::length_error("oracle: assignment space exceeds the cap");
}

bool passes(const Tuple& t, const std::vector<Checker>& checkers) {
    for (const Checker& c : checkers)
        if (!c(t)) return false;
    return true;
}

// Calls fn for every full assignment, in ascending lex order when asc,
// else descending; stops early when fn returns false.
template <typename Fn>
void enumerate(const std::vector<Domain>& doms, bool asc, Fn&& fn) {
    const int n = static_cast<int>(doms.size());
    for (const Domain& d : doms)
        if (d.empty()) return;
    std::vector<int> idx(n, 0);
    Tuple t(n);
    for (int i = 0; i < n; ++i) {
        idx[i] = asc ? 0 : static_cast<int>(doms[i].size()) - 1;
        t[i] = doms[i].values()[idx[i]];
    }
    while (true) {
        if (!fn(t)) return;
        int i = n - 1;
        while (i >= 0) {
            idx[i] += asc ? 1 : -1;
            if (idx[i] >= 0 && idx[i] < static_cast<int>(doms[i].size()))
                break;
            idx[i] = asc ? 0 : static_cast<int>(doms[i].size()) - 1;
            --i;
        }
        if (i < 0) return;
        for (int j = i; j < n; ++j) t[j] = doms[j].values()[idx[j]];
    }
}

}  // namespace

DcResult brute_force_dc(const std::vector<Domain>& doms,
                        const std::vector<Checker>& checkers,
                        std::uint64_t cap) {
    check_cap(doms, cap);
    const int n = static_cast<int>(doms.size());
    std::vector<std::vector<Value>> supported(n);
    bool any = false;
    enumerate(doms, true, [&](const Tuple& t) {
        if (passes(t, checkers)) {
            any = true;
            for (int i = 0; i < n; ++i) supported[i].push_back(t[i]);
        }
        return true;
    });
    DcResult res;
    res.satisfiable = any;
    res.domains.reserve(n);
    for (int i = 0; i < n; ++i) {
        auto& vals = supported[i];
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        res.domains.push_back(Domain(vals));
    }
    return res;
}

std::optional<Tuple> brute_force_lex_min(const std::vector<Domain>& doms,
                                         const std::vector<Checker>& checkers,
                                         std::uint64_t cap) {
    check_cap(doms, cap);
    std::optional<Tuple> found;
    enumerate(doms, true, [&](const Tuple& t) {
        if (passes(t, checkers)) {
            found = t;
            return false;
        }
        return true;
    });
    return found;
}

std::optional<Tuple> brute_force_lex_max(const std::vector<Domain>& doms,
                                         const std::vector<Checker>& checkers,
                                         std::uint64_t cap) {
    check_cap(doms, cap);
    std::optional<Tuple> found;
    enumerate(doms, false, [&](const Tuple& t) {
        if (passes(t, checkers)) {
            found = t;
            return false;
        }
        return true;
    });
    return found;
}

}  // namespace clex::oracle
