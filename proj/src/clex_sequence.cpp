#include "clex/clex_sequence.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <stdexcept>

#include "clex/regular.hpp"
#include "clex/util.hpp"

namespace clex {

void SequenceSpec::validate() const {
    if (k < 1 || k > 25)
        throw std::invalid_argument("sequence: window length out of range");
    if (l < 0 || l > u || u > k)
        throw std::invalid_argument("sequence: need 0 <= l <= u <= k");
    if (in_set.empty() || !std::is_sorted(in_set.begin(), in_set.end()) ||
        std::adjacent_find(in_set.begin(), in_set.end()) != in_set.end())
        throw std::invalid_argument(
            "sequence: in_set must be nonempty, sorted, duplicate free");
}

Dfa build_sequence_dfa(const SequenceSpec& spec,
                       const std::vector<Value>& alphabet) {
    spec.validate();
    std::vector<Value> sigma = alphabet;
    std::sort(sigma.begin(), sigma.end());
    sigma.erase(std::unique(sigma.begin(), sigma.end()), sigma.end());
    if (sigma.empty())
        throw std::invalid_argument("sequence dfa: empty alphabet");

    const int k = spec.k;
    auto member = [&](Value c) {
        return std::binary_search(spec.in_set.begin(), spec.in_set.end(), c);
    };

    // States are (h, bits): membership bits of the last h symbols, h < k
    // (h grows until the first window fills; the oldest bit is highest).
    // Words shorter than k have no window and are always fine, so every
    // state is accepting.
    std::map<std::pair<int, int>, int> ids;
    std::vector<std::pair<int, int>> keys;
    auto intern = [&](std::pair<int, int> key) -> int {
        auto [it, fresh] = ids.emplace(key, static_cast<int>(keys.size()));
        if (fresh) keys.push_back(key);
        return it->second;
    };
    struct Edge {
        int from, to;
        Value label;
    };
    std::vector<Edge> edges;

    intern({0, 0});
    for (size_t head = 0; head < keys.size(); ++head) {
        const auto [h, bits] = keys[head];
        for (Value c : sigma) {
            const int bit = member(c) ? 1 : 0;
            int nh, nbits;
            if (h < k - 1) {
                nh = h + 1;
                nbits = bits * 2 + bit;
            } else {
                const int window = bits * 2 + bit;
                const int sum = std::popcount(static_cast<unsigned>(window));
                if (sum < spec.l || sum > spec.u) continue;
                nh = k - 1;
                nbits = window & ((1 << (k - 1)) - 1);
            }
            edges.push_back({static_cast<int>(head), intern({nh, nbits}), c});
        }
    }

    std::vector<int> finals(keys.size());
    for (size_t i = 0; i < keys.size(); ++i) finals[i] = static_cast<int>(i);
    Dfa d = make_dfa(static_cast<int>(keys.size()), 0, std::move(finals));
    for (const Edge& e : edges) d.add_arc(e.from, e.label, e.to);
    return d;
}

namespace {

std::vector<Value> domain_values_union(const std::vector<Domain>& doms) {
    std::vector<Value> out;
    for (const Domain& d : doms)
        out.insert(out.end(), d.begin(), d.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

std::optional<std::vector<Value>> check_consistency_min(
    const SequenceSpec& spec, const std::vector<Domain>& doms) {
    for (const Domain& d : doms)
        if (d.empty()) return std::nullopt;
    if (doms.empty()) return std::vector<Value>{};
    return regular_min(build_sequence_dfa(spec, domain_values_union(doms)),
                       doms);
}

std::optional<std::vector<Value>> check_consistency_max(
    const SequenceSpec& spec, const std::vector<Domain>& doms) {
    for (const Domain& d : doms)
        if (d.empty()) return std::nullopt;
    if (doms.empty()) return std::vector<Value>{};
    return regular_max(build_sequence_dfa(spec, domain_values_union(doms)),
                       doms);
}

// ---------------------------------------------------------- BoolChannel

namespace {

bool in_vset(const std::vector<Value>& v_set, Value v) {
    return std::binary_search(v_set.begin(), v_set.end(), v);
}

}  // namespace

bool BoolChannel::applicable(const Domain& d, const std::vector<Value>& v_set) {
    bool seen_member = false;
    for (Value v : d) {
        if (in_vset(v_set, v))
            seen_member = true;
        else if (seen_member)
            return false;
    }
    return true;
}

Domain BoolChannel::bit_domain(const Domain& d,
                               const std::vector<Value>& v_set) {
    bool has_out = false, has_in = false;
    for (Value v : d) (in_vset(v_set, v) ? has_in : has_out) = true;
    std::vector<Value> bits;
    if (has_out) bits.push_back(0);
    if (has_in) bits.push_back(1);
    return Domain(bits);
}

Value BoolChannel::expand_min(int bit, const Domain& d,
                              const std::vector<Value>& v_set) {
    if (bit == 0) {
        CLEX_ASSERT(!d.empty() && !in_vset(v_set, d.min()));
        return d.min();  // non-members sit below every member
    }
    for (Value v : d)
        if (in_vset(v_set, v)) return v;
    CLEX_ASSERT(false && "expand_min: no member value");
    return 0;
}

Value BoolChannel::expand_max(int bit, const Domain& d,
                              const std::vector<Value>& v_set) {
    if (bit == 1) {
        CLEX_ASSERT(!d.empty() && in_vset(v_set, d.max()));
        return d.max();  // members sit above every non-member
    }
    Value best = 0;
    bool found = false;
    for (Value v : d) {
        if (in_vset(v_set, v)) break;  // members form a suffix
        best = v;
        found = true;
    }
    CLEX_ASSERT(found && "expand_max: no non-member value");
    return best;
}

// ------------------------------------------------------ pair propagator

namespace {

std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

// lex_compare of a[lo..hi) vs b[lo..hi).
int lex_compare_range(const std::vector<Value>& a, const std::vector<Value>& b,
                      int lo, int hi) {
    for (int i = lo; i < hi; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

}  // namespace

SequenceClexPropagator::SequenceClexPropagator(std::vector<int> xs,
                                               std::vector<int> ys,
                                               SequenceSpec spec)
    : xs_(std::move(xs)),
      ys_(std::move(ys)),
      scope_(concat(xs_, ys_)),
      spec_(std::move(spec)) {
    CLEX_ASSERT(xs_.size() == ys_.size());
    spec_.validate();
    SequenceSpec bit_spec = spec_;
    bit_spec.in_set = {1};
    bit_dfa_ = build_sequence_dfa(bit_spec, {0, 1});
}

PropStatus SequenceClexPropagator::propagate(VarStore& s) {
    const int n = static_cast<int>(xs_.size());
    if (n == 0) return PropStatus::kEntailed;
    const std::vector<Value>& V = spec_.in_set;
    auto bit_of = [&](Value v) { return in_vset(V, v) ? 1 : 0; };

    std::vector<Domain> dx = s.snapshot(xs_);
    std::vector<Domain> dy = s.snapshot(ys_);
    std::vector<Domain> bdx(n), bdy(n);
    for (int i = 0; i < n; ++i) {
        bdx[i] = BoolChannel::bit_domain(dx[i], V);
        bdy[i] = BoolChannel::bit_domain(dy[i], V);
    }

    auto bxl = regular_min(bit_dfa_, bdx);
    if (!bxl) return PropStatus::kFailed;
    auto byu = regular_max(bit_dfa_, bdy);
    if (!byu) return PropStatus::kFailed;
    std::vector<Value> xl(n), yu(n);
    for (int i = 0; i < n; ++i) {
        xl[i] = BoolChannel::expand_min((*bxl)[i], dx[i], V);
        yu[i] = BoolChannel::expand_max((*byu)[i], dy[i], V);
    }
    if (lex_compare(xl, yu) > 0) return PropStatus::kFailed;

    // A value v at x_i survives iff the least sequence-feasible word equal
    // to v at i precedes yu; the least such word is the bit-least feasible
    // bit word with v's membership bit pinned at i, expanded value-least,
    // with v itself spliced in at i. One probe per present bit suffices:
    // words for all v with that bit differ only at i.
    for (int i = 0; i < n; ++i) {
        std::vector<Value> keep;
        for (Value bit : bdx[i]) {
            std::vector<Domain> pinned = bdx;
            pinned[i] = Domain{bit};
            auto bw = regular_min(bit_dfa_, pinned);
            if (!bw) continue;
            std::vector<Value> w(n);
            for (int j = 0; j < n; ++j)
                w[j] = BoolChannel::expand_min((*bw)[j], dx[j], V);
            const int pre = lex_compare_range(w, yu, 0, i);
            const int suf = lex_compare_range(w, yu, i + 1, n);
            for (Value v : dx[i]) {
                if (bit_of(v) != bit) continue;
                if (pre < 0 ||
                    (pre == 0 && (v < yu[i] || (v == yu[i] && suf <= 0))))
                    keep.push_back(v);
            }
        }
        if (!s.keep_only(xs_[i], keep)) return PropStatus::kFailed;
    }

    // Dual side: v at y_i survives iff the greatest feasible word equal to
    // v at i still dominates xl.
    for (int i = 0; i < n; ++i) {
        std::vector<Value> keep;
        for (Value bit : bdy[i]) {
            std::vector<Domain> pinned = bdy;
            pinned[i] = Domain{bit};
            auto bw = regular_max(bit_dfa_, pinned);
            if (!bw) continue;
            std::vector<Value> w(n);
            for (int j = 0; j < n; ++j)
                w[j] = BoolChannel::expand_max((*bw)[j], dy[j], V);
            const int pre = lex_compare_range(w, xl, 0, i);
            const int suf = lex_compare_range(w, xl, i + 1, n);
            for (Value v : dy[i]) {
                if (bit_of(v) != bit) continue;
                if (pre > 0 ||
                    (pre == 0 && (v > xl[i] || (v == xl[i] && suf >= 0))))
                    keep.push_back(v);
            }
        }
        if (!s.keep_only(ys_[i], keep)) return PropStatus::kFailed;
    }

    bool all_fixed = true;
    for (int v : scope_) all_fixed = all_fixed && s.dom(v).singleton();
    return all_fixed ? PropStatus::kEntailed : PropStatus::kFixpoint;
}

PropagatorHandle post_clex_sequence(Model& m, std::vector<int> xs,
                                    std::vector<int> ys, SequenceSpec spec) {
    spec.validate();
    for (const auto* side : {&xs, &ys})
        for (int v : *side)
            if (!BoolChannel::applicable(m.store().dom(v), spec.in_set))
                throw std::invalid_argument(
                    "clex sequence: domain values inside the counted set "
                    "must sit above the values outside it");
    return m.post(std::make_unique<SequenceClexPropagator>(
        std::move(xs), std::move(ys), std::move(spec)));
}

// --------------------------------------------------------- row adapter

SequenceAdapter::SequenceAdapter(SequenceSpec spec,
                                 std::vector<Value> alphabet)
    : dfa_(build_sequence_dfa(spec, alphabet)) {}

bool SequenceAdapter::filter(std::vector<Domain>& doms) const {
    return filter_regular(dfa_, doms);
}

}  // namespace clex
