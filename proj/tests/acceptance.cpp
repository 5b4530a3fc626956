// Acceptance harness: one line per criterion, exit code = number of
// failures. Every tolerance and budget is pinned here in code.
#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "clex/basic.hpp"
#include "clex/clex_generic.hpp"
#include "clex/clex_regular.hpp"
#include "clex/clex_sequence.hpp"
#include "clex/nsp.hpp"
#include "clex/oracle.hpp"
#include "clex/regular.hpp"
#include "clex/search.hpp"

using namespace clex;

namespace {

// ------------------------------------------------------------ utilities

struct Fail : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw Fail(what);
}

std::string str(const std::vector<Value>& w) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << ']';
    return os.str();
}

Dfa random_dfa(std::mt19937_64& rng, int max_states, Value max_label) {
    const int q = 1 + static_cast<int>(rng() % max_states);
    std::vector<int> finals;
    for (int s = 0; s < q; ++s)
        if (rng() % 2) finals.push_back(s);
    Dfa d = make_dfa(q, 0, std::move(finals));
    for (int s = 0; s < q; ++s)
        for (Value v = 0; v <= max_label; ++v)
            if (rng() % 5 < 3) d.add_arc(s, v, static_cast<int>(rng() % q));
    return d;
}

Domain random_domain(std::mt19937_64& rng, Value lo, Value hi) {
    std::vector<Value> vals;
    for (Value v = lo; v <= hi; ++v)
        if (rng() % 2) vals.push_back(v);
    if (vals.empty())
        vals.push_back(lo + static_cast<Value>(rng() % (hi - lo + 1)));
    return Domain(vals);
}

// Paired-row instance: 2n domains with a bounded enumeration size, so the
// oracle stays fast while n ranges up to 5 and values up to 0..3.
struct PairInstance {
    int n = 0;
    Value max_label = 0;
    std::vector<Domain> doms;  // first n for X, then n for Y
};

PairInstance draw_pair(std::mt19937_64& rng, std::uint64_t size_cap) {
    for (;;) {
        PairInstance p;
        p.n = 1 + static_cast<int>(rng() % 5);
        p.max_label = 1 + static_cast<Value>(rng() % 3);  // domains in 0..3
        for (int i = 0; i < 2 * p.n; ++i)
            p.doms.push_back(random_domain(rng, 0, p.max_label));
        if (oracle::domain_product(p.doms) <= size_cap) return p;
    }
}

std::vector<std::vector<Value>> all_words(int len, Value max_label) {
    std::vector<std::vector<Value>> out{{}};
    for (int i = 0; i < len; ++i) {
        std::vector<std::vector<Value>> next;
        for (const auto& w : out)
            for (Value v = 0; v <= max_label; ++v) {
                next.push_back(w);
                next.back().push_back(v);
            }
        out = std::move(next);
    }
    return out;
}

oracle::Checker word_geq(std::vector<int> vars, std::vector<Value> bound) {
    return [vars = std::move(vars),
            bound = std::move(bound)](const oracle::Tuple& t) {
        std::vector<Value> word;
        for (int v : vars) word.push_back(t[v]);
        return lex_compare(bound, word) <= 0;
    };
}

// The worked three-position sum rows (value 1 = value 0 + value 2).
std::vector<Domain> sum_row_one() {
    return {Domain({1, 2, 3, 4}), Domain({6, 7, 8, 9}), Domain({5})};
}
std::vector<Domain> sum_row_two() {
    return {Domain({1, 2, 3, 4}), Domain({5, 6, 7, 8}), Domain({4})};
}

// The worked window instance: exactly two ones in every three positions.
SequenceSpec two_of_three() {
    SequenceSpec spec;
    spec.l = 2;
    spec.u = 2;
    spec.k = 3;
    spec.in_set = {1};
    return spec;
}
std::vector<Domain> seq_x() {
    return {Domain({0, 1}), Domain({1}), Domain({0, 1}), Domain({0, 1})};
}
std::vector<Domain> seq_y() {
    return {Domain({0, 1}), Domain({0, 1}), Domain({1}), Domain({0, 1})};
}

// ------------------------------------------------------------ criterion 1

std::string criterion_separation() {
    long prev_bt = -1;
    bool recurrence_fits = true;
    std::ostringstream growth;
    for (int n = 4; n <= 10; ++n) {
        nsp::BuiltModel combined = nsp::build_separation_model(n, true);
        const SearchStats sc = solve(combined.model, combined.order);
        expect(sc.outcome == Outcome::kUnsat,
               "combined chain n=" + std::to_string(n) + " not unsat");
        expect(sc.nodes == 1, "combined chain n=" + std::to_string(n) +
                                  " searched " + std::to_string(sc.nodes) +
                                  " nodes, want root only");
        expect(sc.backtracks == 0,
               "combined chain n=" + std::to_string(n) + " backtracked");

        nsp::BuiltModel plain = nsp::build_separation_model(n, false);
        const SearchStats sp = solve(plain.model, plain.order);
        expect(sp.outcome == Outcome::kUnsat,
               "decomposed chain n=" + std::to_string(n) + " not unsat");
        if (prev_bt >= 0) {
            expect(sp.backtracks > prev_bt,
                   "decomposed backtracks not strictly increasing at n=" +
                       std::to_string(n));
            // Monotone super-linear growth: each step at least x1.5.
            expect(sp.backtracks * 2 >= prev_bt * 3,
                   "decomposed backtracks grow sub-exponentially at n=" +
                       std::to_string(n));
            if (sp.backtracks != 2 * prev_bt + 1) recurrence_fits = false;
        }
        growth << (n > 4 ? "," : "") << sp.backtracks;
        prev_bt = sp.backtracks;
    }
    return "combined always fails at the root; decomposed backtracks " +
           growth.str() +
           (recurrence_fits ? " (doubling-plus-one fit holds)"
                            : " (super-linear, no exact recurrence fit)");
}

// ------------------------------------------------------------ criterion 2

std::string criterion_sum_rows() {
    // Root fixpoint, then the branch taken in the worked example.
    Model m;
    std::vector<int> xs, ys;
    for (const Domain& d : sum_row_one()) xs.push_back(m.add_var(d));
    for (const Domain& d : sum_row_two()) ys.push_back(m.add_var(d));
    post_clex(m, xs, ys, std::make_shared<SumRowAdapter>(1, 0, 2));
    expect(m.propagate_to_fixpoint() == Consistency::kConsistent,
           "worked sum rows inconsistent at the root");
    m.push_level();
    expect(m.store().assign(xs[0], 1), "cannot branch first position to 1");
    expect(m.propagate_to_fixpoint() == Consistency::kConsistent,
           "branch X[0]=1 failed");
    const std::vector<Domain> want_row1{Domain({1}), Domain({6}),
                                        Domain({5})};
    for (int i = 0; i < 3; ++i)
        expect(m.store().dom(xs[i]) == want_row1[i],
               "row 1 not fixed to [1,6,5] after the branch");

    // The half-propagator on the second row alone, from its raw domains.
    const SumRowAdapter sum(1, 0, 2);
    VarStore s;
    for (const Domain& d : sum_row_two()) s.add_var(d);
    expect(clex_lb(s, {0, 1, 2}, sum, {1, 6, 5}),
           "lower-bound filter failed on row 2");
    expect(s.dom(0) == Domain({2, 3, 4}),
           "row 2 first position should lose exactly value 1, got " +
               str(s.dom(0).values()));
    expect(s.dom(1) == Domain({6, 7, 8}),
           "row 2 second position should lose exactly value 5, got " +
               str(s.dom(1).values()));
    expect(s.dom(2) == Domain({4}), "row 2 third position changed");
    return "row 1 pinned to [1,6,5]; bound filter removed exactly 1 and 5";
}

// ------------------------------------------------------------ criterion 3

std::string criterion_sequence_example() {
    const SequenceSpec spec = two_of_three();
    const Dfa row_dfa = build_sequence_dfa(spec, {0, 1});

    // Each separate constraint is already domain consistent here.
    std::vector<Domain> wx = seq_x();
    expect(filter_regular(row_dfa, wx) && wx == seq_x(),
           "window constraint on X is not at a fixpoint beforehand");
    std::vector<Domain> wy = seq_y();
    expect(filter_regular(row_dfa, wy) && wy == seq_y(),
           "window constraint on Y is not at a fixpoint beforehand");
    {
        Model lex_only;
        std::vector<int> xs, ys;
        for (const Domain& d : seq_x()) xs.push_back(lex_only.add_var(d));
        for (const Domain& d : seq_y()) ys.push_back(lex_only.add_var(d));
        post_lex_leq(lex_only, xs, ys);
        expect(lex_only.propagate_to_fixpoint() == Consistency::kConsistent,
               "plain lex failed on the worked window instance");
        for (int i = 0; i < 4; ++i)
            expect(lex_only.store().dom(xs[i]) == seq_x()[i] &&
                       lex_only.store().dom(ys[i]) == seq_y()[i],
                   "plain lex pruned the worked window instance");
    }

    // The conjunction prunes: X collapses, Y stays.
    Model m;
    std::vector<int> xs, ys;
    for (const Domain& d : seq_x()) xs.push_back(m.add_var(d));
    for (const Domain& d : seq_y()) ys.push_back(m.add_var(d));
    post_clex_sequence(m, xs, ys, spec);
    expect(m.propagate_to_fixpoint() == Consistency::kConsistent,
           "combined window propagation failed");
    const std::vector<Value> want{0, 1, 1, 0};
    for (int i = 0; i < 4; ++i) {
        expect(m.store().dom(xs[i]) == Domain({want[i]}),
               "X not fixed to [0,1,1,0]");
        expect(m.store().dom(ys[i]) == seq_y()[i], "Y changed");
    }

    // Lex-least support of the first X position pinned to 1.
    std::vector<Domain> pinned = seq_x();
    pinned[0] = Domain({1});
    const auto support = check_consistency_min(spec, pinned);
    expect(support.has_value(), "no support for the pinned first position");
    expect(*support == std::vector<Value>{1, 1, 0, 1},
           "lex-least support is " + str(*support) + ", want [1,1,0,1]");
    return "separate filters idle, conjunction pins X to [0,1,1,0], "
           "support [1,1,0,1] found";
}

// ------------------------------------------------------------ criterion 4

constexpr std::uint64_t kEnumCap = 200'000;

std::string criterion_oracle_suites() {
    // Family A: the generic pair propagator with automaton rows.
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        std::mt19937_64 rng(seed * 2 + 1);
        const PairInstance p = draw_pair(rng, kEnumCap);
        const Dfa d1 = random_dfa(rng, 5, p.max_label);
        const Dfa d2 = (rng() % 2) ? d1 : random_dfa(rng, 5, p.max_label);
        Model m;
        std::vector<int> xs, ys;
        for (int i = 0; i < p.n; ++i) xs.push_back(m.add_var(p.doms[i]));
        for (int i = p.n; i < 2 * p.n; ++i)
            ys.push_back(m.add_var(p.doms[i]));
        post_clex(m, xs, ys, std::make_shared<RegularAdapter>(d1),
                  std::make_shared<RegularAdapter>(d2));
        const auto truth = oracle::brute_force_dc(
            p.doms, {oracle::regular_word(xs, d1),
                     oracle::regular_word(ys, d2), oracle::lex_leq(xs, ys)});
        const bool ok = m.propagate_to_fixpoint() == Consistency::kConsistent;
        expect(ok == truth.satisfiable,
               "generic pair: consistency mismatch at seed " +
                   std::to_string(seed));
        if (!ok) continue;
        for (int i = 0; i < 2 * p.n; ++i)
            expect(m.store().dom(i) == truth.domains[i],
                   "generic pair: domain mismatch at seed " +
                       std::to_string(seed));
    }

    // Family B: graph-marking bound filter and the product encoding.
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        std::mt19937_64 rng(seed * 2 + 1);
        PairInstance p = draw_pair(rng, kEnumCap);
        const Dfa d = random_dfa(rng, 5, p.max_label);
        std::vector<int> vars(p.n);
        for (int i = 0; i < p.n; ++i) vars[i] = i;
        std::vector<Value> bound;
        for (int i = 0; i < p.n; ++i)
            bound.push_back(static_cast<Value>(rng() % (p.max_label + 2)) -
                            1);
        const std::vector<Domain> row(p.doms.begin(), p.doms.begin() + p.n);
        VarStore s;
        for (int i = 0; i < p.n; ++i) s.add_var(row[i]);
        const bool ok = clex_lb_regular(s, vars, d, bound);
        const auto truth = oracle::brute_force_dc(
            row, {oracle::regular_word(vars, d), word_geq(vars, bound)});
        expect(ok == truth.satisfiable,
               "graph bound: consistency mismatch at seed " +
                   std::to_string(seed));
        if (ok)
            for (int i = 0; i < p.n; ++i)
                expect(s.dom(i) == truth.domains[i],
                       "graph bound: domain mismatch at seed " +
                           std::to_string(seed));

        Model m;
        std::vector<int> xs, ys;
        for (int i = 0; i < p.n; ++i) xs.push_back(m.add_var(p.doms[i]));
        for (int i = p.n; i < 2 * p.n; ++i)
            ys.push_back(m.add_var(p.doms[i]));
        post_clex_regular_product(m, xs, ys, d);
        const auto pair_truth = oracle::brute_force_dc(
            p.doms, {oracle::regular_word(xs, d), oracle::regular_word(ys, d),
                     oracle::lex_leq(xs, ys)});
        const bool pair_ok =
            m.propagate_to_fixpoint() == Consistency::kConsistent;
        expect(pair_ok == pair_truth.satisfiable,
               "product: consistency mismatch at seed " +
                   std::to_string(seed));
        if (pair_ok)
            for (int i = 0; i < 2 * p.n; ++i)
                expect(m.store().dom(i) == pair_truth.domains[i],
                       "product: domain mismatch at seed " +
                           std::to_string(seed));
    }

    // Family C: the one-pass window pair propagator, bits and shift values.
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        std::mt19937_64 rng(seed * 2 + 1);
        const bool multivalued = seed % 2 == 1;
        SequenceSpec spec;
        spec.k = 1 + static_cast<int>(rng() % 4);
        spec.u = 1 + static_cast<int>(rng() % spec.k);
        spec.l = static_cast<int>(rng() % (spec.u + 1));
        spec.in_set =
            multivalued ? std::vector<Value>{2, 3} : std::vector<Value>{1};
        const Value max_label = multivalued ? 3 : 1;
        const int n = 1 + static_cast<int>(rng() % 5);
        std::vector<Domain> doms;
        for (int i = 0; i < 2 * n; ++i)
            doms.push_back(random_domain(rng, 0, max_label));
        Model m;
        std::vector<int> xs, ys;
        for (int i = 0; i < n; ++i) xs.push_back(m.add_var(doms[i]));
        for (int i = n; i < 2 * n; ++i) ys.push_back(m.add_var(doms[i]));
        post_clex_sequence(m, xs, ys, spec);
        const auto truth = oracle::brute_force_dc(
            doms, {oracle::sequence(xs, spec), oracle::sequence(ys, spec),
                   oracle::lex_leq(xs, ys)});
        const bool ok = m.propagate_to_fixpoint() == Consistency::kConsistent;
        expect(ok == truth.satisfiable,
               "window pair: consistency mismatch at seed " +
                   std::to_string(seed));
        if (!ok) continue;
        for (int i = 0; i < 2 * n; ++i)
            expect(m.store().dom(i) == truth.domains[i],
                   "window pair: domain mismatch at seed " +
                       std::to_string(seed));
    }
    return "3 families x 500 random instances, zero mismatches";
}

// ------------------------------------------------------------ criterion 5

std::string criterion_triple_agreement() {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        std::mt19937_64 rng(seed * 7 + 3);
        const PairInstance p = draw_pair(rng, kEnumCap);
        const Dfa d = random_dfa(rng, 5, p.max_label);

        auto run = [&](auto post) {
            Model m;
            std::vector<int> xs, ys;
            for (int i = 0; i < p.n; ++i) xs.push_back(m.add_var(p.doms[i]));
            for (int i = p.n; i < 2 * p.n; ++i)
                ys.push_back(m.add_var(p.doms[i]));
            post(m, xs, ys);
            const bool ok =
                m.propagate_to_fixpoint() == Consistency::kConsistent;
            std::vector<Domain> got;
            if (ok)
                for (int i = 0; i < 2 * p.n; ++i)
                    got.push_back(m.store().dom(i));
            return std::pair(ok, got);
        };

        const auto generic = run([&](Model& m, const std::vector<int>& xs,
                                     const std::vector<int>& ys) {
            post_clex(m, xs, ys, std::make_shared<RegularAdapter>(d));
        });
        const auto graph = run([&](Model& m, const std::vector<int>& xs,
                                   const std::vector<int>& ys) {
            post_clex_regular(m, xs, ys, d);
        });
        const auto product = run([&](Model& m, const std::vector<int>& xs,
                                     const std::vector<int>& ys) {
            post_clex_regular_product(m, xs, ys, d);
        });
        expect(graph == generic, "graph marking diverges at seed " +
                                     std::to_string(seed));
        expect(product == generic, "product encoding diverges at seed " +
                                       std::to_string(seed));
    }
    return "generic, graph-marking and product encodings identical on "
           "100 instances";
}

// ------------------------------------------------------------ criterion 6

std::string criterion_stability() {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        std::mt19937_64 rng(seed * 2 + 1);
        const PairInstance p = draw_pair(rng, kEnumCap);
        const Dfa d1 = random_dfa(rng, 5, p.max_label);
        const Dfa d2 = (rng() % 2) ? d1 : random_dfa(rng, 5, p.max_label);
        const RegularAdapter cx(d1), cy(d2);

        VarStore s;
        std::vector<int> xs, ys, all;
        for (int i = 0; i < p.n; ++i) xs.push_back(s.add_var(p.doms[i]));
        for (int i = p.n; i < 2 * p.n; ++i)
            ys.push_back(s.add_var(p.doms[i]));
        all = xs;
        all.insert(all.end(), ys.begin(), ys.end());

        const auto xl = c_min(cx, s.snapshot(xs));
        const auto yu = c_max(cy, s.snapshot(ys));
        if (!xl || !yu || lex_compare(*xl, *yu) > 0) continue;

        // Bound stability: the half-propagators keep the extremes.
        expect(clex_ub(s, xs, cx, *yu), "half-propagator emptied X");
        expect(clex_lb(s, ys, cy, *xl), "half-propagator emptied Y");
        expect(c_min(cx, s.snapshot(xs)) == xl,
               "least X word moved at seed " + std::to_string(seed));
        expect(c_max(cy, s.snapshot(ys)) == yu,
               "greatest Y word moved at seed " + std::to_string(seed));

        // Idempotence of the full propagator from the same raw domains.
        VarStore s2;
        for (const Domain& dom : p.doms) s2.add_var(dom);
        ClexPropagator prop(xs, ys, std::make_shared<RegularAdapter>(d1),
                            std::make_shared<RegularAdapter>(d2));
        if (prop.propagate(s2) == PropStatus::kFailed) continue;
        const auto once = s2.snapshot(all);
        expect(prop.propagate(s2) != PropStatus::kFailed,
               "second run failed at seed " + std::to_string(seed));
        expect(s2.snapshot(all) == once,
               "second run changed domains at seed " + std::to_string(seed));
    }
    return "half-propagators keep both extremes; reruns change nothing "
           "(500 instances)";
}

// ------------------------------------------------------------ criterion 7

std::string criterion_benchmark() {
    nsp::GenParams gp;
    gp.nurses = 10;
    gp.days = 14;
    gp.demand_lo = 2;
    gp.demand_hi = 6;
    nsp::ModelConfig plain, combined;
    plain.mode = nsp::Mode::kSeqLex;
    plain.seq = SequenceSpec{2, 3, 4, {1}};
    combined.mode = nsp::Mode::kClexSeq;
    combined.seq = plain.seq;

    long total_plain_bt = 0, total_combined_bt = 0;
    int with_backtracking = 0;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const nsp::NspInstance inst = nsp::generate_instance(seed, gp);
        SearchLimits lim;
        lim.time = std::chrono::milliseconds(10'000);

        nsp::BuiltModel pm = nsp::build_model(inst, plain);
        const SearchStats ps = solve(pm.model, pm.order, lim);
        nsp::BuiltModel cm = nsp::build_model(inst, combined);
        const SearchStats cs = solve(cm.model, cm.order, lim);

        expect(ps.outcome != Outcome::kLimitReached,
               "decomposed run hit the budget at seed " +
                   std::to_string(seed));
        expect(cs.outcome != Outcome::kLimitReached,
               "combined run hit the budget at seed " + std::to_string(seed));
        expect(ps.outcome == cs.outcome,
               "outcome mismatch at seed " + std::to_string(seed));
        expect(cs.nodes <= ps.nodes,
               "combined searched more nodes at seed " +
                   std::to_string(seed) + " (" + std::to_string(cs.nodes) +
                   " vs " + std::to_string(ps.nodes) + ")");
        total_plain_bt += ps.backtracks;
        total_combined_bt += cs.backtracks;
        if (ps.backtracks > 0) ++with_backtracking;
    }
    expect(total_combined_bt < total_plain_bt,
           "no strictly positive backtrack reduction across the batch");
    expect(with_backtracking >= 10,
           "the batch is too easy to demonstrate anything");
    std::ostringstream os;
    os << "50 instances: combined nodes never above decomposed; backtracks "
       << total_plain_bt << " -> " << total_combined_bt << " ("
       << (total_plain_bt / std::max(total_combined_bt, 1L)) << "x fewer)";
    return os.str();
}

// ------------------------------------------------------------ criterion 8

std::string criterion_product_language() {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        std::mt19937_64 rng(seed * 13 + 5);
        const Value max_label = 1 + static_cast<Value>(rng() % 2);
        const Dfa d1 = random_dfa(rng, 4, max_label);
        const Dfa d2 = (seed % 3 == 0) ? d1 : random_dfa(rng, 4, max_label);
        const Dfa prod = build_product_dfa(d1, d2);
        for (int n = 0; n <= 4; ++n) {
            const auto words = all_words(n, max_label);
            for (const auto& x : words)
                for (const auto& y : words) {
                    std::vector<Value> inter;
                    for (int i = 0; i < n; ++i) {
                        inter.push_back(x[i]);
                        inter.push_back(y[i]);
                    }
                    const bool want = d1.accepts(x) && d2.accepts(y) &&
                                      lex_compare(x, y) <= 0;
                    expect(prod.accepts(inter) == want,
                           "product language wrong at seed " +
                               std::to_string(seed) + " x=" + str(x) +
                               " y=" + str(y));
                }
        }
    }

    // State bound d*Q^2 + Q^2 on same-automaton products with Q >= 2.
    for (int q = 2; q <= 5; ++q)
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            std::mt19937_64 rng(seed * 31 + static_cast<unsigned>(q));
            const Value max_label = 1 + static_cast<Value>(rng() % 2);
            std::vector<int> finals;
            for (int s = 0; s < q; ++s)
                if (rng() % 2) finals.push_back(s);
            Dfa d = make_dfa(q, 0, std::move(finals));
            for (int s = 0; s < q; ++s)
                for (Value v = 0; v <= max_label; ++v)
                    if (rng() % 5 < 4)
                        d.add_arc(s, v, static_cast<int>(rng() % q));
            const Dfa prod = build_product_dfa(d, d);
            const long dd = static_cast<long>(d.alphabet().size());
            expect(prod.num_states <= dd * q * q + q * q,
                   "product has " + std::to_string(prod.num_states) +
                       " states, bound " +
                       std::to_string(dd * q * q + q * q) + " at q=" +
                       std::to_string(q) + " seed " + std::to_string(seed));
        }
    return "exhaustive language check to length 4 and the quadratic state "
           "bound hold";
}

// --------------------------------------------------------------- driver

struct Criterion {
    const char* label;
    std::function<std::string()> run;
    long budget_ms;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"1 separation chain", criterion_separation, 30'000},
        {"2 worked sum rows", criterion_sum_rows, 30'000},
        {"3 worked window rows", criterion_sequence_example, 30'000},
        {"4 oracle equivalence", criterion_oracle_suites, 300'000},
        {"5 triple agreement", criterion_triple_agreement, 300'000},
        {"6 stability", criterion_stability, 300'000},
        {"7 benchmark dominance", criterion_benchmark, 600'000},
        {"8 product automaton", criterion_product_language, 300'000},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            detail = c.run();
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        const long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
        if (ok && ms > c.budget_ms) {
            ok = false;
            detail = "over budget: " + std::to_string(ms) + " ms > " +
                     std::to_string(c.budget_ms) + " ms";
        }
        std::printf("[%s] %s: %s (%ld ms)\n", ok ? "PASS" : "FAIL", c.label,
                    detail.c_str(), ms);
        if (!ok) ++failures;
    }
    return failures;
}
