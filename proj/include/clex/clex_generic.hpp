#pragma once

#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "clex/dfa.hpp"
#include "clex/model.hpp"

namespace clex {

// Filter for one row constraint, applied to scratch domains independent of
// any store. filter() must enforce exactly domain consistency and return
// false iff some position lost all values; the bound computations and the
// marking walks below rely on that exactness.
class ConstraintAdapter {
  public:
    virtual ~ConstraintAdapter() = default;
    virtual bool filter(std::vector<Domain>& doms) const = 0;
};

class TrueAdapter : public ConstraintAdapter {
  public:
    bool filter(std::vector<Domain>& doms) const override;
};

// doms[y] == doms[x] + doms[z] for three positions of the row.
class SumRowAdapter : public ConstraintAdapter {
  public:
    SumRowAdapter(int y, int x, int z) : y_(y), x_(x), z_(z) {}
    bool filter(std::vector<Domain>& doms) const override;

  private:
    int y_, x_, z_;
};

// The row is a word accepted by a DFA.
class RegularAdapter : public ConstraintAdapter {
  public:
    explicit RegularAdapter(Dfa dfa) : dfa_(std::move(dfa)) {}
    bool filter(std::vector<Domain>& doms) const override;
    const Dfa& dfa() const { return dfa_; }

  private:
    Dfa dfa_;
};

// Lex-least / lex-greatest solution of the adapter's constraint within
// doms, or nullopt when it has no solution there.
std::optional<std::vector<Value>> c_min(const ConstraintAdapter& c,
                                        std::vector<Domain> doms);
std::optional<std::vector<Value>> c_max(const ConstraintAdapter& c,
                                        std::vector<Domain> doms);

// Add to marks[i], for each position i, the values of base_doms[i] taking
// part in some solution of c within probe_doms.
void mark_consistent_values(const ConstraintAdapter& c,
                            const std::vector<Domain>& base_doms,
                            std::vector<Domain> probe_doms,
                            std::vector<std::set<Value>>& marks);

// Domain consistency of C(X) and (lb <=lex X) on the store vars xs. The
// bound word lb is arbitrary (in the pair propagator it is the lex extreme
// solution of the opposite row, so it need not satisfy C; the X == lb case
// is checked by filtering, never assumed). Dually clex_ub enforces C(X)
// and (X <=lex ub). Return false on failure (some var ends with no
// supported value).
bool clex_lb(VarStore& s, const std::vector<int>& xs,
             const ConstraintAdapter& c, const std::vector<Value>& lb);
bool clex_ub(VarStore& s, const std::vector<int>& xs,
             const ConstraintAdapter& c, const std::vector<Value>& ub);

// C(X) and C'(Y) and X <=lex Y, propagated to domain consistency of the
// whole conjunction in one run. Rows may carry different constraints.
class ClexPropagator : public Propagator {
  public:
    ClexPropagator(std::vector<int> xs, std::vector<int> ys,
                   std::shared_ptr<const ConstraintAdapter> cx,
                   std::shared_ptr<const ConstraintAdapter> cy);
    PropStatus propagate(VarStore& store) override;
    const std::vector<int>& scope() const override { return scope_; }
    int priority() const override { return 2; }

  private:
    std::vector<int> xs_, ys_, scope_;
    std::shared_ptr<const ConstraintAdapter> cx_, cy_;
};

PropagatorHandle post_clex(Model& m, std::vector<int> xs, std::vector<int> ys,
                           std::shared_ptr<const ConstraintAdapter> cx,
                           std::shared_ptr<const ConstraintAdapter> cy);
PropagatorHandle post_clex(Model& m, std::vector<int> xs, std::vector<int> ys,
                           std::shared_ptr<const ConstraintAdapter> c);

}  // namespace clex
