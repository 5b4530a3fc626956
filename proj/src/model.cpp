#include "clex/model.hpp"

#include "clex/util.hpp"

namespace clex {

int lex_compare(const std::vector<Value>& a, const std::vector<Value>& b) {
    CLEX_ASSERT(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

PropagatorHandle Model::post(std::unique_ptr<Propagator> p) {
    int id = static_cast<int>(props_.size());
    PropagatorHandle h{id, p->scope(), p->priority()};
    CLEX_ASSERT(h.priority >= 0 && h.priority < static_cast<int>(queue_.size()));
    watchers_.resize(store_.num_vars());
    for (int v : h.scope) {
        CLEX_ASSERT(v >= 0 && v < store_.num_vars());
        watchers_[v].push_back(id);
    }
    props_.push_back(std::move(p));
    queued_.push_back(0);
    entailed_.push_back(0);
    enqueue(id);
    return h;
}

void Model::enqueue(int pid) {
    if (queued_[pid] || entailed_[pid]) return;
    queued_[pid] = 1;
    queue_[static_cast<std::size_t>(props_[pid]->priority())].push_back(pid);
}

void Model::drain_dirty(int running_pid) {
    for (int v : store_.take_dirty()) {
        if (v >= static_cast<int>(watchers_.size())) continue;
        for (int pid : watchers_[v]) {
            if (pid != running_pid) enqueue(pid);
        }
    }
}

Consistency Model::propagate_to_fixpoint() {
    drain_dirty(-1);
    for (;;) {
        int pid = -1;
        for (auto& bucket : queue_) {
            if (!bucket.empty()) {
                pid = bucket.front();
                bucket.pop_front();
                break;
            }
        }
        if (pid < 0) return Consistency::kConsistent;
        queued_[pid] = 0;
        if (entailed_[pid]) continue;
        PropStatus st = props_[pid]->propagate(store_);
        if (st == PropStatus::kFailed) {
            for (auto& bucket : queue_) {
                for (int q : bucket) queued_[q] = 0;
                bucket.clear();
            }
            store_.take_dirty();
            return Consistency::kFailed;
        }
        if (st == PropStatus::kEntailed) {
            entailed_[pid] = 1;
            entailed_trail_.emplace_back(pid, store_.level());
        }
        // Propagators are idempotent, so the one that just ran is not
        // requeued for its own changes.
        drain_dirty(pid);
    }
}

void Model::push_level() { store_.push_level(); }

void Model::pop_level() {
    store_.pop_level();
    while (!entailed_trail_.empty() &&
           entailed_trail_.back().second > store_.level()) {
        entailed_[entailed_trail_.back().first] = 0;
        entailed_trail_.pop_back();
    }
}

}  // namespace clex
