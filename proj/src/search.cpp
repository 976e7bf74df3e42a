#include "mutvis/search.hpp"

#include <algorithm>
#include <atomic>
#include <bitset>
#include <mutex>
#include <thread>
#include <unordered_set>

namespace mutvis {

namespace {

using Mask = std::bitset<kMaxSearchCandidates>;

bool mask_lex_less(const Mask &a, const Mask &b, std::size_t width) {
    // Sorted-member order: at the first index where the masks differ, the mask holding it is smaller.
    for (std::size_t i = 0; i < width; ++i)
        if (a[i] != b[i])
            return a[i];
    return false;
}

class Worker {
  public:
    Worker(std::size_t universe, std::span<const Vertex> candidates, const SetPredicate &admissible,
           const SearchOptions &options, std::atomic<std::size_t> *shared_best)
        : universe_(universe), candidates_(candidates), admissible_(admissible), options_(options),
          shared_best_(shared_best), buckets_(candidates.size() + 1) {}

    void run_from(const Mask &chosen, std::size_t chosen_size, Mask remaining) {
        best_ = chosen;
        best_size_ = chosen_size;
        dfs(chosen, chosen_size, remaining);
    }

    /// Tests {index} and, if admissible, searches the subtree whose smallest member is index.
    void run_subtree(std::size_t index) {
        Mask single;
        single.set(index);
        best_.reset();
        best_size_ = 0;
        found_ = false;
        if (!test(single))
            return;
        Mask remaining;
        for (std::size_t j = index + 1; j < candidates_.size(); ++j)
            remaining.set(j);
        found_ = true;
        best_ = single;
        best_size_ = 1;
        publish(1);
        dfs(single, 1, remaining);
    }

    const Mask &best() const { return best_; }
    std::size_t best_size() const { return best_size_; }
    bool found() const { return found_; }
    const SearchStats &stats() const { return stats_; }

  private:
    VertexSet to_set(const Mask &m) const {
        VertexSet s(universe_);
        for (std::size_t i = 0; i < candidates_.size(); ++i)
            if (m[i])
                s.insert(candidates_[i]);
        return s;
    }

    bool test(const Mask &m) {
        ++stats_.predicate_calls;
        return admissible_(to_set(m));
    }

    void publish(std::size_t size) {
        if (shared_best_ == nullptr)
            return;
        auto cur = shared_best_->load();
        while (cur < size && !shared_best_->compare_exchange_weak(cur, size)) {
        }
    }

    bool can_improve(std::size_t bound) const {
        if (bound <= best_size_)
            return false;
        // Other workers' results only prune strictly, so equal-size sets that are
        // lexicographically smaller are still found here.
        return shared_best_ == nullptr || bound >= shared_best_->load();
    }

    bool contains_nogood(const Mask &m) const {
        for (const auto &bucket : buckets_)
            for (const auto &ng : bucket)
                if ((ng & ~m).none())
                    return true;
        return false;
    }

    void learn(Mask failing, std::size_t added) {
        for (std::size_t i = 0; i < candidates_.size(); ++i) {
            if (i == added || !failing[i])
                continue;
            Mask trial = failing;
            trial.reset(i);
            if (!test(trial))
                failing = trial;
        }
        if (stored_ >= options_.max_nogoods || !seen_.insert(failing).second)
            return;
        buckets_[failing.count()].push_back(failing);
        ++stored_;
        ++stats_.nogoods;
    }

    // Drops candidates that would complete a nogood together with `chosen`.
    void filter(const Mask &chosen, Mask &remaining) const {
        for (const auto &bucket : buckets_) {
            for (const auto &ng : bucket) {
                Mask open = ng & ~chosen;
                if (open.count() == 1)
                    remaining &= ~open;
            }
        }
    }

    // Number of pairwise disjoint nogood remainders inside `remaining`; each one
    // forces at least one exclusion.
    std::size_t packing(const Mask &chosen, const Mask &remaining) const {
        Mask used;
        std::size_t count = 0;
        for (const auto &bucket : buckets_) {
            for (const auto &ng : bucket) {
                Mask open = ng & ~chosen;
                if ((open & ~remaining).any() || (open & used).any() || open.count() < 2)
                    continue;
                used |= open;
                ++count;
            }
        }
        return count;
    }

    void dfs(const Mask &chosen, std::size_t chosen_size, Mask remaining) {
        ++stats_.nodes;
        if (chosen_size > best_size_) {
            best_ = chosen;
            best_size_ = chosen_size;
            found_ = true;
            publish(chosen_size);
        }
        filter(chosen, remaining);
        while (remaining.any()) {
            std::size_t open = remaining.count();
            if (!can_improve(chosen_size + open))
                return;
            if (open >= 2 && !can_improve(chosen_size + open - packing(chosen, remaining)))
                return;
            std::size_t next = remaining._Find_first();
            remaining.reset(next);
            Mask grown = chosen;
            grown.set(next);
            if (!contains_nogood(grown)) {
                if (test(grown)) {
                    dfs(grown, chosen_size + 1, remaining);
                } else {
                    learn(grown, next);
                    filter(chosen, remaining);
                }
            }
        }
    }

    std::size_t universe_;
    std::span<const Vertex> candidates_;
    const SetPredicate &admissible_;
    const SearchOptions &options_;
    std::atomic<std::size_t> *shared_best_;

    std::vector<std::vector<Mask>> buckets_;
    std::unordered_set<Mask> seen_;
    std::size_t stored_ = 0;

    Mask best_;
    std::size_t best_size_ = 0;
    bool found_ = false;
    SearchStats stats_;
};

void add_stats(SearchStats &into, const SearchStats &from) {
    into.nodes += from.nodes;
    into.predicate_calls += from.predicate_calls;
    into.nogoods += from.nogoods;
}

} // namespace

SearchOutcome max_downward_closed(std::size_t universe, std::span<const Vertex> candidates,
                                  const SetPredicate &admissible, const SearchOptions &options) {
    if (candidates.size() > kMaxSearchCandidates)
        throw CapExceeded("subset search supports at most " + std::to_string(kMaxSearchCandidates) +
                              " candidates, got " + std::to_string(candidates.size()),
                          "--cap-bp");
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (candidates[i] >= universe)
            throw InvalidInput("search candidate outside the vertex universe");
        if (i > 0 && candidates[i] <= candidates[i - 1])
            throw InvalidInput("search candidates must be strictly ascending");
    }

    auto to_set = [&](const Mask &m) {
        VertexSet s(universe);
        for (std::size_t i = 0; i < candidates.size(); ++i)
            if (m[i])
                s.insert(candidates[i]);
        return s;
    };

    SearchOutcome out{VertexSet(universe), {}};
    unsigned threads = std::max(1u, options.threads);
    if (threads == 1 || candidates.size() < 2) {
        Worker worker(universe, candidates, admissible, options, nullptr);
        Mask remaining;
        for (std::size_t i = 0; i < candidates.size(); ++i)
            remaining.set(i);
        worker.run_from(Mask{}, 0, remaining);
        out.best = to_set(worker.best());
        out.stats = worker.stats();
        return out;
    }

    // One task per smallest member; results reduced by (size desc, lex asc).
    std::atomic<std::size_t> shared_best{0};
    std::atomic<std::size_t> next_task{0};
    std::vector<Mask> task_best(candidates.size());
    std::vector<std::size_t> task_size(candidates.size(), 0);
    std::mutex stats_mutex;
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            Worker worker(universe, candidates, admissible, options, &shared_best);
            for (;;) {
                std::size_t task = next_task.fetch_add(1);
                if (task >= candidates.size())
                    break;
                worker.run_subtree(task);
                if (worker.found()) {
                    task_best[task] = worker.best();
                    task_size[task] = worker.best_size();
                }
            }
            std::lock_guard lock(stats_mutex);
            add_stats(out.stats, worker.stats());
        });
    }
    pool.clear();

    Mask best;
    std::size_t best_size = 0;
    for (std::size_t task = 0; task < candidates.size(); ++task) {
        if (task_size[task] > best_size ||
            (task_size[task] == best_size && best_size > 0 &&
             mask_lex_less(task_best[task], best, candidates.size()))) {
            best = task_best[task];
            best_size = task_size[task];
        }
    }
    out.best = to_set(best);
    return out;
}

} // namespace mutvis
