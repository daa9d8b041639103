#include "krnn/solvers.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <stdexcept>
#include <thread>

#include "krnn/error.hpp"
#include "krnn/k_permutations.hpp"

namespace krnn {
namespace {

constexpr CostValue kInfinity = std::numeric_limits<CostValue>::max();

// Both completion rules grow `partial` in place and return the cost of the
// edges they added (the closing edge excluded).

CostValue GreedyComplete(const Instance& instance, PartialTour& partial) {
  CostValue added = 0;
  Vertex current = partial.tail();
  while (!partial.complete()) {
    const auto row = instance.out_row(current);
    const auto candidates = partial.unvisited();
    Vertex best = candidates[0];
    CostValue best_cost = row[best];
    for (std::size_t i = 1; i < candidates.size(); ++i) {
      const Vertex v = candidates[i];
      const CostValue c = row[v];
      if (c < best_cost || (c == best_cost && v < best)) {
        best = v;
        best_cost = c;
      }
    }
    partial.Append(best);
    added += best_cost;
    current = best;
  }
  return added;
}

CostValue BidirectionalComplete(const Instance& instance, PartialTour& partial) {
  CostValue added = 0;
  while (!partial.complete()) {
    const auto from_tail = instance.out_row(partial.tail());  // c(tail, p)
    const auto into_head = instance.in_row(partial.head());   // c(p, head)
    Vertex best = -1;
    CostValue best_cost = kInfinity;
    bool best_on_head = false;
    for (const Vertex v : partial.unvisited()) {
      const CostValue ct = from_tail[v];
      if (ct < best_cost || (ct == best_cost && (best_on_head || v < best))) {
        best = v;
        best_cost = ct;
        best_on_head = false;
      }
      const CostValue ch = into_head[v];
      if (ch < best_cost || (ch == best_cost && best_on_head && v < best)) {
        best = v;
        best_cost = ch;
        best_on_head = true;
      }
    }
    const CostValue to_head = into_head[best];
    const CostValue from_end = from_tail[best];
    if (to_head < from_end) {
      partial.Prepend(best);
      added += to_head;
    } else {
      partial.Append(best);
      added += from_end;
    }
  }
  return added;
}

using CompleteFn = CostValue (*)(const Instance&, PartialTour&);

struct Candidate {
  CostValue length = kInfinity;
  std::uint64_t rank = std::numeric_limits<std::uint64_t>::max();

  bool operator<(const Candidate& o) const {
    return length < o.length || (length == o.length && rank < o.rank);
  }
};

// Best start among ranks [lo, hi). Ranks are visited in increasing order, so
// a strictly shorter tour is the only way to displace the incumbent.
Candidate ScanRange(const Instance& instance, const KPermutations& perms,
                    std::uint64_t lo, std::uint64_t hi, CompleteFn complete) {
  Candidate best;
  if (lo >= hi) return best;
  const int n = instance.dimension();
  const int k = perms.k();
  auto cursor = perms.CursorAt(lo);
  PartialTour partial(n);
  std::vector<CostValue> prefix_cost(k, 0);
  int changed = 0;
  for (std::uint64_t rank = lo; rank < hi; ++rank) {
    const auto& start = cursor.tuple();
    for (int i = std::max(changed, 1); i < k; ++i) {
      prefix_cost[i] = prefix_cost[i - 1] + instance.at(start[i - 1], start[i]);
    }
    CostValue total = prefix_cost[k - 1];
    if (k == n) {
      total += instance.at(start[k - 1], start[0]);
    } else {
      partial.Reset(start);
      total += complete(instance, partial);
      total += instance.at(partial.tail(), partial.head());
    }
    if (total < best.length) best = {total, rank};
    changed = cursor.Advance();
  }
  return best;
}

RunResult RunRepetitive(const Instance& instance, int k, const RunOptions& options,
                        Variant variant, CompleteFn complete) {
  const auto started = std::chrono::steady_clock::now();
  const int n = instance.dimension();
  if (k < 1 || k > n) throw KOutOfRange(k, 1, n);
  if (options.threads < 1) throw Error("thread count must be at least 1");
  const KPermutations perms(n, k);
  const auto count = perms.count();
  if (!count || *count > options.start_budget) {
    throw BudgetExceeded("starting permutations",
                         count.value_or(std::numeric_limits<std::uint64_t>::max()),
                         options.start_budget);
  }

  const std::uint64_t total = *count;
  const auto workers = static_cast<std::uint64_t>(
      std::min<std::uint64_t>(static_cast<std::uint64_t>(options.threads), total));
  auto bound = [&](std::uint64_t w) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(total) * w / workers);
  };

  std::vector<Candidate> partial_best(workers);
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    auto work = [&](std::uint64_t w) {
      try {
        partial_best[w] = ScanRange(instance, perms, bound(w), bound(w + 1), complete);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    };
    for (std::uint64_t w = 1; w < workers; ++w) pool.emplace_back(work, w);
    work(0);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  const Candidate best = *std::min_element(partial_best.begin(), partial_best.end());

  RunResult result;
  result.variant = variant;
  result.k = k;
  result.starts_evaluated = total;
  result.winning_start = perms.Unrank(best.rank);
  PartialTour partial(n, result.winning_start);
  complete(instance, partial);
  result.tour.order.assign(partial.path().begin(), partial.path().end());
  result.tour.length = CyclicLength(instance, result.tour.order);
  if (result.tour.length != best.length) {
    throw std::logic_error("replayed tour length differs from scanned length");
  }
  result.wall_time = std::chrono::steady_clock::now() - started;
  return result;
}

Tour Finish(const Instance& instance, PartialTour& partial, CompleteFn complete) {
  if (partial.empty()) throw Error("partial tour must contain at least one vertex");
  complete(instance, partial);
  Tour tour;
  tour.order.assign(partial.path().begin(), partial.path().end());
  tour.length = CyclicLength(instance, tour.order);
  return tour;
}

class BranchingSearch {
 public:
  BranchingSearch(const Instance& instance, std::uint64_t budget)
      : instance_(instance),
        budget_(budget),
        visited_(instance.dimension(), false) {}

  Tour Run(Vertex start) {
    path_.push_back(start);
    visited_[start] = true;
    Expand(0);
    return Tour{best_order_, best_length_};
  }

 private:
  void Expand(CostValue length) {
    if (++nodes_ > budget_) {
      throw BudgetExceeded("branching nodes expanded", nodes_, budget_);
    }
    const int n = instance_.dimension();
    const Vertex current = path_.back();
    if (static_cast<int>(path_.size()) == n) {
      const CostValue total = length + instance_.at(current, path_.front());
      if (total < best_length_) {
        best_length_ = total;
        best_order_ = path_;
      }
      return;
    }
    const auto row = instance_.out_row(current);
    CostValue nearest = kInfinity;
    for (Vertex v = 0; v < n; ++v) {
      if (!visited_[v]) nearest = std::min(nearest, row[v]);
    }
    for (Vertex v = 0; v < n; ++v) {
      if (visited_[v] || row[v] != nearest) continue;
      visited_[v] = true;
      path_.push_back(v);
      Expand(length + nearest);
      path_.pop_back();
      visited_[v] = false;
    }
  }

  const Instance& instance_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<bool> visited_;
  std::vector<Vertex> path_;
  std::vector<Vertex> best_order_;
  CostValue best_length_ = kInfinity;
};

}  // namespace

std::string_view VariantName(Variant variant) {
  switch (variant) {
    case Variant::kKRnn: return "krnn";
    case Variant::kBiKRnn: return "bi";
    case Variant::kBranchingNn: return "branch";
    case Variant::kNn: return "nn";
  }
  return "?";
}

Tour NnExtend(const Instance& instance, const PartialTour& partial) {
  PartialTour work = partial;
  return Finish(instance, work, &GreedyComplete);
}

Tour BiExtend(const Instance& instance, const PartialTour& partial) {
  PartialTour work = partial;
  return Finish(instance, work, &BidirectionalComplete);
}

Tour RunNnFrom(const Instance& instance, Vertex start) {
  const int n = instance.dimension();
  if (start < 0 || start >= n) throw VertexOutOfRange(start, n);
  const Vertex prefix[] = {start};
  PartialTour partial(n, prefix);
  return Finish(instance, partial, &GreedyComplete);
}

RunResult RunKRnn(const Instance& instance, int k, const RunOptions& options) {
  return RunRepetitive(instance, k, options, Variant::kKRnn, &GreedyComplete);
}

RunResult RunBiKRnn(const Instance& instance, int k, const RunOptions& options) {
  return RunRepetitive(instance, k, options, Variant::kBiKRnn, &BidirectionalComplete);
}

Tour RunBranchingNn(const Instance& instance, Vertex start, std::uint64_t node_budget) {
  const int n = instance.dimension();
  if (start < 0 || start >= n) throw VertexOutOfRange(start, n);
  if (node_budget < static_cast<std::uint64_t>(n)) {
    throw Error("node budget " + std::to_string(node_budget) +
                " is below the instance dimension " + std::to_string(n));
  }
  return BranchingSearch(instance, node_budget).Run(start);
}

}  // namespace krnn
