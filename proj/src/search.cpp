#include "linkforge/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <numeric>
#include <thread>

#include "linkforge/bounds.hpp"
#include "linkforge/errors.hpp"
#include "linkforge/milnor.hpp"

namespace linkforge {

namespace {

constexpr std::uint64_t kMaxMaterializedSubsets = 20'000'000;

int budget_cap(const std::map<std::pair<int, int>, int>& caps,
               std::pair<int, int> key) {
  auto it = caps.find(key);
  return it == caps.end() ? -1 : it->second;  // -1 = uncapped
}

}  // namespace

ChangeSetEnumerator::ChangeSetEnumerator(const LinkDiagram& d,
                                         const SearchBudget& budget)
    : budget_(budget) {
  if (budget.max_changes < 0) {
    raise(ErrorCode::InvalidParams, "max_changes must be nonnegative");
  }
  for (const auto& [key, cap] : budget.per_pair_caps) {
    if (cap < 0 || key.first >= key.second) {
      raise(ErrorCode::InvalidParams, "per-pair caps need i < j and cap >= 0");
    }
  }
  for (const auto& [comp, cap] : budget.per_component_self_caps) {
    (void)comp;
    if (cap < 0) {
      raise(ErrorCode::InvalidParams, "self caps must be nonnegative");
    }
  }
  for (const auto& c : d.crossings) {
    ids_.push_back(c.id);
    kind_.push_back(crossing_components(d, c));
  }
}

bool ChangeSetEnumerator::admissible(const std::vector<int>& subset) const {
  std::map<std::pair<int, int>, int> pair_used;
  std::map<int, int> self_used;
  for (int idx : subset) {
    const CrossingPair& kp = kind_[idx];
    if (kp.self) {
      ++self_used[kp.i];
    } else {
      ++pair_used[{kp.i, kp.j}];
    }
  }
  for (const auto& [comp, used] : self_used) {
    auto it = budget_.per_component_self_caps.find(comp);
    int cap = it == budget_.per_component_self_caps.end() ? -1 : it->second;
    if (cap >= 0 && used > cap) return false;
  }
  for (const auto& [key, used] : pair_used) {
    int cap = budget_cap(budget_.per_pair_caps, key);
    if (cap >= 0 && used > cap) return false;
  }
  return true;
}

bool ChangeSetEnumerator::advance() {
  const int n = static_cast<int>(ids_.size());
  if (fresh_) {
    fresh_ = false;
    size_ = 0;
    indices_.clear();
    return true;  // the empty set
  }
  // odometer over combinations of the current size
  int pos = size_ - 1;
  while (pos >= 0 && indices_[pos] == n - (size_ - pos)) --pos;
  if (pos < 0) {
    ++size_;
    if (size_ > budget_.max_changes || size_ > n) {
      done_ = true;
      return false;
    }
    indices_.resize(size_);
    std::iota(indices_.begin(), indices_.end(), 0);
    return true;
  }
  ++indices_[pos];
  for (int p = pos + 1; p < size_; ++p) indices_[p] = indices_[p - 1] + 1;
  return true;
}

std::optional<std::vector<int>> ChangeSetEnumerator::next() {
  while (!done_) {
    if (!advance()) break;
    if (admissible(indices_)) {
      std::vector<int> subset;
      subset.reserve(indices_.size());
      for (int idx : indices_) subset.push_back(ids_[idx]);
      return subset;
    }
  }
  return std::nullopt;
}

std::uint64_t ChangeSetEnumerator::total_count() const {
  // Independent closed-form count: crossings fall into classes (self of a
  // component, or a pair {i,j}); subsets factor through per-class choices.
  std::map<std::pair<int, int>, int> class_sizes;
  for (const auto& kp : kind_) {
    class_sizes[{kp.i, kp.self ? kp.i : kp.j}] += 1;
  }
  std::vector<std::uint64_t> poly{1};  // poly[s] = #ways to pick s so far
  auto binom = [](int n, int k) {
    std::uint64_t r = 1;
    for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
  };
  for (const auto& [key, count] : class_sizes) {
    int cap = count;
    if (key.first == key.second) {
      auto it = budget_.per_component_self_caps.find(key.first);
      if (it != budget_.per_component_self_caps.end()) {
        cap = std::min(cap, it->second);
      }
    } else {
      int c = budget_cap(budget_.per_pair_caps, key);
      if (c >= 0) cap = std::min(cap, c);
    }
    cap = std::min(cap, budget_.max_changes);
    std::vector<std::uint64_t> next(
        std::min<std::size_t>(poly.size() + cap, budget_.max_changes + 1), 0);
    for (std::size_t s = 0; s < poly.size(); ++s) {
      for (int t = 0; t <= cap && s + t < next.size(); ++t) {
        next[s + t] += poly[s] * binom(count, t);
      }
    }
    poly = std::move(next);
  }
  std::uint64_t total = 0;
  for (std::uint64_t c : poly) total += c;
  return total;
}

bool necessary_condition_trivial(const LinkDiagram& d, int k) {
  if (!mu_trivial_to_length(d, k)) return false;
  if (k >= 3) {
    for (int i = 1; i <= d.component_count(); ++i) {
      if (v2(d, i) != 0) return false;
    }
  }
  return true;
}

namespace {

struct Evaluation {
  bool witness = false;
  Witness data;
};

Evaluation evaluate_candidate(const LinkDiagram& d, const std::vector<int>& subset,
                              int k) {
  std::set<int> change_set(subset.begin(), subset.end());
  LinkDiagram changed = apply_changes(d, change_set);
  Evaluation ev;
  ev.data.change_set = change_set;
  ev.data.mu_trivial = mu_trivial_to_length(changed, k);
  for (int i = 1; i <= changed.component_count(); ++i) {
    ev.data.v2_values.push_back(v2(changed, i));
  }
  bool v2_ok = true;
  if (k >= 3) {
    for (std::int64_t value : ev.data.v2_values) v2_ok &= value == 0;
  }
  ev.witness = ev.data.mu_trivial && v2_ok;
  return ev;
}

std::vector<std::vector<int>> materialize(const LinkDiagram& d,
                                          const SearchBudget& budget) {
  ChangeSetEnumerator en(d, budget);
  if (en.total_count() > kMaxMaterializedSubsets) {
    raise(ErrorCode::CapacityExceeded,
          "search budget enumerates more than " +
              std::to_string(kMaxMaterializedSubsets) + " subsets");
  }
  std::vector<std::vector<int>> out;
  while (auto subset = en.next()) out.push_back(std::move(*subset));
  return out;
}

// Evaluates candidates over a worker pool; results are keyed by candidate
// index so the merge is deterministic for any worker count.
std::vector<std::pair<std::size_t, Witness>> evaluate_pool(
    const LinkDiagram& d, const std::vector<std::vector<int>>& candidates,
    int k, int workers) {
  workers = std::max(1, workers);
  std::atomic<std::size_t> cursor{0};
  std::mutex sink_mutex;
  std::vector<std::pair<std::size_t, Witness>> found;
  std::exception_ptr first_error;

  auto work = [&]() {
    while (true) {
      std::size_t idx = cursor.fetch_add(1);
      if (idx >= candidates.size()) break;
      try {
        Evaluation ev = evaluate_candidate(d, candidates[idx], k);
        if (ev.witness) {
          std::lock_guard<std::mutex> lock(sink_mutex);
          found.emplace_back(idx, std::move(ev.data));
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(sink_mutex);
        if (!first_error) first_error = std::current_exception();
        cursor.store(candidates.size());
        break;
      }
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return found;
}

}  // namespace

SearchReport find_witness(const LinkDiagram& d, const SearchBudget& budget,
                          int workers) {
  if (budget.k < 2) {
    raise(ErrorCode::InvalidK, "witness search needs k >= 2");
  }
  auto start = std::chrono::steady_clock::now();
  SearchReport report;
  auto candidates = materialize(d, budget);
  auto found = evaluate_pool(d, candidates, budget.k, workers);
  report.examined = candidates.size();
  report.exhausted = true;
  for (const auto& [idx, witness] : found) {
    if (!report.min_witness_size) {
      report.min_witness_size = static_cast<int>(witness.change_set.size());
    }
    if (report.witnesses.size() < SearchReport::kWitnessCap) {
      report.witnesses.push_back(witness);
    }
  }
  report.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

SearchReport min_witness_size(const LinkDiagram& d, int k, int max_budget,
                              int workers) {
  if (max_budget < 0) {
    raise(ErrorCode::InvalidParams, "max_budget must be nonnegative");
  }
  if (k < 2) {
    raise(ErrorCode::InvalidK, "witness search needs k >= 2");
  }
  auto start = std::chrono::steady_clock::now();
  SearchReport report;

  SearchBudget budget;
  budget.k = k;
  budget.max_changes = max_budget;
  auto all = materialize(d, budget);

  // size classes are contiguous in size-then-lex order
  std::size_t begin = 0;
  for (int size = 0; size <= max_budget && begin < all.size(); ++size) {
    std::size_t end = begin;
    while (end < all.size() && static_cast<int>(all[end].size()) == size) ++end;
    std::vector<std::vector<int>> klass(all.begin() + begin, all.begin() + end);
    auto found = evaluate_pool(d, klass, k, workers);
    report.examined += klass.size();
    if (!found.empty()) {
      report.min_witness_size = size;
      report.witnesses.push_back(found.front().second);
      report.exhausted = end == all.size();
      report.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
      return report;
    }
    begin = end;
  }
  report.exhausted = true;
  report.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

std::vector<std::pair<int, std::int64_t>> jin_delta_scan(const LinkDiagram& d) {
  if (d.component_count() != 2) {
    raise(ErrorCode::WrongComponentCount, "jin scan needs a 2-component link");
  }
  LinkingMatrix m = linking_matrix(d);
  if (m.at(1, 2) != 0) {
    raise(ErrorCode::NonzeroLinking,
          "jin scan needs vanishing linking number, got " +
              std::to_string(m.at(1, 2)));
  }
  const std::vector<int> sato_levine = {1, 1, 2, 2};
  const std::int64_t base = milnor_mu(d, sato_levine).value;
  std::vector<std::pair<int, std::int64_t>> out;
  for (const auto& c : d.crossings) {
    if (!crossing_components(d, c).self) continue;
    LinkDiagram flipped = apply_changes(d, {c.id});
    out.emplace_back(c.id, milnor_mu(flipped, sato_levine).value - base);
  }
  return out;
}

}  // namespace linkforge
