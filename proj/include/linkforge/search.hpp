#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "linkforge/diagram.hpp"

namespace linkforge {

/// Limits for the crossing-change subset search. Per-pair caps bound the
/// number of changed crossings between components {i,j} (keys with i < j);
/// per-component caps bound self-crossing changes.
struct SearchBudget {
  int max_changes = 0;
  int k = 2;
  std::map<std::pair<int, int>, int> per_pair_caps;
  std::map<int, int> per_component_self_caps;
};

/// Streams every admissible subset of crossing ids of size <= max_changes
/// exactly once, in size-then-lexicographic order.
class ChangeSetEnumerator {
public:
  ChangeSetEnumerator(const LinkDiagram& d, const SearchBudget& budget);

  std::optional<std::vector<int>> next();
  /// Closed-form count of admissible subsets (for exhaustion checks).
  std::uint64_t total_count() const;

private:
  bool admissible(const std::vector<int>& subset) const;
  bool advance();

  std::vector<int> ids_;
  std::vector<CrossingPair> kind_;  // aligned with ids_
  SearchBudget budget_;
  int size_ = 0;
  std::vector<int> indices_;
  bool done_ = false;
  bool fresh_ = true;
};

struct Witness {
  std::set<int> change_set;
  bool mu_trivial = false;
  std::vector<std::int64_t> v2_values;
};

struct SearchReport {
  bool exhausted = false;
  std::optional<int> min_witness_size;
  std::vector<Witness> witnesses;  // capped
  std::uint64_t examined = 0;
  std::int64_t wall_ms = 0;

  static constexpr std::size_t kWitnessCap = 16;
};

/// True when the diagram passes the necessary-condition test for
/// C_k-triviality: all Milnor invariants of length <= k vanish, and every
/// component has v2 = 0 when k >= 3.
bool necessary_condition_trivial(const LinkDiagram& d, int k);

/// Exhaustive scan of every admissible subset; collects witnesses (up to the
/// report cap) and always examines the whole budgeted stream.
SearchReport find_witness(const LinkDiagram& d, const SearchBudget& budget,
                          int workers = 1);

/// Size-ascending scan that stops at the first witness; reports only that
/// witness so the result is identical for any worker count.
SearchReport min_witness_size(const LinkDiagram& d, int k, int max_budget,
                              int workers = 1);

/// For each self-crossing of a 2-component lk=0 diagram, the change in
/// mu_1122 caused by flipping it.
std::vector<std::pair<int, std::int64_t>> jin_delta_scan(const LinkDiagram& d);

}  // namespace linkforge
