#include "doctest.h"

#include <cmath>

#include "linkforge/bounds.hpp"
#include "linkforge/catalog.hpp"
#include "linkforge/errors.hpp"
#include "linkforge/milnor.hpp"
#include "linkforge/search.hpp"

using namespace linkforge;

namespace {

std::vector<std::vector<int>> drain(ChangeSetEnumerator& en) {
  std::vector<std::vector<int>> out;
  while (auto s = en.next()) out.push_back(*s);
  return out;
}

bool is_square(std::int64_t v) {
  std::int64_t a = std::abs(v);
  std::int64_t r = static_cast<std::int64_t>(std::llround(std::sqrt(double(a))));
  return r * r == a;
}

}  // namespace

TEST_CASE("budget zero enumerates exactly the empty set") {
  LinkDiagram d = catalog_link("whitehead");
  SearchBudget b;
  b.max_changes = 0;
  ChangeSetEnumerator en(d, b);
  auto all = drain(en);
  REQUIRE(all.size() == 1);
  CHECK(all[0].empty());
  CHECK(ChangeSetEnumerator(d, b).total_count() == 1);
}

TEST_CASE("two-crossing hopf at max one change gives three subsets in order") {
  LinkDiagram d = catalog_link("hopf");
  SearchBudget b;
  b.max_changes = 1;
  ChangeSetEnumerator en(d, b);
  auto all = drain(en);
  REQUIRE(all.size() == 3);
  CHECK(all[0].empty());
  CHECK(all[1] == std::vector<int>{1});
  CHECK(all[2] == std::vector<int>{2});
  CHECK(ChangeSetEnumerator(d, b).total_count() == 3);
}

TEST_CASE("per-component self caps filter subsets") {
  // whitehead kinked: component 1 has one kink, component 2 has clasp+kink
  LinkDiagram d = catalog_link("whitehead(variant=kinked)");
  SearchBudget b;
  b.max_changes = 2;
  b.per_component_self_caps[2] = 1;
  ChangeSetEnumerator en(d, b);
  auto all = drain(en);
  // self crossings of component 2: the clasp (id 3) and its kink (id 7)
  for (const auto& subset : all) {
    int self2 = 0;
    for (int id : subset) self2 += (id == 3 || id == 7) ? 1 : 0;
    CHECK(self2 <= 1);
  }
  CHECK(ChangeSetEnumerator(d, b).total_count() == all.size());
  bool saw_both = false;
  for (const auto& subset : all) {
    saw_both |= subset == std::vector<int>{3, 7};
  }
  CHECK(!saw_both);
}

TEST_CASE("per-pair caps filter inter-component subsets") {
  LinkDiagram d = catalog_link("hopf(variant=4)");
  SearchBudget b;
  b.max_changes = 3;
  b.per_pair_caps[{1, 2}] = 1;
  ChangeSetEnumerator en(d, b);
  auto all = drain(en);
  for (const auto& subset : all) CHECK(subset.size() <= 1);
  CHECK(all.size() == 5);  // {} plus four singletons
  CHECK(ChangeSetEnumerator(d, b).total_count() == 5);
  SearchBudget bad;
  bad.per_pair_caps[{2, 1}] = 1;
  CHECK_THROWS_AS(ChangeSetEnumerator(d, bad), Error);
}

TEST_CASE("exhaustion count matches the closed form on catalog diagrams") {
  for (const char* spec : {"hopf", "whitehead", "borromean",
                           "fig5a(m=1,k1=unknot,k2=unknot)"}) {
    LinkDiagram d = catalog_link(spec);
    for (int max = 0; max <= 3; ++max) {
      SearchBudget b;
      b.max_changes = max;
      ChangeSetEnumerator en(d, b);
      CHECK(drain(en).size() == ChangeSetEnumerator(d, b).total_count());
    }
  }
}

TEST_CASE("unlink needs zero changes") {
  SearchReport r = min_witness_size(catalog_link("unlink(3)"), 3, 2);
  REQUIRE(r.min_witness_size.has_value());
  CHECK(*r.min_witness_size == 0);
  REQUIRE(r.witnesses.size() == 1);
  CHECK(r.witnesses[0].change_set.empty());
}

TEST_CASE("hopf needs exactly one change at any length") {
  for (int k : {2, 4}) {
    SearchReport r = min_witness_size(catalog_link("hopf"), k, 2);
    REQUIRE(r.min_witness_size.has_value());
    CHECK(*r.min_witness_size == 1);
    CHECK(r.examined == 3);  // {} and the two singletons
  }
}

TEST_CASE("borromean is mu-trivial at length two but not three") {
  LinkDiagram d = catalog_link("borromean");
  SearchReport r2 = min_witness_size(d, 2, 1);
  REQUIRE(r2.min_witness_size.has_value());
  CHECK(*r2.min_witness_size == 0);
  SearchReport r3 = min_witness_size(d, 3, 1);
  CHECK(!r3.min_witness_size.has_value());
  CHECK(r3.exhausted);
  CHECK(r3.examined == 7);  // {} and six singletons
}

TEST_CASE("find_witness scans the whole budget and reports every witness") {
  LinkDiagram d = catalog_link("hopf");
  SearchBudget b;
  b.max_changes = 1;
  b.k = 2;
  SearchReport r = find_witness(d, b);
  CHECK(r.exhausted);
  CHECK(r.examined == 3);
  REQUIRE(r.min_witness_size.has_value());
  CHECK(*r.min_witness_size == 1);
  CHECK(r.witnesses.size() == 2);  // either crossing unlinks
}

TEST_CASE("witness summaries are reproducible from scratch") {
  LinkDiagram d = catalog_link("hopf(variant=4)");
  SearchBudget b;
  b.max_changes = 2;
  b.k = 3;
  SearchReport r = find_witness(d, b);
  REQUIRE(!r.witnesses.empty());
  for (const auto& w : r.witnesses) {
    LinkDiagram changed = apply_changes(d, w.change_set);
    CHECK(mu_trivial_to_length(changed, b.k) == w.mu_trivial);
    for (int i = 1; i <= changed.component_count(); ++i) {
      CHECK(v2(changed, i) == w.v2_values[i - 1]);
    }
    CHECK(necessary_condition_trivial(changed, b.k));
  }
}

TEST_CASE("search reports are deterministic across worker counts") {
  for (const char* spec : {"whitehead", "borromean",
                           "fig5a(m=1,k1=unknot,k2=unknot)"}) {
    LinkDiagram d = catalog_link(spec);
    SearchBudget b;
    b.max_changes = 2;
    b.k = 3;
    SearchReport r1 = find_witness(d, b, 1);
    SearchReport r8 = find_witness(d, b, 8);
    CHECK(r1.exhausted == r8.exhausted);
    CHECK(r1.examined == r8.examined);
    CHECK(r1.min_witness_size == r8.min_witness_size);
    REQUIRE(r1.witnesses.size() == r8.witnesses.size());
    for (std::size_t i = 0; i < r1.witnesses.size(); ++i) {
      CHECK(r1.witnesses[i].change_set == r8.witnesses[i].change_set);
    }
    SearchReport m1 = min_witness_size(d, 3, 2, 1);
    SearchReport m8 = min_witness_size(d, 3, 2, 8);
    CHECK(m1.min_witness_size == m8.min_witness_size);
    CHECK(m1.examined == m8.examined);
  }
}

TEST_CASE("monotonicity in budget and in length") {
  LinkDiagram d = catalog_link("whitehead");
  std::optional<int> previous;
  for (int max = 0; max <= 3; ++max) {
    SearchReport r = min_witness_size(d, 4, max);
    if (previous && r.min_witness_size) {
      CHECK(*r.min_witness_size <= *previous);
    }
    if (r.min_witness_size) previous = r.min_witness_size;
  }
  // a stronger condition can only need more changes
  SearchReport k2 = min_witness_size(d, 2, 3);
  SearchReport k4 = min_witness_size(d, 4, 3);
  REQUIRE(k2.min_witness_size.has_value());
  REQUIRE(k4.min_witness_size.has_value());
  CHECK(*k4.min_witness_size >= *k2.min_witness_size);
}

TEST_CASE("jin scan needs two components and zero linking") {
  CHECK_THROWS_AS(jin_delta_scan(catalog_link("borromean")), Error);
  CHECK_THROWS_AS(jin_delta_scan(catalog_link("hopf")), Error);
  try {
    jin_delta_scan(catalog_link("hopf"));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonzeroLinking);
  }
  CHECK(jin_delta_scan(catalog_link("unlink(2)")).empty());
}

TEST_CASE("jin deltas are perfect squares on the lk=0 catalog") {
  for (const char* spec :
       {"whitehead", "whitehead(variant=kinked)",
        "fig5a(m=1,k1=unknot,k2=unknot)", "fig5a(m=6,k1=trefoil,k2=trefoil)",
        "fig5a(m=-2,k1=unknot,k2=unknot)"}) {
    CAPTURE(spec);
    LinkDiagram d = catalog_link(spec);
    auto deltas = jin_delta_scan(d);
    CHECK(!deltas.empty());
    for (const auto& [id, delta] : deltas) {
      CAPTURE(id);
      CHECK(is_square(delta));
    }
  }
}

TEST_CASE("flipping the whitehead clasp kills the Sato-Levine invariant") {
  LinkDiagram d = catalog_link("whitehead");
  auto deltas = jin_delta_scan(d);
  REQUIRE(deltas.size() == 1);
  std::int64_t base = milnor_mu(d, {1, 1, 2, 2}).value;
  CHECK(base + deltas[0].second == 0);
}

TEST_CASE("search rejects bad parameters") {
  LinkDiagram d = catalog_link("hopf");
  SearchBudget b;
  b.k = 1;
  CHECK_THROWS_AS(find_witness(d, b), Error);
  CHECK_THROWS_AS(min_witness_size(d, 2, -1), Error);
  SearchBudget neg;
  neg.max_changes = -1;
  CHECK_THROWS_AS(ChangeSetEnumerator(d, neg), Error);
}
