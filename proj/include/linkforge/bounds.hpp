#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linkforge/diagram.hpp"

namespace linkforge {

struct LinkingMatrix {
  int n = 0;
  std::vector<std::vector<std::int64_t>> lk;  // symmetric, zero diagonal

  std::int64_t at(int i, int j) const { return lk[i - 1][j - 1]; }
};

LinkingMatrix linking_matrix(const LinkDiagram& d);

/// Lambda(L): sum of |lk(i,j)| over i<j.
std::int64_t lambda_total(const LinkingMatrix& m);
/// Lambda*(L): sum of alpha_ij where alpha_ij = |lk(i,j)| except that
/// non-adjacent pairs (i+1 < j) with lk = 0 count 2. Ordering-sensitive.
std::int64_t lambda_star(const LinkingMatrix& m);
/// Lambda'(L): sum of ||lk(i,j)| - 1| over i<j.
std::int64_t lambda_prime(const LinkingMatrix& m);
/// Extension: minimal Lambda* over all component orderings (n <= 8).
std::int64_t lambda_star_min_over_orderings(const LinkingMatrix& m);

enum class ComponentFlag { CertifiedNontrivial, CertifiedTrivial, Unknown };

struct ComponentFlags {
  struct Entry {
    ComponentFlag state = ComponentFlag::Unknown;
    std::string certificate;  // e.g. "v2=1"
  };
  std::vector<Entry> entries;

  static ComponentFlags unknown(int n) {
    ComponentFlags f;
    f.entries.resize(n);
    return f;
  }
  bool all_certified_nontrivial() const {
    for (const auto& e : entries) {
      if (e.state != ComponentFlag::CertifiedNontrivial) return false;
    }
    return true;
  }
};

/// v2 != 0 certifies a component as not C_3-trivial, hence not C_k-trivial
/// for k >= 3; everything else stays Unknown.
ComponentFlags derive_flags(const LinkDiagram& d, int k);

struct BoundReport {
  int k = 0;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  std::optional<std::int64_t> exact;
  std::int64_t homotopy_lower = 0;
  std::int64_t homotopy_upper = 0;
  std::vector<std::string> provenance;
};

BoundReport uk_bounds(const LinkingMatrix& m, const ComponentFlags& flags, int k);

/// True iff r is of the form a^2 + b^2 or a^2 - b^2 mod 8; the unique
/// non-representable residue is 6.
bool squares_mod8_representable(int residue);

struct ObstructionCertificate {
  enum class TheoremId { Thm4_2, Thm4_3a, Thm4_3b, Thm4_4 };
  struct Hypothesis {
    std::string name;
    bool holds = false;
    std::string witness;
  };
  TheoremId theorem = TheoremId::Thm4_2;
  std::vector<Hypothesis> hypotheses;
  struct Conclusion {
    int k = 0;
    std::int64_t lower = 0;
  };
  std::optional<Conclusion> concluded;  // set only when every hypothesis holds

  bool all_hypotheses_hold() const {
    for (const auto& h : hypotheses) {
      if (!h.holds) return false;
    }
    return true;
  }
};

const char* theorem_name(ObstructionCertificate::TheoremId id);

/// Theorem 4.2 check for a 2-component link with lk = 0.
ObstructionCertificate obstruction_two_comp(std::int64_t mu1122,
                                            const ComponentFlags& flags);

/// Theorem 4.3 checks for a 3-component link; returns the u_3 >= 5 and
/// u_4 >= 6 certificates in that order. mu1122_pairs holds the values for
/// the sublinks (1,2), (1,3), (2,3).
std::vector<ObstructionCertificate> obstruction_three_comp(
    const LinkingMatrix& m, std::int64_t mu123,
    const std::array<std::int64_t, 3>& mu1122_pairs,
    const ComponentFlags& flags);

/// Best bounds stated in the paper for C(n,k), the maximum of u_k over
/// n-component links with vanishing pairwise linking numbers.
std::pair<std::int64_t, std::int64_t> cnk_bounds(int n, int k);

}  // namespace linkforge
