#include "linkforge/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "linkforge/errors.hpp"
#include "linkforge/milnor.hpp"

namespace linkforge {

namespace {

std::int64_t binom2(std::int64_t n) { return n * (n - 1) / 2; }

}  // namespace

LinkingMatrix linking_matrix(const LinkDiagram& d) {
  const int n = d.component_count();
  LinkingMatrix m;
  m.n = n;
  m.lk.assign(n, std::vector<std::int64_t>(n, 0));
  std::vector<std::vector<std::int64_t>> sums(n, std::vector<std::int64_t>(n, 0));
  for (const auto& c : d.crossings) {
    int a = d.under_component(c);
    int b = d.over_component(c);
    if (a == b) continue;
    sums[a - 1][b - 1] += c.sign;
    sums[b - 1][a - 1] += c.sign;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (sums[i][j] % 2 != 0) {
        raise(ErrorCode::ParityError,
              "odd signed crossing count between components " +
                  std::to_string(i + 1) + " and " + std::to_string(j + 1));
      }
      m.lk[i][j] = m.lk[j][i] = sums[i][j] / 2;
    }
  }
  return m;
}

std::int64_t lambda_total(const LinkingMatrix& m) {
  std::int64_t total = 0;
  for (int i = 0; i < m.n; ++i) {
    for (int j = i + 1; j < m.n; ++j) total += std::abs(m.lk[i][j]);
  }
  return total;
}

std::int64_t lambda_star(const LinkingMatrix& m) {
  std::int64_t total = 0;
  for (int i = 0; i < m.n; ++i) {
    for (int j = i + 1; j < m.n; ++j) {
      if (i + 1 < j && m.lk[i][j] == 0) {
        total += 2;
      } else {
        total += std::abs(m.lk[i][j]);
      }
    }
  }
  return total;
}

std::int64_t lambda_prime(const LinkingMatrix& m) {
  std::int64_t total = 0;
  for (int i = 0; i < m.n; ++i) {
    for (int j = i + 1; j < m.n; ++j) {
      total += std::abs(std::abs(m.lk[i][j]) - 1);
    }
  }
  return total;
}

std::int64_t lambda_star_min_over_orderings(const LinkingMatrix& m) {
  if (m.n > 8) {
    raise(ErrorCode::InvalidParams,
          "ordering minimization is exhaustive and capped at n <= 8");
  }
  std::vector<int> perm(m.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t best = -1;
  do {
    LinkingMatrix p;
    p.n = m.n;
    p.lk.assign(m.n, std::vector<std::int64_t>(m.n, 0));
    for (int i = 0; i < m.n; ++i) {
      for (int j = 0; j < m.n; ++j) p.lk[i][j] = m.lk[perm[i]][perm[j]];
    }
    std::int64_t value = lambda_star(p);
    if (best < 0 || value < best) best = value;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

ComponentFlags derive_flags(const LinkDiagram& d, int k) {
  ComponentFlags flags;
  const int n = d.component_count();
  flags.entries.resize(n);
  if (k < 3) return flags;  // v2 says nothing below C_3
  for (int i = 1; i <= n; ++i) {
    std::int64_t value = v2(d, i);
    if (value != 0) {
      flags.entries[i - 1].state = ComponentFlag::CertifiedNontrivial;
      flags.entries[i - 1].certificate = "v2=" + std::to_string(value);
    }
  }
  return flags;
}

BoundReport uk_bounds(const LinkingMatrix& m, const ComponentFlags& flags, int k) {
  if (k < 1) {
    raise(ErrorCode::InvalidK, "k must be at least 1");
  }
  if (static_cast<int>(flags.entries.size()) != m.n) {
    raise(ErrorCode::InvalidParams, "flags size must match component count");
  }
  const int n = m.n;
  const std::int64_t lambda = lambda_total(m);
  const std::int64_t lprime = lambda_prime(m);

  BoundReport report;
  report.k = k;
  report.lower = lambda;
  report.provenance.push_back("Lambda-lower");
  report.homotopy_lower = lambda;
  report.homotopy_upper = lambda_star(m);

  struct Candidate {
    std::int64_t value;
    const char* tag;
  };
  std::vector<Candidate> uppers;
  uppers.push_back({binom2(n + 1) + lprime, "Thm1.4-upper"});
  const bool all_zero = lambda == 0;
  if (all_zero) uppers.push_back({static_cast<std::int64_t>(n) * n, "Thm1.1-upper"});
  bool all_unit = true;
  for (int i = 0; i < n && all_unit; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(m.lk[i][j]) != 1) {
        all_unit = false;
        break;
      }
    }
  }
  if (n >= 2 && all_unit) uppers.push_back({binom2(n + 1), "Thm1.2-upper"});
  if (n == 1) uppers.push_back({1, "Ohyama-knot-upper"});

  report.upper = uppers.front().value;
  for (const auto& c : uppers) report.upper = std::min(report.upper, c.value);
  for (const auto& c : uppers) {
    if (c.value == report.upper) report.provenance.push_back(c.tag);
  }

  if (k <= 2 && all_zero) {
    // Links with vanishing pairwise linking numbers are already C_2-trivial.
    report.exact = 0;
    report.lower = report.upper = 0;
    report.provenance.push_back("MN-Delta-exact");
    return report;
  }

  bool all_nonzero = true;
  for (int i = 0; i < n && all_nonzero; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (m.lk[i][j] == 0) {
        all_nonzero = false;
        break;
      }
    }
  }
  // Corollary 1.6 needs every component certified non-C_k-trivial, which a
  // finite-type certificate can only witness for k >= 3.
  if (k >= 3 && all_nonzero && flags.all_certified_nontrivial()) {
    report.exact = n + lambda;
    report.lower = report.upper = n + lambda;
    report.provenance.push_back("Cor1.6-exact");
  }
  return report;
}

bool squares_mod8_representable(int residue) {
  if (residue < 0 || residue > 7) {
    raise(ErrorCode::OutOfRange, "residue must lie in 0..7");
  }
  // squares mod 8 are {0,1,4}; sums and differences cover everything but 6
  return residue != 6;
}

const char* theorem_name(ObstructionCertificate::TheoremId id) {
  switch (id) {
    case ObstructionCertificate::TheoremId::Thm4_2: return "Thm4.2";
    case ObstructionCertificate::TheoremId::Thm4_3a: return "Thm4.3a";
    case ObstructionCertificate::TheoremId::Thm4_3b: return "Thm4.3b";
    case ObstructionCertificate::TheoremId::Thm4_4: return "Thm4.4";
  }
  return "?";
}

namespace {

void add_flag_hypotheses(ObstructionCertificate& cert,
                         const ComponentFlags& flags, const char* what) {
  for (std::size_t i = 0; i < flags.entries.size(); ++i) {
    const auto& e = flags.entries[i];
    cert.hypotheses.push_back(
        {"component " + std::to_string(i + 1) + " certified " + what,
         e.state == ComponentFlag::CertifiedNontrivial,
         e.certificate.empty() ? "no certificate" : e.certificate});
  }
}

}  // namespace

ObstructionCertificate obstruction_two_comp(std::int64_t mu1122,
                                            const ComponentFlags& flags) {
  if (flags.entries.size() != 2) {
    raise(ErrorCode::WrongComponentCount,
          "Theorem 4.2 applies to 2-component links");
  }
  ObstructionCertificate cert;
  cert.theorem = ObstructionCertificate::TheoremId::Thm4_2;
  cert.hypotheses.push_back(
      {"mu_1122 > 0", mu1122 > 0, "mu_1122=" + std::to_string(mu1122)});
  std::int64_t residue = ((mu1122 % 8) + 8) % 8;
  cert.hypotheses.push_back({"mu_1122 == 6 mod 8", residue == 6,
                             "residue=" + std::to_string(residue)});
  add_flag_hypotheses(cert, flags, "not C_4-trivial");
  if (cert.all_hypotheses_hold()) {
    cert.concluded = ObstructionCertificate::Conclusion{4, 3};
  }
  return cert;
}

std::vector<ObstructionCertificate> obstruction_three_comp(
    const LinkingMatrix& m, std::int64_t mu123,
    const std::array<std::int64_t, 3>& mu1122_pairs,
    const ComponentFlags& flags) {
  if (m.n != 3 || flags.entries.size() != 3) {
    raise(ErrorCode::WrongComponentCount,
          "Theorem 4.3 applies to 3-component links");
  }
  bool lk_zero = lambda_total(m) == 0;

  ObstructionCertificate a;
  a.theorem = ObstructionCertificate::TheoremId::Thm4_3a;
  a.hypotheses.push_back({"pairwise linking numbers vanish", lk_zero,
                          "Lambda=" + std::to_string(lambda_total(m))});
  add_flag_hypotheses(a, flags, "not C_3-trivial");
  a.hypotheses.push_back(
      {"mu_123 != 0", mu123 != 0, "mu_123=" + std::to_string(mu123)});
  if (a.all_hypotheses_hold()) {
    a.concluded = ObstructionCertificate::Conclusion{3, 5};
  }

  ObstructionCertificate b;
  b.theorem = ObstructionCertificate::TheoremId::Thm4_3b;
  b.hypotheses = a.hypotheses;
  const char* pair_names[3] = {"(1,2)", "(1,3)", "(2,3)"};
  for (int p = 0; p < 3; ++p) {
    b.hypotheses.push_back(
        {std::string("mu_1122 of sublink ") + pair_names[p] + " == 6",
         mu1122_pairs[p] == 6,
         "mu_1122=" + std::to_string(mu1122_pairs[p])});
  }
  if (b.all_hypotheses_hold()) {
    b.concluded = ObstructionCertificate::Conclusion{4, 6};
  }
  return {a, b};
}

std::pair<std::int64_t, std::int64_t> cnk_bounds(int n, int k) {
  if (n < 1 || k < 1) {
    raise(ErrorCode::InvalidParams, "cnk_bounds needs n >= 1 and k >= 1");
  }
  const std::int64_t nsq = static_cast<std::int64_t>(n) * n;
  if (k <= 2) return {0, 0};
  if (n == 1) return {1, 1};
  if (n == 2) {
    if (k >= 4) return {3, 4};
    return {0, nsq};  // no stated lower bound for C(2,3)
  }
  if (n == 3) {
    if (k == 3) return {5, 9};
    return {6, 9};
  }
  if (k >= 4) {
    std::int64_t lower =
        2 * ((static_cast<std::int64_t>(n) * (n - 2) + 2) / 3) + n;
    return {std::max<std::int64_t>(lower, 0), nsq};
  }
  return {0, nsq};
}

}  // namespace linkforge
