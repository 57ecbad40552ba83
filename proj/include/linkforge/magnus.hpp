#pragma once

#include <cstdint>
#include <vector>

namespace linkforge {

/// Truncated noncommutative integer power series in generators X_1..X_n.
///
/// Storage is dense by degree: the coefficient of X_{i1}...X_{id} sits at
/// base-n index (i1-1)*n^(d-1) + ... + (id-1). Structural zeros are stored
/// but never visible through terms(). The total monomial count per degree
/// is guarded by a process-wide capacity cap (see set_capacity).
class MagnusSeries {
public:
  MagnusSeries(int generators, int degree);

  static MagnusSeries one(int generators, int degree);
  /// 1 + X_gen, the Magnus image of a meridian generator (gen is 1-based).
  static MagnusSeries meridian(int generators, int degree, int gen);

  int generators() const { return n_; }
  int degree() const { return degree_; }

  std::int64_t constant_term() const { return coeff_[0][0]; }
  /// monomial entries are 1-based generator indices; empty = constant term.
  std::int64_t coefficient(const std::vector<int>& monomial) const;
  void set_coefficient(const std::vector<int>& monomial, std::int64_t value);

  bool is_one() const;
  bool operator==(const MagnusSeries& other) const = default;

  MagnusSeries operator*(const MagnusSeries& other) const;
  MagnusSeries operator+(const MagnusSeries& other) const;
  MagnusSeries operator-(const MagnusSeries& other) const;

  /// Two-sided inverse at the truncation degree; requires constant term 1.
  MagnusSeries inverse() const;
  /// Integer power; negative exponents go through inverse().
  MagnusSeries power(int exponent) const;

  struct Term {
    std::vector<int> monomial;
    std::int64_t coeff;
  };
  /// Nonzero terms sorted by (degree, lexicographic monomial).
  std::vector<Term> terms() const;

  static void set_capacity(std::uint64_t max_monomials);
  static std::uint64_t capacity();

private:
  void check_compatible(const MagnusSeries& other) const;

  int n_ = 0;
  int degree_ = 0;
  std::vector<std::vector<std::int64_t>> coeff_;
};

MagnusSeries magnus_mul(const MagnusSeries& a, const MagnusSeries& b);
MagnusSeries magnus_inverse(const MagnusSeries& a);

}  // namespace linkforge
