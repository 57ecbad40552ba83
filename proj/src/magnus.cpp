#include "linkforge/magnus.hpp"

#include <atomic>
#include <string>

#include "linkforge/errors.hpp"

namespace linkforge {

namespace {

std::atomic<std::uint64_t> g_capacity{10'000'000};

std::uint64_t pow_checked(int n, int d, std::uint64_t cap) {
  std::uint64_t value = 1;
  for (int i = 0; i < d; ++i) {
    value *= static_cast<std::uint64_t>(n);
    if (value > cap) {
      raise(ErrorCode::CapacityExceeded,
            "monomial count " + std::to_string(n) + "^" + std::to_string(d) +
                " exceeds cap " + std::to_string(cap));
    }
  }
  return value;
}

}  // namespace

void MagnusSeries::set_capacity(std::uint64_t max_monomials) {
  g_capacity.store(max_monomials == 0 ? 1 : max_monomials);
}

std::uint64_t MagnusSeries::capacity() { return g_capacity.load(); }

MagnusSeries::MagnusSeries(int generators, int degree)
    : n_(generators), degree_(degree) {
  if (generators < 1) {
    raise(ErrorCode::InvalidParams, "series needs at least one generator");
  }
  if (degree < 0) {
    raise(ErrorCode::InvalidParams, "truncation degree must be nonnegative");
  }
  coeff_.resize(degree_ + 1);
  for (int d = 0; d <= degree_; ++d) {
    coeff_[d].assign(pow_checked(n_, d, capacity()), 0);
  }
}

MagnusSeries MagnusSeries::one(int generators, int degree) {
  MagnusSeries s(generators, degree);
  s.coeff_[0][0] = 1;
  return s;
}

MagnusSeries MagnusSeries::meridian(int generators, int degree, int gen) {
  if (gen < 1 || gen > generators) {
    raise(ErrorCode::InvalidParams,
          "meridian generator " + std::to_string(gen) + " out of range");
  }
  MagnusSeries s = one(generators, degree);
  if (degree >= 1) s.coeff_[1][gen - 1] = 1;
  return s;
}

std::int64_t MagnusSeries::coefficient(const std::vector<int>& monomial) const {
  const int d = static_cast<int>(monomial.size());
  if (d > degree_) {
    raise(ErrorCode::OutOfRange, "monomial length exceeds truncation degree");
  }
  std::size_t idx = 0;
  for (int g : monomial) {
    if (g < 1 || g > n_) {
      raise(ErrorCode::OutOfRange, "generator index out of range in monomial");
    }
    idx = idx * n_ + static_cast<std::size_t>(g - 1);
  }
  return coeff_[d][idx];
}

void MagnusSeries::set_coefficient(const std::vector<int>& monomial,
                                   std::int64_t value) {
  const int d = static_cast<int>(monomial.size());
  if (d > degree_) {
    raise(ErrorCode::OutOfRange, "monomial length exceeds truncation degree");
  }
  std::size_t idx = 0;
  for (int g : monomial) {
    if (g < 1 || g > n_) {
      raise(ErrorCode::OutOfRange, "generator index out of range in monomial");
    }
    idx = idx * n_ + static_cast<std::size_t>(g - 1);
  }
  coeff_[d][idx] = value;
}

bool MagnusSeries::is_one() const {
  if (coeff_[0][0] != 1) return false;
  for (int d = 1; d <= degree_; ++d) {
    for (std::int64_t c : coeff_[d]) {
      if (c != 0) return false;
    }
  }
  return true;
}

void MagnusSeries::check_compatible(const MagnusSeries& other) const {
  if (n_ != other.n_ || degree_ != other.degree_) {
    raise(ErrorCode::DegreeMismatch,
          "series have different generator counts or truncation degrees");
  }
}

MagnusSeries MagnusSeries::operator*(const MagnusSeries& other) const {
  check_compatible(other);
  MagnusSeries out(n_, degree_);
  for (int d1 = 0; d1 <= degree_; ++d1) {
    const auto& a = coeff_[d1];
    for (int d2 = 0; d1 + d2 <= degree_; ++d2) {
      const auto& b = other.coeff_[d2];
      auto& c = out.coeff_[d1 + d2];
      const std::size_t stride = b.size();
      for (std::size_t i = 0; i < a.size(); ++i) {
        const std::int64_t av = a[i];
        if (av == 0) continue;
        const std::size_t base = i * stride;
        for (std::size_t j = 0; j < stride; ++j) {
          if (b[j] != 0) c[base + j] += av * b[j];
        }
      }
    }
  }
  return out;
}

MagnusSeries MagnusSeries::operator+(const MagnusSeries& other) const {
  check_compatible(other);
  MagnusSeries out = *this;
  for (int d = 0; d <= degree_; ++d) {
    for (std::size_t i = 0; i < coeff_[d].size(); ++i) {
      out.coeff_[d][i] += other.coeff_[d][i];
    }
  }
  return out;
}

MagnusSeries MagnusSeries::operator-(const MagnusSeries& other) const {
  check_compatible(other);
  MagnusSeries out = *this;
  for (int d = 0; d <= degree_; ++d) {
    for (std::size_t i = 0; i < coeff_[d].size(); ++i) {
      out.coeff_[d][i] -= other.coeff_[d][i];
    }
  }
  return out;
}

MagnusSeries MagnusSeries::inverse() const {
  if (coeff_[0][0] != 1) {
    raise(ErrorCode::NotAUnit, "series has constant term != 1");
  }
  // (1+u)^{-1} = sum (-u)^j truncated; u is the positive-degree part.
  MagnusSeries neg_u(n_, degree_);
  for (int d = 1; d <= degree_; ++d) {
    for (std::size_t i = 0; i < coeff_[d].size(); ++i) {
      neg_u.coeff_[d][i] = -coeff_[d][i];
    }
  }
  MagnusSeries result = one(n_, degree_);
  MagnusSeries term = one(n_, degree_);
  for (int j = 1; j <= degree_; ++j) {
    term = term * neg_u;
    result = result + term;
  }
  return result;
}

MagnusSeries MagnusSeries::power(int exponent) const {
  if (exponent < 0) return inverse().power(-exponent);
  MagnusSeries result = one(n_, degree_);
  for (int i = 0; i < exponent; ++i) result = result * *this;
  return result;
}

std::vector<MagnusSeries::Term> MagnusSeries::terms() const {
  std::vector<Term> out;
  for (int d = 0; d <= degree_; ++d) {
    for (std::size_t i = 0; i < coeff_[d].size(); ++i) {
      if (coeff_[d][i] == 0) continue;
      std::vector<int> monomial(d);
      std::size_t rest = i;
      for (int pos = d - 1; pos >= 0; --pos) {
        monomial[pos] = static_cast<int>(rest % n_) + 1;
        rest /= n_;
      }
      out.push_back(Term{std::move(monomial), coeff_[d][i]});
    }
  }
  return out;
}

MagnusSeries magnus_mul(const MagnusSeries& a, const MagnusSeries& b) {
  return a * b;
}

MagnusSeries magnus_inverse(const MagnusSeries& a) { return a.inverse(); }

}  // namespace linkforge
