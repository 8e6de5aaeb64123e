#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace demflag {

using BigInt = mpz_class;

/// Laurent polynomial in q with arbitrary-precision integer coefficients.
///
/// Stored densely from the lowest non-zero exponent; both ends are trimmed,
/// so two equal polynomials always have identical storage. The zero
/// polynomial has no coefficients.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long c);  // NOLINT(google-explicit-constructor): constants promote
  QPoly(const BigInt& c);  // NOLINT(google-explicit-constructor)

  static QPoly monomial(const BigInt& c, int exp);
  static QPoly q_power(int exp) { return monomial(1, exp); }
  /// Builds from (exponent, coefficient) pairs; repeated exponents add up.
  static QPoly from_terms(const std::vector<std::pair<int, BigInt>>& terms);
  static QPoly parse(std::string_view text);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && offset_ == 0 && c_[0] == 1; }
  bool is_monomial() const { return c_.size() == 1; }
  int min_exp() const { return offset_; }
  int max_exp() const { return offset_ + static_cast<int>(c_.size()) - 1; }
  BigInt coeff(int exp) const;
  /// Non-zero terms in increasing exponent order.
  std::vector<std::pair<int, BigInt>> terms() const;

  /// True when every exponent is >= 0 and every coefficient is >= 0.
  bool in_nq() const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly operator-() const;
  friend bool operator==(const QPoly& a, const QPoly& b) = default;

  /// Multiplies by q^k.
  QPoly shifted(int k) const;
  /// Substitutes q -> q^k, k >= 1.
  QPoly sub_qpower(int k) const;
  BigInt eval_one() const;
  /// (r, w) with q^r * w == *this and w(0) != 0; (0, 0) for the zero polynomial.
  std::pair<int, QPoly> weight_split() const;
  /// Exact Laurent division; nullopt when the divisor does not divide.
  std::optional<QPoly> divide_exact(const QPoly& d) const;
  QPoly pow(unsigned k) const;

  std::string to_string() const;

 private:
  void normalize();

  int offset_ = 0;
  std::vector<BigInt> c_;
};

/// Gaussian binomial [n, m]_q. Equals 1 for m == 0 and any n, 0 for m < 0 or m > n.
QPoly q_binomial(int n, int m);

/// prod_{i=1}^{n} (1 - a * step^{i-1}); `step` is a monomial such as q or q^2.
QPoly q_pochhammer(const QPoly& a, int n, const QPoly& step);

/// (q;q)_n.
QPoly q_factorial(int n);

int res2(long s);

}  // namespace demflag
