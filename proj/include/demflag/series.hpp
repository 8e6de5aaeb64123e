#pragma once

#include <string>
#include <vector>

#include "demflag/qpoly.hpp"

namespace demflag {

/// Power series in x truncated below x^order, with QPoly coefficients.
///
/// Binary arithmetic truncates to the smaller of the two orders. Indexing
/// is total below `order()`: missing coefficients read as zero.
class XSeriesQ {
 public:
  XSeriesQ() = default;
  explicit XSeriesQ(int order);
  XSeriesQ(int order, std::vector<QPoly> coeffs);

  /// c * x^k truncated to `order`.
  static XSeriesQ monomial(int order, const QPoly& c, int k = 0);
  static XSeriesQ one(int order) { return monomial(order, QPoly(1)); }

  int order() const { return static_cast<int>(c_.size()); }
  const QPoly& operator[](int k) const { return c_[static_cast<size_t>(k)]; }
  QPoly& operator[](int k) { return c_[static_cast<size_t>(k)]; }
  const std::vector<QPoly>& coeffs() const { return c_; }

  bool is_zero() const;
  /// Index of the highest non-zero coefficient, -1 for the zero series.
  int degree() const;

  XSeriesQ& operator+=(const XSeriesQ& o);
  XSeriesQ& operator-=(const XSeriesQ& o);
  friend XSeriesQ operator+(XSeriesQ a, const XSeriesQ& b) { return a += b; }
  friend XSeriesQ operator-(XSeriesQ a, const XSeriesQ& b) { return a -= b; }
  friend XSeriesQ operator*(const XSeriesQ& a, const XSeriesQ& b);
  XSeriesQ operator-() const;
  friend bool operator==(const XSeriesQ& a, const XSeriesQ& b) = default;

  /// by * x^x_shift * (*this); terms pushed past the order are dropped.
  XSeriesQ scale(const QPoly& by, int x_shift = 0) const;
  /// Inverse up to the order; requires the constant coefficient to be 1 or -1.
  XSeriesQ inverse() const;
  XSeriesQ truncated(int order) const;
  /// x -> c * x for a monomial c = q^a, i.e. coefficient k is multiplied by q^{a k}.
  XSeriesQ scale_x_by_qpower(int a) const;
  /// x -> x^k.
  XSeriesQ sub_xpower(int k) const;
  /// q -> q^k on every coefficient.
  XSeriesQ sub_qpower(int k) const;
  /// Sum of the coefficients, i.e. the value at x = 1 of the truncation.
  QPoly eval_x_one() const;
  /// Coefficient-wise value at q = 1.
  std::vector<BigInt> eval_q_one() const;

  std::string to_string() const;

 private:
  std::vector<QPoly> c_;
};

/// Integer polynomial in x.
class XPoly {
 public:
  XPoly() = default;
  XPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit XPoly(std::vector<BigInt> coeffs);
  static XPoly x_power(int k, const BigInt& c = 1);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  BigInt coeff(int k) const;
  const std::vector<BigInt>& coeffs() const { return c_; }

  XPoly& operator+=(const XPoly& o);
  XPoly& operator-=(const XPoly& o);
  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
  friend XPoly operator*(const XPoly& a, const XPoly& b);
  XPoly operator-() const;
  friend bool operator==(const XPoly& a, const XPoly& b) = default;

  XPoly pow(unsigned k) const;
  /// Multiplies by x^k (k >= 0).
  XPoly shifted(int k) const;
  BigInt eval(const BigInt& x) const;

  std::string to_string() const;

 private:
  void normalize();
  std::vector<BigInt> c_;
};

/// num / den with den != 0. Equality is cross-multiplicative.
class RatFunX {
 public:
  RatFunX(XPoly num, XPoly den);

  const XPoly& num() const { return num_; }
  const XPoly& den() const { return den_; }

  friend bool operator==(const RatFunX& a, const RatFunX& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

  /// Maclaurin coefficients below x^order; the denominator must have constant term +-1.
  std::vector<BigInt> expand(int order) const;

  std::string to_string() const;

 private:
  XPoly num_;
  XPoly den_;
};

/// Maclaurin coefficients of r below x^order.
inline std::vector<BigInt> ratfun_expand(const RatFunX& r, int order) { return r.expand(order); }

}  // namespace demflag
