#include "demflag/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "demflag/errors.hpp"

namespace demflag {

XSeriesQ::XSeriesQ(int order) {
  if (order < 0) throw std::invalid_argument("XSeriesQ: order must be >= 0");
  c_.resize(static_cast<size_t>(order));
}

XSeriesQ::XSeriesQ(int order, std::vector<QPoly> coeffs) : XSeriesQ(order) {
  for (size_t i = 0; i < coeffs.size() && i < c_.size(); ++i) c_[i] = std::move(coeffs[i]);
}

XSeriesQ XSeriesQ::monomial(int order, const QPoly& c, int k) {
  XSeriesQ s(order);
  if (k >= 0 && k < order) s.c_[static_cast<size_t>(k)] = c;
  return s;
}

bool XSeriesQ::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const QPoly& p) { return p.is_zero(); });
}

int XSeriesQ::degree() const {
  for (int k = order() - 1; k >= 0; --k)
    if (!c_[static_cast<size_t>(k)].is_zero()) return k;
  return -1;
}

XSeriesQ& XSeriesQ::operator+=(const XSeriesQ& o) {
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

XSeriesQ& XSeriesQ::operator-=(const XSeriesQ& o) {
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

XSeriesQ XSeriesQ::operator-() const {
  XSeriesQ r = *this;
  for (auto& p : r.c_) p = -p;
  return r;
}

XSeriesQ operator*(const XSeriesQ& a, const XSeriesQ& b) {
  int n = std::min(a.order(), b.order());
  XSeriesQ r(n);
  for (int i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j < n; ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

XSeriesQ XSeriesQ::scale(const QPoly& by, int x_shift) const {
  XSeriesQ r(order());
  for (int k = 0; k < order(); ++k) {
    int t = k + x_shift;
    if (t < 0 || t >= order() || c_[static_cast<size_t>(k)].is_zero()) continue;
    r[t] = by * c_[static_cast<size_t>(k)];
  }
  return r;
}

XSeriesQ XSeriesQ::inverse() const {
  if (order() == 0) return *this;
  const QPoly& c0 = c_[0];
  if (!(c0 == QPoly(1) || c0 == QPoly(-1)))
    throw NonUnitConstantTerm("series inverse: constant coefficient " + c0.to_string() + " is not a unit");
  // t_k = -c0 * sum_{i=1}^{k} s_i t_{k-i}, using c0^{-1} = c0.
  XSeriesQ t(order());
  t[0] = c0;
  for (int k = 1; k < order(); ++k) {
    QPoly acc;
    for (int i = 1; i <= k; ++i) {
      if (c_[static_cast<size_t>(i)].is_zero() || t[k - i].is_zero()) continue;
      acc += c_[static_cast<size_t>(i)] * t[k - i];
    }
    t[k] = -(c0 * acc);
  }
  return t;
}

XSeriesQ XSeriesQ::truncated(int order) const {
  XSeriesQ r(order);
  for (int k = 0; k < order && k < this->order(); ++k) r[k] = c_[static_cast<size_t>(k)];
  return r;
}

XSeriesQ XSeriesQ::scale_x_by_qpower(int a) const {
  XSeriesQ r = *this;
  for (int k = 0; k < order(); ++k) r[k] = r[k].shifted(a * k);
  return r;
}

XSeriesQ XSeriesQ::sub_xpower(int k) const {
  if (k < 1) throw std::invalid_argument("sub_xpower: k must be >= 1");
  XSeriesQ r(order());
  for (int i = 0; i * k < order(); ++i) r[i * k] = c_[static_cast<size_t>(i)];
  return r;
}

XSeriesQ XSeriesQ::sub_qpower(int k) const {
  XSeriesQ r = *this;
  for (auto& p : r.c_) p = p.sub_qpower(k);
  return r;
}

QPoly XSeriesQ::eval_x_one() const {
  QPoly s;
  for (const auto& p : c_) s += p;
  return s;
}

std::vector<BigInt> XSeriesQ::eval_q_one() const {
  std::vector<BigInt> out;
  out.reserve(c_.size());
  for (const auto& p : c_) out.push_back(p.eval_one());
  return out;
}

std::string XSeriesQ::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < order(); ++k) {
    const QPoly& p = c_[static_cast<size_t>(k)];
    if (p.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << p.to_string() << ")";
    if (k == 1) os << "*x";
    if (k > 1) os << "*x^" << k;
  }
  if (first) os << "0";
  os << " + O(x^" << order() << ")";
  return os.str();
}

XPoly::XPoly(long c) {
  if (c != 0) c_.emplace_back(c);
}

XPoly::XPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

XPoly XPoly::x_power(int k, const BigInt& c) {
  if (k < 0) throw std::invalid_argument("XPoly::x_power: negative exponent");
  std::vector<BigInt> v(static_cast<size_t>(k) + 1, BigInt(0));
  v.back() = c;
  return XPoly(std::move(v));
}

void XPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt XPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return c_[static_cast<size_t>(k)];
}

XPoly& XPoly::operator+=(const XPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) { return *this += -o; }

XPoly XPoly::operator-() const {
  XPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
  if (a.is_zero() || b.is_zero()) return XPoly();
  std::vector<BigInt> v(a.c_.size() + b.c_.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return XPoly(std::move(v));
}

XPoly XPoly::pow(unsigned k) const {
  XPoly r(1);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

XPoly XPoly::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("XPoly::shifted: negative shift");
  if (is_zero()) return *this;
  std::vector<BigInt> v(static_cast<size_t>(k), BigInt(0));
  v.insert(v.end(), c_.begin(), c_.end());
  return XPoly(std::move(v));
}

BigInt XPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string XPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= degree(); ++k) {
    const BigInt& c = c_[static_cast<size_t>(k)];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "x";
    if (k != 1) os << "^" << k;
  }
  return os.str();
}

RatFunX::RatFunX(XPoly num, XPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("RatFunX: zero denominator");
  if (sgn(den_.coeff(den_.degree())) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

std::vector<BigInt> RatFunX::expand(int order) const {
  BigInt d0 = den_.coeff(0);
  if (!(d0 == 1 || d0 == -1))
    throw NonUnitConstantTerm("ratfun_expand: denominator constant term " + d0.get_str() + " is not +-1");
  std::vector<BigInt> out(static_cast<size_t>(std::max(order, 0)), BigInt(0));
  for (int k = 0; k < order; ++k) {
    BigInt acc = num_.coeff(k);
    for (int i = 1; i <= k && i <= den_.degree(); ++i) acc -= den_.coeff(i) * out[static_cast<size_t>(k - i)];
    out[static_cast<size_t>(k)] = acc * d0;
  }
  return out;
}

std::string RatFunX::to_string() const { return "(" + num_.to_string() + ") / (" + den_.to_string() + ")"; }

}  // namespace demflag
