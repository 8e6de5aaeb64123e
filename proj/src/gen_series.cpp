#include "demflag/gen_series.hpp"

#include <stdexcept>
#include <string>

#include "demflag/closed_forms.hpp"
#include "demflag/errors.hpp"

namespace demflag {

namespace {

int delta(int a, int b) { return a == b ? 1 : 0; }

using Coeffs = std::vector<BigInt>;

// x^k * a, truncated to the length of a.
Coeffs shift_x(const Coeffs& a, int k) {
  Coeffs r(a.size(), BigInt(0));
  for (size_t i = 0; i + static_cast<size_t>(k) < a.size(); ++i) r[i + static_cast<size_t>(k)] = a[i];
  return r;
}

Coeffs axpy(const Coeffs& a, const BigInt& c, const Coeffs& b) {
  Coeffs r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += c * b[i];
  return r;
}

Coeffs one_series(int order) {
  Coeffs r(static_cast<size_t>(order), BigInt(0));
  if (order > 0) r[0] = 1;
  return r;
}

XPoly one_minus_x_pow(int k) { return XPoly(1) - XPoly::x_power(k); }

XSeriesQ embed(const XSeriesQ& s, int order) {
  XSeriesQ r(order);
  for (int i = 0; i < s.order() && i < order; ++i) r[i] = s[i];
  return r;
}

}  // namespace

void SeriesSpec::validate() const {
  if (m_from < 1) throw InvalidLevel("series: source level must be >= 1");
  if (m_to < m_from) throw InvalidLevel("series: target level below source level");
  if (n < 0) throw std::invalid_argument("series: n must be >= 0");
  if (x_order < 1) throw std::invalid_argument("series: x_order must be >= 1");
  if (parity_filter && *parity_filter != 0 && *parity_filter != 1)
    throw std::invalid_argument("series: parity must be 0 or 1");
}

XSeriesQ series_A(const SeriesSpec& spec, FlagEngine& engine) {
  spec.validate();
  XSeriesQ out(spec.x_order);
  for (int p = 0; p < spec.x_order; ++p) {
    if (spec.parity_filter && p % 2 != *spec.parity_filter) continue;
    QPoly v = engine.mult(spec.m_from, spec.n + p, spec.m_to, spec.n);
    out[p] = spec.weighted ? v.weight_split().second : v;
  }
  return out;
}

std::vector<BigInt> series_A_q1(int m_from, int m_to, int n, int x_order, FlagEngine& engine) {
  SeriesSpec spec{m_from, m_to, n, false, std::nullopt, x_order};
  return series_A(spec, engine).eval_q_one();
}

XPoly a_poly(int n) {
  if (n < 0) throw std::invalid_argument("a_poly: n must be >= 0");
  XPoly prev(1), cur(1);
  const XPoly x = XPoly::x_power(1);
  for (int i = 2; i <= n; ++i) {
    XPoly next = (i % 2 == 1 ? cur : (XPoly(1) + x) * cur) - x * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

XPoly chebyshev_P(int n) {
  if (n < 0) throw std::invalid_argument("chebyshev_P: n must be >= 0");
  XPoly prev(1), cur(1);
  const XPoly x = XPoly::x_power(1);
  for (int i = 2; i <= n; ++i) {
    XPoly next = cur - x * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

XPoly chebyshev_to_a(int n) {
  XPoly p = chebyshev_P(n);
  const int h = n / 2;
  if (p.degree() > h) throw InternalError("chebyshev_to_a: deg P_n exceeds floor(n/2)");
  // sum_i c_i x^i (1+x)^{h-i}
  const XPoly one_plus_x = XPoly(1) + XPoly::x_power(1);
  XPoly out;
  for (int i = 0; i <= p.degree(); ++i)
    out += XPoly::x_power(i, p.coeff(i)) * one_plus_x.pow(static_cast<unsigned>(h - i));
  return out;
}

RatFunX closed_A_1m(int m, int n) {
  if (m < 1 || n < 0) throw std::invalid_argument("closed_A_1m: need m >= 1 and n >= 0");
  if (m == 1) return RatFunX(XPoly(1), XPoly(1));
  const int s = n / m;
  const int r = n % m;
  XPoly num = r >= m / 2 ? a_poly(2 * m - 2 * r - 1) : a_poly(m) * a_poly(m - 2 * r - 1);
  XPoly den = (a_poly(m) * a_poly(m + 1)).pow(static_cast<unsigned>(s + 1));
  return RatFunX(num, den);
}

KMatrix build_K(int m) {
  if (m < 1) throw std::invalid_argument("build_K: m must be >= 1");
  const auto sz = static_cast<size_t>(m + 1);
  KMatrix k(sz, std::vector<XPoly>(sz));
  auto put = [&](int r, int c, const XPoly& v) { k[static_cast<size_t>(r)][static_cast<size_t>(c)] += v; };
  auto xp = [](int e) { return XPoly::x_power(e); };
  if (m == 1) {
    put(0, 1, XPoly(1));
    put(1, 1, XPoly(1));
    return k;
  }
  // Rows 0 and m: e_{(m+1)p} = e_{(m+1)p+m} = e_{(m+1)(p-1)+1} + x^{m-1} e_{(m+1)(p-1)+m}.
  for (int r : {0, m}) {
    put(r, 1, XPoly(1));
    put(r, m, xp(m - 1));
  }
  const int low_top = m % 2 == 0 ? (m - 2) / 2 : (m - 3) / 2;
  for (int r = 1; r <= low_top; ++r) {
    put(r, r + 1, XPoly(1));
    put(r, m + 1 - r, xp(m - 2 * r));
    put(r, m - r, xp(m - 2 * r - 1));
  }
  if (m % 2 == 1) {
    const int r = (m - 1) / 2;
    put(r, (m + 1) / 2, XPoly(1));
    put(r, (m + 3) / 2, xp(1));
    const int r2 = (m + 1) / 2;
    put(r2, r2 + 1, XPoly(1));
    put(r2, r2, xp(m - 1));
  } else {
    put(m / 2, m / 2 + 1, XPoly(1));
  }
  for (int r = (m + 3) / 2; r <= m - 1; ++r) {
    put(r, r + 1, XPoly(1));
    put(r, m + 1 - r, xp(2 * m - 2 * r));
    put(r, r, xp(m - 1));
  }
  return k;
}

XPoly d_poly(int m, int n) {
  if (m < 1 || n < 0) throw std::invalid_argument("d_poly: need m >= 1 and n >= 0");
  auto base = [m](int i) -> XPoly {
    if (i == 0 || i == m) return XPoly(1);
    const int c_m1 = m / 2;          // ceil((m-1)/2)
    const int c_m2 = (m - 1) / 2;    // ceil((m-2)/2)
    const int c_m = (m + 1) / 2;     // ceil(m/2)
    if (i == c_m1) return XPoly(1) + XPoly::x_power(1, m % 2);
    if (1 <= i && i <= c_m2) return XPoly(1) + XPoly::x_power(m - 2 * i);
    if (c_m <= i && i <= m - 1) return XPoly(1) + XPoly::x_power(2 * m - 2 * i);
    throw InternalError("d_poly: base table has no branch for n=" + std::to_string(i) + ", m=" + std::to_string(m));
  };
  std::vector<XPoly> vec;
  for (int i = 0; i <= m; ++i) vec.push_back(base(i));
  const int p = n / (m + 1);
  const int row = n % (m + 1);
  if (p == 0) return vec[static_cast<size_t>(n)];
  const KMatrix k = build_K(m);
  for (int step = 0; step < p; ++step) {
    std::vector<XPoly> next(vec.size());
    for (size_t r = 0; r < vec.size(); ++r)
      for (size_t c = 0; c < vec.size(); ++c)
        if (!k[r][c].is_zero()) next[r] += k[r][c] * vec[c];
    vec = std::move(next);
  }
  return vec[static_cast<size_t>(row)];
}

RatFunX closed_A_m_m1(int m, int n) {
  if (m < 1 || n < 0) throw std::invalid_argument("closed_A_m_m1: need m >= 1 and n >= 0");
  return RatFunX(d_poly(m, n), one_minus_x_pow(m).pow(static_cast<unsigned>(n / (m + 1) + 1)));
}

bool check_genserrec(int m, int n, int x_order, FlagEngine& engine) {
  if (m < 2 || n < -1) throw std::invalid_argument("check_genserrec: need m >= 2 and n >= -1");
  auto A = [&](int i) { return i == -1 ? one_series(x_order) : series_A_q1(1, m, i, x_order, engine); };
  const int n0 = (n % m + m) % m + 1;  // n + 1 = m n1 + n0, 0 < n0 <= m
  const BigInt c = 1 - delta(m, 2);
  Coeffs lhs = A(n), a1 = A(n + 1), rhs;
  if (2 * n0 == m - 1) {
    rhs = a1;
  } else if (n0 == m - 1 || 2 * n0 == m - 2) {
    rhs = axpy(a1, -c, shift_x(a1, 1));
  } else if (2 * n0 == m) {
    rhs = axpy(a1, -c, shift_x(A(n + 2), 2));
  } else {
    rhs = axpy(axpy(a1, -1, shift_x(a1, 1)), -c, shift_x(A(n + 2), 2));
  }
  return lhs == rhs;
}

bool check_elltheorem(int m, int n, int x_order, FlagEngine& engine) {
  if (m < 1 || n < 0) throw std::invalid_argument("check_elltheorem: need m >= 1 and n >= 0");
  auto A = [&](int i) { return series_A_q1(m, m + 1, i, x_order, engine); };
  const int r = (m + 1 - n % (m + 1)) % (m + 1);
  Coeffs lhs = A(n), rhs = A(n + m);
  if (r == 0) {
    // A_n = A_{n+m}
  } else if (r <= (m - 1) / 2) {
    rhs = axpy(rhs, -1, shift_x(A(n + 2 * r), 2 * r));
  } else if (r == (m + 1) / 2 && m % 2 == 1) {
    rhs = axpy(rhs, -1, shift_x(A(n + 2 * r), 2 * r - m));
  } else if (r == (m + 1) / 2) {
    rhs = axpy(rhs, -1, shift_x(A(n + 2 * r), 2 * r));
  } else {
    rhs = axpy(rhs, -1, shift_x(A(n + 2 * r), 2 * r - m));
    rhs = axpy(rhs, -1, shift_x(A(n + 2 * r - m - 1), 2 * r - m - 1));
  }
  return lhs == rhs;
}

namespace {

XSeriesQ carlitz_closed(int n, int k, int x_order, bool uncorrected) {
  if (n < 0 || (k != 0 && k != 1) || x_order < 1)
    throw std::invalid_argument("carlitz_closed_A23w: need n >= 0, k in {0,1}, x_order >= 1");
  const int s = n / 6;
  const int r = n % 6;
  const int rp = delta(r, 1) + delta(r, 4);
  const int sk = k == 0 ? s - delta(r, 1) : s - 1 + delta(r, 3) + delta(r, 5);
  const int poch_len = 2 * s + r / 3 + (uncorrected ? 0 : 1);
  const int prefactor = -2 * sk * sk - (uncorrected ? k : k * rp);
  XSeriesQ S = embed(carlitz_S(2 * sk + 1, k), x_order).sub_qpower(2).scale_x_by_qpower(2 * sk + rp);
  XSeriesQ inv = x_pochhammer(QPoly(1), 2, poch_len, QPoly::q_power(2), x_order).inverse();
  return (S * inv).scale(QPoly::q_power(prefactor));
}

}  // namespace

XSeriesQ carlitz_closed_A23w(int n, int k, int x_order) { return carlitz_closed(n, k, x_order, false); }

XSeriesQ carlitz_closed_A23w_uncorrected(int n, int k, int x_order) { return carlitz_closed(n, k, x_order, true); }

}  // namespace demflag
