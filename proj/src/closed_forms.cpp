#include "demflag/closed_forms.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "demflag/errors.hpp"

namespace demflag {

namespace {

int delta(int a, int b) { return a == b ? 1 : 0; }

int ceil_half(int p) { return (p + 1) / 2; }

QPoly truncate_below(const QPoly& p, int order) {
  std::vector<std::pair<int, BigInt>> kept;
  for (auto& [e, c] : p.terms())
    if (e < order) kept.emplace_back(e, c);
  return QPoly::from_terms(kept);
}

QPoly binom_q2(int n, int m) { return q_binomial(n, m).sub_qpower(2); }

}  // namespace

TwoThreeParams TwoThreeParams::make(int n, int p) {
  if (n < 0 || p < 0) throw std::invalid_argument("TwoThreeParams: n and p must be >= 0");
  TwoThreeParams t;
  t.s = n / 6;
  t.r = n % 6;
  t.res2p = res2(p);
  t.r_prime = delta(t.r, 1) + delta(t.r, 4);
  t.r_bar = (delta(t.r, 1) + delta(t.r, 3) + delta(t.r, 5)) * t.res2p - delta(t.r, 1);
  t.r_tilde = t.r / 3;
  return t;
}

QPoly cf_1to2_weighted(int s, int p) {
  if (s < 0 || p < 0) throw std::invalid_argument("cf_1to2: s and p must be >= 0");
  return binom_q2(s / 2 + p, p);
}

int cf_1to2_shift(int s, int p) { return p * (s + p + res2(s)); }

QPoly cf_1to2(int s, int p) { return cf_1to2_weighted(s, p).shifted(cf_1to2_shift(s, p)); }

QPoly cf_2to3_weighted(int n, int p) {
  TwoThreeParams t = TwoThreeParams::make(n, p);
  int base = 2 * t.s + t.r_tilde;
  QPoly sum;
  for (int j = 0; j <= p / 2; ++j) {
    QPoly a = binom_q2(base + p / 2 - j, base);
    if (a.is_zero()) continue;
    QPoly b = binom_q2(t.s + j + t.r_bar, 2 * j + t.res2p);
    if (b.is_zero()) continue;
    sum += (a * b).shifted(2 * j * (j + t.r_prime + t.res2p));
  }
  return sum;
}

int cf_2to3_shift(int n, int p) {
  TwoThreeParams t = TwoThreeParams::make(n, p);
  return p * (4 * t.s + t.r - t.r_tilde + ceil_half(p)) + t.res2p * (t.r_prime + 1 - ceil_half(p));
}

int cf_2to3_shift_uncorrected(int n, int p) {
  TwoThreeParams t = TwoThreeParams::make(n, p);
  return p * (4 * t.s + t.r - t.r_tilde + ceil_half(p)) + t.res2p * (t.r_prime + t.r_tilde - ceil_half(p));
}

QPoly cf_2to3(int n, int p) { return cf_2to3_weighted(n, p).shifted(cf_2to3_shift(n, p)); }

XSeriesQ carlitz_S(int n, int k) {
  if (k != 0 && k != 1) throw std::invalid_argument("carlitz_S: k must be 0 or 1");
  if (n < -1) throw std::invalid_argument("carlitz_S: index out of range");
  const int order = std::max(n + 1, 1);

  if (k == 0 && n == -1) {
    // S_1 = x S_0 + q^{-1} S_{-1} with S_0 = 0 forces S_{-1} = q.
    return XSeriesQ::monomial(order, QPoly::q_power(1));
  }
  // Recurrence S_i = x S_{i-1} + q^{i-2} S_{i-2} from (S_lo, S_{lo+1}) = (0, 1).
  const int lo = k == 0 ? 0 : -1;
  XSeriesQ a(order), b = XSeriesQ::one(order);
  for (int i = lo + 2; i <= n; ++i) {
    XSeriesQ next = b.scale(QPoly(1), 1) + a.scale(QPoly::q_power(i - 2));
    a = std::move(b);
    b = std::move(next);
  }
  const XSeriesQ& rec = n == lo ? a : b;

  // Closed sum: S_n(x,q)_0 = sum_j binom(n-1-j, j)_q q^{j^2} x^{n-1-2j},
  //             S_n(x,q)_1 = sum_j binom(n-j, j)_q q^{j(j-1)} x^{n-2j}.
  XSeriesQ closed(order);
  int top = k == 0 ? n - 1 : n;
  for (int j = 0; top - 2 * j >= 0; ++j) {
    QPoly c = q_binomial(top - j, j).shifted(k == 0 ? j * j : j * (j - 1));
    closed[top - 2 * j] += c;
  }
  if (!(rec == closed))
    throw InternalError("carlitz_S: recurrence and closed sum disagree at n=" + std::to_string(n) +
                        " k=" + std::to_string(k));
  return rec;
}

QPoly mock_theta(int which, int q_order) {
  if (which != 0 && which != 1) throw std::invalid_argument("mock_theta: which must be 0 or 1");
  if (q_order < 1) throw std::invalid_argument("mock_theta: q_order must be >= 1");
  QPoly sum;
  QPoly poch(1);  // (-q; q^2)_n
  for (int n = 0;; ++n) {
    int lead = which == 0 ? n * n : (n + 1) * (n + 1);
    if (lead >= q_order) break;
    sum += truncate_below(poch.shifted(lead), q_order);
    poch = truncate_below(poch * (QPoly(1) + QPoly::q_power(2 * n + 1)), q_order);
  }
  return sum;
}

int qpower_exponent(const QPoly& base) {
  if (!base.is_monomial() || base.coeff(base.min_exp()) != 1)
    throw std::invalid_argument("expected a monomial q^e, got " + base.to_string());
  return base.min_exp();
}

XSeriesQ x_pochhammer(const QPoly& c, int k, int n, const QPoly& base, int x_order) {
  if (k < 0 || n < 0) throw std::invalid_argument("x_pochhammer: k and n must be >= 0");
  int e = qpower_exponent(base);
  XSeriesQ acc = XSeriesQ::one(x_order);
  for (int i = 0; i < n; ++i) {
    XSeriesQ factor = XSeriesQ::one(x_order) - XSeriesQ::monomial(x_order, c.shifted(e * i), k);
    acc = acc * factor;
  }
  return acc;
}

std::vector<XSeriesQ> hypergeom_terms(const std::vector<HyperParam>& upper, const std::vector<HyperParam>& lower,
                                      const QPoly& base, int z_order, int x_order) {
  if (z_order < 1 || x_order < 1) throw std::invalid_argument("hypergeom: orders must be >= 1");
  for (const auto* list : {&upper, &lower})
    for (const auto& a : *list)
      if (a.x_deg < 0) throw std::invalid_argument("hypergeom: parameters must not have negative x-degree");
  std::vector<XSeriesQ> out;
  out.reserve(static_cast<size_t>(z_order));
  for (int n = 0; n < z_order; ++n) {
    QPoly num0(1), den0 = q_pochhammer(base, n, base);
    XSeriesQ num_x = XSeriesQ::one(x_order), den_x = XSeriesQ::one(x_order);
    for (const auto& a : upper) {
      if (a.x_deg == 0)
        num0 *= q_pochhammer(a.coeff, n, base);
      else
        num_x = num_x * x_pochhammer(a.coeff, a.x_deg, n, base, x_order);
    }
    for (const auto& b : lower) {
      if (b.x_deg == 0)
        den0 *= q_pochhammer(b.coeff, n, base);
      else
        den_x = den_x * x_pochhammer(b.coeff, b.x_deg, n, base, x_order);
    }
    auto ratio = num0.divide_exact(den0);
    if (!ratio)
      throw InexactDivision("hypergeom term " + std::to_string(n) + ": (" + num0.to_string() + ") / (" +
                            den0.to_string() + ") is not a Laurent polynomial");
    out.push_back((num_x * den_x.inverse()).scale(*ratio));
  }
  return out;
}

XSeriesQ hypergeom_rphis(const std::vector<HyperParam>& upper, const std::vector<HyperParam>& lower,
                         const QPoly& base, int z_order, const QPoly& z_coeff, int z_xdeg, int x_order) {
  if (z_xdeg < 0) throw std::invalid_argument("hypergeom_rphis: z_xdeg must be >= 0");
  auto terms = hypergeom_terms(upper, lower, base, z_order, x_order);
  XSeriesQ sum(x_order);
  QPoly zc(1);
  for (int n = 0; n < z_order; ++n) {
    sum += terms[static_cast<size_t>(n)].scale(zc, n * z_xdeg);
    zc *= z_coeff;
  }
  return sum;
}

XSeriesQ gen_binomial_series(int k, const QPoly& base, int x_order) {
  if (k < 0) throw std::invalid_argument("gen_binomial_series: k must be >= 0");
  int e = qpower_exponent(base);
  if (e < 1) throw std::invalid_argument("gen_binomial_series: base must be q^e with e >= 1");
  XSeriesQ s(x_order);
  for (int j = k; j < x_order; ++j) s[j] = q_binomial(j, k).sub_qpower(e);
  return s;
}

XSeriesQ gen_binomial_closed(int k, const QPoly& base, int x_order) {
  if (k < 0) throw std::invalid_argument("gen_binomial_closed: k must be >= 0");
  return x_pochhammer(QPoly(1), 1, k + 1, base, x_order).inverse().scale(QPoly(1), k);
}

XSeriesQ closed_A0_1to3(int x_order) {
  if (x_order < 1) throw std::invalid_argument("closed_A0_1to3: x_order must be >= 1");
  XSeriesQ sum(x_order);
  for (int i = 0; i < x_order; ++i)
    sum += x_pochhammer(-QPoly::q_power(1), 1, i, QPoly::q_power(2), x_order).scale(QPoly::q_power(i * i), i);
  return sum;
}

QPoly fourphithree_term(int s, int r, int j) {
  if (s < 0 || r < 0 || r > 5 || j < 0) throw std::invalid_argument("fourphithree_term: need s, j >= 0 and 0 <= r <= 5");
  int s0 = s - delta(r, 1);
  int rp = delta(r, 1) + delta(r, 4);
  QPoly q2 = QPoly::q_power(2);
  QPoly num = q_pochhammer(QPoly::q_power(2 * s0 + 2), j, q2) * q_pochhammer(QPoly::q_power(-2 * s0), j, q2);
  QPoly den = q_pochhammer(q2, j, q2) * q_pochhammer(-q2, j, q2) * q_pochhammer(QPoly::q_power(1), j, q2) *
              q_pochhammer(-QPoly::q_power(1), j, q2);
  auto ratio = num.divide_exact(den);
  if (!ratio) throw InexactDivision("fourphithree_term: term " + std::to_string(j) + " is not a Laurent polynomial");
  QPoly t = ratio->shifted(2 * j * (s0 + rp) + j * (j + 1));
  return j % 2 == 0 ? t : -t;
}

}  // namespace demflag
