#pragma once

#include <vector>

#include "demflag/qpoly.hpp"
#include "demflag/series.hpp"

namespace demflag {

/// Parameters of the 2 -> 3 closed form for weight n = 6s + r and shift p.
struct TwoThreeParams {
  int s = 0;
  int r = 0;
  int r_prime = 0;
  int r_bar = 0;
  int r_tilde = 0;
  int res2p = 0;

  static TwoThreeParams make(int n, int p);
};

/// [D(1,s+p):D(2,s)]^w_q = binom(floor(s/2)+p, p)_{q^2}.
QPoly cf_1to2_weighted(int s, int p);
/// [D(1,s+p):D(2,s)]_q.
QPoly cf_1to2(int s, int p);
/// Exponent of the q-power separating cf_1to2 from its weighted form.
int cf_1to2_shift(int s, int p);

QPoly cf_2to3_weighted(int n, int p);
QPoly cf_2to3(int n, int p);
/// p(4s + r - r~ + ceil(p/2)) + res2(p)(r' + 1 - ceil(p/2)).
int cf_2to3_shift(int n, int p);
/// The same with r' + r~ in the odd-p bracket; one short for odd p and r < 3.
int cf_2to3_shift_uncorrected(int n, int p);

/// Carlitz q-Fibonacci polynomial S_n(x,q)_k as a series of order n+1 in x.
///
/// Computed by the recurrence and by the closed sum; the two must agree or
/// InternalError is thrown. S_{-1}(x,q)_0 = q continues the recurrence backwards,
/// S_{-1}(x,q)_1 = 0.
XSeriesQ carlitz_S(int n, int k);

/// Ramanujan's fifth order mock theta function phi_0 (which = 0) or phi_1,
/// truncated to exponents below q_order.
QPoly mock_theta(int which, int q_order);

/// A hypergeometric parameter c * x^x_deg with c a Laurent polynomial in q.
struct HyperParam {
  QPoly coeff;
  int x_deg = 0;

  HyperParam(QPoly c, int xd = 0) : coeff(std::move(c)), x_deg(xd) {}  // NOLINT(google-explicit-constructor)
};

/// Coefficients of z^n, 0 <= n < z_order, of the r phi s series
/// sum_n prod (a_i; base)_n / (prod (b_j; base)_n (base; base)_n) z^n,
/// each truncated to x_order. x-free parts are divided exactly (InexactDivision
/// otherwise); x-dependent denominators are inverted as series.
std::vector<XSeriesQ> hypergeom_terms(const std::vector<HyperParam>& upper, const std::vector<HyperParam>& lower,
                                      const QPoly& base, int z_order, int x_order);

/// The r phi s series with z = z_coeff * x^z_xdeg substituted, truncated to x_order.
XSeriesQ hypergeom_rphis(const std::vector<HyperParam>& upper, const std::vector<HyperParam>& lower,
                         const QPoly& base, int z_order, const QPoly& z_coeff, int z_xdeg, int x_order);

/// sum_j binom(j,k)_base x^j truncated to x_order.
XSeriesQ gen_binomial_series(int k, const QPoly& base, int x_order);

/// x^k / (x; base)_{k+1}, the closed side of the same identity.
XSeriesQ gen_binomial_closed(int k, const QPoly& base, int x_order);

/// sum_i q^{i^2} (-qx; q^2)_i x^i truncated to x_order.
XSeriesQ closed_A0_1to3(int x_order);

/// Term j of the 4phi3 limit display for weight 6s+r: the coefficient of x^{2j}.
/// Each factor is divided exactly; InexactDivision if that fails.
QPoly fourphithree_term(int s, int r, int j);

/// The exponent of a monomial q^e with coefficient 1; std::invalid_argument otherwise.
int qpower_exponent(const QPoly& base);

/// (x^k * c; base)_n as a series in x of the given order, for c a Laurent polynomial.
XSeriesQ x_pochhammer(const QPoly& c, int k, int n, const QPoly& base, int x_order);

}  // namespace demflag
