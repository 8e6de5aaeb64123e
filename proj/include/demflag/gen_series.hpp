#pragma once

#include <optional>
#include <vector>

#include "demflag/flag_engine.hpp"
#include "demflag/qpoly.hpp"
#include "demflag/series.hpp"

namespace demflag {

/// A_n^{m_from -> m_to}(x, q) = sum_p [D(m_from, n+p) : D(m_to, n)] x^p, optionally
/// weighted and restricted to p of one parity.
struct SeriesSpec {
  int m_from = 1;
  int m_to = 1;
  int n = 0;
  bool weighted = false;
  std::optional<int> parity_filter;
  int x_order = 20;

  void validate() const;
};

XSeriesQ series_A(const SeriesSpec& spec, FlagEngine& engine = FlagEngine::shared());

/// Coefficients of series_A at q = 1.
std::vector<BigInt> series_A_q1(int m_from, int m_to, int n, int x_order, FlagEngine& engine = FlagEngine::shared());

/// a_0 = a_1 = 1; a_n = a_{n-1} - x a_{n-2} (n odd), (1+x) a_{n-1} - x a_{n-2} (n even).
XPoly a_poly(int n);

/// P_0 = P_1 = 1, P_{n+1} = P_n - x P_{n-1}.
XPoly chebyshev_P(int n);

/// (1+x)^{floor(n/2)} P_n(x/(1+x)) with the denominators cleared.
XPoly chebyshev_to_a(int n);

/// Closed form of A_n^{1 -> m}(x) for m >= 2; m == 1 gives 1.
RatFunX closed_A_1m(int m, int n);

using KMatrix = std::vector<std::vector<XPoly>>;

/// The (m+1) x (m+1) step matrix advancing d_n by one block of m+1 indices.
KMatrix build_K(int m);

/// d_n(x): the base table for n <= m, K^p applied to the base vector beyond.
XPoly d_poly(int m, int n);

/// Closed form of A_n^{m -> m+1}(x).
RatFunX closed_A_m_m1(int m, int n);

/// The four-branch recurrence for A^{1 -> m} on engine series, with A_{-1} = 1.
bool check_genserrec(int m, int n, int x_order, FlagEngine& engine = FlagEngine::shared());

/// The five-branch recurrence for A^{m -> m+1} on engine series.
bool check_elltheorem(int m, int n, int x_order, FlagEngine& engine = FlagEngine::shared());

/// Closed form for the parity-k part of the weighted 2 -> 3 series of weight n:
/// q^{-2 s_k^2 - k r'} / (x^2; q^2)_{2s + floor(r/3) + 1} * S_{2 s_k + 1}(q^{2 s_k + r'} x, q^2)_k.
XSeriesQ carlitz_closed_A23w(int n, int k, int x_order);

/// The same expression with the denominator index 2s + floor(r/3) and prefactor q^{-2 s_k^2 - k}.
XSeriesQ carlitz_closed_A23w_uncorrected(int n, int k, int x_order);

}  // namespace demflag
