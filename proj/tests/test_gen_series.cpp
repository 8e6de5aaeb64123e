#include "demflag/closed_forms.hpp"
#include "demflag/errors.hpp"
#include "demflag/gen_series.hpp"
#include "doctest.h"

using namespace demflag;

namespace {

const XPoly x = XPoly::x_power(1);

XPoly X(std::vector<BigInt> c) { return XPoly(std::move(c)); }

}  // namespace

TEST_SUITE("gen_series") {
  TEST_CASE("engine series") {
    for (int m = 1; m <= 3; ++m)
      for (int n = 0; n <= 5; ++n) {
        XSeriesQ s = series_A(SeriesSpec{m, m + 1, n, false, std::nullopt, 6});
        CHECK(s[0] == QPoly(1));
      }
    CHECK(series_A_q1(1, 2, 0, 6) == std::vector<BigInt>(6, 1));
    CHECK(series_A(SeriesSpec{2, 3, 0, false, 1, 10}).is_zero());
    XSeriesQ w = series_A(SeriesSpec{1, 2, 3, true, std::nullopt, 4});
    CHECK(w[1] == QPoly::parse("1 + q^2"));
    CHECK_THROWS_AS(series_A(SeriesSpec{3, 2, 0, false, std::nullopt, 4}), InvalidLevel);
    CHECK_THROWS_AS(series_A(SeriesSpec{1, 2, 0, false, 2, 4}), std::invalid_argument);
  }

  TEST_CASE("a_n and Chebyshev") {
    CHECK(a_poly(0) == XPoly(1));
    CHECK(a_poly(2) == XPoly(1));
    CHECK(a_poly(3) == XPoly(1) - x);
    CHECK(a_poly(4) == X({1, -1, -1}));
    CHECK(a_poly(5) == X({1, -2}));
    CHECK(chebyshev_P(2) == X({1, -1}));
    CHECK(chebyshev_P(3) == X({1, -2}));
    CHECK(chebyshev_P(4) == X({1, -3, 1}));
    for (int n = 0; n <= 20; ++n) CHECK(chebyshev_to_a(n) == a_poly(n));
    for (int n = 4; n <= 20; ++n) CHECK(a_poly(n) == (XPoly(1) - x) * a_poly(n - 2) - x * x * a_poly(n - 4));
  }

  TEST_CASE("rational form 1 -> m") {
    CHECK(closed_A_1m(2, 0) == RatFunX(XPoly(1), XPoly(1) - x));
    CHECK(closed_A_1m(2, 1) == RatFunX(XPoly(1), XPoly(1) - x));
    CHECK(closed_A_1m(3, 0) == RatFunX(XPoly(1), X({1, -1, -1})));
    CHECK(closed_A_1m(3, 0).expand(6) == std::vector<BigInt>{1, 1, 2, 3, 5, 8});
    CHECK(closed_A_1m(1, 4) == RatFunX(XPoly(1), XPoly(1)));
    for (int m = 2; m <= 4; ++m)
      for (int n = 0; n <= 3 * m; ++n) CHECK(closed_A_1m(m, n).expand(12) == series_A_q1(1, m, n, 12));
  }

  TEST_CASE("rational form m -> m+1") {
    CHECK(d_poly(2, 0) == XPoly(1));
    CHECK(d_poly(2, 1) == XPoly(1));
    CHECK(d_poly(2, 2) == XPoly(1));
    CHECK(d_poly(3, 1) == XPoly(1) + x);
    CHECK(closed_A_m_m1(2, 1) == RatFunX(XPoly(1), XPoly(1) - x * x));
    CHECK(closed_A_m_m1(1, 0) == RatFunX(XPoly(1), XPoly(1) - x));
    CHECK(build_K(4).size() == 5);
    for (int m = 1; m <= 4; ++m)
      for (int n = 0; n <= 3 * (m + 1); ++n) CHECK(closed_A_m_m1(m, n).expand(14) == series_A_q1(m, m + 1, n, 14));
  }

  TEST_CASE("recurrences") {
    CHECK(check_genserrec(2, 0, 12));
    CHECK(check_genserrec(3, 2, 12));
    CHECK(check_genserrec(2, -1, 12));
    CHECK(check_elltheorem(2, 3, 12));
    CHECK(check_elltheorem(1, 0, 12));
    CHECK(check_elltheorem(3, 2, 12));
  }

  TEST_CASE("Carlitz closed form") {
    for (int n = 0; n <= 12; ++n)
      for (int k = 0; k <= 1; ++k)
        CHECK(carlitz_closed_A23w(n, k, 10) == series_A(SeriesSpec{2, 3, n, true, k, 10}));
    CHECK(carlitz_closed_A23w(0, 1, 8).is_zero());
    CHECK(carlitz_closed_A23w(0, 0, 8)[0] == QPoly(1));
    // The uncorrected form misses already at n = 0.
    CHECK_FALSE(carlitz_closed_A23w_uncorrected(0, 0, 8) == series_A(SeriesSpec{2, 3, 0, true, 0, 8}));
  }

  TEST_CASE("weighted 1 -> 2 series is 1/(x;q^2)_{n+1}") {
    QPoly q2 = QPoly::q_power(2);
    for (int n = 0; n <= 4; ++n) {
      XSeriesQ closed = x_pochhammer(QPoly(1), 1, n + 1, q2, 10).inverse();
      CHECK(series_A(SeriesSpec{1, 2, 2 * n, true, std::nullopt, 10}) == closed);
      CHECK(series_A(SeriesSpec{1, 2, 2 * n + 1, true, std::nullopt, 10}) == closed);
    }
  }
}
