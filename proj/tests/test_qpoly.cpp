#include <random>
#include <vector>

#include "demflag/errors.hpp"
#include "demflag/qpoly.hpp"
#include "demflag/series.hpp"
#include "doctest.h"

using namespace demflag;

namespace {

const QPoly q = QPoly::q_power(1);

// Gaussian binomial as the inversion generating function of 0/1 words with m ones.
QPoly binomial_by_inversions(int n, int m) {
  std::vector<BigInt> counts(static_cast<size_t>(m * (n - m) + 1), BigInt(0));
  for (unsigned w = 0; w < (1u << n); ++w) {
    if (__builtin_popcount(w) != m) continue;
    int inv = 0, ones = 0;
    for (int i = 0; i < n; ++i) {
      if (w & (1u << i))
        ++ones;
      else
        inv += ones;
    }
    counts[static_cast<size_t>(inv)] += 1;
  }
  std::vector<std::pair<int, BigInt>> terms;
  for (size_t e = 0; e < counts.size(); ++e) terms.emplace_back(static_cast<int>(e), counts[e]);
  return QPoly::from_terms(terms);
}

QPoly random_poly(std::mt19937& rng, int lo = -6, int hi = 6) {
  std::uniform_int_distribution<int> c(-9, 9), len(0, 5), ex(lo, hi);
  std::vector<std::pair<int, BigInt>> terms;
  for (int i = len(rng); i > 0; --i) terms.emplace_back(ex(rng), BigInt(c(rng)));
  return QPoly::from_terms(terms);
}

}  // namespace

TEST_SUITE("qpoly") {
  TEST_CASE("ring examples") {
    CHECK((QPoly(1) + q) + q == QPoly(1) + QPoly(2) * q);
    CHECK((QPoly(1) + q) * (QPoly(1) - q) == QPoly(1) - q * q);
    CHECK((QPoly::q_power(-1) + 1) * q == QPoly(1) + q);
    CHECK((q - q).is_zero());
  }

  TEST_CASE("rendering and parsing") {
    CHECK(QPoly().to_string() == "0");
    CHECK(QPoly(1).to_string() == "1");
    CHECK((QPoly(1) + QPoly(2) * QPoly::q_power(3) - QPoly::q_power(5)).to_string() == "1 + 2*q^3 - q^5");
    CHECK((-QPoly::q_power(3)).to_string() == "-q^3");
    CHECK(QPoly::q_power(-2).to_string() == "q^-2");
    CHECK(q.to_string() == "q");
    for (const char* s : {"0", "1", "q", "-q^3", "1 + 2*q^3 - q^5", "q^-2 + 7*q", "-3 - q^-1"})
      CHECK(QPoly::parse(QPoly::parse(s).to_string()) == QPoly::parse(s));
    CHECK(QPoly::parse("1 + q + q") == QPoly(1) + QPoly(2) * q);
    CHECK_THROWS_AS(QPoly::parse("1 + x"), ParseError);
    CHECK_THROWS_AS(QPoly::parse(""), ParseError);
  }

  TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(20240611);
    for (int i = 0; i < 200; ++i) {
      QPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
    }
  }

  TEST_CASE("q_binomial") {
    CHECK(q_binomial(4, 2) == QPoly::parse("1 + q + 2*q^2 + q^3 + q^4"));
    CHECK(q_binomial(5, 0) == QPoly(1));
    CHECK(q_binomial(-1, 0) == QPoly(1));
    CHECK(q_binomial(3, 5).is_zero());
    CHECK(q_binomial(3, -1).is_zero());
    CHECK(q_binomial(-1, 2).is_zero());
    for (int n = 0; n <= 12; ++n)
      for (int m = 0; m <= n; ++m) {
        CHECK(q_binomial(n, m) == binomial_by_inversions(n, m));
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(m));
        CHECK(q_binomial(n, m).eval_one() == b);
        if (n >= 1) {
          CHECK(q_binomial(n, m) == q_binomial(n - 1, m) + q_binomial(n - 1, m - 1).shifted(n - m));
          CHECK(q_binomial(n, m) == q_binomial(n - 1, m).shifted(m) + q_binomial(n - 1, m - 1));
        }
      }
  }

  TEST_CASE("q_pochhammer") {
    CHECK(q_pochhammer(q, 0, q) == QPoly(1));
    CHECK(q_pochhammer(-q, 2, QPoly::q_power(2)) == QPoly::parse("1 + q + q^3 + q^4"));
    CHECK(q_pochhammer(q, 2, q) == QPoly::parse("1 - q - q^2 + q^3"));
    // (q;q)_n / ((q;q)_m (q;q)_{n-m}) is the Gaussian binomial.
    for (int n = 0; n <= 8; ++n)
      for (int m = 0; m <= n; ++m) {
        auto r = q_pochhammer(q, n, q).divide_exact(q_pochhammer(q, m, q) * q_pochhammer(q, n - m, q));
        REQUIRE(r.has_value());
        CHECK(*r == q_binomial(n, m));
      }
  }

  TEST_CASE("substitution, evaluation, weight split") {
    CHECK((QPoly(1) + q).sub_qpower(2) == QPoly(1) + QPoly::q_power(2));
    CHECK(QPoly::q_power(-1).sub_qpower(3) == QPoly::q_power(-3));
    CHECK(QPoly::parse("1 + q + q^2").sub_qpower(1) == QPoly::parse("1 + q + q^2"));
    CHECK(QPoly::parse("1 + q + 2*q^2").eval_one() == 4);
    CHECK(QPoly().eval_one() == 0);
    CHECK(QPoly::parse("q^-1 + q").eval_one() == 2);
    CHECK(QPoly::parse("q^3 + q^5").weight_split() == std::make_pair(3, QPoly::parse("1 + q^2")));
    CHECK(QPoly().weight_split() == std::make_pair(0, QPoly()));
    CHECK(QPoly::parse("1 + q").weight_split() == std::make_pair(0, QPoly::parse("1 + q")));
    std::mt19937 rng(7);
    for (int i = 0; i < 100; ++i) {
      QPoly p = random_poly(rng, 0, 8);
      if (p.is_zero()) continue;
      auto [r, w] = p.weight_split();
      CHECK(w.coeff(0) != 0);
      CHECK(w.shifted(r) == p);
    }
  }

  TEST_CASE("exact division") {
    QPoly a = QPoly::parse("1 + q"), b = QPoly::parse("1 - q^3");
    CHECK(*(a * b).divide_exact(b) == a);
    CHECK_FALSE(QPoly::parse("1 + q^2").divide_exact(a).has_value());
  }
}

TEST_SUITE("series") {
  TEST_CASE("truncated arithmetic") {
    XSeriesQ one_plus_x = XSeriesQ::one(3) + XSeriesQ::monomial(3, QPoly(1), 1);
    XSeriesQ one_minus_x = XSeriesQ::one(3) - XSeriesQ::monomial(3, QPoly(1), 1);
    XSeriesQ prod = one_plus_x * one_minus_x;
    CHECK(prod == XSeriesQ::one(3) - XSeriesQ::monomial(3, QPoly(1), 2));

    XSeriesQ geo(5);
    for (int k = 0; k < 5; ++k) geo[k] = 1;
    CHECK(geo * (XSeriesQ::one(5) - XSeriesQ::monomial(5, QPoly(1), 1)) == XSeriesQ::one(5));

    XSeriesQ scaled = one_plus_x.scale(QPoly::q_power(1), 1);
    CHECK(scaled == XSeriesQ::monomial(3, QPoly::q_power(1), 1) + XSeriesQ::monomial(3, QPoly::q_power(1), 2));

    CHECK((XSeriesQ::one(3) * XSeriesQ::one(7)).order() == 3);
  }

  TEST_CASE("inverse") {
    XSeriesQ s = XSeriesQ::one(4) - XSeriesQ::monomial(4, QPoly(1), 1);
    XSeriesQ geo(4);
    for (int k = 0; k < 4; ++k) geo[k] = 1;
    CHECK(s.inverse() == geo);

    XSeriesQ t = XSeriesQ::one(3) - XSeriesQ::monomial(3, QPoly::q_power(1), 1);
    XSeriesQ want(3);
    for (int k = 0; k < 3; ++k) want[k] = QPoly::q_power(k);
    CHECK(t.inverse() == want);

    XSeriesQ bad = XSeriesQ::monomial(3, QPoly(1), 1) + XSeriesQ::monomial(3, QPoly(1), 2);
    CHECK_THROWS_AS(bad.inverse(), NonUnitConstantTerm);
    XSeriesQ two = XSeriesQ::monomial(3, QPoly(2));
    CHECK_THROWS_AS(two.inverse(), NonUnitConstantTerm);

    std::mt19937 rng(99);
    std::uniform_int_distribution<int> c(-4, 4), ex(-3, 3), sign(0, 1);
    for (int i = 0; i < 50; ++i) {
      XSeriesQ u(6);
      u[0] = sign(rng) ? 1 : -1;
      for (int k = 1; k < 6; ++k) u[k] = QPoly::monomial(c(rng), ex(rng)) + QPoly::monomial(c(rng), ex(rng));
      CHECK(u * u.inverse() == XSeriesQ::one(6));
    }
  }

  TEST_CASE("XPoly and rational functions") {
    XPoly x = XPoly::x_power(1);
    RatFunX geo(XPoly(1), XPoly(1) - x);
    CHECK(geo.expand(4) == std::vector<BigInt>{1, 1, 1, 1});
    CHECK(RatFunX(XPoly(1) - x, XPoly(1) - x).expand(3) == std::vector<BigInt>{1, 0, 0});
    CHECK(RatFunX(XPoly(1), XPoly(1) - x - x * x).expand(7) == std::vector<BigInt>{1, 1, 2, 3, 5, 8, 13});
    CHECK(RatFunX(XPoly(2), XPoly(2) - x * XPoly(4)) == RatFunX(XPoly(1), XPoly(1) - x * XPoly(2)));
    CHECK_THROWS_AS(RatFunX(XPoly(1), XPoly(2) - x).expand(3), NonUnitConstantTerm);
    CHECK((XPoly(1) + x).pow(3) == XPoly(std::vector<BigInt>{1, 3, 3, 1}));
    CHECK(XPoly().is_zero());
  }
}
