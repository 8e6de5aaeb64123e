#include <vector>

#include "demflag/characters.hpp"
#include "demflag/errors.hpp"
#include "demflag/flag_engine.hpp"
#include "doctest.h"

using namespace demflag;

namespace {

QPoly P(const char* s) { return QPoly::parse(s); }

// Dimension of D(m, n) from the tensor factorisation, computed without the engine.
BigInt dim_oracle(int m, int n) {
  if (n == 0) return 1;
  int n0 = (n - 1) % m + 1, n1 = (n - n0) / m;
  BigInt d = 1;
  for (int i = 0; i < n1; ++i) d *= (m + 1) * (m + 2) / 2;
  int extra = 2 * n0 - m > 0 ? (2 * n0 - m) * (m + 1) / 2 : 0;
  return d * (n0 + 1 + extra);
}

}  // namespace

TEST_SUITE("flag_engine") {
  TEST_CASE("partition shapes") {
    std::vector<int> t{3, 3, 2, 2, 1};
    Partition p = Partition::from_parts(t);
    CHECK(p.parts() == t);
    CHECK(p.weight() == 8);
    CHECK(p.part(4) == 1);
    std::vector<int> bad{2, 1, 2};
    CHECK_THROWS_AS(Partition::from_parts(bad), InvalidShape);
    CHECK(demazure_parts(2, 3) == std::vector<int>{2, 2, 1});
    CHECK(demazure_parts(3, 6) == std::vector<int>{3, 3, 3});
    CHECK(demazure_parts(4, 0) == std::vector<int>{4});
  }

  TEST_CASE("mult_base") {
    CHECK(mult_base(2, 1, 3, 1) == QPoly(1));
    CHECK(mult_base(2, 2, 3, 1).is_zero());
    CHECK(mult_base(1, 1, 2, 0) == P("q"));
    CHECK(mult_base(2, 2, 3, 0) == P("q^2"));
    CHECK(mult_base(2, 2, 2, 0).is_zero());
    CHECK(mult_base(2, 1, 3, 2).is_zero());
    CHECK_THROWS_AS(mult_base(3, 1, 2, 0), InvalidLevel);
  }

  TEST_CASE("level-one steps") {
    FlagEngine e;
    CHECK(e.mult_step(2, 2, 0) == P("q^2"));
    CHECK(e.mult_step(2, 3, 1) == P("q^4"));
    CHECK(e.mult_step(3, 2, 2) == QPoly(1));
    CHECK(e.mult_step(1, 2, 0) == P("q^4"));
    CHECK(e.mult_step(3, 6, 5) == P("q^3"));
    CHECK(e.mult_step(2, 5, -1).is_zero());
    CHECK(e.mult_step(2, 2, 3).is_zero());
  }

  TEST_CASE("chained multiplicities") {
    FlagEngine e;
    for (int s = 0; s <= 5; ++s)
      for (int n = 0; n <= 6; ++n) CHECK(e.mult(1, s, 1, n) == QPoly(n == s ? 1 : 0));
    CHECK(e.mult(1, 3, 2, 1) == P("q^8"));
    CHECK(e.mult(1, 2, 3, 0) == P("q^2 + q^4"));
    CHECK(e.mult(2, 5, 2, 5) == QPoly(1));
    CHECK(e.weighted_mult(1, 3, 2, 1) == std::make_pair(8, QPoly(1)));
    CHECK(e.weighted_mult(1, 4, 2, 4) == std::make_pair(0, QPoly(1)));
    CHECK(e.weighted_mult(2, 1, 3, 1) == std::make_pair(0, QPoly(1)));
    CHECK_THROWS_AS(e.mult(3, 1, 2, 1), InvalidLevel);
    CHECK_THROWS_AS(e.mult(0, 1, 2, 1), InvalidLevel);
  }

  TEST_CASE("dimension sums against an engine-free oracle") {
    FlagEngine e;
    for (int mf = 1; mf <= 3; ++mf)
      for (int m = mf + 1; m <= mf + 3; ++m)
        for (int s = 0; s <= 14; ++s) {
          BigInt sum = 0;
          for (int n = 0; n <= s; ++n) sum += e.mult(mf, s, m, n).eval_one() * dim_oracle(m, n);
          CHECK_MESSAGE(sum == dim_oracle(mf, s), "m'=" << mf << " m=" << m << " s=" << s);
        }
  }

  TEST_CASE("partition engine") {
    FlagEngine e;
    for (int n = 0; n <= 3; ++n) CHECK(e.mult_parts({2, 2, 1}, 3, n) == e.mult(2, 3, 3, n));
    CHECK(e.mult_parts({1, 1, 1}, 2, 0) == e.mult(1, 2, 2, 0));
    CHECK(e.mult_parts({3, 1}, 4, 1) == mult_base(3, 1, 4, 1));
    CHECK(e.mult_parts({2}, 2, 0) == QPoly(1));
    CHECK_THROWS_AS(e.mult_parts({3, 3, 1}, 2, 0), InvalidLevel);
    for (int mf = 1; mf <= 2; ++mf)
      for (int m = mf; m <= mf + 2; ++m)
        for (int s = 0; s <= 10; ++s)
          for (int n = 0; n <= s; ++n) CHECK(e.mult_parts(demazure_parts(mf, s), m, n) == e.mult(mf, s, m, n));
  }

  TEST_CASE("head stripping") {
    std::vector<int> a{2, 2, 1};
    StripResult r = strip_head(a, 3);
    CHECK(r.shift == 0);
    CHECK(r.reduced_parts == std::vector<int>{2, 1});
    CHECK(r.level == 2);
    CHECK(r.target == 1);
    std::vector<int> b{1, 1, 1};
    r = strip_head(b, 1);
    CHECK(r.shift == 2);
    CHECK(r.reduced_parts == std::vector<int>{1, 1});
    CHECK(r.target == 0);
    std::vector<int> c{3, 3, 2};
    r = strip_head(c, 4);
    CHECK(r.shift == 2);
    CHECK(r.reduced_parts == std::vector<int>{3, 2});
    CHECK(r.target == 1);
    std::vector<int> one{2, 1};
    CHECK_THROWS_AS(strip_head(one, 1), InvalidShape);

    FlagEngine e;
    const std::vector<std::vector<int>> shapes{{1, 1, 1},    {2, 2, 1},    {2, 2, 2},    {3, 3, 1},    {3, 3, 2},
                                               {3, 3, 3},    {2, 2, 1, 1}, {3, 3, 2, 1}, {3, 3, 2, 2}, {3, 3, 3, 1},
                                               {2, 2, 2, 1}, {3, 3, 3, 2}};
    for (auto& xi : shapes) {
      int w = 0;
      for (size_t i = 1; i < xi.size(); ++i) w += xi[i];
      for (int s = 0; s <= w; ++s) {
        StripResult sr = strip_head(xi, s);
        QPoly lhs = e.mult_parts(xi, xi[0], s);
        QPoly rhs = e.mult_parts(sr.reduced_parts, sr.level, sr.target).shifted(sr.shift);
        CHECK(lhs == rhs);
      }
    }
  }

  TEST_CASE("tables") {
    FlagEngine e;
    MultiplicityTable t = e.mult_table(1, 2, 2);
    CHECK(t.at(2, 0) == P("q^4"));
    CHECK(t.at(2, 2) == QPoly(1));
    CHECK(e.mult_table(1, 2, 0).entries.size() == 1);
    MultiplicityTable id = e.mult_table(3, 3, 4);
    for (auto& [k, v] : id.entries) CHECK(v == QPoly(k.first == k.second ? 1 : 0));
  }

  TEST_CASE("memoisation is transparent") {
    FlagEngine memo, plain(FlagEngine::Options{false, std::nullopt, StepDispatch::table_first});
    FlagEngine rec(FlagEngine::Options{true, std::nullopt, StepDispatch::recursion_only});
    int count = 0;
    for (int mf = 1; mf <= 2; ++mf)
      for (int s = 0; s <= 12; s += 3)
        for (int n = 0; n <= s; n += 2) {
          CHECK(memo.mult(mf, s, mf + 2, n) == plain.mult(mf, s, mf + 2, n));
          CHECK(memo.mult(mf, s, mf + 2, n) == rec.mult(mf, s, mf + 2, n));
          ++count;
        }
    CHECK(count >= 20);
    CHECK(plain.stats().entries == 0);
    CHECK(memo.stats().entries > 0);
  }

  TEST_CASE("memo limit fails loudly") {
    FlagEngine small(FlagEngine::Options{true, std::size_t{5}, StepDispatch::table_first});
    CHECK_THROWS_AS(small.mult(1, 20, 4, 3), MemoLimitExceeded);
  }
}
