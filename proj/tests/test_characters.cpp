#include "demflag/characters.hpp"
#include "demflag/errors.hpp"
#include "doctest.h"

using namespace demflag;

namespace {

GradedCharacter make(std::initializer_list<std::array<int, 3>> items) {
  GradedCharacter c;
  for (auto& [j, p, m] : items) c.add(j, p, m);
  return c;
}

}  // namespace

TEST_SUITE("characters") {
  TEST_CASE("level-one decompositions") {
    CHECK(level_one_step_decomp(2, 1) == make({{1, 0, 1}}));
    CHECK(level_one_step_decomp(2, 2) == make({{2, 0, 1}, {1, 1, 1}, {0, 2, 1}}));
    CHECK(level_one_step_decomp(1, 0) == make({{0, 0, 1}}));
    CHECK(level_one_step_decomp(2, 2).to_string() == "V(2)@0 + V(1)@1 + V(0)@2");
    CHECK_THROWS_AS(level_one_step_decomp(2, 3), InvalidShape);
    // dim D(xi0, xi1) = (xi1 + 1) + (2 xi1 - xi0)_+ (xi0 + 1) / 2
    for (int a = 1; a <= 6; ++a)
      for (int b = 0; b <= a; ++b) {
        int extra = 2 * b - a > 0 ? (2 * b - a) * (a + 1) / 2 : 0;
        CHECK(level_one_step_decomp(a, b).total_dimension() == b + 1 + extra);
      }
  }

  TEST_CASE("dimensions") {
    CHECK(dim_demazure(3, 0) == 1);
    CHECK(dim_demazure(2, 2) == 6);
    CHECK(dim_demazure(2, 3) == 12);
    CHECK(dim_demazure(1, 2) == 9);
    CHECK(dim_demazure(3, 6) == 100);
    // D(1, n) is D(1,1)^{tensor n}.
    for (int n = 0; n <= 10; ++n) {
      BigInt p;
      mpz_ui_pow_ui(p.get_mpz_t(), 3, static_cast<unsigned long>(n));
      CHECK(dim_demazure(1, n) == p);
    }
  }

  TEST_CASE("graded characters") {
    CHECK(graded_character(2, 2) == level_one_step_decomp(2, 2));
    CHECK(graded_character(1, 2) == make({{2, 0, 1}, {1, 1, 1}, {0, 2, 1}, {1, 3, 1}, {0, 4, 1}}));
    CHECK_THROWS_AS(graded_character(1, 3, 2), InvalidLevel);
    for (int m = 1; m <= 3; ++m)
      for (int n = 0; n <= 8; ++n) {
        GradedCharacter c = graded_character(m, n);
        CHECK(c.total_dimension() == dim_demazure(m, n));
        CHECK(graded_character(m, n, std::max(m, n) + 1) == c);
        CHECK(c.graded_dimension().eval_one() == c.total_dimension());
      }
  }

  TEST_CASE("product with D(1,1)") {
    using T = std::vector<SignedTerm>;
    CHECK(char_product_D11(1, 4) == T{{5, 1}});
    CHECK(char_product_D11(2, 1) == T{{2, 1}});
    CHECK(char_product_D11(2, 2) == T{{3, 1}, {2, 1}});
    CHECK(char_product_D11(3, 0) == T{{1, 1}, {0, 1}});
    CHECK(sl2_character(2) == QPoly::parse("q^-2 + 1 + q^2"));
    for (int m = 1; m <= 4; ++m)
      for (int p = 0; p <= 8; ++p) CHECK(check_product_rule(m, p));
  }

  TEST_CASE("graded flag identity") {
    for (int s = 0; s <= 6; ++s) {
      CHECK(check_flag_identity(1, s, 2));
      CHECK(check_flag_identity(1, s, 3));
    }
  }
}
