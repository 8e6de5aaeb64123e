#include "demflag/characters.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "demflag/errors.hpp"

namespace demflag {

namespace {

int pos(int v) { return v > 0 ? v : 0; }

int delta(int a, int b) { return a == b ? 1 : 0; }

}  // namespace

void GradedCharacter::add(int j, int p, const BigInt& mult) {
  if (j < 0) throw std::invalid_argument("GradedCharacter: negative highest weight");
  if (mult == 0) return;
  auto key = std::make_pair(j, p);
  BigInt& slot = entries_[key];
  slot += mult;
  if (slot == 0) entries_.erase(key);
}

GradedCharacter& GradedCharacter::operator+=(const GradedCharacter& o) {
  for (auto& [k, c] : o.entries_) add(k.first, k.second, c);
  return *this;
}

GradedCharacter GradedCharacter::shifted(int p) const {
  GradedCharacter r;
  for (auto& [k, c] : entries_) r.add(k.first, k.second + p, c);
  return r;
}

GradedCharacter GradedCharacter::times(const QPoly& grades) const {
  GradedCharacter r;
  for (auto& [e, g] : grades.terms())
    for (auto& [k, c] : entries_) r.add(k.first, k.second + e, g * c);
  return r;
}

BigInt GradedCharacter::total_dimension() const {
  BigInt d = 0;
  for (auto& [k, c] : entries_) d += c * (k.first + 1);
  return d;
}

QPoly GradedCharacter::graded_dimension() const {
  QPoly r;
  for (auto& [k, c] : entries_) r += QPoly::monomial(BigInt(c * (k.first + 1)), k.second);
  return r;
}

QPoly GradedCharacter::ungraded() const {
  QPoly r;
  for (auto& [k, c] : entries_) r += sl2_character(k.first) * QPoly(c);
  return r;
}

std::string GradedCharacter::to_string() const {
  if (entries_.empty()) return "0";
  std::vector<std::pair<std::pair<int, int>, BigInt>> by_grade(entries_.begin(), entries_.end());
  std::stable_sort(by_grade.begin(), by_grade.end(), [](const auto& a, const auto& b) {
    return a.first.second != b.first.second ? a.first.second < b.first.second : a.first.first > b.first.first;
  });
  std::string out;
  for (auto& [k, c] : by_grade) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += c.get_str() + "*";
    out += "V(" + std::to_string(k.first) + ")@" + std::to_string(k.second);
  }
  return out;
}

GradedCharacter level_one_step_decomp(int xi0, int xi1) {
  if (xi0 < 1) throw InvalidLevel("level_one_step_decomp: xi0 must be >= 1");
  if (xi1 < 0 || xi1 > xi0) throw InvalidShape("level_one_step_decomp: need 0 <= xi1 <= xi0");
  GradedCharacter ch;
  for (int i = 0; i <= pos(2 * xi1 - xi0); ++i) ch.add(xi1 - i, i);
  return ch;
}

BigInt dim_demazure(int m, int n) {
  if (m < 1) throw InvalidLevel("dim_demazure: level must be >= 1");
  if (n < 0) throw std::invalid_argument("dim_demazure: n must be >= 0");
  if (n == 0) return 1;
  const int n0 = (n - 1) % m + 1;
  const int n1 = (n - n0) / m;
  BigInt full = (m + 1) * (m + 2) / 2;
  BigInt base;
  mpz_pow_ui(base.get_mpz_t(), full.get_mpz_t(), static_cast<unsigned long>(n1));
  // (2n0-m)_+ (m+1) is even whenever it is nonzero.
  return base * ((n0 + 1) + pos(2 * n0 - m) * (m + 1) / 2);
}

GradedCharacter graded_character(int m, int n, int via_level, FlagEngine& engine) {
  if (m < 1) throw InvalidLevel("graded_character: level must be >= 1");
  if (n < 0) throw std::invalid_argument("graded_character: n must be >= 0");
  if (via_level < std::max(m, n))
    throw InvalidLevel("graded_character: via_level " + std::to_string(via_level) + " below max(m, n) = " +
                       std::to_string(std::max(m, n)));
  GradedCharacter ch;
  for (int t = 0; t <= n; ++t) {
    QPoly g = engine.mult(m, n, via_level, t);
    if (g.is_zero()) continue;
    ch += level_one_step_decomp(via_level, t).times(g);
  }
  return ch;
}

GradedCharacter graded_character(int m, int n, FlagEngine& engine) {
  return graded_character(m, n, std::max(m, n), engine);
}

QPoly sl2_character(int j) {
  if (j < 0) throw std::invalid_argument("sl2_character: j must be >= 0");
  QPoly r;
  for (int w = -j; w <= j; w += 2) r += QPoly::q_power(w);
  return r;
}

std::vector<SignedTerm> char_product_D11(int m, int p) {
  if (m < 1) throw InvalidLevel("char_product_D11: level must be >= 1");
  if (p < 0) throw std::invalid_argument("char_product_D11: p must be >= 0");
  std::vector<SignedTerm> out{{p + 1, 1}};
  if (m == 1) return out;
  // p = m p1 + p0 with p1 >= -1, 0 < p0 <= m; p = 0 gives p0 = m.
  const int p0 = p == 0 ? m : (p - 1) % m + 1;
  const int below = 1 - delta(2 * p0, m) - delta(2 * p0, m + 1) - delta(p0, m);
  const int same = 1 - delta(2 * p0, m) - delta(2 * p0, m - 1);
  if (below != 0) {
    if (p == 0) throw InternalError("char_product_D11: D(m,-1) with nonzero coefficient");
    out.push_back({p - 1, below});
  }
  if (same != 0) out.push_back({p, same});
  return out;
}

bool check_product_rule(int m, int p, FlagEngine& engine) {
  QPoly lhs = graded_character(m, p, engine).ungraded() * graded_character(1, 1, engine).ungraded();
  QPoly rhs;
  for (auto& t : char_product_D11(m, p)) rhs += graded_character(m, t.n, engine).ungraded() * QPoly(t.coeff);
  return lhs == rhs;
}

bool check_flag_identity(int m_from, int s, int m_to, FlagEngine& engine) {
  if (m_to < m_from) throw InvalidLevel("check_flag_identity: target level below source level");
  GradedCharacter lhs = graded_character(m_from, s, std::max(m_from, s) + 2, engine);
  GradedCharacter rhs;
  for (int n = 0; n <= s; ++n) {
    QPoly g = engine.mult(m_from, s, m_to, n);
    if (g.is_zero()) continue;
    rhs += graded_character(m_to, n, engine).times(g);
  }
  return lhs == rhs;
}

}  // namespace demflag
