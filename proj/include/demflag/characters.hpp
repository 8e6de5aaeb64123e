#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "demflag/flag_engine.hpp"
#include "demflag/qpoly.hpp"

namespace demflag {

/// Graded sl2-character: (highest weight j, grade p) -> multiplicity of V(j) at grade p.
class GradedCharacter {
 public:
  void add(int j, int p, const BigInt& mult = 1);
  GradedCharacter& operator+=(const GradedCharacter& o);
  /// Every component moved p grades deeper.
  GradedCharacter shifted(int p) const;
  /// Coefficient-wise product with a polynomial in q whose exponents are grades.
  GradedCharacter times(const QPoly& grades) const;

  BigInt total_dimension() const;
  /// Sum of (j+1) * mult * q^p.
  QPoly graded_dimension() const;
  /// Forget the grading: sum of mult * (z^j + z^{j-2} + ... + z^{-j}), with z stored as q.
  QPoly ungraded() const;

  const std::map<std::pair<int, int>, BigInt>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  bool operator==(const GradedCharacter& o) const { return entries_ == o.entries_; }
  /// "V(2)@0 + V(1)@1 + 2*V(0)@3", by grade then descending weight.
  std::string to_string() const;

 private:
  std::map<std::pair<int, int>, BigInt> entries_;
};

/// D(xi0, xi1) for 0 <= xi1 <= xi0: V(xi1 - i) at grade i for i = 0..(2 xi1 - xi0)_+.
GradedCharacter level_one_step_decomp(int xi0, int xi1);

/// dim D(m, n) = C(m+2,2)^{n1} ((n0+1) + (2n0-m)_+ (m+1)/2), n = m n1 + n0, 0 < n0 <= m.
BigInt dim_demazure(int m, int n);

/// ch_gr D(m, n) assembled from the flag of D(m, n) in level via_level.
GradedCharacter graded_character(int m, int n, int via_level, FlagEngine& engine = FlagEngine::shared());

/// ch_gr D(m, n) through the smallest admissible level max(m, n).
GradedCharacter graded_character(int m, int n, FlagEngine& engine = FlagEngine::shared());

/// Character of V(j) as a Laurent polynomial in z (stored as q).
QPoly sl2_character(int j);

struct SignedTerm {
  int n = 0;      ///< D(m, n)
  int coeff = 0;  ///< signed multiplicity
  bool operator==(const SignedTerm& o) const { return n == o.n && coeff == o.coeff; }
};

/// Right-hand side of ch D(m,p) ch D(1,1) as a combination of ch D(m, .). Zero terms are dropped.
std::vector<SignedTerm> char_product_D11(int m, int p);

/// ch D(m,p) * ch D(1,1) against char_product_D11 on ungraded characters.
bool check_product_rule(int m, int p, FlagEngine& engine = FlagEngine::shared());

/// ch_gr D(m_from, s) against sum_{n,p} [coeff of q^p in mult] * ch_gr D(m_to, n) shifted by p.
bool check_flag_identity(int m_from, int s, int m_to, FlagEngine& engine = FlagEngine::shared());

}  // namespace demflag
