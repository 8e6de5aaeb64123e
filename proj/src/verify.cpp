#include "demflag/verify.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <string>

#include "demflag/characters.hpp"
#include "demflag/closed_forms.hpp"
#include "demflag/errors.hpp"
#include "demflag/gen_series.hpp"

namespace demflag {

namespace {

int delta(int a, int b) { return a == b ? 1 : 0; }

std::string str(int v) { return std::to_string(v); }

template <class... Ts>
std::string args(Ts... vs) {
  std::string out;
  ((out += (out.empty() ? "" : ",") + str(vs)), ...);
  return "(" + out + ")";
}

std::string series_str(const std::vector<BigInt>& v) {
  std::string out;
  for (auto& c : v) out += (out.empty() ? "" : ",") + c.get_str();
  return out;
}

// Counts cases and keeps the first failure.
struct Recorder {
  CheckResult r;
  explicit Recorder(std::string name) { r.name = std::move(name); }

  template <class F>
  bool expect(bool ok, F describe) {
    ++r.cases;
    if (!ok && r.passed) {
      r.passed = false;
      r.counterexample = describe();
    }
    return ok;
  }
  bool equal(const QPoly& got, const QPoly& want, const std::string& where) {
    return expect(got == want, [&] { return where + ": got " + got.to_string() + ", expected " + want.to_string(); });
  }
};

FlagEngine& recursion_engine() {
  static FlagEngine e(FlagEngine::Options{true, std::nullopt, StepDispatch::recursion_only});
  return e;
}

// The three-branch table of [D(m, mj+k) : D(m+1, n)] for 0 <= n <= m.
QPoly base_value(int m, int j, int k, int n) {
  if (n == k) return QPoly::q_power(j * (m * j + 2 * k));
  if (n == m - k) return QPoly::q_power((j + 1) * (m * j + 2 * k - m));
  return QPoly();
}

// Sum of terms p >= 0 until the lower bound on their lowest exponent reaches order.
// Fails if a computed term violates the bound.
template <class Term>
std::optional<QPoly> bounded_sum(Term term, int offset, int order, std::string& err) {
  QPoly sum;
  for (int p = 0;; ++p) {
    int bound = offset + p * (p - 1) / 2;
    if (bound >= order) break;
    QPoly t = term(p);
    if (!t.is_zero() && t.min_exp() < bound) {
      err = "term " + str(p) + " has exponent " + str(t.min_exp()) + " below the bound " + str(bound);
      return std::nullopt;
    }
    for (auto& [e, c] : t.terms())
      if (e < order) sum += QPoly::monomial(c, e);
  }
  return sum;
}

QPoly truncate(const QPoly& p, int order) {
  QPoly r;
  for (auto& [e, c] : p.terms())
    if (e < order) r += QPoly::monomial(c, e);
  return r;
}

}  // namespace

Bounds Bounds::acceptance() { return Bounds{}; }

Bounds Bounds::scaled(int max) {
  if (max < 1) throw std::invalid_argument("--max must be >= 1");
  Bounds b;
  auto sc = [max](int& v) { v = std::max(1, (v * max + 19) / 20); };
  for (int* v : {&b.base_m, &b.base_j, &b.cf12_total, &b.cf23_total, &b.comp_s, &b.agree_mfrom, &b.agree_extra,
                 &b.agree_s, &b.mock_order, &b.phi_n, &b.phi_x, &b.phi_z, &b.phi_zx, &b.carlitz_s, &b.carlitz_x,
                 &b.carlitz_S_n, &b.fourphi_s, &b.fourphi_j, &b.genser_m, &b.genser_x, &b.closedform_m,
                 &b.closedform_x, &b.a_n, &b.rec_m, &b.rec_n, &b.rec_x, &b.dimsum_s, &b.via_m, &b.via_n, &b.prod_m,
                 &b.prod_p, &b.flag_s, &b.ident_k, &b.ident_x, &b.weight_law})
    sc(*v);
  return b;
}

CheckResult check_base_table(const Bounds& b) {
  Recorder rec("base table");
  FlagEngine& e = recursion_engine();
  for (int m = 1; m <= b.base_m; ++m)
    for (int j = 0; j <= b.base_j; ++j)
      for (int k = 0; k <= m; ++k)
        for (int n = 0; n <= m; ++n) {
          if (m * j + k < n) continue;
          if (!rec.equal(e.mult_step(m, m * j + k, n), base_value(m, j, k, n), "mult_step" + args(m, m * j + k, n)))
            return rec.r;
        }
  return rec.r;
}

CheckResult check_closed_1to2(const Bounds& b) {
  Recorder rec("closed form 1->2");
  FlagEngine& e = FlagEngine::shared();
  for (int t = 0; t <= b.cf12_total; ++t)
    for (int s = 0; s <= t; ++s)
      if (!rec.equal(cf_1to2(s, t - s), e.mult(1, t, 2, s), "cf_1to2" + args(s, t - s))) return rec.r;
  return rec.r;
}

CheckResult check_closed_2to3(const Bounds& b) {
  Recorder rec("closed form 2->3");
  FlagEngine& e = FlagEngine::shared();
  for (int t = 0; t <= b.cf23_total; ++t)
    for (int n = 0; n <= t; ++n)
      if (!rec.equal(cf_2to3(n, t - n), e.mult(2, t, 3, n), "cf_2to3" + args(n, t - n))) return rec.r;
  return rec.r;
}

CheckResult check_composition(const Bounds& b) {
  Recorder rec("composition");
  FlagEngine& e = FlagEngine::shared();
  const int triples[][3] = {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};
  for (auto& tr : triples) {
    const int mf = tr[0], mid = tr[1], mt = tr[2];
    for (int s = 0; s <= b.comp_s; ++s)
      for (int n = 0; n <= s; ++n) {
        QPoly lhs = e.mult_parts(demazure_parts(mf, s), mt, n);
        QPoly rhs;
        for (int t = n; t <= s; ++t) rhs += e.mult(mf, s, mid, t) * e.mult(mid, t, mt, n);
        if (!rec.equal(rhs, lhs, "via level " + str(mid) + " " + args(mf, s, mt, n))) return rec.r;
      }
  }
  return rec.r;
}

CheckResult check_engine_agreement(const Bounds& b) {
  Recorder rec("engine agreement");
  FlagEngine& e = FlagEngine::shared();
  for (int mf = 1; mf <= b.agree_mfrom; ++mf)
    for (int m = mf; m <= mf + b.agree_extra; ++m)
      for (int s = 0; s <= b.agree_s; ++s)
        for (int n = 0; n <= s; ++n)
          if (!rec.equal(e.mult_parts(demazure_parts(mf, s), m, n), e.mult(mf, s, m, n),
                         "partition vs step " + args(mf, s, m, n)))
            return rec.r;
  return rec.r;
}

CheckResult check_mock_theta(const Bounds& b) {
  Recorder rec("mock theta");
  FlagEngine& e = FlagEngine::shared();
  const int order = b.mock_order;
  std::string err;
  auto s0 = bounded_sum([&](int p) { return e.mult(1, p, 3, 0); }, 0, order, err);
  if (!rec.expect(s0.has_value(), [&] { return "phi0 sum: " + err; })) return rec.r;
  if (!rec.equal(*s0, mock_theta(0, order), "sum_p [D(1,p):D(3,0)]")) return rec.r;
  auto s1 = bounded_sum([&](int p) { return e.mult(1, 1 + p, 3, 1).shifted(1); }, 1, order, err);
  if (!rec.expect(s1.has_value(), [&] { return "phi1 sum: " + err; })) return rec.r;
  if (!rec.equal(*s1, mock_theta(1, order), "q sum_p [D(1,1+p):D(3,1)]")) return rec.r;
  // The x^k coefficient of the closed series starts at q^{ceil(k^2/2)}.
  int x_order = 1;
  while ((x_order * x_order + 1) / 2 < order) ++x_order;
  rec.equal(truncate(closed_A0_1to3(x_order).eval_x_one(), order), mock_theta(0, order), "closed A_0 at x = 1");
  return rec.r;
}

CheckResult check_phi12(const Bounds& b) {
  Recorder rec("Phi 1->2 and 1phi1");
  const QPoly q2 = QPoly::q_power(2);
  for (int n = 0; n <= b.phi_n; ++n) {
    XSeriesQ closed = x_pochhammer(QPoly(1), 1, n + 1, q2, b.phi_x).inverse();
    for (int t : {2 * n, 2 * n + 1}) {
      XSeriesQ s = series_A(SeriesSpec{1, 2, t, true, std::nullopt, b.phi_x});
      if (!rec.expect(s == closed, [&] { return "weighted A_" + str(t) + " vs 1/(x;q^2)_" + str(n + 1); }))
        return rec.r;
    }
  }
  auto terms = hypergeom_terms({HyperParam(q2)}, {HyperParam(QPoly(1), 1)}, q2, b.phi_z, b.phi_zx);
  for (int n = 0; n < b.phi_z; ++n) {
    XSeriesQ phi = n == 0 ? XSeriesQ::one(b.phi_zx) : series_A(SeriesSpec{1, 2, 2 * (n - 1), true, std::nullopt, b.phi_zx});
    if (!rec.expect(phi == terms[static_cast<size_t>(n)], [&] {
          return "z^" + str(n) + ": " + phi.to_string() + " vs " + terms[static_cast<size_t>(n)].to_string();
        }))
      return rec.r;
  }
  return rec.r;
}

CheckResult check_carlitz(const Bounds& b) {
  Recorder rec("Carlitz identity");
  for (int n = 0; n <= b.carlitz_S_n; ++n)
    for (int k = 0; k <= 1; ++k) {
      carlitz_S(n, k);  // throws on a recurrence/closed-sum mismatch
      ++rec.r.cases;
    }
  for (int s = 0; s <= b.carlitz_s; ++s)
    for (int r = 0; r <= 5; ++r)
      for (int k = 0; k <= 1; ++k) {
        const int n = 6 * s + r;
        XSeriesQ eng = series_A(SeriesSpec{2, 3, n, true, k, b.carlitz_x});
        XSeriesQ cl = carlitz_closed_A23w(n, k, b.carlitz_x);
        if (!rec.expect(eng == cl, [&] {
              return "n=" + str(n) + " k=" + str(k) + ": engine " + eng.to_string() + ", closed " + cl.to_string();
            }))
          return rec.r;
      }
  return rec.r;
}

CheckResult check_fourphithree(const Bounds& b) {
  Recorder rec("4phi3 display");
  const QPoly q2 = QPoly::q_power(2);
  const int x_order = 2 * b.fourphi_j + 2;
  for (int s = 0; s <= b.fourphi_s; ++s)
    for (int r = 0; r <= 5; ++r) {
      const int s0 = s - delta(r, 1);
      const int rp = delta(r, 1) + delta(r, 4);
      XSeriesQ prod = series_A(SeriesSpec{2, 3, 6 * s + r, true, 0, x_order}) *
                      x_pochhammer(QPoly(1), 2, 2 * s + r / 3 + 1, q2, x_order);
      for (int j = 0; j <= b.fourphi_j; ++j) {
        const std::string at = args(s, r, j);
        if (!rec.equal(fourphithree_term(s, r, j), prod[2 * j], "4phi3 term " + at)) return rec.r;
        if (!rec.equal(q_binomial(s0 + j, 2 * j).sub_qpower(2).shifted(2 * j * (j + rp)), prod[2 * j],
                       "binomial line " + at))
          return rec.r;
        if (!rec.equal(prod[2 * j + 1], QPoly(), "odd coefficient " + at)) return rec.r;
      }
    }
  return rec.r;
}

CheckResult check_rational_1m(const Bounds& b) {
  Recorder rec("rational form 1->m");
  const std::vector<BigInt> fib{1, 1, 2, 3, 5, 8};
  if (!rec.expect(closed_A_1m(3, 0).expand(6) == fib && series_A_q1(1, 3, 0, 6) == fib,
                  [] { return "1/a_4 is not 1,1,2,3,5,8"; }))
    return rec.r;
  for (int m = 2; m <= b.genser_m; ++m)
    for (int n = 0; n <= 3 * m; ++n) {
      auto cl = closed_A_1m(m, n).expand(b.genser_x);
      auto eng = series_A_q1(1, m, n, b.genser_x);
      if (!rec.expect(cl == eng, [&] {
            return "m=" + str(m) + " n=" + str(n) + ": closed " + series_str(cl) + ", engine " + series_str(eng);
          }))
        return rec.r;
    }
  return rec.r;
}

CheckResult check_closedform(const Bounds& b) {
  Recorder rec("rational form m->m+1");
  for (int m = 1; m <= b.closedform_m; ++m)
    for (int n = 0; n <= 4 * (m + 1); ++n) {
      auto cl = closed_A_m_m1(m, n).expand(b.closedform_x);
      auto eng = series_A_q1(m, m + 1, n, b.closedform_x);
      if (!rec.expect(cl == eng, [&] {
            return "m=" + str(m) + " n=" + str(n) + ": d_n=" + d_poly(m, n).to_string() + ", closed " +
                   series_str(cl) + ", engine " + series_str(eng);
          }))
        return rec.r;
    }
  return rec.r;
}

CheckResult check_a_identities(const Bounds& b) {
  Recorder rec("a_n identities");
  const XPoly x = XPoly::x_power(1), x2 = XPoly::x_power(2);
  for (int n = 0; n <= b.a_n; ++n) {
    if (!rec.expect(chebyshev_to_a(n) == a_poly(n), [&] { return "Chebyshev form at n=" + str(n); })) return rec.r;
    if (n % 2 == 0 && n >= 4 &&
        !rec.expect(a_poly(n) == a_poly(n - 1) - x2 * a_poly(n - 3), [&] { return "a_2n recurrence at " + str(n); }))
      return rec.r;
    if (n >= 4 && !rec.expect(a_poly(n) == (XPoly(1) - x) * a_poly(n - 2) - x2 * a_poly(n - 4),
                              [&] { return "a_n = (1-x)a_{n-2} - x^2 a_{n-4} at " + str(n); }))
      return rec.r;
  }
  return rec.r;
}

CheckResult check_recurrences(const Bounds& b) {
  Recorder rec("series recurrences");
  for (int m = 2; m <= b.rec_m; ++m)
    for (int n = -1; n <= b.rec_n; ++n)
      if (!rec.expect(check_genserrec(m, n, b.rec_x), [&] { return "1->m recurrence " + args(m, n); })) return rec.r;
  for (int m = 1; m <= b.rec_m; ++m)
    for (int n = 0; n <= b.rec_n; ++n)
      if (!rec.expect(check_elltheorem(m, n, b.rec_x), [&] { return "m->m+1 recurrence " + args(m, n); })) return rec.r;
  return rec.r;
}

CheckResult check_characters(const Bounds& b) {
  Recorder rec("characters");
  FlagEngine& e = FlagEngine::shared();
  for (int mf = 1; mf <= 3; ++mf)
    for (int m = mf; m <= mf + 3; ++m)
      for (int s = 0; s <= b.dimsum_s; ++s) {
        BigInt sum = 0;
        for (int n = 0; n <= s; ++n) sum += e.mult(mf, s, m, n).eval_one() * dim_demazure(m, n);
        BigInt want = dim_demazure(mf, s);
        if (!rec.expect(sum == want, [&] {
              return "dimension sum " + args(mf, s, m) + ": " + sum.get_str() + " vs " + want.get_str();
            }))
          return rec.r;
      }
  for (int m = 1; m <= b.via_m; ++m)
    for (int n = 0; n <= b.via_n; ++n) {
      const int lo = std::max(m, n);
      GradedCharacter base = graded_character(m, n, lo);
      for (int l = lo + 1; l <= lo + 2; ++l)
        if (!rec.expect(graded_character(m, n, l) == base, [&] { return "via-level " + args(m, n, l); })) return rec.r;
      if (!rec.expect(base.total_dimension() == dim_demazure(m, n), [&] { return "total dimension " + args(m, n); }))
        return rec.r;
    }
  for (int m = 1; m <= b.prod_m; ++m)
    for (int p = 0; p <= b.prod_p; ++p)
      if (!rec.expect(check_product_rule(m, p), [&] { return "product with D(1,1) " + args(m, p); })) return rec.r;
  for (int m = 2; m <= 3; ++m)
    for (int s = 0; s <= b.flag_s; ++s)
      if (!rec.expect(check_flag_identity(1, s, m), [&] { return "graded flag identity " + args(1, s, m); }))
        return rec.r;
  return rec.r;
}

CheckResult check_positivity(const Bounds& b) {
  Recorder rec("positivity and triangularity");
  FlagEngine& e = FlagEngine::shared();
  FlagEngine& re = recursion_engine();
  auto pos = [&](const QPoly& p, const std::string& where) {
    return rec.expect(p.in_nq(), [&] { return where + " = " + p.to_string() + " is not in N[q]"; });
  };
  for (int m = 1; m <= b.base_m; ++m)
    for (int s = 0; s <= m * b.base_j + m; ++s)
      for (int n = 0; n <= std::min(s, m); ++n)
        if (!pos(re.mult_step(m, s, n), "mult_step" + args(m, s, n))) return rec.r;
  for (int t = 0; t <= b.cf12_total; ++t)
    for (int s = 0; s <= t; ++s)
      if (!pos(e.mult(1, t, 2, s), "mult" + args(1, t, 2, s))) return rec.r;
  for (int t = 0; t <= b.cf23_total; ++t)
    for (int n = 0; n <= t; ++n)
      if (!pos(e.mult(2, t, 3, n), "mult" + args(2, t, 3, n))) return rec.r;
  const int s_max = std::max(b.comp_s, b.agree_s);
  for (int mf = 1; mf <= std::max(3, b.agree_mfrom); ++mf)
    for (int m = mf; m <= mf + std::max(3 - mf + 1, b.agree_extra); ++m)
      for (int s = 0; s <= s_max; ++s) {
        for (int n = 0; n <= s; ++n) {
          if (!pos(e.mult(mf, s, m, n), "mult" + args(mf, s, m, n))) return rec.r;
          if (!pos(e.mult_parts(demazure_parts(mf, s), m, n), "partition" + args(mf, s, m, n))) return rec.r;
        }
        if (!rec.equal(e.mult(mf, s, m, s), QPoly(1), "diagonal" + args(mf, s, m, s))) return rec.r;
        if (!rec.equal(re.mult(mf, s, m, s), QPoly(1), "diagonal (recursion)" + args(mf, s, m, s))) return rec.r;
        for (int n = s + 1; n <= s + 3; ++n) {
          if (!rec.equal(e.mult(mf, s, m, n), QPoly(), "above diagonal" + args(mf, s, m, n))) return rec.r;
          if (!rec.equal(e.mult_parts(demazure_parts(mf, s), m, n), QPoly(), "above diagonal (partition)" +
                                                                               args(mf, s, m, n)))
            return rec.r;
        }
      }
  return rec.r;
}

CheckResult check_gen_binomial(const Bounds& b) {
  Recorder rec("generating binomial identity");
  for (int k = 0; k <= b.ident_k; ++k)
    for (int e = 1; e <= 2; ++e) {
      QPoly base = QPoly::q_power(e);
      if (!rec.expect(gen_binomial_series(k, base, b.ident_x) == gen_binomial_closed(k, base, b.ident_x),
                      [&] { return "k=" + str(k) + " base q^" + str(e); }))
        return rec.r;
    }
  return rec.r;
}

CheckResult check_weight_law(const Bounds& b) {
  Recorder rec("weighted exponent law");
  FlagEngine& e = FlagEngine::shared();
  for (int t = 0; t <= b.weight_law; ++t)
    for (int s = 0; s <= t; ++s) {
      auto [shift, w] = e.weighted_mult(1, t, 2, s);
      if (w.is_zero()) continue;
      if (!rec.expect(shift == cf_1to2_shift(s, t - s), [&] { return "1->2 shift at " + args(s, t - s); }))
        return rec.r;
    }
  for (int t = 0; t <= b.weight_law; ++t)
    for (int n = 0; n <= t; ++n) {
      auto [shift, w] = e.weighted_mult(2, t, 3, n);
      if (w.is_zero()) continue;
      if (!rec.expect(shift == cf_2to3_shift(n, t - n), [&] { return "2->3 shift at " + args(n, t - n); }))
        return rec.r;
    }
  return rec.r;
}

CheckResult run_check(const NamedCheck& c, const Bounds& b) {
  auto start = std::chrono::steady_clock::now();
  CheckResult r;
  try {
    r = c.run(b);
  } catch (const std::exception& ex) {
    r.passed = false;
    r.counterexample = std::string("exception: ") + ex.what();
  }
  r.name = c.name;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<NamedCheck> acceptance_criteria() {
  return {
      {"1 base table", check_base_table},
      {"2 closed form 1->2", check_closed_1to2},
      {"3 closed form 2->3", check_closed_2to3},
      {"4 composition", check_composition},
      {"5 engine agreement", check_engine_agreement},
      {"6 mock theta", check_mock_theta},
      {"7 Phi 1->2 and 1phi1", check_phi12},
      {"8 Carlitz identity", check_carlitz},
      {"9 4phi3 display", check_fourphithree},
      {"10 rational form 1->m", check_rational_1m},
      {"11 rational form m->m+1", check_closedform},
      {"12 a_n identities", check_a_identities},
      {"13 series recurrences", check_recurrences},
      {"14 characters", check_characters},
      {"15 positivity and triangularity", check_positivity},
  };
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all", "base", "composition", "closedforms", "series", "characters"};
  return names;
}

std::vector<NamedCheck> suite_checks(const std::string& suite) {
  const std::vector<NamedCheck> base{{"base table", check_base_table},
                                     {"positivity and triangularity", check_positivity}};
  const std::vector<NamedCheck> composition{{"composition", check_composition},
                                            {"engine agreement", check_engine_agreement}};
  const std::vector<NamedCheck> closed{{"closed form 1->2", check_closed_1to2},
                                       {"closed form 2->3", check_closed_2to3},
                                       {"mock theta", check_mock_theta},
                                       {"Phi 1->2 and 1phi1", check_phi12},
                                       {"Carlitz identity", check_carlitz},
                                       {"4phi3 display", check_fourphithree},
                                       {"generating binomial identity", check_gen_binomial}};
  const std::vector<NamedCheck> series{{"rational form 1->m", check_rational_1m},
                                       {"rational form m->m+1", check_closedform},
                                       {"a_n identities", check_a_identities},
                                       {"series recurrences", check_recurrences},
                                       {"weighted exponent law", check_weight_law}};
  const std::vector<NamedCheck> chars{{"characters", check_characters}};
  if (suite == "base") return base;
  if (suite == "composition") return composition;
  if (suite == "closedforms") return closed;
  if (suite == "series") return series;
  if (suite == "characters") return chars;
  if (suite == "all") {
    std::vector<NamedCheck> all;
    for (auto* part : {&base, &composition, &closed, &series, &chars}) all.insert(all.end(), part->begin(), part->end());
    return all;
  }
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace demflag
