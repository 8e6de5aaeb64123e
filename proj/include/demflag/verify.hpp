#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "demflag/flag_engine.hpp"

namespace demflag {

/// Every size bound used by the identity checks.
struct Bounds {
  int base_m = 6, base_j = 6;
  int cf12_total = 40, cf23_total = 40;
  int comp_s = 16;
  int agree_mfrom = 3, agree_extra = 2, agree_s = 18;
  int mock_order = 40;
  int phi_n = 8, phi_x = 20, phi_z = 8, phi_zx = 12;
  int carlitz_s = 3, carlitz_x = 16, carlitz_S_n = 24;
  int fourphi_s = 2, fourphi_j = 6;
  int genser_m = 5, genser_x = 20;
  int closedform_m = 5, closedform_x = 20;
  int a_n = 20;
  int rec_m = 5, rec_n = 20, rec_x = 20;
  int dimsum_s = 20, via_m = 3, via_n = 10, prod_m = 5, prod_p = 12, flag_s = 10;
  int ident_k = 8, ident_x = 24;
  int weight_law = 30;

  /// The bounds pinned by the acceptance criteria.
  static Bounds acceptance();
  /// Every bound multiplied by max/20 (at least 1); max = 20 gives acceptance().
  static Bounds scaled(int max);
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string counterexample;  // first failure, empty on success
  double seconds = 0;
};

using Check = std::function<CheckResult(const Bounds&)>;

struct NamedCheck {
  std::string name;
  Check run;
};

/// The fifteen acceptance criteria, in order.
std::vector<NamedCheck> acceptance_criteria();

/// Suite names accepted by suite_checks.
const std::vector<std::string>& suite_names();

/// Checks making up a suite: all, base, composition, closedforms, series, characters.
/// Throws std::invalid_argument for an unknown name.
std::vector<NamedCheck> suite_checks(const std::string& suite);

/// Runs one check, timing it and turning library exceptions into failures.
CheckResult run_check(const NamedCheck& c, const Bounds& b);

CheckResult check_base_table(const Bounds& b);
CheckResult check_closed_1to2(const Bounds& b);
CheckResult check_closed_2to3(const Bounds& b);
CheckResult check_composition(const Bounds& b);
CheckResult check_engine_agreement(const Bounds& b);
CheckResult check_mock_theta(const Bounds& b);
CheckResult check_phi12(const Bounds& b);
CheckResult check_carlitz(const Bounds& b);
CheckResult check_fourphithree(const Bounds& b);
CheckResult check_rational_1m(const Bounds& b);
CheckResult check_closedform(const Bounds& b);
CheckResult check_a_identities(const Bounds& b);
CheckResult check_recurrences(const Bounds& b);
CheckResult check_characters(const Bounds& b);
CheckResult check_positivity(const Bounds& b);
CheckResult check_gen_binomial(const Bounds& b);
CheckResult check_weight_law(const Bounds& b);

}  // namespace demflag
