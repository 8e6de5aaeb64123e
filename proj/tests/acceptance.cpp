// Acceptance suite: one PASS/FAIL line per criterion.

#include <cstdio>

#include "demflag/verify.hpp"

using namespace demflag;

namespace {

Bounds pinned() {
  Bounds b;
  b.base_m = 6;
  b.base_j = 6;
  b.cf12_total = 40;
  b.cf23_total = 40;
  b.comp_s = 16;
  b.agree_mfrom = 3;
  b.agree_extra = 2;
  b.agree_s = 18;
  b.mock_order = 40;
  b.phi_n = 8;
  b.phi_x = 20;
  b.phi_z = 8;
  b.phi_zx = 12;
  b.carlitz_s = 3;
  b.carlitz_x = 16;
  b.carlitz_S_n = 24;
  b.fourphi_s = 2;
  b.fourphi_j = 6;
  b.genser_m = 5;
  b.genser_x = 20;
  b.closedform_m = 5;
  b.closedform_x = 20;
  b.a_n = 20;
  b.rec_m = 5;
  b.rec_n = 20;
  b.rec_x = 20;
  b.dimsum_s = 20;
  b.via_m = 3;
  b.via_n = 10;
  b.prod_m = 5;
  b.prod_p = 12;
  b.flag_s = 10;
  return b;
}

}  // namespace

int main() {
  const Bounds b = pinned();
  int failed = 0;
  for (auto& c : acceptance_criteria()) {
    CheckResult r = run_check(c, b);
    if (!r.passed) ++failed;
    std::printf("%s  %-34s %7zu cases  %6.2fs%s%s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.cases, r.seconds,
                r.passed ? "" : "  first counterexample: ", r.counterexample.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(acceptance_criteria().size()) - failed,
              acceptance_criteria().size());
  return failed == 0 ? 0 : 1;
}
