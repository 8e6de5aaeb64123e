// demflag: graded Demazure flag multiplicities from the command line.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "demflag/characters.hpp"
#include "demflag/closed_forms.hpp"
#include "demflag/errors.hpp"
#include "demflag/flag_engine.hpp"
#include "demflag/gen_series.hpp"
#include "demflag/verify.hpp"
#include "json.hpp"

using json = nlohmann::ordered_json;
using namespace demflag;

namespace {

struct Output {
  json record;
  std::string text;
  std::string csv;
};

json terms_json(const QPoly& p) {
  json out = json::array();
  for (auto& [e, c] : p.terms()) out.push_back({{"q_exp", e}, {"coeff", c.get_str()}});
  return out;
}

json terms_json(const XSeriesQ& s) {
  json out = json::array();
  for (int k = 0; k < s.order(); ++k)
    for (auto& [e, c] : s[k].terms()) out.push_back({{"x_exp", k}, {"q_exp", e}, {"coeff", c.get_str()}});
  return out;
}

json terms_json(const std::vector<BigInt>& v) {
  json out = json::array();
  for (size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0) out.push_back({{"x_exp", k}, {"q_exp", 0}, {"coeff", v[k].get_str()}});
  return out;
}

json terms_json(const XPoly& p) { return terms_json(p.coeffs()); }

std::string poly_csv(const QPoly& p) {
  std::string out = "q_exp,coeff\n";
  for (auto& [e, c] : p.terms()) out += std::to_string(e) + "," + c.get_str() + "\n";
  return out;
}

std::string series_csv(const XSeriesQ& s) {
  std::string out = "x_exp,q_exp,coeff\n";
  for (int k = 0; k < s.order(); ++k)
    for (auto& [e, c] : s[k].terms()) out += std::to_string(k) + "," + std::to_string(e) + "," + c.get_str() + "\n";
  return out;
}

std::string ints_csv(const std::vector<BigInt>& v) {
  std::string out = "x_exp,coeff\n";
  for (size_t k = 0; k < v.size(); ++k) out += std::to_string(k) + "," + v[k].get_str() + "\n";
  return out;
}

std::string ints_line(const std::vector<BigInt>& v) {
  std::string out;
  for (auto& c : v) out += (out.empty() ? "" : ",") + c.get_str();
  return out;
}

std::string series_lines(const XSeriesQ& s) {
  std::string out;
  for (int k = 0; k < s.order(); ++k) out += "x^" + std::to_string(k) + ": " + s[k].to_string() + "\n";
  return out;
}

json engine_meta(const std::string& name, std::chrono::steady_clock::time_point start) {
  EngineStats st = FlagEngine::shared().stats();
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return {{"engine", name}, {"memo_hits", st.hits}, {"memo_misses", st.misses}, {"memo_entries", st.entries},
          {"elapsed_ms", ms}};
}

struct MultArgs {
  int from = 1, weight = 0, to = 1, target = 0;
  bool weighted = false;
  std::string engine = "step";
};

Output run_mult(const MultArgs& a) {
  auto start = std::chrono::steady_clock::now();
  FlagEngine& e = FlagEngine::shared();
  Output o;
  o.record["query"] = {{"command", "mult"}, {"from_level", a.from}, {"weight", a.weight},   {"to_level", a.to},
                       {"target", a.target}, {"weighted", a.weighted}, {"engine", a.engine}};
  auto compute = [&](bool partition) {
    if (!partition) return e.mult(a.from, a.weight, a.to, a.target);
    if (a.to < a.from) throw InvalidLevel("mult: target level below source level");
    return e.mult_parts(demazure_parts(a.from, a.weight), a.to, a.target);
  };
  auto present = [&](const QPoly& v) {
    json r;
    if (a.weighted) {
      auto [shift, w] = v.weight_split();
      r = {{"display", w.to_string()}, {"terms", terms_json(w)}, {"shift", shift}};
    } else {
      r = {{"display", v.to_string()}, {"terms", terms_json(v)}};
    }
    return r;
  };
  auto text_of = [&](const json& r) {
    std::string t = r["display"].get<std::string>();
    if (a.weighted) t += "  (shift " + std::to_string(r["shift"].get<int>()) + ")";
    return t;
  };
  if (a.engine == "both") {
    QPoly s = compute(false), p = compute(true);
    json rs = present(s), rp = present(p);
    o.record["result"] = rs;
    o.record["result"]["partition"] = rp;
    o.record["result"]["match"] = s == p;
    o.text = "step: " + text_of(rs) + "\npartition: " + text_of(rp) + "\nmatch: " + (s == p ? "true" : "false") + "\n";
    o.csv = poly_csv(a.weighted ? s.weight_split().second : s);
  } else {
    QPoly v = compute(a.engine == "partition");
    json r = present(v);
    o.record["result"] = r;
    o.text = text_of(r) + "\n";
    o.csv = poly_csv(a.weighted ? v.weight_split().second : v);
  }
  o.record["metadata"] = engine_meta(a.engine, start);
  return o;
}

struct SeriesArgs {
  int from = 1, to = 2, target = 0, x_order = 10;
  bool weighted = false, q1 = false;
  std::optional<int> parity;
};

Output run_series(const SeriesArgs& a) {
  auto start = std::chrono::steady_clock::now();
  SeriesSpec spec{a.from, a.to, a.target, a.weighted, a.parity, a.x_order};
  XSeriesQ s = series_A(spec);
  Output o;
  o.record["query"] = {{"command", "series"}, {"from_level", a.from}, {"to_level", a.to}, {"target", a.target},
                       {"x_order", a.x_order}, {"weighted", a.weighted}, {"q1", a.q1}};
  o.record["query"]["parity"] = a.parity ? json(*a.parity) : json(nullptr);
  if (a.q1) {
    std::vector<BigInt> v = s.eval_q_one();
    o.record["result"] = {{"display", ints_line(v)}, {"terms", terms_json(v)}};
    o.text = ints_line(v) + "\n";
    o.csv = ints_csv(v);
  } else {
    json coeffs = json::array();
    for (int k = 0; k < s.order(); ++k) coeffs.push_back(s[k].to_string());
    o.record["result"] = {{"display", s.to_string()}, {"terms", terms_json(s)}, {"coefficients", coeffs}};
    o.text = series_lines(s);
    o.csv = series_csv(s);
  }
  o.record["metadata"] = engine_meta("step", start);
  return o;
}

Output run_table(int from, int to, int s_max) {
  auto start = std::chrono::steady_clock::now();
  MultiplicityTable t = FlagEngine::shared().mult_table(from, to, s_max);
  Output o;
  o.record["query"] = {{"command", "table"}, {"from_level", from}, {"to_level", to}, {"s_max", s_max}};
  json rows = json::array();
  o.csv = "s,n,multiplicity\n";
  for (auto& [key, v] : t.entries) {
    if (v.is_zero()) continue;
    rows.push_back({{"s", key.first}, {"n", key.second}, {"display", v.to_string()}, {"terms", terms_json(v)}});
    o.csv += std::to_string(key.first) + "," + std::to_string(key.second) + "," + v.to_string() + "\n";
    o.text += std::to_string(key.first) + " " + std::to_string(key.second) + " " + v.to_string() + "\n";
  }
  o.record["result"] = {{"display", std::to_string(rows.size()) + " nonzero entries"}, {"terms", json::array()},
                        {"entries", rows}};
  o.record["metadata"] = engine_meta("step", start);
  return o;
}

Output run_char(int level, int weight, std::optional<int> via) {
  auto start = std::chrono::steady_clock::now();
  GradedCharacter ch = via ? graded_character(level, weight, *via) : graded_character(level, weight);
  Output o;
  o.record["query"] = {{"command", "char"}, {"level", level}, {"weight", weight}};
  o.record["query"]["via_level"] = via ? json(*via) : json(nullptr);
  std::vector<std::tuple<int, int, BigInt>> triples;
  for (auto& [k, c] : ch.entries()) triples.emplace_back(k.first, k.second, c);
  std::sort(triples.begin(), triples.end(), [](const auto& x, const auto& y) {
    return std::get<1>(x) != std::get<1>(y) ? std::get<1>(x) < std::get<1>(y) : std::get<0>(x) > std::get<0>(y);
  });
  json comps = json::array();
  std::string line;
  o.csv = "j,p,mult\n";
  for (auto& [j, p, c] : triples) {
    comps.push_back({{"j", j}, {"p", p}, {"mult", c.get_str()}});
    line += (line.empty() ? "" : " ") + ("(" + std::to_string(j) + "," + std::to_string(p) + "," + c.get_str() + ")");
    o.csv += std::to_string(j) + "," + std::to_string(p) + "," + c.get_str() + "\n";
  }
  QPoly gdim = ch.graded_dimension();
  o.record["result"] = {{"display", gdim.to_string()},
                        {"terms", terms_json(gdim)},
                        {"components", comps},
                        {"total_dimension", ch.total_dimension().get_str()}};
  o.text = line + "\n";
  o.record["metadata"] = engine_meta("step", start);
  return o;
}

Output run_dim(int level, int weight) {
  BigInt d = dim_demazure(level, weight);
  Output o;
  o.record["query"] = {{"command", "dim"}, {"level", level}, {"weight", weight}};
  o.record["result"] = {{"display", d.get_str()}, {"terms", json::array({{{"q_exp", 0}, {"coeff", d.get_str()}}})}};
  o.text = d.get_str() + "\n";
  o.csv = "m,n,dimension\n" + std::to_string(level) + "," + std::to_string(weight) + "," + d.get_str() + "\n";
  return o;
}

struct ClosedArgs {
  std::string which;
  int s = 0, n = 0, p = 0, k = 0, m = 2, index = 0, q_order = 20, x_order = 10;
  bool uncorrected = false;
};

Output poly_output(const QPoly& v) {
  Output o;
  o.record["result"] = {{"display", v.to_string()}, {"terms", terms_json(v)}};
  o.text = v.to_string() + "\n";
  o.csv = poly_csv(v);
  return o;
}

Output series_output(const XSeriesQ& s) {
  Output o;
  o.record["result"] = {{"display", s.to_string()}, {"terms", terms_json(s)}};
  o.text = series_lines(s);
  o.csv = series_csv(s);
  return o;
}

Output ratfun_output(const RatFunX& r, int x_order) {
  std::vector<BigInt> v = r.expand(x_order);
  Output o;
  o.record["result"] = {{"display", r.to_string()},
                        {"terms", terms_json(v)},
                        {"numerator", r.num().to_string()},
                        {"denominator", r.den().to_string()}};
  o.text = r.to_string() + "\n" + ints_line(v) + "\n";
  o.csv = ints_csv(v);
  return o;
}

Output run_closed(const ClosedArgs& a) {
  Output o;
  json q = {{"command", "closed"}, {"which", a.which}};
  if (a.which == "1to2") {
    o = poly_output(cf_1to2(a.s, a.p));
    q.update({{"s", a.s}, {"p", a.p}});
  } else if (a.which == "2to3") {
    o = poly_output(cf_2to3(a.n, a.p));
    q.update({{"n", a.n}, {"p", a.p}});
  } else if (a.which == "carlitz") {
    o = series_output(a.uncorrected ? carlitz_closed_A23w_uncorrected(a.n, a.k, a.x_order)
                                   : carlitz_closed_A23w(a.n, a.k, a.x_order));
    q.update({{"n", a.n}, {"k", a.k}, {"x_order", a.x_order}, {"uncorrected", a.uncorrected}});
  } else if (a.which == "mocktheta") {
    o = poly_output(mock_theta(a.index, a.q_order));
    q.update({{"index", a.index}, {"q_order", a.q_order}});
  } else if (a.which == "phi12") {
    if (a.index < 0) throw std::invalid_argument("phi12: index must be >= 0");
    o = series_output(a.index == 0 ? XSeriesQ::one(a.x_order)
                                   : x_pochhammer(QPoly(1), 1, a.index, QPoly::q_power(2), a.x_order).inverse());
    q.update({{"index", a.index}, {"x_order", a.x_order}});
  } else if (a.which == "thmgenser1") {
    o = ratfun_output(closed_A_1m(a.m, a.n), a.x_order);
    q.update({{"m", a.m}, {"n", a.n}, {"x_order", a.x_order}});
  } else if (a.which == "dpoly") {
    XPoly d = d_poly(a.m, a.n);
    o.record["result"] = {{"display", d.to_string()}, {"terms", terms_json(d)}};
    o.text = d.to_string() + "\n";
    o.csv = ints_csv(d.coeffs());
    q.update({{"m", a.m}, {"n", a.n}});
  } else {
    o = ratfun_output(closed_A_m_m1(a.m, a.n), a.x_order);
    q.update({{"m", a.m}, {"n", a.n}, {"x_order", a.x_order}});
  }
  o.record["query"] = q;
  return o;
}

struct VerifyOutcome {
  Output out;
  bool passed = true;
};

VerifyOutcome run_verify(const std::string& suite, std::optional<int> max) {
  Bounds b = max ? Bounds::scaled(*max) : Bounds::acceptance();
  VerifyOutcome v;
  json checks = json::array();
  v.out.csv = "check,passed,cases,counterexample\n";
  for (auto& c : suite_checks(suite)) {
    CheckResult r = run_check(c, b);
    v.passed = v.passed && r.passed;
    checks.push_back({{"name", r.name},
                      {"passed", r.passed},
                      {"cases", r.cases},
                      {"counterexample", r.counterexample},
                      {"seconds", r.seconds}});
    char buf[64];
    std::snprintf(buf, sizeof buf, "%zu cases, %.2fs", r.cases, r.seconds);
    v.out.text += std::string(r.passed ? "PASS " : "FAIL ") + r.name + " (" + buf + ")";
    if (!r.passed) v.out.text += ": " + r.counterexample;
    v.out.text += "\n";
    v.out.csv += r.name + "," + (r.passed ? "true" : "false") + "," + std::to_string(r.cases) + ",\"" +
                 r.counterexample + "\"\n";
  }
  v.out.record["query"] = {{"command", "verify"}, {"suite", suite}};
  v.out.record["query"]["max"] = max ? json(*max) : json(nullptr);
  v.out.record["result"] = {{"display", v.passed ? "pass" : "fail"}, {"terms", json::array()}, {"checks", checks}};
  return v;
}

void emit(const Output& o, const std::string& format, const std::string& out_path) {
  std::string body;
  if (format == "json")
    body = o.record.dump(2) + "\n";
  else if (format == "csv")
    body = o.csv;
  else
    body = o.text;
  if (out_path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::runtime_error("cannot open " + out_path);
  f << body;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded multiplicities in Demazure flags"};
  app.require_subcommand(1);
  std::string format = "text", out_path;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", out_path, "Write output to FILE instead of stdout");

  MultArgs ma;
  auto* mult = app.add_subcommand("mult", "[D(from, weight) : D(to, target)]_q");
  mult->add_option("--from-level", ma.from)->required();
  mult->add_option("--weight", ma.weight)->required();
  mult->add_option("--to-level", ma.to)->required();
  mult->add_option("--target", ma.target)->required();
  mult->add_flag("--weighted", ma.weighted, "Strip the lowest power of q");
  mult->add_option("--engine", ma.engine)->check(CLI::IsMember({"step", "partition", "both"}));

  SeriesArgs sa;
  auto* series = app.add_subcommand("series", "A_n(x, q) = sum_p [D(from, n+p) : D(to, n)] x^p");
  series->add_option("--from-level", sa.from)->required();
  series->add_option("--to-level", sa.to)->required();
  series->add_option("--target", sa.target)->required();
  series->add_option("--x-order", sa.x_order);
  series->add_flag("--weighted", sa.weighted);
  series->add_flag("--q1", sa.q1, "Evaluate at q = 1");
  series->add_option("--parity", sa.parity)->check(CLI::IsMember({0, 1}));

  int t_from = 1, t_to = 2, t_smax = 10;
  auto* table = app.add_subcommand("table", "All [D(from, s) : D(to, n)]_q with n <= s <= s-max");
  table->add_option("--from-level", t_from)->required();
  table->add_option("--to-level", t_to)->required();
  table->add_option("--s-max", t_smax);

  int c_level = 1, c_weight = 0;
  std::optional<int> c_via;
  auto* chr = app.add_subcommand("char", "Graded character of D(level, weight) as (j, p, mult) triples");
  chr->add_option("--level", c_level)->required();
  chr->add_option("--weight", c_weight)->required();
  chr->add_option("--via-level", c_via);

  int d_level = 1, d_weight = 0;
  auto* dim = app.add_subcommand("dim", "dim D(level, weight)");
  dim->add_option("--level", d_level)->required();
  dim->add_option("--weight", d_weight)->required();

  ClosedArgs ca;
  auto* closed = app.add_subcommand("closed", "Closed-form expressions");
  closed->add_option("--which", ca.which)
      ->required()
      ->check(CLI::IsMember({"1to2", "2to3", "carlitz", "mocktheta", "phi12", "thmgenser1", "dpoly", "closedA"}));
  closed->add_option("--s", ca.s);
  closed->add_option("--n", ca.n);
  closed->add_option("--p", ca.p);
  closed->add_option("--k", ca.k);
  closed->add_option("--m", ca.m);
  closed->add_option("--index", ca.index);
  closed->add_option("--q-order", ca.q_order);
  closed->add_option("--x-order", ca.x_order);
  closed->add_flag("--uncorrected", ca.uncorrected, "carlitz: the uncorrected denominator and prefactor");

  std::string suite = "all";
  std::optional<int> vmax;
  auto* verify = app.add_subcommand("verify", "Run identity suites");
  verify->add_option("--suite", suite)->check(CLI::IsMember(suite_names()));
  verify->add_option("--max", vmax, "Scale every bound by MAX/20")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*verify) {
      VerifyOutcome v = run_verify(suite, vmax);
      emit(v.out, format, out_path);
      return v.passed ? 0 : 1;
    }
    Output o;
    if (*mult)
      o = run_mult(ma);
    else if (*series)
      o = run_series(sa);
    else if (*table)
      o = run_table(t_from, t_to, t_smax);
    else if (*chr)
      o = run_char(c_level, c_weight, c_via);
    else if (*dim)
      o = run_dim(d_level, d_weight);
    else
      o = run_closed(ca);
    emit(o, format, out_path);
  } catch (const InvalidLevel& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidShape& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
