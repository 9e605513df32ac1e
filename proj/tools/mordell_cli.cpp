// Command-line front end for the Mordell curve library.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mordell/analytic.hpp"
#include "mordell/classifier.hpp"
#include "mordell/error.hpp"
#include "mordell/harness.hpp"
#include "mordell/heights.hpp"
#include "mordell/search.hpp"

using namespace mordell;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

CurvePoint parse_point(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos)
    throw Error(ErrorKind::ConfigError, "point must be <x>,<y>: " + s);
  return CurvePoint::affine(rat_from_string(s.substr(0, comma)),
                            rat_from_string(s.substr(comma + 1)));
}

const char* torsion_name(TorsionGroup g) {
  switch (g) {
    case TorsionGroup::Trivial: return "trivial";
    case TorsionGroup::Z2: return "Z/2";
    case TorsionGroup::Z3: return "Z/3";
    case TorsionGroup::Z6: return "Z/6";
  }
  return "?";
}

std::string fmt(long double v, int prec = 6) {
  std::ostringstream o;
  o.precision(prec);
  o << v;
  return o.str();
}

int cmd_curve_info(const std::string& b) {
  Int B = int_from_string(b);
  MordellCurve E = make_curve(B);
  Reduced red = sixth_power_free_reduce(B);
  std::cout << "B = " << to_string(B) << "\n";
  std::cout << "quasi-minimal: " << (E.quasi_minimal ? "yes" : "no");
  if (!E.quasi_minimal) std::cout << " (reduces to B = " << to_string(red.B) << ", u = " << to_string(red.u) << ")";
  std::cout << "\n";
  std::cout << "torsion: " << torsion_name(E.torsion.group) << "\n";
  for (const auto& [P, o] : E.torsion.points) std::cout << "  " << P.str() << " order " << o << "\n";
  for (const auto& rule : lower_bound_rules()) {
    Int r = B % rule.modulus;
    if (r < 0) r += rule.modulus;
    bool hit = rule.residues.empty();
    for (long v : rule.residues) hit = hit || r == v;
    if (!hit) continue;
    std::cout << "congruence class: B = " << to_string(r) << " mod " << rule.modulus
              << (rule.residues.empty() ? " (fallback)" : "") << "\n";
    break;
  }
  std::cout << "congruence C (1/36 rule): " << fmt(congruence_constant(B)) << "\n";
  if (E.quasi_minimal) {
    LowerBoundConstant c = lower_bound_constant(B);
    std::cout << "lower bound: h^(P) > " << fmt(c.coefficient) << " log|B| - " << fmt(c.C)
              << " = " << fmt(lower_bound_value(B)) << "\n";
  }
  return kExitOk;
}

int cmd_multiples(const std::string& b, const std::string& point, long max_n) {
  MordellCurve E = make_curve(int_from_string(b));
  CurvePoint P = parse_point(point);
  require_on_curve(E, P);
  MultipleReport rep = integral_multiples(E, P, max_n);
  std::cout << "E: y^2 = x^3 + " << to_string(E.B) << ", P = " << P.str() << "\n";
  std::cout << "n\tintegral\tdigits(D)\tpoint\n";
  for (const auto& e : rep.entries) {
    std::cout << e.n << "\t" << (e.integral ? "yes" : "no") << "\t"
              << (e.D == 0 ? 0 : static_cast<long>(to_string(e.D).size())) << "\t";
    if (e.integral) std::cout << e.point.str();
    std::cout << "\n";
  }
  std::cout << "integral multiples n > 1:";
  for (long n : rep.integral_indices())
    if (n > 1) std::cout << " " << n;
  std::cout << "\n";
  return kExitOk;
}

int cmd_classify(const std::string& b, const std::string& point) {
  MordellCurve E = make_curve(int_from_string(b));
  CurvePoint P = parse_point(point);
  require_on_curve(E, P);
  if (is_torsion(E, P)) throw Error(ErrorKind::TorsionInput, P.str() + " is torsion");
  std::cout << "two-divisible ([2]P integral): " << (two_divisible(P) ? "yes" : "no") << "\n";
  if (two_divisible(P)) {
    TwoDivisibilityParams p = two_div_decompose(E, P);
    std::cout << "  M=" << to_string(p.M) << " N=" << to_string(p.N) << " t=" << to_string(p.t)
              << " K=" << to_string(p.K) << " alpha=" << p.alpha
              << " x([2]P)=" << to_string(two_div_double_x(p)) << "\n";
  }
  auto c3 = three_div_classify(E, P);
  std::cout << "three-divisible ([3]P integral): " << (c3 ? "yes" : "no") << "\n";
  if (c3)
    std::cout << "  type " << three_div_type_name(c3->type) << " M=" << to_string(c3->M)
              << " N=" << to_string(c3->N) << " K=" << to_string(c3->K) << "\n";
  std::cout << "four-divisible ([4]P integral): " << (four_div_check(E, P) ? "yes" : "no")
            << "\n";
  if (P.is_integral())
    std::cout << "  A^2 + 20AB - 8B^2 = " << to_string(tabef_value(E, P)) << "\n";
  return kExitOk;
}

int cmd_family(int id, const std::string& param) {
  FamilyInstance f = family_generate(id, int_from_string(param));
  std::cout << "family " << f.family << ", parameter " << to_string(f.parameter) << "\n";
  std::cout << "B = " << to_string(f.curve.B) << ", P = " << f.point.str() << "\n";
  std::cout << "x([3]P) = " << to_string(f.x3P) << "\n";
  std::cout << "quasi-minimal: " << (f.quasi_minimal ? "yes" : "no")
            << ", torsion: " << (f.torsion ? "yes" : "no")
            << ", admissible: " << (family_parameter_admissible(id, f.parameter) ? "yes" : "no")
            << "\n";
  return kExitOk;
}

void print_solutions(const SearchResult& r) {
  for (const auto& s : r.solutions)
    std::cout << "  (" << to_string(s.x) << ", " << to_string(s.y) << ") = " << to_string(s.rhs)
              << "\n";
  std::cout << "solutions: " << r.solutions.size()
            << ", complete: " << (r.complete ? "yes" : "no (bounded search)") << "\n";
}

int cmd_thue(const std::string& set, long bound) {
  std::cout << "search bound |x|, |y| <= " << bound << "\n";
  if (set == "psi5") {
    SearchResult all;
    for (const auto& p : psi5_problems(bound)) {
      SearchResult r = thue_solve_bounded(p);
      all.solutions.insert(all.solutions.end(), r.solutions.begin(), r.solutions.end());
    }
    std::sort(all.solutions.begin(), all.solutions.end());
    print_solutions(all);
    std::cout << "with a non-torsion point and [5]P integral:\n";
    for (const auto& s : integral_multiple_solutions(all.solutions, 5))
      std::cout << "  (" << to_string(s.x) << ", " << to_string(s.y) << ") at " << to_string(s.rhs)
                << "\n";
    return kExitOk;
  }
  if (set == "psi7") {
    auto sols = psi7_system_solve(bound);
    for (const auto& s : sols)
      std::cout << "  (" << to_string(s.x) << ", " << to_string(s.y) << ") F7 = "
                << to_string(s.f_value) << " G7 = " << to_string(s.g_value) << " (a1,a2,g) = ("
                << s.alpha1 << "," << s.alpha2 << "," << s.gamma << ")\n";
    std::cout << "solutions: " << sols.size() << ", complete: no (bounded search)\n";
    return kExitOk;
  }
  if (set == "fourT") {
    print_solutions(four_torsion_thue(bound));
    return kExitOk;
  }
  throw Error(ErrorKind::ConfigError, "unknown set: " + set);
}

int cmd_table2(const std::string& bmax) {
  auto rows = pell_sweep_four_div(int_from_string(bmax));
  std::cout << "B\tP\n";
  for (const auto& r : rows) std::cout << to_string(r.B) << "\t" << r.P.str() << "\n";
  std::cout << "rows: " << rows.size() << "\n";
  return kExitOk;
}

int cmd_enumerate(const std::string& b, const std::string& xmax) {
  Int B = int_from_string(b), X = int_from_string(xmax);
  if (X < 1) throw Error(ErrorKind::ConfigError, "--x-max must be >= 1");
  EnumerationResult r = enumerate_integral_points(B, X);
  std::cout << "BOUNDED ENUMERATION: x <= " << to_string(X) << "\n";
  std::cout << "x\ty\thall\n";
  for (const auto& P : r.points) {
    std::cout << to_string(P.x) << "\t" << to_string(P.y) << "\t";
    if (P.x > 0) std::cout << fmt(hall_measure(P, B));
    else std::cout << "-";
    std::cout << "\n";
  }
  std::cout << "integral points (with +-y): " << r.count << "\n";
  return kExitOk;
}

void bound_line(const std::string& label, const std::function<long double()>& f) {
  std::cout << label << ": ";
  try {
    std::cout << fmt(f(), 8) << "\n";
  } catch (const Error& e) {
    std::cout << "n/a (" << e.what() << ")\n";
  }
}

int cmd_bounds(const std::string& b, long n) {
  Int B = int_from_string(b);
  std::cout << "B = " << to_string(B) << (n ? ", n = " + std::to_string(n) : "") << "\n";
  bound_line("congruence C", [&] { return congruence_constant(B); });
  bound_line("log|L| upper, general n",
             [&] { return linear_form_upper(B, LinearFormKind::GeneralN, n); });
  bound_line("log|L| upper, [4]P integral",
             [&] { return linear_form_upper(B, LinearFormKind::FourMult, n); });
  bound_line("log|L| upper, [2]P and [3]P integral",
             [&] { return linear_form_upper(B, LinearFormKind::TwoThreeMult, n); });
  if (n > 0) {
    bound_line("log|L| lower (David)", [&] { return david_lower(B, n); });
    std::cout << "regime: " << david_regime(B, std::log(static_cast<long double>(n))) << "\n";
    bound_line("gap: log n2 >", [&] { return gap_lower_bound_on_log_n2(n, B); });
  }
  bound_line("n upper bound", [&] { return n_upper_bound(B); });
  return kExitOk;
}

int cmd_sweep(const std::string& from, const std::string& to, const std::string& checks,
              unsigned shards, const std::string& out, const std::string& xmax) {
  SweepConfig cfg;
  cfg.b_from = int_from_string(from);
  cfg.b_to = int_from_string(to);
  cfg.checks = parse_sweep_checks(checks);
  cfg.shards = shards;
  cfg.x_max = int_from_string(xmax);
  auto recs = sweep(cfg);
  std::string path = out.empty() ? (std::filesystem::path(default_out_dir()) /
                                    ("sweep_" + from + "_" + to + ".jsonl"))
                                       .string()
                                 : out;
  write_records(path, recs);
  long v = sweep_violations(recs);
  if (recs.empty()) {
    std::cout << "empty range\n";
  } else {
    const auto& s = recs.back().outputs;
    std::cout << "curves: " << s["curves"].get<long>()
              << ", non-torsion points: " << s["non_torsion_points"].get<long>()
              << ", violations: " << v << "\n";
    for (const auto& r : recs)
      for (const auto& d : r.outputs.value("details", nlohmann::ordered_json::array()))
        std::cout << "  B=" << r.inputs["B"].get<std::string>() << " " << d.dump() << "\n";
  }
  std::cout << "records: " << path << "\n";
  return v > 0 ? kExitViolation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integral multiples on Mordell curves y^2 = x^3 + B"};
  app.require_subcommand(1);

  std::string b, point, param, set, bmax, xmax = "1000000", from, to, checks, out;
  long max_n = 30, bound = 100, n = 0;
  int id = 1;
  unsigned shards = 1;
  std::string sweep_xmax = "10000";
  std::function<int()> action;

  auto* curve = app.add_subcommand("curve", "curve properties");
  curve->require_subcommand(1);
  auto* info = curve->add_subcommand("info", "torsion, quasi-minimality, constants");
  info->add_option("--b", b, "B")->required();
  info->callback([&] { action = [&] { return cmd_curve_info(b); }; });

  auto* mult = app.add_subcommand("multiples", "integral multiples [n]P");
  mult->add_option("--b", b, "B")->required();
  mult->add_option("--point", point, "x,y")->required();
  mult->add_option("--max-n", max_n, "largest n")->check(CLI::Range(1L, 1000L));
  mult->callback([&] { action = [&] { return cmd_multiples(b, point, max_n); }; });

  auto* cls = app.add_subcommand("classify", "two/three/four-divisibility verdicts");
  cls->add_option("--b", b, "B")->required();
  cls->add_option("--point", point, "x,y")->required();
  cls->callback([&] { action = [&] { return cmd_classify(b, point); }; });

  auto* fam = app.add_subcommand("family", "instance of a [2]P,[3]P family");
  fam->add_option("--id", id, "family 1..6")->required()->check(CLI::Range(1, 6));
  fam->add_option("--param", param, "parameter")->required();
  fam->callback([&] { action = [&] { return cmd_family(id, param); }; });

  auto* thue = app.add_subcommand("thue", "bounded Thue searches");
  thue->add_option("--set", set, "psi5|psi7|fourT")
      ->required()
      ->check(CLI::IsMember({"psi5", "psi7", "fourT"}));
  thue->add_option("--bound", bound, "search bound")->check(CLI::Range(0L, kMaxSearchBound));
  thue->callback([&] { action = [&] { return cmd_thue(set, bound); }; });

  auto* t2 = app.add_subcommand("sweep-table2", "points with [4]P integral, |B| <= b-max");
  t2->add_option("--b-max", bmax, "largest |B|")->required();
  t2->callback([&] { action = [&] { return cmd_table2(bmax); }; });

  auto* en = app.add_subcommand("enumerate", "integral points and Hall measures");
  en->add_option("--b", b, "B")->required();
  en->add_option("--x-max", xmax, "largest x (default 10^6)");
  en->callback([&] { action = [&] { return cmd_enumerate(b, xmax); }; });

  auto* bd = app.add_subcommand("bounds", "inequality panel");
  bd->add_option("--b", b, "B")->required();
  bd->add_option("--n", n, "multiple index")->check(CLI::Range(1L, 1000000000L));
  bd->callback([&] { action = [&] { return cmd_bounds(b, n); }; });

  auto* sw = app.add_subcommand("sweep", "check suite over a range of B");
  sw->add_option("--from", from, "first B")->required();
  sw->add_option("--to", to, "last B")->required();
  sw->add_option("--checks", checks, "comma-separated checks or 'all'")->required();
  sw->add_option("--shards", shards, "worker threads")->check(CLI::Range(1u, 256u));
  sw->add_option("--out", out, "output JSON-lines path");
  sw->add_option("--x-max", sweep_xmax, "largest x (default 10^4)");
  sw->callback([&] {
    action = [&] { return cmd_sweep(from, to, checks, shards, out, sweep_xmax); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }
  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
