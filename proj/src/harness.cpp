#include "mordell/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <thread>

#include "mordell/classifier.hpp"
#include "mordell/error.hpp"
#include "mordell/heights.hpp"
#include "mordell/simd.hpp"

namespace mordell {

using json = nlohmann::ordered_json;

namespace {

void push_point(EnumerationResult& r, const Int& x, const Int& y) {
  r.points.push_back(CurvePoint::affine(Rat(x), Rat(y)));
  r.count += y == 0 ? 1 : 2;
}

// x^3 + B fits comfortably in int64 over the whole range.
bool fits_fast_path(const Int& B, const Int& lo, const Int& hi) {
  Int m = std::max(abs(lo), abs(hi));
  Int top = m * m * m + abs(B);
  return top < Int(1) << 62;
}

}  // namespace

EnumerationResult enumerate_integral_points(const Int& B, const Int& x_max) {
  if (B == 0) throw Error(ErrorKind::ZeroB, "B must be nonzero");
  EnumerationResult r;
  r.B = B;
  r.x_max = x_max;
  const Int lo = -icbrt_floor(B);  // least x with x^3 + B >= 0
  if (x_max < lo) return r;

  if (fits_fast_path(B, lo, x_max)) {
    const int64_t b = to_i64(B), x0 = to_i64(lo), x1 = to_i64(x_max);
    constexpr size_t kBatch = 4096;
    std::vector<int64_t> v(kBatch);
    std::vector<uint8_t> keep(kBatch);
    for (int64_t start = x0; start <= x1; start += kBatch) {
      size_t n = static_cast<size_t>(std::min<int64_t>(kBatch, x1 - start + 1));
      for (size_t i = 0; i < n; ++i) {
        int64_t x = start + static_cast<int64_t>(i);
        v[i] = x * x * x + b;
      }
      square_prefilter(v.data(), n, keep.data());
      for (size_t i = 0; i < n; ++i) {
        if (!keep[i]) continue;
        int64_t s = static_cast<int64_t>(std::sqrt(static_cast<long double>(v[i])));
        while (static_cast<__int128>(s) * s > v[i]) --s;
        while (static_cast<__int128>(s + 1) * (s + 1) <= v[i]) ++s;
        if (static_cast<__int128>(s) * s == v[i])
          push_point(r, Int(static_cast<long>(start + static_cast<int64_t>(i))),
                     Int(static_cast<long>(s)));
      }
    }
    return r;
  }
  for (Int x = lo; x <= x_max; ++x) {
    Int y;
    if (is_square(x * x * x + B, &y)) push_point(r, x, y);
  }
  return r;
}

long double hall_measure(const CurvePoint& P, const Int& B) {
  if (P.identity || !P.is_integral() || P.x <= 0)
    throw Error(ErrorKind::NonPositiveX, "Hall measure needs an integral point with x > 0");
  if (B == 0) throw Error(ErrorKind::ZeroB, "B must be nonzero");
  return std::sqrt(to_ld(P.x)) / to_ld(Rat(abs(B)));
}

bool ResultRecord::operator==(const ResultRecord& o) const {
  return kind == o.kind && inputs == o.inputs && outputs == o.outputs &&
         artifact_version == o.artifact_version && timestamp == o.timestamp;
}

const std::string& record_timestamp() {
  static const std::string ts = [] {
    std::time_t t;
    const char* env = std::getenv("SOURCE_DATE_EPOCH");
    if (env && *env)
      t = static_cast<std::time_t>(std::strtoll(env, nullptr, 10));
    else
      t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return std::string(buf);
  }();
  return ts;
}

ResultRecord make_record(const std::string& kind) {
  ResultRecord r;
  r.kind = kind;
  r.timestamp = record_timestamp();
  return r;
}

std::string serialize(const ResultRecord& r) {
  json j;
  j["schema"] = kRecordSchema;
  j["kind"] = r.kind;
  j["artifact_version"] = r.artifact_version;
  j["timestamp"] = r.timestamp;
  j["inputs"] = r.inputs;
  j["outputs"] = r.outputs;
  return j.dump();
}

ResultRecord deserialize(const std::string& line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ConfigError, std::string("bad record: ") + e.what());
  }
  if (!j.is_object() || j.value("schema", "") != kRecordSchema)
    throw Error(ErrorKind::ConfigError, "unknown record schema");
  ResultRecord r;
  try {
    r.kind = j.at("kind").get<std::string>();
    r.artifact_version = j.at("artifact_version").get<std::string>();
    r.timestamp = j.at("timestamp").get<std::string>();
    r.inputs = j.at("inputs");
    r.outputs = j.at("outputs");
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ConfigError, std::string("bad record: ") + e.what());
  }
  return r;
}

namespace {

json point_json(const CurvePoint& P) {
  return json::array({to_string(P.x), to_string(P.y)});
}

}  // namespace

std::optional<CurvePoint> generator_fixture(const Int& B) {
  static const std::map<long, std::pair<long, long>> table = {
      {108, {6, 18}},      {-2160, {24, 108}},   {1188, {12, 54}},
      {80, {4, 12}},       {-13500, {60, 450}},  {-21168, {84, 756}}};
  if (!B.fits_slong_p()) return std::nullopt;
  auto it = table.find(B.get_si());
  if (it == table.end()) return std::nullopt;
  return CurvePoint::affine(Rat(it->second.first), Rat(it->second.second));
}

ResultRecord rank1_report(const Int& B, const Int& x_max, std::optional<CurvePoint> G,
                          long n_max) {
  MordellCurve E = make_curve(B);
  if (!G) G = generator_fixture(B);
  if (!G) throw Error(ErrorKind::ConfigError, "no generator fixture for B = " + to_string(B));
  if (!E.contains(*G))
    throw Error(ErrorKind::GeneratorNotOnCurve, G->str() + " not on E_" + to_string(B));
  if (is_torsion(E, *G)) throw Error(ErrorKind::TorsionInput, G->str() + " is torsion");

  EnumerationResult en = enumerate_integral_points(B, x_max);
  std::map<Rat, long> index;  // x([n]G) -> n for integral multiples
  CurvePoint Q = CurvePoint::at_infinity();
  for (long n = 1; n <= n_max; ++n) {
    Q = add(E, Q, *G);
    if (Q.is_integral()) index.emplace(Q.x, n);
  }

  ResultRecord r = make_record("rank1_report");
  r.inputs["B"] = to_string(B);
  r.inputs["x_max"] = to_string(x_max);
  r.inputs["generator"] = point_json(*G);
  r.inputs["n_max"] = n_max;

  json pts = json::array();
  std::set<long> ns;
  long unmatched = 0;
  long double hmin = 0, hmax = 0;
  bool have_h = false;
  for (const auto& P : en.points) {
    json p;
    p["point"] = point_json(P);
    auto it = index.find(P.x);
    long n = it == index.end() ? 0 : it->second;
    if (n) ns.insert(n);
    else ++unmatched;
    p["n"] = n;
    if (P.x > 0) p["hall"] = static_cast<double>(hall_measure(P, B));
    if (!is_torsion(E, P)) {
      long double h = canonical_height(E, P);
      p["canonical_height"] = static_cast<double>(h);
      if (!have_h || h < hmin) hmin = h;
      if (!have_h || h > hmax) hmax = h;
      have_h = true;
    }
    pts.push_back(p);
  }
  r.outputs["count"] = en.count;
  r.outputs["points"] = pts;
  r.outputs["multiples"] = json(std::vector<long>(ns.begin(), ns.end()));
  r.outputs["unmatched"] = unmatched;
  r.outputs["height_ratio"] = have_h ? json(static_cast<double>(hmax / hmin)) : json(nullptr);
  long double hG = canonical_height(E, *G);
  r.outputs["generator_height"] = static_cast<double>(hG);
  r.outputs["margin_vs_log_B_over_36"] = static_cast<double>(hG - E.log_abs_B() / 36);
  return r;
}

namespace {

const std::pair<SweepCheck, const char*> kCheckNames[] = {
    {SweepCheck::LowerBound, "lower_bound"},
    {SweepCheck::FourDivEquiv, "four_div_equiv"},
    {SweepCheck::ThreeDivEquiv, "three_div_equiv"},
    {SweepCheck::EightDiv, "eight_div"},
    {SweepCheck::TorsionMult, "torsion_mult"},
    {SweepCheck::TwoDivRoundtrip, "two_div_roundtrip"},
};

}  // namespace

SweepCheck parse_sweep_check(const std::string& s) {
  for (const auto& [c, name] : kCheckNames)
    if (s == name) return c;
  throw Error(ErrorKind::ConfigError, "unknown check: " + s);
}

const char* sweep_check_name(SweepCheck c) {
  for (const auto& [k, name] : kCheckNames)
    if (k == c) return name;
  return "?";
}

std::vector<SweepCheck> parse_sweep_checks(const std::string& csv) {
  std::vector<SweepCheck> out;
  size_t pos = 0;
  while (pos <= csv.size()) {
    size_t end = csv.find(',', pos);
    if (end == std::string::npos) end = csv.size();
    std::string item = csv.substr(pos, end - pos);
    if (item == "all") {
      for (const auto& [c, name] : kCheckNames) out.push_back(c);
    } else if (!item.empty()) {
      out.push_back(parse_sweep_check(item));
    }
    pos = end + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.empty()) throw Error(ErrorKind::ConfigError, "no checks selected");
  return out;
}

namespace {

// Violation messages for one non-torsion point; empty when all checks hold.
std::vector<std::pair<SweepCheck, std::string>> run_checks(
    const MordellCurve& E, const CurvePoint& P, const std::vector<SweepCheck>& checks) {
  std::vector<std::pair<SweepCheck, std::string>> bad;
  CurvePoint P2 = dbl(E, P), P3 = add(E, P2, P), P4 = dbl(E, P2);
  for (SweepCheck c : checks) {
    try {
      switch (c) {
        case SweepCheck::LowerBound:
          if (!check_lower_bound(E, P)) bad.push_back({c, "height below lower bound"});
          break;
        case SweepCheck::FourDivEquiv:
          if (four_div_check(E, P) != P4.is_integral())
            bad.push_back({c, "four_div_check disagrees with [4]P"});
          break;
        case SweepCheck::ThreeDivEquiv:
          if (three_div_classify(E, P).has_value() != P3.is_integral())
            bad.push_back({c, "three_div_classify disagrees with [3]P"});
          break;
        case SweepCheck::EightDiv:
          if (dbl(E, P4).is_integral()) bad.push_back({c, "[8]P integral"});
          break;
        case SweepCheck::TorsionMult:
          if ((is_square(E.B) || is_cube(E.B)) && (P3.is_integral() || P4.is_integral()))
            bad.push_back({c, "[3]P or [4]P integral on a square or cube B"});
          break;
        case SweepCheck::TwoDivRoundtrip:
          if (two_divisible(P) != P2.is_integral()) {
            bad.push_back({c, "two_divisible disagrees with [2]P"});
          } else if (P2.is_integral()) {
            TwoDivisibilityParams p = two_div_decompose(E, P);
            CurveAndPoint cp = two_div_construct(p);
            if (cp.curve.B != E.B || !(cp.point == P))
              bad.push_back({c, "decompose/construct round trip failed"});
            else if (Rat(two_div_double_x(p)) != P2.x)
              bad.push_back({c, "closed-form x([2]P) mismatch"});
          }
          break;
      }
    } catch (const Error& e) {
      bad.push_back({c, e.what()});
    }
  }
  return bad;
}

ResultRecord sweep_one(const Int& B, const SweepConfig& cfg, const json& check_names) {
  MordellCurve E = make_curve(B);
  EnumerationResult en = enumerate_integral_points(B, cfg.x_max);
  ResultRecord r = make_record("sweep.curve");
  r.inputs["B"] = to_string(B);
  r.inputs["x_max"] = to_string(cfg.x_max);
  r.inputs["checks"] = check_names;
  long nontorsion = 0;
  json per = json::object();
  for (SweepCheck c : cfg.checks) per[sweep_check_name(c)] = 0;
  json details = json::array();
  for (const auto& P : en.points) {
    if (P.y == 0 || is_torsion(E, P)) continue;
    ++nontorsion;
    for (const auto& [c, msg] : run_checks(E, P, cfg.checks)) {
      per[sweep_check_name(c)] = per[sweep_check_name(c)].get<long>() + 1;
      details.push_back({{"point", point_json(P)}, {"check", sweep_check_name(c)}, {"detail", msg}});
    }
  }
  r.outputs["integral_points"] = en.count;
  r.outputs["non_torsion"] = nontorsion;
  r.outputs["violations"] = static_cast<long>(details.size());
  r.outputs["per_check"] = per;
  r.outputs["details"] = details;
  return r;
}

}  // namespace

std::vector<ResultRecord> sweep(const SweepConfig& cfg) {
  if (cfg.checks.empty()) throw Error(ErrorKind::ConfigError, "no checks selected");
  if (cfg.shards == 0) throw Error(ErrorKind::ConfigError, "shards must be positive");
  if (cfg.x_max < 1) throw Error(ErrorKind::ConfigError, "x_max must be positive");
  std::vector<Int> bs;
  for (Int B = cfg.b_from; B <= cfg.b_to; ++B)
    if (B != 0 && sixth_power_free(B)) bs.push_back(B);
  std::vector<ResultRecord> out;
  if (bs.empty()) return out;

  json names = json::array();
  for (SweepCheck c : cfg.checks) names.push_back(sweep_check_name(c));

  std::vector<ResultRecord> slots(bs.size());
  std::vector<std::string> errors(cfg.shards);
  auto work = [&](unsigned shard) {
    try {
      for (size_t i = shard; i < bs.size(); i += cfg.shards) slots[i] = sweep_one(bs[i], cfg, names);
    } catch (const std::exception& e) {
      errors[shard] = e.what();
    }
  };
  if (cfg.shards == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned s = 0; s < cfg.shards; ++s) pool.emplace_back(work, s);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (!e.empty()) throw Error(ErrorKind::ConfigError, "sweep shard failed: " + e);

  long points = 0, violations = 0;
  json per = json::object();
  for (SweepCheck c : cfg.checks) per[sweep_check_name(c)] = 0;
  for (auto& r : slots) {
    points += r.outputs["non_torsion"].get<long>();
    violations += r.outputs["violations"].get<long>();
    for (auto& [k, v] : r.outputs["per_check"].items()) per[k] = per[k].get<long>() + v.get<long>();
    out.push_back(std::move(r));
  }
  ResultRecord s = make_record("sweep.summary");
  s.inputs["from"] = to_string(cfg.b_from);
  s.inputs["to"] = to_string(cfg.b_to);
  s.inputs["x_max"] = to_string(cfg.x_max);
  s.inputs["checks"] = names;
  s.outputs["curves"] = static_cast<long>(bs.size());
  s.outputs["non_torsion_points"] = points;
  s.outputs["violations"] = violations;
  s.outputs["per_check"] = per;
  out.push_back(std::move(s));
  return out;
}

long sweep_violations(const std::vector<ResultRecord>& records) {
  for (auto it = records.rbegin(); it != records.rend(); ++it)
    if (it->kind == "sweep.summary") return it->outputs.at("violations").get<long>();
  return 0;
}

std::string default_out_dir() {
  const char* env = std::getenv("MORDELL_OUT_DIR");
  return env && *env ? std::string(env) : std::string("out");
}

void write_records(const std::string& path, const std::vector<ResultRecord>& records) {
  std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream f(path, std::ios::trunc);
  if (!f) throw Error(ErrorKind::ConfigError, "cannot write " + path);
  for (const auto& r : records) f << serialize(r) << '\n';
  if (!f) throw Error(ErrorKind::ConfigError, "write failed: " + path);
}

}  // namespace mordell
