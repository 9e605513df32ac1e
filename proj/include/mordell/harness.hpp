#pragma once

// Integral-point enumeration, Hall measures, rank-1 reports, sweeps over
// ranges of B, and JSON-lines result records.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mordell/curve.hpp"

namespace mordell {

constexpr const char* kArtifactVersion = "1.0.0";
constexpr const char* kRecordSchema = "mordell.record/1";

struct EnumerationResult {
  Int B;
  Int x_max;
  std::vector<CurvePoint> points;  // y >= 0, sorted by x
  long count = 0;                  // (x, +-y) counted twice, (x, 0) once
};

// Exact search of x in [ceil(-B^(1/3)), x_max] for x^3 + B a square.
EnumerationResult enumerate_integral_points(const Int& B, const Int& x_max);

// sqrt(x) / |B|; throws NonPositiveX unless P is integral with x > 0.
long double hall_measure(const CurvePoint& P, const Int& B);

struct ResultRecord {
  std::string kind;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  nlohmann::ordered_json outputs = nlohmann::ordered_json::object();
  std::string artifact_version = kArtifactVersion;
  std::string timestamp;

  bool operator==(const ResultRecord& o) const;
};

// SOURCE_DATE_EPOCH as UTC ISO-8601 when set, else the process start time.
const std::string& record_timestamp();
ResultRecord make_record(const std::string& kind);
// One line, keys in insertion order, big numbers as decimal strings.
std::string serialize(const ResultRecord& r);
ResultRecord deserialize(const std::string& line);  // throws ConfigError

// Generators shipped with the repo: 108, -2160, 1188, 80, -13500, -21168.
std::optional<CurvePoint> generator_fixture(const Int& B);

// Enumeration plus, for the generator G, the n with P = +-[n]G (|n| <= n_max),
// the largest-to-smallest canonical height ratio over non-torsion points and
// the margin h^(G) - (1/36) log|B|. G defaults to the fixture for B.
ResultRecord rank1_report(const Int& B, const Int& x_max,
                          std::optional<CurvePoint> G = std::nullopt, long n_max = 30);

enum class SweepCheck {
  LowerBound,
  FourDivEquiv,
  ThreeDivEquiv,
  EightDiv,
  TorsionMult,
  TwoDivRoundtrip,
};
SweepCheck parse_sweep_check(const std::string& s);  // throws ConfigError
const char* sweep_check_name(SweepCheck c);
// Comma-separated list; "all" selects every check.
std::vector<SweepCheck> parse_sweep_checks(const std::string& csv);

struct SweepConfig {
  Int b_from, b_to;  // inclusive
  std::vector<SweepCheck> checks;
  Int x_max = 10000;
  unsigned shards = 1;
};

// One "sweep.curve" record per sixth-power-free B in the range, ordered by
// B, followed by one "sweep.summary" record (none for an empty range).
std::vector<ResultRecord> sweep(const SweepConfig& cfg);
// Total violations reported by a sweep's summary record.
long sweep_violations(const std::vector<ResultRecord>& records);

// Default output directory: MORDELL_OUT_DIR, else "out".
std::string default_out_dir();
void write_records(const std::string& path, const std::vector<ResultRecord>& records);

}  // namespace mordell
