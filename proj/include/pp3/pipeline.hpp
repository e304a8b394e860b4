#pragma once

#include <json.hpp>
#include <map>
#include <string>
#include <vector>

#include "pp3/eliminate.hpp"

namespace pp3 {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kFixtureDirEnv = "PP3_FIXTURE_DIR";

struct PipelineConfig {
  long d = 0;
  std::string coeff_A = "1";
  std::string coeff_B = "d";  // "d" expands to the field parameter
  std::string coeff_C = "1";
  std::vector<LevelTag> levels = {LevelTag::D, LevelTag::LambdaD};
  std::map<std::string, BigInt> torsion_primes;  // level name -> ell
  long inertia_p_threshold = kFakeCurveThreshold;
  std::string fixture_path;    // newform records JSON
  std::string constants_path;  // torsion constants JSON (used when torsion_primes empty)
  long n_max = 50;
  enum class Format { Json, Table } format = Format::Json;
  bool experimental = false;   // permits d outside {7, 19, 43, 67}
};

/// Default location of a data file: $PP3_FIXTURE_DIR/name, else data/name.
std::string default_data_path(const std::string& name);

/// Parses and validates one newform fixture file. Rejects eigenvalue keys
/// of norm >= 50, keys at primes above 3, split tags inconsistent with the
/// splitting in Q(sqrt(-d)), duplicate keys and duplicate form ids.
std::vector<NewformRecord> load_newforms(const std::string& path);

/// Levels a fixture explicitly attests to have no forms at.
std::vector<LevelTag> fixture_empty_levels(const std::string& path);

/// Torsion constants file: {"torsion_primes": {"<d>": {"D": l, "LD": l}}}.
std::map<std::string, BigInt> load_torsion_primes(const std::string& path, long d);

struct PipelineResult {
  std::vector<FormOutcome> outcomes;
  BoundResult bound;
  BigInt torsion_ell = 0;
  nlohmann::json report;    // deterministic: no timestamps or timings inside
  nlohmann::json manifest;  // config hash, fixture checksums, version, timing
};

PipelineResult run_pipeline(const PipelineConfig& config);

std::string render_report_table(const PipelineResult& result);

/// FNV-1a over bytes, as fixed-width hex; used for config and fixture digests.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace pp3
