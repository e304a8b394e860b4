#include "pp3/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "pp3/factor.hpp"

namespace pp3 {

using nlohmann::json;

std::string fnv1a_hex(const std::string& bytes) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex;
  for (int i = 15; i >= 0; --i) os << "0123456789abcdef"[(h >> (4 * i)) & 0xf];
  return os.str();
}

std::string default_data_path(const std::string& name) {
  if (const char* dir = std::getenv(kFixtureDirEnv)) return std::string(dir) + "/" + name;
  return "data/" + name;
}

namespace {

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return j;
}

[[noreturn]] void fail(const std::string& path, const std::string& where, const std::string& msg) {
  throw std::invalid_argument(path + ": " + where + ": " + msg);
}

BigRat coord_from_json(const json& v, const std::string& path, const std::string& where) {
  if (v.is_number_integer()) return BigRat(static_cast<long>(v.get<int64_t>()));
  if (v.is_string()) return rat_from_string(v.get<std::string>());
  fail(path, where, "eigenvalue coordinate must be an integer or a \"p/q\" string");
}

BigInt bigint_from_json(const json& v, const std::string& path, const std::string& where) {
  if (v.is_number_integer()) return BigInt(static_cast<long>(v.get<int64_t>()));
  if (v.is_string()) {
    try {
      return BigInt(v.get<std::string>());
    } catch (const std::exception&) {
      fail(path, where, "not an integer literal");
    }
  }
  fail(path, where, "expected an integer or a decimal string");
}

std::string read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

std::vector<NewformRecord> load_newforms(const std::string& path) {
  json top = parse_file(path);
  if (!top.is_object() || !top.contains("field_d") || !top.contains("forms"))
    fail(path, "top level", "expected an object with \"field_d\" and \"forms\"");
  long d = top.at("field_d").get<long>();
  FieldCtx ctx = FieldCtx::make(d);
  std::vector<NewformRecord> records;
  std::vector<std::string> seen_ids;
  for (size_t fi = 0; fi < top.at("forms").size(); ++fi) {
    const json& jf = top.at("forms").at(fi);
    std::string where = "forms[" + std::to_string(fi) + "]";
    NewformRecord rec;
    rec.field_d = d;
    if (!jf.contains("id") || !jf.at("id").is_string()) fail(path, where, "missing string \"id\"");
    rec.id = jf.at("id").get<std::string>();
    where += " (" + rec.id + ")";
    if (std::find(seen_ids.begin(), seen_ids.end(), rec.id) != seen_ids.end())
      fail(path, where, "duplicate form id");
    seen_ids.push_back(rec.id);
    if (!jf.contains("level")) fail(path, where, "missing \"level\"");
    rec.level = level_tag_from_name(jf.at("level").get<std::string>());

    const json& jh = jf.at("hecke");
    std::string kind = jh.at("kind").get<std::string>();
    if (kind == "Q") {
      rec.hecke.kind = HeckeFieldDesc::Kind::Rational;
    } else if (kind == "quad") {
      rec.hecke.kind = HeckeFieldDesc::Kind::Quadratic;
      rec.hecke.disc = jh.at("disc").get<long>();
    } else if (kind == "poly") {
      rec.hecke.kind = HeckeFieldDesc::Kind::Generic;
      for (const json& c : jh.at("min_poly"))
        rec.hecke.min_poly.push_back(bigint_from_json(c, path, where + ".hecke.min_poly"));
    } else {
      fail(path, where + ".hecke", "kind must be \"Q\", \"quad\" or \"poly\"");
    }
    HeckeField field = rec.hecke.realize();  // validates the descriptor

    if (!jf.contains("ap") || !jf.at("ap").is_array()) fail(path, where, "missing array \"ap\"");
    for (size_t ai = 0; ai < jf.at("ap").size(); ++ai) {
      const json& ja = jf.at("ap").at(ai);
      std::string awhere = where + ".ap[" + std::to_string(ai) + "]";
      ApKey key;
      key.p = ja.at("p").get<long>();
      if (key.p < 2 || !is_prime(BigInt(key.p))) fail(path, awhere, "\"p\" must be a rational prime");
      std::string split = ja.at("split").get<std::string>();
      SplitKind actual = splitting_kind(key.p, ctx);
      if (split == "s0" || split == "s1") {
        key.kind = SplitKind::Split;
        key.conj_index = (split == "s1") ? 1 : 0;
      } else if (split == "inert") {
        key.kind = SplitKind::Inert;
      } else if (split == "ram") {
        key.kind = SplitKind::Ramified;
      } else {
        fail(path, awhere, "\"split\" must be s0, s1, inert or ram");
      }
      if (key.kind != actual)
        fail(path, awhere,
             "split tag \"" + split + "\" contradicts the splitting of " + std::to_string(key.p) +
                 " in Q(sqrt(-" + std::to_string(d) + "))");
      if (key.p == 3) fail(path, awhere, "eigenvalue key sits at the prime above 3");
      if (key.norm() >= 50) fail(path, awhere, "eigenvalue key norm must be < 50");
      for (const auto& [k, unused] : rec.eigenvalues)
        if (k == key) fail(path, awhere, "duplicate eigenvalue key " + key.label());
      std::vector<BigRat> coords;
      const json& jv = ja.at("value");
      if (!jv.is_array()) fail(path, awhere, "\"value\" must be an array of coordinates");
      for (const json& c : jv) coords.push_back(coord_from_json(c, path, awhere + ".value"));
      if (static_cast<int>(coords.size()) != field.degree())
        fail(path, awhere, "coordinate count differs from the Hecke field degree");
      rec.eigenvalues.emplace_back(key, std::move(coords));
    }

    if (jf.contains("curves_at_lambda")) {
      std::vector<bool> flags;
      for (const json& jc : jf.at("curves_at_lambda"))
        flags.push_back(jc.at("pot_good").get<bool>());
      rec.curves_pot_good_at_lambda = std::move(flags);
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<LevelTag> fixture_empty_levels(const std::string& path) {
  json top = parse_file(path);
  std::vector<LevelTag> out;
  if (top.contains("empty_levels"))
    for (const json& t : top.at("empty_levels"))
      out.push_back(level_tag_from_name(t.get<std::string>()));
  return out;
}

std::map<std::string, BigInt> load_torsion_primes(const std::string& path, long d) {
  json top = parse_file(path);
  if (!top.contains("torsion_primes")) fail(path, "top level", "missing \"torsion_primes\"");
  const json& jt = top.at("torsion_primes");
  std::string key = std::to_string(d);
  if (!jt.contains(key)) fail(path, "torsion_primes", "no entry for d = " + key);
  std::map<std::string, BigInt> out;
  for (auto it = jt.at(key).begin(); it != jt.at(key).end(); ++it)
    out[it.key()] = bigint_from_json(it.value(), path, "torsion_primes." + key);
  return out;
}

namespace {

json rat_json(const BigRat& r) { return rat_to_string(r); }
json bigint_json(const BigInt& n) { return n.get_str(); }

}  // namespace

PipelineResult run_pipeline(const PipelineConfig& config) {
  auto t0 = std::chrono::steady_clock::now();
  static const std::vector<long> supported = {7, 19, 43, 67};
  if (std::find(supported.begin(), supported.end(), config.d) == supported.end() &&
      !config.experimental)
    throw std::invalid_argument("d = " + std::to_string(config.d) +
                                " is outside the supported set; pass the experimental flag");
  FieldCtx::make(config.d);  // validates d

  std::string fixture = config.fixture_path.empty()
                            ? default_data_path("newforms_d" + std::to_string(config.d) + ".json")
                            : config.fixture_path;
  std::vector<NewformRecord> records = load_newforms(fixture);
  for (const NewformRecord& r : records)
    if (r.field_d != config.d)
      throw std::invalid_argument("fixture " + fixture + " is for d = " + std::to_string(r.field_d));
  std::vector<LevelTag> attested_empty = fixture_empty_levels(fixture);

  std::map<std::string, BigInt> torsion = config.torsion_primes;
  std::string constants;
  if (torsion.empty()) {
    constants = config.constants_path.empty() ? default_data_path("constants.json")
                                              : config.constants_path;
    torsion = load_torsion_primes(constants, config.d);
  }

  BigInt torsion_ell = 0;
  std::vector<FormOutcome> outcomes;
  for (LevelTag level : config.levels) {
    auto it = torsion.find(level_tag_name(level));
    if (it == torsion.end())
      throw std::invalid_argument("no torsion prime configured for level " + level_tag_name(level));
    torsion_ell = std::max(torsion_ell, it->second);
    size_t count = 0;
    for (const NewformRecord& rec : records) {
      if (rec.level != level) continue;
      ++count;
      FormOutcome out;
      out.form_id = rec.id;
      out.level = level;
      out.cf = aggregate_C_f(rec);
      if (!out.cf.survives_all) {
        out.method = EliminationMethod::NormBound;
        out.elimination_prime =
            out.cf.surviving_primes.empty() ? BigInt(1) : out.cf.surviving_primes.back();
      } else {
        try {
          InertiaResult ir = inertia_eliminate(rec, config.inertia_p_threshold);
          out.inertia = ir;
          out.method = ir.eliminated ? EliminationMethod::Inertia : EliminationMethod::None;
          if (ir.eliminated) out.elimination_prime = BigInt(ir.threshold);
        } catch (const NotApplicableError&) {
          out.method = EliminationMethod::None;
        }
      }
      outcomes.push_back(std::move(out));
    }
    if (count == 0) {
      bool attested = std::find(attested_empty.begin(), attested_empty.end(), level) !=
                      attested_empty.end();
      if (!attested)
        throw std::invalid_argument("fixture " + fixture + " has no forms at required level " +
                                    level_tag_name(level) +
                                    " and does not attest emptiness via \"empty_levels\"");
    }
  }

  PipelineResult result;
  result.outcomes = outcomes;
  result.torsion_ell = torsion_ell;
  result.bound = aggregate_bound(outcomes, torsion_ell, true);

  json report;
  report["field_d"] = config.d;
  std::string coeff_b = config.coeff_B == "d" ? std::to_string(config.d) : config.coeff_B;
  report["equation"] = {{"A", config.coeff_A}, {"B", coeff_b}, {"C", config.coeff_C}};
  json levels = json::array();
  for (LevelTag t : config.levels) levels.push_back(level_tag_name(t));
  report["levels"] = levels;
  report["method"] = {{"c_f", "gcd-of-norms"}};
  report["torsion_prime_ell"] = bigint_json(torsion_ell);
  report["structural"] = {{"irreducibility", kIrreducibilityThreshold},
                          {"fake_curve", kFakeCurveThreshold},
                          {"lifting_small", kFakeCurveThreshold}};
  report["inertia_p_threshold"] = config.inertia_p_threshold;
  json jforms = json::array();
  for (const FormOutcome& o : outcomes) {
    json jo;
    jo["id"] = o.form_id;
    jo["level"] = level_tag_name(o.level);
    json jb = json::array();
    for (const auto& [key, n] : o.cf.norms)
      jb.push_back({{"key", key.label()}, {"norm", rat_json(n)}});
    jo["b_fq_norms"] = jb;
    jo["c_f"] = bigint_json(o.cf.c_f);
    if (o.cf.survives_all) {
      jo["surviving_primes"] = "all";
    } else {
      json sp = json::array();
      for (const BigInt& p : o.cf.surviving_primes) sp.push_back(bigint_json(p));
      jo["surviving_primes"] = sp;
    }
    jo["eliminated_by"] = elimination_method_name(o.method);
    if (o.method != EliminationMethod::None) jo["elimination_prime"] = bigint_json(o.elimination_prime);
    if (o.inertia) {
      jo["inertia"] = {{"eliminated", o.inertia->eliminated},
                       {"threshold", o.inertia->threshold},
                       {"conservative_threshold", o.inertia->conservative_threshold}};
    }
    jforms.push_back(jo);
  }
  report["forms"] = jforms;
  report["bounds"] = {{"B_K", bigint_json(result.bound.b_k)},
                      {"conservative_B_K", bigint_json(result.bound.conservative_b_k)}};
  result.report = report;

  auto t1 = std::chrono::steady_clock::now();
  json jconfig;
  jconfig["d"] = config.d;
  jconfig["A"] = config.coeff_A;
  jconfig["B"] = config.coeff_B;
  jconfig["C"] = config.coeff_C;
  jconfig["levels"] = levels;
  jconfig["inertia_p_threshold"] = config.inertia_p_threshold;
  jconfig["n_max"] = config.n_max;
  json jtorsion;
  for (const auto& [name, ell] : torsion) jtorsion[name] = bigint_json(ell);
  jconfig["torsion_primes"] = jtorsion;
  json manifest;
  manifest["config_hash"] = fnv1a_hex(jconfig.dump());
  json checksums;
  checksums["newforms"] = fnv1a_hex(read_file_bytes(fixture));
  if (!constants.empty()) checksums["constants"] = fnv1a_hex(read_file_bytes(constants));
  manifest["fixture_checksums"] = checksums;
  manifest["versions"] = {{"pp3", kVersion}};
  manifest["timing_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  result.manifest = manifest;
  return result;
}

std::string render_report_table(const PipelineResult& result) {
  std::ostringstream os;
  os << "form        level  eliminated_by  C_f / threshold\n";
  for (const FormOutcome& o : result.outcomes) {
    os << o.form_id;
    for (size_t i = o.form_id.size(); i < 12; ++i) os << ' ';
    std::string lv = level_tag_name(o.level);
    os << lv;
    for (size_t i = lv.size(); i < 7; ++i) os << ' ';
    std::string m = elimination_method_name(o.method);
    os << m;
    for (size_t i = m.size(); i < 15; ++i) os << ' ';
    if (o.method == EliminationMethod::Inertia)
      os << "p > " << o.inertia->threshold;
    else
      os << o.cf.c_f.get_str();
    os << "\n";
  }
  os << "torsion ell = " << result.torsion_ell.get_str() << "\n";
  os << "B_K = " << result.bound.b_k.get_str()
     << "  (conservative " << result.bound.conservative_b_k.get_str() << ")\n";
  return os.str();
}

}  // namespace pp3
