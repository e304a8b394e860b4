#include "pp3/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "pp3/frey.hpp"
#include "pp3/pipeline.hpp"
#include "pp3/sunit.hpp"

namespace pp3 {

using nlohmann::json;

namespace {

struct ElementArgs {
  std::string A = "1", B = "1", C = "1", a, b, c;
  long d = 0;
  long p = 0;
};

FreyInstance instance_from_args(const ElementArgs& args) {
  FieldCtx ctx = FieldCtx::make(args.d);
  return FreyInstance::make(QuadElem::parse(ctx, args.A), QuadElem::parse(ctx, args.B),
                            QuadElem::parse(ctx, args.C), QuadElem::parse(ctx, args.a),
                            QuadElem::parse(ctx, args.b), QuadElem::parse(ctx, args.c), args.p);
}

json invariants_json(const CurveInvariants& inv) {
  return json{{"c4", inv.c4.to_string()},
              {"c6", inv.c6.to_string()},
              {"delta", inv.delta.to_string()},
              {"j", inv.j.to_string()}};
}

std::string reduction_name(ReductionType t) {
  switch (t) {
    case ReductionType::Good: return "good";
    case ReductionType::Multiplicative: return "multiplicative";
    case ReductionType::Additive: return "additive";
  }
  return "?";
}

json reduction_json(const ReductionReport& r) {
  json j;
  j["prime"] = r.prime.label();
  j["type"] = reduction_name(r.type);
  j["in_tk"] = r.in_tk;
  j["minimal_after_rescale"] = r.minimal_after_rescale;
  j["v_delta_min"] = r.v_delta_min;
  j["v_c4_min"] = r.v_c4_min;
  j["serre_bound"] = r.serre_bound;
  j["conductor_exponent_candidates"] = r.conductor_exponent_candidates;
  return j;
}

// primes of T_K together with the primes dividing the discriminant
std::vector<PrimeIdeal> relevant_primes(const FreyInstance& inst) {
  std::vector<PrimeIdeal> out = tk_set(inst.A, inst.B, inst.C);
  for (const QuadElem* e : {&inst.a, &inst.b}) {
    if (e->is_unit()) continue;
    for (auto& [P, v] : factor_principal(*e).factors)
      if (v > 0 && !ideal_set_contains(out, P)) out.push_back(P);
  }
  std::sort(out.begin(), out.end(), [](const PrimeIdeal& x, const PrimeIdeal& y) {
    return std::pair(x.p, x.conj_index) < std::pair(y.p, y.conj_index);
  });
  return out;
}

int cmd_field_info(long d, bool as_json) {
  FieldCtx ctx = FieldCtx::make(d);
  long h = class_number(ctx);
  auto s3 = sk_set(ctx);
  json out;
  out["d"] = d;
  out["disc"] = ctx.disc;
  out["omega"] = ctx.omega_description();
  out["class_number"] = h;
  out["cl3_trivial"] = (h % 3 != 0);
  std::string kind3 = s3.size() == 2 ? "split" : (s3[0].kind == SplitKind::Inert ? "inert" : "ramified");
  out["splitting_of_3"] = kind3;
  json primes = json::array();
  for (const PrimeIdeal& P : s3) primes.push_back(P.label());
  out["primes_above_3"] = primes;
  if (as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "K = Q(sqrt(-" << d << ")), disc " << ctx.disc << ", " << ctx.omega_description()
              << "\n"
              << "h_K = " << h << " (3-torsion-free class group: " << (h % 3 != 0 ? "yes" : "no")
              << ")\n"
              << "3 is " << kind3 << "; primes above 3:";
    for (const PrimeIdeal& P : s3) std::cout << " " << P.label();
    std::cout << "\n";
  }
  return 0;
}

int cmd_frey(const ElementArgs& args, bool as_json, const std::string& only_prime) {
  FreyInstance inst = instance_from_args(args);
  CurveInvariants closed = invariants_closed_form(inst);
  CurveInvariants model = invariants_from_model(frey_model(inst));
  bool agree = closed.c4 == model.c4 && closed.c6 == model.c6 && closed.delta == model.delta;
  json out;
  out["primitive"] = inst.primitive;
  out["closed_form"] = invariants_json(closed);
  out["from_model"] = invariants_json(model);
  out["routes_agree"] = agree;
  json reds = json::array();
  for (const PrimeIdeal& P : relevant_primes(inst)) {
    if (!only_prime.empty() && P.label().find("(" + only_prime + ",") == std::string::npos &&
        P.label() != "(" + only_prime + ")")
      continue;
    reds.push_back(reduction_json(reduction_type(inst, P)));
  }
  out["reduction"] = reds;
  if (as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "c4    = " << closed.c4.to_string() << "\n"
              << "c6    = " << closed.c6.to_string() << "\n"
              << "delta = " << closed.delta.to_string() << "\n"
              << "j     = " << closed.j.to_string() << "\n"
              << "model route agrees: " << (agree ? "yes" : "NO") << "\n";
    for (const json& r : reds)
      std::cout << r.at("prime").get<std::string>() << ": " << r.at("type").get<std::string>()
                << (r.at("in_tk").get<bool>() ? " [in T_K]" : "") << "\n";
  }
  return agree ? 0 : 1;
}

int cmd_sunit_solve(long d, long n_max, bool as_json) {
  FieldCtx ctx = FieldCtx::make(d);
  auto sols = solve_alpha_plus_one(ctx, n_max);
  json out = json::array();
  for (const SUnitSolution& s : sols)
    out.push_back({{"sign", s.sign},
                   {"n", s.n},
                   {"alpha", rat_to_string(s.alpha())},
                   {"gamma", s.gamma.to_string()}});
  if (as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    for (const json& s : out)
      std::cout << "alpha = " << s.at("alpha").get<std::string>()
                << ", gamma = " << s.at("gamma").get<std::string>() << "\n";
  }
  return 0;
}

int cmd_sunit_check_tk(long d, const std::string& pairs_path) {
  FieldCtx ctx = FieldCtx::make(d);
  std::ifstream in(pairs_path);
  if (!in) throw std::invalid_argument("cannot open " + pairs_path);
  json jp = json::parse(in);
  std::vector<std::pair<QuadElem, QuadElem>> pairs;
  for (const json& e : jp) {
    std::string sa, sb;
    if (e.is_array() && e.size() == 2) {
      sa = e.at(0).get<std::string>();
      sb = e.at(1).get<std::string>();
    } else if (e.is_object()) {
      sa = e.at("alpha").get<std::string>();
      sb = e.at("beta").get<std::string>();
    } else {
      throw std::invalid_argument("pairs entries must be [alpha, beta] or {alpha, beta}");
    }
    pairs.emplace_back(QuadElem::parse(ctx, sa), QuadElem::parse(ctx, sb));
  }
  auto s3 = sk_set(ctx);
  bool ok = tk_condition(pairs, s3, s3);
  std::cout << (ok ? "condition holds" : "condition fails") << "\n";
  return ok ? 0 : 1;
}

int cmd_trace_set(long norm) {
  auto A = trace_set_A(BigInt(norm));
  for (size_t i = 0; i < A.size(); ++i) std::cout << (i ? " " : "") << A[i].get_str();
  std::cout << "\n";
  return 0;
}

int cmd_eliminate_run(PipelineConfig config, const std::string& manifest_path) {
  PipelineResult result = run_pipeline(config);
  if (config.format == PipelineConfig::Format::Json)
    std::cout << result.report.dump(2) << "\n";
  else
    std::cout << render_report_table(result);
  if (!manifest_path.empty()) {
    std::ofstream out(manifest_path);
    out << result.manifest.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int cli_dispatch(int argc, const char* const* argv) {
  CLI::App app{"exact arithmetic for the generalized Fermat equation of signature (p,p,3) over "
               "imaginary quadratic fields"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON instead of text");

  auto* field = app.add_subcommand("field", "field-level data");
  auto* field_info = field->add_subcommand("info", "discriminant, class number, splitting of 3");
  long d = 7;
  field_info->add_option("--d", d, "square-free field parameter")->required();

  auto* frey = app.add_subcommand("frey", "Frey curve computations");
  ElementArgs fa;
  auto add_instance_opts = [&](CLI::App* cmd) {
    cmd->add_option("--d", fa.d)->required();
    cmd->add_option("--A", fa.A);
    cmd->add_option("--B", fa.B);
    cmd->add_option("--C", fa.C);
    cmd->add_option("--a", fa.a)->required();
    cmd->add_option("--b", fa.b)->required();
    cmd->add_option("--c", fa.c)->required();
    cmd->add_option("--p", fa.p)->required();
  };
  auto* frey_inv = frey->add_subcommand("invariants", "c4, c6, delta, j by both routes");
  add_instance_opts(frey_inv);
  auto* frey_red = frey->add_subcommand("reduction", "reduction reports at the relevant primes");
  add_instance_opts(frey_red);
  std::string only_prime;
  frey_red->add_option("--q", only_prime, "restrict to primes above this rational prime");

  auto* sunit = app.add_subcommand("sunit", "unit equation machinery");
  auto* sunit_solve = sunit->add_subcommand("solve", "solve alpha + 1 = gamma^3 over O_K[1/3]");
  long sd = 7, n_max = 50;
  sunit_solve->add_option("--d", sd)->required();
  sunit_solve->add_option("--nmax", n_max);
  auto* sunit_tk = sunit->add_subcommand("check-tk", "check the valuation condition for pairs");
  long td = 7;
  std::string pairs_path;
  sunit_tk->add_option("--d", td)->required();
  sunit_tk->add_option("--pairs", pairs_path, "JSON file of [alpha, beta] pairs")->required();

  auto* elim = app.add_subcommand("eliminate", "newform elimination pipeline");
  auto* elim_run = elim->add_subcommand("run", "run the full bound pipeline");
  PipelineConfig config;
  std::string format = "json", manifest_path;
  elim_run->add_option("--d", config.d)->required();
  elim_run->add_option("--fixtures", config.fixture_path, "newform fixture JSON");
  elim_run->add_option("--constants", config.constants_path, "torsion constants JSON");
  elim_run->add_option("--inertia-threshold", config.inertia_p_threshold,
                       "exponent threshold reported for inertia elimination");
  elim_run->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));
  elim_run->add_option("--manifest", manifest_path, "write the run manifest here");
  elim_run->add_flag("--experimental", config.experimental, "allow unsupported d");
  auto* elim_trace = elim->add_subcommand("trace-set", "allowed Frobenius traces at a given norm");
  long norm = 0;
  elim_trace->add_option("--norm", norm)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (field_info->parsed()) return cmd_field_info(d, as_json);
    if (frey_inv->parsed()) return cmd_frey(fa, as_json, "");
    if (frey_red->parsed()) return cmd_frey(fa, as_json, only_prime);
    if (sunit_solve->parsed()) return cmd_sunit_solve(sd, n_max, as_json);
    if (sunit_tk->parsed()) return cmd_sunit_check_tk(td, pairs_path);
    if (elim_run->parsed()) {
      config.format = format == "table" ? PipelineConfig::Format::Table
                                        : PipelineConfig::Format::Json;
      return cmd_eliminate_run(config, manifest_path);
    }
    if (elim_trace->parsed()) return cmd_trace_set(norm);
    std::cerr << "no subcommand given\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace pp3
