#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "leonard_lab/errors.hpp"
#include "leonard_lab/json_io.hpp"
#include "leonard_lab/leonard.hpp"
#include "leonard_lab/params.hpp"
#include "leonard_lab/racah.hpp"
#include "leonard_lab/representation.hpp"
#include "leonard_lab/sl2_module.hpp"

namespace leonard_lab::cli {

namespace {

struct RunConfig {
  int d = 0;
  std::string r = "0";
  std::string s = "0";
  std::optional<std::string> lambda;
  bool exhaustive = false;
  std::string format = "json";
  std::string output;

  int kind = 0;
  int n = 1;
  int big_d = 1;

  int d_min = 1;
  int d_max = 6;
  std::vector<std::string> r_values{"-3/4", "-1/2", "-1/4", "1/4", "1/2", "3/4", "1", "2"};
  std::vector<std::string> s_values{"-3/4", "-1/2", "-1/4", "1/4", "1/2", "3/4", "1", "2"};
  std::string s_mode = "list";
  std::string lambda_mode = "canonical";
  std::vector<std::string> lambdas;
  bool hits_only = false;
  bool r_values_given = false;
};

std::vector<Rational> parse_all(const std::vector<std::string>& texts) {
  std::vector<Rational> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(Rational::parse(t));
  return out;
}

Json checks_object(const std::vector<std::pair<std::string, bool>>& checks, bool& all) {
  Json out = Json::object();
  all = true;
  for (const auto& [name, ok] : checks) {
    out[name] = ok;
    all = all && ok;
  }
  return out;
}

// Two routes to the same verdict disagreeing is a bug, never a property of the input.
bool self_consistent(const LeonardPairReport& report) {
  return report.exhaustive_agrees.value_or(true) && report.condition("reorder_conditions_match_candidates").value_or(true);
}

int cmd_params(const RunConfig& cfg, std::ostream& out) {
  const DualHahnParams p = build_params(cfg.d, Rational::parse(cfg.r), Rational::parse(cfg.s));
  Json j = to_json(p);
  const bool closed = check_closed_forms(p);
  j["closedFormsHold"] = closed;
  out << j.dump(2) << '\n';
  return closed ? kExitOk : kExitInconsistent;
}

int cmd_table(const RunConfig& cfg, std::ostream& out) {
  const DualHahnParams p = build_params(cfg.d, Rational::parse(cfg.r), Rational::parse(cfg.s));
  const ValueTable u = eval_table_hypergeometric(p);
  const bool agrees = exactly_equal(u.values, eval_table_recurrence(p).values);
  if (cfg.format == "csv") {
    write_value_table_csv(out, p, u);
  } else {
    Json j{{"d", p.d},
           {"r", to_json(p.r)},
           {"s", to_json(p.s)},
           {"nodes", to_json(p.theta)},
           {"values", to_json(u.values)},
           {"recurrenceAgrees", agrees}};
    out << j.dump(2) << '\n';
  }
  return agrees ? kExitOk : kExitInconsistent;
}

int cmd_verify_lp(const RunConfig& cfg, std::ostream& out) {
  const DualHahnParams p = build_params(cfg.d, Rational::parse(cfg.r), Rational::parse(cfg.s));
  const Rational lambda = cfg.lambda ? Rational::parse(*cfg.lambda) : canonical_lambda(p);
  const LeonardPairReport report = verify_leonard_pair_square(p, lambda, cfg.exhaustive);
  out << report_to_json(p, report).dump(2) << '\n';
  return self_consistent(report) ? kExitOk : kExitInconsistent;
}

int cmd_verify_racah(const RunConfig& cfg, std::ostream& out) {
  const Rational r = Rational::parse(cfg.r);
  const RacahParams q = build_racah_params(cfg.d, r);
  const DualHahnParams p = build_params(cfg.d, r, -r);
  const ValueTable u = eval_table_hypergeometric(p);
  const ValueTable v = eval_table_4F3(q);
  const ValueTable w = eval_table_varphi_sum(q);

  const AffineMaps maps = affine_maps(cfg.d, r);
  bool textbook = true;
  for (int j = 0; j <= cfg.d; ++j) {
    const Rational x(j);
    textbook = textbook && leonard_lab::apply(maps.racah, standard_racah_node(cfg.d, r, x)) == q.bar_theta(j) &&
               leonard_lab::apply(maps.dual_hahn, standard_dual_hahn_node(cfg.d, r, -r, x)) == p.theta(j);
    for (int i = 0; i <= cfg.d; ++i) {
      textbook = textbook && standard_racah_eval(cfg.d, r, i, x) == v(i, j);
    }
  }

  bool all = true;
  Json checks = checks_object(
      {
          {"indexMapping", check_index_mapping(p, q)},
          {"unbarredIdentities", check_unbarred_identities(p, q)},
          {"starredProducts", check_starred_products(p, q)},
          {"varphiQuotient", check_varphi_quotient(q)},
          {"table4F3MatchesDualHahn", check_4F3_matches_dual_hahn(v, u)},
          {"varphiSumMatches4F3", exactly_equal(v.values, w.values)},
          {"barredRecurrence", check_barred_recurrence(q, v)},
          {"barredOrthogonality", check_racah_orthogonality(p, q, v)},
          {"barredMatrices", check_barred_matrices(p, q)},
          {"textbookNormalization", textbook},
      },
      all);
  Json j{{"d", q.d}, {"r", to_json(r)}, {"s", to_json(-r)}, {"checks", std::move(checks)},
         {"allHold", all}, {"params", to_json(q)}};
  out << j.dump(2) << '\n';
  return all ? kExitOk : kExitInconsistent;
}

int cmd_verify_sl2(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n % 2 == 0) throw ParameterDomainError("verify-sl2: n must be odd");
  const EvenModule m = build_even_module(cfg.kind, cfg.n);
  const auto [first, second] = example_pair(cfg.kind, cfg.n);
  const DualHahnParams p = example_params(cfg.kind, cfg.n);
  const bool relations = check_module_relations(m);
  const bool match = verify_example_match(cfg.kind, cfg.n);
  Json j{{"kind", cfg.kind},
         {"n", cfg.n},
         {"module", to_json(m)},
         {"examplePair", {{"L", to_json(first)}, {"LStar", to_json(second)}}},
         {"dualHahn", {{"d", p.d}, {"r", to_json(p.r)}, {"s", to_json(p.s)}}},
         {"relations", relations},
         {"match", match}};
  out << j.dump(2) << '\n';
  return relations && match ? kExitOk : kExitInconsistent;
}

int cmd_search(const RunConfig& cfg, std::ostream& out) {
  if (cfg.d_min < 0 || cfg.d_max < cfg.d_min) throw ParameterDomainError("search: need 0 <= d-min <= d-max");
  SearchGrid grid;
  grid.s_mode = cfg.s_mode == "negate" ? SMode::kNegateR : SMode::kList;
  for (int d = cfg.d_min; d <= cfg.d_max; ++d) grid.ds.push_back(d);
  grid.rs = parse_all(cfg.r_values);
  if (grid.s_mode == SMode::kNegateR && !cfg.r_values_given) {
    // s = -r must stay above -1, so the default list drops r >= 1.
    std::erase_if(grid.rs, [](const Rational& r) { return r >= Rational(1); });
  }
  grid.ss = parse_all(cfg.s_values);
  grid.lambda_mode = cfg.lambda_mode == "list" ? LambdaMode::kList : LambdaMode::kCanonical;
  grid.lambdas = parse_all(cfg.lambdas);
  grid.exhaustive = cfg.exhaustive;
  if (grid.lambda_mode == LambdaMode::kList && grid.lambdas.empty()) {
    throw CLI::ValidationError("--lambdas", "required with --lambda-mode list");
  }

  bool consistent = true;
  for (const SearchRecord& rec : scan_grid(grid)) {
    consistent = consistent && self_consistent(rec.report);
    if (cfg.hits_only && !rec.report.verdict) continue;
    out << to_json(rec).dump() << '\n';
  }
  return consistent ? kExitOk : kExitInconsistent;
}

int cmd_catalog(const RunConfig& cfg, std::ostream& out) {
  const std::vector<CatalogEntry> entries = terwilliger_catalog(cfg.big_d);
  Json arr = Json::array();
  bool all = true;
  for (const auto& e : entries) {
    Json j = to_json(e);
    if (cfg.big_d % 2 == 1) {
      const bool ok = check_catalog_entry(cfg.big_d, e);
      all = all && ok;
      j["matchesExample"] = ok;
    } else {
      j["matchesExample"] = nullptr;
    }
    arr.push_back(std::move(j));
  }
  out << arr.dump(2) << '\n';
  return all ? kExitOk : kExitInconsistent;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact verification of dual Hahn / Racah Leonard-pair identities"};
  app.name(args.empty() ? "leonard-lab" : args.front());
  app.require_subcommand(1);

  auto add_drs = [&cfg](CLI::App* sub, bool with_s) {
    sub->add_option("--d", cfg.d, "diameter d >= 0")->required();
    sub->add_option("--r", cfg.r, "rational r > -1, as p/q")->required();
    if (with_s) sub->add_option("--s", cfg.s, "rational s > -1, as p/q")->required();
  };
  auto add_output = [&cfg](CLI::App* sub) { sub->add_option("--output,-o", cfg.output, "write to file"); };

  auto* params = app.add_subcommand("params", "dual Hahn parameter array");
  add_drs(params, true);
  add_output(params);

  auto* table = app.add_subcommand("table", "value table u_i(theta_j)");
  add_drs(table, true);
  table->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv"}));
  add_output(table);

  auto* verify_lp = app.add_subcommand("verify-lp", "is L, (L* + lambda)^2 a Leonard pair");
  add_drs(verify_lp, true);
  verify_lp->add_option("--lambda", cfg.lambda, "shift, default (r-d)/2");
  verify_lp->add_flag("--exhaustive", cfg.exhaustive, "also scan every ordering (d <= 8)");
  add_output(verify_lp);

  auto* verify_racah = app.add_subcommand("verify-racah", "Racah identification with s = -r");
  add_drs(verify_racah, false);
  add_output(verify_racah);

  auto* verify_sl2 = app.add_subcommand("verify-sl2", "sl2 even-subalgebra module example");
  verify_sl2->add_option("--kind", cfg.kind)->required()->check(CLI::IsMember({0, 1}));
  verify_sl2->add_option("--n", cfg.n)->required();
  add_output(verify_sl2);

  auto* search = app.add_subcommand("search", "grid scan, one JSON line per point");
  search->add_option("--d-min", cfg.d_min);
  search->add_option("--d-max", cfg.d_max);
  search->add_option("--r-values", cfg.r_values)->delimiter(',');
  search->add_option("--s-values", cfg.s_values)->delimiter(',');
  search->add_option("--s-mode", cfg.s_mode)->check(CLI::IsMember({"list", "negate"}));
  search->add_option("--lambda-mode", cfg.lambda_mode)->check(CLI::IsMember({"canonical", "list"}));
  search->add_option("--lambdas", cfg.lambdas)->delimiter(',');
  search->add_flag("--exhaustive", cfg.exhaustive);
  search->add_flag("--hits-only", cfg.hits_only);
  add_output(search);

  auto* catalog = app.add_subcommand("catalog", "Terwilliger modules of the halved D-cube");
  catalog->add_option("--D", cfg.big_d)->required();
  add_output(catalog);

  const std::vector<std::pair<CLI::App*, std::function<int(const RunConfig&, std::ostream&)>>> dispatch{
      {params, cmd_params},         {table, cmd_table},   {verify_lp, cmd_verify_lp},
      {verify_racah, cmd_verify_racah}, {verify_sl2, cmd_verify_sl2}, {search, cmd_search},
      {catalog, cmd_catalog},
  };

  try {
    std::vector<std::string> rest(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    app.parse(rest);
    cfg.r_values_given = search->count("--r-values") > 0;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    for (const auto& [sub, fn] : dispatch) {
      if (!sub->parsed()) continue;
      if (cfg.output.empty()) return fn(cfg, out);
      std::ostringstream buffer;
      const int code = fn(cfg, buffer);
      std::ofstream file(cfg.output);
      if (!file) {
        err << "cannot open " << cfg.output << '\n';
        return kExitUsage;
      }
      file << buffer.str();
      return code;
    }
  } catch (const CLI::ValidationError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const RationalParseError& e) {
    err << "usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParameterDomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::domain_error& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return kExitInconsistent;
  }
  return kExitUsage;
}

}  // namespace leonard_lab::cli
