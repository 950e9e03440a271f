#include "barth/cli.hpp"

#include "barth/census.hpp"
#include "barth/dsl.hpp"
#include "barth/errors.hpp"
#include "barth/normality.hpp"
#include "barth/secants.hpp"
#include "barth/verify.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>
#include <spdlog/cfg/env.h>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

namespace barth {

namespace {

using Json = nlohmann::ordered_json;

enum class OutputFormat { text, json };

struct Report {
  explicit Report(std::string name) : command(std::move(name)) {}

  std::string command;
  Json inputs = Json::object();
  Json values = Json::object();
  Json flags = Json::object();
  Json citations = Json::array();
  // Ordered (key, value) pairs for the text rendering.
  std::vector<std::pair<std::string, std::string>> text;

  void add(const std::string& key, const std::string& value) { text.emplace_back(key, value); }
};

void emit(const Report& r, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::json) {
    Json j;
    j["command"] = r.command;
    j["inputs"] = r.inputs;
    j["values"] = r.values;
    j["flags"] = r.flags;
    j["citations"] = r.citations;
    out << j.dump(2) << '\n';
    return;
  }
  for (const auto& [k, v] : r.text)
    out << k << ": " << v << '\n';
}

Json string_array(const std::vector<Integer>& xs) {
  auto arr = Json::array();
  for (const auto& x : xs)
    arr.push_back(x.get_str());
  return arr;
}

std::string joined(const std::vector<Integer>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i)
    s += (i == 0 ? "" : " ") + xs[i].get_str();
  return s;
}

Json verdict_json(const Verdict& v) {
  Json j;
  j["outcome"] = std::string(to_string(v.outcome));
  j["citation"] = v.citation;
  auto hyps = Json::array();
  for (const auto& h : v.hypotheses) {
    hyps.push_back({{"name", h.name},
                    {"condition", h.condition},
                    {"lhs", to_string(h.lhs)},
                    {"rhs", to_string(h.rhs)},
                    {"satisfied", h.satisfied},
                    {"gate", h.gate}});
  }
  j["hypotheses"] = hyps;
  return j;
}

void add_verdict_text(Report& r, const Verdict& v) {
  r.add("criterion", v.citation);
  r.add("outcome", std::string(to_string(v.outcome)));
  for (const auto& h : v.hypotheses)
    r.add("hypothesis " + h.name,
          fmt::format("{} [lhs={} rhs={}] {}{}", h.condition, to_string(h.lhs), to_string(h.rhs),
                      h.satisfied ? "satisfied" : "unmet", h.gate ? " (gate)" : ""));
}

struct ParsedExpr {
  std::string source;
  BundleExpr expr;
  Elaborated value;
};

ParsedExpr load_expr(const std::string& src, int n) {
  BundleExpr e = parse_bundle(src);
  Elaborated v = elaborate(e, n);
  return {src, std::move(e), std::move(v)};
}

void describe_input(Report& r, const ParsedExpr& p, int n) {
  r.inputs["n"] = n;
  r.inputs["expr"] = print(p.expr);
  r.add("expression", print(p.expr));
  r.add("ambient", fmt::format("P^{}", n));
}

int cmd_chern(int n, const std::string& src, OutputFormat fmt_, std::ostream& out) {
  const ParsedExpr p = load_expr(src, n);
  Report r{"chern"};
  describe_input(r, p, n);
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, BundleSpec>) {
          r.values["rank"] = x.rank();
          r.values["total_chern"] = to_string(x.total_chern());
          auto coeffs = Json::array();
          for (const auto& c : x.total_chern().coeffs())
            coeffs.push_back(to_string(c));
          r.values["coefficients"] = coeffs;
          r.add("rank", std::to_string(x.rank()));
          r.add("total_chern", to_string(x.total_chern()));
        } else {
          r.values["codim"] = x.codim();
          r.values["degree"] = x.degree().get_str();
          r.values["total_chern"] = to_string(x.total_chern());
          r.values["coefficients"] = string_array(x.c());
          r.flags["d_consistent"] = x.degree_consistent();
          r.add("codim", std::to_string(x.codim()));
          r.add("degree", x.degree().get_str());
          r.add("total_chern", to_string(x.total_chern()));
          r.add("d_consistent", x.degree_consistent() ? "yes" : "no (forensic override)");
        }
      },
      p.value);
  emit(r, fmt_, out);
  return exit_ok;
}

int cmd_secants(int n, int j, const std::string& src, OutputFormat fmt_, std::ostream& out) {
  const ParsedExpr p = load_expr(src, n);
  const ChernData data = chern_data(p.value);
  const SecantDegree sd = multisecant_degree(data, j);
  std::vector<Integer> twists;
  for (long i = 0; i <= j; ++i)
    twists.push_back(top_chern_twisted(data, -i));

  Report r{"secants"};
  describe_input(r, p, n);
  r.inputs["j"] = j;
  r.values["top_twists"] = string_array(twists);
  r.values["secant_degree"] = to_string(sd.value);
  r.flags["degenerate"] = sd.degenerate;
  r.flags["non_integral"] = sd.non_integral;
  r.citations.push_back("multisecant-product-formula");
  r.add("j", std::to_string(j));
  r.add("top_twists", joined(twists));
  r.add("secant_degree", to_string(sd.value));
  std::vector<std::string> caveats;
  if (sd.degenerate)
    caveats.emplace_back("degenerate (zero class: no secants or smaller-than-expected locus)");
  if (sd.non_integral)
    caveats.emplace_back("non-integral (virtual count; inputs not geometric)");
  r.add("caveats", caveats.empty() ? "none" : fmt::format("{}", fmt::join(caveats, "; ")));
  emit(r, fmt_, out);
  return exit_ok;
}

int cmd_trisecant(int n, const std::string& src, OutputFormat fmt_, std::ostream& out) {
  const ParsedExpr p = load_expr(src, n);
  const ChernVector cv = as_normal_data(p.value);
  const Rational closed = trisecant_closed(cv);
  const Rational sum = trisecant_double_sum(cv);
  const Rational b_term = goettsche_b_term(cv);
  const Rational b_eq4 = goettsche_b_eq4(cv);
  const Rational c_eq5 = goettsche_c_eq5(cv);
  const bool c_defined = 2 * cv.codim() - 2 <= n;

  Report r{"trisecant"};
  describe_input(r, p, n);
  r.values["closed"] = to_string(closed);
  r.values["double_sum"] = to_string(sum);
  r.values["b_triple_sum"] = to_string(b_term);
  r.values["b_double_sum"] = to_string(b_eq4);
  r.values["c_term"] = c_defined ? Json(to_string(goettsche_c_term(cv))) : Json(nullptr);
  r.values["c_closed"] = to_string(c_eq5);
  r.values["a_derived"] = to_string(goettsche_a_derived(cv));
  r.flags["equal"] = closed == sum;
  r.flags["d_consistent"] = cv.degree_consistent();
  r.citations.push_back("trisecant-closed-form");
  r.add("closed", to_string(closed));
  r.add("double_sum", to_string(sum));
  r.add("equal", closed == sum ? "yes" : "NO");
  r.add("b_triple_sum", to_string(b_term));
  r.add("b_double_sum", to_string(b_eq4));
  r.add("c_term", c_defined ? to_string(goettsche_c_term(cv)) : "n/a (2r-2 > n)");
  r.add("c_closed", to_string(c_eq5));
  r.add("a_derived", to_string(goettsche_a_derived(cv)));
  emit(r, fmt_, out);
  return closed == sum ? exit_ok : exit_suite_failure;
}

int cmd_normality(int n, int j, const std::string& src, OutputFormat fmt_, std::ostream& out) {
  const ParsedExpr p = load_expr(src, n);
  Verdict v;
  if (const auto* e = std::get_if<BundleSpec>(&p.value)) {
    v = check_jnormal_bundle(*e, j);
  } else {
    const auto& cv = std::get<ChernVector>(p.value);
    if (j == 1)
      v = check_linear_normality_zak(n, cv.codim());
    else if (j == 2)
      v = check_2normal(n - cv.codim(), cv.codim(), cv);
    else
      throw DomainError("abstract normal data supports j = 1 (linear) and j = 2 (quadratic) only");
  }
  Report r{"normality"};
  describe_input(r, p, n);
  r.inputs["j"] = j;
  r.values["verdict"] = verdict_json(v);
  r.flags["holds"] = v.outcome == Outcome::holds;
  r.citations.push_back(v.citation);
  r.add("j", std::to_string(j));
  add_verdict_text(r, v);
  emit(r, fmt_, out);
  return exit_ok;
}

int cmd_segre(int n, int k, const std::string& src, OutputFormat fmt_, std::ostream& out) {
  const ParsedExpr p = load_expr(src, n);
  const ChernVector cv = as_normal_data(p.value);
  const Integer sigma = segre_coefficient(cv, k);
  Report r{"segre"};
  describe_input(r, p, n);
  r.inputs["k"] = k;
  r.values["sigma"] = sigma.get_str();
  r.citations.push_back("segre-from-normal-chern");
  r.add("k", std::to_string(k));
  r.add("sigma", sigma.get_str());
  emit(r, fmt_, out);
  return exit_ok;
}

int cmd_verify(const std::string& suite, long trials, std::uint64_t seed, OutputFormat fmt_,
               std::ostream& out) {
  const SuiteReport rep = run_suite(suite, trials, seed);
  if (fmt_ == OutputFormat::json) {
    Report r{"verify"};
    r.inputs = {{"suite", suite}, {"trials", trials}, {"seed", seed}};
    r.values["lines"] = rep.lines;
    r.flags["passed"] = rep.passed;
    emit(r, fmt_, out);
  } else {
    for (const auto& line : rep.lines)
      out << line << '\n';
  }
  return rep.passed ? exit_ok : exit_suite_failure;
}

std::pair<long, long> parse_range(const std::string& text, const std::string& flag) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const long v = std::stol(text);
      return {v, v};
    }
    return {std::stol(text.substr(0, dots)), std::stol(text.substr(dots + 2))};
  } catch (const std::logic_error&) {
    throw InputError(fmt::format("{} expects lo..hi, got '{}'", flag, text));
  }
}

CensusFormat census_format(const std::string& s) {
  return s == "json" ? CensusFormat::json : CensusFormat::csv;
}

int cmd_census(long r, const std::string& degrees, const std::string& ns, long j,
               const std::string& path, const std::string& format, std::ostream& out) {
  const auto [dlo, dhi] = parse_range(degrees, "--degrees");
  const auto [nlo, nhi] = parse_range(ns, "--n");
  const auto rows = run_census({r, dlo, dhi, nlo, nhi, j});
  std::ofstream file(path, std::ios::binary);
  if (!file)
    throw InputError(fmt::format("cannot open '{}' for writing", path));
  write_census(rows, census_format(format), file);
  out << fmt::format("wrote {} rows to {}\n", rows.size(), path);
  return exit_ok;
}

int cmd_recheck(const std::string& path, const std::string& format, std::ostream& out) {
  std::ifstream file(path, std::ios::binary);
  if (!file)
    throw InputError(fmt::format("cannot open '{}'", path));
  const RecheckResult res = recheck_census(file, census_format(format));
  for (const auto& m : res.mismatches)
    out << "mismatch: " << m << '\n';
  out << fmt::format("rows: {} mismatches: {}\n", res.rows, res.mismatches.size());
  return res.ok() ? exit_ok : exit_suite_failure;
}

} // namespace

void init_logging() {
  auto logger = spdlog::stderr_logger_mt("barth");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  spdlog::cfg::load_env_levels();
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact intersection-theoretic invariants of small-codimension subvarieties of "
               "projective space",
               "barth"};
  app.require_subcommand(1);

  std::string format = "text";
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  int n = 0, j = 0, k = 0;
  std::string expr;

  auto* chern = app.add_subcommand("chern", "Print the total Chern class of a bundle expression");
  chern->add_option("--n", n, "Ambient dimension")->required()->check(CLI::NonNegativeNumber);
  chern->add_option("expr", expr, "Bundle expression")->required();
  add_format(chern);

  auto* secants = app.add_subcommand("secants", "Degree of (j+1)-secant lines through a point");
  secants->add_option("--n", n, "Ambient dimension")->required();
  secants->add_option("--j", j, "Secant order (j+1 points)")->required();
  secants->add_option("expr", expr, "Bundle or N{...} expression")->required();
  add_format(secants);

  auto* trisecant = app.add_subcommand("trisecant", "Trisecant closed form and expansions");
  trisecant->add_option("--n", n, "Ambient dimension")->required();
  trisecant->add_option("expr", expr, "N{...} or bundle expression")->required();
  add_format(trisecant);

  auto* normality = app.add_subcommand("normality", "Evaluate a normality criterion");
  normality->add_option("--n", n, "Ambient dimension")->required();
  normality->add_option("--j", j, "Degree of normality")->required();
  normality->add_option("expr", expr, "Bundle or N{...} expression")->required();
  add_format(normality);

  auto* segre = app.add_subcommand("segre", "Segre coefficient sigma_k");
  segre->add_option("--n", n, "Ambient dimension")->required();
  segre->add_option("--k", k, "Degree")->required();
  segre->add_option("expr", expr, "N{...} or bundle expression")->required();
  add_format(segre);

  std::string suite;
  long trials = 100;
  std::uint64_t seed = 0;
  auto* verify = app.add_subcommand("verify", "Run a named invariant suite");
  verify->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--trials", trials, "Random trials")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", seed, "Seed");
  add_format(verify);

  long census_r = 0, census_j = 1;
  std::string degrees, ns, path, census_fmt = "csv";
  auto* census = app.add_subcommand("census", "Enumerate complete intersections");
  census->add_option("--r", census_r, "Codimension")->required();
  census->add_option("--degrees", degrees, "Degree range lo..hi")->required();
  census->add_option("--n", ns, "Ambient dimension range lo..hi")->required();
  census->add_option("--j", census_j, "Secant/normality order")->required();
  census->add_option("--out", path, "Output file")->required();
  census->add_option("--format", census_fmt, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* recheck = app.add_subcommand("recheck", "Recompute every row of a census file");
  recheck->add_option("--in", path, "Census file")->required();
  recheck->add_option("--format", census_fmt, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  const OutputFormat fmt_ = format == "json" ? OutputFormat::json : OutputFormat::text;
  try {
    if (*chern)
      return cmd_chern(n, expr, fmt_, out);
    if (*secants)
      return cmd_secants(n, j, expr, fmt_, out);
    if (*trisecant)
      return cmd_trisecant(n, expr, fmt_, out);
    if (*normality)
      return cmd_normality(n, j, expr, fmt_, out);
    if (*segre)
      return cmd_segre(n, k, expr, fmt_, out);
    if (*verify)
      return cmd_verify(suite, trials, seed, fmt_, out);
    if (*census)
      return cmd_census(census_r, degrees, ns, census_j, path, census_fmt, out);
    if (*recheck)
      return cmd_recheck(path, census_fmt, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_hypothesis;
  }
  return exit_usage;
}

} // namespace barth
