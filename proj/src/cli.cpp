#include "fdiv/cli.hpp"

#include <CLI11.hpp>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "fdiv/bounds.hpp"
#include "fdiv/extremal.hpp"
#include "fdiv/io.hpp"

namespace fdivergence {

namespace {

using nlohmann::json;

enum class Format { json, markdown };

struct RunConfig {
  std::vector<std::string> f_names;
  std::string g_name;
  std::string p_path;
  std::string q_path;
  std::string units = "nats";
  std::string format = "json";
  bool renormalize = false;
  std::size_t alphabet_size = 2;
  std::size_t restarts = 64;
  std::uint64_t seed = 0;
  std::string objective;
  std::optional<double> beta1;
  std::optional<double> beta2;
  bool infimum = false;
  int steps = 20;
  std::string channel_path;
  std::string function;
};

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "markdown") return Format::markdown;
  throw ValidationError("format must be 'json' or 'markdown'");
}

Ingest ingest_mode(const RunConfig& c) { return c.renormalize ? Ingest::renormalize : Ingest::strict; }

std::string fmt(ExtReal x) {
  if (!x.is_finite()) return to_string(x);
  std::ostringstream ss;
  ss << std::setprecision(10) << x.value();
  return ss.str();
}

int cmd_eval(const RunConfig& c, std::ostream& out) {
  const Units units = parse_units(c.units);
  const Format format = parse_format(c.format);
  const DiscreteDist P = load_distribution(c.p_path, ingest_mode(c));
  const DiscreteDist Q = load_distribution(c.q_path, ingest_mode(c));
  json rows = json::array();
  std::ostringstream md;
  md << "| f | D_f(P||Q) | units |\n|---|---|---|\n";
  for (const std::string& name : c.f_names) {
    const Generator f = builtin(name);
    const int lp = f.logarithmic() ? 1 : 0;
    const ExtReal v = convert(divergence(f, P, Q), lp, units);
    const std::string u = lp ? to_string(units) : "none";
    rows.push_back({{"f", name}, {"value", ext_to_json(v)}, {"units", u}});
    md << "| " << name << " | " << fmt(v) << " | " << u << " |\n";
  }
  if (format == Format::json) {
    out << json{{"command", "eval"}, {"units", to_string(units)}, {"divergences", rows}}.dump(2) << "\n";
  } else {
    out << md.str();
  }
  return kExitOk;
}

int cmd_report(const RunConfig& c, std::ostream& out) {
  const Units units = parse_units(c.units);
  const Format format = parse_format(c.format);
  const DiscreteDist P = load_distribution(c.p_path, ingest_mode(c));
  const DiscreteDist Q = load_distribution(c.q_path, ingest_mode(c));
  const std::vector<BoundReport> reports = run_catalog(P, Q);
  std::size_t skipped = 0;
  std::size_t failed = 0;
  for (const BoundReport& r : reports) {
    if (r.skipped) {
      ++skipped;
    } else if (!r.holds) {
      ++failed;
    }
  }
  if (format == Format::json) {
    json arr = json::array();
    for (const BoundReport& r : reports) arr.push_back(to_json(r, units));
    json summary{{"total", reports.size()}, {"skipped", skipped}, {"failed", failed}};
    out << json{{"command", "report"}, {"reports", arr}, {"summary", summary}}.dump(2) << "\n";
  } else {
    out << "| bound | lhs | rhs | slack | status | units | inequality |\n"
        << "|---|---|---|---|---|---|---|\n";
    for (const BoundReport& r : reports) {
      std::string status = r.skipped ? "skipped" : (r.holds ? "holds" : "FAILED");
      if (r.skipped) {
        status += " (";
        for (std::size_t i = 0; i < r.failed_preconditions.size(); ++i) {
          status += (i ? "; " : "") + r.failed_preconditions[i];
        }
        status += ")";
      }
      for (const std::string& n : r.notes) status += " [" + n + "]";
      out << "| " << r.bound_id << " | " << fmt(convert(r.lhs, r.log_power, units)) << " | "
          << fmt(convert(r.rhs, r.log_power, units)) << " | "
          << fmt(convert(r.slack, r.log_power, units)) << " | " << status << " | "
          << (r.log_power ? to_string(units) : "none") << " | " << r.paper_anchor << " |\n";
    }
    out << "\n" << reports.size() << " bounds, " << skipped << " skipped, " << failed
        << " failed\n";
  }
  return failed == 0 ? kExitOk : kExitBoundFailed;
}

int cmd_search(const RunConfig& c, std::ostream& out) {
  const Format format = parse_format(c.format);
  SearchResult result;
  if (!c.objective.empty()) {
    result = run_named_search(c.objective, c.alphabet_size, c.restarts, c.seed, c.beta1, c.beta2);
  } else {
    if (c.f_names.size() != 1 || c.g_name.empty()) {
      throw ValidationError("search needs --objective, or one --f and one --g");
    }
    const Generator f = prepared_generator(c.f_names.front());
    const Generator g = prepared_generator(c.g_name);
    if (c.beta1 || c.beta2) {
      if (!c.beta1 || !c.beta2) throw ValidationError("--beta1 and --beta2 go together");
      result = constrained_ratio_search(f, g, *c.beta1, *c.beta2, c.alphabet_size, c.restarts,
                                        c.seed, c.infimum ? Sense::infimum : Sense::supremum);
    } else {
      result = ratio_supremum_search(f, g, c.alphabet_size, c.restarts, c.seed);
    }
  }
  if (format == Format::json) {
    out << to_json(result).dump(2) << "\n";
  } else {
    out << "| field | value |\n|---|---|\n"
        << "| objective | " << result.objective_id << " |\n"
        << "| sense | " << to_string(result.sense) << " |\n"
        << "| best value | " << fmt(result.best_value) << " |\n"
        << "| claimed constant | " << fmt(result.claimed_constant) << " |\n"
        << "| attainment ratio | "
        << (result.attainment_ratio ? fmt(*result.attainment_ratio) : std::string("n/a")) << " |\n"
        << "| sound | " << (result.sound ? "yes" : "NO") << " |\n"
        << "| alphabet size | " << result.alphabet_size << " |\n"
        << "| restarts | " << result.restarts << " |\n"
        << "| seed | " << result.seed << " |\n";
  }
  return result.sound ? kExitOk : kExitBoundFailed;
}

int cmd_local(const RunConfig& c, std::ostream& out) {
  const Units units = parse_units(c.units);
  const Format format = parse_format(c.format);
  if (c.f_names.size() != 1 || c.g_name.empty()) throw ValidationError("local needs --f and --g");
  const DiscreteDist Qp = load_distribution(c.p_path, ingest_mode(c));
  const DiscreteDist Q = load_distribution(c.q_path, ingest_mode(c));
  const Generator f = prepared_generator(c.f_names.front());
  const Generator g = prepared_generator(c.g_name);
  if (c.steps < 1) throw ValidationError("--steps must be positive");
  const auto probe = local_behavior_probe(Q, Qp, f, g, dyadic_schedule(c.steps));
  const int lf = f.logarithmic() ? 1 : 0;
  const int lg = g.logarithmic() ? 1 : 0;
  const auto [left, right] = kappa_limits_at_one(f, g);
  if (format == Format::json) {
    out << json{{"command", "local"},
                {"f", f.name()},
                {"g", g.name()},
                {"kappa_limit_left", ext_to_json(convert(left, lf - lg, units))},
                {"kappa_limit_right", ext_to_json(convert(right, lf - lg, units))},
                {"probe", to_json(probe, lf, lg, units)}}
               .dump(2)
        << "\n";
  } else {
    out << "| eps | D_f | D_g | ratio |\n|---|---|---|---|\n";
    for (const ProbeEntry& e : probe) {
      out << "| " << fmt(e.eps) << " | " << fmt(convert(e.df, lf, units)) << " | "
          << fmt(convert(e.dg, lg, units)) << " | "
          << (e.ratio ? fmt(convert(*e.ratio, lf - lg, units)) : std::string("skipped")) << " |\n";
    }
    out << "\nkappa(1-) = " << fmt(convert(left, lf - lg, units))
        << ", kappa(1+) = " << fmt(convert(right, lf - lg, units)) << "\n";
  }
  return kExitOk;
}

int cmd_jensen(const RunConfig& c, std::ostream& out) {
  const Format format = parse_format(c.format);
  const DiscreteDist PU = load_distribution(c.p_path, ingest_mode(c));
  const DiscreteDist PZ = load_distribution(c.q_path, ingest_mode(c));
  const ChannelSpec spec = load_channel(c.channel_path);
  const RealConvexFunction f = real_convex_function(c.function.empty() ? spec.function : c.function);
  const BoundReport rep = strengthened_jensen(f, PU, PZ, spec.channel);
  if (format == Format::json) {
    out << to_json(rep).dump(2) << "\n";
  } else {
    out << "| bound | lhs | rhs | slack | status |\n|---|---|---|---|---|\n"
        << "| " << rep.bound_id << " | " << fmt(rep.lhs) << " | " << fmt(rep.rhs) << " | "
        << fmt(rep.slack) << " | "
        << (rep.skipped ? "skipped" : (rep.holds ? "holds" : "FAILED")) << " |\n";
  }
  if (rep.skipped) return kExitAbsoluteContinuity;
  return rep.holds ? kExitOk : kExitBoundFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"f-divergences, certified bound reports and extremal searches", "fdiv"};
  app.require_subcommand(1);
  RunConfig c;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--units", c.units, "nats or bits")->check(CLI::IsMember({"nats", "bits"}));
    sub->add_option("--format", c.format, "json or markdown")
        ->check(CLI::IsMember({"json", "markdown"}));
    sub->add_flag("--renormalize", c.renormalize, "rescale inputs summing to 1 within 1e-6");
  };
  auto add_pair = [&](CLI::App* sub) {
    sub->add_option("--p", c.p_path, "distribution file (JSON or CSV)")->required();
    sub->add_option("--q", c.q_path, "distribution file (JSON or CSV)")->required();
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate f-divergences D_f(P||Q)");
  eval->add_option("--f", c.f_names, "generator name (repeatable)")->required();
  add_pair(eval);
  add_common(eval);

  CLI::App* report = app.add_subcommand("report", "evaluate the bound catalog on (P, Q)");
  add_pair(report);
  add_common(report);

  CLI::App* search = app.add_subcommand("search", "search for pairs approaching a tight constant");
  search->add_option("--objective", c.objective, "named objective");
  search->add_option("--f", c.f_names, "numerator generator");
  search->add_option("--g", c.g_name, "denominator generator");
  search->add_option("--alphabet-size", c.alphabet_size, "2, 3 or 4")->check(CLI::Range(2, 4));
  search->add_option("--restarts", c.restarts, "number of restarts");
  search->add_option("--seed", c.seed, "random seed");
  search->add_option("--beta1", c.beta1, "pin beta1 (with --beta2)");
  search->add_option("--beta2", c.beta2, "pin beta2 (with --beta1)");
  search->add_flag("--infimum", c.infimum, "minimize instead of maximize (pinned search)");
  search->add_option("--format", c.format, "json or markdown")
      ->check(CLI::IsMember({"json", "markdown"}));

  CLI::App* local = app.add_subcommand("local", "ratio D_f/D_g along (1-eps) Q + eps P");
  local->add_option("--f", c.f_names, "numerator generator")->required();
  local->add_option("--g", c.g_name, "denominator generator")->required();
  add_pair(local);
  local->add_option("--steps", c.steps, "eps = 2^-1 .. 2^-steps");
  add_common(local);

  CLI::App* jensen = app.add_subcommand("jensen", "strengthened Jensen inequality");
  add_pair(jensen);
  jensen->add_option("--channel", c.channel_path, "channel JSON file")->required();
  jensen->add_option("--function", c.function, "square, abs or exp");
  add_common(jensen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "fdiv: " << e.what() << "\n";
    return kExitValidation;
  }

  try {
    if (eval->parsed()) return cmd_eval(c, out);
    if (report->parsed()) return cmd_report(c, out);
    if (search->parsed()) return cmd_search(c, out);
    if (local->parsed()) return cmd_local(c, out);
    if (jensen->parsed()) return cmd_jensen(c, out);
  } catch (const AbsoluteContinuityError& e) {
    err << "fdiv: absolute continuity violated: " << e.what() << "\n";
    return kExitAbsoluteContinuity;
  } catch (const ValidationError& e) {
    err << "fdiv: invalid input: " << e.what() << "\n";
    return kExitValidation;
  } catch (const RegistryError& e) {
    err << "fdiv: " << e.what() << "\n";
    return kExitValidation;
  } catch (const Error& e) {
    err << "fdiv: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitValidation;
}

}  // namespace fdivergence
