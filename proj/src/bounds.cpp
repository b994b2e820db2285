#include "fdiv/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace fdivergence {

namespace {

const Generator& kl() {
  static const Generator g = builtin("kl");
  return g;
}
const Generator& chi2() {
  static const Generator g = builtin("chi2");
  return g;
}
const Generator& marton() {
  static const Generator g = builtin("marton_s");
  return g;
}
const Generator& marton_star() {
  static const Generator g = star(builtin("marton_s"));
  return g;
}

AlignedPair swapped(const AlignedPair& a) { return {a.labels, a.q, a.p}; }

// r(t) = t ln t + 1 - t, accurate near 1.
double r(double t) { return kl().eval(t); }

ExtReal kl_pq(const PairContext& ctx) { return divergence(kl(), ctx.aligned); }
ExtReal kl_qp(const PairContext& ctx) { return divergence(kl(), swapped(ctx.aligned)); }
ExtReal chi2_pq(const PairContext& ctx) { return divergence(chi2(), ctx.aligned); }

std::vector<std::string> require(std::initializer_list<std::pair<bool, const char*>> conditions) {
  std::vector<std::string> failed;
  for (const auto& [ok, what] : conditions) {
    if (!ok) failed.emplace_back(what);
  }
  return failed;
}

constexpr const char* kPAcQ = "P << Q";
constexpr const char* kQAcP = "Q << P";
constexpr const char* kDistinct = "P != Q";
constexpr const char* kBetasOpen = "(beta1, beta2) in (0,1)^2";

bool betas_open(const PairContext& ctx) {
  return ctx.beta1 > 0.0 && ctx.beta1 < 1.0 && ctx.beta2 > 0.0 && ctx.beta2 < 1.0;
}

void note_estimated(BoundReport& rep, const Generator& f) {
  if (f.has_estimated_metadata()) rep.notes.push_back("estimated boundary data for " + f.name());
}

BoundReport lower_of(std::string id, std::string anchor, ExtReal lower, ExtReal value,
                     int log_power) {
  return make_report(std::move(id), std::move(anchor), lower, value, log_power);
}

}  // namespace

BoundReport make_report(std::string id, std::string anchor, ExtReal lhs, ExtReal rhs,
                        int log_power) {
  BoundReport rep;
  rep.bound_id = std::move(id);
  rep.paper_anchor = std::move(anchor);
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.log_power = log_power;
  if (lhs.is_pos_inf() && rhs.is_pos_inf()) {
    rep.slack = 0.0;
    rep.holds = true;
  } else if (lhs.is_neg_inf() && rhs.is_neg_inf()) {
    rep.slack = 0.0;
    rep.holds = true;
  } else {
    rep.slack = rhs - lhs;
    rep.holds = rep.slack.is_finite() ? rep.slack.value() >= -kBoundTolerance
                                      : rep.slack.is_pos_inf();
  }
  return rep;
}

BoundReport skipped_report(std::string id, std::string anchor,
                           std::vector<std::string> failed_preconditions) {
  BoundReport rep;
  rep.bound_id = std::move(id);
  rep.paper_anchor = std::move(anchor);
  rep.lhs = rep.rhs = rep.slack = 0.0;
  rep.holds = false;
  rep.preconditions_met = false;
  rep.skipped = true;
  rep.failed_preconditions = std::move(failed_preconditions);
  return rep;
}

BoundReport bound_domination(const Generator& f, const Generator& g, const PairContext& ctx,
                             std::optional<KappaExtremum> kappa_bar) {
  const std::string id = "B1[" + f.name() + "/" + g.name() + "]";
  const char* anchor = "functional domination D_f <= kappa_bar D_g";
  if (!ctx.p_ac_q) return skipped_report(id, anchor, {kPAcQ});
  if (!kappa_bar) {
    std::vector<std::string> failed;
    if (!check_convexity(f, 257).pass) failed.push_back("f convex");
    if (!check_convexity(g, 257).pass) failed.push_back("g convex");
    if (failed.empty()) {
      try {
        kappa_bar = kappa_sup(f, g);
      } catch (const DominationHypothesisError&) {
        failed.push_back("g > 0 on (0,1) u (1,inf)");
      }
    }
    if (!failed.empty()) return skipped_report(id, anchor, std::move(failed));
  }
  BoundReport rep = make_report(id, anchor, divergence(f, ctx.aligned),
                                kappa_bar->value * divergence(g, ctx.aligned),
                                f.logarithmic() ? 1 : 0);
  if (kappa_bar->estimated) rep.notes.push_back("kappa_bar boundary limit estimated");
  note_estimated(rep, f);
  note_estimated(rep, g);
  return rep;
}

BoundReport bound_kl_tv_chi2(const PairContext& ctx, KlTvChi2Variant variant) {
  const bool quarter = variant == KlTvChi2Variant::quarter_half;
  const std::string id = quarter ? "B2b" : "B2a";
  const char* anchor = quarter ? "D <= (|P-Q|/4 + chi2/2) log e" : "D <= chi2 log e";
  if (!ctx.p_ac_q) return skipped_report(id, anchor, {kPAcQ});
  const double c1 = quarter ? 0.25 : 0.0;
  const double c2 = quarter ? 0.5 : 1.0;
  const ExtReal rhs = ExtReal(c1 * total_variation(ctx.aligned)) + ExtReal(c2) * chi2_pq(ctx);
  return make_report(id, anchor, kl_pq(ctx), rhs, 1);
}

BoundReport bound_symmetrized_ratio(const PairContext& ctx) {
  const char* anchor = "symmetrized relative entropy over symmetrized chi2 <= log e / 2";
  auto failed = require({{ctx.mutually_ac(), "P << >> Q"}, {!ctx.identical(), kDistinct}});
  if (!failed.empty()) return skipped_report("B3", anchor, std::move(failed));
  const AlignedPair rev = swapped(ctx.aligned);
  const ExtReal num = kl_pq(ctx) + divergence(kl(), rev);
  const ExtReal den = chi2_pq(ctx) + divergence(chi2(), rev);
  if (den == ExtReal(0.0)) return skipped_report("B3", anchor, {kDistinct});
  return make_report("B3", anchor, num / den, 0.5, 1);
}

ExtReal marton_divergence(const AlignedPair& pair) { return divergence(marton(), pair); }

ExtReal marton_divergence_reverse(const AlignedPair& pair, bool mutually_ac) {
  const ExtReal via_star = divergence(marton_star(), pair);
  if (mutually_ac) {
    const ExtReal direct = divergence(marton(), swapped(pair));
    const double scale = std::max(1.0, std::abs(via_star.finite()));
    if (std::abs(direct.finite() - via_star.finite()) > 1e-12 * scale) {
      throw NumericalError("Marton divergence routes disagree: " + to_string(via_star) + " vs " +
                           to_string(direct));
    }
  }
  return via_star;
}

BoundReport bound_samson(const PairContext& ctx) {
  const char* anchor = "Samson: d2^2(P,Q) + d2^2(Q,P) <= (2/log e) D(P||Q)";
  if (!ctx.p_ac_q) return skipped_report("B4", anchor, {kPAcQ});
  const ExtReal lhs =
      marton_divergence(ctx.aligned) + marton_divergence_reverse(ctx.aligned, ctx.mutually_ac());
  return make_report("B4", anchor, lhs, ExtReal(2.0) * kl_pq(ctx), 0);
}

BoundReport bound_basu(const Generator& f, const PairContext& ctx) {
  const std::string id = "B5[" + f.name() + "]";
  const char* anchor = "D_f <= (f(0) + f*(0))/2 |P-Q|";
  if (!ctx.p_ac_q) return skipped_report(id, anchor, {kPAcQ});
  const ExtReal constant = ExtReal(0.5) * (f.value_at_zero() + f.star_at_zero());
  BoundReport rep = make_report(id, anchor, divergence(f, ctx.aligned),
                                constant * ExtReal(total_variation(ctx.aligned)),
                                f.logarithmic() ? 1 : 0);
  note_estimated(rep, f);
  return rep;
}

BoundReport bound_vajda_range(const Generator& f, const PairContext& ctx) {
  const std::string id = "B5r[" + f.name() + "]";
  const char* anchor = "range of an f-divergence: D_f <= f(0) + f*(0)";
  if (!ctx.p_ac_q) return skipped_report(id, anchor, {kPAcQ});
  BoundReport rep = make_report(id, anchor, divergence(f, ctx.aligned),
                                f.value_at_zero() + f.star_at_zero(), f.logarithmic() ? 1 : 0);
  note_estimated(rep, f);
  return rep;
}

std::pair<BoundReport, BoundReport> bound_restricted_domination(const Generator& f,
                                                                const Generator& g,
                                                                const PairContext& ctx) {
  const std::string base = "B6[" + f.name() + "/" + g.name() + "]";
  const char* upper_anchor = "restricted domination D_f <= kappa*_sup D_g";
  const char* lower_anchor = "restricted domination kappa*_inf D_g <= D_f";
  auto failed = require({{ctx.p_ac_q, kPAcQ}, {!ctx.identical(), kDistinct}});
  std::optional<KappaRange> range;
  if (failed.empty()) {
    try {
      range = kappa_restricted(f, g, ctx.beta1, ctx.beta2);
    } catch (const DominationHypothesisError&) {
      failed.emplace_back("g > 0 on the beta window");
    }
  }
  if (!failed.empty()) {
    return {skipped_report(base + ".upper", upper_anchor, failed),
            skipped_report(base + ".lower", lower_anchor, failed)};
  }
  const ExtReal df = divergence(f, ctx.aligned);
  const ExtReal dg = divergence(g, ctx.aligned);
  const int lp = f.logarithmic() ? 1 : 0;
  BoundReport upper = make_report(base + ".upper", upper_anchor, df, range->sup.value * dg, lp);
  BoundReport lower = lower_of(base + ".lower", lower_anchor, range->inf.value * dg, df, lp);
  if (range->sup.estimated) upper.notes.push_back("kappa* boundary limit estimated");
  return {upper, lower};
}

BoundReport bound_chi2_tv_beta(const PairContext& ctx) {
  const char* anchor = "chi2 <= max{1/beta1 - 1, 1 - beta2} |P-Q|";
  if (!ctx.p_ac_q) return skipped_report("B7", anchor, {kPAcQ});
  const double constant = std::max(1.0 / ctx.beta1 - 1.0, 1.0 - ctx.beta2);
  return make_report("B7", anchor, chi2_pq(ctx), constant * total_variation(ctx.aligned), 0);
}

double kl_ratio_kappa(double t) {
  static const Generator rev = builtin("reverse_kl");
  return r(t) / rev.eval(t);
}

std::pair<BoundReport, BoundReport> bound_kl_ratio(const PairContext& ctx) {
  const char* lower_anchor = "kappa(beta2) <= D(P||Q)/D(Q||P)";
  const char* upper_anchor = "D(P||Q)/D(Q||P) <= kappa(1/beta1)";
  auto failed = require({{ctx.mutually_ac(), "P << >> Q"},
                         {!ctx.identical(), kDistinct},
                         {betas_open(ctx), kBetasOpen}});
  if (!failed.empty()) {
    return {skipped_report("B8.lower", lower_anchor, failed),
            skipped_report("B8.upper", upper_anchor, failed)};
  }
  const ExtReal ratio = kl_pq(ctx) / kl_qp(ctx);
  return {lower_of("B8.lower", lower_anchor, kl_ratio_kappa(ctx.beta2), ratio, 0),
          make_report("B8.upper", upper_anchor, ratio, kl_ratio_kappa(1.0 / ctx.beta1), 0)};
}

double reverse_samson_kappa(double t) {
  return (t - 1.0) * (t - 1.0) / (r(t) * std::max(1.0, t));
}

BoundReport bound_reverse_samson(const PairContext& ctx) {
  const char* anchor = "reverse Samson: min{kappa(1/beta1), kappa(beta2)} D <= d2^2 sum";
  auto failed = require({{betas_open(ctx), kBetasOpen}});
  if (!failed.empty()) return skipped_report("B9", anchor, std::move(failed));
  const double constant =
      std::min(reverse_samson_kappa(1.0 / ctx.beta1), reverse_samson_kappa(ctx.beta2));
  const ExtReal rhs =
      marton_divergence(ctx.aligned) + marton_divergence_reverse(ctx.aligned, ctx.mutually_ac());
  return lower_of("B9", anchor, ExtReal(constant) * kl_pq(ctx), rhs, 0);
}

RealConvexFunction real_convex_function(const std::string& name) {
  if (name == "square") return {name, [](double x) { return x * x; }};
  if (name == "abs") return {name, [](double x) { return std::abs(x); }};
  if (name == "exp") return {name, [](double x) { return std::exp(x); }};
  throw RegistryError("unknown convex function '" + name + "'");
}

BoundReport strengthened_jensen(const RealConvexFunction& f, const DiscreteDist& p_u,
                                const DiscreteDist& p_z, const Channel& channel) {
  const std::string id = "B10[" + f.name + "]";
  const char* anchor = "strengthened Jensen inequality";
  const AlignedPair a = align(p_u, p_z);
  for (std::size_t i = 0; i < a.labels.size(); ++i) {
    if (a.p[i] > 0.0 && a.q[i] == 0.0) return skipped_report(id, anchor, {"P_U << P_Z"});
  }
  auto conditional_mean = [&](const std::string& label) {
    auto it = channel.find(label);
    if (it == channel.end() || it->second.empty()) {
      throw ValidationError("channel has no output law for input '" + label + "'");
    }
    double mass = 0.0;
    double mean = 0.0;
    for (const auto& [z, prob] : it->second) {
      if (!std::isfinite(z) || !(prob >= 0.0)) {
        throw ValidationError("channel output for '" + label + "' is malformed");
      }
      mass += prob;
      mean += z * prob;
    }
    if (std::abs(mass - 1.0) > 1e-12) {
      throw ValidationError("channel output law for '" + label + "' does not sum to 1");
    }
    return mean;
  };
  double beta = std::numeric_limits<double>::infinity();
  double mean_u = 0.0, mean_z = 0.0, avg_f_u = 0.0, avg_f_z = 0.0;
  for (std::size_t i = 0; i < a.labels.size(); ++i) {
    if (a.q[i] == 0.0) continue;
    const double m = conditional_mean(a.labels[i]);
    const double fm = f.fn(m);
    beta = std::min(beta, a.p[i] / a.q[i]);
    mean_u += a.p[i] * m;
    mean_z += a.q[i] * m;
    avg_f_u += a.p[i] * fm;
    avg_f_z += a.q[i] * fm;
  }
  const double gap_z = avg_f_z - f.fn(mean_z);
  const double gap_u = avg_f_u - f.fn(mean_u);
  BoundReport rep = make_report(id, anchor, beta * gap_z, gap_u, 0);
  rep.notes.push_back("beta = " + to_string(beta));
  return rep;
}

std::pair<BoundReport, BoundReport> bound_jensen_gap(const Generator& f, const PairContext& ctx) {
  const std::string base = "B11[" + f.name() + "]";
  const char* lower_anchor = "beta2 D_f <= E_P f(dP/dQ) - f(1 + chi2)";
  const char* upper_anchor = "E_P f(dP/dQ) - f(1 + chi2) <= D_f / beta1";
  auto failed = require({{ctx.p_ac_q, kPAcQ}, {!ctx.identical(), kDistinct}});
  if (!failed.empty()) {
    return {skipped_report(base + ".lower", lower_anchor, failed),
            skipped_report(base + ".upper", upper_anchor, failed)};
  }
  const auto& a = ctx.aligned;
  // 1 + chi2 = E_P[dP/dQ]; taking it as the mean of the same rounded ratios
  // makes the gap vanish exactly when the ratio is constant on supp P. The
  // gap is unchanged by f -> f - b(t - 1); b = f*(0) strips the linear growth
  // that would otherwise cancel between the two terms at huge ratios.
  const double slope = f.star_at_zero().is_finite() ? f.star_at_zero().value() : 0.0;
  auto shifted = [&](double t) { return f.eval(t) - slope * (t - 1.0); };
  long double expectation = 0.0L;
  long double mean_ratio = 0.0L;
  long double mass = 0.0L;
  for (std::size_t i = 0; i < a.p.size(); ++i) {
    if (a.p[i] <= 0.0) continue;
    const double ratio = a.p[i] / a.q[i];
    expectation += a.p[i] * static_cast<long double>(shifted(ratio));
    mean_ratio += a.p[i] * static_cast<long double>(ratio);
    mass += a.p[i];
  }
  const double center = static_cast<double>(mean_ratio / mass);
  const ExtReal middle = static_cast<double>(expectation / mass - shifted(center));
  const ExtReal df = divergence(f, a);
  const int lp = f.logarithmic() ? 1 : 0;
  BoundReport lower = lower_of(base + ".lower", lower_anchor, ExtReal(ctx.beta2) * df, middle, lp);
  BoundReport upper = make_report(base + ".upper", upper_anchor, middle,
                                  ExtReal(1.0 / ctx.beta1) * df, lp);
  return {lower, upper};
}

std::pair<BoundReport, BoundReport> bound_kl_log1p_chi2(const PairContext& ctx) {
  const char* first_anchor = "D <= log(1 + chi2)";
  const char* second_anchor = "log(1 + chi2) <= chi2 log e";
  if (!ctx.p_ac_q) {
    return {skipped_report("B12a", first_anchor, {kPAcQ}),
            skipped_report("B12b", second_anchor, {kPAcQ})};
  }
  const double c = chi2_pq(ctx).finite();
  return {make_report("B12a", first_anchor, kl_pq(ctx), std::log1p(c), 1),
          make_report("B12b", second_anchor, std::log1p(c), c, 1)};
}

std::pair<BoundReport, BoundReport> bound_d_chi_sandwich(const PairContext& ctx) {
  const char* lower_anchor = "beta2 D(Q||P) <= log(1 + chi2) - D(P||Q)";
  const char* upper_anchor = "log(1 + chi2) - D(P||Q) <= D(Q||P) / beta1";
  auto failed = require({{ctx.mutually_ac(), "P << >> Q"}, {betas_open(ctx), kBetasOpen}});
  if (!failed.empty()) {
    return {skipped_report("B13.lower", lower_anchor, failed),
            skipped_report("B13.upper", upper_anchor, failed)};
  }
  const ExtReal middle = ExtReal(std::log1p(chi2_pq(ctx).finite())) - kl_pq(ctx);
  const ExtReal dual = kl_qp(ctx);
  return {lower_of("B13.lower", lower_anchor, ExtReal(ctx.beta2) * dual, middle, 1),
          make_report("B13.upper", upper_anchor, middle, ExtReal(1.0 / ctx.beta1) * dual, 1)};
}

double reverse_pinsker_phi(double t) {
  if (t < 0.0) throw DomainError("phi is defined on [0, inf)");
  if (t == 0.0) return 0.0;
  if (t == 1.0) return 1.0;
  const double u = t - 1.0;
  if (std::abs(u) < 0.5) return t * std::log1p(u) / u;
  return t * std::log(t) / u;
}

BoundReport bound_reverse_pinsker_phi(const PairContext& ctx) {
  const char* anchor = "reverse Pinsker: D <= (phi(1/beta1) - phi(beta2)) |P-Q| / 2";
  auto failed = require({{ctx.beta1 > 0.0 && ctx.beta1 < 1.0, "beta1 in (0,1)"},
                         {ctx.beta2 >= 0.0 && ctx.beta2 < 1.0, "beta2 in [0,1)"}});
  if (!failed.empty()) return skipped_report("B14", anchor, std::move(failed));
  const double constant =
      0.5 * (reverse_pinsker_phi(1.0 / ctx.beta1) - reverse_pinsker_phi(ctx.beta2));
  return make_report("B14", anchor, kl_pq(ctx), constant * total_variation(ctx.aligned), 1);
}

std::vector<BoundReport> bound_reverse_pinsker_qmin(const PairContext& ctx) {
  const char* anchors[] = {"D <= log(1 + |P-Q|^2 / (2 Q_min))",
                           "D <= log(1 + |P-Q|^2 / (2 Q_min)) - beta2 |P-Q|^2 log e / 2",
                           "Csiszar-Talata: D <= |P-Q|^2 log e / Q_min",
                           "Q_min bound improves on Csiszar-Talata"};
  const char* ids[] = {"B15a", "B15b", "B15c", "B15d"};
  const auto& a = ctx.aligned;
  const bool q_positive = std::all_of(a.q.begin(), a.q.end(), [](double q) { return q > 0.0; });
  auto failed = require({{q_positive, "Q strictly positive"}, {a.q.size() >= 2, "|A| >= 2"}});
  std::vector<BoundReport> out;
  if (!failed.empty()) {
    for (int i = 0; i < 4; ++i) out.push_back(skipped_report(ids[i], anchors[i], failed));
    return out;
  }
  const double tv = total_variation(a);
  const double tv2 = tv * tv;
  const ExtReal d = kl_pq(ctx);
  const double qmin_rhs = std::log1p(tv2 / (2.0 * ctx.q_min));
  const double ct_rhs = tv2 / ctx.q_min;
  out.push_back(make_report(ids[0], anchors[0], d, qmin_rhs, 1));
  if (ctx.q_ac_p) {
    out.push_back(make_report(ids[1], anchors[1], d, qmin_rhs - 0.5 * ctx.beta2 * tv2, 1));
  } else {
    out.push_back(skipped_report(ids[1], anchors[1], {kQAcP}));
  }
  out.push_back(make_report(ids[2], anchors[2], d, ct_rhs, 1));
  out.push_back(make_report(ids[3], anchors[3], qmin_rhs, ct_rhs, 1));
  return out;
}

Generator prepared_generator(const std::string& name) {
  const Generator g = builtin(name);
  if (g.deriv_at_one()) return normalize_offset(g);
  return g;
}

CatalogConfig CatalogConfig::defaults() {
  CatalogConfig c;
  c.generators = builtin_names();
  const std::vector<std::string> denominators{"kl", "reverse_kl", "tv", "chi2", "reverse_chi2"};
  for (const auto& f : builtin_names()) {
    for (const auto& g : denominators) c.domination_pairs.emplace_back(f, g);
  }
  c.restricted_pairs = {{"kl", "chi2"}, {"kl", "reverse_kl"}, {"reverse_kl", "kl"},
                        {"marton_s", "kl"}, {"chi2", "tv"}};
  return c;
}

Catalog::Catalog(const CatalogConfig& config) {
  for (const auto& name : config.generators) singles_.push_back(builtin(name));
  for (const auto& [fn, gn] : config.domination_pairs) {
    Pair p{prepared_generator(fn), prepared_generator(gn), std::nullopt, {}};
    try {
      p.kappa_bar = kappa_sup(p.f, p.g);
    } catch (const DominationHypothesisError& e) {
      p.hypothesis_error = e.what();
    }
    domination_.push_back(std::move(p));
  }
  for (const auto& [fn, gn] : config.restricted_pairs) {
    restricted_.emplace_back(prepared_generator(fn), prepared_generator(gn));
  }
}

std::vector<BoundReport> Catalog::run(const DiscreteDist& P, const DiscreteDist& Q) const {
  const PairContext ctx = pair_context(P, Q);
  std::vector<BoundReport> out;
  auto push_pair = [&](std::pair<BoundReport, BoundReport> pr) {
    out.push_back(std::move(pr.first));
    out.push_back(std::move(pr.second));
  };
  for (const Pair& p : domination_) {
    if (p.kappa_bar) {
      out.push_back(bound_domination(p.f, p.g, ctx, p.kappa_bar));
    } else {
      out.push_back(skipped_report("B1[" + p.f.name() + "/" + p.g.name() + "]",
                                   "functional domination D_f <= kappa_bar D_g",
                                   {"g > 0 on (0,1) u (1,inf)"}));
    }
  }
  out.push_back(bound_kl_tv_chi2(ctx, KlTvChi2Variant::chi2_only));
  out.push_back(bound_kl_tv_chi2(ctx, KlTvChi2Variant::quarter_half));
  out.push_back(bound_symmetrized_ratio(ctx));
  out.push_back(bound_samson(ctx));
  for (const Generator& f : singles_) out.push_back(bound_basu(f, ctx));
  for (const Generator& f : singles_) out.push_back(bound_vajda_range(f, ctx));
  for (const auto& [f, g] : restricted_) push_pair(bound_restricted_domination(f, g, ctx));
  out.push_back(bound_chi2_tv_beta(ctx));
  push_pair(bound_kl_ratio(ctx));
  out.push_back(bound_reverse_samson(ctx));

  // Jensen gap with P_U = P, P_Z = Q and the likelihood ratio as a
  // deterministic channel.
  if (ctx.p_ac_q) {
    Channel channel;
    for (std::size_t i = 0; i < ctx.aligned.labels.size(); ++i) {
      if (ctx.aligned.q[i] > 0.0) {
        channel[ctx.aligned.labels[i]] = {{ctx.aligned.p[i] / ctx.aligned.q[i], 1.0}};
      }
    }
    out.push_back(strengthened_jensen(real_convex_function("square"), P, Q, channel));
  } else {
    out.push_back(skipped_report("B10[square]", "strengthened Jensen inequality", {"P_U << P_Z"}));
  }
  for (const Generator& f : singles_) push_pair(bound_jensen_gap(f, ctx));
  push_pair(bound_kl_log1p_chi2(ctx));
  push_pair(bound_d_chi_sandwich(ctx));
  out.push_back(bound_reverse_pinsker_phi(ctx));
  for (BoundReport& rep : bound_reverse_pinsker_qmin(ctx)) out.push_back(std::move(rep));
  return out;
}

std::vector<BoundReport> run_catalog(const DiscreteDist& P, const DiscreteDist& Q) {
  static const Catalog catalog;
  return catalog.run(P, Q);
}

}  // namespace fdivergence
