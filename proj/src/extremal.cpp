#include "fdiv/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "fdiv/bounds.hpp"
#include "fdiv/kappa.hpp"
#include "fdiv/nelder_mead.hpp"

namespace fdivergence {

namespace {

constexpr double kClip = 1e-12;
constexpr double kSnap = 1e-9;
constexpr double kDegenerate = 1e-14;
constexpr int kResampleAttempts = 64;
constexpr double kInitialSpread = 1.5;

const double kInf = std::numeric_limits<double>::infinity();

std::vector<std::string> index_labels(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

// Softmax of (logits..., 0), clipped away from 0 and renormalized.
std::vector<double> simplex_point(const double* logits, std::size_t n) {
  std::vector<double> z(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) z[i] = logits[i];
  const double top = *std::max_element(z.begin(), z.end());
  double sum = 0.0;
  for (double& v : z) {
    v = std::exp(v - top);
    sum += v;
  }
  double clipped_sum = 0.0;
  for (double& v : z) {
    v = std::max(v / sum, kClip);
    clipped_sum += v;
  }
  for (double& v : z) v /= clipped_sum;
  return z;
}

struct Candidate {
  std::vector<double> p;
  std::vector<double> q;
};

// D_f/D_g, or nullopt when the pair is degenerate or a divergence blows up.
std::optional<double> ratio_value(const Generator& f, const Generator& g,
                                  const std::vector<std::string>& labels, const Candidate& c) {
  try {
    const AlignedPair pair{labels, c.p, c.q};
    const ExtReal dg = divergence(g, pair);
    if (!dg.is_finite() || dg.value() < kDegenerate) return std::nullopt;
    const ExtReal df = divergence(f, pair);
    if (!df.is_finite()) return std::nullopt;
    return df.value() / dg.value();
  } catch (const AbsoluteContinuityError&) {
    return std::nullopt;
  }
}

std::mt19937_64 restart_rng(std::uint64_t seed, std::size_t restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(restart), static_cast<std::uint32_t>(restart >> 32)};
  return std::mt19937_64(seq);
}

bool better(double a, double b, Sense sense) {
  return sense == Sense::supremum ? a > b : a < b;
}

// Multi-start driver shared by both parameterizations. `decode` maps search
// coordinates to a pair (nullopt when infeasible).
template <typename Decode>
SearchResult run_search(const std::string& objective_id, const Generator& f, const Generator& g,
                        ExtReal claimed, Sense sense, std::size_t alphabet_size,
                        std::size_t restarts, std::uint64_t seed, std::size_t dims,
                        const Decode& decode, bool snap_boundary) {
  if (alphabet_size < 2 || alphabet_size > 4) {
    throw ValidationError("search alphabet size must be 2, 3 or 4");
  }
  if (restarts == 0) throw ValidationError("search needs at least one restart");
  const std::vector<std::string> labels = index_labels(alphabet_size);
  const double worst = sense == Sense::supremum ? -kInf : kInf;

  auto value_of = [&](const std::vector<double>& x) -> std::optional<double> {
    const std::optional<Candidate> c = decode(x);
    if (!c) return std::nullopt;
    return ratio_value(f, g, labels, *c);
  };
  // Nelder-Mead minimizes; infeasible points get +inf.
  auto loss = [&](const std::vector<double>& x) {
    const std::optional<double> v = value_of(x);
    if (!v) return kInf;
    return sense == Sense::supremum ? -*v : *v;
  };

  double best_value = worst;
  std::optional<Candidate> best;
  for (std::size_t k = 0; k < restarts; ++k) {
    std::mt19937_64 rng = restart_rng(seed, k);
    std::normal_distribution<double> normal(0.0, kInitialSpread);
    std::vector<double> x0(dims);
    bool found = false;
    for (int attempt = 0; attempt < kResampleAttempts && !found; ++attempt) {
      for (double& v : x0) v = normal(rng);
      found = value_of(x0).has_value();
    }
    if (!found) continue;
    NelderMeadResult r = nelder_mead_minimize(loss, x0, {3000, 1e-15, 1.0});
    r = nelder_mead_minimize(loss, r.x, {2000, 1e-15, 0.1});
    const std::optional<double> v = value_of(r.x);
    if (v && better(*v, best_value, sense)) {
      best_value = *v;
      best = decode(r.x);
    }
  }
  if (!best) throw SearchFailure("every restart of '" + objective_id + "' was degenerate");

  if (snap_boundary) {
    Candidate snapped = *best;
    for (auto* probs : {&snapped.p, &snapped.q}) {
      double sum = 0.0;
      for (double& v : *probs) {
        if (v < kSnap) v = 0.0;
        sum += v;
      }
      for (double& v : *probs) v /= sum;
    }
    const std::optional<double> v = ratio_value(f, g, labels, snapped);
    if (v && !better(best_value, *v, sense)) {
      best_value = *v;
      best = snapped;
    }
  }

  SearchResult out;
  out.objective_id = objective_id;
  out.sense = sense;
  out.best_value = best_value;
  out.witness_p = best->p;
  out.witness_q = best->q;
  out.alphabet_size = alphabet_size;
  out.restarts = restarts;
  out.seed = seed;
  out.claimed_constant = claimed;
  if (claimed.is_finite() && claimed.value() > 0.0) {
    out.attainment_ratio =
        sense == Sense::supremum ? best_value / claimed.value() : claimed.value() / best_value;
  }
  if (claimed.is_finite()) {
    out.sound = sense == Sense::supremum ? best_value <= claimed.value() + kSoundnessTolerance
                                         : best_value >= claimed.value() - kSoundnessTolerance;
  }
  return out;
}

void check_betas(double beta1, double beta2) {
  if (!(beta1 > 0.0 && beta1 < 1.0 && beta2 > 0.0 && beta2 < 1.0)) {
    throw ValidationError("beta-pinned search needs (beta1, beta2) in (0,1)^2");
  }
}

double sigmoid(double y) { return 1.0 / (1.0 + std::exp(-y)); }

}  // namespace

std::string to_string(Sense sense) { return sense == Sense::supremum ? "supremum" : "infimum"; }

ExtReal claimed_ratio_constant(const Generator& f, const Generator& g) {
  if (g.name() == "tv") return ExtReal(0.5) * (f.value_at_zero() + f.star_at_zero());
  return kappa_sup(f, g).value;
}

SearchResult ratio_supremum_search(const Generator& f, const Generator& g,
                                   std::size_t alphabet_size, std::size_t restarts,
                                   std::uint64_t seed) {
  return ratio_supremum_search("ratio[" + f.name() + "/" + g.name() + "]", f, g,
                               claimed_ratio_constant(f, g), alphabet_size, restarts, seed);
}

SearchResult ratio_supremum_search(const std::string& objective_id, const Generator& f,
                                   const Generator& g, ExtReal claimed, std::size_t alphabet_size,
                                   std::size_t restarts, std::uint64_t seed) {
  const std::size_t n = alphabet_size;
  auto decode = [n](const std::vector<double>& x) -> std::optional<Candidate> {
    return Candidate{simplex_point(x.data(), n), simplex_point(x.data() + (n - 1), n)};
  };
  return run_search(objective_id, f, g, claimed, Sense::supremum, alphabet_size, restarts, seed,
                    2 * (n - 1), decode, true);
}

std::pair<DiscreteDist, DiscreteDist> pinned_binary_pair(double beta1, double beta2) {
  check_betas(beta1, beta2);
  const double hi = 1.0 / beta1;
  const double w = (1.0 - beta2) / (hi - beta2);
  const double q[] = {w, 1.0 - w};
  const double p[] = {w * hi, (1.0 - w) * beta2};
  return {DiscreteDist::from_probs(p), DiscreteDist::from_probs(q)};
}

SearchResult constrained_ratio_search(const Generator& f, const Generator& g, double beta1,
                                      double beta2, std::size_t alphabet_size,
                                      std::size_t restarts, std::uint64_t seed, Sense sense) {
  check_betas(beta1, beta2);
  const KappaRange range = kappa_restricted(f, g, beta1, beta2);
  const ExtReal claimed = sense == Sense::supremum ? range.sup.value : range.inf.value;
  return constrained_ratio_search("constrained[" + f.name() + "/" + g.name() + "]", f, g, claimed,
                                  beta1, beta2, alphabet_size, restarts, seed, sense);
}

SearchResult constrained_ratio_search(const std::string& objective_id, const Generator& f,
                                      const Generator& g, ExtReal claimed, double beta1,
                                      double beta2, std::size_t alphabet_size,
                                      std::size_t restarts, std::uint64_t seed, Sense sense) {
  check_betas(beta1, beta2);
  const std::size_t n = alphabet_size;
  const std::size_t free_atoms = n >= 2 ? n - 2 : 0;
  const double hi = 1.0 / beta1;
  const double lo = beta2;
  // x[0..free) are slot logits against the pinned pair's slot (fixed 0);
  // x[free..2 free) set the free atoms' likelihood ratios inside (lo, hi).
  auto decode = [=](const std::vector<double>& x) -> std::optional<Candidate> {
    std::vector<double> slots(free_atoms + 1, 0.0);
    for (std::size_t i = 0; i < free_atoms; ++i) slots[i + 1] = x[i];
    const double top = *std::max_element(slots.begin(), slots.end());
    double sum = 0.0;
    for (double& s : slots) {
      s = std::exp(s - top);
      sum += s;
    }
    for (double& s : slots) s /= sum;
    Candidate c{std::vector<double>(n), std::vector<double>(n)};
    double rest_q = 0.0;
    double rest_p = 0.0;
    for (std::size_t i = 0; i < free_atoms; ++i) {
      const double ratio = lo + (hi - lo) * sigmoid(x[free_atoms + i]);
      c.q[i + 2] = slots[i + 1];
      c.p[i + 2] = slots[i + 1] * ratio;
      rest_q += c.q[i + 2];
      rest_p += c.p[i + 2];
    }
    const double pinned_mass = 1.0 - rest_q;
    if (!(pinned_mass > 0.0)) return std::nullopt;
    const double mean_ratio = (1.0 - rest_p) / pinned_mass;
    if (!(mean_ratio > lo && mean_ratio < hi)) return std::nullopt;
    c.q[0] = pinned_mass * (mean_ratio - lo) / (hi - lo);
    c.q[1] = pinned_mass - c.q[0];
    if (!(c.q[0] > 0.0 && c.q[1] > 0.0)) return std::nullopt;
    c.p[0] = c.q[0] * hi;
    c.p[1] = c.q[1] * lo;
    return c;
  };
  return run_search(objective_id, f, g, claimed, sense, alphabet_size, restarts, seed,
                    2 * free_atoms, decode, false);
}

const std::vector<std::string>& named_objective_ids() {
  static const std::vector<std::string> ids{"symmetrized_kl_chi2", "samson",         "marton_tv",
                                            "marton_sym_tv",       "reverse_samson", "kl_ratio"};
  return ids;
}

NamedObjective named_objective(const std::string& id) {
  const Generator s = builtin("marton_s");
  const Generator s_sym = s + star(s);
  if (id == "symmetrized_kl_chi2") {
    return {id, builtin("kl") + builtin("reverse_kl"), builtin("chi2") + builtin("reverse_chi2"),
            Sense::supremum, false, ExtReal(0.5)};
  }
  if (id == "samson") return {id, s_sym, builtin("kl"), Sense::supremum, false, ExtReal(2.0)};
  if (id == "marton_tv") return {id, s, builtin("tv"), Sense::supremum, false, ExtReal(0.5)};
  if (id == "marton_sym_tv") return {id, s_sym, builtin("tv"), Sense::supremum, false, ExtReal(1.0)};
  if (id == "reverse_samson") return {id, s_sym, builtin("kl"), Sense::infimum, true, std::nullopt};
  if (id == "kl_ratio") {
    return {id, builtin("kl"), builtin("reverse_kl"), Sense::supremum, true, std::nullopt};
  }
  throw RegistryError("unknown search objective '" + id + "'");
}

SearchResult run_named_search(const std::string& id, std::size_t alphabet_size,
                              std::size_t restarts, std::uint64_t seed, std::optional<double> beta1,
                              std::optional<double> beta2) {
  const NamedObjective obj = named_objective(id);
  if (!obj.needs_betas) {
    return ratio_supremum_search(obj.id, obj.f, obj.g, *obj.claimed, alphabet_size, restarts, seed);
  }
  if (!beta1 || !beta2) throw ValidationError("objective '" + id + "' needs beta1 and beta2");
  check_betas(*beta1, *beta2);
  const double claimed =
      id == "reverse_samson"
          ? std::min(reverse_samson_kappa(1.0 / *beta1), reverse_samson_kappa(*beta2))
          : kl_ratio_kappa(1.0 / *beta1);
  return constrained_ratio_search(obj.id, obj.f, obj.g, claimed, *beta1, *beta2, alphabet_size,
                                  restarts, seed, obj.sense);
}

std::vector<ProbeEntry> local_behavior_probe(const DiscreteDist& Q, const DiscreteDist& Qp,
                                             const Generator& f, const Generator& g,
                                             const std::vector<double>& eps_schedule) {
  for (std::size_t i = 0; i < eps_schedule.size(); ++i) {
    const double e = eps_schedule[i];
    if (!(e >= 0.0 && e <= 1.0)) throw ValidationError("probe schedule values must lie in [0, 1]");
    if (i > 0 && !(e < eps_schedule[i - 1])) {
      throw ValidationError("probe schedule must be strictly decreasing");
    }
  }
  std::vector<ProbeEntry> out;
  out.reserve(eps_schedule.size());
  for (double eps : eps_schedule) {
    const DiscreteDist P = mixture_path(Q, Qp, eps);
    ProbeEntry e;
    e.eps = eps;
    e.df = divergence(f, P, Q);
    e.dg = divergence(g, P, Q);
    if (e.dg > ExtReal(0.0) && e.dg.is_finite() && e.df.is_finite()) {
      e.ratio = e.df.value() / e.dg.value();
    }
    out.push_back(e);
  }
  return out;
}

std::vector<double> dyadic_schedule(int steps) {
  std::vector<double> out;
  for (int k = 1; k <= steps; ++k) out.push_back(std::ldexp(1.0, -k));
  return out;
}

}  // namespace fdivergence
