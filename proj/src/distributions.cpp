#include "fdiv/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "fdiv/quadrature.hpp"

namespace fdivergence {

namespace {

constexpr double kStrictSimplexTol = 1e-12;
constexpr double kRenormalizeTol = 1e-6;
constexpr double kDensityTol = 1e-9;
constexpr double kTailFraction = 1e-15;

}  // namespace

DiscreteDist::DiscreteDist(std::vector<Atom> atoms, Ingest mode) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw ValidationError("distribution has no atoms");
  std::unordered_set<std::string> seen;
  double sum = 0.0;
  for (const Atom& a : atoms_) {
    if (!seen.insert(a.label).second) throw ValidationError("duplicate label '" + a.label + "'");
    if (!std::isfinite(a.prob) || a.prob < 0.0) {
      throw ValidationError("probability of '" + a.label + "' is not a non-negative real");
    }
    sum += a.prob;
  }
  const double tol = mode == Ingest::strict ? kStrictSimplexTol : kRenormalizeTol;
  if (std::abs(sum - 1.0) > tol) {
    throw ValidationError("probabilities sum to " + to_string(sum) + ", not 1");
  }
  if (mode == Ingest::renormalize) {
    for (Atom& a : atoms_) a.prob /= sum;
  }
}

DiscreteDist DiscreteDist::from_probs(std::span<const double> probs, Ingest mode) {
  std::vector<Atom> atoms;
  atoms.reserve(probs.size());
  for (std::size_t i = 0; i < probs.size(); ++i) atoms.push_back({std::to_string(i), probs[i]});
  return DiscreteDist(std::move(atoms), mode);
}

std::vector<double> DiscreteDist::probs() const {
  std::vector<double> out;
  out.reserve(atoms_.size());
  for (const Atom& a : atoms_) out.push_back(a.prob);
  return out;
}

double DiscreteDist::prob(const std::string& label) const {
  for (const Atom& a : atoms_) {
    if (a.label == label) return a.prob;
  }
  return 0.0;
}

bool operator==(const DiscreteDist& a, const DiscreteDist& b) {
  if (a.atoms_.size() != b.atoms_.size()) return false;
  for (std::size_t i = 0; i < a.atoms_.size(); ++i) {
    if (a.atoms_[i].label != b.atoms_[i].label || a.atoms_[i].prob != b.atoms_[i].prob) {
      return false;
    }
  }
  return true;
}

AlignedPair align(const DiscreteDist& P, const DiscreteDist& Q) {
  AlignedPair out;
  std::unordered_map<std::string, std::size_t> index;
  for (const Atom& a : P.atoms()) {
    index.emplace(a.label, out.labels.size());
    out.labels.push_back(a.label);
    out.p.push_back(a.prob);
    out.q.push_back(0.0);
  }
  for (const Atom& a : Q.atoms()) {
    auto it = index.find(a.label);
    if (it != index.end()) {
      out.q[it->second] = a.prob;
    } else {
      out.labels.push_back(a.label);
      out.p.push_back(0.0);
      out.q.push_back(a.prob);
    }
  }
  return out;
}

ExtReal relative_information(const DiscreteDist& P, const DiscreteDist& Q,
                             const std::string& label) {
  const double p = P.prob(label);
  const double q = Q.prob(label);
  if (q == 0.0) {
    if (p > 0.0) throw AbsoluteContinuityError("P(" + label + ") > 0 but Q(" + label + ") = 0");
    throw DomainError("relative information undefined at '" + label + "': P = Q = 0");
  }
  if (p == 0.0) return ExtReal::neg_infinity();
  return std::log(p / q);
}

PairContext pair_context(const DiscreteDist& P, const DiscreteDist& Q) {
  PairContext ctx;
  ctx.aligned = align(P, Q);
  const auto& p = ctx.aligned.p;
  const auto& q = ctx.aligned.q;
  ctx.p_ac_q = true;
  ctx.q_ac_p = true;
  double max_ratio = 0.0;
  double min_ratio = std::numeric_limits<double>::infinity();
  double q_min = std::numeric_limits<double>::infinity();
  ExtReal lo = ExtReal::infinity();
  ExtReal hi = ExtReal::neg_infinity();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (q[i] == 0.0 && p[i] > 0.0) ctx.p_ac_q = false;
    if (p[i] == 0.0 && q[i] > 0.0) ctx.q_ac_p = false;
    if (q[i] > 0.0) {
      const double ratio = p[i] / q[i];
      max_ratio = std::max(max_ratio, ratio);
      min_ratio = std::min(min_ratio, ratio);
      q_min = std::min(q_min, q[i]);
    }
    if (p[i] > 0.0) {
      const ExtReal ri = q[i] > 0.0 ? ExtReal(std::log(p[i] / q[i])) : ExtReal::infinity();
      lo = min(lo, ri);
      hi = max(hi, ri);
    }
  }
  ctx.beta1 = ctx.p_ac_q ? 1.0 / max_ratio : 0.0;
  ctx.beta2 = ctx.q_ac_p ? min_ratio : 0.0;
  // Exact identity guards against 1/(1+ulp) rounding away from 1.
  if (P == Q || ctx.aligned.p == ctx.aligned.q) ctx.beta1 = ctx.beta2 = 1.0;
  ctx.q_min = q_min;
  ctx.relinfo_range = {lo, hi};
  return ctx;
}

ExtReal divergence(const Generator& f, const AlignedPair& pair) {
  ExtReal total = 0.0;
  for (std::size_t i = 0; i < pair.p.size(); ++i) {
    const double p = pair.p[i];
    const double q = pair.q[i];
    if (q == 0.0) {
      if (p > 0.0) {
        throw AbsoluteContinuityError("P(" + pair.labels[i] + ") > 0 but Q(" + pair.labels[i] +
                                      ") = 0");
      }
      continue;
    }
    total += ExtReal(q) * f.eval_extended(p / q);
  }
  return total;
}

ExtReal divergence(const Generator& f, const DiscreteDist& P, const DiscreteDist& Q) {
  return divergence(f, align(P, Q));
}

double total_variation(const AlignedPair& pair) {
  double tv = 0.0;
  for (std::size_t i = 0; i < pair.p.size(); ++i) tv += std::abs(pair.p[i] - pair.q[i]);
  return tv;
}

DiscreteDist mixture_path(const DiscreteDist& Q, const DiscreteDist& Qp, double eps) {
  if (!(eps >= 0.0 && eps <= 1.0)) throw ValidationError("mixture weight must lie in [0, 1]");
  const AlignedPair a = align(Q, Qp);
  std::vector<Atom> atoms;
  atoms.reserve(a.labels.size());
  for (std::size_t i = 0; i < a.labels.size(); ++i) {
    if (a.p[i] == 0.0 && a.q[i] > 0.0) {
      throw AbsoluteContinuityError("mixture direction puts mass on '" + a.labels[i] +
                                    "' where Q has none");
    }
    atoms.push_back({a.labels[i], (1.0 - eps) * a.p[i] + eps * a.q[i]});
  }
  if (eps == 0.0) return Q;
  if (eps == 1.0) return Qp;
  return DiscreteDist(std::move(atoms));
}

std::pair<double, double> integration_window(const DensityPair& pair) {
  auto [lo, hi] = pair.support_hint;
  if (!(lo < hi)) throw ValidationError("support hint must be a non-empty interval");
  double peak_p = 0.0;
  double peak_q = 0.0;
  constexpr int kSamples = 2001;
  auto sample = [&](double x) {
    peak_p = std::max(peak_p, pair.p_density(x));
    peak_q = std::max(peak_q, pair.q_density(x));
  };
  for (int i = 0; i < kSamples; ++i) sample(lo + (hi - lo) * i / (kSamples - 1));
  for (double x : pair.breakpoints) sample(x);
  auto above = [&](double x) {
    return pair.p_density(x) >= kTailFraction * peak_p || pair.q_density(x) >= kTailFraction * peak_q;
  };
  double width = hi - lo;
  for (int it = 0; it < 64 && above(lo); ++it, width *= 2.0) lo -= width;
  width = hi - lo;
  for (int it = 0; it < 64 && above(hi); ++it, width *= 2.0) hi += width;
  return {lo, hi};
}

DensityPair make_density_pair(std::function<double(double)> p, std::function<double(double)> q,
                              std::pair<double, double> support_hint,
                              std::vector<double> breakpoints,
                              std::optional<std::pair<double, double>> closed_form_betas) {
  DensityPair pair{std::move(p), std::move(q), support_hint, std::move(breakpoints),
                   closed_form_betas};
  const auto [lo, hi] = integration_window(pair);
  const QuadratureOptions opts{1e-11, 4000};
  const double mass_p = integrate(pair.p_density, lo, hi, pair.breakpoints, opts).value;
  const double mass_q = integrate(pair.q_density, lo, hi, pair.breakpoints, opts).value;
  if (std::abs(mass_p - 1.0) > kDensityTol || std::abs(mass_q - 1.0) > kDensityTol) {
    throw ValidationError("densities must integrate to 1 (got " + to_string(mass_p) + ", " +
                          to_string(mass_q) + ")");
  }
  return pair;
}

DensityPair laplace_pair(double lambda, double a0, double a1) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw ValidationError("Laplace scale lambda must be positive");
  }
  auto density = [lambda](double centre) {
    return [lambda, centre](double x) { return 0.5 * lambda * std::exp(-lambda * std::abs(x - centre)); };
  };
  const double beta = std::exp(-lambda * std::abs(a1 - a0));
  const double lo = std::min(a0, a1) - 1.0 / lambda;
  const double hi = std::max(a0, a1) + 1.0 / lambda;
  return make_density_pair(density(a0), density(a1), {lo, hi}, {a0, a1},
                           std::pair<double, double>{beta, beta});
}

DensityDivergence divergence_density(const Generator& f, const DensityPair& pair) {
  const auto [lo, hi] = integration_window(pair);
  bool infinite = false;
  auto integrand = [&](double x) {
    const double p = pair.p_density(x);
    const double q = pair.q_density(x);
    if (q == 0.0) {
      if (p > 0.0) {
        throw AbsoluteContinuityError("p > 0 where q = 0 at x = " + to_string(x));
      }
      return 0.0;
    }
    const ExtReal v = f.eval_extended(p / q);
    if (!v.is_finite()) {
      infinite = true;
      return 0.0;
    }
    return q * v.value();
  };
  const QuadratureResult r = integrate(integrand, lo, hi, pair.breakpoints, {kDensityTol, 4000});
  if (infinite) return {ExtReal::infinity(), 0.0};
  return {r.value, r.error_estimate};
}

DensityBetas density_betas(const DensityPair& pair) {
  if (pair.closed_form_betas) {
    return {pair.closed_form_betas->first, pair.closed_form_betas->second, false};
  }
  const auto [lo, hi] = integration_window(pair);
  constexpr int kNodes = 20001;
  double max_ratio = 0.0;
  double min_ratio = std::numeric_limits<double>::infinity();
  bool p_ac_q = true;
  bool q_ac_p = true;
  for (int i = 0; i < kNodes; ++i) {
    const double x = lo + (hi - lo) * i / (kNodes - 1);
    const double p = pair.p_density(x);
    const double q = pair.q_density(x);
    if (q == 0.0) {
      if (p > 0.0) p_ac_q = false;
      continue;
    }
    if (p == 0.0) q_ac_p = false;
    max_ratio = std::max(max_ratio, p / q);
    min_ratio = std::min(min_ratio, p / q);
  }
  DensityBetas b;
  b.beta1 = p_ac_q && max_ratio > 0.0 ? 1.0 / max_ratio : 0.0;
  b.beta2 = q_ac_p ? min_ratio : 0.0;
  b.estimated = true;
  return b;
}

}  // namespace fdivergence
