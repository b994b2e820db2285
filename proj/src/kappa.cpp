#include "fdiv/kappa.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <vector>

namespace fdivergence {

namespace {

constexpr std::size_t kGridPerSide = 4096;
constexpr double kGridMin = 1e-9;
constexpr double kGridMax = 1e9;
constexpr double kGoldenTol = 1e-10;
constexpr std::size_t kMaxRefinements = 8;

using Kind = KappaWitness::Kind;

struct Candidate {
  ExtReal value;
  KappaWitness witness;
};

// Limit of f/g at a boundary from the ratio of the boundary values; 0/0 and
// inf/inf fall back to kappa at `probe` and are flagged.
Candidate boundary_candidate(const Generator& f, const Generator& g, ExtReal fv, ExtReal gv,
                             double probe, Kind kind, bool& estimated) {
  Candidate c{0.0, {kind, probe}};
  if (gv.is_pos_inf()) {
    if (fv.is_finite()) {
      c.value = 0.0;
      return c;
    }
  } else if (gv == ExtReal(0.0)) {
    if (fv > ExtReal(0.0)) {
      c.value = ExtReal::infinity();
      return c;
    }
    if (fv < ExtReal(0.0)) {
      c.value = ExtReal::neg_infinity();
      return c;
    }
  } else if (gv > ExtReal(0.0)) {
    c.value = fv / gv;
    return c;
  } else {
    throw DominationHypothesisError("g has a negative boundary value; kappa is not defined");
  }
  // Indeterminate: follow kappa over three decades past the probe.
  estimated = true;
  const double step = kind == Kind::zero ? 1e-3 : 1e3;
  const ExtReal k0 = kappa_at(f, g, probe / step);
  const ExtReal k1 = kappa_at(f, g, probe);
  const ExtReal k2 = kappa_at(f, g, probe * step);
  c.value = k2;
  if (k0.is_finite() && k1.is_finite() && k2.is_finite() && k0.value() > 0.0) {
    constexpr double kTrend = 1.05;
    if (k1.value() > kTrend * k0.value() && k2.value() > kTrend * k1.value()) {
      c.value = ExtReal::infinity();
    } else if (k1.value() * kTrend < k0.value() && k2.value() * kTrend < k1.value()) {
      c.value = 0.0;
    }
  }
  c.witness.t = probe * step;
  return c;
}

double golden_section(const std::function<double(double)>& phi, double a, double b, bool maximize,
                      double& best_u) {
  constexpr double kInvPhi = 0.6180339887498949;
  auto obj = [&](double u) { return maximize ? phi(u) : -phi(u); };
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = obj(c);
  double fd = obj(d);
  while (std::abs(b - a) > kGoldenTol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = obj(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = obj(d);
    }
  }
  if (fc > fd) {
    best_u = c;
    return maximize ? fc : -fc;
  }
  best_u = d;
  return maximize ? fd : -fd;
}

// Scans kappa on log-spaced points of (lo, hi) with `lo` or `hi` pinned
// exactly, then refines the strongest grid extrema by golden section in
// log t. Updates best_max / best_min.
void scan_interval(const Generator& f, const Generator& g, double lo, double hi, bool include_lo,
                   bool include_hi, std::optional<Candidate>& best_max,
                   std::optional<Candidate>& best_min) {
  const double ulo = std::log(lo);
  const double uhi = std::log(hi);
  std::vector<double> us;
  us.reserve(kGridPerSide + 4);
  // Open ends stay open: the point count excludes whichever end is open.
  const std::size_t n = kGridPerSide;
  for (std::size_t i = 0; i < n; ++i) {
    double frac;
    if (include_lo && !include_hi) {
      frac = static_cast<double>(i) / static_cast<double>(n);
    } else if (!include_lo && include_hi) {
      frac = static_cast<double>(i + 1) / static_cast<double>(n);
    } else {
      frac = static_cast<double>(i + 1) / static_cast<double>(n + 1);
    }
    us.push_back(ulo + (uhi - ulo) * frac);
  }
  std::vector<double> ts(us.size());
  std::vector<double> vs(us.size());
  for (std::size_t i = 0; i < us.size(); ++i) {
    ts[i] = std::exp(us[i]);
    if (include_lo && i == 0) ts[i] = lo;
    if (include_hi && i + 1 == us.size()) ts[i] = hi;
    vs[i] = kappa_at(f, g, ts[i]).value();
  }
  auto consider = [&](double v, double t) {
    Candidate c{v, {Kind::interior, t}};
    if (!best_max || best_max->value < c.value) best_max = c;
    if (!best_min || c.value < best_min->value) best_min = c;
  };
  for (std::size_t i = 0; i < ts.size(); ++i) consider(vs[i], ts[i]);

  const auto phi = [&](double u) { return kappa_at(f, g, std::exp(u)).value(); };
  for (bool maximize : {true, false}) {
    std::vector<std::size_t> extrema;
    for (std::size_t i = 1; i + 1 < vs.size(); ++i) {
      const bool is_ext = maximize ? (vs[i] > vs[i - 1] && vs[i] >= vs[i + 1])
                                   : (vs[i] < vs[i - 1] && vs[i] <= vs[i + 1]);
      if (is_ext) extrema.push_back(i);
    }
    std::sort(extrema.begin(), extrema.end(), [&](std::size_t a, std::size_t b) {
      return maximize ? vs[a] > vs[b] : vs[a] < vs[b];
    });
    if (extrema.size() > kMaxRefinements) extrema.resize(kMaxRefinements);
    for (std::size_t i : extrema) {
      double u_best = us[i];
      const double v = golden_section(phi, us[i - 1], us[i + 1], maximize, u_best);
      consider(v, std::exp(u_best));
    }
  }
}

// Richardson extrapolation of kappa(1 + side * h0 * 2^-k).
ExtReal richardson_limit(const Generator& f, const Generator& g, int side) {
  constexpr double kH0 = 1.0 / 16.0;
  constexpr int kLevels = 9;
  constexpr int kMaxOrder = 5;
  std::array<double, kLevels> seq{};
  for (int k = 0; k < kLevels; ++k) {
    seq[k] = kappa_at(f, g, 1.0 + side * kH0 * std::ldexp(1.0, -k)).value();
  }
  // Monotone blow-up: successive values at least 1.5x larger.
  bool diverging = true;
  for (int k = kLevels - 4; k < kLevels; ++k) {
    if (!(std::abs(seq[k]) > 1.5 * std::abs(seq[k - 1]) && seq[k] * seq[k - 1] > 0)) {
      diverging = false;
    }
  }
  if (diverging) return seq[kLevels - 1] > 0 ? ExtReal::infinity() : ExtReal::neg_infinity();

  std::array<std::array<double, kMaxOrder + 1>, kLevels> table{};
  double prev_diag = 0.0;
  double best = seq[kLevels - 1];
  double best_change = std::numeric_limits<double>::infinity();
  for (int k = 0; k < kLevels; ++k) {
    table[k][0] = seq[k];
    const int order = std::min(k, kMaxOrder);
    for (int j = 1; j <= order; ++j) {
      const double factor = std::ldexp(1.0, j) - 1.0;
      table[k][j] = table[k][j - 1] + (table[k][j - 1] - table[k - 1][j - 1]) / factor;
    }
    const double diag = table[k][order];
    if (k > 0) {
      const double change = std::abs(diag - prev_diag);
      if (change < best_change) {
        best_change = change;
        best = diag;
      }
    }
    prev_diag = diag;
  }
  if (best_change > 1e-7 * std::max(1.0, std::abs(best))) {
    throw NumericalError("kappa limit at 1 did not converge for " + f.name() + "/" + g.name());
  }
  return best;
}

ExtReal one_sided_limit(const Generator& f, const Generator& g, int side) {
  const auto& fd1 = side < 0 ? f.deriv_at_one_left() : f.deriv_at_one_right();
  const auto& gd1 = side < 0 ? g.deriv_at_one_left() : g.deriv_at_one_right();
  const auto& fd2 = side < 0 ? f.second_deriv_at_one_left() : f.second_deriv_at_one_right();
  const auto& gd2 = side < 0 ? g.second_deriv_at_one_left() : g.second_deriv_at_one_right();
  if (fd1 && gd1) {
    if (*gd1 != 0.0) return *fd1 / *gd1 + 0.0;
    if (*fd1 != 0.0) {
      // f ~ f'(1) s h against g = o(h): sign of f'(1) * side.
      return *fd1 * side > 0 ? ExtReal::infinity() : ExtReal::neg_infinity();
    }
    if (fd2 && gd2 && *gd2 > 0.0) return *fd2 / *gd2;
  }
  return richardson_limit(f, g, side);
}

void take(std::optional<Candidate>& best, const Candidate& c, bool maximize) {
  if (!best || (maximize ? best->value < c.value : c.value < best->value)) best = c;
}

}  // namespace

std::string to_string(KappaWitness::Kind kind) {
  switch (kind) {
    case Kind::interior: return "interior";
    case Kind::zero: return "zero";
    case Kind::one_left: return "one-";
    case Kind::one_right: return "one+";
    case Kind::infinity: return "infinity";
  }
  return "interior";
}

ExtReal kappa_at(const Generator& f, const Generator& g, double t) {
  if (t == 1.0) throw DomainError("kappa is undefined at t = 1; use kappa_limits_at_one");
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("kappa evaluated outside (0, inf)");
  const double gt = g.eval(t);
  if (!(gt > 0.0)) {
    throw DominationHypothesisError("g = " + g.name() + " is not positive at t = " +
                                    to_string(t));
  }
  return f.eval(t) / gt;
}

std::pair<ExtReal, ExtReal> kappa_limits_at_one(const Generator& f, const Generator& g) {
  return {one_sided_limit(f, g, -1), one_sided_limit(f, g, +1)};
}

KappaExtremum kappa_sup(const Generator& f, const Generator& g) {
  const KappaRange r = kappa_restricted(f, g, 0.0, 0.0);
  return r.sup;
}

KappaRange kappa_restricted(const Generator& f, const Generator& g, double beta1, double beta2) {
  if (!(beta1 >= 0.0 && beta1 < 1.0) || !(beta2 >= 0.0 && beta2 < 1.0)) {
    throw DomainError("kappa_restricted needs (beta1, beta2) in [0,1)^2");
  }
  bool estimated = f.has_estimated_metadata() || g.has_estimated_metadata();
  std::optional<Candidate> best_max;
  std::optional<Candidate> best_min;
  auto offer = [&](const Candidate& c) {
    take(best_max, c, true);
    take(best_min, c, false);
  };

  // Left side: (beta2, 1), or (0, 1) with the t -> 0 limit.
  if (beta2 == 0.0) {
    bool est = false;
    offer(boundary_candidate(f, g, f.value_at_zero(), g.value_at_zero(), kGridMin, Kind::zero, est));
    estimated = estimated || est;
    scan_interval(f, g, kGridMin, 1.0, true, false, best_max, best_min);
  } else {
    scan_interval(f, g, beta2, 1.0, true, false, best_max, best_min);
  }
  // Right side: (1, 1/beta1), or (1, inf) with the t -> inf limit.
  if (beta1 == 0.0) {
    bool est = false;
    offer(boundary_candidate(f, g, f.star_at_zero(), g.star_at_zero(), kGridMax, Kind::infinity,
                             est));
    estimated = estimated || est;
    scan_interval(f, g, 1.0, kGridMax, false, true, best_max, best_min);
  } else {
    scan_interval(f, g, 1.0, 1.0 / beta1, false, true, best_max, best_min);
  }
  // Near-1 probes bridge the grid and the limits.
  for (int k = 8; k <= 10; ++k) {
    const double h = std::ldexp(1.0, -k);
    if (1.0 - h > beta2) offer({kappa_at(f, g, 1.0 - h), {Kind::interior, 1.0 - h}});
    if (beta1 == 0.0 || 1.0 + h < 1.0 / beta1) {
      offer({kappa_at(f, g, 1.0 + h), {Kind::interior, 1.0 + h}});
    }
  }
  const auto [left, right] = kappa_limits_at_one(f, g);
  offer({left, {Kind::one_left, 1.0}});
  offer({right, {Kind::one_right, 1.0}});

  KappaRange out;
  out.sup = {best_max->value, best_max->witness, estimated};
  out.inf = {best_min->value, best_min->witness, estimated};
  return out;
}

KappaProfile kappa_profile(const Generator& f, const Generator& g, double beta1, double beta2) {
  KappaProfile p;
  p.f_name = f.name();
  p.g_name = g.name();
  const KappaExtremum bar = kappa_sup(f, g);
  const KappaRange restricted = kappa_restricted(f, g, beta1, beta2);
  const auto [left, right] = kappa_limits_at_one(f, g);
  p.kappa_bar = bar.value;
  p.argmax_witness = bar.witness;
  p.kappa_star_sup = restricted.sup.value;
  p.kappa_star_inf = restricted.inf.value;
  p.limit_left_1 = left;
  p.limit_right_1 = right;
  p.estimated = bar.estimated || restricted.sup.estimated;
  return p;
}

}  // namespace fdivergence
