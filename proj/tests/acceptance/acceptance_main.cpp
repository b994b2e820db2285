// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fdiv/bounds.hpp"
#include "fdiv/distributions.hpp"
#include "fdiv/extremal.hpp"
#include "fdiv/kappa.hpp"
#include "oracles.hpp"

using namespace fdivergence;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void line(int id, bool ok, const std::string& what, const std::string& detail) {
  std::printf("%s  criterion %2d  %-34s %s\n", ok ? "PASS" : "FAIL", id, what.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// Pairs shared by the sweep criteria (1 and 9).
std::vector<oracle::Pair> sweep_pairs(std::size_t n) {
  std::mt19937_64 rng(20240601);
  std::vector<oracle::Pair> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(oracle::random_pair(rng, 2 + i % 7, i % 4 == 0));
  }
  return out;
}

void soundness_sweep(const std::vector<oracle::Pair>& pairs) {
  const auto t0 = Clock::now();
  const Catalog catalog;
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::size_t errors = 0;
  std::string first;
  for (const auto& pr : pairs) {
    try {
      const auto reports =
          catalog.run(DiscreteDist::from_probs(pr.p), DiscreteDist::from_probs(pr.q));
      for (const BoundReport& r : reports) {
        if (r.skipped) continue;
        ++checked;
        if (!r.holds || r.slack < ExtReal(-kBoundTolerance)) {
          if (violations++ == 0) {
            first = r.bound_id + " lhs " + to_string(r.lhs) + " rhs " + to_string(r.rhs);
          }
        }
      }
    } catch (const std::exception& e) {
      if (errors++ == 0) first = e.what();
    }
  }
  const double secs = seconds_since(t0);
  line(1, violations == 0 && errors == 0 && secs < 60.0, "soundness sweep",
       fmt("%zu pairs, %zu bound checks, %zu violations, %zu errors, %.1f s%s%s", pairs.size(),
           checked, violations, errors, secs, first.empty() ? "" : "; first: ", first.c_str()));
}

void symmetrized_attainment() {
  const auto t0 = Clock::now();
  const SearchResult r = run_named_search("symmetrized_kl_chi2", 2, 64, 0);
  const double secs = seconds_since(t0);
  line(2, r.sound && r.best_value >= 0.98 * 0.5 && secs < 10.0, "symmetrized KL/chi2 constant",
       fmt("best %.9f vs 0.98 x 0.5, sound=%d, %.2f s", r.best_value, r.sound, secs));
}

void samson_constants() {
  const SearchResult s = run_named_search("samson", 2, 64, 0);
  const double k = std::min(reverse_samson_kappa(2.0), reverse_samson_kappa(0.5));
  const SearchResult rs = run_named_search("reverse_samson", 4, 64, 0, 0.5, 0.5);
  const double rel = rs.best_value / k - 1.0;
  const bool ok = s.sound && s.best_value >= 0.98 * 2.0 && rs.sound && rel <= 0.02 &&
                  rel >= -kSoundnessTolerance;
  line(3, ok, "Samson / reverse Samson constants",
       fmt("samson best %.9f vs 0.98 x 2; reverse inf %.6f vs min kappa %.6f (%+.3f%%)",
           s.best_value, rs.best_value, k, 100.0 * rel));
}

void tv_constants() {
  const SearchResult a = run_named_search("marton_tv", 2, 64, 0);
  const SearchResult b = run_named_search("marton_sym_tv", 2, 64, 0);
  line(4, a.sound && b.sound && a.best_value >= 0.98 * 0.5 && b.best_value >= 0.98,
       "TV-ratio constants",
       fmt("one-sided %.9f vs 0.98 x 0.5; symmetrized %.9f vs 0.98 x 1", a.best_value,
           b.best_value));
}

void equality_witness() {
  const PairContext c = pair_context(DiscreteDist::from_probs({0.75, 0.25}),
                                     DiscreteDist::from_probs({0.5, 0.5}));
  const BoundReport r = bound_chi2_tv_beta(c);
  const bool ok = !r.skipped && std::fabs(r.slack.value()) <= 1e-12 &&
                  std::fabs(r.lhs.value() - 0.25) <= 1e-12 && std::fabs(r.rhs.value() - 0.25) <= 1e-12;
  line(5, ok, "chi2/TV equality witness",
       fmt("lhs %.17g rhs %.17g slack %.3g", r.lhs.value(), r.rhs.value(), r.slack.value()));
}

void local_behavior() {
  const DiscreteDist Q = DiscreteDist::from_probs({0.4, 0.35, 0.25});
  const DiscreteDist Qp = DiscreteDist::from_probs({0.05, 0.15, 0.8});
  const std::vector<double> eps{std::ldexp(1.0, -20)};
  const auto a = local_behavior_probe(Q, Qp, builtin("kl"), builtin("chi2"), eps);
  const auto b = local_behavior_probe(Q, Qp, builtin("kl"), builtin("reverse_kl"), eps);
  const double ra = a[0].ratio.value_or(NAN);
  const double rb = b[0].ratio.value_or(NAN);
  line(6, std::fabs(ra - 0.5) <= 1e-3 && std::fabs(rb - 1.0) <= 1e-3, "local ratio limits",
       fmt("eps=2^-20: KL/chi2 %.9f (0.5), KL/reverse KL %.9f (1)", ra, rb));
}

void laplace() {
  const double lambda = 1.5;
  const double a0 = -0.25;
  const double a1 = 1.0;
  const DensityPair d = laplace_pair(lambda, a0, a1);
  const DensityBetas b = density_betas(d);
  const double want = std::exp(-lambda * std::fabs(a1 - a0));
  const DensityDivergence kl = divergence_density(builtin("kl"), d);
  const double grid = oracle::laplace_kl_grid(lambda, a0, a1);
  const double err = std::fabs(kl.value.value() - grid);
  line(7, b.beta1 == want && b.beta2 == want && err <= 1e-6, "Laplace pair",
       fmt("beta1 %.17g beta2 %.17g exact %.17g; KL %.12f grid %.12f |diff| %.2g", b.beta1,
           b.beta2, want, kl.value.value(), grid, err));
}

void reverse_pinsker_improvement() {
  std::mt19937_64 rng(77);
  std::size_t violations = 0;
  std::size_t evaluated = 0;
  while (evaluated < 1000) {
    const auto pr = oracle::random_pair(rng, 2 + evaluated % 7, false);
    if (*std::min_element(pr.q.begin(), pr.q.end()) <= 0.0) continue;
    const auto qs = bound_reverse_pinsker_qmin(
        pair_context(DiscreteDist::from_probs(pr.p), DiscreteDist::from_probs(pr.q)));
    ++evaluated;
    if (qs[0].skipped || qs[2].skipped || !(qs[0].rhs <= qs[2].rhs)) ++violations;
  }
  line(8, violations == 0, "Q_min reverse Pinsker improvement",
       fmt("%zu strictly positive Q pairs, %zu violations", evaluated, violations));
}

Generator offset(const Generator& f, double c) {
  GeneratorTraits tr;
  tr.value_at_zero = f.value_at_zero() - ExtReal(c);
  tr.star_at_zero = f.star_at_zero() + ExtReal(c);
  return Generator::custom(f.name() + "+offset", [f, c](double t) { return f.eval(t) + c * (t - 1.0); },
                           tr);
}

bool close(ExtReal a, ExtReal b, double rel) {
  if (!a.is_finite() || !b.is_finite()) return a == b;
  return std::fabs(a.value() - b.value()) <= rel * std::max(1.0, std::fabs(b.value()));
}

void engine_cross_checks(const std::vector<oracle::Pair>& pairs) {
  std::vector<Generator> gens;
  std::vector<Generator> shifted;
  std::vector<Generator> stars;
  for (const std::string& n : builtin_names()) {
    gens.push_back(builtin(n));
    shifted.push_back(offset(gens.back(), 0.75));
    stars.push_back(star(gens.back()));
  }
  std::size_t offset_bad = 0, conj_bad = 0, range_bad = 0, neg_bad = 0, conj_checked = 0;
  for (const auto& pr : pairs) {
    const DiscreteDist P = DiscreteDist::from_probs(pr.p);
    const DiscreteDist Q = DiscreteDist::from_probs(pr.q);
    const PairContext c = pair_context(P, Q);
    if (!c.p_ac_q) continue;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const ExtReal d = divergence(gens[i], c.aligned);
      if (!close(divergence(shifted[i], c.aligned), d, 1e-10)) ++offset_bad;
      if (d < ExtReal(0.0)) ++neg_bad;
      const ExtReal range = gens[i].value_at_zero() + gens[i].star_at_zero();
      if (d > range + ExtReal(1e-12)) ++range_bad;
      if (c.q_ac_p) {
        ++conj_checked;
        if (!close(divergence(stars[i], Q, P), d, 1e-10)) ++conj_bad;
      }
    }
  }
  line(9, offset_bad + conj_bad + range_bad + neg_bad == 0, "engine cross-checks",
       fmt("offset %zu, conjugacy %zu (of %zu), range %zu, negativity %zu failures", offset_bad,
           conj_bad, conj_checked, range_bad, neg_bad));
}

void kappa_oracle() {
  const std::vector<std::string> numerators = builtin_names();
  const std::vector<std::string> denominators{"kl", "reverse_kl", "tv", "chi2", "reverse_chi2"};
  std::size_t finite = 0;
  std::size_t bad = 0;
  double worst = 0.0;
  std::string worst_pair;
  for (const std::string& fn : numerators) {
    for (const std::string& gn : denominators) {
      const KappaExtremum k = kappa_sup(builtin(fn), builtin(gn));
      if (!k.value.is_finite()) continue;
      ++finite;
      const double grid = oracle::grid_sup([&](double t) { return oracle::gen(fn, t); },
                                           [&](double t) { return oracle::gen(gn, t); }, 1000000);
      const double rel = std::fabs(k.value.value() - grid) / std::max(std::fabs(grid), 1e-300);
      if (rel > worst) {
        worst = rel;
        worst_pair = fn + "/" + gn;
      }
      if (rel > 1e-4) ++bad;
    }
  }
  line(10, bad == 0 && finite > 0, "kappa vs brute-force grid",
       fmt("%zu finite pairs, %zu off by > 1e-4, worst %.2g (%s)", finite, bad, worst,
           worst_pair.c_str()));
}

}  // namespace

int main() {
  const auto pairs = sweep_pairs(10000);
  const std::vector<std::function<void()>> criteria{
      [&] { soundness_sweep(pairs); },
      symmetrized_attainment,
      samson_constants,
      tv_constants,
      equality_witness,
      local_behavior,
      laplace,
      reverse_pinsker_improvement,
      [&] { engine_cross_checks(pairs); },
      kappa_oracle,
  };
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    try {
      criteria[i]();
    } catch (const std::exception& e) {
      line(static_cast<int>(i + 1), false, "threw", e.what());
    }
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
