#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fdiv/distributions.hpp"
#include "fdiv/extended_real.hpp"
#include "fdiv/generators.hpp"

namespace fdivergence {

enum class Sense { supremum, infimum };

std::string to_string(Sense sense);

struct SearchResult {
  std::string objective_id;
  Sense sense = Sense::supremum;
  double best_value = 0.0;
  std::vector<double> witness_p;
  std::vector<double> witness_q;
  std::size_t alphabet_size = 0;
  std::size_t restarts = 0;
  std::uint64_t seed = 0;
  ExtReal claimed_constant;
  /// best/claimed for suprema, claimed/best for infima; empty for infinite claims.
  std::optional<double> attainment_ratio;
  /// best_value respects the claimed constant within 1e-8.
  bool sound = true;

  [[nodiscard]] DiscreteDist witness_P() const { return DiscreteDist::from_probs(witness_p); }
  [[nodiscard]] DiscreteDist witness_Q() const { return DiscreteDist::from_probs(witness_q); }
};

inline constexpr double kSoundnessTolerance = 1e-8;
inline constexpr double kAttainmentThreshold = 0.98;

/// Tight constant of sup D_f/D_g: (f(0) + f*(0))/2 when g is total
/// variation, otherwise kappa_bar of (f, g).
ExtReal claimed_ratio_constant(const Generator& f, const Generator& g);

/// Multi-start simplex search for sup D_f(P||Q)/D_g(P||Q) over pairs on an
/// alphabet of 2..4 atoms. Deterministic in `seed`; restart k depends only
/// on (seed, k). Throws SearchFailure when every restart is degenerate.
SearchResult ratio_supremum_search(const Generator& f, const Generator& g,
                                   std::size_t alphabet_size, std::size_t restarts,
                                   std::uint64_t seed);

/// Same search with an explicit objective id and claimed constant.
SearchResult ratio_supremum_search(const std::string& objective_id, const Generator& f,
                                   const Generator& g, ExtReal claimed, std::size_t alphabet_size,
                                   std::size_t restarts, std::uint64_t seed);

/// Search over pairs with the given (beta1, beta2): two atoms carry the
/// likelihood ratios 1/beta1 and beta2, the rest have ratios inside the
/// window. The claimed constant is the restricted kappa sup (or inf).
SearchResult constrained_ratio_search(const Generator& f, const Generator& g, double beta1,
                                      double beta2, std::size_t alphabet_size,
                                      std::size_t restarts, std::uint64_t seed,
                                      Sense sense = Sense::supremum);

SearchResult constrained_ratio_search(const std::string& objective_id, const Generator& f,
                                      const Generator& g, ExtReal claimed, double beta1,
                                      double beta2, std::size_t alphabet_size,
                                      std::size_t restarts, std::uint64_t seed, Sense sense);

/// The binary pair with likelihood ratios {1/beta1, beta2}.
std::pair<DiscreteDist, DiscreteDist> pinned_binary_pair(double beta1, double beta2);

/// Named objectives with their tight constants:
///   symmetrized_kl_chi2  (D(P||Q)+D(Q||P)) / (chi2(P||Q)+chi2(Q||P)),  1/2
///   samson               (d2^2(P,Q)+d2^2(Q,P)) / D(P||Q),              2
///   marton_tv            d2^2(P,Q) / |P-Q|,                             1/2
///   marton_sym_tv        (d2^2(P,Q)+d2^2(Q,P)) / |P-Q|,                 1
///   reverse_samson       infimum of the samson ratio at fixed betas
///   kl_ratio             D(P||Q)/D(Q||P) at fixed betas
struct NamedObjective {
  std::string id;
  Generator f;
  Generator g;
  Sense sense;
  bool needs_betas;
  /// Constant for unconstrained objectives.
  std::optional<ExtReal> claimed;
};

NamedObjective named_objective(const std::string& id);
const std::vector<std::string>& named_objective_ids();

/// Runs a named objective; beta-pinned ones need beta1/beta2.
SearchResult run_named_search(const std::string& id, std::size_t alphabet_size,
                              std::size_t restarts, std::uint64_t seed,
                              std::optional<double> beta1 = std::nullopt,
                              std::optional<double> beta2 = std::nullopt);

struct ProbeEntry {
  double eps = 0.0;
  ExtReal df;
  ExtReal dg;
  /// Empty when D_g = 0 (e.g. eps = 0).
  std::optional<double> ratio;
};

/// D_f(P_eps||Q)/D_g(P_eps||Q) along P_eps = (1-eps) Q + eps Qp. The
/// schedule must be strictly decreasing within [0, 1].
std::vector<ProbeEntry> local_behavior_probe(const DiscreteDist& Q, const DiscreteDist& Qp,
                                             const Generator& f, const Generator& g,
                                             const std::vector<double>& eps_schedule);

/// 2^-1, ..., 2^-steps.
std::vector<double> dyadic_schedule(int steps);

}  // namespace fdivergence
