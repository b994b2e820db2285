#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fdiv/distributions.hpp"
#include "fdiv/extended_real.hpp"
#include "fdiv/generators.hpp"
#include "fdiv/kappa.hpp"

namespace fdivergence {

/// One evaluated inequality lhs <= rhs. Values are stored in nats.
struct BoundReport {
  std::string bound_id;
  ExtReal lhs;
  ExtReal rhs;
  /// rhs - lhs, with inf - inf taken as 0.
  ExtReal slack;
  bool holds = false;
  bool preconditions_met = true;
  std::vector<std::string> failed_preconditions;
  bool skipped = false;
  /// Human-readable name of the inequality.
  std::string paper_anchor;
  /// 1 when lhs/rhs carry log units (converted for bits output), else 0.
  int log_power = 0;
  std::vector<std::string> notes;
};

/// Slack below which a bound counts as violated.
inline constexpr double kBoundTolerance = 1e-10;

BoundReport make_report(std::string id, std::string anchor, ExtReal lhs, ExtReal rhs,
                        int log_power);
BoundReport skipped_report(std::string id, std::string anchor,
                           std::vector<std::string> failed_preconditions);

// Every bound takes the PairContext of (P, Q); see pair_context().

/// D_f <= kappa_bar D_g. `kappa_bar` may be passed in to avoid recomputing it.
BoundReport bound_domination(const Generator& f, const Generator& g, const PairContext& ctx,
                             std::optional<KappaExtremum> kappa_bar = std::nullopt);

enum class KlTvChi2Variant { chi2_only, quarter_half };
/// D <= (c1 |P-Q| + c2 chi2) nats with (c1, c2) = (0, 1) or (1/4, 1/2).
BoundReport bound_kl_tv_chi2(const PairContext& ctx, KlTvChi2Variant variant);

/// (D(P||Q) + D(Q||P)) / (chi2(P||Q) + chi2(Q||P)) <= 1/2 nats.
BoundReport bound_symmetrized_ratio(const PairContext& ctx);

/// Marton's divergence d2^2(P,Q) = D_s(P||Q), s(t) = (t-1)^2 1{t<1}.
ExtReal marton_divergence(const AlignedPair& pair);
/// d2^2(Q,P), computed as D_{s*}(P||Q); cross-checked against the swapped
/// call when Q << P as well. Throws NumericalError if the two routes differ.
ExtReal marton_divergence_reverse(const AlignedPair& pair, bool mutually_ac);

/// d2^2(P,Q) + d2^2(Q,P) <= 2 D(P||Q) nats.
BoundReport bound_samson(const PairContext& ctx);

/// D_f <= (f(0) + f*(0))/2 |P-Q|.
BoundReport bound_basu(const Generator& f, const PairContext& ctx);
/// D_f <= f(0) + f*(0).
BoundReport bound_vajda_range(const Generator& f, const PairContext& ctx);

/// {upper: D_f <= kappa*_sup D_g, lower: kappa*_inf D_g <= D_f}.
std::pair<BoundReport, BoundReport> bound_restricted_domination(const Generator& f,
                                                                const Generator& g,
                                                                const PairContext& ctx);

/// chi2 <= max{1/beta1 - 1, 1 - beta2} |P-Q|.
BoundReport bound_chi2_tv_beta(const PairContext& ctx);

/// kappa(t) = (t ln t + 1 - t)/((t - 1) - ln t).
double kl_ratio_kappa(double t);
/// {lower: kappa(beta2) <= D(P||Q)/D(Q||P), upper: ratio <= kappa(1/beta1)}.
std::pair<BoundReport, BoundReport> bound_kl_ratio(const PairContext& ctx);

/// kappa(t) = (t-1)^2 / (r(t) max{1,t}).
double reverse_samson_kappa(double t);
/// min{kappa(1/beta1), kappa(beta2)} D(P||Q) <= d2^2(P,Q) + d2^2(Q,P).
BoundReport bound_reverse_samson(const PairContext& ctx);

/// A convex function on the real line.
struct RealConvexFunction {
  std::string name;
  std::function<double(double)> fn;
};
/// square, abs, exp. Throws RegistryError otherwise.
RealConvexFunction real_convex_function(const std::string& name);

/// For each input label, the conditional law of a real Z as (z, prob) pairs.
using Channel = std::map<std::string, std::vector<std::pair<double, double>>>;

/// beta (E f(E[Z0|X0]) - f(E Z0)) <= E f(E[Z1|X1]) - f(E Z1), X0 ~ P_Z,
/// X1 ~ P_U, beta = ess inf dP_U/dP_Z.
BoundReport strengthened_jensen(const RealConvexFunction& f, const DiscreteDist& p_u,
                                const DiscreteDist& p_z, const Channel& channel);

/// {lower: beta2 D_f <= E_P f(dP/dQ) - f(1 + chi2), upper: middle <= D_f / beta1}.
std::pair<BoundReport, BoundReport> bound_jensen_gap(const Generator& f, const PairContext& ctx);

/// {D <= ln(1 + chi2), ln(1 + chi2) <= chi2}.
std::pair<BoundReport, BoundReport> bound_kl_log1p_chi2(const PairContext& ctx);

/// {lower: beta2 D(Q||P) <= ln(1+chi2) - D(P||Q), upper: middle <= D(Q||P)/beta1}.
std::pair<BoundReport, BoundReport> bound_d_chi_sandwich(const PairContext& ctx);

/// phi(t) = t ln t / (t - 1), phi(0) = 0, phi(1) = 1.
double reverse_pinsker_phi(double t);
/// D <= (phi(1/beta1) - phi(beta2)) |P-Q| / 2.
BoundReport bound_reverse_pinsker_phi(const PairContext& ctx);

/// [0] D <= ln(1 + |P-Q|^2 / (2 Q_min)); [1] the same minus beta2 |P-Q|^2 / 2
/// (needs Q << P); [2] D <= |P-Q|^2 / Q_min; [3] rhs of [0] <= rhs of [2].
std::vector<BoundReport> bound_reverse_pinsker_qmin(const PairContext& ctx);

struct CatalogConfig {
  /// Generators for the single-generator bounds (Basu, Vajda range, Jensen gap).
  std::vector<std::string> generators;
  /// (f, g) pairs for functional domination.
  std::vector<std::pair<std::string, std::string>> domination_pairs;
  /// (f, g) pairs for the beta-restricted domination sandwich.
  std::vector<std::pair<std::string, std::string>> restricted_pairs;

  static CatalogConfig defaults();
};

/// Precomputes the pair-independent constants once; run() is then cheap and
/// safe to call concurrently.
class Catalog {
 public:
  explicit Catalog(const CatalogConfig& config = CatalogConfig::defaults());

  /// Every bound, in fixed id order. Bounds whose hypotheses fail are
  /// reported as skipped.
  [[nodiscard]] std::vector<BoundReport> run(const DiscreteDist& P, const DiscreteDist& Q) const;

 private:
  struct Pair {
    Generator f;
    Generator g;
    std::optional<KappaExtremum> kappa_bar;
    std::string hypothesis_error;
  };
  std::vector<Generator> singles_;
  std::vector<Pair> domination_;
  std::vector<std::pair<Generator, Generator>> restricted_;
};

std::vector<BoundReport> run_catalog(const DiscreteDist& P, const DiscreteDist& Q);

/// Offset-normalized generator when f is differentiable at 1, else f.
Generator prepared_generator(const std::string& name);

}  // namespace fdivergence
