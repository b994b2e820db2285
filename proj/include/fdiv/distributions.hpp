#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fdiv/extended_real.hpp"
#include "fdiv/generators.hpp"

namespace fdivergence {

struct Atom {
  std::string label;
  double prob = 0.0;
};

enum class Ingest { strict, renormalize };

/// Probability vector over a finite, labelled alphabet.
class DiscreteDist {
 public:
  /// Strict ingest requires the sum within 1e-12 of 1; renormalize accepts
  /// sums within 1e-6 and rescales. Throws ValidationError.
  explicit DiscreteDist(std::vector<Atom> atoms, Ingest mode = Ingest::strict);

  /// Labels "0", "1", ...
  static DiscreteDist from_probs(std::span<const double> probs, Ingest mode = Ingest::strict);
  static DiscreteDist from_probs(std::initializer_list<double> probs,
                                 Ingest mode = Ingest::strict) {
    return from_probs(std::span<const double>(probs.begin(), probs.size()), mode);
  }

  [[nodiscard]] const std::vector<Atom>& atoms() const { return atoms_; }
  [[nodiscard]] std::size_t size() const { return atoms_.size(); }
  [[nodiscard]] std::vector<double> probs() const;
  /// Probability of `label`; 0 for labels outside the alphabet.
  [[nodiscard]] double prob(const std::string& label) const;

  friend bool operator==(const DiscreteDist& a, const DiscreteDist& b);

 private:
  std::vector<Atom> atoms_;
};

/// Union alphabet of P and Q (P's labels first), missing labels as zeros.
struct AlignedPair {
  std::vector<std::string> labels;
  std::vector<double> p;
  std::vector<double> q;
};

AlignedPair align(const DiscreteDist& P, const DiscreteDist& Q);

/// ln(P(a)/Q(a)); -inf when P(a) = 0 < Q(a). Throws AbsoluteContinuityError
/// when P(a) > 0 = Q(a), DomainError when both are zero.
ExtReal relative_information(const DiscreteDist& P, const DiscreteDist& Q,
                             const std::string& label);

struct PairContext {
  AlignedPair aligned;
  bool p_ac_q = false;
  bool q_ac_p = false;
  /// Reciprocal essential supremum of dP/dQ (0 unless P << Q).
  double beta1 = 0.0;
  /// Essential infimum of dP/dQ (0 unless Q << P).
  double beta2 = 0.0;
  /// Smallest positive Q-probability.
  double q_min = 0.0;
  /// Range of ln dP/dQ over atoms with P(a) > 0.
  std::pair<ExtReal, ExtReal> relinfo_range;

  [[nodiscard]] bool mutually_ac() const { return p_ac_q && q_ac_p; }
  /// beta1 == beta2 == 1, i.e. P == Q.
  [[nodiscard]] bool identical() const { return beta1 == 1.0 && beta2 == 1.0; }
};

PairContext pair_context(const DiscreteDist& P, const DiscreteDist& Q);

/// D_f(P||Q) = sum over Q(a) > 0 of Q(a) f(P(a)/Q(a)), with f(0) for P(a) = 0.
/// Throws AbsoluteContinuityError unless P << Q.
ExtReal divergence(const Generator& f, const DiscreteDist& P, const DiscreteDist& Q);
ExtReal divergence(const Generator& f, const AlignedPair& pair);

/// Total variation |P - Q| = sum |P(a) - Q(a)| (no continuity requirement).
double total_variation(const AlignedPair& pair);

/// (1 - eps) Q + eps Qp. Throws AbsoluteContinuityError unless Qp << Q.
DiscreteDist mixture_path(const DiscreteDist& Q, const DiscreteDist& Qp, double eps);

/// Pair of 1-D densities with respect to Lebesgue measure.
struct DensityPair {
  std::function<double(double)> p_density;
  std::function<double(double)> q_density;
  std::pair<double, double> support_hint;
  /// Kinks or other points the quadrature should split at.
  std::vector<double> breakpoints;
  std::optional<std::pair<double, double>> closed_form_betas;
};

/// Checks that both densities integrate to 1 within 1e-9 over the
/// integration window; throws ValidationError otherwise.
DensityPair make_density_pair(std::function<double(double)> p, std::function<double(double)> q,
                              std::pair<double, double> support_hint,
                              std::vector<double> breakpoints = {},
                              std::optional<std::pair<double, double>> closed_form_betas = {});

/// Densities (lambda/2) exp(-lambda |x - a0|) and (lambda/2) exp(-lambda |x - a1|).
DensityPair laplace_pair(double lambda, double a0, double a1);

/// support_hint widened until both densities fall below 1e-15 of their peaks.
std::pair<double, double> integration_window(const DensityPair& pair);

struct DensityDivergence {
  ExtReal value;
  double error_estimate = 0.0;
};

/// Adaptive-quadrature estimate of the integral of q f(p/q), absolute
/// tolerance 1e-9. Throws AbsoluteContinuityError if p > 0 = q at a node.
DensityDivergence divergence_density(const Generator& f, const DensityPair& pair);

struct DensityBetas {
  double beta1 = 0.0;
  double beta2 = 0.0;
  bool estimated = false;
};

/// Closed-form betas when the pair carries them, else extremes of p/q on a
/// dense node grid (flagged estimated).
DensityBetas density_betas(const DensityPair& pair);

}  // namespace fdivergence
