#pragma once

#include <string>
#include <utility>

#include "fdiv/extended_real.hpp"
#include "fdiv/generators.hpp"

namespace fdivergence {

/// Where an extremum of kappa = f/g was found.
struct KappaWitness {
  enum class Kind { interior, zero, one_left, one_right, infinity };
  Kind kind = Kind::interior;
  /// Abscissa for interior and window-endpoint witnesses.
  double t = 0.0;
};

std::string to_string(KappaWitness::Kind kind);

struct KappaExtremum {
  ExtReal value;
  KappaWitness witness;
  /// A boundary limit had to be approximated by evaluating kappa far out.
  bool estimated = false;
};

/// kappa(t) = f(t)/g(t) for t in (0,1) u (1,inf). Throws DomainError at
/// t = 1 and DominationHypothesisError when g(t) <= 0.
ExtReal kappa_at(const Generator& f, const Generator& g, double t);

/// One-sided limits of kappa at 1. Uses f''(1)/g''(1) per side when both
/// generators carry second-derivative data (and g'' > 0); otherwise
/// Richardson extrapolation along t = 1 -/+ 2^-k h0. Throws NumericalError
/// when the extrapolation does not settle.
std::pair<ExtReal, ExtReal> kappa_limits_at_one(const Generator& f, const Generator& g);

/// Supremum of kappa over (0,1) u (1,inf), boundary limits included.
KappaExtremum kappa_sup(const Generator& f, const Generator& g);

struct KappaRange {
  KappaExtremum sup;
  KappaExtremum inf;
};

/// Supremum and infimum of kappa over (beta2, 1) u (1, 1/beta1), endpoint
/// values included. beta1 = 0 opens the right side to inf, beta2 = 0 the
/// left side to 0. Requires (beta1, beta2) in [0,1)^2.
KappaRange kappa_restricted(const Generator& f, const Generator& g, double beta1, double beta2);

struct KappaProfile {
  std::string f_name;
  std::string g_name;
  ExtReal kappa_bar;
  ExtReal kappa_star_sup;
  ExtReal kappa_star_inf;
  ExtReal limit_left_1;
  ExtReal limit_right_1;
  KappaWitness argmax_witness;
  bool estimated = false;
};

KappaProfile kappa_profile(const Generator& f, const Generator& g, double beta1, double beta2);

}  // namespace fdivergence
