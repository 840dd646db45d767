#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specta/arith/polynomial.hpp"
#include "specta/paths/formal_path.hpp"
#include "specta/paths/puiseux.hpp"
#include "specta/paths/safunction.hpp"

namespace specta::paths {

/// SPECTA_TRUNCATION when it holds a positive integer, 32 otherwise.
Rational defaultTruncation();

SeriesOrder seriesOrder(const PuiseuxSeries& s);

/// Value of f along alpha, known below T (closed forms stay exact). On
/// IndeterminateDenominator the evaluation is repeated once at 2T.
PuiseuxSeries evalOnPath(const SAFunction& f, const FormalPath& alpha, const Rational& T);
PuiseuxSeries evalOnPath(const SAFunction& f, const FormalPath& alpha);

/// Constant term of f along alpha. Throws UnboundedAlongPath for negative
/// order and IndeterminateOrder when the series is not known at t^0.
Rational constantTerm(const SAFunction& f, const FormalPath& alpha, const Rational& T);

enum class IdealKind { MStar, PAlpha };
enum class IdealStatus { InIdealUpToT, NotInIdeal, ExactlyInIdeal };
const char* idealStatusName(IdealStatus s);

struct IdealVerdict {
  IdealStatus status = IdealStatus::InIdealUpToT;
  /// Order of the evaluated series when known.
  std::optional<Rational> witnessOrder;
  /// NotInIdeal: the nonzero coefficient that decides it.
  std::optional<Rational> witness;
  /// Truncation actually used.
  Rational truncation;
};

/// MStar decides phi_alpha(f) = 0, PAlpha decides psi_alpha(f) = 0.
IdealVerdict idealMembership(const SAFunction& f, const FormalPath& alpha, IdealKind which, const Rational& T);

/// k = 1 + floor(max ord P_i(alpha)); every path within (t)^k of alpha keeps
/// all P_i positive. Throws NotPositiveOnPath or IndeterminateOrder.
long positivityBound(const std::vector<Polynomial>& polys, const FormalPath& alpha, const Rational& T);

/// Every P_i along the given series has a positive leading coefficient.
bool positiveAlong(const std::vector<Polynomial>& polys, const std::vector<PuiseuxSeries>& at, const Rational& T);

struct CarrierData {
  long k = 0;
  /// Degree <= k truncations of the components.
  std::vector<UPoly> mu;
  /// Coefficients of t^(k+1) in alpha - mu.
  std::vector<Rational> s0;
  /// Grid paths mu + t^(k+1) s checked positive, all of them passing.
  std::size_t samplesChecked = 0;
};

/// Carrier data for a path in {f_i > 0, g = 0}. Components must be ordinary
/// power series. Throws NotOnVariety when g has a nonzero term along alpha.
CarrierData compactCarrier(const FormalPath& alpha, const std::vector<Polynomial>& positive,
                           const std::optional<Polynomial>& equation, const Rational& T);

struct NeighborhoodElement {
  long ell = 0;
  long k = 0;
  /// gamma_j: truncation of alpha_j below t^(ell+2); gamma_1 = t.
  std::vector<UPoly> gamma;
  /// x1^(2 ell + 2) - sum_{j >= 2} (x_j - gamma_j(x1))^2
  SAFunction f = SAFunction::constant(0);
  /// 1/k^2 - x1^2
  SAFunction h = SAFunction::constant(0);
};

/// Requires alpha_1 = t exactly (NormalizationRequired otherwise).
NeighborhoodElement neighborhoodElement(const FormalPath& alpha, long ell, long k, const Rational& T);

struct NeighborhoodMembership {
  bool member = false;
  PuiseuxSeries fValue, hValue;
};

/// mu belongs to U_{ell,k} when f and h both have positive leading
/// coefficients along it. Throws IndeterminateOrder when a sign is unknown.
NeighborhoodMembership neighborhoodMembership(const NeighborhoodElement& u, const std::vector<PuiseuxSeries>& mu,
                                              const Rational& T);
NeighborhoodMembership neighborhoodMembership(const NeighborhoodElement& u, const FormalPath& mu, const Rational& T);

/// sum_{n=2}^{k} n! x^n
UPoly factorialPolynomial(long k);
/// (y - p_k(x))^2 / ((y - p_k(x))^2 + x^(2k)) in the variables x1, x2.
SAFunction factorialSeparator(long k);

struct Separation {
  long k = 0;
  Rational value;
  /// ord(alpha_2(t^j) - mu_2(t)) when known below T.
  std::optional<Rational> differenceOrder;
};

/// Least k in [2, kMax] with a nonzero constant term of f_k along mu, where
/// mu_1 = t^j exactly (NormalizationRequired otherwise).
std::optional<Separation> separateFromAlgebraic(const FormalPath& alpha, const FormalPath& mu, long kMax,
                                                const Rational& T);

}  // namespace specta::paths
