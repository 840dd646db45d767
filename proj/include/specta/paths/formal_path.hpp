#pragma once

#include <string>
#include <vector>

#include "specta/arith/upoly.hpp"
#include "specta/paths/puiseux.hpp"

namespace specta::paths {

enum class Generator { Polynomial, RationalFunction, Factorial, ExplicitList };

const char* generatorName(Generator g);

/// One coordinate of a formal path, stored as its generator so that it can
/// be expanded to any truncation. `power` records a reparametrization
/// t -> t^power applied after generation.
struct PathComponent {
  Generator generator = Generator::Polynomial;
  UPoly numerator;    // Polynomial, RationalFunction
  UPoly denominator;  // RationalFunction
  PuiseuxSeries::Terms terms;  // ExplicitList, exponents n / ramification
  long ramification = 1;
  long power = 1;

  static PathComponent polynomial(UPoly p);
  /// Denominator must not vanish at t = 0.
  static PathComponent ratio(UPoly num, UPoly den);
  /// sum_{n >= 2} n! t^n
  static PathComponent factorial();
  /// Finite sum sum c_n t^(n/e), taken as an exact closed form.
  static PathComponent explicitList(PuiseuxSeries::Terms terms, long ramification);

  /// Expansion known below `cap` (exact for finite closed forms).
  PuiseuxSeries expand(const Rational& cap) const;
  std::string toString() const;
};

/// Tuple of formal series, the i-th component bound to the variable x(i+1).
class FormalPath {
 public:
  FormalPath() = default;
  explicit FormalPath(std::vector<PathComponent> components);

  std::size_t size() const { return components_.size(); }
  const PathComponent& component(std::size_t i) const { return components_.at(i); }
  const std::vector<PathComponent>& components() const { return components_; }

  std::vector<PuiseuxSeries> expand(const Rational& cap) const;
  /// t -> t^p on every component.
  FormalPath reparametrize(long p) const;

  std::string toString() const;

 private:
  std::vector<PathComponent> components_;
};

}  // namespace specta::paths
