#include "specta/paths/formal_path.hpp"

#include "specta/error.hpp"

namespace specta::paths {

const char* generatorName(Generator g) {
  switch (g) {
    case Generator::Polynomial: return "poly";
    case Generator::RationalFunction: return "ratio";
    case Generator::Factorial: return "factorial";
    case Generator::ExplicitList: return "coeffs";
  }
  return "";
}

PathComponent PathComponent::polynomial(UPoly p) {
  PathComponent c;
  c.numerator = std::move(p);
  return c;
}

PathComponent PathComponent::ratio(UPoly num, UPoly den) {
  if (sgn(den.coeff(0)) == 0) throw Error(ErrorKind::InputError, "denominator vanishes at t = 0");
  PathComponent c;
  c.generator = Generator::RationalFunction;
  c.numerator = std::move(num);
  c.denominator = std::move(den);
  return c;
}

PathComponent PathComponent::factorial() {
  PathComponent c;
  c.generator = Generator::Factorial;
  return c;
}

PathComponent PathComponent::explicitList(PuiseuxSeries::Terms terms, long ramification) {
  if (ramification < 1) throw Error(ErrorKind::InputError, "ramification must be positive");
  for (const auto& [n, c] : terms)
    if (n < 0) throw Error(ErrorKind::InputError, "formal path components have no negative exponents");
  PathComponent c;
  c.generator = Generator::ExplicitList;
  c.terms = std::move(terms);
  c.ramification = ramification;
  return c;
}

PuiseuxSeries PathComponent::expand(const Rational& cap) const {
  Rational inner = cap / power;
  PuiseuxSeries s;
  switch (generator) {
    case Generator::Polynomial:
      s = PuiseuxSeries::fromPolynomial(numerator);
      break;
    case Generator::RationalFunction:
      s = divide(PuiseuxSeries::fromPolynomial(numerator), PuiseuxSeries::fromPolynomial(denominator), inner);
      break;
    case Generator::Factorial: {
      PuiseuxSeries::Terms t;
      Integer f = 1;
      for (long n = 2; n < inner; ++n) {
        f *= n;
        t[n] = Rational(f);
      }
      s = PuiseuxSeries::truncated(std::move(t), 1, inner);
      break;
    }
    case Generator::ExplicitList:
      s = PuiseuxSeries::exact(terms, ramification);
      break;
  }
  return s.substitutePower(power);
}

std::string PathComponent::toString() const {
  std::string out;
  switch (generator) {
    case Generator::Polynomial:
      out = "poly: " + numerator.toString("t");
      break;
    case Generator::RationalFunction:
      out = "ratio: (" + numerator.toString("t") + ")/(" + denominator.toString("t") + ")";
      break;
    case Generator::Factorial:
      out = "factorial";
      break;
    case Generator::ExplicitList:
      out = "coeffs:";
      for (const auto& [n, c] : terms) out += " " + std::to_string(n) + ":" + specta::toString(c);
      out += " @e=" + std::to_string(ramification);
      break;
  }
  if (power != 1) out += " @p=" + std::to_string(power);
  return out;
}

FormalPath::FormalPath(std::vector<PathComponent> components) : components_(std::move(components)) {}

std::vector<PuiseuxSeries> FormalPath::expand(const Rational& cap) const {
  std::vector<PuiseuxSeries> out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(c.expand(cap));
  return out;
}

FormalPath FormalPath::reparametrize(long p) const {
  if (p < 1) throw Error(ErrorKind::InputError, "reparametrization power must be positive");
  FormalPath out = *this;
  for (auto& c : out.components_) c.power *= p;
  return out;
}

std::string FormalPath::toString() const {
  std::string out = "path m=" + std::to_string(components_.size());
  for (const auto& c : components_) out += "\n" + c.toString();
  return out;
}

}  // namespace specta::paths
