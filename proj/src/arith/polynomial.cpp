#include "specta/arith/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "specta/arith/resultant.hpp"
#include "specta/error.hpp"

namespace specta {

namespace {

std::pair<std::string, long> splitName(const std::string& s) {
  std::size_t i = s.size();
  while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
  if (i == s.size() || s.size() - i > 9) return {s, -1};
  return {s.substr(0, i), std::stol(s.substr(i))};
}

std::vector<std::string> unionVars(const std::vector<std::string>& a,
                                   const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                 Polynomial::variableLess);
  return out;
}

}  // namespace

bool Polynomial::variableLess(const std::string& a, const std::string& b) {
  auto [pa, na] = splitName(a);
  auto [pb, nb] = splitName(b);
  if (pa != pb) return pa < pb;
  return na < nb;
}

Polynomial::Polynomial(std::vector<std::string> vars, Terms terms)
    : vars_(std::move(vars)), terms_(std::move(terms)) {
  normalize();
}

void Polynomial::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (sgn(it->second) == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

Polynomial Polynomial::constant(const Rational& c) {
  Terms t;
  t[{}] = c;
  return Polynomial({}, std::move(t));
}

Polynomial Polynomial::variable(const std::string& name) {
  Terms t;
  t[{1u}] = Rational(1);
  return Polynomial({name}, std::move(t));
}

Polynomial Polynomial::monomial(const Rational& c,
                                const std::map<std::string, unsigned>& powers) {
  std::vector<std::string> vars;
  for (const auto& [v, e] : powers) vars.push_back(v);
  std::sort(vars.begin(), vars.end(), variableLess);
  Exponents ex;
  for (const auto& v : vars) ex.push_back(powers.at(v));
  Terms t;
  t[ex] = c;
  return Polynomial(std::move(vars), std::move(t));
}

Polynomial Polynomial::fromUnivariate(const UPoly& p, const std::string& var) {
  Terms t;
  for (int i = 0; i <= p.degree(); ++i) t[{static_cast<unsigned>(i)}] = p.coeff(i);
  return Polynomial({var}, std::move(t));
}

Polynomial Polynomial::aligned(const std::vector<std::string>& vars) const {
  if (vars == vars_) return *this;
  std::vector<std::size_t> pos(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), vars_[i]);
    pos[i] = static_cast<std::size_t>(it - vars.begin());
  }
  Terms t;
  for (const auto& [ex, c] : terms_) {
    Exponents e(vars.size(), 0);
    for (std::size_t i = 0; i < ex.size(); ++i) e[pos[i]] = ex[i];
    t[e] = c;
  }
  Polynomial r;
  r.vars_ = vars;
  r.terms_ = std::move(t);
  return r;
}

bool Polynomial::isConstant() const {
  for (const auto& [ex, c] : terms_)
    for (unsigned e : ex)
      if (e != 0) return false;
  return true;
}

Rational Polynomial::constantTerm() const {
  for (const auto& [ex, c] : terms_)
    if (std::all_of(ex.begin(), ex.end(), [](unsigned e) { return e == 0; })) return c;
  return Rational(0);
}

bool Polynomial::involves(const std::string& var) const { return degreeIn(var) > 0; }

unsigned Polynomial::degreeIn(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return 0;
  std::size_t i = static_cast<std::size_t>(it - vars_.begin());
  unsigned d = 0;
  for (const auto& [ex, c] : terms_) d = std::max(d, ex[i]);
  return d;
}

unsigned Polynomial::totalDegree() const {
  unsigned d = 0;
  for (const auto& [ex, c] : terms_) {
    unsigned s = 0;
    for (unsigned e : ex) s += e;
    d = std::max(d, s);
  }
  return d;
}

std::vector<std::string> Polynomial::support() const {
  std::vector<std::string> out;
  for (const auto& v : vars_)
    if (degreeIn(v) > 0) out.push_back(v);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [ex, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  auto vars = unionVars(vars_, o.vars_);
  *this = aligned(vars);
  Polynomial b = o.aligned(vars);
  for (const auto& [ex, c] : b.terms_) {
    auto& slot = terms_[ex];
    slot += c;
    if (sgn(slot) == 0) terms_.erase(ex);
  }
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  auto vars = unionVars(vars_, o.vars_);
  Polynomial a = aligned(vars);
  Polynomial b = o.aligned(vars);
  Terms t;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(vars.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      t[e] += ca * cb;
    }
  }
  *this = Polynomial(std::move(vars), std::move(t));
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [ex, c] : terms_) c *= s;
  return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) { return (a - b).isZero(); }

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

Polynomial Polynomial::derivative(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return Polynomial();
  std::size_t i = static_cast<std::size_t>(it - vars_.begin());
  Terms t;
  for (const auto& [ex, c] : terms_) {
    if (ex[i] == 0) continue;
    Exponents e = ex;
    e[i] -= 1;
    t[e] += c * ex[i];
  }
  return Polynomial(vars_, std::move(t));
}

Rational Polynomial::evaluate(const std::map<std::string, Rational>& point) const {
  std::vector<const Rational*> vals(vars_.size(), nullptr);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = point.find(vars_[i]);
    if (it != point.end()) vals[i] = &it->second;
  }
  Rational sum = 0;
  for (const auto& [ex, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < ex.size(); ++i) {
      if (ex[i] == 0) continue;
      if (!vals[i]) throw Error(ErrorKind::InputError, "evaluate: unbound variable " + vars_[i]);
      term *= power(*vals[i], ex[i]);
    }
    sum += term;
  }
  return sum;
}

std::vector<Polynomial> Polynomial::coefficientsIn(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return isZero() ? std::vector<Polynomial>{} : std::vector<Polynomial>{*this};
  std::size_t i = static_cast<std::size_t>(it - vars_.begin());
  std::vector<std::string> rest = vars_;
  rest.erase(rest.begin() + static_cast<long>(i));
  std::vector<Terms> parts(degreeIn(var) + 1);
  for (const auto& [ex, c] : terms_) {
    Exponents e = ex;
    unsigned d = e[i];
    e.erase(e.begin() + static_cast<long>(i));
    parts[d][e] = c;
  }
  std::vector<Polynomial> out;
  for (auto& t : parts) out.push_back(Polynomial(rest, std::move(t)));
  while (!out.empty() && out.back().isZero()) out.pop_back();
  return out;
}

Polynomial Polynomial::fromCoefficients(const std::vector<Polynomial>& coeffs,
                                        const std::string& var) {
  Polynomial result;
  Polynomial x = variable(var);
  Polynomial xp = constant(1);
  for (const auto& c : coeffs) {
    result += c * xp;
    xp *= x;
  }
  return result;
}

Polynomial Polynomial::substitute(const std::string& var, const Polynomial& value) const {
  auto coeffs = coefficientsIn(var);
  Polynomial result;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    result *= value;
    result += coeffs[i];
  }
  return result;
}

UPoly Polynomial::toUnivariate(const std::string& var) const {
  for (const auto& v : support())
    if (v != var)
      throw Error(ErrorKind::InputError, "toUnivariate: polynomial also involves " + v);
  std::vector<Rational> c(degreeIn(var) + 1, Rational(0));
  auto it = std::find(vars_.begin(), vars_.end(), var);
  for (const auto& [ex, coef] : terms_) {
    unsigned d = 0;
    if (it != vars_.end()) d = ex[static_cast<std::size_t>(it - vars_.begin())];
    c[d] += coef;
  }
  return UPoly(std::move(c));
}

std::string Polynomial::toString() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest lexicographic exponent first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [ex, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < ex.size(); ++i) {
      if (ex[i] == 0) continue;
      factors.push_back(ex[i] == 1 ? vars_[i] : vars_[i] + "^" + std::to_string(ex[i]));
    }
    if (factors.empty() || mag != 1) {
      os << mag.get_str();
      if (!factors.empty()) os << "*";
    }
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k) os << "*";
      os << factors[k];
    }
  }
  return os.str();
}

Polynomial divExact(const Polynomial& a, const Polynomial& b) {
  if (b.isZero()) throw Error(ErrorKind::InputError, "divExact: division by zero polynomial");
  // Lex leading terms agree whatever extra (zero-exponent) variables a list
  // carries, so each operand can keep its own variable list.
  const auto& bl = *b.terms().rbegin();
  std::map<std::string, unsigned> bPow;
  for (std::size_t i = 0; i < b.variables().size(); ++i)
    if (bl.first[i]) bPow[b.variables()[i]] = bl.first[i];
  Polynomial r = a;
  Polynomial q;
  while (!r.isZero()) {
    const auto& rl = *r.terms().rbegin();
    std::map<std::string, unsigned> qPow;
    for (std::size_t i = 0; i < r.variables().size(); ++i)
      if (rl.first[i]) qPow[r.variables()[i]] = rl.first[i];
    for (const auto& [v, e] : bPow) {
      auto it = qPow.find(v);
      if (it == qPow.end() || it->second < e)
        throw Error(ErrorKind::InputError, "divExact: not divisible");
      it->second -= e;
    }
    Polynomial t = Polynomial::monomial(rl.second / bl.second, qPow);
    q += t;
    r -= t * b;
  }
  return q;
}

namespace {

std::vector<Polynomial> coeffVector(const Polynomial& p, const std::string& var) {
  return p.coefficientsIn(var);
}

}  // namespace

Polynomial resultant(const Polynomial& p, const Polynomial& q, const std::string& var) {
  if (p.isZero() || q.isZero()) throw Error(ErrorKind::InputError, "resultant of zero polynomial");
  return subres::resultant(coeffVector(p, var), coeffVector(q, var), Polynomial::constant(1));
}

Polynomial discriminant(const Polynomial& p, const std::string& var) {
  unsigned n = p.degreeIn(var);
  if (n == 0) throw Error(ErrorKind::InputError, "discriminant: polynomial does not involve " + var);
  Polynomial r = resultant(p, p.derivative(var), var);
  Polynomial lc = p.coefficientsIn(var).back();
  Polynomial d = divExact(r, lc);
  if ((n * (n - 1) / 2) % 2 == 1) d = -d;
  return d;
}

}  // namespace specta
