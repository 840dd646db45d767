#include "specta/cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "specta/cad/decompose.hpp"
#include "specta/io/parse.hpp"
#include "specta/paths/operations.hpp"
#include "specta/topology/analysis.hpp"

namespace specta::cli {

namespace {

using topology::CellComplex;
using topology::CellId;

enum class Format { Human, Records };

struct Options {
  Format format = Format::Human;
  std::optional<unsigned long> seed;
  std::optional<long> truncation;
  bool simplicialize = false;
};

std::string readInput(const std::string& file) {
  if (file == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(file);
  if (!in) throw Error(ErrorKind::InputError, "cannot read '" + file + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void writeOutput(const std::string& file, const std::string& text) {
  std::ofstream outFile(file);
  if (!outFile) throw Error(ErrorKind::InputError, "cannot write '" + file + "'");
  outFile << text;
}

template <typename T>
std::string joined(const std::vector<T>& items, const std::string& sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < items.size(); ++i) os << (i ? sep : "") << items[i];
  return os.str();
}

std::string onOff(bool b) { return b ? "yes" : "no"; }

// ---- decompose --------------------------------------------------------------

std::string dimensionCounts(const CellComplex& k, Format f) {
  std::map<int, int> byDim;
  for (const auto& c : k.cells()) ++byDim[c.dim];
  std::vector<std::string> parts;
  for (const auto& [d, n] : byDim)
    parts.push_back(f == Format::Records ? "dim" + std::to_string(d) + "=" + std::to_string(n)
                                         : "dim " + std::to_string(d) + ": " + std::to_string(n));
  return joined(parts, f == Format::Records ? " " : ", ");
}

int cmdDecompose(const std::string& file, const std::string& output, const Options& opt, std::ostream& out) {
  std::string text = readInput(file);
  bool blank = true;
  for (std::size_t i = 0; i < text.size() && blank; ++i) {
    if (text[i] == '#') i = std::min(text.find('\n', i), text.size());
    else blank = std::isspace(static_cast<unsigned char>(text[i]));
  }
  CellComplex k;
  std::string complexText, meta;
  if (blank) {
    k = CellComplex(2, true, {}, {});
    complexText = "# formula: (empty)\n" + topology::serialize(k);
  } else {
    cad::Decomposition d = cad::decompose(io::parseFormula(text));
    k = d.complex();
    complexText = d.annotatedText();
    meta = opt.format == Format::Records
               ? " stacks=" + std::to_string(d.stacks().size()) + " cadCells=" + std::to_string(d.cadCellCount()) +
                     " shear=" + toString(d.shear())
               : "; decomposition " + std::to_string(d.cadCellCount()) + " cells over " +
                     std::to_string(d.stacks().size()) + " stacks, shear " + toString(d.shear());
  }
  if (opt.simplicialize) {
    k = topology::barycentricSubdivision(k);
    complexText = "# barycentric subdivision\n" + topology::serialize(k);
  }
  long inM = std::count_if(k.cells().begin(), k.cells().end(), [](const auto& c) { return c.inM; });
  std::string summary =
      opt.format == Format::Records
          ? "summary cells=" + std::to_string(k.size()) + (k.empty() ? "" : " " + dimensionCounts(k, opt.format)) +
                " inM=" + std::to_string(inM) + meta
          : "summary: " + std::to_string(k.size()) + " cells" +
                (k.empty() ? "" : " (" + dimensionCounts(k, opt.format) + ")") + ", " + std::to_string(inM) +
                " in M" + meta;
  if (output.empty()) {
    out << complexText << "# " << summary << "\n";
  } else {
    writeOutput(output, complexText);
    out << summary << "\n";
  }
  return Ok;
}

// ---- analyze ----------------------------------------------------------------

std::string idList(const std::vector<CellId>& ids, Format f) {
  if (f == Format::Records) return joined(ids, ",");
  return "{" + joined(ids, ", ") + "}";
}

void recordLine(std::ostream& os, const std::string& name, const topology::FingerprintRecord& r) {
  os << "fingerprint record=" << name << " r=" << r.bricks.size() << " dim=" << r.dimension << " chi=" << r.euler
     << " components=" << r.components << " compact=" << r.compact << " locallyCompact=" << r.locallyCompact
     << " eta=" << r.etaCount << "\n";
  for (std::size_t i = 0; i < r.bricks.size(); ++i) {
    const auto& b = r.bricks[i];
    os << "fingerprint-brick record=" << name << " index=" << i << " dim=" << b.dimension
       << " components=" << b.components << " chi=" << b.euler << " compact=" << b.compact << " eta=" << b.etaCount
       << "\n";
  }
}

std::string analysisReport(const CellComplex& k, Format f) {
  std::ostringstream os;
  long inM = std::count_if(k.cells().begin(), k.cells().end(), [](const auto& c) { return c.inM; });
  if (inM == 0) {
    os << (f == Format::Records ? "cells total=" + std::to_string(k.size()) + " inM=0\n"
                                : "cells: " + std::to_string(k.size()) + " (M is empty)\n");
    return os.str();
  }
  auto bricks = topology::bricks(k);
  auto rho = topology::rhoSequence(k);
  auto eta = topology::etaSet(k);
  auto fp = topology::spectralFingerprint(k);
  std::vector<int> dims;
  for (const auto& b : bricks) dims.push_back(b.dimension);
  if (f == Format::Records) {
    os << "cells total=" << k.size() << " inM=" << inM << "\n";
    os << "bricks count=" << bricks.size() << " dims=" << joined(dims, ",") << "\n";
    for (std::size_t i = 0; i < bricks.size(); ++i)
      os << "brick index=" << i << " dim=" << bricks[i].dimension << " cells=" << joined(bricks[i].cells, ",")
         << "\n";
    os << "rho rho0=" << rho.rho0.size() << " rho1=" << rho.rho1.size() << " lc=" << rho.locallyCompactPart.size()
       << " rho1Cells=" << idList(rho.rho1, f) << "\n";
    os << "eta count=" << eta.size() << " cells=" << idList(eta, f) << "\n";
    os << "compactness compact=" << fp.base.compact << " locallyCompact=" << fp.base.locallyCompact << "\n";
    recordLine(os, "M", fp.base);
    recordLine(os, "M-eta", fp.minusEta);
    recordLine(os, "core", fp.core);
    return os.str();
  }
  os << "cells: " << k.size() << " (" << inM << " in M)\n";
  os << "bricks: " << bricks.size() << " (dims " << joined(dims, ", ") << ")\n";
  for (std::size_t i = 0; i < bricks.size(); ++i)
    os << "  B" << i << ": dim " << bricks[i].dimension << ", cells " << idList(bricks[i].cells, f) << "\n";
  os << "rho0: " << rho.rho0.size() << " cells, rho1: " << rho.rho1.size() << " cells " << idList(rho.rho1, f)
     << ", M_lc: " << rho.locallyCompactPart.size() << " cells\n";
  os << "eta: " << eta.size() << " points " << idList(eta, f) << "\n";
  os << "compact: " << onOff(fp.base.compact) << ", locally compact: " << onOff(fp.base.locallyCompact) << "\n";
  os << "fingerprint:\n" << topology::formatFingerprint(fp);
  return os.str();
}

CellComplex loadComplex(const std::string& file, const Options& opt) {
  CellComplex k = topology::parseComplex(readInput(file));
  return opt.simplicialize ? topology::barycentricSubdivision(k) : k;
}

int cmdAnalyze(const std::string& file, const Options& opt, std::ostream& out) {
  out << analysisReport(loadComplex(file, opt), opt.format);
  return Ok;
}

// ---- compare ----------------------------------------------------------------

const std::vector<std::string> kFields = {"brickCount", "bricks",     "compact", "locallyCompact",
                                          "dim",        "components", "euler",   "etaCount"};

std::vector<std::string> matchedFields(const topology::VerdictRow& row) {
  std::vector<std::string> m;
  for (const auto& f : kFields)
    if (std::find(row.mismatched.begin(), row.mismatched.end(), f) == row.mismatched.end()) m.push_back(f);
  return m;
}

int cmdCompare(const std::string& a, const std::string& b, const Options& opt, std::ostream& out) {
  auto report = topology::compareSpectralTypes(loadComplex(a, opt), loadComplex(b, opt));
  const std::pair<const char*, const topology::VerdictRow*> rows[] = {{"spectrum", &report.spectrum},
                                                                      {"bounded", &report.boundedSpectrum},
                                                                      {"mixed", &report.mixed},
                                                                      {"core", &report.coreSpectrum}};
  if (opt.format == Format::Records) {
    for (const auto& [key, row] : rows)
      out << "verdict row=" << key << " status=" << verdictName(row->verdict)
          << " mismatched=" << joined(row->mismatched, ",") << " matched=" << joined(matchedFields(*row), ",")
          << "\n";
    return Ok;
  }
  out << "relation                 verdict     mismatched / matched\n";
  for (const auto& [key, row] : rows) {
    std::string rel = row->relation;
    std::string verdict = verdictName(row->verdict);
    out << rel << std::string(25 - std::min<std::size_t>(24, rel.size()), ' ') << verdict
        << std::string(12 - std::min<std::size_t>(11, verdict.size()), ' ')
        << "mismatched: " << (row->mismatched.empty() ? "-" : joined(row->mismatched, ", "))
        << "; matched: " << joined(matchedFields(*row), ", ") << "\n";
  }
  out << "(verdicts are necessary conditions: RULED_OUT certifies non-isomorphism, CONSISTENT proves nothing)\n";
  return Ok;
}

// ---- path -------------------------------------------------------------------

struct PathArgs {
  std::string file;
  std::string function;
  std::string polys;
  std::string equation;
  std::string mu;
  std::string ideal = "m_star";
  long component = 0;
  long kmax = 12;
  long ell = 2;
  long k = 1;
  long check = 0;
};

std::string termList(const paths::PuiseuxSeries& s) {
  std::vector<std::string> parts;
  for (const auto& [n, c] : s.terms()) parts.push_back(toString(makeRational(n, s.ramification())) + ":" + toString(c));
  return joined(parts, ",");
}

std::string seriesRecord(const paths::PuiseuxSeries& s) {
  return "order=" + s.order().toString() + " exact=" + (s.isExact() ? "1" : "0") +
         " precision=" + (s.isExact() ? "inf" : toString(s.precision())) + " terms=" + termList(s);
}

std::string tuple(const std::vector<UPoly>& ps) {
  std::vector<std::string> parts;
  for (const auto& p : ps) parts.push_back(p.toString("t"));
  return "(" + joined(parts, ", ") + ")";
}

std::string tuple(const std::vector<Rational>& qs) {
  std::vector<std::string> parts;
  for (const auto& q : qs) parts.push_back(toString(q));
  return "(" + joined(parts, ", ") + ")";
}

void require(const std::string& value, const char* option, const char* action) {
  if (value.empty())
    throw Error(ErrorKind::InputError, std::string("action '") + action + "' needs " + option);
}

std::vector<paths::PuiseuxSeries> perturbed(const std::vector<paths::PuiseuxSeries>& base, long order,
                                            std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::vector<paths::PuiseuxSeries> out;
  for (const auto& c : base) {
    std::vector<Rational> beta(4);
    for (auto& b : beta) b = coeff(rng);
    out.push_back(c + paths::PuiseuxSeries::fromPolynomial(UPoly(beta)) *
                          paths::PuiseuxSeries::monomial(1, order));
  }
  return out;
}

int cmdPath(const std::string& action, const PathArgs& a, const Options& opt, std::ostream& out) {
  io::PathFile file = io::parsePathFile(readInput(a.file));
  const paths::FormalPath& alpha = file.path;
  Rational T = opt.truncation ? Rational(*opt.truncation)
               : file.truncation ? *file.truncation
                                 : paths::defaultTruncation();
  bool rec = opt.format == Format::Records;
  unsigned long seed = opt.seed.value_or(1);

  if (action == "order") {
    paths::PuiseuxSeries s;
    std::string target;
    if (!a.function.empty()) {
      s = paths::evalOnPath(io::parseFunction(a.function), alpha, T);
      target = "function";
    } else {
      if (a.component < 1 || static_cast<std::size_t>(a.component) > alpha.size())
        throw Error(ErrorKind::InputError, "--component must be between 1 and " + std::to_string(alpha.size()));
      s = alpha.component(static_cast<std::size_t>(a.component - 1)).expand(T);
      target = "component " + std::to_string(a.component);
    }
    if (rec)
      out << "order target=" << (a.function.empty() ? "component:" + std::to_string(a.component) : "function")
          << " value=" << s.order().toString() << " T=" << toString(T) << "\n";
    else
      out << "order of " << target << ": " << s.order().toString() << " (T = " << toString(T) << ")\n";
    return Ok;
  }
  if (action == "eval" || action == "constant" || action == "ideal") {
    require(a.function, "--function", action.c_str());
    paths::SAFunction f = io::parseFunction(a.function);
    if (action == "eval") {
      auto s = paths::evalOnPath(f, alpha, T);
      if (rec)
        out << "series " << seriesRecord(s) << " T=" << toString(T) << "\n";
      else
        out << "psi(f) = " << s.toString() << "\norder: " << s.order().toString() << " (T = " << toString(T)
            << ")\n";
      return Ok;
    }
    if (action == "constant") {
      Rational c = paths::constantTerm(f, alpha, T);
      if (rec)
        out << "constant value=" << toString(c) << " T=" << toString(T) << "\n";
      else
        out << "phi(f) = " << toString(c) << " (T = " << toString(T) << ")\n";
      return Ok;
    }
    paths::IdealKind which;
    if (a.ideal == "m_star")
      which = paths::IdealKind::MStar;
    else if (a.ideal == "p_alpha")
      which = paths::IdealKind::PAlpha;
    else
      throw Error(ErrorKind::InputError, "--ideal must be m_star or p_alpha");
    auto v = paths::idealMembership(f, alpha, which, T);
    std::string order = v.witnessOrder ? toString(*v.witnessOrder) : "none";
    if (rec) {
      out << "ideal which=" << a.ideal << " status=" << idealStatusName(v.status) << " witnessOrder=" << order
          << " witness=" << (v.witness ? toString(*v.witness) : "none") << " T=" << toString(v.truncation) << "\n";
    } else {
      out << a.ideal << ": " << idealStatusName(v.status);
      if (v.witness) out << " (witness " << toString(*v.witness) << " at order " << order << ")";
      else if (v.witnessOrder) out << " (order " << order << ")";
      out << ", T = " << toString(v.truncation) << "\n";
    }
    return Ok;
  }
  if (action == "bound") {
    require(a.polys, "--polys", "bound");
    auto polys = io::parsePolynomialList(a.polys);
    long k = paths::positivityBound(polys, alpha, T);
    if (rec)
      out << "bound k=" << k << " T=" << toString(T) << "\n";
    else
      out << "k = " << k << " (T = " << toString(T) << ")\n";
    if (a.check > 0) {
      std::mt19937_64 rng(seed);
      auto base = alpha.expand(T);
      long failures = 0;
      for (long i = 0; i < a.check; ++i)
        if (!paths::positiveAlong(polys, perturbed(base, k, rng), T)) ++failures;
      if (rec)
        out << "certificate perturbations=" << a.check << " order=" << k << " failures=" << failures
            << " seed=" << seed << "\n";
      else
        out << "certificate: " << a.check << " perturbations at order " << k << ", " << failures
            << " failures (seed " << seed << ")\n";
    }
    return Ok;
  }
  if (action == "carrier") {
    require(a.polys, "--polys", "carrier");
    std::optional<Polynomial> g;
    if (!a.equation.empty()) g = io::parsePolynomialList(a.equation).at(0);
    auto c = paths::compactCarrier(alpha, io::parsePolynomialList(a.polys), g, T);
    if (rec) {
      out << "carrier k=" << c.k << " samples=" << c.samplesChecked << " T=" << toString(T) << "\n";
      for (std::size_t i = 0; i < c.mu.size(); ++i)
        out << "carrier-component index=" << i + 1 << " mu=" << c.mu[i].toString("t") << " s0=" << toString(c.s0[i])
            << "\n";
    } else {
      out << "k = " << c.k << "\nmu = " << tuple(c.mu) << "\ns0 = " << tuple(c.s0) << "\n"
          << "sample paths checked positive: " << c.samplesChecked << " (T = " << toString(T) << ")\n";
    }
    return Ok;
  }
  if (action == "neighborhood") {
    auto u = paths::neighborhoodElement(alpha, a.ell, a.k, T);
    if (rec)
      out << "neighborhood ell=" << u.ell << " k=" << u.k << " gamma=" << tuple(u.gamma) << "\n";
    else
      out << "gamma = " << tuple(u.gamma) << "\nf = " << u.f.toString() << "\nh = " << u.h.toString() << "\n";
    if (!a.mu.empty()) {
      auto m = paths::neighborhoodMembership(u, io::parsePathComponents(a.mu), T);
      if (rec)
        out << "membership member=" << m.member << " f=" << m.fValue.toString() << " h=" << m.hValue.toString()
            << "\n";
      else
        out << "mu " << (m.member ? "is" : "is not") << " in U_{" << u.ell << "," << u.k << "}: f(mu) = "
            << m.fValue.toString() << ", h(mu) = " << m.hValue.toString() << "\n";
    }
    if (a.check > 0) {
      std::mt19937_64 rng(seed);
      auto base = alpha.expand(T);
      long members = 0;
      for (long i = 0; i < a.check; ++i)
        members += paths::neighborhoodMembership(u, perturbed(base, a.ell + 2, rng), T).member;
      if (rec)
        out << "containment perturbations=" << a.check << " order=" << a.ell + 2 << " members=" << members
            << " seed=" << seed << "\n";
      else
        out << "containment: " << members << " of " << a.check << " perturbations at order " << a.ell + 2
            << " are members (seed " << seed << ")\n";
    }
    return Ok;
  }
  if (action == "separate") {
    require(a.mu, "--mu", "separate");
    auto s = paths::separateFromAlgebraic(alpha, io::parsePathComponents(a.mu), a.kmax, T);
    if (!s) {
      if (rec)
        out << "separation status=NOT_FOUND kmax=" << a.kmax << " T=" << toString(T) << "\n";
      else
        out << "NOT_FOUND for k <= " << a.kmax << " (T = " << toString(T) << ")\n";
      throw Error(ErrorKind::IndeterminateOrder, "no separator found; raise --kmax or --truncation");
    }
    std::string diff = s->differenceOrder ? toString(*s->differenceOrder) : "unknown";
    if (rec)
      out << "separation k=" << s->k << " value=" << toString(s->value) << " differenceOrder=" << diff
          << " T=" << toString(T) << "\n";
    else
      out << "k = " << s->k << ", value " << toString(s->value) << " (difference order " << diff
          << ", T = " << toString(T) << ")\n";
    return Ok;
  }
  throw Error(ErrorKind::InputError, "unknown path action '" + action + "'");
}

}  // namespace

std::string analysisReport(const topology::CellComplex& k, bool records) {
  return analysisReport(k, records ? Format::Records : Format::Human);
}

ExitCode exitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InputError:
    case ErrorKind::ParseError: return Usage;
    case ErrorKind::IndeterminateDenominator:
    case ErrorKind::IndeterminateOrder: return Truncation;
    default: return Precondition;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral fingerprints of planar semialgebraic sets and formal path evaluation", "specta"};
  app.require_subcommand(1, 1);
  Options opt;
  std::string format = "human";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "records"}));
  app.add_option("--seed", opt.seed, "Seed for randomized checks");
  app.add_option("--truncation", opt.truncation, "Working truncation T for series")->check(CLI::PositiveNumber);
  app.add_flag("--simplicialize", opt.simplicialize, "Replace complexes by their barycentric subdivision");

  std::string input, output, second;
  auto* decompose = app.add_subcommand("decompose", "Cell complex of the closure of a bounded planar formula");
  decompose->add_option("formula", input, "Formula file ('-' for stdin)")->required();
  decompose->add_option("-o,--output", output, "Write the complex here and the summary to stdout");

  auto* analyze = app.add_subcommand("analyze", "Bricks, rho sequence, eta and fingerprint of a complex");
  analyze->add_option("complex", input, "Complex file ('-' for stdin)")->required();

  auto* compare = app.add_subcommand("compare", "Verdict table for two complexes");
  compare->add_option("first", input, "First complex file")->required();
  compare->add_option("second", second, "Second complex file")->required();

  PathArgs pa;
  std::string action;
  auto* path = app.add_subcommand("path", "Evaluate along a formal path");
  path->add_option("path", pa.file, "Path file ('-' for stdin)")->required();
  path->add_option("action", action, "order | eval | constant | ideal | bound | carrier | neighborhood | separate")
      ->required()
      ->check(CLI::IsMember({"order", "eval", "constant", "ideal", "bound", "carrier", "neighborhood", "separate"}));
  path->add_option("--component", pa.component, "Component index (order)");
  path->add_option("--function,-f", pa.function, "Semialgebraic function (order, eval, constant, ideal)");
  path->add_option("--ideal", pa.ideal, "m_star or p_alpha (ideal)");
  path->add_option("--polys", pa.polys, "Comma-separated polynomials (bound, carrier)");
  path->add_option("--equation", pa.equation, "Polynomial vanishing on the path (carrier)");
  path->add_option("--mu", pa.mu, "Comparison path components in t (neighborhood, separate)");
  path->add_option("--kmax", pa.kmax, "Largest separator index (separate)");
  path->add_option("--ell", pa.ell, "Neighborhood index l (neighborhood)");
  path->add_option("--k", pa.k, "Neighborhood index k (neighborhood)");
  path->add_option("--check", pa.check, "Number of random perturbations to test (bound, neighborhood)");

  // Global options may appear after the subcommand.
  for (auto* sub : {decompose, analyze, compare, path}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? Ok : Usage;
  }
  opt.format = format == "records" ? Format::Records : Format::Human;

  try {
    if (*decompose) return cmdDecompose(input, output, opt, out);
    if (*analyze) return cmdAnalyze(input, opt, out);
    if (*compare) return cmdCompare(input, second, opt, out);
    return cmdPath(action, pa, opt, out);
  } catch (const Error& e) {
    ExitCode code = exitCodeFor(e.kind());
    err << "specta: " << e.what() << "\n";
    if (code == Truncation) err << "hint: raise --truncation (or SPECTA_TRUNCATION) and retry\n";
    return code;
  }
}

}  // namespace specta::cli
