#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "specta/cad/decompose.hpp"
#include "specta/cli/cli.hpp"
#include "specta/io/parse.hpp"
#include "specta/paths/operations.hpp"
#include "specta/topology/analysis.hpp"

namespace py = pybind11;
using namespace specta;

namespace {

py::object fraction(const Rational& q) {
  static py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(py::int_(py::str(q.get_num().get_str())), py::int_(py::str(q.get_den().get_str())));
}

// Accepts int, Fraction or a string such as "3/2".
Rational rational(const py::handle& v) { return parseRational(py::str(v).cast<std::string>()); }

Rational truncationOr(const py::object& v) { return v.is_none() ? paths::defaultTruncation() : rational(v); }

py::object optionalFraction(const std::optional<Rational>& q) { return q ? fraction(*q) : py::none(); }

py::dict recordDict(const topology::FingerprintRecord& r) {
  py::list bricks;
  for (const auto& b : r.bricks) {
    py::dict d;
    d["dim"] = b.dimension;
    d["components"] = b.components;
    d["euler"] = b.euler;
    d["compact"] = b.compact;
    d["eta"] = b.etaCount;
    bricks.append(d);
  }
  py::dict d;
  d["bricks"] = bricks;
  d["dim"] = r.dimension;
  d["components"] = r.components;
  d["euler"] = r.euler;
  d["compact"] = r.compact;
  d["locally_compact"] = r.locallyCompact;
  d["eta"] = r.etaCount;
  return d;
}

paths::FormalPath asPath(const py::object& p) {
  if (py::isinstance<paths::FormalPath>(p)) return p.cast<paths::FormalPath>();
  return io::parsePathComponents(p.cast<std::string>());
}

paths::SAFunction asFunction(const py::object& f) {
  if (py::isinstance<paths::SAFunction>(f)) return f.cast<paths::SAFunction>();
  return io::parseFunction(f.cast<std::string>());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact planar decompositions, spectral fingerprints and formal path evaluation";

  py::register_exception<Error>(m, "SpectaError", PyExc_ValueError);

  // ---- complexes ----
  py::class_<topology::CellComplex>(m, "CellComplex")
      .def_static("parse", &topology::parseComplex, py::arg("text"))
      .def("serialize", [](const topology::CellComplex& k) { return topology::serialize(k); })
      .def("__len__", &topology::CellComplex::size)
      .def_property_readonly("dimension", &topology::CellComplex::dimension)
      .def_property_readonly("cells",
                             [](const topology::CellComplex& k) {
                               py::list out;
                               for (const auto& c : k.cells()) out.append(py::make_tuple(c.id, c.dim, c.inM));
                               return out;
                             })
      .def("subdivide", &topology::barycentricSubdivision)
      .def("__repr__", [](const topology::CellComplex& k) {
        return "<CellComplex cells=" + std::to_string(k.size()) + " dim=" + std::to_string(k.dimension()) + ">";
      });

  m.def("bricks", [](const topology::CellComplex& k) {
    py::list out;
    for (const auto& b : topology::bricks(k)) out.append(py::make_tuple(b.dimension, b.cells));
    return out;
  });
  m.def("rho_sequence", [](const topology::CellComplex& k) {
    auto r = topology::rhoSequence(k);
    py::dict d;
    d["rho0"] = r.rho0;
    d["rho1"] = r.rho1;
    d["locally_compact"] = r.locallyCompactPart;
    return d;
  });
  m.def("eta", &topology::etaSet);
  m.def("fingerprint", [](const topology::CellComplex& k) {
    auto f = topology::spectralFingerprint(k);
    py::dict d;
    d["base"] = recordDict(f.base);
    d["minus_eta"] = recordDict(f.minusEta);
    d["core"] = recordDict(f.core);
    return d;
  });
  m.def("compare", [](const topology::CellComplex& a, const topology::CellComplex& b) {
    auto r = topology::compareSpectralTypes(a, b);
    py::list rows;
    for (const auto* row : {&r.spectrum, &r.boundedSpectrum, &r.mixed, &r.coreSpectrum})
      rows.append(py::make_tuple(row->relation, topology::verdictName(row->verdict), row->mismatched));
    return rows;
  });
  m.def("analysis_report", &cli::analysisReport, py::arg("complex"), py::arg("records") = false);

  // ---- decomposition ----
  py::class_<cad::Decomposition>(m, "Decomposition")
      .def_property_readonly("complex", &cad::Decomposition::complex)
      .def_property_readonly("shear", [](const cad::Decomposition& d) { return fraction(d.shear()); })
      .def_property_readonly("stack_count", [](const cad::Decomposition& d) { return d.stacks().size(); })
      .def_property_readonly("cell_count", &cad::Decomposition::cadCellCount)
      .def("annotated_text", &cad::Decomposition::annotatedText)
      .def("contains", [](const cad::Decomposition& d, const py::object& x, const py::object& y) {
        return d.inM(d.locate(rational(x), rational(y)));
      });
  m.def("decompose", [](const std::string& formula) { return cad::decompose(io::parseFormula(formula)); },
        py::arg("formula"));
  m.def(
      "contains_point",
      [](const std::string& formula, const py::object& x, const py::object& y) {
        return cad::containsPoint(io::parseFormula(formula), rational(x), rational(y));
      },
      py::arg("formula"), py::arg("x"), py::arg("y"));

  // ---- paths ----
  py::class_<paths::PuiseuxSeries>(m, "Series")
      .def_property_readonly("order",
                             [](const paths::PuiseuxSeries& s) -> py::object {
                               auto o = s.order();
                               if (o.finite()) return fraction(o.value);
                               return py::str(o.toString());
                             })
      .def_property_readonly("exact", &paths::PuiseuxSeries::isExact)
      .def_property_readonly("precision",
                             [](const paths::PuiseuxSeries& s) { return optionalFraction(s.precisionBound()); })
      .def_property_readonly("terms",
                             [](const paths::PuiseuxSeries& s) {
                               py::dict d;
                               for (const auto& [n, c] : s.terms())
                                 d[fraction(makeRational(n, s.ramification()))] = fraction(c);
                               return d;
                             })
      .def("coefficient", [](const paths::PuiseuxSeries& s, const py::object& e) {
        return fraction(s.coefficient(rational(e)));
      })
      .def("__str__", [](const paths::PuiseuxSeries& s) { return s.toString(); })
      .def("__repr__", [](const paths::PuiseuxSeries& s) { return "<Series " + s.toString() + ">"; });

  py::class_<paths::FormalPath>(m, "Path")
      .def_static("parse", [](const std::string& text) { return io::parsePathFile(text).path; }, py::arg("text"))
      .def_static("from_components", &io::parsePathComponents, py::arg("components"))
      .def_static("factorial",
                  [] {
                    return paths::FormalPath({paths::PathComponent::polynomial(UPoly{0, 1}),
                                              paths::PathComponent::factorial()});
                  })
      .def("__len__", &paths::FormalPath::size)
      .def("reparametrize", &paths::FormalPath::reparametrize, py::arg("power"))
      .def("expand",
           [](const paths::FormalPath& p, const py::object& T) { return p.expand(truncationOr(T)); },
           py::arg("T") = py::none())
      .def("__str__", &paths::FormalPath::toString);

  py::class_<paths::SAFunction>(m, "Function")
      .def_static("parse", &io::parseFunction, py::arg("text"))
      .def_static("separator", &paths::factorialSeparator, py::arg("k"))
      .def("__str__", &paths::SAFunction::toString);

  m.def(
      "eval_on_path",
      [](const py::object& f, const py::object& path, const py::object& T) {
        return paths::evalOnPath(asFunction(f), asPath(path), truncationOr(T));
      },
      py::arg("function"), py::arg("path"), py::arg("T") = py::none());
  m.def(
      "constant_term",
      [](const py::object& f, const py::object& path, const py::object& T) {
        return fraction(paths::constantTerm(asFunction(f), asPath(path), truncationOr(T)));
      },
      py::arg("function"), py::arg("path"), py::arg("T") = py::none());
  m.def(
      "ideal_membership",
      [](const py::object& f, const py::object& path, const std::string& which, const py::object& T) {
        if (which != "m_star" && which != "p_alpha") throw Error(ErrorKind::InputError, "which: m_star or p_alpha");
        auto v = paths::idealMembership(asFunction(f), asPath(path),
                                        which == "m_star" ? paths::IdealKind::MStar : paths::IdealKind::PAlpha,
                                        truncationOr(T));
        py::dict d;
        d["status"] = paths::idealStatusName(v.status);
        d["order"] = optionalFraction(v.witnessOrder);
        d["witness"] = optionalFraction(v.witness);
        d["T"] = fraction(v.truncation);
        return d;
      },
      py::arg("function"), py::arg("path"), py::arg("which") = "m_star", py::arg("T") = py::none());
  m.def(
      "positivity_bound",
      [](const std::string& polys, const py::object& path, const py::object& T) {
        return paths::positivityBound(io::parsePolynomialList(polys), asPath(path), truncationOr(T));
      },
      py::arg("polys"), py::arg("path"), py::arg("T") = py::none());
  m.def(
      "separate",
      [](const py::object& path, const py::object& mu, long kmax, const py::object& T) -> py::object {
        auto s = paths::separateFromAlgebraic(asPath(path), asPath(mu), kmax, truncationOr(T));
        if (!s) return py::none();
        return py::make_tuple(s->k, fraction(s->value));
      },
      py::arg("path"), py::arg("mu"), py::arg("kmax") = 12, py::arg("T") = py::none());
  m.def(
      "neighborhood_membership",
      [](const py::object& path, long ell, long k, const py::object& mu, const py::object& T) {
        Rational t = truncationOr(T);
        auto u = paths::neighborhoodElement(asPath(path), ell, k, t);
        auto r = paths::neighborhoodMembership(u, asPath(mu), t);
        return py::make_tuple(r.member, r.fValue, r.hValue);
      },
      py::arg("path"), py::arg("ell"), py::arg("k"), py::arg("mu"), py::arg("T") = py::none());

  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "specta");
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
