// Python bindings. Structured values cross the boundary as JSON text in the
// same format the command-line tool reads and writes; the package wrapper
// turns them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "thickrep/characters.hpp"
#include "thickrep/constructions.hpp"
#include "thickrep/serialize.hpp"
#include "thickrep/suite.hpp"
#include "thickrep/symplectic.hpp"

namespace py = pybind11;
using namespace thickrep;

namespace {

Representation rep_of(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
  if (j.is_object() && j.contains("representation")) j = j["representation"];
  return representation_from_json(j);
}

Caps caps_of(const std::string& spec) { return Caps::from_string(spec, Caps::from_env()); }

std::string check_thick(const std::string& rep, std::size_t m, const std::string& method, std::uint64_t seed,
                        const std::string& caps) {
  const Representation r = rep_of(rep);
  ThicknessReport rpt;
  if (method == "definition")
    rpt = is_m_thick_definition(r, m, caps_of(caps));
  else if (method == "criterion")
    rpt = is_m_thick_criterion(r, m, caps_of(caps), seed);
  else
    throw Error(Errc::ParseError, "method must be 'definition' or 'criterion'");
  return dump(report_to_json(r, rpt));
}

py::tuple recheck(const std::string& report) {
  const ReportDocument doc = report_from_json(Json::parse(report));
  const RecheckResult rc = recheck_certificate(doc.rep, doc.report);
  return py::make_tuple(rc.ok, rc.problems);
}

std::string companion(const std::string& field, std::size_t n, const std::string& a, const std::string& b) {
  const FieldSpec f = parse_field(field);
  const CompanionPair cp = companion_pair(f, n, Scalar::parse(f, a), Scalar::parse(f, b));
  Json windows = Json::array();
  for (std::size_t m = 1; m < n; ++m) windows.push_back(Json{{"m", m}, {"subspace", subspace_to_json(cp.windows[m - 1])}});
  return dump(Json{{"representation", representation_to_json(cp.rep)}, {"windows", windows}});
}

std::string block(std::size_t ell, std::size_t m, const std::string& field, std::uint64_t seed) {
  const FieldSpec f = field == "auto" ? FieldSpec::prime(static_cast<std::uint32_t>(suggest_prime(ell, m)))
                                      : parse_field(field);
  const BlockRep br = block_rep(default_block_spec(f, ell, m), true, seed);
  return dump(Json{{"representation", representation_to_json(br.rep)},
                   {"w", subspace_to_json(br.w)},
                   {"y", subspace_to_json(br.y)},
                   {"irreducible", to_string(br.irreducible)}});
}

std::string lie(const std::string& family, std::size_t n, const std::string& field) {
  const FieldSpec f = parse_field(field);
  const LieFamily fam = parse_lie_family(family);
  return dump(representation_to_json(
      make_representation(f, RepMode::Lie, lie_generators(f, fam, n), to_string(fam) + " n=" + std::to_string(n))));
}

std::map<std::string, std::string> character(const Partition& lambda) {
  const ClassFunction chi = sym_char(lambda);
  std::map<std::string, std::string> out;
  const auto classes = partitions(chi.d);
  for (std::size_t i = 0; i < classes.size(); ++i) out[to_string(classes[i])] = chi.values[i].get_str();
  return out;
}

std::string verify(const std::string& filter, std::uint64_t seed, std::size_t jobs) {
  SuiteOptions opts;
  opts.filter = filter;
  opts.seed = seed;
  opts.jobs = jobs;
  opts.caps = Caps::from_env();
  SuiteReport rep;
  {
    py::gil_scoped_release release;
    rep = run_suite(opts);
  }
  return dump(suite_to_json(rep));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact thickness, density and realizability computations";
  py::register_exception<Error>(m, "ThickrepError", PyExc_ValueError);

  m.def("check_thick", &check_thick, py::arg("rep"), py::arg("m"), py::arg("method") = "criterion",
        py::arg("seed") = 0, py::arg("caps") = "");
  m.def(
      "is_dense",
      [](const std::string& rep, std::size_t deg, bool absolute, const std::string& caps) {
        return to_string(is_m_dense(rep_of(rep), deg, absolute, caps_of(caps)));
      },
      py::arg("rep"), py::arg("m"), py::arg("absolute") = false, py::arg("caps") = "");
  m.def(
      "burnside_dim", [](const std::string& rep) { return burnside_dim(rep_of(rep)); }, py::arg("rep"));
  m.def(
      "exterior", [](const std::string& rep, std::size_t deg) { return dump(representation_to_json(exterior_rep(rep_of(rep), deg))); },
      py::arg("rep"), py::arg("m"));
  m.def("recheck", &recheck, py::arg("report"));

  m.def("companion", &companion, py::arg("field"), py::arg("n"), py::arg("a"), py::arg("b"));
  m.def("block", &block, py::arg("ell"), py::arg("m"), py::arg("field") = "auto", py::arg("seed") = 0);
  m.def("lie", &lie, py::arg("family"), py::arg("n"), py::arg("field") = "Q");

  m.def("character", &character, py::arg("partition"));
  m.def(
      "exterior_square_decomposition",
      [](const Partition& lambda) { return decompose(exterior_square_char(sym_char(lambda))); },
      py::arg("partition"));
  m.def("gl2_wedge_identity", &gl2_wedge_identity, py::arg("a"), py::arg("b"));
  m.def("distinct_parts_coeffs", &distinct_parts_coeffs, py::arg("n"));
  m.def(
      "plethysm_component_count",
      [](const std::string& kind, int n, int deg) {
        if (kind != "sym2" && kind != "wedge2") throw Error(Errc::ParseError, "kind must be sym2 or wedge2");
        return plethysm_component_count(kind == "sym2" ? PlethysmKind::sym2 : PlethysmKind::wedge2, n, deg);
      },
      py::arg("kind"), py::arg("n"), py::arg("m"));

  m.def(
      "ker_fm_dim",
      [](std::size_t n, std::size_t deg, const std::string& field) {
        return ker_fm(SymplecticSpace::standard(parse_field(field), n), deg).dim();
      },
      py::arg("n"), py::arg("m"), py::arg("field") = "Q");
  m.def(
      "r_number_bounds",
      [](std::uint64_t n, std::uint64_t deg) {
        const RNumberBounds b = r_number_bounds(n, deg);
        return py::make_tuple(b.lower, b.upper, b.exact ? py::cast(*b.exact) : py::none());
      },
      py::arg("n"), py::arg("m"));
  m.def("verify", &verify, py::arg("filter") = "", py::arg("seed") = 0, py::arg("jobs") = 1);
}
