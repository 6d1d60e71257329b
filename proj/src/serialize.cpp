#include "thickrep/serialize.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace thickrep {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::ParseError, what); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing '") + key + "'");
  return *it;
}

std::size_t as_size(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    bad(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

std::uint32_t parse_u32(std::string_view s, const std::string& context) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) bad("bad number in " + context);
  return v;
}

FieldSpec checked_field(FieldKind kind, std::uint32_t p, std::uint32_t k) {
  try {
    if (kind == FieldKind::PrimeField) return FieldSpec::prime(p);
    return FieldSpec::extension(p, k);
  } catch (const Error& e) {
    bad(e.what());
  }
}

std::string index_key(const IndexSet& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i] + 1);
  }
  return out;
}

Json vectors_to_json(const std::vector<Vector>& vs) {
  Json out = Json::array();
  for (const Vector& v : vs) out.push_back(vector_to_json(v));
  return out;
}

Json certificate_to_json(const ThicknessReport& rpt) {
  if (rpt.invariant_pair) {
    const auto& c = *rpt.invariant_pair;
    return Json{{"type", "invariant_pair"},
                {"m", c.m},
                {"w1", subspace_to_json(c.w1)},
                {"w2", subspace_to_json(c.w2)},
                {"witness1", wedge_to_json(c.witness1)},
                {"witness2", wedge_to_json(c.witness2)},
                {"vectors1", vectors_to_json(c.vectors1)},
                {"vectors2", vectors_to_json(c.vectors2)}};
  }
  if (rpt.subspace_pair)
    return Json{{"type", "subspace_pair"},
                {"v1", subspace_to_json(rpt.subspace_pair->v1)},
                {"v2", subspace_to_json(rpt.subspace_pair->v2)}};
  return nullptr;
}

}  // namespace

FieldSpec parse_field(const std::string& text) {
  if (text == "Q" || text == "QQ") return FieldSpec::rationals();
  if (text.size() < 2 || text[0] != 'F') bad("unknown field '" + text + "'");
  const std::string body = text.substr(1);
  const auto caret = body.find('^');
  if (caret == std::string::npos) return checked_field(FieldKind::PrimeField, parse_u32(body, text), 1);
  const std::uint32_t p = parse_u32(std::string_view(body).substr(0, caret), text);
  const std::uint32_t k = parse_u32(std::string_view(body).substr(caret + 1), text);
  if (k == 1) return checked_field(FieldKind::PrimeField, p, 1);
  return checked_field(FieldKind::ExtensionField, p, k);
}

Json field_to_json(const FieldSpec& f) {
  switch (f.kind()) {
    case FieldKind::Rationals: return Json{{"kind", "Q"}};
    case FieldKind::PrimeField: return Json{{"kind", "Fp"}, {"p", f.characteristic()}};
    case FieldKind::ExtensionField:
      return Json{{"kind", "Fq"}, {"p", f.characteristic()}, {"k", f.degree()}};
  }
  return nullptr;
}

FieldSpec field_from_json(const Json& j) {
  const Json& kind = member(j, "kind");
  if (!kind.is_string()) bad("field kind must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "Q") return FieldSpec::rationals();
  const std::size_t p = as_size(member(j, "p"), "p");
  if (p > UINT32_MAX) bad("characteristic too large");
  if (k == "Fp") return checked_field(FieldKind::PrimeField, static_cast<std::uint32_t>(p), 1);
  if (k == "Fq") {
    const std::size_t deg = as_size(member(j, "k"), "k");
    if (deg > 64) bad("extension degree too large");
    if (deg == 1) return checked_field(FieldKind::PrimeField, static_cast<std::uint32_t>(p), 1);
    return checked_field(FieldKind::ExtensionField, static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(deg));
  }
  bad("unknown field kind '" + k + "'");
}

Json scalar_to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const FieldSpec& f, const Json& j) {
  if (j.is_string()) {
    try {
      return Scalar::parse(f, j.get<std::string>());
    } catch (const Error& e) {
      bad(e.what());
    }
  }
  if (j.is_number_integer()) return Scalar(f, j.get<long long>());
  bad("scalar must be a string");
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const Scalar& s : v) out.push_back(scalar_to_json(s));
  return out;
}

Vector vector_from_json(const FieldSpec& f, const Json& j) {
  if (!j.is_array()) bad("vector must be an array");
  Vector v;
  v.reserve(j.size());
  for (const Json& e : j) v.push_back(scalar_from_json(f, e));
  return v;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i)));
  return out;
}

Matrix matrix_from_json(const FieldSpec& f, const Json& j, std::size_t cols) {
  if (!j.is_array()) bad("matrix must be an array of rows");
  std::vector<Vector> rows;
  for (const Json& r : j) rows.push_back(vector_from_json(f, r));
  if (!rows.empty()) cols = rows.front().size();
  for (const Vector& r : rows)
    if (r.size() != cols) bad("ragged matrix");
  return Matrix::from_rows(f, rows, cols);
}

Json subspace_to_json(const Subspace& s) {
  return Json{{"ambient", s.ambient_dim()}, {"basis", matrix_to_json(s.basis())}};
}

Subspace subspace_from_json(const FieldSpec& f, const Json& j) {
  const std::size_t n = as_size(member(j, "ambient"), "ambient");
  const Matrix b = matrix_from_json(f, member(j, "basis"), n);
  if (b.cols() != n) bad("basis rows do not match the ambient dimension");
  const Subspace s = Subspace::row_space(b);
  if (s.dim() != b.rows()) bad("basis rows are linearly dependent");
  return s;
}

Json wedge_to_json(const WedgeVector& w) {
  Json out = Json::object();
  const auto subsets = colex_subsets(w.n(), w.m());
  for (std::size_t i = 0; i < subsets.size(); ++i)
    if (!w[i].is_zero()) out[index_key(subsets[i])] = scalar_to_json(w[i]);
  return out;
}

WedgeVector wedge_from_json(const FieldSpec& f, std::size_t n, std::size_t m, const Json& j) {
  if (!j.is_object()) bad("wedge vector must be an object");
  WedgeVector w(f, n, m);
  for (auto it = j.begin(); it != j.end(); ++it) {
    IndexSet s;
    std::stringstream ss(it.key());
    std::string part;
    while (std::getline(ss, part, ',')) {
      const std::uint32_t i = parse_u32(part, "wedge key '" + it.key() + "'");
      if (i == 0 || i > n) bad("wedge index out of range in '" + it.key() + "'");
      s.push_back(i - 1);
    }
    if (s.size() != m) bad("wedge key '" + it.key() + "' has the wrong length");
    for (std::size_t t = 1; t < s.size(); ++t)
      if (s[t] <= s[t - 1]) bad("wedge key '" + it.key() + "' must be strictly increasing");
    w[colex_rank(s)] = scalar_from_json(f, it.value());
  }
  return w;
}

Json representation_to_json(const Representation& r) {
  Json gens = Json::array();
  for (const Matrix& g : r.generators) gens.push_back(matrix_to_json(g));
  return Json{{"field", field_to_json(r.field)},
              {"dim", r.dim},
              {"mode", to_string(r.mode)},
              {"generators", gens},
              {"label", r.label}};
}

Representation representation_from_json(const Json& j) {
  Representation r;
  r.field = field_from_json(member(j, "field"));
  r.dim = as_size(member(j, "dim"), "dim");
  const Json& mode = member(j, "mode");
  if (!mode.is_string()) bad("mode must be a string");
  r.mode = parse_mode(mode.get<std::string>());
  const Json& gens = member(j, "generators");
  if (!gens.is_array()) bad("generators must be an array");
  for (const Json& g : gens) {
    Matrix m = matrix_from_json(r.field, g, r.dim);
    if (m.rows() != r.dim || m.cols() != r.dim) bad("generator shape does not match dim");
    r.generators.push_back(std::move(m));
  }
  if (auto it = j.find("label"); it != j.end()) {
    if (!it->is_string()) bad("label must be a string");
    r.label = it->get<std::string>();
  }
  try {
    r.validate();
  } catch (const Error& e) {
    bad(e.what());
  }
  return r;
}

Json report_to_json(const Representation& r, const ThicknessReport& report) {
  return Json{{"representation", representation_to_json(r)},
              {"m", report.m},
              {"verdict", to_string(report.verdict)},
              {"method", report.method},
              {"field_scope", report.field_scope},
              {"mode", to_string(report.mode)},
              {"log", report.log},
              {"certificate", certificate_to_json(report)}};
}

ReportDocument report_from_json(const Json& j) {
  ReportDocument doc;
  doc.rep = representation_from_json(member(j, "representation"));
  const FieldSpec& f = doc.rep.field;
  const std::size_t n = doc.rep.dim;
  ThicknessReport& rpt = doc.report;
  rpt.m = as_size(member(j, "m"), "m");
  if (rpt.m > n) bad("m exceeds the dimension");
  const Json& verdict = member(j, "verdict");
  const Json& method = member(j, "method");
  const Json& scope = member(j, "field_scope");
  const Json& mode = member(j, "mode");
  if (!verdict.is_string() || !method.is_string() || !scope.is_string() || !mode.is_string())
    bad("verdict, method, field_scope and mode must be strings");
  rpt.verdict = parse_verdict(verdict.get<std::string>());
  rpt.method = method.get<std::string>();
  rpt.field_scope = scope.get<std::string>();
  rpt.mode = parse_mode(mode.get<std::string>());
  const Json& log = member(j, "log");
  if (!log.is_array()) bad("log must be an array");
  for (const Json& line : log) {
    if (!line.is_string()) bad("log lines must be strings");
    rpt.log.push_back(line.get<std::string>());
  }
  const Json& cert = member(j, "certificate");
  if (cert.is_null()) return doc;
  const Json& type = member(cert, "type");
  if (type == "subspace_pair") {
    rpt.subspace_pair = SubspacePairCertificate{subspace_from_json(f, member(cert, "v1")),
                                                subspace_from_json(f, member(cert, "v2"))};
    if (rpt.subspace_pair->v1.ambient_dim() != n || rpt.subspace_pair->v2.ambient_dim() != n)
      bad("certificate subspaces must live in the representation space");
  } else if (type == "invariant_pair") {
    InvariantPairCertificate c;
    c.m = as_size(member(cert, "m"), "m");
    if (c.m > n) bad("certificate m exceeds the dimension");
    c.w1 = subspace_from_json(f, member(cert, "w1"));
    c.w2 = subspace_from_json(f, member(cert, "w2"));
    if (c.w1.ambient_dim() != binomial(n, c.m) || c.w2.ambient_dim() != binomial(n, n - c.m))
      bad("certificate subspaces have the wrong ambient dimension");
    c.witness1 = wedge_from_json(f, n, c.m, member(cert, "witness1"));
    c.witness2 = wedge_from_json(f, n, n - c.m, member(cert, "witness2"));
    for (const Json& v : member(cert, "vectors1")) c.vectors1.push_back(vector_from_json(f, v));
    for (const Json& v : member(cert, "vectors2")) c.vectors2.push_back(vector_from_json(f, v));
    for (const auto* vs : {&c.vectors1, &c.vectors2})
      for (const Vector& v : *vs)
        if (v.size() != n) bad("witness vector has the wrong length");
    rpt.invariant_pair = std::move(c);
  } else {
    bad("unknown certificate type");
  }
  return doc;
}

Verdict parse_verdict(const std::string& s) {
  if (s == "Thick") return Verdict::Thick;
  if (s == "NotThick") return Verdict::NotThick;
  if (s == "Unknown") return Verdict::Unknown;
  bad("unknown verdict '" + s + "'");
}

RepMode parse_mode(const std::string& s) {
  if (s == "group") return RepMode::Group;
  if (s == "lie") return RepMode::Lie;
  bad("unknown mode '" + s + "'");
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    bad(path + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace thickrep
