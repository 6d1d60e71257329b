// Command-line front end. Exit codes: 0 property holds / success, 1 refuted,
// 2 unknown or budget exceeded, 3 usage or input error.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "CLI11.hpp"

#include "thickrep/characters.hpp"
#include "thickrep/constructions.hpp"
#include "thickrep/serialize.hpp"
#include "thickrep/suite.hpp"
#include "thickrep/symplectic.hpp"

using namespace thickrep;

namespace {

constexpr int kHolds = 0;
constexpr int kRefuted = 1;
constexpr int kUnknown = 2;
constexpr int kUsage = 3;

struct Common {
  std::string out;
  std::string caps;
  std::uint64_t seed = 0;
};

Caps caps_of(const Common& c) { return Caps::from_string(c.caps, Caps::from_env()); }

void emit(const Json& j, const std::string& out) {
  const std::string text = dump(j);
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  f << text;
  if (!f) throw Error(Errc::ParseError, "cannot write " + out);
}

// Accepts a bare representation or any document with a "representation" member.
Representation load_rep(const std::string& path) {
  Json j = read_json_file(path);
  if (j.is_object() && j.contains("representation")) j = j["representation"];
  return representation_from_json(j);
}

int exit_for(Verdict v) { return v == Verdict::Thick ? kHolds : v == Verdict::NotThick ? kRefuted : kUnknown; }
int exit_for(Tri t) { return t == Tri::Yes ? kHolds : t == Tri::No ? kRefuted : kUnknown; }

Json decomposition_json(const std::vector<std::pair<Partition, long long>>& d) {
  Json out = Json::array();
  for (const auto& [p, mult] : d) out.push_back(Json{{"partition", to_string(p)}, {"multiplicity", mult}});
  return out;
}

Json class_function_json(const ClassFunction& f) {
  Json out = Json::object();
  const auto classes = partitions(f.d);
  for (std::size_t i = 0; i < classes.size(); ++i) out[to_string(classes[i])] = f.values[i].get_str();
  return out;
}

// --- check ------------------------------------------------------------------

struct CheckArgs {
  Common common;
  std::string rep;
  std::size_t m = 1;
  std::string mode = "thick";
  std::string method = "criterion";
};

int cmd_check(const CheckArgs& a) {
  const Representation r = load_rep(a.rep);
  const Caps caps = caps_of(a.common);
  if (a.mode == "thick") {
    ThicknessReport rpt;
    if (a.method == "definition") {
      rpt = is_m_thick_definition(r, a.m, caps);
    } else if (a.method == "criterion") {
      rpt = is_m_thick_criterion(r, a.m, caps, a.common.seed);
    } else {
      // Absolute density of the m-th power forces m-thickness; nothing is concluded otherwise.
      rpt.m = a.m;
      rpt.mode = r.mode;
      rpt.method = "burnside";
      const Tri dense = is_m_dense(r, a.m, true, caps);
      rpt.verdict = dense == Tri::Yes ? Verdict::Thick : Verdict::Unknown;
      rpt.log.push_back("absolutely " + std::string(dense == Tri::Yes ? "" : "not ") + "dense in degree " +
                        std::to_string(a.m));
    }
    emit(report_to_json(r, rpt), a.common.out);
    return exit_for(rpt.verdict);
  }
  const bool absolute = a.method == "burnside";
  const std::size_t m = a.mode == "irreducible" ? 1 : a.m;
  const Tri result = is_m_dense(r, m, absolute, caps);
  emit(Json{{"property", a.mode},
            {"m", m},
            {"method", a.method},
            {"field_scope", absolute ? "Absolute" : "OverK"},
            {"result", to_string(result)},
            {"representation", representation_to_json(r)}},
       a.common.out);
  return exit_for(result);
}

// --- construct --------------------------------------------------------------

struct ConstructArgs {
  Common common;
  std::string field = "Q";
  std::size_t n = 4;
  std::size_t m = 2;
  std::size_t ell = 2;
  std::string a = "2";
  std::string b = "3";
  std::string family = "sp";
  std::string block_field = "auto";
  bool loose = false;
};

Matrix permutation_matrix(const FieldSpec& f, const std::vector<std::size_t>& image) {
  Matrix p(f, image.size(), image.size());
  for (std::size_t j = 0; j < image.size(); ++j) p(image[j], j) = Scalar::one(f);
  return p;
}

int cmd_construct_companion(const ConstructArgs& a) {
  const FieldSpec f = parse_field(a.field);
  const CompanionPair cp = companion_pair(f, a.n, Scalar::parse(f, a.a), Scalar::parse(f, a.b));
  Json windows = Json::array();
  for (std::size_t m = 1; m < a.n; ++m)
    windows.push_back(Json{{"m", m}, {"subspace", subspace_to_json(cp.windows[m - 1])}});
  emit(Json{{"representation", representation_to_json(cp.rep)},
            {"windows", windows},
            {"roots_present", cp.roots_present},
            {"irreducible", to_string(cp.irreducible)}},
       a.common.out);
  return kHolds;
}

int cmd_construct_block(const ConstructArgs& a) {
  const FieldSpec f = a.block_field == "auto"
                          ? FieldSpec::prime(static_cast<std::uint32_t>(suggest_prime(a.ell, a.m)))
                          : parse_field(a.block_field);
  const BlockRep br = block_rep(default_block_spec(f, a.ell, a.m), !a.loose, a.common.seed);
  Json coeffs = Json::array();
  for (const Vector& row : br.coefficients) coeffs.push_back(vector_to_json(row));
  emit(Json{{"representation", representation_to_json(br.rep)},
            {"w", subspace_to_json(br.w)},
            {"w_degree", a.m},
            {"y", subspace_to_json(br.y)},
            {"y_degree", a.ell},
            {"b_last", matrix_to_json(br.b_last)},
            {"betas", vector_to_json(br.betas)},
            {"coefficients", coeffs},
            {"coefficients_nonzero", br.coefficients_nonzero},
            {"attempts", br.attempts},
            {"irreducible", to_string(br.irreducible)}},
       a.common.out);
  return kHolds;
}

int cmd_construct_e1wedge(const ConstructArgs& a) {
  const FieldSpec f = parse_field(a.field);
  emit(Json{{"n", a.n}, {"degree", 2}, {"subspace", subspace_to_json(e1_wedge_subspace(f, a.n))}}, a.common.out);
  return kHolds;
}

int cmd_construct_lie(const ConstructArgs& a) {
  const FieldSpec f = parse_field(a.field);
  const LieFamily fam = parse_lie_family(a.family);
  const Representation r =
      make_representation(f, RepMode::Lie, lie_generators(f, fam, a.n), to_string(fam) + " n=" + std::to_string(a.n));
  Json out{{"representation", representation_to_json(r)}};
  if (fam == LieFamily::sp || fam == LieFamily::so_split) out["form"] = matrix_to_json(lie_form(f, fam, a.n));
  emit(out, a.common.out);
  return kHolds;
}

int cmd_construct_gl(const ConstructArgs& a) {
  // A transvection, a diagonal unit and generators of the permutation group.
  const FieldSpec f = parse_field(a.field);
  if (a.n < 1) throw Error(Errc::BadN, "n must be positive");
  std::vector<Matrix> gens;
  Scalar unit(f, 2);
  if (f.is_finite()) {
    for (const Scalar& x : field_elements(f)) {
      if (x.is_zero()) continue;
      std::uint64_t order = 1;
      for (Scalar y = x; !y.is_one(); y *= x) ++order;
      if (order == f.order() - 1) {
        unit = x;
        break;
      }
    }
  }
  Matrix diag = Matrix::identity(f, a.n);
  diag(0, 0) = unit;
  if (!unit.is_one()) gens.push_back(diag);
  if (a.n >= 2) {
    Matrix t = Matrix::identity(f, a.n);
    t(0, 1) = Scalar::one(f);
    gens.push_back(t);
    std::vector<std::size_t> cycle(a.n), swap(a.n);
    for (std::size_t i = 0; i < a.n; ++i) {
      cycle[i] = (i + 1) % a.n;
      swap[i] = i;
    }
    std::swap(swap[0], swap[1]);
    if (a.n > 2) gens.push_back(permutation_matrix(f, cycle));
    gens.push_back(permutation_matrix(f, swap));
  }
  const Representation r =
      make_representation(f, RepMode::Group, gens, "GL" + std::to_string(a.n) + "(" + f.to_string() + ")");
  emit(Json{{"representation", representation_to_json(r)}}, a.common.out);
  return kHolds;
}

// --- exterior ---------------------------------------------------------------

struct ExteriorArgs {
  Common common;
  std::string rep;
  std::size_t m = 2;
};

int cmd_exterior(const ExteriorArgs& a) {
  emit(representation_to_json(exterior_rep(load_rep(a.rep), a.m)), a.common.out);
  return kHolds;
}

// --- characters -------------------------------------------------------------

struct CharArgs {
  Common common;
  std::string partition;
  int a = 0, b = 0, n = 1, m = 0;
  std::string kind = "sym2";
};

int cmd_char_table(const CharArgs& a) {
  const Partition p = parse_partition(a.partition);
  const ClassFunction chi = sym_char(p);
  emit(Json{{"partition", to_string(p)}, {"degree", chi.degree().get_str()}, {"values", class_function_json(chi)}},
       a.common.out);
  return kHolds;
}

int cmd_char_wedge2(const CharArgs& a) {
  const Partition p = parse_partition(a.partition);
  const ClassFunction psi = exterior_square_char(sym_char(p));
  emit(Json{{"partition", to_string(p)},
            {"degree", psi.degree().get_str()},
            {"values", class_function_json(psi)},
            {"decomposition", decomposition_json(decompose(psi))}},
       a.common.out);
  return kHolds;
}

int cmd_char_gl2(const CharArgs& a) {
  const bool ok = gl2_wedge_identity(a.a, a.b);
  Json summands = Json::array();
  for (const auto& [p, q] : gl2_wedge_summands(a.a, a.b)) summands.push_back(Json::array({p, q}));
  emit(Json{{"a", a.a}, {"b", a.b}, {"highest_weight", Json::array({a.a + a.b, a.b})}, {"summands", summands},
            {"identity", ok}},
       a.common.out);
  return ok ? kHolds : kRefuted;
}

int cmd_char_partitions(const CharArgs& a) {
  emit(Json{{"n", a.n}, {"coefficients", distinct_parts_coeffs(a.n)}}, a.common.out);
  return kHolds;
}

int cmd_char_plethysm(const CharArgs& a) {
  PlethysmKind kind;
  if (a.kind == "sym2")
    kind = PlethysmKind::sym2;
  else if (a.kind == "wedge2")
    kind = PlethysmKind::wedge2;
  else
    throw Error(Errc::ParseError, "kind must be sym2 or wedge2");
  emit(Json{{"kind", a.kind}, {"n", a.n}, {"m", a.m}, {"components", plethysm_component_count(kind, a.n, a.m)}},
       a.common.out);
  return kHolds;
}

// --- symplectic -------------------------------------------------------------

struct SympArgs {
  Common common;
  std::string field = "Q";
  std::size_t n = 2;
  std::size_t m = 2;
  std::size_t trials = 200;
  std::string subspace;
};

int cmd_symp_kernel(const SympArgs& a) {
  const SymplecticSpace sp = SymplecticSpace::standard(parse_field(a.field), a.n);
  const Subspace k = ker_fm(sp, a.m);
  emit(Json{{"n", a.n}, {"m", a.m}, {"dim", k.dim()}, {"kernel", subspace_to_json(k)}}, a.common.out);
  return kHolds;
}

int cmd_symp_kerperp(const SympArgs& a) {
  const SymplecticSpace sp = SymplecticSpace::standard(parse_field(a.field), a.n);
  const KerPerpReport kp = ker_perp_realizability_check(sp, a.m, a.trials, a.common.seed);
  emit(Json{{"n", a.n},
            {"m", a.m},
            {"ker_perp", subspace_to_json(kp.ker_perp)},
            {"trials", kp.trials},
            {"trials_passed", kp.trials_passed},
            {"pairings_all_nonzero", kp.pairings_all_nonzero},
            {"perp_realizability", to_string(kp.perp_realizability)},
            {"perp_scan_exhaustive", kp.perp_scan_exhaustive},
            {"points_examined", kp.points_examined}},
       a.common.out);
  if (kp.perp_realizability == Realizability::Realizable || !kp.pairings_all_nonzero) return kRefuted;
  return kp.perp_realizability == Realizability::NotRealizable ? kHolds : kUnknown;
}

int cmd_symp_normal(const SympArgs& a) {
  const FieldSpec f = parse_field(a.field);
  const SymplecticSpace sp = SymplecticSpace::standard(f, a.n);
  const Subspace w = subspace_from_json(f, read_json_file(a.subspace));
  if (w.ambient_dim() != sp.dim()) throw Error(Errc::AmbientMismatch, "subspace must live in k^{2n}");
  const NormalBasis nb = symplectic_normal_basis(sp, w);
  Json basis = Json::array();
  for (const Vector& v : nb.basis) basis.push_back(vector_to_json(v));
  Json out{{"n", a.n}, {"k", nb.k}, {"l", nb.l}, {"basis", basis}, {"subspace", subspace_to_json(w)}};
  const std::size_t codim = sp.dim() - w.dim();
  if (codim <= a.n) {
    out["lagrangian_complement"] = subspace_to_json(lagrangian_complement(sp, w));
    out["isotropic_transversal"] = subspace_to_json(isotropic_transversal(sp, w, codim));
  }
  emit(out, a.common.out);
  return kHolds;
}

// --- rnumber / recheck / verify ---------------------------------------------

int cmd_rnumber(std::uint64_t n, std::uint64_t m, const Common& c) {
  const RNumberBounds b = r_number_bounds(n, m);
  emit(Json{{"n", n}, {"m", m}, {"lower", b.lower}, {"upper", b.upper},
            {"exact", b.exact ? Json(*b.exact) : Json(nullptr)}},
       c.out);
  return b.exact ? kHolds : kUnknown;
}

int cmd_recheck(const std::string& path, const Common& c) {
  const Json j = read_json_file(path);
  const ReportDocument doc = report_from_json(j);
  RecheckResult rc = recheck_certificate(doc.rep, doc.report);
  if (!doc.report.invariant_pair && !doc.report.subspace_pair) {
    rc.ok = false;
    rc.problems.push_back("report carries no certificate");
  }
  const bool roundtrip = dump(report_to_json(doc.rep, doc.report)) == dump(j);
  emit(Json{{"ok", rc.ok}, {"problems", rc.problems}, {"canonical_roundtrip", roundtrip}}, c.out);
  return rc.ok ? kHolds : kRefuted;
}

struct VerifyArgs {
  Common common;
  std::string filter;
  std::string json_out;
  std::string certificates;
  std::string fixtures;
  std::size_t jobs = 1;
};

int cmd_verify(const VerifyArgs& a) {
  // Fixtures are validated up front so a corrupted file produces no partial report.
  if (!a.fixtures.empty()) {
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(a.fixtures))
      if (e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& p : files) load_rep(p.string());
  }
  SuiteOptions opts;
  opts.filter = a.filter;
  opts.seed = a.common.seed;
  opts.jobs = a.jobs;
  opts.certificate_dir = a.certificates;
  opts.caps = caps_of(a.common);
  const SuiteReport rep = run_suite(opts);
  for (const SuiteItemResult& r : rep.items) {
    std::cout << std::setw(2) << r.info.id << " " << std::left << std::setw(24) << r.info.name << std::right << " "
              << std::setw(8) << to_string(r.status) << " " << std::setw(9) << static_cast<long long>(r.runtime_ms)
              << " ms\n";
    for (const std::string& f : r.failures) std::cout << "     ! " << f << "\n";
  }
  std::cout << "overall " << to_string(rep.overall) << "\n";
  if (!a.json_out.empty()) emit(suite_to_json(rep), a.json_out);
  switch (rep.overall) {
    case ItemStatus::Verified: return kHolds;
    case ItemStatus::Refuted: return kRefuted;
    default: return kUnknown;
  }
}

void add_common(CLI::App* app, Common& c, bool with_caps = false) {
  app->add_option("--out,-o", c.out, "Write JSON here instead of standard output");
  app->add_option("--seed", c.seed, "Seed for every randomized step");
  if (with_caps) app->add_option("--caps", c.caps, "Budget overrides, e.g. points=100000,group=5000");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thickness and density of representations over exact fields"};
  app.require_subcommand(1);
  std::function<int()> action;

  CheckArgs check;
  auto* c_check = app.add_subcommand("check", "Decide thickness, density or irreducibility");
  c_check->add_option("--rep", check.rep, "Representation JSON")->required();
  c_check->add_option("--m", check.m, "Degree");
  c_check->add_option("--mode", check.mode)->check(CLI::IsMember({"thick", "dense", "irreducible"}));
  c_check->add_option("--method", check.method)->check(CLI::IsMember({"definition", "criterion", "burnside"}));
  add_common(c_check, check.common, true);
  c_check->callback([&] { action = [&] { return cmd_check(check); }; });

  ConstructArgs con;
  auto* c_con = app.add_subcommand("construct", "Build representations with invariant witnesses");
  c_con->require_subcommand(1);
  auto* c_comp = c_con->add_subcommand("companion", "Cyclic-shift pair with window subspaces");
  c_comp->add_option("--field", con.field);
  c_comp->add_option("--n", con.n);
  c_comp->add_option("--a", con.a);
  c_comp->add_option("--b", con.b);
  add_common(c_comp, con.common);
  c_comp->callback([&] { action = [&] { return cmd_construct_companion(con); }; });
  auto* c_block = c_con->add_subcommand("block", "Block-cyclic pair with a small realizable invariant subspace");
  c_block->add_option("--field", con.block_field, "Field, or 'auto' for the suggested prime");
  c_block->add_option("--ell", con.ell);
  c_block->add_option("--m", con.m);
  c_block->add_flag("--loose", con.loose, "Random invertible blocks B_1..B_{l-1}");
  add_common(c_block, con.common);
  c_block->callback([&] { action = [&] { return cmd_construct_block(con); }; });
  auto* c_e1 = c_con->add_subcommand("e1wedge", "The subspace e1 ^ k^n of the second power");
  c_e1->add_option("--field", con.field);
  c_e1->add_option("--n", con.n);
  add_common(c_e1, con.common);
  c_e1->callback([&] { action = [&] { return cmd_construct_e1wedge(con); }; });
  auto* c_lie = c_con->add_subcommand("lie", "Standard representation of gl, sl, so (split) or sp");
  c_lie->add_option("--family", con.family);
  c_lie->add_option("--field", con.field);
  c_lie->add_option("--n", con.n);
  add_common(c_lie, con.common);
  c_lie->callback([&] { action = [&] { return cmd_construct_lie(con); }; });
  auto* c_gl = c_con->add_subcommand("gl", "Generators of the general linear group");
  c_gl->add_option("--field", con.field);
  c_gl->add_option("--n", con.n);
  add_common(c_gl, con.common);
  c_gl->callback([&] { action = [&] { return cmd_construct_gl(con); }; });

  ExteriorArgs ext;
  auto* c_ext = app.add_subcommand("exterior", "Exterior power of a representation");
  c_ext->add_option("--rep", ext.rep)->required();
  c_ext->add_option("--m", ext.m);
  add_common(c_ext, ext.common);
  c_ext->callback([&] { action = [&] { return cmd_exterior(ext); }; });

  CharArgs ch;
  auto* c_ch = app.add_subcommand("characters", "Symmetric-group and GL2 character computations");
  c_ch->require_subcommand(1);
  auto* c_tab = c_ch->add_subcommand("char", "Irreducible character of S_d");
  c_tab->add_option("--partition", ch.partition)->required();
  add_common(c_tab, ch.common);
  c_tab->callback([&] { action = [&] { return cmd_char_table(ch); }; });
  auto* c_w2 = c_ch->add_subcommand("wedge2", "Exterior square of an S_d irreducible, decomposed");
  c_w2->add_option("--partition", ch.partition)->required();
  add_common(c_w2, ch.common);
  c_w2->callback([&] { action = [&] { return cmd_char_wedge2(ch); }; });
  auto* c_gl2 = c_ch->add_subcommand("gl2", "Exterior-square identity for a GL2 irreducible");
  c_gl2->add_option("--a", ch.a)->required();
  c_gl2->add_option("--b", ch.b);
  add_common(c_gl2, ch.common);
  c_gl2->callback([&] { action = [&] { return cmd_char_gl2(ch); }; });
  auto* c_parts = c_ch->add_subcommand("partitions", "Coefficients of prod (1 + x^i)");
  c_parts->add_option("--n", ch.n)->required();
  add_common(c_parts, ch.common);
  c_parts->callback([&] { action = [&] { return cmd_char_partitions(ch); }; });
  auto* c_pl = c_ch->add_subcommand("plethysm", "Component count of an exterior power of S^2 or the exterior square");
  c_pl->add_option("--kind", ch.kind)->check(CLI::IsMember({"sym2", "wedge2"}));
  c_pl->add_option("--n", ch.n)->required();
  c_pl->add_option("--m", ch.m)->required();
  add_common(c_pl, ch.common);
  c_pl->callback([&] { action = [&] { return cmd_char_plethysm(ch); }; });

  SympArgs sy;
  auto* c_sy = app.add_subcommand("symplectic", "Symplectic contractions and subspace constructions");
  c_sy->require_subcommand(1);
  auto* c_ker = c_sy->add_subcommand("kernel", "Kernel of the contraction on the m-th power");
  auto* c_kp = c_sy->add_subcommand("kerperp", "Realizability of the perp of the contraction kernel");
  auto* c_nb = c_sy->add_subcommand("normal", "Normal basis, Lagrangian complement and isotropic transversal");
  for (auto* sub : {c_ker, c_kp, c_nb}) {
    sub->add_option("--field", sy.field);
    sub->add_option("--n", sy.n, "Half-dimension");
    add_common(sub, sy.common);
  }
  c_ker->add_option("--m", sy.m);
  c_kp->add_option("--m", sy.m);
  c_kp->add_option("--trials", sy.trials);
  c_nb->add_option("--subspace", sy.subspace, "Subspace JSON {\"ambient\", \"basis\"}")->required();
  c_ker->callback([&] { action = [&] { return cmd_symp_kernel(sy); }; });
  c_kp->callback([&] { action = [&] { return cmd_symp_kerperp(sy); }; });
  c_nb->callback([&] { action = [&] { return cmd_symp_normal(sy); }; });

  std::uint64_t rn_n = 4, rn_m = 2;
  Common rn_common;
  auto* c_rn = app.add_subcommand("rnumber", "Known bounds on the r-number of the m-th power");
  c_rn->add_option("--n", rn_n)->required();
  c_rn->add_option("--m", rn_m)->required();
  add_common(c_rn, rn_common);
  c_rn->callback([&] { action = [&] { return cmd_rnumber(rn_n, rn_m, rn_common); }; });

  std::string report_path;
  Common rc_common;
  auto* c_rc = app.add_subcommand("recheck", "Re-verify the certificate in a report");
  c_rc->add_option("--report", report_path)->required();
  add_common(c_rc, rc_common);
  c_rc->callback([&] { action = [&] { return cmd_recheck(report_path, rc_common); }; });

  VerifyArgs ver;
  auto* c_ver = app.add_subcommand("verify", "Run the verification suite");
  c_ver->add_option("--filter", ver.filter, "Comma-separated item ids, names or groups");
  c_ver->add_option("--json-out", ver.json_out);
  c_ver->add_option("--jobs", ver.jobs);
  c_ver->add_option("--certificates", ver.certificates, "Directory for certificate files");
  c_ver->add_option("--fixtures", ver.fixtures, "Directory of representation files to validate first");
  c_ver->add_option("--seed", ver.common.seed);
  c_ver->add_option("--caps", ver.common.caps);
  c_ver->callback([&] { action = [&] { return cmd_verify(ver); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }
  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::CapExceeded ? kUnknown : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
