#include "doctest.h"

#include "thickrep/constructions.hpp"
#include "thickrep/serialize.hpp"

using namespace thickrep;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F5 = FieldSpec::prime(5);

std::string roundtrip_report(const std::string& text) {
  const ReportDocument doc = report_from_json(Json::parse(text));
  return dump(report_to_json(doc.rep, doc.report));
}

}  // namespace

TEST_CASE("fields and scalars") {
  CHECK(field_to_json(Q).dump() == R"({"kind":"Q"})");
  CHECK(field_to_json(F5).dump() == R"({"kind":"Fp","p":5})");
  CHECK(field_to_json(FieldSpec::extension(2, 2)).dump() == R"({"k":2,"kind":"Fq","p":2})");
  CHECK(field_from_json(Json::parse(R"({"kind":"Fq","p":3,"k":2})")) == FieldSpec::extension(3, 2));
  CHECK(parse_field("F7") == FieldSpec::prime(7));
  CHECK(parse_field("F2^3") == FieldSpec::extension(2, 3));
  CHECK_THROWS_AS(parse_field("F6"), Error);
  CHECK_THROWS_AS(parse_field("R"), Error);
  CHECK_THROWS_AS(field_from_json(Json::parse(R"({"kind":"Fp","p":4})")), Error);

  CHECK(scalar_to_json(Scalar::from_fraction(Q, 3, 2)) == "3/2");
  CHECK(scalar_to_json(Scalar(F5, -1)) == "4");
  CHECK(scalar_from_json(Q, "-6/4") == Scalar::from_fraction(Q, -3, 2));
  CHECK_THROWS_AS(scalar_from_json(Q, "1/0"), Error);
  CHECK_THROWS_AS(scalar_from_json(Q, Json::array()), Error);
}

TEST_CASE("matrices, subspaces and wedge vectors") {
  const Matrix m = Matrix::from_ints(Q, {{1, 2}, {3, 4}});
  CHECK(matrix_to_json(m).dump() == R"([["1","2"],["3","4"]])");
  CHECK(matrix_from_json(Q, matrix_to_json(m)) == m);
  CHECK_THROWS_AS(matrix_from_json(Q, Json::parse(R"([["1"],["1","2"]])")), Error);

  const Subspace s = Subspace::span(Q, 3, {{Scalar(Q, 2), Scalar(Q, 4), Scalar(Q, 0)}});
  CHECK(subspace_to_json(s).dump() == R"({"ambient":3,"basis":[["1","2","0"]]})");
  CHECK(subspace_from_json(Q, subspace_to_json(s)) == s);
  CHECK(subspace_from_json(Q, Json::parse(R"({"ambient":2,"basis":[]})")).is_zero());
  CHECK_THROWS_AS(subspace_from_json(Q, Json::parse(R"({"ambient":2,"basis":[["1","1"],["2","2"]]})")), Error);

  const WedgeVector w = wedge_of_vectors(Q, 4, {unit_vector(Q, 4, 0), unit_vector(Q, 4, 1)}) +
                        wedge_of_vectors(Q, 4, {unit_vector(Q, 4, 2), unit_vector(Q, 4, 3)});
  CHECK(wedge_to_json(w).dump() == R"({"1,2":"1","3,4":"1"})");
  CHECK(wedge_from_json(Q, 4, 2, wedge_to_json(w)) == w);
  CHECK_THROWS_AS(wedge_from_json(Q, 4, 2, Json::parse(R"({"2,1":"1"})")), Error);
  CHECK_THROWS_AS(wedge_from_json(Q, 4, 2, Json::parse(R"({"1,5":"1"})")), Error);
  CHECK_THROWS_AS(wedge_from_json(Q, 4, 2, Json::parse(R"({"1":"1"})")), Error);
}

TEST_CASE("representations") {
  const Representation r = companion_pair(F5, 3, Scalar(F5, 2), Scalar(F5, 3)).rep;
  const Json j = representation_to_json(r);
  CHECK(j["mode"] == "group");
  CHECK(j["dim"] == 3);
  const Representation back = representation_from_json(j);
  CHECK(back.generators == r.generators);
  CHECK(back.label == r.label);
  CHECK(dump(representation_to_json(back)) == dump(j));

  Json singular = j;
  singular["generators"][0] = Json::parse(R"([["0","0","0"],["0","1","0"],["0","0","1"]])");
  CHECK_THROWS_AS(representation_from_json(singular), Error);
  Json wrong_shape = j;
  wrong_shape["dim"] = 2;
  CHECK_THROWS_AS(representation_from_json(wrong_shape), Error);
  Json bad_mode = j;
  bad_mode["mode"] = "ring";
  CHECK_THROWS_AS(representation_from_json(bad_mode), Error);
}

TEST_CASE("reports round-trip byte for byte and keep their certificates") {
  const BlockRep br = block_rep(default_block_spec(FieldSpec::prime(13), 2, 2));
  const ThicknessReport crit = is_m_thick_criterion(br.rep, 2);
  REQUIRE(crit.invariant_pair);
  const std::string text = dump(report_to_json(br.rep, crit));
  CHECK(roundtrip_report(text) == text);
  const ReportDocument doc = report_from_json(Json::parse(text));
  CHECK(doc.report.invariant_pair->w1 == crit.invariant_pair->w1);
  CHECK(doc.report.invariant_pair->witness2 == crit.invariant_pair->witness2);
  CHECK(recheck_certificate(doc.rep, doc.report).ok);

  const ThicknessReport def = is_m_thick_definition(br.rep, 2);
  REQUIRE(def.subspace_pair);
  const std::string def_text = dump(report_to_json(br.rep, def));
  CHECK(roundtrip_report(def_text) == def_text);
  CHECK(recheck_certificate(report_from_json(Json::parse(def_text)).rep, def).ok);

  const ThicknessReport thick = is_m_thick_definition(br.rep, 1);
  const std::string thick_text = dump(report_to_json(br.rep, thick));
  CHECK(Json::parse(thick_text)["certificate"].is_null());
  CHECK(roundtrip_report(thick_text) == thick_text);

  // A tampered witness no longer re-verifies.
  Json tampered = Json::parse(text);
  tampered["certificate"]["w1"]["basis"] = Json::parse(R"([["1","0","0","0","0","0"]])");
  const ReportDocument bad = report_from_json(tampered);
  CHECK_FALSE(recheck_certificate(bad.rep, bad.report).ok);

  Json missing = Json::parse(text);
  missing.erase("verdict");
  CHECK_THROWS_AS(report_from_json(missing), Error);
}
