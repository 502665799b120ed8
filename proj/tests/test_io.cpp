#include <catch2/catch_amalgamated.hpp>

#include "qpforge/io.hpp"
#include "qpforge/verify.hpp"

using namespace qpforge;

TEST_CASE("scalar serialization round-trips exactly") {
  Cyc3 c(rat(-7, 3), rat(22, 7));
  Json j = cyc3_json(c);
  CHECK(j["a"] == "-7/3");
  CHECK(j["b"] == "22/7");
  CHECK(cyc3_from_json(j) == c);
  CHECK(cyc3_json(Cyc3::one())["a"] == "1");
}

TEST_CASE("quiver JSON carries names, labels and the potential") {
  Quiver q = build_D(4);
  Json j = quiver_json(q);
  CHECK(j["s"] == 4);
  CHECK(j["family"] == "D");
  REQUIRE(j["vertices"].size() == 6);
  CHECK(j["vertices"][0] == "3.0.0");
  CHECK(j["vertices"][3] == "X0");
  REQUIRE(j["arrows"].size() == 10);
  CHECK(j["arrows"][0]["label"] == "a[0,0]@3.0.0");
  CHECK(j["arrows"][0]["src"] == "3.0.0");
  CHECK(j["arrows"][0]["tgt"] == "2.1.0");

  Json p = potential_json(potential_D(4));
  REQUIRE(p.size() == 7);
  for (const auto& term : p) CHECK(term["cycle"].size() == 3);

  // byte-deterministic across rebuilds
  CHECK(quiver_json(build_D(4)).dump() == j.dump());
}

TEST_CASE("dot output is a digraph with display labels") {
  std::string dot = quiver_dot(build_D(4));
  CHECK(dot.find("digraph") == 0);
  CHECK(dot.find("\"3.0.0\" -> \"2.1.0\" [label=\"0\"]") != std::string::npos);
  CHECK(dot.find("[label=\"2,1\"]") != std::string::npos);
  CHECK(dot.find("[label=\"b0\"]") != std::string::npos);
}

TEST_CASE("algebra JSON exposes bases and the dimension matrix") {
  Quiver q = build_D(4);
  JacobianAlgebra J = compute_algebra(q, potential_D(4));
  Json j = algebra_json(J);
  CHECK(j["total_dimension"] == 32);
  REQUIRE(j["basis"].contains("3.0.0"));
  CHECK(j["basis"]["3.0.0"].size() == 4);
  CHECK(j["basis"]["3.0.0"][0]["degree"] == 0);
  size_t total = 0;
  for (const auto& row : j["dimension_matrix"])
    for (const auto& e : row) total += e.get<size_t>();
  CHECK(total == 32);
}

TEST_CASE("cut specs parse by arrow identity") {
  Quiver q = build_D(4);
  Cut c = parse_cut_spec(q, "a[1,0]@2.1.0,a[2,1]@2.1.0");
  CHECK(c.arrows.size() == 2);
  CHECK(is_cut(q, potential_D(4), c));
  CHECK(cut_to_string(q, c) == "a[1,0]@2.1.0,a[2,1]@2.1.0");

  CHECK_THROWS_AS(parse_cut_spec(q, "a[9,9]@0.0.0"), BadCutSpec);
  CHECK_THROWS_AS(parse_cut_spec(q, ""), BadCutSpec);
  Cut dup = parse_cut_spec(q, "b[0],b[0],g[1]");
  CHECK(dup.arrows.size() == 2);
}

TEST_CASE("homogeneity report JSON shape") {
  Quiver q = build_D(4);
  Potential w = potential_D(4);
  JacobianAlgebra J = compute_algebra(q, w);
  Cut c = parse_cut_spec(q, "a[1,0]@2.1.0,a[2,1]@2.1.0");
  Json j = homogeneity_json(q, homogeneity_report(J, c));
  CHECK(j["s"] == 4);
  CHECK(j["N"] == 1);
  CHECK(j["fcy"] == "2/2");
  CHECK(j["socle_degrees"]["X1"] == 1);
  CHECK(j["cut"].size() == 2);
}

TEST_CASE("ar quiver serialization") {
  Quiver q = build_D(4);
  Potential w = potential_D(4);
  Cut c = parse_cut_spec(q, "a[1,0]@2.1.0,a[2,1]@2.1.0");
  ARQuiver ar = ar_quiver_module(q, w, c);
  Json j = ar_quiver_json(q, ar);
  CHECK(j["vertices"].size() == 12);
  CHECK(j["arrows"].size() == 18);
  std::string dot = ar_quiver_dot(q, ar);
  CHECK(dot.find("rank=same") != std::string::npos);
  CHECK(dot.find("\"2.1.0@0\"") != std::string::npos);
  CHECK(dot.find("\"2.1.0@1\"") != std::string::npos);
}

TEST_CASE("verification bundle per residue class") {
  VerifyOptions opt;
  VerificationReport r4 = run_verify(4, opt);
  CHECK(r4.ok());
  bool found_census = false;
  for (const auto& c : r4.checks)
    if (c.name == "cut_census") {
      found_census = true;
      CHECK(c.status == "pass");
      CHECK(c.witness.find("17") != std::string::npos);
    }
  CHECK(found_census);

  VerificationReport r5 = run_verify(5, opt);
  CHECK(r5.ok());
  int skipped = 0;
  for (const auto& c : r5.checks) {
    if (c.status == "skipped") ++skipped;
    if (c.name == "cut_census") CHECK(c.witness.find("zero cuts") != std::string::npos);
  }
  CHECK(skipped > 0);

  Json j = r4.to_json();
  CHECK(j["failed"] == 0);
  CHECK(j["checks"].size() == r4.checks.size());

  // subsetting by name
  VerifyOptions narrow;
  narrow.only = {"dimension"};
  VerificationReport rn = run_verify(4, narrow);
  CHECK(rn.checks.size() == 1);
  CHECK(rn.checks[0].name == "dimension");
}
