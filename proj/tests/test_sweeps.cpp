#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "wedge/pi1.hpp"
#include "wedge/report.hpp"
#include "wedge/simplicial_complex.hpp"
#include "wedge/sweeps.hpp"

using namespace wedge;

TEST_CASE("pi1 probe certifies small contractible complexes") {
  SimplicialComplex solid({"0", "1", "2", "3"}, {{0, 1, 2, 3}});
  CHECK(pi1_probe(solid) == Pi1Result::Trivial);

  SimplicialComplex tri({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(pi1_probe(tri) == Pi1Result::Unknown);  // genuine loop survives

  SimplicialComplex pt({"p"}, {{0}});
  CHECK(pi1_probe(pt) == Pi1Result::Trivial);
  CHECK(pi1_probe(SimplicialComplex()) == Pi1Result::Unknown);

  SimplicialComplex two({"a", "b"}, {{0}, {1}});
  CHECK(pi1_probe(two) == Pi1Result::Unknown);  // disconnected is out of scope
}

TEST_CASE("wedge law sweep") {
  VerificationReport small = verify_con_x({2, 2, 1});
  CHECK(small.pass());
  CHECK(small.instances == 19);
  CHECK(small.sweep == "con-x");
  CHECK(small.params.at("max_edges") == "2");
  CHECK(small.params.at("max_labels") == "2");
  CHECK(small.params.count("jobs") == 0);
  CHECK_FALSE(small.minimal_failure.has_value());
  CHECK(small.certification == "homological");
  CHECK(small.fingerprint.find("wedge") == 0);

  VerificationReport mid = verify_con_x({3, 3, 2});
  CHECK(mid.pass());
  CHECK(mid.instances == 78);
}

TEST_CASE("core retraction sweep") {
  VerificationReport rep = verify_core_retract({3, 2, 2});
  CHECK(rep.pass());
  CHECK(rep.instances == 69);
}

TEST_CASE("loop deletion shifts degrees") {
  VerificationReport rep = verify_suspension({3, 3, 2});
  CHECK(rep.pass());
  CHECK(rep.instances > 0);
}

TEST_CASE("edge collapse matches dropping one poset element") {
  VerificationReport rep = verify_quotient_step({3, 3, 2});
  CHECK(rep.pass());
  CHECK(rep.instances > 0);
  // fully labelled trees leave no admissible edge and are counted, not checked
  CHECK(rep.skipped >= 1);
}

TEST_CASE("random inflations keep the cm verdict") {
  VerificationReport rep = verify_inflation_cm(30, 0, 1);
  CHECK(rep.pass());
  CHECK(rep.instances == 30);
  CHECK(rep.params.at("seed") == "0");
  CHECK(rep.params.at("trials") == "30");

  VerificationReport echo = verify_inflation_cm(5, 123, 1);
  CHECK(echo.params.at("seed") == "123");
}

TEST_CASE("rank-2 truncation against primitive vectors") {
  VerificationReport one = verify_farey(1, 1);
  CHECK(one.pass());
  CHECK(one.observations.at("vertices") == "4");
  CHECK(one.observations.at("edges") == "4");
  CHECK(one.instances == 6);

  VerificationReport two = verify_farey(2, 2);
  CHECK(two.pass());
  CHECK(two.observations.at("vertices") == "8");
  CHECK(two.observations.at("edges") == "20");
  CHECK(two.instances == 28);
}

TEST_CASE("rank-3 probe at length one is the octahedron") {
  VerificationReport rep = verify_b3_probe(1, 2);
  CHECK(rep.pass());
  CHECK(rep.observations.at("vertices") == "6");
  CHECK(rep.observations.at("edges") == "12");
  CHECK(rep.observations.at("triangles") == "8");
  CHECK(rep.observations.at("components") == "1");
  CHECK(rep.observations.at("h1_betti") == "0");
  CHECK(rep.observations.at("every_vertex_in_triangle") == "true");
}

TEST_CASE("reports do not depend on the job count") {
  CHECK(verify_con_x({3, 2, 1}).stable_json() == verify_con_x({3, 2, 4}).stable_json());
  CHECK(verify_inflation_cm(20, 7, 1).stable_json() ==
        verify_inflation_cm(20, 7, 3).stable_json());
  CHECK(verify_farey(2, 1).stable_json() == verify_farey(2, 4).stable_json());
  CHECK(verify_quotient_step({3, 2, 1}).stable_json() ==
        verify_quotient_step({3, 2, 4}).stable_json());
}

TEST_CASE("report json round-trips") {
  VerificationReport rep = verify_con_x({1, 1, 1});
  VerificationReport back = VerificationReport::from_json(rep.to_json());
  CHECK(back.sweep == rep.sweep);
  CHECK(back.params == rep.params);
  CHECK(back.instances == rep.instances);
  CHECK(back.skipped == rep.skipped);
  CHECK(back.failures == rep.failures);
  CHECK(back.minimal_failure == rep.minimal_failure);
  CHECK(back.observations == rep.observations);
  CHECK(back.certification == rep.certification);
  CHECK(back.to_json() == rep.to_json());
  CHECK_THROWS_AS(VerificationReport::from_json("{]"), ParseError);

  FailureRecord f{"inst", "want", "got"};
  VerificationReport with;
  with.sweep = "demo";
  with.failures.push_back(f);
  with.minimal_failure = f;
  VerificationReport with_back = VerificationReport::from_json(with.to_json());
  CHECK(with_back.failures == with.failures);
  REQUIRE(with_back.minimal_failure.has_value());
  CHECK(*with_back.minimal_failure == f);
  CHECK_FALSE(with_back.pass());
}
