#include "ck/identify.hpp"

#include <doctest.h>

using namespace ck;

namespace {

OmegaSequence seq(const std::string& csv) { return *OmegaSequence::parse(csv); }

}  // namespace

TEST_CASE("orthogonal and pseudo-orthogonal names") {
  CHECK(identify(seq("1,1")) == "so(3)");
  CHECK(identify(seq("1,-1")) == "so(2,1)");
  CHECK(identify(seq("-1,1")) == "so(2,1)"); // metric (1,-1,-1) reported with p >= q
  CHECK(identify(seq("1,1,1,1")) == "so(5)");
  CHECK(identify(seq("-1,1,1,1")) == "so(4,1)");
  CHECK(identify(seq("1,-1,-1,1")) == "so(4,1)"); // metric diag(1,1,-1,1,1)
  CHECK(identify(seq("-1,1,-1,1")) == "so(3,2)");
}

TEST_CASE("inhomogeneous names and aliases") {
  auto euclid = identify_name(seq("0,1,1,1"));
  REQUIRE(euclid.has_value());
  CHECK(euclid->name == "iso(4)");
  CHECK(euclid->alias == "Euclidean");

  auto poincare = identify_name(seq("0,-1,1,1"));
  REQUIRE(poincare.has_value());
  CHECK(poincare->name == "iso(3,1)");
  CHECK(poincare->alias == "Poincare");

  auto galilei = identify_name(seq("0,0,1,1"));
  REQUIRE(galilei.has_value());
  CHECK(galilei->name == "iiso(3)");
  CHECK(galilei->alias == "3+1 Galilei");

  CHECK(display_name(seq("0,0,1")) == "iiso(2) (2+1 Galilei)");
  CHECK(identify(seq("0,0,0,1")) == "iiiso(2)");
  CHECK(identify(seq("0,0,0,-1")) == "iiiso(1,1)");
}

TEST_CASE("trailing-zero and carroll patterns") {
  auto prime = identify_name(seq("1,1,0"));
  REQUIRE(prime.has_value());
  CHECK(prime->name == "i'so(3)");
  CHECK(prime->alias.empty());

  auto carroll = identify_name(seq("0,1,1,0"));
  REQUIRE(carroll.has_value());
  CHECK(carroll->name == "ii'so(3)");
  CHECK(carroll->alias == "3+1 Carroll");

  CHECK(display_name(seq("0,1,0")) == "ii'so(2) (2+1 Carroll)");
  CHECK(identify(seq("0,-1,0")) == "ii'so(1,1)");
}

TEST_CASE("flag and newton-hooke patterns") {
  CHECK(identify(seq("0,0,0,0")) == "flag iiiiso(1)");
  CHECK(identify(seq("0,0")) == "flag iiso(1)");

  CHECK(identify(seq("1,0,1,1")) == "oscillating Newton-Hooke");
  CHECK(identify(seq("-1,0,1,1")) == "expanding Newton-Hooke");
  CHECK(display_name(seq("1,0,1")) == "oscillating Newton-Hooke");

  // zero in second slot with mixed tail signs is outside the registry
  CHECK_FALSE(identify(seq("1,0,-1")).has_value());
}

TEST_CASE("registry requires standardized input") {
  CHECK_THROWS_AS(identify(*OmegaSequence::parse("2,1")), std::invalid_argument);
  CHECK(display_name(seq("1,1")) == "so(3)");
  CHECK(display_name(seq("1,0,-1")).empty());
}
