#include <doctest.h>

#include <cstdlib>
#include <fstream>

#include "mckay/json_io.hpp"
#include "support.hpp"

using namespace mckay;
using mckay::test::error_of;

namespace {

json read_fixture(const std::string& name) {
  std::ifstream in(std::string(MCKAY_FIXTURES) + "/" + name);
  REQUIRE(in.good());
  return json::parse(in);
}

}  // namespace

TEST_SUITE("json") {
  TEST_CASE("cyclotomic round trip") {
    for (const char* text : {"0", "-7/3", "i", "1+i", "zeta(3,1)", "zeta(8,1)+zeta(8,7)", "(2-i)/5", "zeta(12,5)*3/4"}) {
      const auto c = parse_scalar(text);
      const auto j = to_json(c);
      CHECK(cyclo_from_json(j) == c);
      CHECK(cyclo_from_json(json(text)) == c);
    }
    CHECK(to_json(CycloNumber(Rational(1, 2))) == json{{"order", 1}, {"coeffs", {"1/2"}}});
    CHECK(to_json(CycloNumber::imaginary_unit()) == json{{"order", 4}, {"coeffs", {"0", "1"}}});
    CHECK(cyclo_from_json(json(5)) == CycloNumber(5));
    CHECK(cyclo_from_json(json{{"order", 4}, {"coeffs", {0, 1}}}) == CycloNumber::imaginary_unit());
    CHECK(error_of([] { (void)cyclo_from_json(json{{"coeffs", {1}}}); }) == ErrorCode::parse_error);
  }

  TEST_CASE("fixed output order") {
    ::setenv("MCKAY_CYCLO_ORDER", "8", 1);
    const auto j = to_json(CycloNumber::imaginary_unit());
    CHECK(j["order"] == 8);
    CHECK(cyclo_from_json(j) == CycloNumber::imaginary_unit());
    // incompatible orders are ignored
    CHECK(to_json(parse_scalar("zeta(3,1)"))["order"] == 3);
    ::unsetenv("MCKAY_CYCLO_ORDER");
    CHECK(to_json(CycloNumber::imaginary_unit())["order"] == 4);
  }

  TEST_CASE("map fixtures") {
    const auto g = map_from_json(read_fixture("p1344_plus_i.json"));
    const auto expected = test::resolution_to_cr_map(1);
    CHECK(g.sources == expected.sources);
    CHECK(g.targets == expected.targets);
    CHECK(g.matrix == expected.matrix);
    CHECK(map_from_json(to_json(g)).matrix == g.matrix);

    const auto m = map_from_json(read_fixture("p1344_minus_i.json"));
    CHECK(m.matrix == test::resolution_to_cr_map(-1).matrix);
    for (long n = 2; n <= 6; ++n)
      CHECK(map_from_json(read_fixture("p11n_" + std::to_string(n) + ".json")).matrix == test::p11n_map(n).matrix);

    CHECK(error_of([] { (void)map_from_json(json{{"matrix", json::array()}}); }) == ErrorCode::parse_error);
  }

  TEST_CASE("fan round trip") {
    const auto f = builtin_resolution(Weights{1, 3, 4, 4}).refined;
    const auto back = fan_from_json(to_json(f));
    CHECK(back.rays == f.rays);
    CHECK(back.max_cones == f.max_cones);
    CHECK(error_of([] { (void)fan_from_json(json{{"dim", 3}}); }) == ErrorCode::parse_error);
  }

  TEST_CASE("reports serialise identically on repeat") {
    const auto tc = ToricCohomology::builtin(Weights{1, 3, 4, 4});
    CHECK(cohomology_json(tc).dump(2) == cohomology_json(ToricCohomology::builtin(Weights{1, 3, 4, 4})).dump(2));
    const auto alg = to_json(tc.algebra);
    CHECK(alg.contains("graded_dims"));
    CHECK(alg["graded_dims"] == json{1, 5, 5, 1});
  }
}
