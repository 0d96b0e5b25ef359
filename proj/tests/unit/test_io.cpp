#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "meshkit/errors.hpp"
#include "meshkit/io.hpp"

using namespace meshkit;

TEST_CASE("parse_tq") {
  std::istringstream in(
      "# comment\n"
      "vertex a proj\n"
      "  vertex b   proj inj  \n"
      "vertex c inj\n"
      "arrow a b dim=2\n"
      "arrow b c dim=2\n"
      "tau c -> a\n");
  const auto t = parse_tq(in);
  CHECK(t.quiver.size() == 3);
  CHECK(t.quiver.projective(t.quiver.index("b")));
  CHECK(t.quiver.injective(t.quiver.index("b")));
  CHECK(t.quiver.tau(t.quiver.index("c")) == t.quiver.index("a"));
  CHECK(t.dims.at({"a", "b"}) == 2);
  std::ostringstream out;
  write_tq(out, t.quiver, t.dims);
  std::istringstream again(out.str());
  const auto u = parse_tq(again);
  CHECK(u.dims == t.dims);
  std::ostringstream out2;
  write_tq(out2, u.quiver, u.dims);
  CHECK(out2.str() == out.str());
}

TEST_CASE("parse errors carry line numbers") {
  std::istringstream bad("vertex a\nedge a a\n");
  try {
    parse_tq(bad);
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  std::istringstream dim("vertex a\nvertex b\narrow a b dim=0\n");
  CHECK_THROWS_AS(parse_tq(dim), ParseError);
  CHECK_THROWS_AS(read_tq(fixtures::data("malformed.tq")), ParseError);
}

TEST_CASE("parse_alg") {
  std::istringstream in("field F 7\nvertex 1\nvertex 2\narrow x : 1 -> 2\n");
  const auto a = parse_alg(in);
  REQUIRE(a.field.has_value());
  CHECK(*a.field == GroundField::prime(7));
  CHECK(a.arrows.size() == 1);
  CHECK(read_alg(fixtures::data("a2.alg")).field == GroundField::rationals());
  CHECK(read_alg(fixtures::data("a2.alg"), GroundField::prime(101)).field == GroundField::prime(101));
  std::istringstream bad("vertex 1\narrow x 1 2\n");
  CHECK_THROWS_AS(parse_alg(bad), ParseError);
  std::istringstream nonprime("field F 8\n");
  CHECK_THROWS(parse_alg(nonprime));
}

TEST_CASE("parse_pairings") {
  const GroundField Q = GroundField::rationals();
  std::istringstream in("pairing x y 1 2 3 4\npairing x z 1/2\n");
  const auto p = parse_pairings(in, Q);
  CHECK(p.at({"x", "y"}) == Matrix::from_entries(Q, 2, 2, {1, 2, 3, 4}));
  CHECK(p.at({"x", "z"})(0, 0) == Q.from(1) / Q.from(2));
  std::istringstream bad("pairing x y 1 2 3\n");
  CHECK_THROWS_AS(parse_pairings(bad, Q), ParseError);
}

TEST_CASE("dump format") {
  const GroundField Q = GroundField::rationals();
  CHECK(dump_line("m", Matrix::from_entries(Q, 2, 2, {Q.from(1), Q.from(0), Q.from(1) / Q.from(2), Q.from(-3)})) ==
        "m: 2 x 2; 1 0 1/2 -3");
  CHECK(dump_line("z", Matrix(Q, 0, 3)) == "z: 0 x 3;");
}

TEST_CASE("cover export round trip") {
  const auto t = read_tq(fixtures::data("tube3x2.tq"));
  const auto tc = universal_cover(t.quiver, "t0_1", 4);
  const auto dir = std::filesystem::temp_directory_path() / "meshkit_unit_cover";
  export_cover(dir.string(), tc, t.dims);
  const auto back = import_cover(dir.string());
  CHECK(back.cover.cover.size() == tc.cover.size());
  CHECK(back.cover.radius == tc.radius);
  CHECK(back.cover.base_vertex == tc.base_vertex);
  for (int v = 0; v < tc.cover.size(); ++v) {
    const int w = back.cover.cover.index(tc.cover.name(v));
    CHECK(back.cover.length[w] == tc.length[v]);
    CHECK(back.cover.interior[w] == tc.interior[v]);
    CHECK(back.cover.base().name(back.cover.pi_of(w)) == tc.base().name(tc.pi_of(v)));
  }
  std::filesystem::remove_all(dir);
}
