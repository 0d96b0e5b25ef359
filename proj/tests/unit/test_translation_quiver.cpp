#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "meshkit/errors.hpp"
#include "meshkit/translation_quiver.hpp"
#include "oracles.hpp"

using namespace meshkit;

namespace {

bool has_issue(const ValidationReport& r, const std::string& needle) {
  return std::any_of(r.issues.begin(), r.issues.end(), [&](const std::string& s) { return s.find(needle) != std::string::npos; });
}

}  // namespace

TEST_CASE("validate accepts the A2 quiver") { CHECK(validate(fixtures::a2_quiver()).ok()); }

TEST_CASE("validate reports a loop") {
  TranslationQuiver q;
  q.add_vertex("x", true, true);
  q.add_arrow("x", "x");
  CHECK(has_issue(validate(q), "loop at x"));
}

TEST_CASE("validate reports a mesh axiom failure") {
  TranslationQuiver q;
  q.add_vertex("t", true, false);
  q.add_vertex("y", true, true);
  q.add_vertex("x", false, true);
  q.add_arrow("y", "x");
  q.set_tau("x", "t");
  const auto r = validate(q);
  CHECK_FALSE(r.ok());
  CHECK(has_issue(r, "mesh"));
}

TEST_CASE("validate reports multiple arrows and a missing tau") {
  auto q = fixtures::a2_quiver();
  q.add_arrow("S2", "P1");
  CHECK_FALSE(validate(q).ok());
  TranslationQuiver r;
  r.add_vertex("a", true, false);
  r.add_vertex("b", false, true);
  r.add_arrow("a", "b");
  CHECK_FALSE(validate(r).ok());
}

TEST_CASE("meshes of A2") {
  const auto ms = meshes(fixtures::a2_quiver());
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].end == "S1");
  CHECK(ms[0].start == "S2");
  CHECK(ms[0].middles == std::vector<std::string>{"P1"});
}

TEST_CASE("meshes of an all-projective quiver are empty") {
  TranslationQuiver q;
  q.add_vertex("a", true, true);
  q.add_vertex("b", true, true);
  q.add_arrow("a", "b");
  CHECK(meshes(q).empty());
}

TEST_CASE("meshes of a truncated ZA2 cover have one or two middles") {
  const auto t = read_tq(fixtures::data("tube3x2.tq"));
  const auto tc = universal_cover(t.quiver, "t0_1", 3);
  int seen = 0;
  for (int x = 0; x < tc.cover.size(); ++x) {
    if (!tc.interior[x] || tc.cover.tau(x) < 0) continue;
    CHECK(tc.cover.predecessors(x).size() >= 1);
    CHECK(tc.cover.predecessors(x).size() <= 2);
    ++seen;
  }
  CHECK(seen > 0);
}

TEST_CASE("is_with_length") {
  CHECK(is_with_length(fixtures::a2_quiver()).with_length);
  TranslationQuiver single;
  single.add_vertex("v", true, true);
  CHECK(is_with_length(single).with_length);

  TranslationQuiver cyc;
  for (const char* v : {"a", "b", "c"}) cyc.add_vertex(v, true, true);
  cyc.add_arrow("a", "b");
  cyc.add_arrow("b", "c");
  cyc.add_arrow("c", "a");
  cyc.add_vertex("d", true, true);
  cyc.add_arrow("a", "d");
  cyc.add_arrow("c", "d");
  const auto r = is_with_length(cyc);
  CHECK_FALSE(r.with_length);
  REQUIRE_FALSE(r.path_a.empty());
  CHECK(r.path_a.front() == r.path_b.front());
  CHECK(r.path_a.back() == r.path_b.back());
  CHECK(r.path_a.size() != r.path_b.size());
}

TEST_CASE("ZA3 truncation is with length") {
  const auto t = read_tq(fixtures::data("tube3x3.tq"));
  const auto tc = universal_cover(t.quiver, "t0_1", 4);
  CHECK(is_with_length(full_subquiver(tc.cover, tc.interior)).with_length);
}

TEST_CASE("length_function") {
  const auto q = fixtures::a2_quiver();
  const auto l = length_function(q, "S2");
  CHECK(l.at("S2") == 0);
  CHECK(l.at("P1") == 1);
  CHECK(l.at("S1") == 2);
  const auto l2 = length_function(q, "S1");
  CHECK(l2.at("S1") == 0);
  for (const auto& [v, n] : l) CHECK(l2.at(v) == n - l.at("S1"));
}

TEST_CASE("length_function rejects quivers without length") {
  const auto t = read_tq(fixtures::data("tube2x2.tq"));
  CHECK_THROWS_AS(length_function(t.quiver, "t0_1"), NotWithLength);
}

TEST_CASE("check_covering on the identity") {
  const auto q = fixtures::a2_quiver();
  std::map<std::string, std::string> id;
  for (int v = 0; v < q.size(); ++v) id[q.name(v)] = q.name(v);
  CHECK(check_covering(make_morphism(q, q, id)).ok());
}

TEST_CASE("check_covering catches collapsed arrows") {
  TranslationQuiver src;
  for (const char* v : {"x", "y1", "y2"}) src.add_vertex(v, true, true);
  src.add_arrow("x", "y1");
  src.add_arrow("x", "y2");
  TranslationQuiver tgt;
  for (const char* v : {"x", "y"}) tgt.add_vertex(v, true, true);
  tgt.add_arrow("x", "y");
  const auto r = check_covering(make_morphism(src, tgt, {{"x", "x"}, {"y1", "y"}, {"y2", "y"}}));
  CHECK_FALSE(r.ok());
}

TEST_CASE("universal cover of a tree is the tree") {
  const auto q = fixtures::a2_quiver();
  const auto tc = universal_cover(q, "S2", 3);
  CHECK(tc.cover.size() == q.size());
  CHECK(check_covering(tc.pi, &tc.interior).ok());
  CHECK(tc.length_of("S1") == 2);
}

TEST_CASE("universal cover of a cycle is a line") {
  TranslationQuiver q;
  for (const char* v : {"a", "b", "c"}) q.add_vertex(v, true, true);
  q.add_arrow("a", "b");
  q.add_arrow("b", "c");
  q.add_arrow("c", "a");
  for (int r : {2, 4, 5}) {
    const auto tc = universal_cover(q, "a", r);
    CHECK(tc.cover.size() == 2 * r + 1);
    CHECK(is_with_length(tc.cover).with_length);
  }
}

TEST_CASE("universal cover of a rank 2 tube") {
  const auto t = read_tq(fixtures::data("tube2x2.tq"));
  const auto tc = universal_cover(t.quiver, "t0_1", 6);
  CHECK(is_with_length(full_subquiver(tc.cover, tc.interior)).with_length);
  CHECK(check_covering(tc.pi, &tc.interior).ok());
  for (const auto& [s, d] : tc.cover.arrows()) CHECK(tc.length[d] == tc.length[s] + 1);
  CHECK_THROWS(universal_cover(t.quiver, "t0_1", -1));
}

TEST_CASE("lift_path") {
  const auto q = fixtures::a2_quiver();
  const auto tc = identity_cover(q, "S2");
  CHECK(lift_path(tc, {"S2"}, "S2") == std::vector<std::string>{"S2"});
  CHECK(lift_path(tc, {"S2", "P1", "S1"}, "S2") == std::vector<std::string>{"S2", "P1", "S1"});

  const auto t = read_tq(fixtures::data("tube3x2.tq"));
  const auto cover = universal_cover(t.quiver, "t0_1", 5);
  const auto lift = lift_path(cover, {"t0_1", "t0_2", "t1_1"}, "t0_1");
  REQUIRE(lift.size() == 3);
  for (std::size_t i = 0; i < lift.size(); ++i)
    CHECK(cover.base().name(cover.pi_of(cover.cover.index(lift[i]))) == std::vector<std::string>{"t0_1", "t0_2", "t1_1"}[i]);
}

TEST_CASE("lift_path refuses to leave the truncation") {
  const auto t = read_tq(fixtures::data("tube3x2.tq"));
  const auto cover = universal_cover(t.quiver, "t0_1", 2);
  std::vector<std::string> path{"t0_1"};
  for (int i = 0; i < 6; ++i) path.push_back(t.quiver.name(t.quiver.successors(t.quiver.index(path.back())).front()));
  CHECK_THROWS_AS(lift_path(cover, path, "t0_1"), LiftEscapesTruncation);
}

TEST_CASE("cover path lengths agree with brute force") {
  const auto t = read_tq(fixtures::data("tube3x3.tq"));
  const auto tc = universal_cover(t.quiver, "t0_1", 4);
  for (const auto& [pair, lens] : oracle::path_lengths(tc.cover, 12)) {
    CHECK(lens.first == lens.second);
    CHECK(tc.length[pair.second] - tc.length[pair.first] == lens.first);
  }
}
