#include "doctest.h"
#include "fixtures.hpp"
#include "meshkit/errors.hpp"
#include "meshkit/mesh_category.hpp"
#include "meshkit/modulation.hpp"

using namespace meshkit;

namespace {

MeshCategory a2_category() {
  const auto q = fixtures::a2_quiver();
  const auto tc = identity_cover(q, "S2");
  return MeshCategory(attach_split_modulation(q, GroundField::rationals(), {}), tc.length);
}

struct Cover {
  Cover(const std::string& file, const std::string& base, int radius)
      : t(read_tq(fixtures::data(file))),
        tc(universal_cover(t.quiver, base, radius)),
        cat(modulated_cover(tc, attach_split_modulation(t.quiver, GroundField::rationals(), t.dims).mod), tc.length) {}
  TqFile t;
  TruncatedCover tc;
  MeshCategory cat;
};

// Cover vertex over `base_name` at length `len`.
int over(const TruncatedCover& tc, const std::string& base_name, int len) {
  for (int v : tc.fiber(tc.base().index(base_name)))
    if (tc.length[v] == len) return v;
  return -1;
}

}  // namespace

TEST_CASE("A2 hom spaces") {
  const auto cat = a2_category();
  const auto h = cat.hom_basis("S2", "S1");
  CHECK(h->ambient_dim == 1);
  CHECK(h->relations.rank() == 1);
  CHECK(h->dim() == 0);
  for (const char* v : {"S2", "P1", "S1"}) CHECK(cat.hom_basis(v, v)->dim() == 1);
  CHECK(cat.hom_basis("S2", "P1")->dim() == 1);
  CHECK(cat.hom_basis("S1", "S2")->dim() == 0);
}

TEST_CASE("hom across a two-middle mesh") {
  const Cover c("tube3x3.tq", "t0_2", 4);
  const int x = c.tc.cover.index("t0_2");
  const int y = over(c.tc, "t1_2", 2);
  REQUIRE(y >= 0);
  const auto h = c.cat.hom_basis(x, y);
  CHECK(h->paths.size() == 2);
  CHECK(h->ambient_dim == 2);
  CHECK(h->relations.rank() == 1);
  CHECK(h->dim() == 1);
}

TEST_CASE("composition") {
  const auto cat = a2_category();
  const int s2 = cat.quiver().index("S2"), p1 = cat.quiver().index("P1"), s1 = cat.quiver().index("S1");
  const auto a = cat.arrow_class(s2, p1, 0);
  const auto b = cat.arrow_class(p1, s1, 0);
  CHECK(cat.compose(cat.identity(s2), a).coords == a.coords);
  CHECK(cat.compose(a, cat.identity(p1)).coords == a.coords);
  CHECK(cat.compose(a, b).is_zero());
  CHECK_THROWS(cat.compose(b, a));
}

TEST_CASE("composition is associative and bilinear on a ZA3 cover") {
  const Cover c("tube3x3.tq", "t0_1", 4);
  const auto& q = c.tc.cover;
  std::vector<int> in;
  for (int v = 0; v < q.size(); ++v)
    if (c.tc.interior[v]) in.push_back(v);
  int triples = 0;
  for (int x : in)
    for (int y : in)
      for (int z : in)
        for (int w : in) {
          const auto hxy = c.cat.hom_basis(x, y), hyz = c.cat.hom_basis(y, z), hzw = c.cat.hom_basis(z, w);
          if (!hxy->dim() || !hyz->dim() || !hzw->dim()) continue;
          const auto u = c.cat.from_coords(x, y, hxy->reduce(hxy->representative(Vec(hxy->dim(), Scalar(1)))));
          const auto v = c.cat.from_coords(y, z, Vec(hyz->dim(), Scalar(2)));
          const auto t = c.cat.from_coords(z, w, Vec(hzw->dim(), Scalar(-1)));
          CHECK(c.cat.compose(c.cat.compose(u, v), t).coords == c.cat.compose(u, c.cat.compose(v, t)).coords);
          Vec twice = u.coords;
          for (auto& s : twice) s = s * Scalar(2);
          const auto lhs = c.cat.compose(c.cat.from_coords(x, y, twice), v).coords;
          Vec rhs = c.cat.compose(u, v).coords;
          for (auto& s : rhs) s = s * Scalar(2);
          CHECK(lhs == rhs);
          ++triples;
        }
  CHECK(triples > 0);
}

TEST_CASE("radical powers follow path length") {
  const Cover c("tube3x3.tq", "t0_1", 5);
  const auto& q = c.tc.cover;
  for (int x = 0; x < q.size(); ++x) {
    if (!c.tc.interior[x]) continue;
    CHECK(c.cat.radical_power(x, x, 1).is_zero());
    CHECK(c.cat.radical_power_direct(x, x, 1).is_zero());
    for (int y = 0; y < q.size(); ++y) {
      if (!c.tc.interior[y]) continue;
      const auto h = c.cat.hom_basis(x, y);
      if (h->length < 0) continue;
      const int l = h->length;
      CHECK(c.cat.radical_power(x, y, l).dim() == h->dim());
      CHECK(c.cat.radical_power(x, y, l + 1).is_zero());
      for (int n = 0; n <= l + 1; ++n) CHECK(c.cat.radical_power_direct(x, y, n) == c.cat.radical_power(x, y, n));
    }
  }
}

TEST_CASE("a path of length three") {
  const auto comp = fixtures::component("a4.alg");
  const auto tc = identity_cover(comp->quiver, comp->quiver.name(0));
  const MeshCategory cat(comp->modulated(), tc.length);
  const int x = cat.quiver().index("P4"), y = cat.quiver().index("P1");
  const auto h = cat.hom_basis(x, y);
  CHECK(h->length == 3);
  CHECK(h->dim() == 1);
  CHECK(cat.radical_power(x, y, 3).dim() == 1);
  CHECK(cat.radical_power_direct(x, y, 3).dim() == 1);
  CHECK(cat.radical_power(x, y, 4).is_zero());
  CHECK(cat.radical_power_direct(x, y, 4).is_zero());
}

TEST_CASE("graded pieces") {
  const Cover c("tube3x3.tq", "t0_1", 5);
  const auto& q = c.tc.cover;
  for (int x = 0; x < q.size(); ++x) {
    if (!c.tc.interior[x]) continue;
    CHECK(c.cat.graded_piece(x, x, 0).dim == 1);
    CHECK(c.cat.graded_piece(x, x, 1).dim == 0);
    for (int y = 0; y < q.size(); ++y) {
      if (!c.tc.interior[y]) continue;
      const auto h = c.cat.hom_basis(x, y);
      if (h->length < 0) continue;
      for (int n = 0; n <= h->length + 1; ++n) {
        const auto g = c.cat.graded_piece(x, y, n);
        CHECK(g.dim == (n == h->length ? h->dim() : 0));
        CHECK(g.basis.size() == g.dim);
      }
    }
  }
}

TEST_CASE("arrow classes") {
  TranslationQuiver q;
  q.add_vertex("a", true, false);
  q.add_vertex("b", true, true);
  q.add_vertex("c", true, true);
  q.add_vertex("d", false, true);
  q.add_arrow("a", "b");
  q.add_arrow("a", "c");
  q.add_arrow("b", "d");
  q.add_arrow("c", "d");
  q.set_tau("d", "a");
  const auto mq = attach_split_modulation(q, GroundField::rationals(), {{{"a", "c"}, 2}, {{"c", "d"}, 2}});
  const MeshCategory cat(mq, {0, 1, 1, 2});
  const int a = q.index("a"), b = q.index("b"), c = q.index("c"), d = q.index("d");
  CHECK_FALSE(cat.arrow_class(a, b, 0).is_zero());
  const auto c0 = cat.arrow_class(a, c, 0), c1 = cat.arrow_class(a, c, 1);
  CHECK(rank(Matrix::from_rows(GroundField::rationals(), c0.coords.size(), {c0.coords, c1.coords})) == 2);
  CHECK(cat.hom_basis(a, c)->dim() == 2);
  CHECK(cat.radical_power(a, c, 2).is_zero());
  CHECK_THROWS(cat.arrow_class(a, c, 2));
  CHECK(cat.hom_basis(a, d)->ambient_dim == 5);
  CHECK(cat.hom_basis(a, d)->dim() == 4);
  (void)d;
}

TEST_CASE("path cap and length checks") {
  const auto q = fixtures::a2_quiver();
  const auto mq = attach_split_modulation(q, GroundField::rationals(), {});
  CHECK_THROWS_AS(MeshCategory(mq, {0, 1, 1}), NotWithLength);
  const MeshCategory capped(mq, {0, 1, 2}, 0);
  CHECK_THROWS_AS(capped.hom_basis("S2", "S1"), PathExplosion);
}

TEST_CASE("mesh ideal is independent of basis choices") {
  const auto q = fixtures::a2_quiver();
  const auto mq = attach_split_modulation(q, GroundField::prime(101), {});
  const GroundField F = GroundField::prime(101);
  const MeshCategory plain(mq, {0, 1, 2});
  const MeshCategory other(mq, {0, 1, 2}, MeshCategory::kDefaultPathCap,
                           {{"S1", {{"P1", Matrix::from_entries(F, 1, 1, {F.from(42)})}}}});
  CHECK(plain.hom_basis("S2", "S1")->relations.rref == other.hom_basis("S2", "S1")->relations.rref);
}
