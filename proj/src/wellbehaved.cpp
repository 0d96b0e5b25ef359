#include "meshkit/wellbehaved.hpp"

#include <algorithm>
#include <deque>
#include <exception>
#include <random>
#include <set>

#include "meshkit/errors.hpp"

namespace meshkit {

namespace {

Vec flat(const ModuleMorphism& h) {
  Vec v;
  for (const auto& c : h.comps) v.insert(v.end(), c.entries().begin(), c.entries().end());
  return v;
}

// X -> E_1 + ... + E_m from its components.
ModuleMorphism stack_rows(const RepPtr& x, const RepPtr& e, const std::vector<const ModuleMorphism*>& parts) {
  ModuleMorphism h = zero_morphism(x, e);
  for (std::size_t w = 0; w < h.comps.size(); ++w) {
    std::size_t r = 0;
    for (const auto* p : parts) {
      h.comps[w].set_block(r, 0, p->comps[w]);
      r += p->comps[w].rows();
    }
  }
  return h;
}

ModuleMorphism stack_cols(const RepPtr& e, const RepPtr& x, const std::vector<const ModuleMorphism*>& parts) {
  ModuleMorphism h = zero_morphism(e, x);
  for (std::size_t w = 0; w < h.comps.size(); ++w) {
    std::size_t c = 0;
    for (const auto* p : parts) {
      h.comps[w].set_block(0, c, p->comps[w]);
      c += p->comps[w].cols();
    }
  }
  return h;
}

std::vector<ModuleMorphism> split_rows(const ModuleMorphism& h, const std::vector<RepPtr>& summands) {
  std::vector<ModuleMorphism> out;
  std::vector<std::size_t> off(h.comps.size(), 0);
  for (const auto& s : summands) {
    ModuleMorphism p{h.source, s, {}};
    for (std::size_t w = 0; w < h.comps.size(); ++w) {
      p.comps.push_back(h.comps[w].block(off[w], 0, s->dims[w], h.comps[w].cols()));
      off[w] += s->dims[w];
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<ModuleMorphism> split_cols(const ModuleMorphism& h, const std::vector<RepPtr>& summands) {
  std::vector<ModuleMorphism> out;
  std::vector<std::size_t> off(h.comps.size(), 0);
  for (const auto& s : summands) {
    ModuleMorphism p{s, h.target, {}};
    for (std::size_t w = 0; w < h.comps.size(); ++w) {
      p.comps.push_back(h.comps[w].block(0, off[w], h.comps[w].rows(), s->dims[w]));
      off[w] += s->dims[w];
    }
    out.push_back(std::move(p));
  }
  return out;
}

// Coefficients c with sum_k c_k cols[k] = rhs.
std::optional<Vec> solve_columns(const GroundField& f, const std::vector<Vec>& cols, const Vec& rhs) {
  Matrix m(f, rhs.size(), cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k)
    for (std::size_t i = 0; i < rhs.size(); ++i) m(i, k) = cols[k][i];
  return solve(m, rhs);
}

void check_cover_matches(const TruncatedCover& tc, const ARComponent& comp) {
  const auto& b = tc.base();
  const auto& q = comp.quiver;
  if (b.size() != q.size()) throw CoverMismatch("cover base and component differ in size");
  for (int v = 0; v < b.size(); ++v) {
    auto w = q.find(b.name(v));
    if (!w) throw CoverMismatch("component has no vertex " + b.name(v));
    const int t = b.tau(v);
    if ((t == -1) != (q.tau(*w) == -1) || (t != -1 && q.name(q.tau(*w)) != b.name(t)))
      throw CoverMismatch("translation differs at " + b.name(v));
  }
  if (b.arrows().size() != q.arrows().size()) throw CoverMismatch("cover base and component differ in arrows");
  for (auto [s, t] : b.arrows())
    if (!q.has_arrow(q.index(b.name(s)), q.index(b.name(t))))
      throw CoverMismatch("component lacks arrow " + b.name(s) + " -> " + b.name(t));
}

class Assembler {
 public:
  Assembler(WellBehavedFunctor& F) : F_(F), q_(F.quiver()), alg_(F.comp->alg) {}

  void run(int l0, int seed_x, const Seed& seed) {
    const auto& len = F_.cover->length;
    const int lmin = *std::min_element(len.begin(), len.end());
    const int lmax = *std::max_element(len.begin(), len.end());
    for (auto [s, t] : q_.arrows()) {
      if (len[s] != l0) continue;
      auto it = s == seed_x ? seed.find(q_.name(t)) : seed.end();
      F_.on_arrows[{s, t}] = it != seed.end() ? it->second : knitted(s, t);
    }
    for (int k = l0 + 1; k < lmax; ++k)
      for (int z : layer(k + 1)) {
        if (F_.mesh_present(z)) {
          forward(z);
        } else {
          for (int y : q_.predecessors(z)) F_.on_arrows[{y, z}] = knitted(y, z);
        }
      }
    for (int k = l0 - 1; k >= lmin; --k)
      for (int w : layer(k)) {
        const int z = q_.tau_inverse(w);
        if (z != -1 && F_.mesh_present(z)) {
          backward(z);
        } else {
          for (int y : q_.successors(w)) F_.on_arrows[{w, y}] = knitted(w, y);
        }
      }
  }

 private:
  std::vector<int> layer(int k) const {
    std::vector<int> out;
    for (int v = 0; v < q_.size(); ++v)
      if (F_.cover->length[v] == k) out.push_back(v);
    std::sort(out.begin(), out.end(), [&](int a, int b) { return q_.name(a) < q_.name(b); });
    return out;
  }

  std::vector<ModuleMorphism> knitted(int s, int t) const {
    return F_.comp->irr_reps.at({F_.module_name(s), F_.module_name(t)});
  }

  // Mesh at z: flat list of (cover middle, copy) pairs in the stored order.
  struct Slots {
    const AlmostSplitSequence* seq;
    std::vector<int> middle;  // cover vertex per slot
    std::vector<std::size_t> copy;
    std::vector<RepPtr> summands;
    std::vector<const ModuleMorphism*> f0, g0;
    RepPtr e;
  };

  Slots slots(int z) const {
    Slots s;
    s.seq = &F_.comp->ass.at(F_.module_name(z));
    for (std::size_t m = 0; m < s.seq->middles.size(); ++m) {
      int cy = -1;
      for (int y : q_.predecessors(z))
        if (F_.module_name(y) == s.seq->middles[m]) cy = y;
      if (cy == -1) throw AssemblyFailure("cover mesh at " + q_.name(z) + " lacks a lift of " + s.seq->middles[m]);
      for (std::size_t j = 0; j < s.seq->f[m].size(); ++j) {
        s.middle.push_back(cy);
        s.copy.push_back(j);
        s.summands.push_back(F_.comp->module(s.seq->middles[m]));
        s.f0.push_back(&s.seq->f[m][j]);
        s.g0.push_back(&s.seq->g[m][j]);
      }
    }
    s.e = std::make_shared<Representation>(direct_sum(alg_, s.summands));
    return s;
  }

  // v = id + d, d in End(E) with `apply(b)` linear in b matching rhs.
  template <class Apply>
  ModuleMorphism comparison(const Slots& s, int z, const Apply& apply, const Vec& rhs) const {
    const HomSpace end = hom_space(alg_, s.e, s.e);
    std::vector<Vec> cols;
    for (const auto& b : end.basis) cols.push_back(flat(apply(b)));
    auto c = solve_columns(alg_.field, cols, rhs);
    if (!c) throw AssemblyFailure(q_.name(z) + ": assembled morphism is not minimal almost split");
    return identity_morphism(s.e) + end.from_coords(*c);
  }

  void forward(int z) {
    const Slots s = slots(z);
    const int t = q_.tau(z);
    const RepPtr& tx = F_.on_vertex(t);
    const RepPtr& xm = F_.on_vertex(z);
    std::vector<const ModuleMorphism*> fnew;
    for (std::size_t i = 0; i < s.middle.size(); ++i) fnew.push_back(&F_.on_arrows.at({t, s.middle[i]})[s.copy[i]]);
    const ModuleMorphism f0 = stack_rows(tx, s.e, s.f0);
    const ModuleMorphism f = stack_rows(tx, s.e, fnew);
    const ModuleMorphism v = comparison(s, z, [&](const ModuleMorphism& b) { return compose(b, f0); }, flat(f - f0));
    auto vi = inverse(v);
    if (!vi) throw AssemblyFailure(q_.name(z) + ": comparison map is not invertible");
    const ModuleMorphism g = compose(stack_cols(s.e, xm, s.g0), *vi);
    if (!compose(g, f).is_zero()) throw AssemblyFailure(q_.name(z) + ": g f is not zero");
    const auto parts = split_cols(g, s.summands);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      auto& slot = F_.on_arrows[{s.middle[i], z}];
      if (slot.size() <= s.copy[i]) slot.resize(s.copy[i] + 1);
      slot[s.copy[i]] = parts[i];
    }
  }

  void backward(int z) {
    const Slots s = slots(z);
    const int t = q_.tau(z);
    const RepPtr& tx = F_.on_vertex(t);
    const RepPtr& xm = F_.on_vertex(z);
    std::vector<const ModuleMorphism*> gnew;
    for (std::size_t i = 0; i < s.middle.size(); ++i) gnew.push_back(&F_.on_arrows.at({s.middle[i], z})[s.copy[i]]);
    const ModuleMorphism g0 = stack_cols(s.e, xm, s.g0);
    const ModuleMorphism g = stack_cols(s.e, xm, gnew);
    const ModuleMorphism v = comparison(s, z, [&](const ModuleMorphism& b) { return compose(g, b); }, flat(g0 - g));
    if (!inverse(v)) throw AssemblyFailure(q_.name(z) + ": comparison map is not invertible");
    const ModuleMorphism f = compose(v, stack_rows(tx, s.e, s.f0));
    if (!compose(g, f).is_zero()) throw AssemblyFailure(q_.name(z) + ": g f is not zero");
    const auto parts = split_rows(f, s.summands);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      auto& slot = F_.on_arrows[{t, s.middle[i]}];
      if (slot.size() <= s.copy[i]) slot.resize(s.copy[i] + 1);
      slot[s.copy[i]] = parts[i];
    }
  }

  WellBehavedFunctor& F_;
  const TranslationQuiver& q_;
  const HereditaryAlgebra& alg_;
};

WellBehavedFunctor assemble(std::shared_ptr<const TruncatedCover> tc, std::shared_ptr<const ARComponent> comp, int x,
                            const Seed& seed, std::size_t path_cap) {
  check_cover_matches(*tc, *comp);
  WellBehavedFunctor F;
  F.cover = tc;
  F.comp = comp;
  F.tower = std::make_shared<RadicalTower>(comp);
  F.mesh = std::make_shared<MeshCategory>(modulated_cover(*tc, comp->modulated().mod), tc->length, path_cap);
  Assembler(F).run(tc->length[x], x, seed);
  return F;
}

}  // namespace

bool WellBehavedFunctor::mesh_present(int z) const {
  const auto& q = quiver();
  const int t = q.tau(z);
  if (t == -1) return false;
  std::set<int> in(q.predecessors(z).begin(), q.predecessors(z).end());
  std::set<int> out(q.successors(t).begin(), q.successors(t).end());
  const int bz = cover->pi_of(z);
  return in == out && in.size() == cover->base().predecessors(bz).size();
}

ModuleMorphism WellBehavedFunctor::apply(const MeshClass& c) const {
  const int x = c.hom->source, y = c.hom->target;
  ModuleMorphism out = zero_morphism(on_vertex(x), on_vertex(y));
  for (const auto& t : c.hom->terms(c.hom->representative(c.coords))) {
    ModuleMorphism m = identity_morphism(on_vertex(x));
    for (std::size_t k = 0; k + 1 < t.path.size(); ++k)
      m = compose(on_arrows.at({t.path[k], t.path[k + 1]}).at(t.tuple[k]), m);
    out = out + t.coeff * m;
  }
  return out;
}

ModuleMorphism WellBehavedFunctor::mesh_image(int z) const {
  const auto& q = quiver();
  const int t = q.tau(z);
  const MeshElement g = mesh_element(mesh->modulated(), q.name(z));
  ModuleMorphism out = zero_morphism(on_vertex(t), on_vertex(z));
  for (const auto& term : g.terms()) {
    const int y = q.index(term.middle);
    out = out + term.coeff * compose(on_arrows.at({y, z}).at(term.j), on_arrows.at({t, y}).at(term.i));
  }
  return out;
}

WellBehavedFunctor build_well_behaved(std::shared_ptr<const TruncatedCover> tc, std::shared_ptr<const ARComponent> comp,
                                      std::size_t path_cap) {
  return assemble(tc, comp, tc->cover.index(tc->base_vertex), {}, path_cap);
}

WellBehavedFunctor seeded_build(std::shared_ptr<const TruncatedCover> tc, std::shared_ptr<const ARComponent> comp,
                                const std::string& x, const Seed& seed, std::size_t path_cap) {
  const auto& q = tc->cover;
  const int xi = q.index(x);
  const std::string bx = tc->base().name(tc->pi_of(xi));
  RadicalTower tower(comp);
  for (const auto& [t, ms] : seed) {
    const auto ti = q.find(t);
    if (!ti || !q.has_arrow(xi, *ti)) throw InvalidInput("seed target " + t + " is not a successor of " + x);
    const std::string bt = tc->base().name(tc->pi_of(*ti));
    if (ms.size() != comp->irr_reps.at({bx, bt}).size())
      throw SeedNotStronglyIrreducible("seed for " + x + " -> " + t + " does not match the arrow dimension");
    bool ok = false;
    try {
      ok = strongly_irreducible_check(tower, bx, {{bt, ms}});
    } catch (const NotIrreducible& e) {
      throw SeedNotStronglyIrreducible(e.what());
    }
    if (!ok) throw SeedNotStronglyIrreducible("classes of the seed on " + x + " -> " + t + " are dependent");
  }
  return assemble(tc, comp, xi, seed, path_cap);
}

// --------------------------------------------------------------- verification

namespace {

std::vector<std::pair<int, int>> cone(const WellBehavedFunctor& F, int start, bool forward, int depth) {
  const auto& q = F.quiver();
  const auto& tc = *F.cover;
  std::vector<std::pair<int, int>> out{{start, 0}};
  std::set<int> seen{start};
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto [v, d] = out[i];
    if (!tc.interior[v])
      throw UndecidableTruncation(q.name(v) + " lies outside the interior", tc.distance[start] + (depth < 0 ? tc.radius : depth) + 2);
    if (depth >= 0 && d == depth) continue;
    for (int w : forward ? q.successors(v) : q.predecessors(v))
      if (seen.insert(w).second) out.push_back({w, d + 1});
  }
  return out;
}

std::size_t image_rank(const GroundField& f, std::size_t ambient, const Subspace& floor, const std::vector<Vec>& images) {
  std::vector<Vec> all;
  for (std::size_t r = 0; r < floor.dim(); ++r) all.push_back(floor.basis().row(r));
  all.insert(all.end(), images.begin(), images.end());
  return Subspace::span(f, ambient, all).dim() - floor.dim();
}

MapReport graded_map(const WellBehavedFunctor& F, int x, int y, int n, bool covariant) {
  const auto& tc = *F.cover;
  const MeshCategory& mc = *F.mesh;
  const RadicalTower& tw = *F.tower;
  const std::string bx = F.module_name(x), by = F.module_name(y);
  const HomSpace& h = tw.hom(bx, by);
  const Subspace rn = tw.rad_power(bx, by, n), rn1 = tw.rad_power(bx, by, n + 1);
  MapReport r;
  r.target_dim = rn.dim() - rn1.dim();
  const int anchor = covariant ? x : y;
  const int match = tc.pi_of(covariant ? y : x);
  std::vector<Vec> images;
  for (const auto& [z, d] : cone(F, anchor, covariant, n)) {
    if (d != n || tc.pi_of(z) != match) continue;
    const GradedPiece g = covariant ? mc.graded_piece(x, z, n) : mc.graded_piece(z, y, n);
    r.source_dim += g.dim;
    for (const auto& c : g.basis) images.push_back(h.coords(F.apply(c)));
  }
  r.rank = image_rank(mc.field(), h.dim(), rn1, images);
  return r;
}

MapReport hom_map(const WellBehavedFunctor& F, int x, int y, bool covariant) {
  const auto& tc = *F.cover;
  const MeshCategory& mc = *F.mesh;
  const std::string bx = F.module_name(x), by = F.module_name(y);
  const HomSpace& h = F.tower->hom(bx, by);
  MapReport r;
  r.target_dim = h.dim();
  const int anchor = covariant ? x : y;
  const int match = tc.pi_of(covariant ? y : x);
  std::vector<Vec> images;
  for (const auto& [z, d] : cone(F, anchor, covariant, -1)) {
    if (tc.pi_of(z) != match) continue;
    const auto hs = covariant ? mc.hom_basis(x, z) : mc.hom_basis(z, y);
    r.source_dim += hs->dim();
    for (std::size_t k = 0; k < hs->dim(); ++k) {
      Vec e = zero_vec(mc.field(), hs->dim());
      e[k] = mc.field().one();
      images.push_back(h.coords(F.apply({hs, e})));
    }
  }
  r.rank = image_rank(mc.field(), h.dim(), Subspace(mc.field(), h.dim()), images);
  return r;
}

std::vector<TripleResult> tasks(const WellBehavedFunctor& F, int max_n) {
  std::vector<int> verts;
  for (int v : F.quiver().sorted_vertices())
    if (F.cover->interior[v]) verts.push_back(v);
  std::vector<TripleResult> out;
  for (int x : verts)
    for (int y : verts) {
      for (int n = 0; n <= max_n; ++n) out.push_back({x, y, n, false, 0, {}});
      out.push_back({x, y, -1, false, 0, {}});
    }
  return out;
}

void run_task(const WellBehavedFunctor& F, TripleResult& t) {
  try {
    t.report = t.n >= 0 ? verify_graded_covering(F, t.x, t.y, t.n) : verify_injectivity(F, t.x, t.y);
    t.decidable = true;
  } catch (const UndecidableTruncation& e) {
    t.decidable = false;
    t.required_radius = e.required_radius();
  }
}

}  // namespace

CoveringReport2 verify_graded_covering(const WellBehavedFunctor& F, int x, int y, int n) {
  if (n < 0) throw InvalidInput("negative radical power");
  return {graded_map(F, x, y, n, true), graded_map(F, x, y, n, false)};
}

CoveringReport2 verify_injectivity(const WellBehavedFunctor& F, int x, int y) {
  return {hom_map(F, x, y, true), hom_map(F, x, y, false)};
}

std::vector<TripleResult> verify_all(const WellBehavedFunctor& F, int max_n) {
  auto out = tasks(F, max_n);
  std::exception_ptr err;
  const long total = static_cast<long>(out.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < total; ++i) {
    try {
      run_task(F, out[i]);
    } catch (...) {
#pragma omp critical
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return out;
}

std::vector<TripleResult> verify_all_serial(const WellBehavedFunctor& F, int max_n) {
  auto out = tasks(F, max_n);
  for (auto& t : out) run_task(F, t);
  return out;
}

bool check_generalized_standard(const RadicalTower& tower) { return tower.nilpotent(); }

// ------------------------------------------------------------ composite degree

std::string to_string(DegreeKind k) {
  switch (k) {
    case DegreeKind::NotInRadNPlus1: return "NotInRadNPlus1";
    case DegreeKind::InRadNPlus1Nonzero: return "InRadNPlus1Nonzero";
    case DegreeKind::Zero: return "Zero";
  }
  return "?";
}

bool is_sectional(const ARComponent& comp, const std::vector<std::string>& path) {
  const auto& q = comp.quiver;
  for (std::size_t i = 0; i + 2 < path.size(); ++i) {
    const int t = q.tau(q.index(comp.resolve(path[i + 2])));
    if (t != -1 && q.name(t) == comp.resolve(path[i])) return false;
  }
  return true;
}

namespace {

ModuleMorphism chain(const std::vector<ModuleMorphism>& ms) {
  ModuleMorphism p = ms.front();
  for (std::size_t i = 1; i < ms.size(); ++i) p = compose(ms[i], p);
  return p;
}

}  // namespace

std::optional<Witness> find_witness(const std::vector<ModuleMorphism>& f, const std::vector<ModuleMorphism>& h) {
  const std::size_t n = f.size();
  if (n == 0 || h.size() != n) throw InvalidInput("witness search needs matching nonempty lists");
  if (!chain(f).is_zero()) throw InvalidInput("f_1 ... f_n is not zero");
  std::vector<ModuleMorphism> d;
  for (std::size_t i = 0; i < n; ++i) d.push_back(h[i] - f[i]);
  for (std::size_t t = 1; t <= n; ++t) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + t, true);
    do {
      std::vector<ModuleMorphism> eps;
      Witness w;
      for (std::size_t i = 0; i < n; ++i) {
        eps.push_back(pick[i] ? d[i] : f[i]);
        if (pick[i]) w.indices.push_back(i);
      }
      if (!chain(eps).is_zero()) {
        w.f = f;
        w.eps = std::move(eps);
        return w;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return std::nullopt;
}

DegreeVerdict composite_degree(const WellBehavedFunctor& F, const std::vector<std::string>& path_in,
                               const std::vector<ModuleMorphism>& h, bool oracle) {
  const ARComponent& comp = *F.comp;
  const RadicalTower& tw = *F.tower;
  const MeshCategory& mc = *F.mesh;
  const auto& tc = *F.cover;
  if (path_in.size() < 2 || h.size() + 1 != path_in.size()) throw InvalidInput("path needs n+1 modules and n morphisms");
  std::vector<std::string> path;
  for (const auto& p : path_in) path.push_back(comp.resolve(p));
  const std::size_t n = h.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& q = comp.quiver;
    if (!q.has_arrow(q.index(path[i]), q.index(path[i + 1])))
      throw InvalidInput("no arrow " + path[i] + " -> " + path[i + 1]);
    const Vec v = tw.hom(path[i], path[i + 1]).coords(h[i]);
    if (!tw.rad(path[i], path[i + 1]).contains(v) || tw.rad_power(path[i], path[i + 1], 2).contains(v))
      throw NotIrreducible("h_" + std::to_string(i + 1) + ": " + path[i] + " -> " + path[i + 1]);
  }
  DegreeVerdict out;
  out.sectional = is_sectional(comp, path);
  const auto fiber = tc.fiber(tc.base().index(path[0]));
  if (fiber.empty()) throw LiftEscapesTruncation("no lift of " + path[0]);
  const int start = *std::min_element(fiber.begin(), fiber.end(), [&](int a, int b) {
    return std::make_pair(tc.distance[a], tc.cover.name(a)) < std::make_pair(tc.distance[b], tc.cover.name(b));
  });
  out.lift = lift_path(tc, path, tc.cover.name(start));
  std::vector<ModuleMorphism> fs;
  std::optional<MeshClass> prod;
  for (std::size_t i = 0; i < n; ++i) {
    const int a = tc.cover.index(out.lift[i]), b = tc.cover.index(out.lift[i + 1]);
    const auto& imgs = F.on_arrows.at({a, b});
    const HomSpace& hs = tw.hom(path[i], path[i + 1]);
    const Subspace r2 = tw.rad_power(path[i], path[i + 1], 2);
    std::vector<Vec> cols;
    for (const auto& m : imgs) cols.push_back(hs.coords(m));
    for (std::size_t r = 0; r < r2.dim(); ++r) cols.push_back(r2.basis().row(r));
    auto sol = solve_columns(mc.field(), cols, hs.coords(h[i]));
    if (!sol) throw AssemblyFailure("arrow images do not span irr(" + path[i] + ", " + path[i + 1] + ")");
    Vec c(sol->begin(), sol->begin() + static_cast<long>(imgs.size()));
    ModuleMorphism fi = zero_morphism(h[i].source, h[i].target);
    MeshClass cls = mc.zero(a, b);
    for (std::size_t j = 0; j < imgs.size(); ++j) {
      fi = fi + c[j] * imgs[j];
      const MeshClass aj = mc.arrow_class(a, b, static_cast<int>(j));
      for (std::size_t k = 0; k < cls.coords.size(); ++k) cls.coords[k] += c[j] * aj.coords[k];
    }
    out.arrow_coords.push_back(std::move(c));
    fs.push_back(std::move(fi));
    prod = prod ? mc.compose(*prod, cls) : cls;
  }
  out.product = prod;
  {
    const auto& ph = *prod->hom;
    for (const auto& t : ph.terms(ph.representative(prod->coords))) {
      std::string s = t.coeff.str() + "*";
      for (std::size_t k = 0; k < t.path.size(); ++k) s += (k ? ">" : "") + tc.cover.name(t.path[k]);
      s += "[";
      for (std::size_t k = 0; k < t.tuple.size(); ++k) s += (k ? "," : "") + std::to_string(t.tuple[k]);
      out.product_terms.push_back(s + "]");
    }
  }
  out.composite = chain(h);
  if (!prod->is_zero()) {
    out.kind = DegreeKind::NotInRadNPlus1;
  } else if (!out.composite.is_zero()) {
    out.kind = DegreeKind::InRadNPlus1Nonzero;
    out.witness = find_witness(fs, h);
    if (!out.witness) throw AssemblyFailure("no witness although the composite is nonzero");
  } else {
    out.kind = DegreeKind::Zero;
  }
  if (oracle) {
    const bool in = tw.in_rad_power(out.composite, path.front(), path.back(), static_cast<int>(n) + 1);
    const bool zero = out.composite.is_zero();
    const DegreeKind expected =
        !in ? DegreeKind::NotInRadNPlus1 : (zero ? DegreeKind::Zero : DegreeKind::InRadNPlus1Nonzero);
    out.oracle_agrees = expected == out.kind;
  }
  return out;
}

Witness decompose_witness(const WellBehavedFunctor& F, const std::vector<std::string>& path,
                          const std::vector<ModuleMorphism>& h) {
  const DegreeVerdict v = composite_degree(F, path, h, false);
  if (v.kind != DegreeKind::InRadNPlus1Nonzero) throw InvalidInput("no witness for verdict " + to_string(v.kind));
  return *v.witness;
}

ModuleMorphism perturb(const RadicalTower& tower, const std::string& x, const std::string& y, const ModuleMorphism& h,
                       std::uint32_t seed) {
  const Subspace r2 = tower.rad_power(x, y, 2);
  if (r2.is_zero()) return h;
  std::mt19937 gen(seed);
  const Scalar c = tower.component().alg.field.from(static_cast<long>(1 + gen() % 9));
  return h + c * tower.hom(x, y).from_coords(r2.basis().row(0));
}

}  // namespace meshkit
