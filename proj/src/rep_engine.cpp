#include "meshkit/rep_engine.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

#include "meshkit/errors.hpp"

namespace meshkit {

// ---------------------------------------------------------------- algebra

int HereditaryAlgebra::index(const std::string& v) const {
  for (int i = 0; i < size(); ++i)
    if (vertices[i] == v) return i;
  throw InvalidInput("unknown vertex " + v);
}

std::vector<int> HereditaryAlgebra::topological_order() const {
  std::vector<int> indeg(size(), 0);
  for (const auto& a : arrows) ++indeg[a.tgt];
  std::set<std::pair<std::string, int>> ready;
  for (int v = 0; v < size(); ++v)
    if (indeg[v] == 0) ready.insert({vertices[v], v});
  std::vector<int> order;
  while (!ready.empty()) {
    const int v = ready.begin()->second;
    ready.erase(ready.begin());
    order.push_back(v);
    for (const auto& a : arrows)
      if (a.src == v && --indeg[a.tgt] == 0) ready.insert({vertices[a.tgt], a.tgt});
  }
  return order;
}

HereditaryAlgebra make_algebra(const GroundField& field, const std::vector<std::string>& vertices,
                               const std::vector<AlgebraArrow>& arrows) {
  HereditaryAlgebra alg{field, vertices, arrows};
  if (vertices.empty()) throw InvalidInput("algebra without vertices");
  std::set<std::string> seen(vertices.begin(), vertices.end());
  if (seen.size() != vertices.size()) throw InvalidInput("duplicate vertex name");
  std::set<std::string> names;
  std::vector<int> comp(vertices.size());
  std::iota(comp.begin(), comp.end(), 0);
  std::function<int(int)> find = [&](int v) { return comp[v] == v ? v : comp[v] = find(comp[v]); };
  for (const auto& a : arrows) {
    if (a.src < 0 || a.tgt < 0 || a.src >= alg.size() || a.tgt >= alg.size())
      throw InvalidInput("arrow " + a.name + " has an unknown endpoint");
    if (!names.insert(a.name).second) throw InvalidInput("duplicate arrow name " + a.name);
    if (a.src == a.tgt) throw InvalidInput("loop " + a.name + " at " + vertices[a.src]);
    comp[find(a.src)] = find(a.tgt);
  }
  for (int v = 0; v < alg.size(); ++v)
    if (find(v) != find(0)) throw InvalidInput("quiver is not connected: " + vertices[v] + " is separate");
  if (static_cast<int>(alg.topological_order().size()) != alg.size()) throw NotDynkin("quiver has an oriented cycle");
  return alg;
}

// ---------------------------------------------------------- representations

int Representation::total_dim() const { return std::accumulate(dims.begin(), dims.end(), 0); }

std::string Representation::dimvector() const {
  const bool wide = std::any_of(dims.begin(), dims.end(), [](int d) { return d > 9; });
  std::string s;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (wide && i) s += '.';
    s += std::to_string(dims[i]);
  }
  return s;
}

bool operator==(const Representation& a, const Representation& b) { return a.dims == b.dims && a.mats == b.mats; }

void check_shapes(const HereditaryAlgebra& alg, const Representation& m) {
  if (static_cast<int>(m.dims.size()) != alg.size() || m.mats.size() != alg.arrows.size())
    throw DimMismatch("representation does not match the algebra");
  for (std::size_t i = 0; i < alg.arrows.size(); ++i) {
    const auto& a = alg.arrows[i];
    if (m.mats[i].rows() != static_cast<std::size_t>(m.dims[a.tgt]) ||
        m.mats[i].cols() != static_cast<std::size_t>(m.dims[a.src]))
      throw DimMismatch("matrix of arrow " + a.name + " has the wrong shape");
  }
}

bool ModuleMorphism::is_zero() const {
  return std::all_of(comps.begin(), comps.end(), [](const Matrix& m) { return m.is_zero(); });
}

ModuleMorphism identity_morphism(const RepPtr& m) {
  ModuleMorphism h{m, m, {}};
  for (int d : m->dims) h.comps.push_back(Matrix::identity(m->field, d));
  return h;
}

ModuleMorphism zero_morphism(const RepPtr& m, const RepPtr& n) {
  ModuleMorphism h{m, n, {}};
  for (std::size_t v = 0; v < m->dims.size(); ++v) h.comps.emplace_back(m->field, n->dims[v], m->dims[v]);
  return h;
}

ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f) {
  if (g.comps.size() != f.comps.size()) throw DimMismatch("compose: different algebras");
  ModuleMorphism h{f.source, g.target, {}};
  for (std::size_t v = 0; v < f.comps.size(); ++v) h.comps.push_back(g.comps[v] * f.comps[v]);
  return h;
}

ModuleMorphism operator+(const ModuleMorphism& a, const ModuleMorphism& b) {
  ModuleMorphism h = a;
  for (std::size_t v = 0; v < h.comps.size(); ++v) h.comps[v] += b.comps[v];
  return h;
}

ModuleMorphism operator-(const ModuleMorphism& a, const ModuleMorphism& b) {
  ModuleMorphism h = a;
  for (std::size_t v = 0; v < h.comps.size(); ++v) h.comps[v] -= b.comps[v];
  return h;
}

ModuleMorphism operator*(const Scalar& c, const ModuleMorphism& a) {
  ModuleMorphism h = a;
  for (auto& m : h.comps) m = c * m;
  return h;
}

bool is_intertwiner(const HereditaryAlgebra& alg, const ModuleMorphism& h) {
  for (std::size_t i = 0; i < alg.arrows.size(); ++i) {
    const auto& a = alg.arrows[i];
    if (!(h.comps[a.tgt] * h.source->mats[i] == h.target->mats[i] * h.comps[a.src])) return false;
  }
  return true;
}

std::optional<ModuleMorphism> inverse(const ModuleMorphism& h) {
  ModuleMorphism inv{h.target, h.source, {}};
  for (const auto& c : h.comps) {
    auto i = inverse(c);
    if (!i) return std::nullopt;
    inv.comps.push_back(std::move(*i));
  }
  return inv;
}

Vec HomSpace::flatten(const ModuleMorphism& h) const {
  Vec v;
  v.reserve(unknowns);
  for (const auto& c : h.comps) v.insert(v.end(), c.entries().begin(), c.entries().end());
  if (v.size() != unknowns) throw DimMismatch("morphism does not match the hom space");
  return v;
}

Vec HomSpace::coords(const ModuleMorphism& h) const {
  const Vec v = flatten(h);
  Vec c;
  c.reserve(key_columns.size());
  for (auto k : key_columns) c.push_back(v[k]);
  return c;
}

ModuleMorphism HomSpace::from_coords(const Vec& c) const {
  if (c.size() != dim()) throw DimMismatch("hom coordinates");
  ModuleMorphism h = zero_morphism(source, target);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) h = h + c[i] * basis[i];
  return h;
}

HomSpace hom_space(const HereditaryAlgebra& alg, const RepPtr& m, const RepPtr& n) {
  const GroundField f = alg.field;
  HomSpace hs;
  hs.source = m;
  hs.target = n;
  const int nv = alg.size();
  for (int v = 0; v < nv; ++v) {
    hs.offsets.push_back(hs.unknowns);
    hs.unknowns += static_cast<std::size_t>(n->dims[v]) * m->dims[v];
  }
  auto var = [&](int v, int i, int j) { return hs.offsets[v] + static_cast<std::size_t>(i) * m->dims[v] + j; };
  std::vector<Vec> rows;
  for (std::size_t ai = 0; ai < alg.arrows.size(); ++ai) {
    const int s = alg.arrows[ai].src, t = alg.arrows[ai].tgt;
    const Matrix& ma = m->mats[ai];
    const Matrix& na = n->mats[ai];
    for (int i = 0; i < n->dims[t]; ++i)
      for (int j = 0; j < m->dims[s]; ++j) {
        Vec row = zero_vec(f, hs.unknowns);
        for (int k = 0; k < m->dims[t]; ++k)
          if (!ma(k, j).is_zero()) row[var(t, i, k)] += ma(k, j);
        for (int k = 0; k < n->dims[s]; ++k)
          if (!na(i, k).is_zero()) row[var(s, k, j)] -= na(i, k);
        rows.push_back(std::move(row));
      }
  }
  const Kernel k = kernel(rows.empty() ? Matrix(f, 0, hs.unknowns) : Matrix::from_rows(f, hs.unknowns, rows));
  hs.key_columns = k.free_columns;
  for (std::size_t b = 0; b < k.basis.rows(); ++b) {
    ModuleMorphism h{m, n, {}};
    for (int v = 0; v < nv; ++v) {
      Matrix c(f, n->dims[v], m->dims[v]);
      for (int i = 0; i < n->dims[v]; ++i)
        for (int j = 0; j < m->dims[v]; ++j) c(i, j) = k.basis(b, var(v, i, j));
      h.comps.push_back(std::move(c));
    }
    hs.basis.push_back(std::move(h));
  }
  return hs;
}

std::vector<ModuleMorphism> hom(const HereditaryAlgebra& alg, const RepPtr& m, const RepPtr& n) {
  return hom_space(alg, m, n).basis;
}

Representation direct_sum(const HereditaryAlgebra& alg, const std::vector<RepPtr>& summands) {
  Representation r;
  r.field = alg.field;
  r.dims.assign(alg.size(), 0);
  for (const auto& s : summands)
    for (int v = 0; v < alg.size(); ++v) r.dims[v] += s->dims[v];
  for (std::size_t ai = 0; ai < alg.arrows.size(); ++ai) {
    const auto& a = alg.arrows[ai];
    Matrix m(alg.field, r.dims[a.tgt], r.dims[a.src]);
    std::size_t ro = 0, co = 0;
    for (const auto& s : summands) {
      m.set_block(ro, co, s->mats[ai]);
      ro += s->dims[a.tgt];
      co += s->dims[a.src];
    }
    r.mats.push_back(std::move(m));
  }
  return r;
}

namespace {

using Path = std::vector<int>;  // arrow indices

// All paths from v, grouped by end vertex and sorted by arrow names.
std::vector<std::vector<Path>> paths_from(const HereditaryAlgebra& alg, int v) {
  std::vector<std::vector<Path>> by_end(alg.size());
  std::function<void(int, Path&)> walk = [&](int at, Path& p) {
    by_end[at].push_back(p);
    for (std::size_t ai = 0; ai < alg.arrows.size(); ++ai) {
      if (alg.arrows[ai].src != at) continue;
      p.push_back(static_cast<int>(ai));
      walk(alg.arrows[ai].tgt, p);
      p.pop_back();
    }
  };
  Path p;
  walk(v, p);
  for (auto& ps : by_end)
    std::sort(ps.begin(), ps.end(), [&](const Path& a, const Path& b) {
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [&](int x, int y) {
        return alg.arrows[x].name < alg.arrows[y].name;
      });
    });
  return by_end;
}

std::size_t position(const std::vector<Path>& ps, const Path& p) {
  return static_cast<std::size_t>(std::find(ps.begin(), ps.end(), p) - ps.begin());
}

// Inclusion P_t -> P_v induced by the arrow b: v -> t.
ModuleMorphism inclusion(const HereditaryAlgebra& alg, const RepPtr& pt, const RepPtr& pv, int b) {
  const auto from_t = paths_from(alg, alg.arrows[b].tgt);
  const auto from_v = paths_from(alg, alg.arrows[b].src);
  ModuleMorphism h{pt, pv, {}};
  for (int w = 0; w < alg.size(); ++w) {
    Matrix c(alg.field, from_v[w].size(), from_t[w].size());
    for (std::size_t j = 0; j < from_t[w].size(); ++j) {
      Path q{b};
      q.insert(q.end(), from_t[w][j].begin(), from_t[w][j].end());
      c(position(from_v[w], q), j) = alg.field.one();
    }
    h.comps.push_back(std::move(c));
  }
  return h;
}

}  // namespace

Representation projective(const HereditaryAlgebra& alg, int v) {
  const auto by_end = paths_from(alg, v);
  Representation r;
  r.field = alg.field;
  for (int w = 0; w < alg.size(); ++w) r.dims.push_back(static_cast<int>(by_end[w].size()));
  for (std::size_t ai = 0; ai < alg.arrows.size(); ++ai) {
    const auto& a = alg.arrows[ai];
    Matrix m(alg.field, r.dims[a.tgt], r.dims[a.src]);
    for (std::size_t j = 0; j < by_end[a.src].size(); ++j) {
      Path p = by_end[a.src][j];
      p.push_back(static_cast<int>(ai));
      m(position(by_end[a.tgt], p), j) = alg.field.one();
    }
    r.mats.push_back(std::move(m));
  }
  return r;
}

Representation simple(const HereditaryAlgebra& alg, int v) {
  Representation r;
  r.field = alg.field;
  r.dims.assign(alg.size(), 0);
  r.dims[v] = 1;
  for (const auto& a : alg.arrows) r.mats.emplace_back(alg.field, r.dims[a.tgt], r.dims[a.src]);
  return r;
}

std::vector<int> injective_dims(const HereditaryAlgebra& alg, int v) {
  std::vector<int> d(alg.size(), 0);
  for (int w = 0; w < alg.size(); ++w) d[w] = static_cast<int>(paths_from(alg, w)[v].size());
  return d;
}

Subspace end_radical(const HereditaryAlgebra& alg, const RepPtr& m, const HomSpace& end) {
  const GroundField f = alg.field;
  if (!f.is_rational() && static_cast<int>(f.p) <= m->total_dim())
    throw InvalidInput("trace criterion for the radical needs p > dim M = " + std::to_string(m->total_dim()));
  const std::size_t d = end.dim();
  Matrix t(f, d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const ModuleMorphism p = compose(end.basis[i], end.basis[j]);
      Scalar tr = f.zero();
      for (const auto& c : p.comps)
        for (std::size_t k = 0; k < c.rows(); ++k) tr += c(k, k);
      t(i, j) = tr;
    }
  const Kernel k = kernel(t.transpose());
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < k.basis.rows(); ++r) rows.push_back(k.basis.row(r));
  return Subspace::span(f, d, rows);
}

bool is_indecomposable(const HereditaryAlgebra& alg, const RepPtr& m) {
  check_shapes(alg, *m);
  if (m->is_zero()) throw InvalidInput("the zero module is not considered");
  const HomSpace end = hom_space(alg, m, m);
  return end.dim() - end_radical(alg, m, end).dim() == 1;
}

std::string dynkin_type(const HereditaryAlgebra& alg) {
  const int n = alg.size();
  std::vector<std::set<int>> adj(n);
  for (const auto& a : alg.arrows) {
    if (!adj[a.src].insert(a.tgt).second) throw NotDynkin("multiple edges between " + alg.vertices[a.src] + " and " + alg.vertices[a.tgt]);
    adj[a.tgt].insert(a.src);
  }
  if (static_cast<int>(alg.arrows.size()) != n - 1) throw NotDynkin("underlying graph contains a cycle");
  std::vector<int> branch;
  for (int v = 0; v < n; ++v) {
    if (adj[v].size() > 3) throw NotDynkin("vertex " + alg.vertices[v] + " has degree " + std::to_string(adj[v].size()));
    if (adj[v].size() == 3) branch.push_back(v);
  }
  if (branch.empty()) return "A" + std::to_string(n);
  if (branch.size() > 1) throw NotDynkin("more than one branch vertex");
  std::vector<int> arms;
  for (int w : adj[branch[0]]) {
    int prev = branch[0], cur = w, len = 1;
    while (adj[cur].size() == 2) {
      const int next = *adj[cur].begin() == prev ? *adj[cur].rbegin() : *adj[cur].begin();
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(n);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) return "E" + std::to_string(n);
  throw NotDynkin("arms of lengths " + std::to_string(arms[0]) + ", " + std::to_string(arms[1]) + ", " +
                  std::to_string(arms[2]));
}

// ------------------------------------------------------------------ knitting

const RepPtr& ARComponent::module(const std::string& name) const { return module_of.at(resolve(name)); }

std::string ARComponent::resolve(const std::string& name) const {
  if (module_of.count(name)) return name;
  auto it = aliases.find(name);
  if (it != aliases.end()) return it->second;
  throw InvalidInput("unknown module " + name);
}

ModulatedQuiver ARComponent::modulated() const {
  std::map<ArrowKey, int> dims;
  for (const auto& [key, reps] : irr_reps) dims[key] = static_cast<int>(reps.size());
  return attach_split_modulation(quiver, alg.field, dims);
}

namespace {

constexpr std::size_t kMaxModules = 10000;

struct Knitter {
  const HereditaryAlgebra& alg;
  std::vector<RepPtr> reps;
  std::vector<std::string> names;
  std::vector<int> proj_of;
  std::vector<std::vector<int>> preds;
  std::vector<bool> processed, injective;
  std::vector<int> tau_inv;
  std::vector<ArrowKey> arrow_order;
  std::map<std::pair<int, int>, std::vector<ModuleMorphism>> irr;
  std::map<int, AlmostSplitSequence> ass;

  int add(RepPtr r, std::string name, int proj, std::vector<int> p) {
    for (std::size_t i = 0; i < reps.size(); ++i)
      if (reps[i]->dims == r->dims) throw KnittingFailure("dimension vector " + r->dimvector() + " produced twice");
    if (reps.size() >= kMaxModules) throw KnittingFailure("component exceeds " + std::to_string(kMaxModules) + " modules");
    reps.push_back(std::move(r));
    names.push_back(std::move(name));
    proj_of.push_back(proj);
    preds.push_back(std::move(p));
    processed.push_back(false);
    injective.push_back(false);
    tau_inv.push_back(-1);
    return static_cast<int>(reps.size()) - 1;
  }

  void add_arrow(int s, int t, std::vector<ModuleMorphism> ms) {
    arrow_order.push_back({names[s], names[t]});
    irr[{s, t}] = std::move(ms);
  }

  std::string name_for(const Representation& r) const {
    for (int v = 0; v < alg.size(); ++v) {
      std::vector<int> e(alg.size(), 0);
      e[v] = 1;
      if (r.dims == e) return "S" + alg.vertices[v];
    }
    for (int v = 0; v < alg.size(); ++v)
      if (r.dims == injective_dims(alg, v)) return "I" + alg.vertices[v];
    return "M" + r.dimvector();
  }

  void process(int x) {
    const GroundField f = alg.field;
    struct Target {
      int module;
      ModuleMorphism map;
    };
    std::vector<Target> targets;
    for (int z : preds[x]) {
      const int y = tau_inv[z];
      if (y == -1) continue;
      for (const auto& m : irr.at({x, y})) targets.push_back({y, m});
    }
    if (proj_of[x] != -1)
      for (std::size_t b = 0; b < alg.arrows.size(); ++b) {
        if (alg.arrows[b].tgt != proj_of[x]) continue;
        const int y = static_cast<int>(std::find(proj_of.begin(), proj_of.end(), alg.arrows[b].src) - proj_of.begin());
        targets.push_back({y, irr.at({x, y}).front()});
      }
    processed[x] = true;
    const Representation& xr = *reps[x];
    std::vector<RepPtr> summands;
    for (const auto& t : targets) summands.push_back(reps[t.module]);
    const Representation e = direct_sum(alg, summands);
    std::vector<Matrix> fw;
    bool mono = true;
    for (int w = 0; w < alg.size(); ++w) {
      Matrix m(f, e.dims[w], xr.dims[w]);
      std::size_t ro = 0;
      for (const auto& t : targets) {
        m.set_block(ro, 0, t.map.comps[w]);
        ro += reps[t.module]->dims[w];
      }
      if (rank(m) != static_cast<std::size_t>(xr.dims[w])) mono = false;
      fw.push_back(std::move(m));
    }
    if (!mono) {
      injective[x] = true;
      return;
    }
    // Cokernel: rows of Q_w span the left kernel of f_w; R_w selects its free columns.
    auto y = std::make_shared<Representation>();
    y->field = f;
    std::vector<Matrix> q, r;
    for (int w = 0; w < alg.size(); ++w) {
      Kernel k = kernel(fw[w].transpose());
      Matrix sel(f, e.dims[w], k.free_columns.size());
      for (std::size_t c = 0; c < k.free_columns.size(); ++c) sel(k.free_columns[c], c) = f.one();
      y->dims.push_back(static_cast<int>(k.basis.rows()));
      q.push_back(std::move(k.basis));
      r.push_back(std::move(sel));
    }
    for (std::size_t ai = 0; ai < alg.arrows.size(); ++ai) {
      const auto& a = alg.arrows[ai];
      y->mats.push_back(q[a.tgt] * e.mats[ai] * r[a.src]);
    }
    if (y->is_zero()) throw KnittingFailure("mesh starting at " + names[x] + ": the cokernel vanishes");
    if (!is_indecomposable(alg, y))
      throw KnittingFailure("mesh starting at " + names[x] + ": cokernel " + y->dimvector() + " is decomposable");
    const std::string yname = name_for(*y);
    // g restricted to each summand of E.
    std::vector<ModuleMorphism> g;
    std::vector<std::size_t> off(alg.size(), 0);
    for (const auto& t : targets) {
      ModuleMorphism h{reps[t.module], y, {}};
      for (int w = 0; w < alg.size(); ++w) {
        const std::size_t d = reps[t.module]->dims[w];
        h.comps.push_back(q[w].block(0, off[w], q[w].rows(), d));
        off[w] += d;
      }
      g.push_back(std::move(h));
    }
    std::vector<int> mids;
    for (const auto& t : targets)
      if (std::find(mids.begin(), mids.end(), t.module) == mids.end()) mids.push_back(t.module);
    const int yi = add(y, yname, -1, mids);
    tau_inv[x] = yi;
    AlmostSplitSequence seq;
    seq.start = names[x];
    seq.end = yname;
    std::sort(mids.begin(), mids.end(), [&](int a, int b) { return names[a] < names[b]; });
    for (int m : mids) {
      seq.middles.push_back(names[m]);
      std::vector<ModuleMorphism> fs, gs;
      for (std::size_t j = 0; j < targets.size(); ++j)
        if (targets[j].module == m) {
          fs.push_back(targets[j].map);
          gs.push_back(g[j]);
        }
      seq.f.push_back(fs);
      seq.g.push_back(gs);
    }
    for (const auto& t : targets)
      if (!irr.count({t.module, yi})) {
        std::vector<ModuleMorphism> gs;
        for (std::size_t j = 0; j < targets.size(); ++j)
          if (targets[j].module == t.module) gs.push_back(g[j]);
        add_arrow(t.module, yi, std::move(gs));
      }
    ModuleMorphism comp = zero_morphism(reps[x], y);
    for (std::size_t j = 0; j < targets.size(); ++j) comp = comp + compose(g[j], targets[j].map);
    if (!comp.is_zero()) throw KnittingFailure("mesh ending at " + yname + ": g f is not zero");
    ass[yi] = std::move(seq);
  }
};

}  // namespace

ARComponent knit(const HereditaryAlgebra& alg) {
  dynkin_type(alg);
  Knitter k{alg, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}};
  for (int v : alg.topological_order()) {
    k.add(std::make_shared<Representation>(projective(alg, v)), "P" + alg.vertices[v], v, {});
  }
  for (int x = 0; x < static_cast<int>(k.reps.size()); ++x)
    for (std::size_t b = 0; b < alg.arrows.size(); ++b) {
      if (alg.arrows[b].src != k.proj_of[x]) continue;
      const int t = static_cast<int>(std::find(k.proj_of.begin(), k.proj_of.end(), alg.arrows[b].tgt) - k.proj_of.begin());
      k.preds[x].push_back(t);
      k.add_arrow(t, x, {inclusion(alg, k.reps[t], k.reps[x], static_cast<int>(b))});
    }
  while (true) {
    int next = -1;
    for (std::size_t x = 0; x < k.reps.size() && next == -1; ++x) {
      if (k.processed[x]) continue;
      if (std::all_of(k.preds[x].begin(), k.preds[x].end(), [&](int p) { return k.processed[p]; }))
        next = static_cast<int>(x);
    }
    if (next == -1) break;
    k.process(next);
  }
  if (std::find(k.processed.begin(), k.processed.end(), false) != k.processed.end())
    throw KnittingFailure("knitting stalled before reaching all injectives");

  ARComponent c;
  c.alg = alg;
  for (std::size_t x = 0; x < k.reps.size(); ++x) {
    c.quiver.add_vertex(k.names[x], k.proj_of[x] != -1, k.injective[x]);
    c.module_of[k.names[x]] = k.reps[x];
    if (k.injective[x]) {
      bool match = false;
      for (int v = 0; v < alg.size(); ++v) match = match || k.reps[x]->dims == injective_dims(alg, v);
      if (!match) throw KnittingFailure(k.names[x] + " has no successors but is not injective");
    }
  }
  for (const auto& key : k.arrow_order) {
    c.quiver.add_arrow(key.first, key.second);
    c.irr_reps[key] = k.irr.at({c.quiver.index(key.first), c.quiver.index(key.second)});
  }
  for (auto& [yi, seq] : k.ass) {
    c.quiver.set_tau(seq.end, seq.start);
    c.ass[seq.end] = std::move(seq);
  }
  const int injectives = static_cast<int>(std::count(k.injective.begin(), k.injective.end(), true));
  if (injectives != alg.size())
    throw KnittingFailure("found " + std::to_string(injectives) + " injectives, expected " + std::to_string(alg.size()));
  const auto report = validate(c.quiver);
  if (!report.ok()) throw KnittingFailure("component is not a translation quiver: " + report.issues.front());
  for (int v = 0; v < alg.size(); ++v) {
    const std::string pname = "P" + alg.vertices[v];
    for (std::size_t x = 0; x < k.reps.size(); ++x) {
      const auto& d = k.reps[x]->dims;
      std::vector<int> e(alg.size(), 0);
      e[v] = 1;
      if (d == e && k.names[x] != "S" + alg.vertices[v]) c.aliases["S" + alg.vertices[v]] = k.names[x];
      if (d == injective_dims(alg, v) && k.names[x] != "I" + alg.vertices[v]) c.aliases["I" + alg.vertices[v]] = k.names[x];
    }
  }
  for (auto it = c.aliases.begin(); it != c.aliases.end();)
    it = c.module_of.count(it->first) ? c.aliases.erase(it) : std::next(it);
  return c;
}

// ------------------------------------------------------------ radical tower

RadicalTower::RadicalTower(std::shared_ptr<const ARComponent> comp) : comp_(std::move(comp)) {
  const auto& q = comp_->quiver;
  const auto& alg = comp_->alg;
  const GroundField f = alg.field;
  for (int v = 0; v < q.size(); ++v) {
    names_.push_back(q.name(v));
    index_[q.name(v)] = v;
  }
  const int n = q.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      homs_.emplace(std::make_pair(i, j), hom_space(alg, comp_->module_of.at(names_[i]), comp_->module_of.at(names_[j])));
  levels_.resize(2);
  for (const auto& [k, h] : homs_) {
    levels_[0].emplace(k, Subspace::full(f, h.dim()));
    levels_[1].emplace(k, k.first == k.second ? end_radical(alg, h.source, h) : Subspace::full(f, h.dim()));
  }
  // rad(Z, Y) bases as morphisms.
  std::map<std::pair<int, int>, std::vector<ModuleMorphism>> rad1;
  for (const auto& [k, s] : levels_[1]) {
    auto& out = rad1[k];
    for (std::size_t r = 0; r < s.dim(); ++r) out.push_back(homs_.at(k).from_coords(s.basis().row(r)));
  }
  while (true) {
    const auto& cur = levels_.back();
    std::map<std::pair<int, int>, Subspace> next;
    for (int i = 0; i < n; ++i) {
      std::vector<std::vector<Vec>> gens(n);
      for (int z = 0; z < n; ++z) {
        const Subspace& s = cur.at({i, z});
        for (std::size_t r = 0; r < s.dim(); ++r) {
          const ModuleMorphism a = homs_.at({i, z}).from_coords(s.basis().row(r));
          for (int j = 0; j < n; ++j)
            for (const auto& b : rad1.at({z, j})) gens[j].push_back(homs_.at({i, j}).coords(compose(b, a)));
        }
      }
      for (int j = 0; j < n; ++j) next.emplace(std::make_pair(i, j), Subspace::span(f, homs_.at({i, j}).dim(), gens[j]));
    }
    // Powers of a genuine radical decrease; on corrupted input they may cycle.
    if (std::find(levels_.begin() + 1, levels_.end(), next) != levels_.end()) break;
    levels_.push_back(std::move(next));
  }
}

std::pair<int, int> RadicalTower::key(const std::string& x, const std::string& y) const {
  return {index_.at(comp_->resolve(x)), index_.at(comp_->resolve(y))};
}

const HomSpace& RadicalTower::hom(const std::string& x, const std::string& y) const { return homs_.at(key(x, y)); }

Subspace RadicalTower::rad_power(const std::string& x, const std::string& y, int n) const {
  if (n < 0) throw InvalidInput("negative radical power");
  return levels_.at(std::min(n, stable_level())).at(key(x, y));
}

std::vector<ModuleMorphism> RadicalTower::irr_space(const std::string& x, const std::string& y) const {
  const HomSpace& h = hom(x, y);
  std::vector<ModuleMorphism> out;
  for (const auto& v : rad_power(x, y, 2).complement_in(rad(x, y))) out.push_back(h.from_coords(v));
  return out;
}

bool RadicalTower::in_rad_power(const ModuleMorphism& h, const std::string& x, const std::string& y, int n) const {
  return rad_power(x, y, n).contains(hom(x, y).coords(h));
}

bool RadicalTower::nilpotent() const {
  return std::all_of(levels_.back().begin(), levels_.back().end(), [](const auto& kv) { return kv.second.is_zero(); });
}

// ------------------------------------------------------------- certificates

CertifiedSequence almost_split(const RadicalTower& tower, const std::string& x_in) {
  const ARComponent& c = tower.component();
  const std::string x = c.resolve(x_in);
  if (c.quiver.projective(c.quiver.index(x))) throw InvalidInput(x + " is projective");
  const AlmostSplitSequence& seq = c.ass.at(x);
  const auto& alg = c.alg;
  const GroundField f = alg.field;
  CertifiedSequence out;
  out.sequence = &seq;
  auto& cert = out.certificate;
  const RepPtr& tx = c.module(seq.start);
  const RepPtr& xm = c.module(x);

  ModuleMorphism sum = zero_morphism(tx, xm);
  std::vector<std::pair<std::string, const ModuleMorphism*>> fs, gs;
  for (std::size_t m = 0; m < seq.middles.size(); ++m)
    for (std::size_t j = 0; j < seq.f[m].size(); ++j) {
      sum = sum + compose(seq.g[m][j], seq.f[m][j]);
      fs.push_back({seq.middles[m], &seq.f[m][j]});
      gs.push_back({seq.middles[m], &seq.g[m][j]});
    }
  cert.composite_zero = sum.is_zero();
  cert.f_injective = cert.g_surjective = cert.dims_add_up = true;
  for (int w = 0; w < alg.size(); ++w) {
    int e = 0;
    Matrix fw(f, 0, tx->dims[w]);
    for (const auto& [m, h] : fs) {
      e += c.module(m)->dims[w];
      for (std::size_t r = 0; r < h->comps[w].rows(); ++r) fw.append_row(h->comps[w].row(r));
    }
    Matrix gw(f, 0, xm->dims[w]);
    for (const auto& [m, h] : gs) {
      const Matrix t = h->comps[w].transpose();
      for (std::size_t r = 0; r < t.rows(); ++r) gw.append_row(t.row(r));
    }
    cert.f_injective = cert.f_injective && rank(fw) == static_cast<std::size_t>(tx->dims[w]);
    cert.g_surjective = cert.g_surjective && rank(gw) == static_cast<std::size_t>(xm->dims[w]);
    cert.dims_add_up = cert.dims_add_up && e == tx->dims[w] + xm->dims[w];
  }
  cert.right_factorization = cert.left_factorization = true;
  for (int zi = 0; zi < c.quiver.size(); ++zi) {
    const std::string z = c.quiver.name(zi);
    std::vector<Vec> through_g, through_f;
    for (const auto& [m, g] : gs)
      for (const auto& k : tower.hom(z, m).basis) through_g.push_back(tower.hom(z, x).coords(compose(*g, k)));
    const Subspace sg = Subspace::span(f, tower.hom(z, x).dim(), through_g);
    cert.right_factorization = cert.right_factorization && sg.contains(tower.rad(z, x));
    for (const auto& [m, fm] : fs)
      for (const auto& k : tower.hom(m, z).basis) through_f.push_back(tower.hom(seq.start, z).coords(compose(k, *fm)));
    const Subspace sf = Subspace::span(f, tower.hom(seq.start, z).dim(), through_f);
    cert.left_factorization = cert.left_factorization && sf.contains(tower.rad(seq.start, z));
  }
  return out;
}

std::vector<std::pair<std::string, std::vector<ModuleMorphism>>> left_almost_split(const ARComponent& comp,
                                                                                    const std::string& x_in) {
  const std::string x = comp.resolve(x_in);
  const auto& q = comp.quiver;
  std::vector<std::string> succ;
  for (int y : q.successors(q.index(x))) succ.push_back(q.name(y));
  std::sort(succ.begin(), succ.end());
  std::vector<std::pair<std::string, std::vector<ModuleMorphism>>> out;
  for (const auto& y : succ) out.emplace_back(y, comp.irr_reps.at({x, y}));
  return out;
}

bool factorization_lemma_holds(const RadicalTower& tower, const std::string& x, const std::string& z, int n) {
  const auto& hz = tower.hom(x, z);
  std::vector<Vec> gens;
  for (const auto& [t, us] : left_almost_split(tower.component(), x)) {
    const Subspace s = tower.rad_power(t, z, n);
    for (std::size_t r = 0; r < s.dim(); ++r) {
      const ModuleMorphism w = tower.hom(t, z).from_coords(s.basis().row(r));
      for (const auto& u : us) gens.push_back(hz.coords(compose(w, u)));
    }
  }
  return Subspace::span(tower.component().alg.field, hz.dim(), gens).contains(tower.rad_power(x, z, n + 1));
}

bool strongly_irreducible_check(const RadicalTower& tower, const std::string& x,
                                const std::vector<std::pair<std::string, std::vector<ModuleMorphism>>>& f) {
  bool independent = true;
  for (const auto& [xi, ms] : f) {
    const auto& h = tower.hom(x, xi);
    const Subspace r1 = tower.rad(x, xi);
    Subspace acc = tower.rad_power(x, xi, 2);
    for (std::size_t j = 0; j < ms.size(); ++j) {
      const Vec v = h.coords(ms[j]);
      if (!r1.contains(v) || tower.rad_power(x, xi, 2).contains(v))
        throw NotIrreducible("component " + std::to_string(j) + " of " + x + " -> " + xi);
      if (acc.contains(v)) independent = false;
      acc = acc + Subspace::span(h.target->field, h.dim(), {v});
    }
  }
  return independent;
}

}  // namespace meshkit
