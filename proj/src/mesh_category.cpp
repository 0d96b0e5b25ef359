#include "meshkit/mesh_category.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "meshkit/errors.hpp"

namespace meshkit {

namespace {

std::size_t tuple_count(const std::vector<int>& radix) {
  std::size_t n = 1;
  for (int r : radix) n *= static_cast<std::size_t>(r);
  return n;
}

void for_each_tuple(const std::vector<int>& radix, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> t(radix.size(), 0);
  while (true) {
    fn(t);
    int k = static_cast<int>(t.size()) - 1;
    while (k >= 0 && ++t[k] == radix[k]) t[k--] = 0;
    if (k < 0) return;
  }
}

}  // namespace

Vec MeshHomSpace::reduce(Vec v) const {
  if (v.size() != ambient_dim) throw DimMismatch("ambient vector length");
  const Matrix& r = relations.rref;
  for (std::size_t k = 0; k < relations.pivots.size(); ++k) {
    const std::size_t c = relations.pivots[k];
    if (v[c].is_zero()) continue;
    const Scalar a = -v[c];
    for (std::size_t j = c; j < ambient_dim; ++j)
      if (!r(k, j).is_zero()) v[j] += a * r(k, j);
  }
  Vec coords;
  coords.reserve(basis_columns.size());
  for (auto c : basis_columns) coords.push_back(v[c]);
  return coords;
}

Vec MeshHomSpace::representative(const Vec& coords) const {
  if (coords.size() != dim()) throw DimMismatch("coordinate vector length");
  Vec v = zero_vec(field, ambient_dim);
  for (std::size_t i = 0; i < coords.size(); ++i) v[basis_columns[i]] = coords[i];
  return v;
}

std::size_t MeshHomSpace::column(std::size_t path, const std::vector<int>& tuple) const {
  const auto& rad = radix[path];
  if (tuple.size() != rad.size()) throw DimMismatch("tuple length");
  std::size_t c = 0;
  for (std::size_t k = 0; k < rad.size(); ++k) c = c * static_cast<std::size_t>(rad[k]) + static_cast<std::size_t>(tuple[k]);
  return offsets[path] + c;
}

std::pair<std::size_t, std::vector<int>> MeshHomSpace::decode(std::size_t column) const {
  auto it = std::upper_bound(offsets.begin(), offsets.end(), column);
  const std::size_t p = static_cast<std::size_t>(it - offsets.begin()) - 1;
  std::size_t rest = column - offsets[p];
  const auto& rad = radix[p];
  std::vector<int> t(rad.size());
  for (std::size_t k = rad.size(); k-- > 0;) {
    t[k] = static_cast<int>(rest % static_cast<std::size_t>(rad[k]));
    rest /= static_cast<std::size_t>(rad[k]);
  }
  return {p, t};
}

std::vector<PathTerm> MeshHomSpace::terms(const Vec& ambient) const {
  std::vector<PathTerm> out;
  for (std::size_t c = 0; c < ambient.size(); ++c) {
    if (ambient[c].is_zero()) continue;
    auto [p, t] = decode(c);
    out.push_back({paths[p], t, ambient[c]});
  }
  return out;
}

MeshCategory::MeshCategory(ModulatedQuiver mq, std::vector<int> length, std::size_t path_cap,
                           const BasisChoices& choices)
    : mq_(std::move(mq)), length_(std::move(length)), path_cap_(path_cap) {
  const auto& q = mq_.quiver;
  if (static_cast<int>(length_.size()) != q.size()) throw DimMismatch("length function size");
  for (auto [s, t] : q.arrows())
    if (length_[t] != length_[s] + 1) throw NotWithLength("length jumps along " + q.name(s) + " -> " + q.name(t));
  for (const auto& [end, bc] : choices)
    if (!q.find(end) || q.tau(q.index(end)) == -1) throw InvalidInput("basis choice for non-mesh " + end);
  for (int z = 0; z < q.size(); ++z) {
    if (q.tau(z) == -1 || !mq_.region[z]) continue;
    auto it = choices.find(q.name(z));
    gammas_.emplace(z, mesh_element(mq_, q.name(z), it == choices.end() ? BasisChoice{} : it->second));
  }
}

const MeshElement& MeshCategory::gamma(int z) const {
  auto it = gammas_.find(z);
  if (it == gammas_.end()) throw InvalidInput("no mesh relation at " + quiver().name(z));
  return it->second;
}

std::shared_ptr<const MeshHomSpace> MeshCategory::hom_basis(int x, int y) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find({x, y});
    if (it != cache_.end()) return it->second;
  }
  auto h = build(x, y);
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.emplace(std::make_pair(x, y), h).first->second;
}

std::shared_ptr<const MeshHomSpace> MeshCategory::build(int x, int y) const {
  const auto& q = quiver();
  const auto& region = mq_.region;
  auto h = std::make_shared<MeshHomSpace>();
  h->field = field();
  h->source = x;
  h->target = y;
  auto undecidable = [&](int v) {
    throw UndecidableTruncation("hom(" + q.name(x) + ", " + q.name(y) + ") needs " + q.name(v) +
                                    ", which lies outside the interior",
                                0);
  };
  if (!region[x]) undecidable(x);
  if (!region[y]) undecidable(y);
  const int lx = length_[x], ly = length_[y];
  auto finish = [&]() {
    h->relations.rref = Matrix(field(), 0, h->ambient_dim);
    for (std::size_t c = 0; c < h->ambient_dim; ++c) h->basis_columns.push_back(c);
    return h;
  };
  if (ly < lx) return finish();

  auto cone = [&](int start, bool forward) {
    std::set<int> seen{start};
    std::deque<int> queue{start};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      if (!region[v] && (forward ? length_[v] < ly : length_[v] > lx)) undecidable(v);
      for (int w : forward ? q.successors(v) : q.predecessors(v)) {
        if (forward ? length_[w] > ly : length_[w] < lx) continue;
        if (seen.insert(w).second) queue.push_back(w);
      }
    }
    return seen;
  };
  const auto fwd = cone(x, true);
  const auto bwd = cone(y, false);
  for (int v : fwd)
    if (bwd.count(v)) h->between.push_back(v);
  if (!bwd.count(x)) return finish();
  std::sort(h->between.begin(), h->between.end(), [&](int a, int b) { return length_[a] < length_[b]; });
  const std::set<int> between(h->between.begin(), h->between.end());

  std::map<int, std::vector<std::vector<int>>> from, to;
  std::size_t stored = 0;
  auto cap = [&](std::size_t n) {
    stored += n;
    if (stored > path_cap_)
      throw PathExplosion("more than " + std::to_string(path_cap_) + " paths between " + q.name(x) + " and " + q.name(y));
  };
  from[x] = {{x}};
  for (int v : h->between)
    for (int w : q.successors(v)) {
      if (!between.count(w)) continue;
      cap(from[v].size());
      for (const auto& p : from[v]) {
        auto np = p;
        np.push_back(w);
        from[w].push_back(std::move(np));
      }
    }
  to[y] = {{y}};
  for (auto it = h->between.rbegin(); it != h->between.rend(); ++it)
    for (int w : q.predecessors(*it)) {
      if (!between.count(w)) continue;
      cap(to[*it].size());
      for (const auto& p : to[*it]) {
        std::vector<int> np{w};
        np.insert(np.end(), p.begin(), p.end());
        to[w].push_back(std::move(np));
      }
    }

  auto radix_of = [&](const std::vector<int>& p) {
    std::vector<int> r;
    for (std::size_t k = 0; k + 1 < p.size(); ++k) r.push_back(mq_.dim(p[k], p[k + 1]));
    return r;
  };
  h->paths = from[y];
  std::sort(h->paths.begin(), h->paths.end(), [&](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [&](int u, int v) { return q.name(u) < q.name(v); });
  });
  h->length = ly - lx;
  for (std::size_t i = 0; i < h->paths.size(); ++i) {
    h->path_index[h->paths[i]] = i;
    h->radix.push_back(radix_of(h->paths[i]));
    h->offsets.push_back(h->ambient_dim);
    h->ambient_dim += tuple_count(h->radix.back());
    if (h->ambient_dim > path_cap_)
      throw PathExplosion("ambient dimension of hom(" + q.name(x) + ", " + q.name(y) + ") exceeds " +
                          std::to_string(path_cap_));
  }

  std::vector<Vec> rows;
  for (int z : h->between) {
    const int t = q.tau(z);
    if (t == -1 || !between.count(t)) continue;
    const MeshElement& g = gamma(z);
    for (const auto& p : from[t])
      for (const auto& r : to[z]) {
        const auto rp = radix_of(p), rr = radix_of(r);
        for_each_tuple(rp, [&](const std::vector<int>& tp) {
          for_each_tuple(rr, [&](const std::vector<int>& tr) {
            Vec row = zero_vec(field(), h->ambient_dim);
            for (const auto& [mname, c] : g.blocks) {
              const int m = q.index(mname);
              std::vector<int> path = p;
              path.push_back(m);
              path.insert(path.end(), r.begin(), r.end());
              const std::size_t pi = h->path_index.at(path);
              for (std::size_t a = 0; a < c.rows(); ++a)
                for (std::size_t b = 0; b < c.cols(); ++b) {
                  if (c(a, b).is_zero()) continue;
                  std::vector<int> tuple = tp;
                  tuple.push_back(static_cast<int>(a));
                  tuple.push_back(static_cast<int>(b));
                  tuple.insert(tuple.end(), tr.begin(), tr.end());
                  row[h->column(pi, tuple)] += c(a, b);
                }
            }
            rows.push_back(std::move(row));
          });
        });
      }
  }
  if (rows.empty()) return finish();
  h->relations = row_reduce(Matrix::from_rows(field(), h->ambient_dim, rows));
  std::vector<bool> pivot(h->ambient_dim, false);
  for (auto c : h->relations.pivots) pivot[c] = true;
  for (std::size_t c = 0; c < h->ambient_dim; ++c)
    if (!pivot[c]) h->basis_columns.push_back(c);
  return h;
}

MeshClass MeshCategory::identity(int x) const {
  auto h = hom_basis(x, x);
  return {h, h->reduce(Vec{field().one()})};
}

MeshClass MeshCategory::zero(int x, int y) const {
  auto h = hom_basis(x, y);
  return {h, zero_vec(field(), h->dim())};
}

MeshClass MeshCategory::arrow_class(int x, int y, int i) const {
  if (!quiver().has_arrow(x, y)) throw InvalidInput("no arrow " + quiver().name(x) + " -> " + quiver().name(y));
  if (i < 0 || i >= mq_.dim(x, y)) throw InvalidInput("arrow component index out of range");
  auto h = hom_basis(x, y);
  Vec v = zero_vec(field(), h->ambient_dim);
  v[h->column(h->path_index.at({x, y}), {i})] = field().one();
  return {h, h->reduce(v)};
}

MeshClass MeshCategory::from_coords(int x, int y, Vec coords) const {
  auto h = hom_basis(x, y);
  if (coords.size() != h->dim()) throw DimMismatch("coordinate vector length");
  return {h, std::move(coords)};
}

MeshClass MeshCategory::compose(const MeshClass& u, const MeshClass& v) const {
  if (u.hom->target != v.hom->source) throw InvalidInput("compose: endpoints do not match");
  auto w = hom_basis(u.hom->source, v.hom->target);
  Vec out = zero_vec(field(), w->ambient_dim);
  const Vec ru = u.hom->representative(u.coords);
  const Vec rv = v.hom->representative(v.coords);
  for (std::size_t i = 0; i < ru.size(); ++i) {
    if (ru[i].is_zero()) continue;
    auto [pi, ti] = u.hom->decode(i);
    for (std::size_t j = 0; j < rv.size(); ++j) {
      if (rv[j].is_zero()) continue;
      auto [pj, tj] = v.hom->decode(j);
      std::vector<int> path = u.hom->paths[pi];
      const auto& tail = v.hom->paths[pj];
      path.insert(path.end(), tail.begin() + 1, tail.end());
      std::vector<int> tuple = ti;
      tuple.insert(tuple.end(), tj.begin(), tj.end());
      out[w->column(w->path_index.at(path), tuple)] += ru[i] * rv[j];
    }
  }
  return {w, w->reduce(out)};
}

Subspace MeshCategory::radical_power(int x, int y, int n) const {
  auto h = hom_basis(x, y);
  if (n < 0) throw InvalidInput("negative radical power");
  if (h->paths.empty() || n > h->length) return Subspace(field(), h->dim());
  return Subspace::full(field(), h->dim());
}

Subspace MeshCategory::radical_power_direct(int x, int y, int n) const {
  auto top = hom_basis(x, y);
  if (n < 0) throw InvalidInput("negative radical power");
  const std::set<int> between(top->between.begin(), top->between.end());
  std::map<std::pair<int, int>, Subspace> memo;
  std::function<Subspace(int, int)> rec = [&](int w, int k) -> Subspace {
    auto it = memo.find({w, k});
    if (it != memo.end()) return it->second;
    auto h = hom_basis(x, w);
    Subspace s(field(), h->dim());
    if (k == 0) {
      s = Subspace::full(field(), h->dim());
    } else if (!h->paths.empty()) {
      std::vector<Vec> gens;
      for (int u : quiver().predecessors(w)) {
        if (!between.count(u) || hom_basis(x, u)->paths.empty()) continue;
        const Subspace prev = rec(u, k - 1);
        for (std::size_t r = 0; r < prev.dim(); ++r) {
          const MeshClass c = from_coords(x, u, prev.basis().row(r));
          for (int i = 0; i < mq_.dim(u, w); ++i) gens.push_back(compose(c, arrow_class(u, w, i)).coords);
        }
      }
      s = Subspace::span(field(), h->dim(), gens);
    }
    memo.emplace(std::make_pair(w, k), s);
    return s;
  };
  return rec(y, n);
}

GradedPiece MeshCategory::graded_piece(int x, int y, int n) const {
  const Subspace rn = radical_power(x, y, n);
  const Subspace rn1 = radical_power(x, y, n + 1);
  GradedPiece g;
  for (auto& v : rn1.complement_in(rn)) g.basis.push_back(from_coords(x, y, std::move(v)));
  g.dim = g.basis.size();
  return g;
}

}  // namespace meshkit
