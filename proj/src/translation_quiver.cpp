#include "meshkit/translation_quiver.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <tuple>

#include "meshkit/errors.hpp"

namespace meshkit {

int TranslationQuiver::add_vertex(const std::string& name, bool projective, bool injective) {
  if (name.empty()) throw InvalidInput("empty vertex name");
  if (index_.count(name)) throw InvalidInput("duplicate vertex " + name);
  const int v = size();
  names_.push_back(name);
  index_[name] = v;
  projective_.push_back(projective);
  injective_.push_back(injective);
  tau_.push_back(-1);
  succ_.emplace_back();
  pred_.emplace_back();
  return v;
}

void TranslationQuiver::add_arrow(const std::string& src, const std::string& tgt) { add_arrow(index(src), index(tgt)); }

void TranslationQuiver::add_arrow(int src, int tgt) {
  arrows_.emplace_back(src, tgt);
  if (std::find(succ_[src].begin(), succ_[src].end(), tgt) == succ_[src].end()) {
    succ_[src].push_back(tgt);
    pred_[tgt].push_back(src);
  }
}

void TranslationQuiver::set_tau(const std::string& x, const std::string& tau_x) { set_tau(index(x), index(tau_x)); }

void TranslationQuiver::set_tau(int x, int tau_x) {
  if (tau_[x] != -1 && tau_[x] != tau_x) throw InvalidInput("tau defined twice at " + names_[x]);
  tau_[x] = tau_x;
}

int TranslationQuiver::index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw InvalidInput("unknown vertex " + name);
  return it->second;
}

std::optional<int> TranslationQuiver::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int TranslationQuiver::tau_inverse(int v) const {
  for (int x = 0; x < size(); ++x)
    if (tau_[x] == v) return x;
  return -1;
}

bool TranslationQuiver::has_arrow(int s, int t) const {
  return std::find(succ_[s].begin(), succ_[s].end(), t) != succ_[s].end();
}

std::vector<int> TranslationQuiver::sorted_vertices() const {
  std::vector<int> out;
  for (const auto& [name, v] : index_) out.push_back(v);
  return out;
}

ValidationReport validate(const TranslationQuiver& tq, const std::vector<bool>* region) {
  ValidationReport rep;
  auto in_region = [&](int v) { return region == nullptr || (*region)[v]; };
  auto nm = [&](int v) { return tq.name(v); };

  std::map<std::pair<int, int>, int> count;
  for (auto [s, t] : tq.arrows()) ++count[{s, t}];
  for (auto [st, c] : count) {
    auto [s, t] = st;
    if (s == t) rep.issues.push_back("loop at " + nm(s));
    if (c > 1) rep.issues.push_back("multiple arrows " + nm(s) + " -> " + nm(t));
  }

  std::map<int, std::vector<int>> preimages;
  for (int x : tq.sorted_vertices()) {
    const int t = tq.tau(x);
    if (t != -1 && in_region(x)) preimages[t].push_back(x);
    if (!in_region(x)) continue;
    if (tq.projective(x) && t != -1) rep.issues.push_back("tau defined at projective " + nm(x));
    if (!tq.projective(x) && t == -1) rep.issues.push_back("tau undefined at non-projective " + nm(x));
    if (t == -1) continue;
    if (tq.injective(t)) rep.issues.push_back("tau(" + nm(x) + ") = " + nm(t) + " is injective");
    if (tq.successors(t).empty()) rep.issues.push_back("degenerate mesh at " + nm(x));
    for (int y : tq.predecessors(x))
      if (!tq.has_arrow(t, y))
        rep.issues.push_back("mesh axiom fails at (" + nm(x) + ", " + nm(y) + "): arrow " + nm(y) + " -> " + nm(x) +
                             " but no arrow " + nm(t) + " -> " + nm(y));
    for (int y : tq.successors(t))
      if (!tq.has_arrow(y, x))
        rep.issues.push_back("mesh axiom fails at (" + nm(x) + ", " + nm(y) + "): arrow " + nm(t) + " -> " + nm(y) +
                             " but no arrow " + nm(y) + " -> " + nm(x));
  }
  for (int y : tq.sorted_vertices()) {
    auto it = preimages.find(y);
    if (it != preimages.end() && it->second.size() > 1) rep.issues.push_back("tau not injective at " + nm(y));
    if (!in_region(y) || tq.injective(y)) continue;
    if (it == preimages.end() && tq.tau_inverse(y) == -1)
      rep.issues.push_back("non-injective " + nm(y) + " is not in the image of tau");
  }
  return rep;
}

std::vector<Mesh> meshes(const TranslationQuiver& tq) {
  auto rep = validate(tq);
  if (!rep.ok()) throw InvalidInput("not a translation quiver: " + rep.issues.front());
  std::vector<Mesh> out;
  for (int x : tq.sorted_vertices()) {
    if (tq.projective(x)) continue;
    Mesh m{tq.name(x), tq.name(tq.tau(x)), {}};
    for (int y : tq.predecessors(x)) m.middles.push_back(tq.name(y));
    std::sort(m.middles.begin(), m.middles.end());
    out.push_back(std::move(m));
  }
  return out;
}

namespace {

std::vector<std::string> names_of(const TranslationQuiver& tq, const std::vector<int>& path) {
  std::vector<std::string> out;
  for (int v : path) out.push_back(tq.name(v));
  return out;
}

std::vector<int> sorted_by_name(const TranslationQuiver& tq, std::vector<int> vs) {
  std::sort(vs.begin(), vs.end(), [&](int a, int b) { return tq.name(a) < tq.name(b); });
  return vs;
}

}  // namespace

WithLengthResult is_with_length(const TranslationQuiver& tq) {
  const int n = tq.size();
  WithLengthResult res;
  // Directed cycle search; a cycle is parallel to the trivial path.
  std::vector<int> color(n, 0), parent(n, -1);
  for (int root : tq.sorted_vertices()) {
    if (color[root]) continue;
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    color[root] = 1;
    while (!stack.empty()) {
      auto& [v, k] = stack.back();
      const auto succ = sorted_by_name(tq, tq.successors(v));
      if (k == succ.size()) {
        color[v] = 2;
        stack.pop_back();
        continue;
      }
      const int w = succ[k++];
      if (color[w] == 1) {
        std::vector<int> cyc{w};
        for (auto it = stack.begin(); it != stack.end(); ++it)
          if (it->first == w) {
            for (auto jt = it + 1; jt != stack.end(); ++jt) cyc.push_back(jt->first);
            break;
          }
        cyc.push_back(w);
        res.with_length = false;
        res.path_a = names_of(tq, cyc);
        res.path_b = {tq.name(w)};
        return res;
      }
      if (color[w] == 0) {
        color[w] = 1;
        parent[w] = v;
        stack.emplace_back(w, 0);
      }
    }
  }
  // Acyclic: compare shortest and longest path lengths from every source.
  std::vector<int> indeg(n, 0), topo;
  for (int v = 0; v < n; ++v)
    for (int w : tq.successors(v)) ++indeg[w];
  std::set<std::pair<std::string, int>> ready;
  for (int v = 0; v < n; ++v)
    if (!indeg[v]) ready.insert({tq.name(v), v});
  while (!ready.empty()) {
    int v = ready.begin()->second;
    ready.erase(ready.begin());
    topo.push_back(v);
    for (int w : tq.successors(v))
      if (--indeg[w] == 0) ready.insert({tq.name(w), w});
  }
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[topo[i]] = i;
  for (int s : tq.sorted_vertices()) {
    std::vector<int> lo(n, -1), hi(n, -1), plo(n, -1), phi(n, -1);
    lo[s] = hi[s] = 0;
    for (int i = pos[s]; i < n; ++i) {
      const int v = topo[i];
      if (lo[v] < 0) continue;
      for (int w : sorted_by_name(tq, tq.successors(v))) {
        if (lo[w] < 0 || lo[v] + 1 < lo[w]) lo[w] = lo[v] + 1, plo[w] = v;
        if (hi[w] < 0 || hi[v] + 1 > hi[w]) hi[w] = hi[v] + 1, phi[w] = v;
      }
    }
    for (int t : tq.sorted_vertices()) {
      if (lo[t] < 0 || lo[t] == hi[t]) continue;
      auto trace = [&](const std::vector<int>& par) {
        std::vector<int> p{t};
        while (p.back() != s) p.push_back(par[p.back()]);
        std::reverse(p.begin(), p.end());
        return p;
      };
      res.with_length = false;
      res.path_a = names_of(tq, trace(phi));
      res.path_b = names_of(tq, trace(plo));
      return res;
    }
  }
  return res;
}

std::map<std::string, int> length_function(const TranslationQuiver& tq, const std::string& base) {
  const int b = tq.index(base);
  std::vector<int> len(tq.size(), 0), from(tq.size(), -1);
  std::vector<bool> seen(tq.size(), false);
  std::deque<int> queue{b};
  seen[b] = true;
  auto walk_to = [&](int v) {
    std::vector<std::string> w;
    for (; v != -1; v = from[v]) w.push_back(tq.name(v));
    std::reverse(w.begin(), w.end());
    std::string s;
    for (const auto& x : w) s += (s.empty() ? "" : " ~ ") + x;
    return s;
  };
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    auto visit = [&](int w, int value) {
      if (!seen[w]) {
        seen[w] = true;
        len[w] = value;
        from[w] = v;
        queue.push_back(w);
      } else if (len[w] != value) {
        throw NotWithLength("conflicting lengths along walks [" + walk_to(v) + " ~ " + tq.name(w) + "] and [" +
                            walk_to(w) + "]");
      }
    };
    for (int w : sorted_by_name(tq, tq.successors(v))) visit(w, len[v] + 1);
    for (int w : sorted_by_name(tq, tq.predecessors(v))) visit(w, len[v] - 1);
  }
  std::map<std::string, int> out;
  for (int v = 0; v < tq.size(); ++v) {
    if (!seen[v]) throw InvalidInput("quiver is not connected: " + tq.name(v) + " unreachable from " + base);
    out[tq.name(v)] = len[v];
  }
  return out;
}

TranslationQuiver full_subquiver(const TranslationQuiver& tq, const std::vector<bool>& keep) {
  TranslationQuiver sub;
  for (int v = 0; v < tq.size(); ++v)
    if (keep[v]) sub.add_vertex(tq.name(v), tq.projective(v), tq.injective(v));
  for (auto [s, t] : tq.arrows())
    if (keep[s] && keep[t]) sub.add_arrow(tq.name(s), tq.name(t));
  for (int v = 0; v < tq.size(); ++v)
    if (keep[v] && tq.tau(v) != -1 && keep[tq.tau(v)]) sub.set_tau(tq.name(v), tq.name(tq.tau(v)));
  return sub;
}

QuiverMorphism make_morphism(const TranslationQuiver& source, const TranslationQuiver& target,
                             const std::map<std::string, std::string>& vertex_map) {
  QuiverMorphism p{source, target, std::vector<int>(source.size(), -1)};
  for (int v = 0; v < source.size(); ++v) {
    auto it = vertex_map.find(source.name(v));
    if (it == vertex_map.end()) throw InvalidInput("vertex map misses " + source.name(v));
    p.image[v] = target.index(it->second);
  }
  return p;
}

ValidationReport check_connected(const TranslationQuiver& tq) {
  ValidationReport rep;
  if (tq.size() == 0) return rep;
  std::vector<bool> seen(tq.size(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto* nb : {&tq.successors(v), &tq.predecessors(v)})
      for (int w : *nb)
        if (!seen[w]) seen[w] = true, stack.push_back(w);
  }
  for (int v : tq.sorted_vertices())
    if (!seen[v]) rep.issues.push_back("not connected: " + tq.name(v) + " unreachable from " + tq.name(0));
  return rep;
}

CoveringReport check_covering(const QuiverMorphism& p, const std::vector<bool>* region) {
  CoveringReport rep;
  const auto& S = p.source;
  const auto& T = p.target;
  for (const auto& i : validate(S, region).issues) rep.issues.push_back("(a) source: " + i);
  for (const auto& i : validate(T).issues) rep.issues.push_back("(a) target: " + i);
  for (const auto& i : check_connected(T).issues) rep.issues.push_back("(a) target: " + i);
  for (auto [s, t] : S.arrows())
    if (!T.has_arrow(p.image[s], p.image[t]))
      rep.issues.push_back("arrow " + S.name(s) + " -> " + S.name(t) + " does not map to an arrow");
  for (int x : S.sorted_vertices()) {
    if (region && !(*region)[x]) continue;
    const int px = p.image[x];
    const std::string at = " at " + S.name(x);
    if (S.projective(x) != T.projective(px)) rep.issues.push_back("(b) projective flag differs" + at);
    if (S.injective(x) != T.injective(px)) rep.issues.push_back("(b) injective flag differs" + at);
    if (S.tau(x) != -1 && p.image[S.tau(x)] != T.tau(px)) rep.issues.push_back("(c) tau does not commute" + at);
    if (S.tau(x) == -1 && T.tau(px) != -1) rep.issues.push_back("(c) tau missing" + at);
    auto star = [&](const std::vector<int>& mine, const std::vector<int>& theirs, const char* dir) {
      std::set<int> img;
      for (int y : mine) img.insert(p.image[y]);
      const std::set<int> want(theirs.begin(), theirs.end());
      if (img.size() != mine.size() || img != want)
        rep.issues.push_back(std::string("(d) ") + dir + " arrows not bijective" + at);
    };
    star(S.successors(x), T.successors(px), "outgoing");
    star(S.predecessors(x), T.predecessors(px), "incoming");
  }
  return rep;
}

std::vector<int> TruncatedCover::fiber(int base_vertex) const {
  std::vector<int> out;
  for (int v = 0; v < cover.size(); ++v)
    if (pi.image[v] == base_vertex) out.push_back(v);
  return out;
}

namespace {

// Breadth-first development of the base along walks. Lifted meshes are closed
// by identifying the ends of their crossings (union-find), and lifts of one base
// arrow at one vertex are folded together.
class CoverBuilder {
 public:
  CoverBuilder(const TranslationQuiver& b, int radius) : b_(b), radius_(radius) {}

  TruncatedCover run(int base) {
    std::deque<int> queue{make(base, 0)};
    while (true) {
      while (!queue.empty()) {
        const int c = find(queue.front());
        queue.pop_front();
        if (expanded_[c] || dist_[c] >= radius_) continue;
        expand(c, queue);
      }
      for (int c = 0; c < static_cast<int>(parent_.size()); ++c)
        if (find(c) == c && !expanded_[c] && dist_[c] < radius_) queue.push_back(c);
      if (queue.empty()) break;
    }
    return assemble(base);
  }

 private:
  int find(int a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }

  int make(int bv, int d) {
    const int id = static_cast<int>(parent_.size());
    parent_.push_back(id);
    base_of_.push_back(bv);
    dist_.push_back(d);
    expanded_.push_back(false);
    out_.emplace_back(b_.successors(bv).size(), -1);
    in_.emplace_back(b_.predecessors(bv).size(), -1);
    return id;
  }

  static int slot(const std::vector<int>& list, int v) {
    return static_cast<int>(std::find(list.begin(), list.end(), v) - list.begin());
  }

  void merge(int a, int b) {
    std::vector<std::pair<int, int>> pending{{a, b}};
    while (!pending.empty()) {
      auto [x, y] = pending.back();
      pending.pop_back();
      x = find(x), y = find(y);
      if (x == y) continue;
      if (y < x) std::swap(x, y);
      parent_[y] = x;
      changed_ = true;
      dist_[x] = std::min(dist_[x], dist_[y]);
      expanded_[x] = expanded_[x] || expanded_[y];
      for (auto* side : {&out_, &in_}) {
        auto& mine = (*side)[x];
        const auto theirs = (*side)[y];
        for (std::size_t k = 0; k < mine.size(); ++k) {
          if (theirs[k] == -1) continue;
          if (mine[k] == -1)
            mine[k] = theirs[k];
          else
            pending.emplace_back(mine[k], theirs[k]);
        }
      }
    }
  }

  // Arrow u -> v lifting base(u) -> successors(base(u))[k].
  void connect(int u, int k, int v) {
    u = find(u), v = find(v);
    const int kk = slot(b_.predecessors(base_of_[v]), base_of_[u]);
    if (out_[u][k] != -1 && find(out_[u][k]) != v) merge(out_[u][k], v);
    u = find(u), v = find(v);
    if (in_[v][kk] != -1 && find(in_[v][kk]) != u) merge(in_[v][kk], u);
    u = find(u), v = find(v);
    if (out_[u][k] == -1 || in_[v][kk] == -1) changed_ = true;
    out_[u][k] = v;
    in_[v][kk] = u;
  }

  void expand(int c, std::deque<int>& queue) {
    const int bv = base_of_[c];
    const auto& succ = b_.successors(bv);
    const auto& pred = b_.predecessors(bv);
    for (std::size_t k = 0; k < succ.size(); ++k) {
      c = find(c);
      if (out_[c][k] != -1) continue;
      const int n = make(succ[k], dist_[c] + 1);
      connect(c, static_cast<int>(k), n);
      queue.push_back(n);
    }
    for (std::size_t k = 0; k < pred.size(); ++k) {
      c = find(c);
      if (in_[c][k] != -1) continue;
      const int n = make(pred[k], dist_[c] + 1);
      connect(n, slot(b_.successors(pred[k]), bv), c);
      queue.push_back(n);
    }
    expanded_[find(c)] = true;
    close();
  }

  // Every lifted mesh must close: all crossings from a lift of x land in one
  // lift of tau(x), and dually.
  void close() {
    do {
      changed_ = false;
      for (int c = 0; c < static_cast<int>(parent_.size()); ++c) {
        if (find(c) != c) continue;
        close_at(c, /*backward=*/true);
        if (find(c) != c) continue;
        close_at(c, /*backward=*/false);
      }
    } while (changed_);
  }

  void close_at(int c, bool backward) {
    const int v = base_of_[c];
    const int t = backward ? b_.tau(v) : b_.tau_inverse(v);
    if (t == -1) return;
    const auto& mids = backward ? b_.predecessors(v) : b_.successors(v);
    std::vector<std::pair<int, int>> lifted;  // (middle slot, lift)
    int target = -1;
    for (std::size_t k = 0; k < mids.size(); ++k) {
      c = find(c);
      int y = backward ? in_[c][k] : out_[c][k];
      if (y == -1) continue;
      y = find(y);
      lifted.emplace_back(static_cast<int>(k), y);
      const auto& ylist = backward ? b_.predecessors(mids[k]) : b_.successors(mids[k]);
      const int kk = slot(ylist, t);
      const int z = backward ? in_[y][kk] : out_[y][kk];
      if (z == -1) continue;
      if (target == -1)
        target = z;
      else
        merge(target, z);
    }
    if (target == -1) return;
    for (auto [k, y] : lifted) {
      target = find(target);
      y = find(y);
      if (backward)
        connect(target, slot(b_.successors(t), mids[k]), y);
      else
        connect(y, slot(b_.successors(mids[k]), t), target);
    }
  }

  TruncatedCover assemble(int base) {
    std::vector<int> roots;
    for (int c = 0; c < static_cast<int>(parent_.size()); ++c)
      if (find(c) == c) roots.push_back(c);
    std::sort(roots.begin(), roots.end(), [&](int a, int b) { return std::tie(dist_[a], a) < std::tie(dist_[b], b); });
    std::map<int, int> idx;
    std::map<int, int> lifts_seen;
    TruncatedCover tc;
    tc.radius = radius_;
    std::map<std::string, std::string> vmap;
    for (int c : roots) {
      const int bv = base_of_[c];
      const int k = lifts_seen[bv]++;
      const std::string name = k == 0 ? b_.name(bv) : b_.name(bv) + "@" + std::to_string(k);
      idx[c] = tc.cover.add_vertex(name, b_.projective(bv), b_.injective(bv));
      vmap[name] = b_.name(bv);
      tc.distance.push_back(dist_[c]);
    }
    for (int c : roots)
      for (int y : out_[c])
        if (y != -1) tc.cover.add_arrow(idx[c], idx[find(y)]);
    for (int c : roots) {
      const int t = b_.tau(base_of_[c]);
      if (t == -1) continue;
      const auto& mids = b_.predecessors(base_of_[c]);
      for (std::size_t k = 0; k < mids.size(); ++k) {
        const int y = in_[c][k];
        if (y == -1) continue;
        const int z = in_[find(y)][slot(b_.predecessors(mids[k]), t)];
        if (z == -1) continue;
        tc.cover.set_tau(idx[c], idx[find(z)]);
        break;
      }
    }
    const int n = tc.cover.size();
    tc.complete.assign(n, false);
    for (int c : roots) {
      bool full = true;
      for (int y : out_[c]) full = full && y != -1;
      for (int y : in_[c]) full = full && y != -1;
      tc.complete[idx[c]] = full;
    }
    tc.interior.assign(n, false);
    for (int v = 0; v < n; ++v) {
      bool ok = tc.complete[v];
      for (int w : tc.cover.successors(v)) ok = ok && tc.complete[w];
      for (int w : tc.cover.predecessors(v)) ok = ok && tc.complete[w];
      ok = ok && (tc.cover.projective(v) || tc.cover.tau(v) != -1);
      ok = ok && (tc.cover.injective(v) || tc.cover.tau_inverse(v) != -1);
      tc.interior[v] = ok;
    }
    tc.base_vertex = b_.name(base);
    tc.pi = make_morphism(tc.cover, b_, vmap);
    const auto len = length_function(tc.cover, tc.base_vertex);
    tc.length.resize(n);
    for (int v = 0; v < n; ++v) tc.length[v] = len.at(tc.cover.name(v));
    return tc;
  }

  const TranslationQuiver& b_;
  int radius_;
  bool changed_ = false;
  std::vector<int> parent_, base_of_, dist_;
  std::vector<bool> expanded_;
  std::vector<std::vector<int>> out_, in_;
};

}  // namespace

TruncatedCover universal_cover(const TranslationQuiver& tq, const std::string& base, int radius) {
  if (radius < 0) throw InvalidInput("radius must be nonnegative");
  auto rep = validate(tq);
  if (!rep.ok()) throw InvalidInput("not a translation quiver: " + rep.issues.front());
  auto conn = check_connected(tq);
  if (!conn.ok()) throw InvalidInput(conn.issues.front());
  return CoverBuilder(tq, radius).run(tq.index(base));
}

TruncatedCover identity_cover(const TranslationQuiver& tq, const std::string& base) {
  TruncatedCover tc;
  tc.cover = tq;
  std::map<std::string, std::string> id;
  for (int v = 0; v < tq.size(); ++v) id[tq.name(v)] = tq.name(v);
  tc.pi = make_morphism(tq, tq, id);
  tc.base_vertex = base;
  const auto len = length_function(tq, base);
  const int n = tq.size();
  tc.length.resize(n);
  for (int v = 0; v < n; ++v) tc.length[v] = len.at(tq.name(v));
  tc.distance.assign(n, -1);
  std::deque<int> queue{tq.index(base)};
  tc.distance[queue.front()] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (const auto* nb : {&tq.successors(v), &tq.predecessors(v)})
      for (int w : *nb)
        if (tc.distance[w] < 0) tc.distance[w] = tc.distance[v] + 1, queue.push_back(w);
  }
  tc.radius = *std::max_element(tc.distance.begin(), tc.distance.end());
  tc.complete.assign(n, true);
  tc.interior.assign(n, true);
  return tc;
}

std::vector<std::string> lift_path(const TruncatedCover& tc, const std::vector<std::string>& path,
                                   const std::string& start_lift) {
  if (path.empty()) return {};
  const auto& base = tc.base();
  int cur = tc.cover.index(start_lift);
  if (tc.pi_of(cur) != base.index(path.front()))
    throw InvalidInput(start_lift + " does not lie over " + path.front());
  std::vector<std::string> out{start_lift};
  for (std::size_t i = 1; i < path.size(); ++i) {
    const int from = base.index(path[i - 1]);
    const int to = base.index(path[i]);
    if (!base.has_arrow(from, to)) throw InvalidInput("no arrow " + path[i - 1] + " -> " + path[i]);
    if (!tc.complete[cur]) throw LiftEscapesTruncation("lift reaches the boundary at " + tc.cover.name(cur));
    int next = -1;
    for (int w : tc.cover.successors(cur))
      if (tc.pi_of(w) == to) {
        if (next != -1) throw CoverMismatch("two lifts of " + path[i - 1] + " -> " + path[i]);
        next = w;
      }
    if (next == -1) throw CoverMismatch("no lift of " + path[i - 1] + " -> " + path[i]);
    cur = next;
    out.push_back(tc.cover.name(cur));
  }
  return out;
}

}  // namespace meshkit
