#include "meshkit/modulation.hpp"

#include <algorithm>

#include "meshkit/errors.hpp"

namespace meshkit {

int SplitModulation::dim(const std::string& s, const std::string& t) const {
  auto it = dims.find({s, t});
  if (it == dims.end()) throw InvalidInput("no arrow " + s + " -> " + t);
  return it->second;
}

const Matrix& ModulatedQuiver::pairing(int x, int y) const {
  auto it = mod.pairings.find({quiver.name(x), quiver.name(y)});
  if (it == mod.pairings.end())
    throw InvalidInput("no mesh pairing at (" + quiver.name(x) + ", " + quiver.name(y) + ")");
  return it->second;
}

ModulatedQuiver attach_split_modulation(const TranslationQuiver& tq, const GroundField& field,
                                        const std::map<ArrowKey, int>& dims,
                                        const std::map<MeshKey, Matrix>& pairings,
                                        const std::vector<bool>* region) {
  auto rep = validate(tq, region);
  if (!rep.ok()) throw InvalidInput("not a translation quiver: " + rep.issues.front());
  ModulatedQuiver mq;
  mq.quiver = tq;
  mq.mod.field = field;
  mq.region = region ? *region : std::vector<bool>(tq.size(), true);
  for (const auto& [key, d] : dims) {
    auto s = tq.find(key.first), t = tq.find(key.second);
    if (!s || !t || !tq.has_arrow(*s, *t)) throw InvalidInput("dim given for missing arrow " + key.first + " -> " + key.second);
  }
  for (auto [s, t] : tq.arrows()) {
    ArrowKey key{tq.name(s), tq.name(t)};
    auto it = dims.find(key);
    const int d = it == dims.end() ? 1 : it->second;
    if (d < 1) throw InvalidInput("dim of " + key.first + " -> " + key.second + " must be positive");
    mq.mod.dims[key] = d;
  }
  for (const auto& [key, m] : pairings) {
    auto x = tq.find(key.first), y = tq.find(key.second);
    if (!x || !y || tq.tau(*x) == -1 || !tq.has_arrow(*y, *x))
      throw InvalidInput("pairing given for a non-mesh pair (" + key.first + ", " + key.second + ")");
  }
  for (int x = 0; x < tq.size(); ++x) {
    const int t = tq.tau(x);
    if (t == -1) continue;
    for (int y : tq.predecessors(x)) {
      if (!tq.has_arrow(t, y)) continue;
      const int d_out = mq.dim(y, x), d_in = mq.dim(t, y);
      const MeshKey key{tq.name(x), tq.name(y)};
      if (d_out != d_in)
        throw DimMismatch("(" + key.first + ", " + key.second + "): dims " + std::to_string(d_out) + " and " +
                          std::to_string(d_in));
      auto it = pairings.find(key);
      if (it == pairings.end()) {
        mq.mod.pairings[key] = Matrix::identity(field, d_out);
        continue;
      }
      const Matrix& p = it->second;
      if (p.rows() != static_cast<std::size_t>(d_out) || p.cols() != static_cast<std::size_t>(d_in))
        throw DimMismatch("pairing at (" + key.first + ", " + key.second + ") has shape " +
                          std::to_string(p.rows()) + "x" + std::to_string(p.cols()));
      if (!inverse(p)) throw DegeneratePairing("(" + key.first + ", " + key.second + "): " + p.dump());
      mq.mod.pairings[key] = p;
    }
  }
  return mq;
}

SplitModulation pull_back_modulation(const TruncatedCover& tc, const SplitModulation& mod) {
  SplitModulation out;
  out.field = mod.field;
  const auto& cq = tc.cover;
  const auto& bq = tc.base();
  auto bname = [&](int v) { return bq.name(tc.pi_of(v)); };
  for (auto [s, t] : cq.arrows()) out.dims[{cq.name(s), cq.name(t)}] = mod.dim(bname(s), bname(t));
  for (int x = 0; x < cq.size(); ++x) {
    const int t = cq.tau(x);
    if (t == -1) continue;
    for (int y : cq.predecessors(x)) {
      if (!cq.has_arrow(t, y)) continue;
      auto it = mod.pairings.find({bname(x), bname(y)});
      if (it == mod.pairings.end()) throw CoverMismatch("base lacks pairing at (" + bname(x) + ", " + bname(y) + ")");
      out.pairings[{cq.name(x), cq.name(y)}] = it->second;
    }
  }
  return out;
}

ModulatedQuiver modulated_cover(const TruncatedCover& tc, const SplitModulation& mod) {
  auto pulled = pull_back_modulation(tc, mod);
  return attach_split_modulation(tc.cover, mod.field, pulled.dims, pulled.pairings, &tc.interior);
}

Matrix dual_basis(const Matrix& pairing, const Matrix& basis_change) {
  if (!pairing.is_square() || !basis_change.is_square() || pairing.rows() != basis_change.rows())
    throw DimMismatch("dual_basis: incompatible shapes");
  auto inv = inverse(basis_change * pairing);
  if (!inv) throw InvalidInput("dual_basis: singular pairing or basis change");
  return inv->transpose();
}

std::vector<MeshElement::Term> MeshElement::terms() const {
  std::vector<Term> out;
  for (const auto& [y, c] : blocks)
    for (std::size_t a = 0; a < c.rows(); ++a)
      for (std::size_t b = 0; b < c.cols(); ++b)
        if (!c(a, b).is_zero()) out.push_back({y, static_cast<int>(a), static_cast<int>(b), c(a, b)});
  return out;
}

const Matrix& MeshElement::block(const std::string& middle) const {
  for (const auto& [y, c] : blocks)
    if (y == middle) return c;
  throw InvalidInput(middle + " is not a middle of the mesh at " + end);
}

bool operator==(const MeshElement& a, const MeshElement& b) {
  return a.end == b.end && a.start == b.start && a.blocks == b.blocks;
}

namespace {

std::vector<int> middles_by_name(const TranslationQuiver& q, int x) {
  std::vector<int> ys;
  for (int y : q.predecessors(x))
    if (q.has_arrow(q.tau(x), y)) ys.push_back(y);
  std::sort(ys.begin(), ys.end(), [&](int a, int b) { return q.name(a) < q.name(b); });
  return ys;
}

int non_projective(const ModulatedQuiver& mq, const std::string& x) {
  const int xi = mq.quiver.index(x);
  if (mq.quiver.tau(xi) == -1) throw InvalidInput(x + " has no mesh (projective or outside the cover)");
  return xi;
}

}  // namespace

MeshElement mesh_element(const ModulatedQuiver& mq, const std::string& x, const BasisChoice& basis_choice) {
  const auto& q = mq.quiver;
  const int xi = non_projective(mq, x);
  const GroundField f = mq.mod.field;
  MeshElement g{x, q.name(q.tau(xi)), {}};
  for (const auto& [y, b] : basis_choice)
    if (!q.find(y) || !q.has_arrow(q.index(y), xi)) throw InvalidInput("basis choice for non-middle " + y);
  for (int y : middles_by_name(q, xi)) {
    const std::size_t d = mq.dim(y, xi);
    const Matrix& p = mq.pairing(xi, y);
    auto it = basis_choice.find(q.name(y));
    const Matrix b = it == basis_choice.end() ? Matrix::identity(f, d) : it->second;
    if (b.rows() != d || b.cols() != d) throw DimMismatch("basis choice at " + q.name(y));
    if (!inverse(b)) throw InvalidInput("singular basis choice at " + q.name(y));
    const Matrix bs = dual_basis(p, b);
    // gamma = sum_i u_i^* (x) u_i with u_i = sum_b B(i,b) e'_b, u_i^* = sum_a B*(i,a) e_a.
    Matrix c(f, d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t bb = 0; bb < d; ++bb) c(a, bb) += bs(i, a) * b(i, bb);
    g.blocks.emplace_back(q.name(y), std::move(c));
  }
  return g;
}

MeshElement mesh_element_from_sequence(const ModulatedQuiver& mq, const std::string& x,
                                       const std::map<std::string, Matrix>& f_bar,
                                       const std::map<std::string, Matrix>& g_bar, const Scalar& u_bar) {
  const auto& q = mq.quiver;
  const int xi = non_projective(mq, x);
  if (u_bar.is_zero()) throw InvalidInput("comparison scalar must be invertible");
  MeshElement g{x, q.name(q.tau(xi)), {}};
  const auto ys = middles_by_name(q, xi);
  if (f_bar.size() != ys.size() || g_bar.size() != ys.size()) throw DimMismatch("sequence does not match the mesh at " + x);
  for (int y : ys) {
    const std::size_t d = mq.dim(y, xi);
    auto fi = f_bar.find(q.name(y));
    auto gi = g_bar.find(q.name(y));
    if (fi == f_bar.end() || gi == g_bar.end()) throw DimMismatch("missing middle " + q.name(y));
    const Matrix& F = fi->second;
    const Matrix& G = gi->second;
    if (F.rows() != d || G.rows() != d || F.cols() != d || G.cols() != d)
      throw DimMismatch("coefficient shapes at middle " + q.name(y));
    g.blocks.emplace_back(q.name(y), u_bar * (F.transpose() * G));
  }
  return g;
}

}  // namespace meshkit
