#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "meshkit/matrix.hpp"
#include "meshkit/modulation.hpp"

namespace meshkit {

// One ambient basis element: a path with one basis index per arrow.
struct PathTerm {
  std::vector<int> path;
  std::vector<int> tuple;
  Scalar coeff;
};

// k(G)(x, y): ambient space spanned by (path, tuple) pairs, the mesh-ideal
// slice in reduced echelon form, and the non-pivot columns as basis.
struct MeshHomSpace {
  GroundField field;
  int source = -1, target = -1;
  int length = -1;                       // common length of all paths, -1 without paths
  std::vector<int> between;              // vertices on paths source ~> target
  std::vector<std::vector<int>> paths;   // sorted by vertex names
  std::vector<std::vector<int>> radix;   // arrow dims along each path
  std::vector<std::size_t> offsets;      // first ambient column of each path
  std::size_t ambient_dim = 0;
  Echelon relations;
  std::vector<std::size_t> basis_columns;
  std::map<std::vector<int>, std::size_t> path_index;

  std::size_t dim() const { return basis_columns.size(); }
  // Reduces an ambient vector modulo relations and returns basis coordinates.
  Vec reduce(Vec ambient) const;
  Vec representative(const Vec& coords) const;
  std::size_t column(std::size_t path, const std::vector<int>& tuple) const;
  std::pair<std::size_t, std::vector<int>> decode(std::size_t column) const;
  std::vector<PathTerm> terms(const Vec& ambient) const;
};

struct MeshClass {
  std::shared_ptr<const MeshHomSpace> hom;
  Vec coords;
  bool is_zero() const { return meshkit::is_zero(coords); }
};

struct GradedPiece {
  std::size_t dim = 0;
  std::vector<MeshClass> basis;
};

using BasisChoices = std::map<std::string, BasisChoice>;  // mesh end -> per-middle choice

// Mesh category of a modulated quiver with length. Hom spaces are filled into
// a write-once cache, so queries may run concurrently.
class MeshCategory {
 public:
  static constexpr std::size_t kDefaultPathCap = 1000000;

  MeshCategory(ModulatedQuiver mq, std::vector<int> length, std::size_t path_cap = kDefaultPathCap,
               const BasisChoices& choices = {});

  const ModulatedQuiver& modulated() const { return mq_; }
  const TranslationQuiver& quiver() const { return mq_.quiver; }
  const GroundField& field() const { return mq_.mod.field; }
  int length(int v) const { return length_[v]; }
  const MeshElement& gamma(int z) const;

  std::shared_ptr<const MeshHomSpace> hom_basis(int x, int y) const;
  std::shared_ptr<const MeshHomSpace> hom_basis(const std::string& x, const std::string& y) const {
    return hom_basis(quiver().index(x), quiver().index(y));
  }

  MeshClass identity(int x) const;
  MeshClass zero(int x, int y) const;
  MeshClass arrow_class(int x, int y, int i) const;
  MeshClass from_coords(int x, int y, Vec coords) const;
  MeshClass compose(const MeshClass& u, const MeshClass& v) const;

  // Shortcut valid with length: full hom for n <= l(x,y), zero beyond.
  Subspace radical_power(int x, int y, int n) const;
  // Span of composites of n arrow classes with anything, built recursively.
  Subspace radical_power_direct(int x, int y, int n) const;
  GradedPiece graded_piece(int x, int y, int n) const;

 private:
  std::shared_ptr<const MeshHomSpace> build(int x, int y) const;

  ModulatedQuiver mq_;
  std::vector<int> length_;
  std::size_t path_cap_;
  std::map<int, MeshElement> gammas_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, int>, std::shared_ptr<const MeshHomSpace>> cache_;
};

}  // namespace meshkit
