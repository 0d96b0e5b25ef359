#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "meshkit/field.hpp"
#include "meshkit/matrix.hpp"
#include "meshkit/modulation.hpp"
#include "meshkit/translation_quiver.hpp"

namespace meshkit {

struct AlgebraArrow {
  std::string name;
  int src = -1, tgt = -1;
};

// Path algebra of a finite connected acyclic quiver.
struct HereditaryAlgebra {
  GroundField field;
  std::vector<std::string> vertices;
  std::vector<AlgebraArrow> arrows;

  int size() const { return static_cast<int>(vertices.size()); }
  int index(const std::string& v) const;
  // Sources first, ties broken by name.
  std::vector<int> topological_order() const;
};

// Validates acyclicity and connectedness.
HereditaryAlgebra make_algebra(const GroundField& field, const std::vector<std::string>& vertices,
                               const std::vector<AlgebraArrow>& arrows);

struct Representation {
  GroundField field;
  std::vector<int> dims;     // by vertex index
  std::vector<Matrix> mats;  // by arrow index, dims[tgt] x dims[src]

  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  std::string dimvector() const;  // "0111", or dot-separated when some entry exceeds 9
  friend bool operator==(const Representation& a, const Representation& b);
};

using RepPtr = std::shared_ptr<const Representation>;

void check_shapes(const HereditaryAlgebra& alg, const Representation& m);

struct ModuleMorphism {
  RepPtr source, target;
  std::vector<Matrix> comps;  // by vertex, target dim x source dim

  bool is_zero() const;
  friend bool operator==(const ModuleMorphism& a, const ModuleMorphism& b) { return a.comps == b.comps; }
};

ModuleMorphism identity_morphism(const RepPtr& m);
ModuleMorphism zero_morphism(const RepPtr& m, const RepPtr& n);
ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f);  // g after f
ModuleMorphism operator+(const ModuleMorphism& a, const ModuleMorphism& b);
ModuleMorphism operator-(const ModuleMorphism& a, const ModuleMorphism& b);
ModuleMorphism operator*(const Scalar& c, const ModuleMorphism& a);
bool is_intertwiner(const HereditaryAlgebra& alg, const ModuleMorphism& h);
std::optional<ModuleMorphism> inverse(const ModuleMorphism& h);

// Hom(M, N) as the kernel of the intertwiner system. Unknowns are the
// components flattened row-major, vertex by vertex.
struct HomSpace {
  RepPtr source, target;
  std::vector<std::size_t> offsets;
  std::size_t unknowns = 0;
  std::vector<ModuleMorphism> basis;
  std::vector<std::size_t> key_columns;  // coordinates are the entries at these columns

  std::size_t dim() const { return basis.size(); }
  Vec flatten(const ModuleMorphism& h) const;
  Vec coords(const ModuleMorphism& h) const;
  ModuleMorphism from_coords(const Vec& c) const;
};

HomSpace hom_space(const HereditaryAlgebra& alg, const RepPtr& m, const RepPtr& n);
std::vector<ModuleMorphism> hom(const HereditaryAlgebra& alg, const RepPtr& m, const RepPtr& n);

Representation direct_sum(const HereditaryAlgebra& alg, const std::vector<RepPtr>& summands);
Representation projective(const HereditaryAlgebra& alg, int v);
Representation simple(const HereditaryAlgebra& alg, int v);
std::vector<int> injective_dims(const HereditaryAlgebra& alg, int v);

// Radical of End(M) in End coordinates, via the trace form: J = {e : tr(e b) = 0
// for all b}. Needs characteristic 0 or p > dim M.
Subspace end_radical(const HereditaryAlgebra& alg, const RepPtr& m, const HomSpace& end);
bool is_indecomposable(const HereditaryAlgebra& alg, const RepPtr& m);

// "A<n>", "D<n>", "E<n>"; throws NotDynkin.
std::string dynkin_type(const HereditaryAlgebra& alg);

struct AlmostSplitSequence {
  std::string start, end;             // tau X, X
  std::vector<std::string> middles;   // sorted by name
  std::vector<std::vector<ModuleMorphism>> f, g;  // per middle, one entry per arrow copy
};

struct ARComponent {
  HereditaryAlgebra alg;
  TranslationQuiver quiver;
  std::map<std::string, RepPtr> module_of;
  std::map<std::string, std::string> aliases;  // alternative names (S<v>, I<v>) to vertex names
  std::map<ArrowKey, std::vector<ModuleMorphism>> irr_reps;
  std::map<std::string, AlmostSplitSequence> ass;

  const RepPtr& module(const std::string& name) const;
  std::string resolve(const std::string& name) const;
  // Arrow dims from irr_reps, identity mesh pairings.
  ModulatedQuiver modulated() const;
};

ARComponent knit(const HereditaryAlgebra& alg);

// rad, rad^n, and irr on a finite component, computed eagerly until the
// powers stabilize. Queries are read-only.
class RadicalTower {
 public:
  explicit RadicalTower(std::shared_ptr<const ARComponent> comp);

  const ARComponent& component() const { return *comp_; }
  const HomSpace& hom(const std::string& x, const std::string& y) const;
  Subspace rad_power(const std::string& x, const std::string& y, int n) const;
  const Subspace& rad(const std::string& x, const std::string& y) const { return levels_.at(1).at(key(x, y)); }
  // Representatives of a basis of rad/rad^2.
  std::vector<ModuleMorphism> irr_space(const std::string& x, const std::string& y) const;
  bool in_rad_power(const ModuleMorphism& h, const std::string& x, const std::string& y, int n) const;

  int stable_level() const { return static_cast<int>(levels_.size()) - 1; }
  bool nilpotent() const;

 private:
  std::pair<int, int> key(const std::string& x, const std::string& y) const;

  std::shared_ptr<const ARComponent> comp_;
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
  std::map<std::pair<int, int>, HomSpace> homs_;
  std::vector<std::map<std::pair<int, int>, Subspace>> levels_;  // levels_[n] = rad^n
};

struct AlmostSplitCertificate {
  bool composite_zero = false;
  bool f_injective = false;
  bool g_surjective = false;
  bool dims_add_up = false;
  bool right_factorization = false;  // rad(Z, X) factors through g for all Z
  bool left_factorization = false;   // rad(tau X, Z) factors through f for all Z
  bool ok() const {
    return composite_zero && f_injective && g_surjective && dims_add_up && right_factorization && left_factorization;
  }
};

struct CertifiedSequence {
  const AlmostSplitSequence* sequence = nullptr;
  AlmostSplitCertificate certificate;
};

CertifiedSequence almost_split(const RadicalTower& tower, const std::string& x);

// Arrows out of x with their irreducible representatives: a left minimal
// almost split morphism.
std::vector<std::pair<std::string, std::vector<ModuleMorphism>>> left_almost_split(const ARComponent& comp,
                                                                                    const std::string& x);

// rad^{n+1}(X, Z) is contained in the span of w u_k with w in rad^n(T_k, Z),
// u = left_almost_split(X).
bool factorization_lemma_holds(const RadicalTower& tower, const std::string& x, const std::string& z, int n);

// Split-case freeness: per target, the classes in irr are independent.
// Throws NotIrreducible if some component is not in rad \ rad^2.
bool strongly_irreducible_check(const RadicalTower& tower, const std::string& x,
                                const std::vector<std::pair<std::string, std::vector<ModuleMorphism>>>& f);

}  // namespace meshkit
