#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "meshkit/mesh_category.hpp"
#include "meshkit/rep_engine.hpp"
#include "meshkit/translation_quiver.hpp"

namespace meshkit {

// Functor from the mesh category of a truncated cover to ind of a knitted
// component. Vertices go to the modules of their images; every cover arrow
// carries one morphism per basis element of its bimodule.
struct WellBehavedFunctor {
  std::shared_ptr<const TruncatedCover> cover;
  std::shared_ptr<const ARComponent> comp;
  std::shared_ptr<const RadicalTower> tower;
  std::shared_ptr<const MeshCategory> mesh;
  std::map<std::pair<int, int>, std::vector<ModuleMorphism>> on_arrows;  // cover indices

  const TranslationQuiver& quiver() const { return cover->cover; }
  std::string module_name(int x) const { return cover->base().name(cover->pi_of(x)); }
  const RepPtr& on_vertex(int x) const { return comp->module(module_name(x)); }
  ModuleMorphism apply(const MeshClass& c) const;
  // Sum over the mesh at x of F(beta) F(alpha); zero for a functor.
  ModuleMorphism mesh_image(int x) const;
  // Vertices whose whole mesh lies in the cover.
  bool mesh_present(int x) const;
};

using Seed = std::map<std::string, std::vector<ModuleMorphism>>;  // target cover vertex -> images

WellBehavedFunctor build_well_behaved(std::shared_ptr<const TruncatedCover> tc, std::shared_ptr<const ARComponent> comp,
                                      std::size_t path_cap = MeshCategory::kDefaultPathCap);
// Arrows out of x carry the seed morphisms; missing targets take the knitted
// representatives.
WellBehavedFunctor seeded_build(std::shared_ptr<const TruncatedCover> tc, std::shared_ptr<const ARComponent> comp,
                                const std::string& x, const Seed& seed,
                                std::size_t path_cap = MeshCategory::kDefaultPathCap);

struct MapReport {
  std::size_t source_dim = 0;  // sum over the fiber
  std::size_t target_dim = 0;
  std::size_t rank = 0;
  bool injective() const { return rank == source_dim; }
  bool surjective() const { return rank == target_dim; }
  bool bijective() const { return injective() && surjective(); }
};

struct CoveringReport2 {
  MapReport covariant, contravariant;
};

CoveringReport2 verify_graded_covering(const WellBehavedFunctor& F, int x, int y, int n);
CoveringReport2 verify_injectivity(const WellBehavedFunctor& F, int x, int y);

struct TripleResult {
  int x = -1, y = -1, n = -1;  // n = -1 for the injectivity check
  bool decidable = false;
  int required_radius = 0;
  CoveringReport2 report;
};

// All (x, y, n) with x, y interior and 0 <= n <= max_n, then (x, y) for
// injectivity. Results are ordered by index regardless of scheduling.
std::vector<TripleResult> verify_all(const WellBehavedFunctor& F, int max_n);
std::vector<TripleResult> verify_all_serial(const WellBehavedFunctor& F, int max_n);

bool check_generalized_standard(const RadicalTower& tower);

enum class DegreeKind { NotInRadNPlus1, InRadNPlus1Nonzero, Zero };
std::string to_string(DegreeKind k);

struct Witness {
  std::vector<std::size_t> indices;  // positions where eps_i = h_i - f_i
  std::vector<ModuleMorphism> f, eps;
};

struct DegreeVerdict {
  DegreeKind kind = DegreeKind::Zero;
  std::vector<std::string> lift;
  std::vector<Vec> arrow_coords;  // h_i modulo rad^2 in the arrow-image basis
  std::optional<MeshClass> product;
  std::vector<std::string> product_terms;  // coeff*path[tuple]
  ModuleMorphism composite;
  std::optional<Witness> witness;
  bool sectional = false;
  std::optional<bool> oracle_agrees;  // empty when the oracle is skipped
};

bool is_sectional(const ARComponent& comp, const std::vector<std::string>& path);

// path: module names X_1 .. X_{n+1}; h[i]: X_{i+1} -> X_{i+2} (0-based).
DegreeVerdict composite_degree(const WellBehavedFunctor& F, const std::vector<std::string>& path,
                               const std::vector<ModuleMorphism>& h, bool oracle = true);
Witness decompose_witness(const WellBehavedFunctor& F, const std::vector<std::string>& path,
                          const std::vector<ModuleMorphism>& h);
// First subset, by size then lexicographically, whose mixed product is
// nonzero; empty if h_n...h_1 = f_n...f_1.
std::optional<Witness> find_witness(const std::vector<ModuleMorphism>& f, const std::vector<ModuleMorphism>& h);

// Adds c times the first basis element of rad^2(X, Y) with c drawn from a
// fixed-seed generator. Returns h unchanged when rad^2(X, Y) = 0.
ModuleMorphism perturb(const RadicalTower& tower, const std::string& x, const std::string& y, const ModuleMorphism& h,
                       std::uint32_t seed = 20240601);

}  // namespace meshkit
