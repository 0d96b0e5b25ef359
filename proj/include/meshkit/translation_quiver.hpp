#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace meshkit {

// Vertices are opaque names; internally they are indexed in insertion order.
// Arrows are identified by (src, tgt). Duplicate arrows and loops are stored
// as given so that validate() can report them.
class TranslationQuiver {
 public:
  int add_vertex(const std::string& name, bool projective = false, bool injective = false);
  void add_arrow(const std::string& src, const std::string& tgt);
  void add_arrow(int src, int tgt);
  void set_tau(const std::string& x, const std::string& tau_x);
  void set_tau(int x, int tau_x);
  void set_projective(int v, bool on) { projective_[v] = on; }
  void set_injective(int v, bool on) { injective_[v] = on; }

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int v) const { return names_[v]; }
  int index(const std::string& name) const;  // throws InvalidInput
  std::optional<int> find(const std::string& name) const;
  bool has_vertex(const std::string& name) const { return index_.count(name) > 0; }

  bool projective(int v) const { return projective_[v]; }
  bool injective(int v) const { return injective_[v]; }
  int tau(int v) const { return tau_[v]; }  // -1 where undefined
  int tau_inverse(int v) const;

  const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }
  const std::vector<int>& successors(int v) const { return succ_[v]; }
  const std::vector<int>& predecessors(int v) const { return pred_[v]; }
  bool has_arrow(int s, int t) const;

  // Vertex indices ordered by name.
  std::vector<int> sorted_vertices() const;

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
  std::vector<bool> projective_, injective_;
  std::vector<int> tau_;
  std::vector<std::pair<int, int>> arrows_;
  std::vector<std::vector<int>> succ_, pred_;
};

struct ValidationReport {
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
};

// `region`, when given, restricts the local axioms to the flagged vertices.
ValidationReport validate(const TranslationQuiver& tq, const std::vector<bool>* region = nullptr);

struct Mesh {
  std::string end;
  std::string start;
  std::vector<std::string> middles;  // sorted by name
};

std::vector<Mesh> meshes(const TranslationQuiver& tq);

struct WithLengthResult {
  bool with_length = true;
  // On failure, two directed paths with equal endpoints and different lengths.
  std::vector<std::string> path_a, path_b;
};

WithLengthResult is_with_length(const TranslationQuiver& tq);

std::map<std::string, int> length_function(const TranslationQuiver& tq, const std::string& base);

// Full subquiver on the flagged vertices (flags and tau restricted).
TranslationQuiver full_subquiver(const TranslationQuiver& tq, const std::vector<bool>& keep);

struct QuiverMorphism {
  TranslationQuiver source;
  TranslationQuiver target;
  std::vector<int> image;  // source index -> target index

  std::string operator()(const std::string& v) const { return target.name(image[source.index(v)]); }
};

QuiverMorphism make_morphism(const TranslationQuiver& source, const TranslationQuiver& target,
                             const std::map<std::string, std::string>& vertex_map);

struct CoveringReport {
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
};

ValidationReport check_connected(const TranslationQuiver& tq);
CoveringReport check_covering(const QuiverMorphism& p, const std::vector<bool>* region = nullptr);

struct TruncatedCover {
  TranslationQuiver cover;
  QuiverMorphism pi;  // cover -> base
  std::string base_vertex;
  int radius = 0;
  std::vector<int> length;    // by cover index
  std::vector<int> distance;  // BFS walk distance from base_vertex
  std::vector<bool> complete;  // every base arrow at pi(v) has its lift at v
  std::vector<bool> interior;  // complete, neighbours complete, tau and tau^-1 present

  const TranslationQuiver& base() const { return pi.target; }
  int pi_of(int v) const { return pi.image[v]; }
  std::vector<int> fiber(int base_vertex) const;
  int length_of(const std::string& v) const { return length[cover.index(v)]; }
};

TruncatedCover universal_cover(const TranslationQuiver& tq, const std::string& base, int radius);
// The identity covering of a finite quiver with length.
TruncatedCover identity_cover(const TranslationQuiver& tq, const std::string& base);

// Paths are vertex sequences (arrows are determined by consecutive pairs).
std::vector<std::string> lift_path(const TruncatedCover& tc, const std::vector<std::string>& path,
                                   const std::string& start_lift);

}  // namespace meshkit
