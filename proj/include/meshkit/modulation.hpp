#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "meshkit/field.hpp"
#include "meshkit/matrix.hpp"
#include "meshkit/translation_quiver.hpp"

namespace meshkit {

using ArrowKey = std::pair<std::string, std::string>;  // (src, tgt)
using MeshKey = std::pair<std::string, std::string>;   // (end x, middle y)

// kappa_x is the ground field at every vertex. pairings[(x, y)] has shape
// dims(y -> x) x dims(tau x -> y); entry (b, a) pairs the b-th basis element of
// M(y, x) with the a-th basis element of M(tau x, y).
struct SplitModulation {
  GroundField field;
  std::map<ArrowKey, int> dims;
  std::map<MeshKey, Matrix> pairings;

  int dim(const std::string& s, const std::string& t) const;
};

struct ModulatedQuiver {
  TranslationQuiver quiver;
  SplitModulation mod;
  std::vector<bool> region;  // vertices whose meshes are in force (all for finite quivers)

  int dim(int s, int t) const { return mod.dim(quiver.name(s), quiver.name(t)); }
  const Matrix& pairing(int x, int y) const;
};

// Missing dims default to 1, missing pairings to identity matrices. `region`
// restricts validation to part of a truncated cover.
ModulatedQuiver attach_split_modulation(const TranslationQuiver& tq, const GroundField& field,
                                        const std::map<ArrowKey, int>& dims,
                                        const std::map<MeshKey, Matrix>& pairings = {},
                                        const std::vector<bool>* region = nullptr);

SplitModulation pull_back_modulation(const TruncatedCover& tc, const SplitModulation& mod);
ModulatedQuiver modulated_cover(const TruncatedCover& tc, const SplitModulation& mod);

// B* with B * P * B*^T = I.
Matrix dual_basis(const Matrix& pairing, const Matrix& basis_change);

// gamma_x as one coefficient matrix per middle: block(y)(a, b) is the
// coefficient of (a-th basis element of M(tau x, y)) (x) (b-th of M(y, x)).
struct MeshElement {
  std::string end;
  std::string start;
  std::vector<std::pair<std::string, Matrix>> blocks;  // sorted by middle

  struct Term {
    std::string middle;
    int i, j;
    Scalar coeff;
  };
  std::vector<Term> terms() const;  // nonzero entries
  const Matrix& block(const std::string& middle) const;
  friend bool operator==(const MeshElement& a, const MeshElement& b);
};

using BasisChoice = std::map<std::string, Matrix>;  // middle -> invertible B

MeshElement mesh_element(const ModulatedQuiver& mq, const std::string& x, const BasisChoice& basis_choice = {});

// Sum over middles of u * F(y)^T G(y); F(y) rows are the classes f_{y,j} in
// M(tau x, y), G(y) rows the classes g_{y,j} in M(y, x).
MeshElement mesh_element_from_sequence(const ModulatedQuiver& mq, const std::string& x,
                                       const std::map<std::string, Matrix>& f_bar,
                                       const std::map<std::string, Matrix>& g_bar, const Scalar& u_bar);

}  // namespace meshkit
