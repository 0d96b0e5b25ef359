#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "meshkit/modulation.hpp"
#include "meshkit/rep_engine.hpp"
#include "meshkit/translation_quiver.hpp"
#include "meshkit/wellbehaved.hpp"

namespace meshkit {

struct TqFile {
  TranslationQuiver quiver;
  std::map<ArrowKey, int> dims;
};

TqFile parse_tq(std::istream& in);
TqFile read_tq(const std::string& path);
void write_tq(std::ostream& out, const TranslationQuiver& tq, const std::map<ArrowKey, int>& dims = {});

struct AlgFile {
  std::optional<GroundField> field;
  std::vector<std::string> vertices;
  std::vector<AlgebraArrow> arrows;
};

AlgFile parse_alg(std::istream& in);
// `field_override` wins over the file's `field` line; rationals by default.
HereditaryAlgebra read_alg(const std::string& path, const std::optional<GroundField>& field_override = std::nullopt);

// pairing <end> <middle> <row-major entries>; the matrix is square.
std::map<MeshKey, Matrix> parse_pairings(std::istream& in, const GroundField& field);

// "name: rows x cols; entries"
std::string dump_line(const std::string& name, const Matrix& m);
void write_morphism(std::ostream& out, const std::string& label, const HereditaryAlgebra& alg, const ModuleMorphism& h);

// component.tq, modules.txt, irreducibles.txt, sequences.txt
void export_component(const std::string& dir, const ARComponent& comp);

// base.tq, cover.tq, pi.txt, meta.txt
void export_cover(const std::string& dir, const TruncatedCover& tc, const std::map<ArrowKey, int>& base_dims);
struct CoverDir {
  TruncatedCover cover;
  std::map<ArrowKey, int> base_dims;
};
CoverDir import_cover(const std::string& dir);

void print_verdict(std::ostream& out, const HereditaryAlgebra& alg, const std::vector<std::string>& path,
                   const DegreeVerdict& v);

}  // namespace meshkit
