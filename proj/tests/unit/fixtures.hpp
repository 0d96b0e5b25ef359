#pragma once

#include <memory>
#include <string>

#include "meshkit/io.hpp"
#include "meshkit/rep_engine.hpp"
#include "meshkit/translation_quiver.hpp"
#include "meshkit/wellbehaved.hpp"

namespace fixtures {

inline std::string data(const std::string& file) { return std::string(MESHKIT_DATA_DIR) + "/" + file; }

// S2 -> P1 -> S1 with tau(S1) = S2.
inline meshkit::TranslationQuiver a2_quiver() {
  meshkit::TranslationQuiver q;
  q.add_vertex("S2", true, false);
  q.add_vertex("P1", true, true);
  q.add_vertex("S1", false, true);
  q.add_arrow("S2", "P1");
  q.add_arrow("P1", "S1");
  q.set_tau("S1", "S2");
  return q;
}

inline std::shared_ptr<const meshkit::ARComponent> component(const std::string& alg_file) {
  return std::make_shared<const meshkit::ARComponent>(meshkit::knit(meshkit::read_alg(data(alg_file))));
}

inline meshkit::WellBehavedFunctor functor(const std::shared_ptr<const meshkit::ARComponent>& comp) {
  auto tc = std::make_shared<const meshkit::TruncatedCover>(meshkit::identity_cover(comp->quiver, comp->quiver.name(0)));
  return meshkit::build_well_behaved(tc, comp);
}

}  // namespace fixtures
