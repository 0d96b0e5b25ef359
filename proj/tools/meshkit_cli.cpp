// meshkit command-line front end.
#include <omp.h>

#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "meshkit/errors.hpp"
#include "meshkit/io.hpp"
#include "meshkit/mesh_category.hpp"
#include "meshkit/rep_engine.hpp"
#include "meshkit/translation_quiver.hpp"
#include "meshkit/wellbehaved.hpp"

using namespace meshkit;

namespace {

struct RunConfig {
  std::string field_text;
  int radius = 6;
  std::size_t path_cap = MeshCategory::kDefaultPathCap;
  bool no_oracle = false;
  int threads = 0;

  std::optional<GroundField> field() const {
    if (field_text.empty()) return std::nullopt;
    return GroundField::parse(field_text);
  }
};

class ConfigError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
  return s;
}

int cmd_check_quiver(const RunConfig& cfg, const std::string& file) {
  const TqFile f = read_tq(file);
  const auto& q = f.quiver;
  std::cout << "vertices " << q.size() << "\narrows " << q.arrows().size() << "\n";
  auto rep = validate(q);
  for (const auto& i : check_connected(q).issues) rep.issues.push_back(i);
  if (rep.ok()) {
    std::cout << "meshes " << meshes(q).size() << "\n";
    try {
      attach_split_modulation(q, cfg.field().value_or(GroundField::rationals()), f.dims);
    } catch (const Error& e) {
      rep.issues.push_back(std::string("modulation: ") + e.what());
    }
  }
  for (const auto& i : rep.issues) std::cout << "issue: " << i << "\n";
  std::cout << "valid " << (rep.ok() ? "yes" : "no") << "\n";
  const auto wl = is_with_length(q);
  std::cout << "with-length " << (wl.with_length ? "yes" : "no") << "\n";
  if (!wl.with_length) std::cout << "witness " << join(wl.path_a, " > ") << " | " << join(wl.path_b, " > ") << "\n";
  return rep.ok() ? 0 : 1;
}

int cmd_knit(const RunConfig& cfg, const std::string& alg_file, const std::string& outdir) {
  const HereditaryAlgebra alg = read_alg(alg_file, cfg.field());
  const std::string type = dynkin_type(alg);
  const ARComponent comp = knit(alg);
  export_component(outdir, comp);
  std::cout << "type " << type << "\nfield " << alg.field.name() << "\nmodules " << comp.quiver.size() << "\narrows "
            << comp.irr_reps.size() << "\nmeshes " << comp.ass.size() << "\n";
  for (int v : comp.quiver.sorted_vertices())
    std::cout << "module " << comp.quiver.name(v) << " " << comp.module_of.at(comp.quiver.name(v))->dimvector() << "\n";
  return 0;
}

int cmd_cover(const RunConfig& cfg, const std::string& tq_file, const std::string& base, const std::string& outdir) {
  const TqFile f = read_tq(tq_file);
  const TruncatedCover tc = universal_cover(f.quiver, base, cfg.radius);
  export_cover(outdir, tc, f.dims);
  const auto interior = std::count(tc.interior.begin(), tc.interior.end(), true);
  std::cout << "cover vertices " << tc.cover.size() << " arrows " << tc.cover.arrows().size() << "\n";
  std::cout << "radius " << tc.radius << " interior " << interior << "\n";
  const auto rep = check_covering(tc.pi, &tc.interior);
  for (const auto& i : rep.issues) std::cout << "issue: " << i << "\n";
  std::cout << "covering " << (rep.ok() ? "ok" : "fails") << "\n";
  return rep.ok() ? 0 : 1;
}

int cmd_mesh_hom(const RunConfig& cfg, const std::string& dir, const std::string& x, const std::string& y) {
  const CoverDir cd = import_cover(dir);
  const GroundField field = cfg.field().value_or(GroundField::rationals());
  const auto base = attach_split_modulation(cd.cover.base(), field, cd.base_dims);
  const MeshCategory mc(modulated_cover(cd.cover, base.mod), cd.cover.length, cfg.path_cap);
  const int xi = cd.cover.cover.index(x), yi = cd.cover.cover.index(y);
  const auto h = mc.hom_basis(xi, yi);
  std::cout << "hom " << x << " " << y << "\npaths " << h->paths.size() << "\ndim " << h->dim() << "\n";
  const int top = std::max(h->length, 0) + 1;
  std::cout << "n rad shortcut direct graded\n";
  for (int n = 0; n <= top; ++n)
    std::cout << "n " << n << " " << mc.radical_power(xi, yi, n).dim() << " " << mc.radical_power_direct(xi, yi, n).dim()
              << " " << mc.graded_piece(xi, yi, n).dim << "\n";
  return 0;
}

std::string map_text(const MapReport& r) {
  return std::to_string(r.source_dim) + "/" + std::to_string(r.target_dim) + " rank " + std::to_string(r.rank);
}

struct Pipeline {
  std::shared_ptr<const ARComponent> comp;
  std::shared_ptr<const TruncatedCover> tc;
  WellBehavedFunctor F;
};

Pipeline pipeline(const RunConfig& cfg, const std::string& alg_file) {
  const HereditaryAlgebra alg = read_alg(alg_file, cfg.field());
  Pipeline p;
  p.comp = std::make_shared<const ARComponent>(knit(alg));
  p.tc = std::make_shared<const TruncatedCover>(universal_cover(p.comp->quiver, p.comp->quiver.name(0), cfg.radius));
  p.F = build_well_behaved(p.tc, p.comp, cfg.path_cap);
  return p;
}

int cmd_verify_covering(const RunConfig& cfg, const std::string& alg_file) {
  const Pipeline p = pipeline(cfg, alg_file);
  const auto& F = p.F;
  const auto& q = F.quiver();
  std::cout << "type " << dynkin_type(p.comp->alg) << "\nfield " << p.comp->alg.field.name() << "\n";
  std::cout << "cover vertices " << q.size() << " interior "
            << std::count(p.tc->interior.begin(), p.tc->interior.end(), true) << "\n";
  std::size_t meshes_total = 0, meshes_zero = 0;
  for (int v : q.sorted_vertices()) {
    if (!p.tc->interior[v] || q.tau(v) == -1) continue;
    ++meshes_total;
    if (F.mesh_image(v).is_zero()) ++meshes_zero;
  }
  std::cout << "mesh-relations zero " << meshes_zero << "/" << meshes_total << "\n";
  const bool gs = check_generalized_standard(*F.tower);
  std::cout << "generalized-standard " << (gs ? "yes" : "no") << "\n";
  const auto results = verify_all(F, F.tower->stable_level());
  std::size_t graded = 0, bij = 0, inj_total = 0, inj = 0, surj = 0, undecidable = 0;
  for (const auto& r : results) {
    const std::string xy = q.name(r.x) + " " + q.name(r.y);
    if (!r.decidable) {
      ++undecidable;
      std::cout << "undecidable " << xy << " " << r.n << " radius " << r.required_radius << "\n";
      continue;
    }
    const auto& c = r.report.covariant;
    const auto& d = r.report.contravariant;
    if (r.n >= 0) {
      ++graded;
      const bool ok = c.bijective() && d.bijective();
      bij += ok;
      if (c.source_dim || c.target_dim || d.source_dim || d.target_dim)
        std::cout << "graded " << xy << " " << r.n << " cov " << map_text(c) << " contra " << map_text(d) << " "
                  << (ok ? "ok" : "FAIL") << "\n";
    } else {
      ++inj_total;
      const bool i = c.injective() && d.injective();
      const bool s = c.surjective() && d.surjective();
      inj += i;
      surj += s;
      if (c.source_dim || c.target_dim)
        std::cout << "hom " << xy << " cov " << map_text(c) << " contra " << map_text(d) << " injective "
                  << (i ? "yes" : "no") << " surjective " << (s ? "yes" : "no") << "\n";
    }
  }
  std::cout << "summary graded-bijective " << bij << "/" << graded << " injective " << inj << "/" << inj_total
            << " surjective " << surj << "/" << inj_total << " undecidable " << undecidable << "\n";
  const bool ok = meshes_zero == meshes_total && bij == graded && inj == inj_total && (!gs || surj == inj_total);
  std::cout << "verified " << (ok ? "yes" : "no") << "\n";
  return ok ? 0 : 1;
}

int cmd_compose_degree(const RunConfig& cfg, const std::string& alg_file, const std::string& spec) {
  std::istringstream in(spec);
  std::vector<std::string> tok;
  for (std::string t; in >> t;) tok.push_back(t);
  std::optional<std::size_t> perturb_at;
  if (tok.size() >= 2 && tok[tok.size() - 2] == "perturb") {
    try {
      perturb_at = std::stoul(tok.back());
    } catch (const std::exception&) {
      throw ConfigError("perturb needs an index");
    }
    tok.resize(tok.size() - 2);
  }
  std::vector<std::string> path;
  for (std::size_t i = 0; i < tok.size(); ++i) {
    if (i % 2 == 1) {
      if (tok[i] != ">") throw ConfigError("path spec: expected '>' between modules");
      continue;
    }
    path.push_back(tok[i]);
  }
  if (path.size() < 2 || tok.size() % 2 == 0) throw ConfigError("path spec: need X1 > X2 [> ...] [perturb i]");
  const std::size_t n = path.size() - 1;
  if (perturb_at && (*perturb_at < 1 || *perturb_at > n)) throw ConfigError("perturb index out of range");

  const Pipeline p = pipeline(cfg, alg_file);
  const ARComponent& comp = *p.comp;
  std::vector<ModuleMorphism> h;
  for (auto& name : path) name = comp.resolve(name);
  for (std::size_t i = 0; i < n; ++i) {
    auto it = comp.irr_reps.find({path[i], path[i + 1]});
    if (it == comp.irr_reps.end()) throw InvalidInput("no arrow " + path[i] + " -> " + path[i + 1]);
    h.push_back(it->second.front());
  }
  if (perturb_at) {
    const std::size_t i = *perturb_at - 1;
    ModuleMorphism ph = perturb(*p.F.tower, path[i], path[i + 1], h[i]);
    std::cout << "perturb " << *perturb_at << " " << (ph == h[i] ? "vacuous" : "applied") << "\n";
    h[i] = ph;
  }
  const DegreeVerdict v = composite_degree(p.F, path, h, !cfg.no_oracle);
  print_verdict(std::cout, comp.alg, path, v);
  return v.oracle_agrees.value_or(true) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"meshkit: translation quivers, mesh categories, coverings, and AR components"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--field", cfg.field_text, "ground field: q or f<p>");
  app.add_option("--radius", cfg.radius, "cover truncation radius")->check(CLI::NonNegativeNumber);
  app.add_option("--path-cap", cfg.path_cap, "maximum number of enumerated paths")->check(CLI::PositiveNumber);
  app.add_flag("--no-oracle", cfg.no_oracle, "skip the rad^n membership oracle");
  app.add_option("--threads", cfg.threads, "OpenMP threads for verification")->check(CLI::NonNegativeNumber);

  std::string a, b, c, d;
  std::function<int()> run;
  auto* check = app.add_subcommand("check-quiver", "validate a .tq file");
  check->add_option("file", a)->required();
  check->callback([&] { run = [&] { return cmd_check_quiver(cfg, a); }; });
  auto* knit_cmd = app.add_subcommand("knit", "knit the AR component of a Dynkin .alg");
  knit_cmd->add_option("alg", a)->required();
  knit_cmd->add_option("outdir", b)->required();
  knit_cmd->callback([&] { run = [&] { return cmd_knit(cfg, a, b); }; });
  auto* cover = app.add_subcommand("cover", "truncated universal cover of a .tq file");
  cover->add_option("tq", a)->required();
  cover->add_option("base", b)->required();
  cover->add_option("outdir", c)->required();
  cover->callback([&] { run = [&] { return cmd_cover(cfg, a, b, c); }; });
  auto* mesh_hom = app.add_subcommand("mesh-hom", "hom dimensions in the mesh category of a cover");
  mesh_hom->add_option("coverdir", a)->required();
  mesh_hom->add_option("x", b)->required();
  mesh_hom->add_option("y", c)->required();
  mesh_hom->callback([&] { run = [&] { return cmd_mesh_hom(cfg, a, b, c); }; });
  auto* verify = app.add_subcommand("verify-covering", "build F and check the covering properties");
  verify->add_option("alg", a)->required();
  verify->callback([&] { run = [&] { return cmd_verify_covering(cfg, a); }; });
  auto* degree = app.add_subcommand("compose-degree", "decide whether a composite of irreducibles lies in rad^{n+1}");
  degree->add_option("alg", a)->required();
  degree->add_option("path", d, "X1 > X2 > ... > Xn+1 [perturb i]")->required();
  degree->callback([&] { run = [&] { return cmd_compose_degree(cfg, a, d); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    if (cfg.threads > 0) omp_set_num_threads(cfg.threads);
    try {
      cfg.field();
    } catch (const Error& e) {
      throw ConfigError(e.what());
    }
    return run();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cout << "error: " << e.what() << "\n";
    return 1;
  }
}
