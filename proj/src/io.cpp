#include "meshkit/io.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "meshkit/errors.hpp"

namespace meshkit {

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::string s = line.substr(0, line.find('#'));
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path.string());
  return out;
}

int positive_int(int line, const std::string& text) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used != text.size() || v < 1) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected a positive integer, got '" + text + "'");
  }
}

}  // namespace

TqFile parse_tq(std::istream& in) {
  TqFile f;
  int ln = 0;
  for (std::string line; std::getline(in, line);) {
    ++ln;
    const auto t = tokens(line);
    if (t.empty()) continue;
    auto need_vertex = [&](const std::string& v) {
      if (!f.quiver.has_vertex(v)) throw ParseError(ln, "unknown vertex " + v);
    };
    if (t[0] == "vertex") {
      if (t.size() < 2) throw ParseError(ln, "vertex needs a name");
      if (f.quiver.has_vertex(t[1])) throw ParseError(ln, "duplicate vertex " + t[1]);
      bool proj = false, inj = false;
      for (std::size_t i = 2; i < t.size(); ++i) {
        if (t[i] == "proj") proj = true;
        else if (t[i] == "inj") inj = true;
        else throw ParseError(ln, "unknown vertex flag " + t[i]);
      }
      f.quiver.add_vertex(t[1], proj, inj);
    } else if (t[0] == "arrow") {
      if (t.size() < 3 || t.size() > 4) throw ParseError(ln, "arrow takes <src> <tgt> [dim=<n>]");
      need_vertex(t[1]);
      need_vertex(t[2]);
      int d = 1;
      if (t.size() == 4) {
        if (t[3].rfind("dim=", 0) != 0) throw ParseError(ln, "unknown arrow attribute " + t[3]);
        d = positive_int(ln, t[3].substr(4));
      }
      f.quiver.add_arrow(t[1], t[2]);
      f.dims[{t[1], t[2]}] = d;
    } else if (t[0] == "tau") {
      if (t.size() != 4 || t[2] != "->") throw ParseError(ln, "tau takes <nonproj> -> <noninj>");
      need_vertex(t[1]);
      need_vertex(t[3]);
      if (f.quiver.tau(f.quiver.index(t[1])) != -1) throw ParseError(ln, "tau of " + t[1] + " given twice");
      f.quiver.set_tau(t[1], t[3]);
    } else {
      throw ParseError(ln, "unknown keyword " + t[0]);
    }
  }
  return f;
}

TqFile read_tq(const std::string& path) {
  auto in = open_in(path);
  return parse_tq(in);
}

void write_tq(std::ostream& out, const TranslationQuiver& tq, const std::map<ArrowKey, int>& dims) {
  for (int v : tq.sorted_vertices()) {
    out << "vertex " << tq.name(v);
    if (tq.projective(v)) out << " proj";
    if (tq.injective(v)) out << " inj";
    out << "\n";
  }
  std::vector<ArrowKey> arrows;
  for (auto [s, t] : tq.arrows()) arrows.push_back({tq.name(s), tq.name(t)});
  std::sort(arrows.begin(), arrows.end());
  arrows.erase(std::unique(arrows.begin(), arrows.end()), arrows.end());
  for (const auto& a : arrows) {
    out << "arrow " << a.first << " " << a.second;
    auto it = dims.find(a);
    if (it != dims.end() && it->second != 1) out << " dim=" << it->second;
    out << "\n";
  }
  for (int v : tq.sorted_vertices())
    if (tq.tau(v) != -1) out << "tau " << tq.name(v) << " -> " << tq.name(tq.tau(v)) << "\n";
}

AlgFile parse_alg(std::istream& in) {
  AlgFile f;
  int ln = 0;
  for (std::string line; std::getline(in, line);) {
    ++ln;
    const auto t = tokens(line);
    if (t.empty()) continue;
    auto vertex_index = [&](const std::string& v) {
      auto it = std::find(f.vertices.begin(), f.vertices.end(), v);
      if (it == f.vertices.end()) throw ParseError(ln, "unknown vertex " + v);
      return static_cast<int>(it - f.vertices.begin());
    };
    if (t[0] == "field") {
      try {
        if (t.size() == 2 && (t[1] == "Q" || t[1] == "q")) f.field = GroundField::rationals();
        else if (t.size() == 3 && (t[1] == "F" || t[1] == "f")) f.field = GroundField::parse("F" + t[2]);
        else throw ParseError(ln, "field takes Q or F <p>");
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        throw ParseError(ln, e.what());
      }
    } else if (t[0] == "vertex") {
      if (t.size() != 2) throw ParseError(ln, "vertex takes one name");
      if (std::find(f.vertices.begin(), f.vertices.end(), t[1]) != f.vertices.end())
        throw ParseError(ln, "duplicate vertex " + t[1]);
      f.vertices.push_back(t[1]);
    } else if (t[0] == "arrow") {
      if (t.size() != 6 || t[2] != ":" || t[4] != "->") throw ParseError(ln, "arrow takes <name> : <src> -> <tgt>");
      f.arrows.push_back({t[1], vertex_index(t[3]), vertex_index(t[5])});
    } else {
      throw ParseError(ln, "unknown keyword " + t[0]);
    }
  }
  return f;
}

HereditaryAlgebra read_alg(const std::string& path, const std::optional<GroundField>& field_override) {
  auto in = open_in(path);
  const AlgFile f = parse_alg(in);
  const GroundField field = field_override ? *field_override : f.field.value_or(GroundField::rationals());
  return make_algebra(field, f.vertices, f.arrows);
}

std::map<MeshKey, Matrix> parse_pairings(std::istream& in, const GroundField& field) {
  std::map<MeshKey, Matrix> out;
  int ln = 0;
  for (std::string line; std::getline(in, line);) {
    ++ln;
    const auto t = tokens(line);
    if (t.empty()) continue;
    if (t[0] != "pairing" || t.size() < 4) throw ParseError(ln, "expected pairing <end> <middle> <entries>");
    const std::size_t k = t.size() - 3;
    const auto d = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(k))));
    if (d * d != k) throw ParseError(ln, "pairing needs a square number of entries");
    Vec e;
    for (std::size_t i = 3; i < t.size(); ++i) {
      try {
        e.push_back(field.parse_scalar(t[i]));
      } catch (const Error& err) {
        throw ParseError(ln, err.what());
      }
    }
    if (!out.emplace(MeshKey{t[1], t[2]}, Matrix::from_entries(field, d, d, e)).second)
      throw ParseError(ln, "duplicate pairing for " + t[1] + " " + t[2]);
  }
  return out;
}

std::string dump_line(const std::string& name, const Matrix& m) { return name + ": " + m.dump(); }

void write_morphism(std::ostream& out, const std::string& label, const HereditaryAlgebra& alg, const ModuleMorphism& h) {
  for (int v = 0; v < alg.size(); ++v) out << dump_line(label + "@" + alg.vertices[v], h.comps[v]) << "\n";
}

void export_component(const std::string& dir, const ARComponent& comp) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  const auto& alg = comp.alg;
  std::map<ArrowKey, int> dims;
  for (const auto& [k, v] : comp.irr_reps) dims[k] = static_cast<int>(v.size());
  {
    auto out = open_out(fs::path(dir) / "component.tq");
    write_tq(out, comp.quiver, dims);
  }
  {
    auto out = open_out(fs::path(dir) / "modules.txt");
    out << "field " << alg.field.name() << "\n";
    for (const auto& [name, m] : comp.module_of) {
      out << "module " << name << " dims " << m->dimvector() << "\n";
      for (std::size_t a = 0; a < alg.arrows.size(); ++a) out << dump_line(name + "." + alg.arrows[a].name, m->mats[a]) << "\n";
    }
    for (const auto& [alias, name] : comp.aliases) out << "alias " << alias << " = " << name << "\n";
  }
  {
    auto out = open_out(fs::path(dir) / "irreducibles.txt");
    for (const auto& [k, ms] : comp.irr_reps)
      for (std::size_t j = 0; j < ms.size(); ++j)
        write_morphism(out, k.first + "->" + k.second + "#" + std::to_string(j), alg, ms[j]);
  }
  {
    auto out = open_out(fs::path(dir) / "sequences.txt");
    for (const auto& [end, s] : comp.ass) {
      out << "mesh " << end << " start " << s.start << " middles";
      for (const auto& m : s.middles) out << " " << m;
      out << "\n";
    }
  }
}

void export_cover(const std::string& dir, const TruncatedCover& tc, const std::map<ArrowKey, int>& base_dims) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  std::map<ArrowKey, int> dims;
  const auto& c = tc.cover;
  for (auto [s, t] : c.arrows()) {
    auto it = base_dims.find({tc.base().name(tc.pi_of(s)), tc.base().name(tc.pi_of(t))});
    dims[{c.name(s), c.name(t)}] = it == base_dims.end() ? 1 : it->second;
  }
  {
    auto out = open_out(fs::path(dir) / "base.tq");
    write_tq(out, tc.base(), base_dims);
  }
  {
    auto out = open_out(fs::path(dir) / "cover.tq");
    write_tq(out, c, dims);
  }
  {
    auto out = open_out(fs::path(dir) / "pi.txt");
    for (int v : c.sorted_vertices()) out << c.name(v) << " " << tc.base().name(tc.pi_of(v)) << "\n";
  }
  {
    auto out = open_out(fs::path(dir) / "meta.txt");
    out << "base " << tc.base_vertex << "\nradius " << tc.radius << "\n";
    for (int v : c.sorted_vertices())
      out << "vertex " << c.name(v) << " length " << tc.length[v] << " distance " << tc.distance[v] << " complete "
          << tc.complete[v] << " interior " << tc.interior[v] << "\n";
  }
}

CoverDir import_cover(const std::string& dir) {
  namespace fs = std::filesystem;
  CoverDir cd;
  const TqFile base = read_tq((fs::path(dir) / "base.tq").string());
  const TqFile cover = read_tq((fs::path(dir) / "cover.tq").string());
  cd.base_dims = base.dims;
  auto& tc = cd.cover;
  tc.cover = cover.quiver;
  std::map<std::string, std::string> vmap;
  {
    auto in = open_in((fs::path(dir) / "pi.txt").string());
    int ln = 0;
    for (std::string line; std::getline(in, line);) {
      ++ln;
      const auto t = tokens(line);
      if (t.empty()) continue;
      if (t.size() != 2) throw ParseError(ln, "pi.txt expects <cover vertex> <base vertex>");
      vmap[t[0]] = t[1];
    }
  }
  tc.pi = make_morphism(tc.cover, base.quiver, vmap);
  const int n = tc.cover.size();
  tc.length.assign(n, 0);
  tc.distance.assign(n, 0);
  tc.complete.assign(n, false);
  tc.interior.assign(n, false);
  auto in = open_in((fs::path(dir) / "meta.txt").string());
  int ln = 0;
  for (std::string line; std::getline(in, line);) {
    ++ln;
    const auto t = tokens(line);
    if (t.empty()) continue;
    try {
      if (t[0] == "base" && t.size() == 2) {
        tc.base_vertex = t[1];
      } else if (t[0] == "radius" && t.size() == 2) {
        tc.radius = std::stoi(t[1]);
      } else if (t[0] == "vertex" && t.size() == 10) {
        const int v = tc.cover.index(t[1]);
        tc.length[v] = std::stoi(t[3]);
        tc.distance[v] = std::stoi(t[5]);
        tc.complete[v] = t[7] == "1";
        tc.interior[v] = t[9] == "1";
      } else {
        throw ParseError(ln, "unrecognized meta line");
      }
    } catch (const std::invalid_argument&) {
      throw ParseError(ln, "expected an integer");
    }
  }
  return cd;
}

void print_verdict(std::ostream& out, const HereditaryAlgebra& alg, const std::vector<std::string>& path,
                   const DegreeVerdict& v) {
  auto join = [](const std::vector<std::string>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " > " : "") + xs[i];
    return s;
  };
  out << "path " << join(path) << "\n";
  out << "lift " << join(v.lift) << "\n";
  out << "sectional " << (v.sectional ? "yes" : "no") << "\n";
  for (std::size_t i = 0; i < v.arrow_coords.size(); ++i) {
    out << "class h" << i + 1 << ":";
    for (const auto& c : v.arrow_coords[i]) out << " " << c.str();
    out << "\n";
  }
  out << "verdict " << to_string(v.kind) << "\n";
  out << "oracle " << (!v.oracle_agrees ? "skipped" : (*v.oracle_agrees ? "agree" : "disagree")) << "\n";
  if (v.kind == DegreeKind::NotInRadNPlus1) {
    out << "certificate product";
    for (const auto& t : v.product_terms) out << " " << t;
    out << "\n";
  }
  write_morphism(out, "composite", alg, v.composite);
  if (v.witness) {
    out << "witness indices";
    for (auto i : v.witness->indices) out << " " << i + 1;
    out << "\n";
    for (std::size_t i = 0; i < v.witness->f.size(); ++i) write_morphism(out, "f" + std::to_string(i + 1), alg, v.witness->f[i]);
    for (std::size_t i = 0; i < v.witness->eps.size(); ++i)
      write_morphism(out, "eps" + std::to_string(i + 1), alg, v.witness->eps[i]);
  }
}

}  // namespace meshkit
