#include "qtet/complex3.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "qtet/spin.hpp"

namespace qtet {

SimplicialComplex3 SimplicialComplex3::from_tets(std::vector<std::array<int, 4>> tets) {
  if (tets.empty()) throw ComplexError("complex has no tetrahedra");

  SimplicialComplex3 c;
  for (auto& t : tets) {
    std::sort(t.begin(), t.end());
    if (t[0] < 0) throw ComplexError("negative vertex label");
    if (t[0] == t[1] || t[1] == t[2] || t[2] == t[3])
      throw ComplexError("degenerate cell: repeated vertex in a tetrahedron");
  }
  c.tets_ = std::move(tets);

  std::vector<int> verts;
  for (const auto& t : c.tets_) verts.insert(verts.end(), t.begin(), t.end());
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  c.n_vertices_ = static_cast<int>(verts.size());

  std::map<std::array<int, 2>, int> edge_idx;
  std::map<std::array<int, 3>, int> tri_idx;
  const auto edge_of = [&](int u, int v) {
    std::array<int, 2> e{std::min(u, v), std::max(u, v)};
    auto [it, inserted] = edge_idx.try_emplace(e, static_cast<int>(c.edges_.size()));
    if (inserted) c.edges_.push_back(e);
    return it->second;
  };
  const auto tri_of = [&](std::array<int, 3> f) {
    std::sort(f.begin(), f.end());
    auto [it, inserted] = tri_idx.try_emplace(f, static_cast<int>(c.triangles_.size()));
    if (inserted) c.triangles_.push_back(f);
    return it->second;
  };

  const auto faces_of = [](const std::array<int, 4>& t) {
    return std::array<std::array<int, 3>, 4>{{{t[0], t[1], t[2]},
                                              {t[0], t[1], t[3]},
                                              {t[0], t[2], t[3]},
                                              {t[1], t[2], t[3]}}};
  };
  for (int ti = 0; ti < static_cast<int>(c.tets_.size()); ++ti) {
    const auto& [v0, v1, v2, v3] = c.tets_[ti];
    c.tet_edges_.push_back({edge_of(v0, v1), edge_of(v0, v2), edge_of(v1, v2),
                            edge_of(v2, v3), edge_of(v1, v3), edge_of(v0, v3)});
    for (const auto& f : faces_of(c.tets_[ti])) tri_of(f);
  }

  // The edge/triangle key maps are insertion-ordered by discovery, not
  // sorted; rebuild both index spaces in sorted order so the fixed edge
  // order of coloring enumeration is the lexicographic one.
  std::vector<int> edge_remap(c.edges_.size()), tri_remap(c.triangles_.size());
  {
    std::vector<std::array<int, 2>> sorted_edges(c.edges_.size());
    int i = 0;
    for (auto& [e, old] : edge_idx) {
      sorted_edges[i] = e;
      edge_remap[old] = i;
      ++i;
    }
    c.edges_ = std::move(sorted_edges);
    std::vector<std::array<int, 3>> sorted_tris(c.triangles_.size());
    i = 0;
    for (auto& [f, old] : tri_idx) {
      sorted_tris[i] = f;
      tri_remap[old] = i;
      ++i;
    }
    c.triangles_ = std::move(sorted_tris);
  }
  for (auto& slots : c.tet_edges_)
    for (int& e : slots) e = edge_remap[e];

  c.edge_tets_.assign(c.edges_.size(), {});
  c.triangle_tets_.assign(c.triangles_.size(), {});
  c.triangle_edges_.assign(c.triangles_.size(), {});
  for (int ti = 0; ti < static_cast<int>(c.tets_.size()); ++ti) {
    for (int e : c.tet_edges_[ti]) c.edge_tets_[e].push_back(ti);
    for (const auto& f : faces_of(c.tets_[ti])) {
      const int fi = static_cast<int>(
          std::lower_bound(c.triangles_.begin(), c.triangles_.end(), f) - c.triangles_.begin());
      c.triangle_tets_[fi].push_back(ti);
    }
  }
  for (int fi = 0; fi < static_cast<int>(c.triangles_.size()); ++fi) {
    const auto& [u, v, w] = c.triangles_[fi];
    c.triangle_edges_[fi] = {c.edge_index(u, v), c.edge_index(u, w), c.edge_index(v, w)};
  }

  for (int fi = 0; fi < static_cast<int>(c.triangles_.size()); ++fi) {
    if (c.triangle_tets_[fi].size() != 2) {
      const auto& [u, v, w] = c.triangles_[fi];
      throw ComplexError("not closed: triangle (" + std::to_string(u) + "," +
                         std::to_string(v) + "," + std::to_string(w) + ") lies in " +
                         std::to_string(c.triangle_tets_[fi].size()) +
                         " tetrahedra (expected 2)");
    }
  }
  const long chi = static_cast<long>(c.n_vertices_) - c.n_edges() + c.n_triangles() - c.n_tets();
  if (chi != 0)
    throw ComplexError("not a closed 3-manifold: Euler characteristic is " +
                       std::to_string(chi) + ", expected 0");
  return c;
}

int SimplicialComplex3::edge_index(int u, int v) const {
  const std::array<int, 2> e{std::min(u, v), std::max(u, v)};
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e)
    throw ComplexError("no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  return static_cast<int>(it - edges_.begin());
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> tok;
  std::string t;
  while (is >> t) tok.push_back(t);
  return tok;
}

}  // namespace

TriangulationDoc load_complex(std::istream& in) {
  std::string line;
  std::vector<std::string> tok;
  do {
    if (!std::getline(in, line)) throw ComplexError("empty triangulation document");
    tok = tokenize(line);
  } while (tok.empty() || tok[0].starts_with("#"));
  if (tok.size() != 2 || tok[0] != "tets")
    throw ComplexError("expected header 'tets N'");
  const int n = std::stoi(tok[1]);
  if (n <= 0) throw ComplexError("tetrahedron count must be positive");

  std::vector<std::array<int, 4>> tets;
  for (int i = 0; i < n; ++i) {
    do {
      if (!std::getline(in, line))
        throw ComplexError("unexpected end of file: expected " + std::to_string(n) +
                           " tetrahedron lines");
      tok = tokenize(line);
    } while (tok.empty() || tok[0].starts_with("#"));
    if (tok.size() != 4) throw ComplexError("tetrahedron line must have four vertex labels");
    std::array<int, 4> t;
    for (int k = 0; k < 4; ++k) t[k] = std::stoi(tok[k]);
    tets.push_back(t);
  }

  TriangulationDoc doc{SimplicialComplex3::from_tets(std::move(tets)), std::nullopt};

  while (std::getline(in, line)) {
    tok = tokenize(line);
    if (tok.empty() || tok[0].starts_with("#")) continue;
    if (tok[0] != "lengths") throw ComplexError("unexpected line '" + line + "'");
    std::vector<double> lengths(doc.complex.n_edges(), -1.0);
    while (std::getline(in, line)) {
      tok = tokenize(line);
      if (tok.empty() || tok[0].starts_with("#")) continue;
      if (tok.size() == 4 && tok[2] == "->") tok.erase(tok.begin() + 2);
      if (tok.size() != 3) throw ComplexError("length line must be 'u v value'");
      const int e = doc.complex.edge_index(std::stoi(tok[0]), std::stoi(tok[1]));
      const double value = std::stod(tok[2]);
      if (value <= 0) throw ComplexError("edge lengths must be positive");
      lengths[e] = value;
    }
    for (int e = 0; e < doc.complex.n_edges(); ++e) {
      if (lengths[e] <= 0) {
        const auto& [u, v] = doc.complex.edges()[e];
        throw ComplexError("missing length for edge (" + std::to_string(u) + "," +
                           std::to_string(v) + ")");
      }
    }
    doc.edge_lengths = std::move(lengths);
    break;
  }
  return doc;
}

TriangulationDoc load_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ComplexError("cannot open '" + path + "'");
  return load_complex(in);
}

SimplicialComplex3 builtin_complex(const std::string& name) {
  if (name == "s3-2tet")
    return SimplicialComplex3::from_tets({{0, 1, 2, 3}, {0, 1, 2, 3}});
  if (name == "s3-5tet")
    return SimplicialComplex3::from_tets(
        {{0, 1, 2, 3}, {0, 1, 2, 4}, {0, 1, 3, 4}, {0, 2, 3, 4}, {1, 2, 3, 4}});
  throw ComplexError("unknown builtin complex '" + name + "' (have: s3-2tet, s3-5tet)");
}

ColoringBound ColoringBound::level(int r) {
  if (r < 3) throw std::domain_error("level must be at least 3");
  ColoringBound b;
  b.kind = Kind::level;
  b.level_r = r;
  b.max_spin = HalfInt::from_twice(r - 2);
  return b;
}

ColoringBound ColoringBound::cutoff(HalfInt L) {
  if (L.is_negative()) throw std::domain_error("cutoff must be nonnegative");
  ColoringBound b;
  b.kind = Kind::cutoff;
  b.max_spin = L;
  return b;
}

bool ColoringBound::triad_ok(HalfInt a, HalfInt b, HalfInt c) const {
  if (!Triad{a, b, c}.admissible()) return false;
  if (kind == Kind::level && a.twice() + b.twice() + c.twice() > 2 * (level_r - 2)) return false;
  return true;
}

namespace {

struct ColoringEnumerator {
  const SimplicialComplex3& c;
  const ColoringBound& bound;
  const std::function<void(const std::vector<HalfInt>&)>& fn;
  // Triangles become checkable once their largest-indexed edge is assigned.
  std::vector<std::vector<int>> checks_at;
  std::vector<HalfInt> spins;

  ColoringEnumerator(const SimplicialComplex3& c_, const ColoringBound& b_,
                     const std::function<void(const std::vector<HalfInt>&)>& fn_)
      : c(c_), bound(b_), fn(fn_), checks_at(c_.n_edges()), spins(c_.n_edges()) {
    for (int fi = 0; fi < c.n_triangles(); ++fi) {
      const auto& te = c.triangle_edges()[fi];
      checks_at[*std::max_element(te.begin(), te.end())].push_back(fi);
    }
  }

  bool ok_at(int depth) const {
    for (int fi : checks_at[depth]) {
      const auto& te = c.triangle_edges()[fi];
      if (!bound.triad_ok(spins[te[0]], spins[te[1]], spins[te[2]])) return false;
    }
    return true;
  }

  void descend(int depth) {
    if (depth == c.n_edges()) {
      fn(spins);
      return;
    }
    for (int t = 0; t <= bound.max_spin.twice(); ++t) {
      spins[depth] = HalfInt::from_twice(t);
      if (ok_at(depth)) descend(depth + 1);
    }
  }
};

}  // namespace

void for_each_coloring(const SimplicialComplex3& c, const ColoringBound& bound,
                       const std::function<void(const std::vector<HalfInt>&)>& fn) {
  ColoringEnumerator(c, bound, fn).descend(0);
}

std::uint64_t count_colorings(const SimplicialComplex3& c, const ColoringBound& bound) {
  std::uint64_t n = 0;
  for_each_coloring(c, bound, [&](const std::vector<HalfInt>&) { ++n; });
  return n;
}

}  // namespace qtet
