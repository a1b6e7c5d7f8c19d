#pragma once

#include <array>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qtet/half_int.hpp"

namespace qtet {

struct ComplexError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Closed triangulated 3-manifold given by its tetrahedra as vertex
// quadruples; edges and triangles are derived, never listed. The same
// quadruple may appear twice (e.g. the two-tetrahedron sphere); gluing is by
// shared vertex labels. Validation enforces: four distinct vertices per
// cell, every triangle incident to exactly two tetrahedra, and Euler
// characteristic zero.
class SimplicialComplex3 {
 public:
  static SimplicialComplex3 from_tets(std::vector<std::array<int, 4>> tets);

  int n_vertices() const { return n_vertices_; }
  int n_edges() const { return static_cast<int>(edges_.size()); }
  int n_triangles() const { return static_cast<int>(triangles_.size()); }
  int n_tets() const { return static_cast<int>(tets_.size()); }

  // Sorted vertex pairs / triples / quadruples (original labels).
  const std::vector<std::array<int, 2>>& edges() const { return edges_; }
  const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }
  const std::vector<std::array<int, 4>>& tets() const { return tets_; }

  const std::vector<std::vector<int>>& edge_tets() const { return edge_tets_; }
  const std::vector<std::vector<int>>& triangle_tets() const { return triangle_tets_; }

  // Edge indices of tetrahedron t in 6j slot order: with sorted cell
  // vertices (v0,v1,v2,v3), the slots are (01, 02, 12, 23, 13, 03), so the
  // symbol's four triads are exactly the four triangular faces.
  const std::array<int, 6>& tet_edge_slots(int t) const { return tet_edges_[t]; }
  // Triangle indices (edge-index triples) used for admissibility checks.
  const std::vector<std::array<int, 3>>& triangle_edges() const { return triangle_edges_; }

  int edge_index(int u, int v) const;

 private:
  int n_vertices_ = 0;
  std::vector<std::array<int, 2>> edges_;
  std::vector<std::array<int, 3>> triangles_;
  std::vector<std::array<int, 4>> tets_;
  std::vector<std::vector<int>> edge_tets_;
  std::vector<std::vector<int>> triangle_tets_;
  std::vector<std::array<int, 6>> tet_edges_;
  std::vector<std::array<int, 3>> triangle_edges_;
};

// Triangulation document: a "tets N" header, N lines of four vertex labels,
// and an optional "lengths" section of "u v value" lines assigning a
// positive length to every edge.
struct TriangulationDoc {
  SimplicialComplex3 complex;
  std::optional<std::vector<double>> edge_lengths;  // indexed like complex.edges()
};

TriangulationDoc load_complex(std::istream& in);
TriangulationDoc load_complex_file(const std::string& path);

// In-repo catalog: "s3-2tet" (two tetrahedra glued along all four faces)
// and "s3-5tet" (boundary of the 4-simplex).
SimplicialComplex3 builtin_complex(const std::string& name);

// Spin bound for coloring enumeration: either a quantum level r (spins at
// most (r-2)/2 and every triangle q-admissible with a+b+c <= r-2) or a
// plain cutoff L (spins at most L, classical admissibility).
struct ColoringBound {
  enum class Kind { level, cutoff } kind;
  int level_r = 0;
  HalfInt max_spin;

  static ColoringBound level(int r);
  static ColoringBound cutoff(HalfInt L);

  bool triad_ok(HalfInt a, HalfInt b, HalfInt c) const;
};

// Calls fn for every admissible coloring (spins indexed like
// complex.edges()), exactly once each, in lexicographic order over the fixed
// edge order with spins ascending. Backtracking prunes on each triangle as
// soon as its last edge is assigned.
void for_each_coloring(const SimplicialComplex3& c, const ColoringBound& bound,
                       const std::function<void(const std::vector<HalfInt>&)>& fn);

std::uint64_t count_colorings(const SimplicialComplex3& c, const ColoringBound& bound);

}  // namespace qtet
