#include "qtet/tet_geometry.hpp"

#include <cmath>
#include <numbers>

#include "qtet/wigner.hpp"

namespace qtet {

EdgeLengths6 EdgeLengths6::from_spins(const Tetra6j& s) {
  EdgeLengths6 e;
  const auto spins = s.spins();
  for (int i = 0; i < 6; ++i) e.l[i] = spins[i].value() + 0.5;
  return e;
}

NonEuclideanError::NonEuclideanError(double vsq)
    : std::domain_error("no Euclidean tetrahedron with these edge lengths (V^2 = " +
                        std::to_string(vsq) + " <= 0)"),
      volume_sq(vsq) {}

namespace {

// Vertex pair of each slot.
constexpr std::array<std::array<int, 2>, 6> kSlotPairs = {
    {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {1, 3}, {0, 3}}};

// Exact determinant by fraction-free elimination would do as well; the
// matrix is 5x5, so plain rational Gaussian elimination is fine.
mpq_class det5(std::array<std::array<mpq_class, 5>, 5> m) {
  mpq_class det(1);
  for (int col = 0; col < 5; ++col) {
    int pivot = -1;
    for (int row = col; row < 5; ++row) {
      if (sgn(m[row][col]) != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) return mpq_class(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int row = col + 1; row < 5; ++row) {
      if (sgn(m[row][col]) == 0) continue;
      const mpq_class factor = m[row][col] / m[col][col];
      for (int k = col; k < 5; ++k) m[row][k] -= factor * m[col][k];
    }
  }
  return det;
}

}  // namespace

mpq_class cayley_menger_volume_sq(const std::array<mpq_class, 6>& sq) {
  std::array<std::array<mpq_class, 5>, 5> m;
  for (auto& row : m)
    for (auto& x : row) x = 0;
  for (int i = 1; i < 5; ++i) m[0][i] = m[i][0] = 1;
  for (int slot = 0; slot < 6; ++slot) {
    const auto [u, v] = kSlotPairs[slot];
    m[u + 1][v + 1] = m[v + 1][u + 1] = sq[slot];
  }
  mpq_class vsq = det5(m) / 288;
  vsq.canonicalize();
  return vsq;
}

mpq_class volume_sq_exact(const std::array<mpq_class, 6>& lengths) {
  std::array<mpq_class, 6> sq;
  for (int i = 0; i < 6; ++i) sq[i] = lengths[i] * lengths[i];
  return cayley_menger_volume_sq(sq);
}

double volume_sq(const EdgeLengths6& l) {
  // Doubles go through the same exact determinant: the inputs are exact
  // binary rationals, so only the final division rounds.
  std::array<mpq_class, 6> lengths;
  for (int i = 0; i < 6; ++i) lengths[i] = mpq_class(l.l[i]);
  return volume_sq_exact(lengths).get_d();
}

std::array<std::array<double, 3>, 4> embed_vertices(const EdgeLengths6& l) {
  const double vsq = volume_sq(l);
  if (!(vsq > 0)) throw NonEuclideanError(vsq);

  const double l01 = l.l[0], l02 = l.l[1], l12 = l.l[2];
  const double l23 = l.l[3], l13 = l.l[4], l03 = l.l[5];

  const double x2 = (l01 * l01 + l02 * l02 - l12 * l12) / (2 * l01);
  const double y2 = std::sqrt(l02 * l02 - x2 * x2);
  const double x3 = (l01 * l01 + l03 * l03 - l13 * l13) / (2 * l01);
  const double y3 = (l03 * l03 - l23 * l23 + x2 * x2 + y2 * y2 - 2 * x2 * x3) / (2 * y2);
  const double z3 = std::sqrt(l03 * l03 - x3 * x3 - y3 * y3);

  return {{{0, 0, 0}, {l01, 0, 0}, {x2, y2, 0}, {x3, y3, z3}}};
}

TetGeometry tet_geometry(const EdgeLengths6& l) {
  TetGeometry g{};
  g.vol_sq = volume_sq(l);
  if (!(g.vol_sq > 0)) throw NonEuclideanError(g.vol_sq);
  g.volume = std::sqrt(g.vol_sq);

  const auto v = embed_vertices(l);
  const auto sub = [](const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return std::array<double, 3>{a[0] - b[0], a[1] - b[1], a[2] - b[2]};
  };
  const auto dot = [](const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
  };

  for (int slot = 0; slot < 6; ++slot) {
    const auto [p, q] = kSlotPairs[slot];
    int others[2], n = 0;
    for (int k = 0; k < 4; ++k)
      if (k != p && k != q) others[n++] = k;

    // Interior dihedral: angle between the components of (r-p) and (s-p)
    // orthogonal to the edge direction.
    const auto u = sub(v[q], v[p]);
    const double uu = dot(u, u);
    const auto perp = [&](int w) {
      const auto d = sub(v[w], v[p]);
      const double t = dot(d, u) / uu;
      return std::array<double, 3>{d[0] - t * u[0], d[1] - t * u[1], d[2] - t * u[2]};
    };
    const auto a = perp(others[0]), b = perp(others[1]);
    const double cosang = dot(a, b) / std::sqrt(dot(a, a) * dot(b, b));
    g.interior[slot] = std::acos(std::clamp(cosang, -1.0, 1.0));
    g.dihedral[slot] = std::numbers::pi - g.interior[slot];
  }
  return g;
}

double pr_asymptotic(const Tetra6j& s, AsymptoticMode mode) {
  const EdgeLengths6 l = EdgeLengths6::from_spins(s);
  const TetGeometry g = tet_geometry(l);  // throws in the forbidden regime
  if (mode == AsymptoticMode::wigner) return 1.0 / (12.0 * std::numbers::pi * g.volume);
  double action = 0;
  for (int i = 0; i < 6; ++i) action += l.l[i] * g.dihedral[i];
  return std::cos(action + std::numbers::pi / 4) /
         std::sqrt(24.0 * std::numbers::pi * g.volume);
}

ReggeComplex ReggeComplex::from_doc(const TriangulationDoc& doc) {
  if (!doc.edge_lengths)
    throw ComplexError("Regge action needs a 'lengths' section assigning every edge a length");
  return {doc.complex, *doc.edge_lengths};
}

ReggeResult regge_action_3d(const ReggeComplex& rc) {
  const SimplicialComplex3& c = rc.complex;
  std::vector<double> angle_sum(c.n_edges(), 0.0);

  for (int t = 0; t < c.n_tets(); ++t) {
    const auto& slots = c.tet_edge_slots(t);
    EdgeLengths6 l;
    for (int k = 0; k < 6; ++k) l.l[k] = rc.edge_length[slots[k]];
    const TetGeometry g = tet_geometry(l);  // throws if a cell is not Euclidean
    for (int k = 0; k < 6; ++k) angle_sum[slots[k]] += g.interior[k];
  }

  ReggeResult res;
  res.deficit.resize(c.n_edges());
  res.action = 0;
  for (int e = 0; e < c.n_edges(); ++e) {
    res.deficit[e] = 2 * std::numbers::pi - angle_sum[e];
    res.action += rc.edge_length[e] * res.deficit[e];
  }
  return res;
}

}  // namespace qtet
