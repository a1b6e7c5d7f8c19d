#pragma once

#include <array>

#include "qtet/complex3.hpp"
#include "qtet/spin.hpp"

namespace qtet {

// Six tetrahedron edge lengths in 6j slot order: with vertices (0,1,2,3),
// slots are the pairs (01, 02, 12, 23, 13, 03), so triads of the associated
// symbol are the faces and opposite slot pairs (1,4), (2,5), (3,6) are
// opposite edges. Semiclassically a spin j edge has length j + 1/2.
struct EdgeLengths6 {
  std::array<double, 6> l;

  static EdgeLengths6 from_spins(const Tetra6j& s);
};

// Thrown when a length assignment admits no Euclidean tetrahedron; carries
// the offending squared volume.
struct NonEuclideanError : std::domain_error {
  explicit NonEuclideanError(double vsq);
  double volume_sq;
};

// Squared volume from the Cayley-Menger determinant; positive iff the
// lengths embed in Euclidean 3-space, and exact for rational inputs.
double volume_sq(const EdgeLengths6& l);
mpq_class volume_sq_exact(const std::array<mpq_class, 6>& lengths);
// Core form on squared lengths (the determinant's natural domain).
mpq_class cayley_menger_volume_sq(const std::array<mpq_class, 6>& sq_lengths);

struct TetGeometry {
  double vol_sq;
  double volume;
  std::array<double, 6> interior;  // interior dihedral angle at each slot
  std::array<double, 6> dihedral;  // pi - interior: angle between outer normals
};

// Deterministic embedding: v0 at the origin, v1 on the x axis, v2 in the
// xy plane, v3 above it by trilateration.
std::array<std::array<double, 3>, 4> embed_vertices(const EdgeLengths6& l);

// Throws NonEuclideanError unless volume_sq > 0.
TetGeometry tet_geometry(const EdgeLengths6& l);

inline std::array<double, 6> dihedral_angles(const EdgeLengths6& l) {
  return tet_geometry(l).dihedral;
}

enum class AsymptoticMode { phase, wigner };

// Ponzano-Regge semiclassical value at lengths j + 1/2:
//   phase:  (24 pi V)^(-1/2) cos(sum_r l_r theta_r + pi/4)
//   wigner: 1 / (12 pi V), the envelope estimate for the squared symbol.
// Errors in the classically forbidden regime (volume_sq <= 0).
double pr_asymptotic(const Tetra6j& s, AsymptoticMode mode);

// Closed complex with a positive length on every edge; every cell must be
// Euclidean.
struct ReggeComplex {
  SimplicialComplex3 complex;
  std::vector<double> edge_length;  // indexed like complex.edges()

  static ReggeComplex from_doc(const TriangulationDoc& doc);
};

struct ReggeResult {
  double action;                // S = sum_i l_i eps_i
  std::vector<double> deficit;  // eps_i = 2 pi - sum of interior dihedrals at edge i
};

ReggeResult regge_action_3d(const ReggeComplex& rc);

}  // namespace qtet
