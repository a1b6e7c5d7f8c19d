#pragma once

#include <vector>

#include "qtet/spin.hpp"

namespace qtet {

// Orthogonal change-of-basis matrix between the (j1 j2)j12 j3 and
// j1 (j2 j3)j23 coupling schemes at fixed total spin j. Rows are indexed by
// j12, columns by j23, both in integer steps over their admissible ranges;
// the ranges always have equal length.
struct RecouplingMatrix {
  HalfInt j1, j2, j3, j;
  std::vector<HalfInt> row_labels;  // j12
  std::vector<HalfInt> col_labels;  // j23
  std::vector<std::vector<SignedSqrtRational>> entry;

  int size() const { return static_cast<int>(row_labels.size()); }
  // Exact M^T M == I (and M M^T == I).
  bool is_orthogonal() const;
};

// Entry (j12, j23) = (-1)^(j1+j2+j3+j) sqrt((2j12+1)(2j23+1))
//                    {j1 j2 j12; j3 j j23}.
// Throws std::domain_error when no admissible (j12, j23) pair exists.
RecouplingMatrix recoupling_matrix(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j);

// P = (2j12+1)(2j23+1) {j1 j2 j12; j3 j j23}^2, an exact rational in [0,1];
// zero when the coupling scheme is inadmissible.
mpq_class recoupling_probability(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j,
                                 HalfInt j12, HalfInt j23);

// Exact both-sides result of an identity check; any nonzero residual is a
// bug, not noise.
struct IdentityCheck {
  SignedSqrtRational lhs, rhs;
  bool holds() const { return lhs == rhs; }
};

// sum_x (-1)^(R+x) (2x+1) {a b x; c d p} {c d x; e f q} {e f x; b a r}
//   ==  {p q r; e a d} {p q r; f b c},     R = a+b+c+d+e+f+p+q+r.
// The x range is derived from triad admissibility intersection.
IdentityCheck check_biedenharn_elliott(HalfInt a, HalfInt b, HalfInt c, HalfInt d,
                                       HalfInt e, HalfInt f, HalfInt p, HalfInt q, HalfInt r);

// sum_x (2x+1) {a b x; c d p} {c d x; a b q}  ==  delta_pq / (2p+1),
// the right-hand side understood as zero when the fixed triads
// (a,d,p), (c,b,p), (c,b,q), (a,d,q) are not all admissible.
IdentityCheck check_orthogonality(HalfInt a, HalfInt b, HalfInt c, HalfInt d,
                                  HalfInt p, HalfInt q);

}  // namespace qtet
