#pragma once

#include "qtet/spin.hpp"

namespace qtet {

// Quantum deformation level; admissible spins at level r are
// {0, 1/2, ..., (r-2)/2}.
struct Level {
  int r;

  explicit Level(int r_) : r(r_) {
    if (r < 3) throw std::domain_error("level must be at least 3");
  }
  HalfInt max_spin() const { return HalfInt::from_twice(r - 2); }
  bool spin_ok(HalfInt j) const { return !j.is_negative() && j.twice() <= r - 2; }
};

// [n] = sin(n pi / r) / sin(pi / r).
double quantum_integer(long long n, Level r);

// Classically admissible and a+b+c <= r-2.
bool q_admissible(const Triad& t, Level r);

// Root-of-unity q-6j symbol in the convention where [n] > 0 for 0 < n < r,
// making the symbol real: the Racah sum with every factorial replaced by a
// quantum factorial. Returns 0 when any of the four triads fails
// q-admissibility; throws when a spin exceeds the level bound (r-2)/2.
double q_sixj(const Tetra6j& s, Level r);

struct QIdentityCheck {
  double lhs, rhs;
  double residual() const { return std::abs(lhs - rhs); }
};

// sum_x [2x+1] {a b x; c d p}_q {c d x; a b q}_q  vs  delta_pq / [2p+1]
// (zero when the fixed triads are not q-admissible).
QIdentityCheck check_q_orthogonality(HalfInt a, HalfInt b, HalfInt c, HalfInt d,
                                     HalfInt p, HalfInt q, Level r);

// sum_x (-1)^(R+x) [2x+1] {a b x; c d p}_q {c d x; e f qq}_q {e f x; b a rr}_q
//   vs  {p qq rr; e a d}_q {p qq rr; f b c}_q,  R the sum of the nine spins.
QIdentityCheck check_q_biedenharn_elliott(HalfInt a, HalfInt b, HalfInt c, HalfInt d,
                                          HalfInt e, HalfInt f, HalfInt p, HalfInt qq,
                                          HalfInt rr, Level r);

}  // namespace qtet
