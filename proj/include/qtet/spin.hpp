#pragma once

#include <array>
#include <cassert>
#include <stdexcept>

#include "qtet/half_int.hpp"
#include "qtet/sqrt_rational.hpp"

namespace qtet {

// Three spins subject to the triangular condition.
struct Triad {
  HalfInt a, b, c;

  bool admissible() const {
    if (a.is_negative() || b.is_negative() || c.is_negative()) return false;
    const int ta = a.twice(), tb = b.twice(), tc = c.twice();
    if ((ta + tb + tc) % 2 != 0) return false;  // a+b+c must be an integer
    return std::abs(ta - tb) <= tc && tc <= ta + tb;
  }
};

inline bool is_triad_admissible(const Triad& t) { return t.admissible(); }

// Delta(a,b,c)^2 = (a+b-c)!(a-b+c)!(-a+b+c)! / (a+b+c+1)!, exact.
mpq_class delta_radicand(const Triad& t);

// The positive square root of the above; domain error on an inadmissible
// triad, naming the failed condition.
SignedSqrtRational delta_factor(const Triad& t);

// The six spins of a 6j symbol {a b c; d e f}; the four triads
// (a,b,c), (a,e,f), (d,b,f), (d,e,c) are the faces of the associated
// tetrahedron.
struct Tetra6j {
  HalfInt a, b, c, d, e, f;

  std::array<HalfInt, 6> spins() const { return {a, b, c, d, e, f}; }
  std::array<int, 6> twices() const {
    return {a.twice(), b.twice(), c.twice(), d.twice(), e.twice(), f.twice()};
  }
  static Tetra6j from_twices(const std::array<int, 6>& t) {
    return {HalfInt::from_twice(t[0]), HalfInt::from_twice(t[1]), HalfInt::from_twice(t[2]),
            HalfInt::from_twice(t[3]), HalfInt::from_twice(t[4]), HalfInt::from_twice(t[5])};
  }

  std::array<Triad, 4> triads() const {
    return {Triad{a, b, c}, Triad{a, e, f}, Triad{d, b, f}, Triad{d, e, c}};
  }
  bool admissible() const {
    for (const Triad& t : triads())
      if (!t.admissible()) return false;
    return true;
  }

  bool operator==(const Tetra6j&) const = default;
};

// A 3j symbol: spins j1,j2,j3 with signed magnetic numbers m1,m2,m3.
struct ThreeJ {
  HalfInt j1, j2, j3;
  HalfInt m1, m2, m3;
};

// (-1)^(twice_sum/2); twice_sum must be even (i.e. the half-integer sum must
// be an integer).
inline int parity_sign(long long twice_sum) {
  assert(twice_sum % 2 == 0);
  return ((twice_sum / 2) % 2 + 2) % 2 == 0 ? 1 : -1;
}

}  // namespace qtet
