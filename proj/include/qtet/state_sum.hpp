#pragma once

#include <cstdint>

#include "qtet/complex3.hpp"
#include "qtet/q_deform.hpp"

namespace qtet {

// Number system used for a state-sum summand: quantum integers at the
// working level, or ordinary integers (the q = 1 case, which reproduces the
// finite-cutoff functional's summand).
enum class SummandNumbers { quantum, integers };

struct TvResult {
  double value;
  // The resolved total weight normalization w = sum over admissible spins
  // of [2j+1]^2 = r / (2 sin^2(pi/r)); the state sum carries w^(-N0).
  double weight_constant;
  int level;
  std::uint64_t colorings;
};

// Turaev-Viro state sum at level r: over admissible colorings,
//   w^(-N0) * prod_edges (-1)^(2j) [2j+1] * prod_tets phi_B {6j}_q,
// with phi_B = (-1)^(sum of the six spins of B). Per-tetrahedron phases may
// be imaginary for half-integer spin sums; their product over a closed
// complex is real, and is evaluated globally. Deterministic across runs and
// thread counts.
TvResult tv_invariant(const SimplicialComplex3& c, Level r, int threads = 1);

// One coloring's summand without the w^(-N0) prefactor, with quantum or
// ordinary integers.
double tv_coloring_term_reduced(const SimplicialComplex3& c, Level r,
                                const std::vector<HalfInt>& coloring, SummandNumbers numbers);

struct PrResult {
  double lambda;  // Lambda(L) = 4 L^3 / (3 C)
  int n0;
  double reduced_sum;  // the state sum without the Lambda^(-N0) prefactor
  std::uint64_t colorings;

  double total() const;
};

// Finite-cutoff functional: sum over colorings with every spin <= L of
//   Lambda(L)^(-N0) * prod_edges (-1)^(2j)(2j+1) * prod_tets phi_B {6j}_B.
// 6j factors are evaluated exactly, then accumulated in floating point in a
// deterministic order.
PrResult pr_functional_cutoff(const SimplicialComplex3& c, HalfInt L, double constant_c = 1.0,
                              int threads = 1);

// One coloring's summand without the Lambda^(-N0) prefactor.
double pr_coloring_term_reduced(const SimplicialComplex3& c, const std::vector<HalfInt>& coloring);

}  // namespace qtet
