#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <utility>
#include <vector>

namespace qtet {

// Undirected simple graph: no loops, no multi-edges.
struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  static SimpleGraph make(int n, std::vector<std::pair<int, int>> edges);
  // Edge-list lines "u v"; an optional leading single-token line gives the
  // vertex count (otherwise max label + 1).
  static SimpleGraph parse(std::istream& in);
};

struct BinaryMatrix {
  int n = 0;
  std::vector<std::vector<int>> a;

  static BinaryMatrix zeros(int n) { return {n, std::vector(n, std::vector<int>(n, 0))}; }
  // Rows of 0/1 digits.
  static BinaryMatrix parse(std::istream& in);
};

// A[i][j] = 1 iff {i,j} is an edge; symmetric with zero diagonal.
BinaryMatrix incidence_matrix(const SimpleGraph& g);

// per[A] = sum over permutations of prod_i a_{i,sigma(i)}, exact, by
// inclusion-exclusion over column subsets (O(2^n n) with Gray-code updates).
// The subset space parallelizes over contiguous Gray-code segments combined
// in segment order.
mpz_class permanent(const BinaryMatrix& a, int threads = 1);

}  // namespace qtet
