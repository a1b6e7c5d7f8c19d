#pragma once

#include <atomic>
#include <cstdint>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "qtet/spin.hpp"

namespace qtet {

// Exact Wigner 3j symbol via Racah's single-sum formula. Returns the exact
// zero when a selection rule fails (m1+m2+m3 != 0 or inadmissible triad);
// throws std::domain_error when a magnetic number is outside its valid range
// (|m| > j or j-m not an integer).
SignedSqrtRational three_j(const ThreeJ& t);

// Exact Wigner 6j symbol {a b c; d e f}, evaluated as the product of the
// four triad Delta factors times the terminating 4F3(...;1) Racah sum.
// Inadmissible symbols give the exact zero.
SignedSqrtRational sixj_exact(const Tetra6j& s);

// Independent brute-force evaluation: the contraction of four 3j symbols
// over magnetic numbers (three free indices). Shares no code with
// sixj_exact beyond the 3j building block.
SignedSqrtRational sixj_oracle(const Tetra6j& s);

// Number of terms the 4F3 series of the last sixj_exact call evaluated
// (thread-local); exposed for the termination-bound property test.
int sixj_last_term_count();

// sixj_exact with the beta2/beta3 tie-break order swapped; the value is
// independent of the choice, which tests assert.
SignedSqrtRational sixj_exact_beta_swapped(const Tetra6j& s);

// The 24 classical symmetry images (column permutations and pairwise
// upper/lower interchanges) of a symbol, as slot permutations.
std::vector<Tetra6j> classical_images(const Tetra6j& s);

// Orbit under the classical symmetries composed with the Regge transforms;
// size divides 144 and all members carry the same exact value. Regge images
// with negative spins cannot arise for admissible inputs (asserted) and are
// skipped for inadmissible ones.
std::vector<Tetra6j> symmetry_orbit(const Tetra6j& s);

// Lexicographically smallest twice-tuple over the classical orbit
// (include_regge = false) or the full 144-orbit (true).
std::array<int, 6> canonical_key(const Tetra6j& s, bool include_regge = false);

// Memoized 6j evaluation keyed by canonical orbit representative.
// Concurrent lookups and inserts; writers all compute identical values, so
// last-writer-wins is safe. Inadmissible symbols return zero and are not
// cached. Regge canonicalization is a config flag: it shrinks the key space
// at the cost of a transform per lookup.
class SixjCache {
 public:
  explicit SixjCache(bool regge_keys = false) : regge_keys_(regge_keys) {}

  SignedSqrtRational operator()(const Tetra6j& s);

  std::uint64_t hits() const { return hits_.load(); }
  std::uint64_t misses() const { return misses_.load(); }
  std::size_t size() const;

 private:
  struct KeyHash {
    std::size_t operator()(const std::array<int, 6>& k) const {
      std::size_t h = 0;
      for (int v : k) h = h * 1000003u + static_cast<std::size_t>(v + 512);
      return h;
    }
  };

  bool regge_keys_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::array<int, 6>, SignedSqrtRational, KeyHash> map_;
  std::atomic<std::uint64_t> hits_{0};
  std::atomic<std::uint64_t> misses_{0};
};

}  // namespace qtet
