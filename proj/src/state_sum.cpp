#include "qtet/state_sum.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <cmath>
#include <numbers>
#include <shared_mutex>
#include <thread>
#include <unordered_map>

#include "qtet/wigner.hpp"

namespace qtet {

namespace {

// Memoized per-tetrahedron symbol values keyed by the classical canonical
// form; all writers compute identical values.
class TetValueCache {
 public:
  template <typename Eval>
  double get(const Tetra6j& s, Eval&& eval) {
    const std::array<int, 6> key = canonical_key(s, false);
    {
      std::shared_lock lock(mutex_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    const double v = eval(s);
    std::unique_lock lock(mutex_);
    map_.insert_or_assign(key, v);
    return v;
  }

 private:
  struct KeyHash {
    std::size_t operator()(const std::array<int, 6>& k) const {
      std::size_t h = 0;
      for (int v : k) h = h * 1000003u + static_cast<std::size_t>(v + 512);
      return h;
    }
  };
  std::shared_mutex mutex_;
  std::unordered_map<std::array<int, 6>, double, KeyHash> map_;
};

Tetra6j tet_symbol(const SimplicialComplex3& c, int tet, const std::vector<HalfInt>& spins) {
  const auto& slots = c.tet_edge_slots(tet);
  return {spins[slots[0]], spins[slots[1]], spins[slots[2]],
          spins[slots[3]], spins[slots[4]], spins[slots[5]]};
}

// Global phase prod_B (-1)^(sum of six spins of B) = i^E with
// E = sum_tets sum_slots 2j. E is even for any coloring whose triangles all
// carry integer-sum triads (the tetrahedra and triangles around an edge
// alternate in a closed complex), so the product is +-1 even when single
// tetrahedra contribute imaginary phases.
int coloring_phase(const SimplicialComplex3& c, const std::vector<HalfInt>& spins) {
  long long e = 0;
  for (int edge = 0; edge < c.n_edges(); ++edge)
    e += static_cast<long long>(spins[edge].twice()) * c.edge_tets()[edge].size();
  assert(e % 2 == 0);
  return e % 4 == 0 ? 1 : -1;
}

// Deterministic parallel fold: colorings are split by a fixed-depth prefix
// of the edge assignment; the per-prefix partial sums and their fold order
// do not depend on the thread count.
double sum_over_colorings(const SimplicialComplex3& c, const ColoringBound& bound, int threads,
                          std::uint64_t& colorings,
                          const std::function<double(const std::vector<HalfInt>&)>& term) {
  const int depth = std::min(c.n_edges(), 3);

  std::vector<std::vector<HalfInt>> prefixes;
  {
    std::vector<HalfInt> head(depth);
    const std::function<void(int)> build = [&](int k) {
      if (k == depth) {
        prefixes.push_back(head);
        return;
      }
      for (int t = 0; t <= bound.max_spin.twice(); ++t) {
        head[k] = HalfInt::from_twice(t);
        build(k + 1);
      }
    };
    build(0);
  }

  // Subtree enumeration under a fixed prefix, in lexicographic order.
  const auto subtree_sum = [&](const std::vector<HalfInt>& prefix,
                               std::uint64_t& count) -> double {
    std::vector<HalfInt> spins(c.n_edges());
    std::copy(prefix.begin(), prefix.end(), spins.begin());
    std::vector<std::vector<int>> checks_at(c.n_edges());
    for (int fi = 0; fi < c.n_triangles(); ++fi) {
      const auto& te = c.triangle_edges()[fi];
      checks_at[*std::max_element(te.begin(), te.end())].push_back(fi);
    }
    const auto ok_at = [&](int k) {
      for (int fi : checks_at[k]) {
        const auto& te = c.triangle_edges()[fi];
        if (!bound.triad_ok(spins[te[0]], spins[te[1]], spins[te[2]])) return false;
      }
      return true;
    };
    for (int k = 0; k < depth; ++k)
      if (!ok_at(k)) return 0.0;

    double sum = 0;
    const std::function<void(int)> descend = [&](int k) {
      if (k == c.n_edges()) {
        sum += term(spins);
        ++count;
        return;
      }
      for (int t = 0; t <= bound.max_spin.twice(); ++t) {
        spins[k] = HalfInt::from_twice(t);
        if (ok_at(k)) descend(k + 1);
      }
    };
    descend(depth);
    return sum;
  };

  std::vector<double> partial(prefixes.size(), 0.0);
  std::vector<std::uint64_t> counts(prefixes.size(), 0);
  if (threads <= 1) {
    for (std::size_t i = 0; i < prefixes.size(); ++i)
      partial[i] = subtree_sum(prefixes[i], counts[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= prefixes.size()) return;
          partial[i] = subtree_sum(prefixes[i], counts[i]);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  double total = 0;
  colorings = 0;
  for (std::size_t i = 0; i < prefixes.size(); ++i) {
    total += partial[i];
    colorings += counts[i];
  }
  return total;
}

double edge_weight(HalfInt j, Level r, SummandNumbers numbers) {
  const double dim = numbers == SummandNumbers::quantum
                         ? quantum_integer(j.twice() + 1, r)
                         : static_cast<double>(j.twice() + 1);
  return j.twice() % 2 == 0 ? dim : -dim;
}

}  // namespace

double tv_coloring_term_reduced(const SimplicialComplex3& c, Level r,
                                const std::vector<HalfInt>& coloring, SummandNumbers numbers) {
  double term = coloring_phase(c, coloring);
  for (int e = 0; e < c.n_edges(); ++e) term *= edge_weight(coloring[e], r, numbers);
  for (int t = 0; t < c.n_tets(); ++t) {
    const Tetra6j s = tet_symbol(c, t, coloring);
    term *= numbers == SummandNumbers::quantum ? q_sixj(s, r) : sixj_exact(s).to_double();
  }
  return term;
}

TvResult tv_invariant(const SimplicialComplex3& c, Level r, int threads) {
  TetValueCache cache;
  const auto term = [&](const std::vector<HalfInt>& spins) {
    double t = coloring_phase(c, spins);
    for (int e = 0; e < c.n_edges(); ++e)
      t *= edge_weight(spins[e], r, SummandNumbers::quantum);
    for (int tet = 0; tet < c.n_tets(); ++tet) {
      t *= cache.get(tet_symbol(c, tet, spins), [&](const Tetra6j& s) { return q_sixj(s, r); });
      if (t == 0) return 0.0;
    }
    return t;
  };

  TvResult res;
  res.level = r.r;
  res.weight_constant = r.r / (2 * std::pow(std::sin(std::numbers::pi / r.r), 2));
  const double sum =
      sum_over_colorings(c, ColoringBound::level(r.r), threads, res.colorings, term);
  res.value = sum * std::pow(res.weight_constant, -c.n_vertices());
  return res;
}

double pr_coloring_term_reduced(const SimplicialComplex3& c,
                                const std::vector<HalfInt>& coloring) {
  double term = coloring_phase(c, coloring);
  for (int e = 0; e < c.n_edges(); ++e)
    term *= (coloring[e].twice() % 2 == 0 ? 1 : -1) * (coloring[e].twice() + 1);
  for (int t = 0; t < c.n_tets(); ++t)
    term *= sixj_exact(tet_symbol(c, t, coloring)).to_double();
  return term;
}

double PrResult::total() const { return reduced_sum * std::pow(lambda, -n0); }

PrResult pr_functional_cutoff(const SimplicialComplex3& c, HalfInt L, double constant_c,
                              int threads) {
  if (L.is_negative()) throw std::domain_error("cutoff must be nonnegative");
  if (constant_c <= 0) throw std::domain_error("Lambda constant C must be positive");

  TetValueCache cache;
  const auto term = [&](const std::vector<HalfInt>& spins) {
    double t = coloring_phase(c, spins);
    for (int e = 0; e < c.n_edges(); ++e)
      t *= (spins[e].twice() % 2 == 0 ? 1 : -1) * (spins[e].twice() + 1);
    for (int tet = 0; tet < c.n_tets(); ++tet) {
      t *= cache.get(tet_symbol(c, tet, spins),
                     [](const Tetra6j& s) { return sixj_exact(s).to_double(); });
      if (t == 0) return 0.0;
    }
    return t;
  };

  PrResult res;
  res.n0 = c.n_vertices();
  const double ell = L.value();
  res.lambda = 4 * ell * ell * ell / (3 * constant_c);
  res.reduced_sum = sum_over_colorings(c, ColoringBound::cutoff(L), threads, res.colorings, term);
  return res;
}

}  // namespace qtet
