#include "qtet/permanent.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

namespace qtet {

SimpleGraph SimpleGraph::make(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 0) throw std::domain_error("negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::domain_error("edge endpoint out of range");
    if (u == v) throw std::domain_error("loops are not allowed");
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) throw std::domain_error("duplicate edge");
  }
  return {n, std::move(edges)};
}

SimpleGraph SimpleGraph::parse(std::istream& in) {
  std::vector<std::pair<int, int>> edges;
  int n = -1, maxv = -1;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    std::istringstream is(line);
    std::vector<std::string> tok;
    std::string t;
    while (is >> t) tok.push_back(t);
    if (tok.empty() || tok[0].starts_with("#")) continue;
    if (first && tok.size() == 1) {
      n = std::stoi(tok[0]);
      first = false;
      continue;
    }
    first = false;
    if (tok.size() != 2) throw std::domain_error("graph line must be 'u v'");
    const int u = std::stoi(tok[0]), v = std::stoi(tok[1]);
    maxv = std::max({maxv, u, v});
    edges.emplace_back(u, v);
  }
  if (n < 0) n = maxv + 1;
  return make(n, std::move(edges));
}

BinaryMatrix BinaryMatrix::parse(std::istream& in) {
  BinaryMatrix m;
  std::string line;
  while (std::getline(in, line)) {
    std::string row;
    for (char ch : line) {
      if (ch == '0' || ch == '1') row.push_back(ch);
      else if (!std::isspace(static_cast<unsigned char>(ch)))
        throw std::domain_error("matrix rows must contain only 0/1 digits");
    }
    if (row.empty()) continue;
    m.a.emplace_back();
    for (char ch : row) m.a.back().push_back(ch - '0');
  }
  m.n = static_cast<int>(m.a.size());
  for (const auto& row : m.a)
    if (static_cast<int>(row.size()) != m.n)
      throw std::domain_error("matrix must be square");
  return m;
}

BinaryMatrix incidence_matrix(const SimpleGraph& g) {
  BinaryMatrix m = BinaryMatrix::zeros(g.n);
  for (const auto& [u, v] : g.edges) m.a[u][v] = m.a[v][u] = 1;
  return m;
}

namespace {

// Ryser sum over one contiguous range [k0, k1) of subset ranks in Gray-code
// order: per = (-1)^n sum_S (-1)^|S| prod_i (row sum over S).
mpz_class ryser_segment(const BinaryMatrix& m, std::uint64_t k0, std::uint64_t k1) {
  const int n = m.n;
  const auto gray = [](std::uint64_t k) { return k ^ (k >> 1); };

  std::vector<long> row_sum(n, 0);
  std::uint64_t cur = gray(k0);
  for (int j = 0; j < n; ++j) {
    if (!(cur >> j & 1)) continue;
    for (int i = 0; i < n; ++i) row_sum[i] += m.a[i][j];
  }

  mpz_class acc(0), prod;
  for (std::uint64_t k = k0; k < k1; ++k) {
    if (k != k0) {
      const std::uint64_t g = gray(k);
      const int j = std::countr_zero(g ^ cur);
      const int s = (g >> j & 1) ? 1 : -1;
      for (int i = 0; i < n; ++i) row_sum[i] += s * m.a[i][j];
      cur = g;
    }
    if (cur == 0) continue;
    prod = row_sum[0];
    for (int i = 1; i < n && sgn(prod) != 0; ++i) prod *= row_sum[i];
    const int popcount = std::popcount(cur);
    if ((n - popcount) % 2 == 0) acc += prod;
    else acc -= prod;
  }
  return acc;
}

}  // namespace

mpz_class permanent(const BinaryMatrix& m, int threads) {
  for (const auto& row : m.a) {
    if (static_cast<int>(row.size()) != m.n)
      throw std::domain_error("permanent needs a square matrix");
    for (int x : row)
      if (x != 0 && x != 1) throw std::domain_error("matrix entries must be 0 or 1");
  }
  if (m.n == 0) return mpz_class(1);
  if (m.n > 62) throw std::domain_error("matrix too large for subset enumeration");

  const std::uint64_t total = std::uint64_t(1) << m.n;
  const int workers = std::max(1, std::min<int>(threads, 64));
  if (workers == 1 || total < 1024) return ryser_segment(m, 0, total);

  std::vector<mpz_class> partial(workers);
  std::vector<std::thread> pool;
  const std::uint64_t chunk = total / workers + 1;
  for (int w = 0; w < workers; ++w) {
    const std::uint64_t k0 = std::min<std::uint64_t>(total, w * chunk);
    const std::uint64_t k1 = std::min<std::uint64_t>(total, k0 + chunk);
    pool.emplace_back([&, w, k0, k1] { partial[w] = ryser_segment(m, k0, k1); });
  }
  for (auto& th : pool) th.join();
  mpz_class acc(0);
  for (const auto& p : partial) acc += p;
  return acc;
}

}  // namespace qtet
