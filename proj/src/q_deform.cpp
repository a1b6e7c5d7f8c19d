#include "qtet/q_deform.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <vector>

namespace qtet {

double quantum_integer(long long n, Level r) {
  return std::sin(n * std::numbers::pi / r.r) / std::sin(std::numbers::pi / r.r);
}

bool q_admissible(const Triad& t, Level r) {
  return t.admissible() && t.a.twice() + t.b.twice() + t.c.twice() <= 2 * (r.r - 2);
}

namespace {

// log [n]! for 0 <= n <= r-1; every [k] in that range is positive, so the
// Racah sum's signs come only from the explicit (-1)^z.
class QLogFactorials {
 public:
  explicit QLogFactorials(int r) : log_fact_(r, 0.0) {
    const double logsin1 = std::log(std::sin(std::numbers::pi / r));
    for (int n = 1; n < r; ++n) {
      const double logn = std::log(std::sin(n * std::numbers::pi / r)) - logsin1;
      log_fact_[n] = log_fact_[n - 1] + logn;
    }
  }
  double operator()(int n) const {
    assert(n >= 0 && n < static_cast<int>(log_fact_.size()));
    return log_fact_[n];
  }

 private:
  std::vector<double> log_fact_;
};

const QLogFactorials& q_log_factorials(int r) {
  static std::map<int, std::unique_ptr<QLogFactorials>> cache;
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  auto& slot = cache[r];
  if (!slot) slot = std::make_unique<QLogFactorials>(r);
  return *slot;
}

double q_delta_log(const Triad& t, const QLogFactorials& lf) {
  const int x = (t.a.twice() + t.b.twice() - t.c.twice()) / 2;
  const int y = (t.a.twice() - t.b.twice() + t.c.twice()) / 2;
  const int z = (-t.a.twice() + t.b.twice() + t.c.twice()) / 2;
  const int s = (t.a.twice() + t.b.twice() + t.c.twice()) / 2;
  return 0.5 * (lf(x) + lf(y) + lf(z) - lf(s + 1));
}

}  // namespace

double q_sixj(const Tetra6j& s, Level r) {
  for (const HalfInt j : s.spins())
    if (!r.spin_ok(j))
      throw std::domain_error("q-6j: spin " + j.str() + " exceeds the level bound (r-2)/2 at r=" +
                              std::to_string(r.r));
  for (const Triad& t : s.triads())
    if (!q_admissible(t, r)) return 0.0;

  const QLogFactorials& lf = q_log_factorials(r.r);
  const auto [ta, tb, tc, td, te, tf] = std::array{s.a.twice(), s.b.twice(), s.c.twice(),
                                                   s.d.twice(), s.e.twice(), s.f.twice()};
  const std::array<int, 4> alpha = {(ta + tb + tc) / 2, (ta + te + tf) / 2, (td + tb + tf) / 2,
                                    (td + te + tc) / 2};
  const std::array<int, 3> beta = {(ta + tb + td + te) / 2, (ta + tc + td + tf) / 2,
                                   (tb + tc + te + tf) / 2};
  const int zmin = *std::max_element(alpha.begin(), alpha.end());
  // Terms with z >= r-1 vanish through [z+1]! = 0; for q-admissible triads
  // every remaining factorial argument stays below r.
  const int zmax = std::min(*std::min_element(beta.begin(), beta.end()), r.r - 2);

  double log_delta = 0;
  for (const Triad& t : s.triads()) log_delta += q_delta_log(t, lf);

  double sum = 0;
  for (int z = zmin; z <= zmax; ++z) {
    double lg = lf(z + 1);
    for (int a : alpha) lg -= lf(z - a);
    for (int b : beta) lg -= lf(b - z);
    sum += (z % 2 == 0 ? 1.0 : -1.0) * std::exp(lg + log_delta);
  }
  return sum;
}

QIdentityCheck check_q_orthogonality(HalfInt a, HalfInt b, HalfInt c, HalfInt d,
                                     HalfInt p, HalfInt q, Level r) {
  double lhs = 0;
  const int lo = std::max(std::abs(a.twice() - b.twice()), std::abs(c.twice() - d.twice()));
  const int hi = std::min(a.twice() + b.twice(), c.twice() + d.twice());
  for (int tx = lo; tx <= std::min(hi, r.r - 2); ++tx) {
    if ((tx + a.twice() + b.twice()) % 2 != 0) continue;
    if ((tx + c.twice() + d.twice()) % 2 != 0) continue;
    const HalfInt x = HalfInt::from_twice(tx);
    lhs += quantum_integer(tx + 1, r) * q_sixj({a, b, x, c, d, p}, r) *
           q_sixj({c, d, x, a, b, q}, r);
  }
  double rhs = 0;
  if (p == q && q_admissible({a, d, p}, r) && q_admissible({c, b, p}, r))
    rhs = 1.0 / quantum_integer(p.twice() + 1, r);
  return {lhs, rhs};
}

QIdentityCheck check_q_biedenharn_elliott(HalfInt a, HalfInt b, HalfInt c, HalfInt d,
                                          HalfInt e, HalfInt f, HalfInt p, HalfInt qq,
                                          HalfInt rr, Level r) {
  const long long twice_r9 = a.twice() + b.twice() + c.twice() + d.twice() + e.twice() +
                             f.twice() + p.twice() + qq.twice() + rr.twice();
  double lhs = 0;
  const int lo = std::max({std::abs(a.twice() - b.twice()), std::abs(c.twice() - d.twice()),
                           std::abs(e.twice() - f.twice())});
  const int hi = std::min({a.twice() + b.twice(), c.twice() + d.twice(),
                           e.twice() + f.twice(), r.r - 2});
  for (int tx = lo; tx <= hi; ++tx) {
    if ((tx + a.twice() + b.twice()) % 2 != 0) continue;
    if ((tx + c.twice() + d.twice()) % 2 != 0) continue;
    if ((tx + e.twice() + f.twice()) % 2 != 0) continue;
    const HalfInt x = HalfInt::from_twice(tx);
    const double prod = q_sixj({a, b, x, c, d, p}, r) * q_sixj({c, d, x, e, f, qq}, r) *
                        q_sixj({e, f, x, b, a, rr}, r);
    if (prod == 0) continue;
    lhs += parity_sign(twice_r9 + tx) * quantum_integer(tx + 1, r) * prod;
  }
  const double rhs = q_sixj({p, qq, rr, e, a, d}, r) * q_sixj({p, qq, rr, f, b, c}, r);
  return {lhs, rhs};
}

}  // namespace qtet
