#include "qtet/wigner.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "qtet/factorial.hpp"

namespace qtet {

namespace {

bool magnetic_valid(HalfInt j, HalfInt m) {
  return (j.twice() + m.twice()) % 2 == 0 && m.abs() <= j;
}

}  // namespace

SignedSqrtRational three_j(const ThreeJ& t) {
  if (!magnetic_valid(t.j1, t.m1) || !magnetic_valid(t.j2, t.m2) || !magnetic_valid(t.j3, t.m3))
    throw std::domain_error("3j symbol: magnetic number outside its j range");
  if (t.m1 + t.m2 + t.m3 != HalfInt(0)) return SignedSqrtRational::zero();
  const Triad triad{t.j1, t.j2, t.j3};
  if (!triad.admissible()) return SignedSqrtRational::zero();

  const int tj1 = t.j1.twice(), tj2 = t.j2.twice(), tj3 = t.j3.twice();
  const int tm1 = t.m1.twice(), tm2 = t.m2.twice();

  // k-sum limits; all the combinations below are integers once the
  // selection rules hold.
  const int kmin = std::max({0, (tj2 - tj3 - tm1) / 2, (tj1 - tj3 + tm2) / 2});
  const int kmax = std::min({(tj1 + tj2 - tj3) / 2, (tj1 - tm1) / 2, (tj2 + tm2) / 2});

  mpq_class sum(0);
  for (int k = kmin; k <= kmax; ++k) {
    mpz_class den = factorial(k);
    den *= factorial((tj1 + tj2 - tj3) / 2 - k);
    den *= factorial((tj1 - tm1) / 2 - k);
    den *= factorial((tj2 + tm2) / 2 - k);
    den *= factorial((tj3 - tj2 + tm1) / 2 + k);
    den *= factorial((tj3 - tj1 - tm2) / 2 + k);
    mpq_class term(k % 2 == 0 ? 1 : -1, den);
    term.canonicalize();
    sum += term;
  }
  if (sgn(sum) == 0) return SignedSqrtRational::zero();

  mpq_class radicand = delta_radicand(triad);
  radicand *= factorial((tj1 + tm1) / 2) * factorial((tj1 - tm1) / 2);
  radicand *= factorial((tj2 + tm2) / 2) * factorial((tj2 - tm2) / 2);
  radicand *= factorial((tj3 + t.m3.twice()) / 2) * factorial((tj3 - t.m3.twice()) / 2);

  const int sign = parity_sign(tj1 - tj2 - t.m3.twice());
  return SignedSqrtRational::sqrt_of(radicand).times(sum).times(sign);
}

namespace {

thread_local int g_last_term_count = 0;

// Racah evaluation: Delta factors times the terminating 4F3 at z=1.
// alphas are the four triad sums, betas the three opposite-pair sums
// (all integers for admissible symbols, with every beta >= every alpha);
// beta1 is the minimum, ties broken by the fixed order (p1, p2, p3).
SignedSqrtRational sixj_racah(const Tetra6j& s, bool swap_beta23) {
  for (const Triad& t : s.triads())
    if (!t.admissible()) return SignedSqrtRational::zero();

  const auto [ta, tb, tc, td, te, tf] = std::array{s.a.twice(), s.b.twice(), s.c.twice(),
                                                   s.d.twice(), s.e.twice(), s.f.twice()};
  const std::array<int, 4> alpha = {(ta + tb + tc) / 2, (ta + te + tf) / 2, (td + tb + tf) / 2,
                                    (td + te + tc) / 2};
  std::array<int, 3> beta = {(ta + tb + td + te) / 2, (ta + tc + td + tf) / 2,
                             (tb + tc + te + tf) / 2};

  [[maybe_unused]] const int amax = *std::max_element(alpha.begin(), alpha.end());
  std::rotate(beta.begin(), std::min_element(beta.begin(), beta.end()), beta.end());
  if (swap_beta23) std::swap(beta[1], beta[2]);
  const int b1 = beta[0];
  assert(b1 >= amax);

  // 4F3 numerator parameters alpha_i - beta1 are nonpositive integers, so
  // the series terminates after beta1 - max(alpha) + 1 terms.
  mpq_class series(0);
  mpq_class term(1);
  int n = 0;
  for (;; ++n) {
    series += term;
    bool done = false;
    mpz_class num(1), den(1);
    for (int i = 0; i < 4; ++i) {
      const int p = alpha[i] - b1 + n;
      if (p == 0) done = true;
      num *= p;
    }
    if (done) break;
    den *= (-b1 - 1 + n);
    den *= (beta[1] - b1 + 1 + n);
    den *= (beta[2] - b1 + 1 + n);
    den *= (n + 1);
    assert(sgn(den) != 0);
    mpq_class ratio(num, den);
    ratio.canonicalize();
    term *= ratio;
  }
  g_last_term_count = n + 1;

  mpz_class den = factorial(beta[1] - b1) * factorial(beta[2] - b1);
  for (int i = 0; i < 4; ++i) den *= factorial(b1 - alpha[i]);
  mpq_class pref(factorial(b1 + 1), den);
  pref.canonicalize();
  pref *= series;
  if (b1 % 2 != 0) pref = -pref;

  mpq_class radicand = delta_radicand({s.a, s.b, s.c});
  radicand *= delta_radicand({s.a, s.e, s.f});
  radicand *= delta_radicand({s.d, s.b, s.f});
  radicand *= delta_radicand({s.d, s.e, s.c});
  return SignedSqrtRational::sqrt_of(radicand).times(pref);
}

}  // namespace

SignedSqrtRational sixj_exact(const Tetra6j& s) { return sixj_racah(s, false); }
SignedSqrtRational sixj_exact_beta_swapped(const Tetra6j& s) { return sixj_racah(s, true); }
int sixj_last_term_count() { return g_last_term_count; }

namespace {

// Memoized 3j lookup for the oracle contraction; keyed by the six twices.
SignedSqrtRational three_j_memo(const ThreeJ& t) {
  struct Hash {
    std::size_t operator()(const std::array<int, 6>& k) const {
      std::size_t h = 0;
      for (int v : k) h = h * 1000003u + static_cast<std::size_t>(v + 512);
      return h;
    }
  };
  static std::unordered_map<std::array<int, 6>, SignedSqrtRational, Hash> memo;
  static std::shared_mutex mutex;

  const std::array<int, 6> key = {t.j1.twice(), t.j2.twice(), t.j3.twice(),
                                  t.m1.twice(), t.m2.twice(), t.m3.twice()};
  {
    std::shared_lock lock(mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  SignedSqrtRational v = three_j(t);
  std::unique_lock lock(mutex);
  memo.insert_or_assign(key, v);
  return v;
}

}  // namespace

SignedSqrtRational sixj_oracle(const Tetra6j& s) {
  for (const Triad& t : s.triads())
    if (!t.admissible()) return SignedSqrtRational::zero();

  // Sum over magnetic numbers of
  //   (a b c; al be ga)(a e f; al ep -ph)(d b f; -de be ph)(d e c; de -ep ga)
  // with phase (-1)^(d+e+f+de+ep+ph); al, be, ep free, the rest fixed by the
  // selection rules.
  SqrtRationalSum sum;
  for (int tal = -s.a.twice(); tal <= s.a.twice(); tal += 2) {
    for (int tbe = -s.b.twice(); tbe <= s.b.twice(); tbe += 2) {
      const int tga = -tal - tbe;
      if (std::abs(tga) > s.c.twice()) continue;
      for (int tep = -s.e.twice(); tep <= s.e.twice(); tep += 2) {
        const int tph = tal + tep;
        if (std::abs(tph) > s.f.twice()) continue;
        const int tde = tbe + tph;
        if (std::abs(tde) > s.d.twice()) continue;

        const auto h = [](int t) { return HalfInt::from_twice(t); };
        SignedSqrtRational p = three_j({s.a, s.b, s.c, h(tal), h(tbe), h(tga)});
        if (p.is_zero()) continue;
        p = p * three_j_memo({s.a, s.e, s.f, h(tal), h(tep), h(-tph)});
        if (p.is_zero()) continue;
        p = p * three_j_memo({s.d, s.b, s.f, h(-tde), h(tbe), h(tph)});
        if (p.is_zero()) continue;
        p = p * three_j_memo({s.d, s.e, s.c, h(tde), h(-tep), h(tga)});
        if (p.is_zero()) continue;

        const int phase =
            parity_sign(s.d.twice() + s.e.twice() + s.f.twice() + tde + tep + tph);
        sum.add(p, phase);
      }
    }
  }
  return sum.value();
}

std::vector<Tetra6j> classical_images(const Tetra6j& s) {
  // Slots (0,1,2) upper row, (3,4,5) lower row. Column permutations act on
  // both rows; a flip swaps upper and lower in two of the three columns.
  static const std::array<std::array<int, 3>, 6> col_perms = {
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  static const std::array<std::array<bool, 3>, 4> flips = {
      {{false, false, false}, {true, true, false}, {true, false, true}, {false, true, true}}};

  const std::array<int, 6> t = s.twices();
  std::vector<Tetra6j> out;
  out.reserve(24);
  for (const auto& perm : col_perms) {
    for (const auto& flip : flips) {
      std::array<int, 6> img{};
      for (int col = 0; col < 3; ++col) {
        const int src = perm[col];
        img[col] = flip[col] ? t[src + 3] : t[src];
        img[col + 3] = flip[col] ? t[src] : t[src + 3];
      }
      out.push_back(Tetra6j::from_twices(img));
    }
  }
  return out;
}

namespace {

// Regge transform fixing one column: the spins of the other two columns are
// reflected about their half-sum. Returns false when inapplicable (half-sum
// not a half-integer, or a negative image; neither arises for admissible
// inputs).
bool regge_image(const std::array<int, 6>& t, int fixed_col, std::array<int, 6>& out) {
  const std::array<int, 4> moved = [&] {
    switch (fixed_col) {
      case 2: return std::array<int, 4>{0, 1, 3, 4};
      case 1: return std::array<int, 4>{0, 2, 3, 5};
      default: return std::array<int, 4>{1, 2, 4, 5};
    }
  }();
  int sum = 0;
  for (int i : moved) sum += t[i];
  if (sum % 2 != 0) return false;
  const int ts = sum / 2;  // twice the Regge half-sum
  out = t;
  for (int i : moved) {
    out[i] = ts - t[i];
    if (out[i] < 0) return false;
  }
  return true;
}

}  // namespace

std::vector<Tetra6j> symmetry_orbit(const Tetra6j& s) {
  [[maybe_unused]] const bool input_admissible = s.admissible();
  std::set<std::array<int, 6>> seen;
  std::vector<std::array<int, 6>> queue{s.twices()};
  seen.insert(s.twices());

  while (!queue.empty()) {
    const std::array<int, 6> cur = queue.back();
    queue.pop_back();
    const Tetra6j sym = Tetra6j::from_twices(cur);
    std::vector<std::array<int, 6>> next;
    for (const Tetra6j& img : classical_images(sym)) next.push_back(img.twices());
    for (int col = 0; col < 3; ++col) {
      std::array<int, 6> img;
      if (regge_image(cur, col, img)) {
        next.push_back(img);
      } else {
        assert(!input_admissible);
      }
    }
    for (const auto& img : next)
      if (seen.insert(img).second) queue.push_back(img);
  }

  std::vector<Tetra6j> orbit;
  orbit.reserve(seen.size());
  for (const auto& t : seen) orbit.push_back(Tetra6j::from_twices(t));
  assert(!input_admissible || 144 % orbit.size() == 0);
  return orbit;
}

std::array<int, 6> canonical_key(const Tetra6j& s, bool include_regge) {
  std::array<int, 6> best = s.twices();
  if (include_regge) {
    for (const Tetra6j& img : symmetry_orbit(s)) best = std::min(best, img.twices());
    return best;
  }
  for (const Tetra6j& img : classical_images(s)) best = std::min(best, img.twices());
  return best;
}

SignedSqrtRational SixjCache::operator()(const Tetra6j& s) {
  if (!s.admissible()) return SignedSqrtRational::zero();
  const std::array<int, 6> key = canonical_key(s, regge_keys_);
  {
    std::shared_lock lock(mutex_);
    auto it = map_.find(key);
    if (it != map_.end()) {
      hits_.fetch_add(1, std::memory_order_relaxed);
      return it->second;
    }
  }
  misses_.fetch_add(1, std::memory_order_relaxed);
  SignedSqrtRational v = sixj_exact(s);
  std::unique_lock lock(mutex_);
  map_.insert_or_assign(key, v);
  return v;
}

std::size_t SixjCache::size() const {
  std::shared_lock lock(mutex_);
  return map_.size();
}

}  // namespace qtet
