#include "qtet/recoupling.hpp"

#include <algorithm>

#include "qtet/wigner.hpp"

namespace qtet {

namespace {

// Admissible intermediate range for coupling (x with a, b) and (x with c, d):
// twice-values from max(|a-b|,|c-d|) to min(a+b,c+d) in steps of 2, empty
// when the parities conflict.
std::vector<HalfInt> coupling_range(HalfInt a, HalfInt b, HalfInt c, HalfInt d) {
  const int lo = std::max(std::abs(a.twice() - b.twice()), std::abs(c.twice() - d.twice()));
  const int hi = std::min(a.twice() + b.twice(), c.twice() + d.twice());
  std::vector<HalfInt> out;
  if ((a.twice() + b.twice()) % 2 != (c.twice() + d.twice()) % 2) return out;
  for (int t = lo; t <= hi; t += 2) {
    if ((t + a.twice() + b.twice()) % 2 != 0) continue;
    out.push_back(HalfInt::from_twice(t));
  }
  return out;
}

}  // namespace

RecouplingMatrix recoupling_matrix(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j) {
  RecouplingMatrix m;
  m.j1 = j1;
  m.j2 = j2;
  m.j3 = j3;
  m.j = j;
  m.row_labels = coupling_range(j1, j2, j, j3);
  m.col_labels = coupling_range(j2, j3, j, j1);
  if (m.row_labels.empty() || m.col_labels.empty())
    throw std::domain_error("recoupling matrix: empty intermediate-spin range");

  const int phase = parity_sign(j1.twice() + j2.twice() + j3.twice() + j.twice());
  m.entry.resize(m.row_labels.size());
  for (std::size_t r = 0; r < m.row_labels.size(); ++r) {
    const HalfInt j12 = m.row_labels[r];
    m.entry[r].reserve(m.col_labels.size());
    for (const HalfInt j23 : m.col_labels) {
      SignedSqrtRational v = sixj_exact({j1, j2, j12, j3, j, j23});
      v = v * SignedSqrtRational::sqrt_of(mpq_class(j12.dim()) * j23.dim());
      m.entry[r].push_back(v.times(phase));
    }
  }
  return m;
}

bool RecouplingMatrix::is_orthogonal() const {
  const std::size_t n = row_labels.size();
  if (n != col_labels.size()) return false;
  const auto gram_is_identity = [&](bool transpose) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        SqrtRationalSum dot;
        for (std::size_t l = 0; l < n; ++l) {
          const auto& x = transpose ? entry[l][i] : entry[i][l];
          const auto& y = transpose ? entry[l][k] : entry[k][l];
          dot.add(x * y);
        }
        const SignedSqrtRational want =
            i == k ? SignedSqrtRational::one() : SignedSqrtRational::zero();
        if (!(dot.value() == want)) return false;
      }
    }
    return true;
  };
  return gram_is_identity(false) && gram_is_identity(true);
}

mpq_class recoupling_probability(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j,
                                 HalfInt j12, HalfInt j23) {
  const Triad t1{j1, j2, j12}, t2{j12, j3, j}, t3{j2, j3, j23}, t4{j1, j23, j};
  if (!t1.admissible() || !t2.admissible() || !t3.admissible() || !t4.admissible())
    return mpq_class(0);
  const SignedSqrtRational v = sixj_exact({j1, j2, j12, j3, j, j23});
  return mpq_class(v.radicand() * j12.dim() * j23.dim());
}

IdentityCheck check_biedenharn_elliott(HalfInt a, HalfInt b, HalfInt c, HalfInt d,
                                       HalfInt e, HalfInt f, HalfInt p, HalfInt q, HalfInt r) {
  const long long twice_r9 = a.twice() + b.twice() + c.twice() + d.twice() + e.twice() +
                             f.twice() + p.twice() + q.twice() + r.twice();

  SqrtRationalSum lhs;
  // x must couple (a,b), (c,d) and (e,f) simultaneously.
  const int lo = std::max({std::abs(a.twice() - b.twice()), std::abs(c.twice() - d.twice()),
                           std::abs(e.twice() - f.twice())});
  const int hi = std::min({a.twice() + b.twice(), c.twice() + d.twice(), e.twice() + f.twice()});
  for (int tx = lo; tx <= hi; ++tx) {
    if ((tx + a.twice() + b.twice()) % 2 != 0) continue;
    if ((tx + c.twice() + d.twice()) % 2 != 0) continue;
    if ((tx + e.twice() + f.twice()) % 2 != 0) continue;
    const HalfInt x = HalfInt::from_twice(tx);
    SignedSqrtRational prod = sixj_exact({a, b, x, c, d, p});
    if (prod.is_zero()) continue;
    prod = prod * sixj_exact({c, d, x, e, f, q});
    if (prod.is_zero()) continue;
    prod = prod * sixj_exact({e, f, x, b, a, r});
    if (prod.is_zero()) continue;
    // (-1)^(R+x) is well defined here: R+x is an integer whenever all the
    // triads involved are admissible, which the nonzero product guarantees.
    const int phase = parity_sign(twice_r9 + tx);
    lhs.add(prod, mpq_class(phase) * x.dim());
  }

  SqrtRationalSum rhs;
  rhs.add(sixj_exact({p, q, r, e, a, d}) * sixj_exact({p, q, r, f, b, c}));
  return {lhs.value(), rhs.value()};
}

IdentityCheck check_orthogonality(HalfInt a, HalfInt b, HalfInt c, HalfInt d,
                                  HalfInt p, HalfInt q) {
  SqrtRationalSum lhs;
  for (const HalfInt x : coupling_range(a, b, c, d)) {
    SignedSqrtRational prod = sixj_exact({a, b, x, c, d, p});
    if (prod.is_zero()) continue;
    prod = prod * sixj_exact({c, d, x, a, b, q});
    if (prod.is_zero()) continue;
    lhs.add(prod, mpq_class(x.dim()));
  }

  SignedSqrtRational rhs = SignedSqrtRational::zero();
  const bool fixed_admissible = Triad{a, d, p}.admissible() && Triad{c, b, p}.admissible() &&
                                Triad{c, b, q}.admissible() && Triad{a, d, q}.admissible();
  if (p == q && fixed_admissible) rhs = SignedSqrtRational::of_rational(mpq_class(1, p.dim()));
  return {lhs.value(), rhs};
}

}  // namespace qtet
