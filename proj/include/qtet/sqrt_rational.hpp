#pragma once

#include <gmpxx.h>

#include <string>

namespace qtet {

// Exact value of the form sign * sqrt(p/q), the closure of 3j/6j symbols
// under multiplication. The radicand is kept nonnegative and in lowest
// terms; sign == 0 iff radicand == 0. There is deliberately no operator+:
// sums of square roots leave the closed form. Summation happens inside
// rational arithmetic (see SqrtRationalSum) before the final square root.
class SignedSqrtRational {
 public:
  SignedSqrtRational() : sign_(0), radicand_(0) {}

  static SignedSqrtRational zero() { return SignedSqrtRational(); }
  static SignedSqrtRational one() { return sqrt_of(mpq_class(1)); }
  // sign * sqrt(radicand); radicand must be >= 0.
  static SignedSqrtRational make(int sign, const mpq_class& radicand);
  // +sqrt(radicand)
  static SignedSqrtRational sqrt_of(const mpq_class& radicand) { return make(+1, radicand); }
  // The exact rational q, i.e. sgn(q) * sqrt(q^2).
  static SignedSqrtRational of_rational(const mpq_class& q);

  int sign() const { return sign_; }
  const mpq_class& radicand() const { return radicand_; }
  bool is_zero() const { return sign_ == 0; }

  // Signed square: sign * radicand (exact rational).
  mpq_class signed_square() const;

  SignedSqrtRational operator*(const SignedSqrtRational& o) const;
  SignedSqrtRational operator-() const;
  // Exact scaling by a rational factor.
  SignedSqrtRational times(const mpq_class& q) const;

  bool operator==(const SignedSqrtRational& o) const {
    return sign_ == o.sign_ && radicand_ == o.radicand_;
  }

  // sign * sqrt(radicand) correctly rounded at `bits` of precision
  // (bits >= 53), then rounded to double.
  double to_double(unsigned bits = 53) const;

  // "s*sqrt(p/q)" with s in {+,-,0}, p/q in lowest terms, base 10.
  std::string str() const;

 private:
  int sign_;
  mpq_class radicand_;
};

inline SignedSqrtRational ssr_to_exact(const SignedSqrtRational& x) { return x; }
double ssr_to_float(const SignedSqrtRational& x, unsigned bits);

// Accumulates sums c1*sqrt(r1) + c2*sqrt(r2) + ... whose radicands agree up
// to perfect rational squares, folding each term into rational arithmetic
// against the first nonzero radicand seen. Used by the 6j contraction oracle
// and the identity checks, where the shared Delta-factor structure
// guarantees compatibility; an incompatible radicand throws.
class SqrtRationalSum {
 public:
  // accumulate scale * x
  void add(const SignedSqrtRational& x, const mpq_class& scale = mpq_class(1));
  SignedSqrtRational value() const;

 private:
  bool empty_ = true;
  mpq_class coeff_;
  mpq_class radicand_;
};

}  // namespace qtet
