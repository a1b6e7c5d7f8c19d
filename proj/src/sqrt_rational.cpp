#include "qtet/sqrt_rational.hpp"

#include <mpfr.h>

#include <stdexcept>

namespace qtet {

SignedSqrtRational SignedSqrtRational::make(int sign, const mpq_class& radicand) {
  if (sgn(radicand) < 0) throw std::domain_error("negative radicand");
  SignedSqrtRational r;
  r.radicand_ = radicand;
  r.radicand_.canonicalize();
  r.sign_ = (sgn(r.radicand_) == 0) ? 0 : (sign < 0 ? -1 : (sign > 0 ? 1 : 0));
  if (r.sign_ == 0) r.radicand_ = 0;
  return r;
}

SignedSqrtRational SignedSqrtRational::of_rational(const mpq_class& q) {
  return make(sgn(q), mpq_class(q * q));
}

mpq_class SignedSqrtRational::signed_square() const {
  return sign_ < 0 ? mpq_class(-radicand_) : radicand_;
}

SignedSqrtRational SignedSqrtRational::operator*(const SignedSqrtRational& o) const {
  return make(sign_ * o.sign_, mpq_class(radicand_ * o.radicand_));
}

SignedSqrtRational SignedSqrtRational::operator-() const {
  return make(-sign_, radicand_);
}

SignedSqrtRational SignedSqrtRational::times(const mpq_class& q) const {
  return make(sign_ * sgn(q), mpq_class(radicand_ * q * q));
}

double SignedSqrtRational::to_double(unsigned bits) const {
  if (bits < 53) throw std::invalid_argument("precision must be at least 53 bits");
  if (sign_ == 0) return 0.0;
  mpfr_t x;
  mpfr_init2(x, bits);
  mpfr_set_q(x, radicand_.get_mpq_t(), MPFR_RNDN);
  mpfr_sqrt(x, x, MPFR_RNDN);
  double d = mpfr_get_d(x, MPFR_RNDN);
  mpfr_clear(x);
  return sign_ < 0 ? -d : d;
}

std::string SignedSqrtRational::str() const {
  const char s = sign_ < 0 ? '-' : (sign_ > 0 ? '+' : '0');
  return std::string(1, s) + "sqrt(" + radicand_.get_num().get_str() + "/" +
         radicand_.get_den().get_str() + ")";
}

double ssr_to_float(const SignedSqrtRational& x, unsigned bits) { return x.to_double(bits); }

namespace {

// sqrt of an exact perfect rational square; throws otherwise.
mpq_class exact_sqrt(const mpq_class& q) {
  if (!mpz_perfect_square_p(q.get_num().get_mpz_t()) ||
      !mpz_perfect_square_p(q.get_den().get_mpz_t())) {
    throw std::logic_error("SqrtRationalSum: radicands differ by a non-square factor");
  }
  mpq_class root;
  mpz_sqrt(root.get_num().get_mpz_t(), q.get_num().get_mpz_t());
  mpz_sqrt(root.get_den().get_mpz_t(), q.get_den().get_mpz_t());
  return root;
}

}  // namespace

void SqrtRationalSum::add(const SignedSqrtRational& x, const mpq_class& scale) {
  if (x.is_zero() || sgn(scale) == 0) return;
  if (empty_) {
    empty_ = false;
    radicand_ = x.radicand();
    coeff_ = scale * x.sign();
    return;
  }
  mpq_class ratio = x.radicand() / radicand_;
  ratio.canonicalize();
  coeff_ += scale * x.sign() * exact_sqrt(ratio);
}

SignedSqrtRational SqrtRationalSum::value() const {
  if (empty_ || sgn(coeff_) == 0) return SignedSqrtRational::zero();
  return SignedSqrtRational::make(sgn(coeff_), mpq_class(coeff_ * coeff_ * radicand_));
}

}  // namespace qtet
