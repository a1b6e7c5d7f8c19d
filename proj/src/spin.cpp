#include "qtet/spin.hpp"

#include "qtet/factorial.hpp"

namespace qtet {

mpq_class delta_radicand(const Triad& t) {
  const int ta = t.a.twice(), tb = t.b.twice(), tc = t.c.twice();
  if (ta < 0 || tb < 0 || tc < 0)
    throw std::domain_error("delta factor: negative spin in triad");
  if ((ta + tb + tc) % 2 != 0)
    throw std::domain_error("delta factor: a+b+c is not an integer");
  const int x = (ta + tb - tc) / 2;
  const int y = (ta - tb + tc) / 2;
  const int z = (-ta + tb + tc) / 2;
  if (x < 0 || y < 0 || z < 0)
    throw std::domain_error("delta factor: triangle inequality violated");
  const int s = (ta + tb + tc) / 2;
  mpq_class q(factorial(x) * factorial(y) * factorial(z), factorial(s + 1));
  q.canonicalize();
  return q;
}

SignedSqrtRational delta_factor(const Triad& t) {
  return SignedSqrtRational::sqrt_of(delta_radicand(t));
}

}  // namespace qtet
