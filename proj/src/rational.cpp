#include "monogen/rational.hpp"

namespace monogen {

int compare_lin_sqrt(const Rat& u1, const Rat& v1, const Rat& u2, const Rat& v2) {
  if (sgn(v1) < 0 || sgn(v2) < 0)
    throw std::invalid_argument("compare_lin_sqrt: negative radicand");
  // sign of sqrt(v1) - (w + sqrt(v2)), w := u2 - u1
  Rat w = u2 - u1;
  // sqrt(v1) ? w + sqrt(v2).  Isolate one radical at a time.
  // Case: rhs <= 0  <=>  w <= 0 and v2 <= w^2
  if (sgn(w) <= 0 && cmp(v2, w * w) <= 0) {
    // rhs = w + sqrt(v2) <= 0 <= sqrt(v1)
    if (sgn(v1) > 0) return 1;
    // lhs == 0: sign is -(sign of rhs); rhs == 0 iff w == -sqrt(v2) exactly
    int rhs_zero = (cmp(v2, w * w) == 0) ? 0 : -1;  // rhs < 0 when strict
    return rhs_zero == 0 ? 0 : 1;
  }
  // rhs > 0: square both sides. lhs^2 - (w^2 + v2) ? 2*w*sqrt(v2)
  Rat e = v1 - w * w - v2;
  Rat tw = 2 * w;
  if (sgn(tw) >= 0) {
    if (sgn(e) < 0) return -1;
    // e >= 0, rhs' >= 0: compare squares again
    int c = cmp(e * e, tw * tw * v2);
    return c;
  }
  // tw < 0: rhs' < 0 unless v2 == 0
  if (sgn(v2) == 0) return sgn(e);
  if (sgn(e) >= 0) return 1;
  // both negative: e >= tw*sqrt(v2) <=> e^2 <= tw^2 * v2
  int c = cmp(e * e, tw * tw * v2);
  return -c;
}

std::optional<Rat> exact_sqrt(const Rat& q) {
  if (sgn(q) < 0) return std::nullopt;
  Int num = q.get_num(), den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  Int rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rat(rn, rd);
}

}  // namespace monogen
