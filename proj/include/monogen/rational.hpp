#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace monogen {

using Int = mpz_class;
using Rat = mpq_class;

// Parses "p", "-p" or "p/q" in base 10.
inline Rat parse_rational(const std::string& s) {
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  if (sgn(q.get_den()) <= 0)
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// floor(q) as an integer.
inline Int floor_rat(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

// Bit length of |z| (0 for z == 0).
inline std::size_t bit_length(const Int& z) {
  return z == 0 ? 0 : mpz_sizeinbase(z.get_mpz_t(), 2);
}

// Encoding length of a rational: bits of numerator plus denominator.
inline std::size_t bit_length(const Rat& q) {
  return bit_length(Int(q.get_num())) + bit_length(Int(q.get_den()));
}

// Exact sign of (u1 + sqrt(v1)) - (u2 + sqrt(v2)), v1, v2 >= 0.
// Used for second-order cone comparisons without floating point.
int compare_lin_sqrt(const Rat& u1, const Rat& v1, const Rat& u2, const Rat& v2);

// Rational square root, if it exists.
std::optional<Rat> exact_sqrt(const Rat& q);

}  // namespace monogen
