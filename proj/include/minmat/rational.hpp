#pragma once

#include <gmpxx.h>

#include <string>

#include "minmat/errors.hpp"

namespace minmat {

// Exact arithmetic backend: Int is an arbitrary-precision integer, Rat a
// reduced fraction with positive denominator.  GMP maintains both invariants
// through every arithmetic operation; only raw (num, den) construction needs
// the explicit canonicalization in make_rat.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw domain_error("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline std::string to_string(const Int& v) { return v.get_str(); }

inline std::string to_string(const Rat& q) {
  return q.get_den() == 1 ? q.get_num().get_str()
                          : q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Strict base-10 parse, used by the JSON readers.
inline Int parse_int(const std::string& s) {
  try {
    return Int(s, 10);
  } catch (const std::invalid_argument&) {
    throw input_error("not a decimal integer: '" + s + "'");
  }
}

}  // namespace minmat
