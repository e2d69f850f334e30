#pragma once

#include <gmpxx.h>
#include <string>

namespace uhecke {

// Arbitrary-precision rational. mpq_class does NOT canonicalize two-argument
// constructions; use rat(n, d) below (or call canonicalize()) whenever the
// pair might share a factor, since comparisons require canonical form.
using Rat = mpq_class;

inline Rat rat(long n, long d = 1) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

inline std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// q^e as a rational for integer e (q itself a positive integer).
inline Rat int_pow(long base, long e) {
  Rat r = 1;
  Rat b = e >= 0 ? Rat(base) : Rat(1, base);
  long n = e >= 0 ? e : -e;
  for (long i = 0; i < n; ++i) r *= b;
  return r;
}

}  // namespace uhecke
