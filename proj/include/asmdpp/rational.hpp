#pragma once

#include <gmpxx.h>

#include <string>

#include "asmdpp/errors.hpp"

namespace asmdpp {

// Arbitrary-precision rational, canonical (reduced, positive denominator).
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw DivisionByZero();
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p", "-p" or "p/q".
inline Rat rat_parse(const std::string& s) {
  try {
    Rat r(s);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational literal: " + s);
  }
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  Rat b = base;
  bool inv = e < 0;
  if (inv) {
    if (b == 0) throw DivisionByZero();
    b = 1 / b;
    e = -e;
  }
  Rat acc(1);
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

}  // namespace asmdpp
