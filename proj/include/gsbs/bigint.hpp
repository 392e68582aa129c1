#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "gsbs/error.hpp"

namespace gsbs {

using BigInt = mpz_class;
using IntVector = std::vector<BigInt>;

/// Residue in [0, modulus). Moduli are capped well below 2^63.
using Residue = std::uint64_t;

inline BigInt
abs(BigInt const &x)
{
  BigInt r;
  mpz_abs(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

inline BigInt
gcd(BigInt const &a, BigInt const &b)
{
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// Floor division remainder, always in [0, |d|).
inline BigInt
mod_floor(BigInt const &a, BigInt const &d)
{
  BigInt r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  return r;
}

/// Quotient rounded toward -infinity.
inline BigInt
div_floor(BigInt const &a, BigInt const &d)
{
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  return q;
}

inline BigInt
pow_ui(BigInt const &base, unsigned long e)
{
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline bool
fits_u64(BigInt const &x)
{
  return sgn(x) >= 0 && mpz_sizeinbase(x.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t
to_u64(BigInt const &x)
{
  std::uint64_t v = 0;
  mpz_export(&v, nullptr, -1, sizeof v, 0, 0, x.get_mpz_t());
  return v;
}

inline BigInt
from_u64(std::uint64_t v)
{
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  return r;
}

inline bool
fits_i64(BigInt const &x)
{
  static BigInt const lo = -(BigInt(1) << 63);
  static BigInt const hi = (BigInt(1) << 63) - 1;
  return x >= lo && x <= hi;
}

inline std::int64_t
to_i64(BigInt const &x)
{
  if (sgn(x) >= 0)
    return static_cast<std::int64_t>(to_u64(x));
  return -static_cast<std::int64_t>(to_u64(-x) - 1) - 1;
}

inline BigInt
from_i64(std::int64_t v)
{
  if (v >= 0)
    return from_u64(static_cast<std::uint64_t>(v));
  return -from_u64(static_cast<std::uint64_t>(-(v + 1))) - 1;
}

inline std::string
to_string(BigInt const &x)
{
  return x.get_str();
}

inline BigInt
parse_bigint(std::string const &s)
{
  BigInt r;
  // mpz_set_str accepts whitespace; reject it so "1 2" is not read as 12.
  if (s.empty() || s.find_first_of(" \t\n\r") != std::string::npos ||
      r.set_str(s, 10) != 0)
    throw InvalidInput("not a decimal integer: '" + s + "'");
  return r;
}

} // namespace gsbs
