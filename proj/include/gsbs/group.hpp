#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gsbs/bigint.hpp"

namespace gsbs {

inline constexpr std::uint64_t kDefaultModulusCap = 10'000'000;
inline constexpr std::uint64_t kTrialDivisionCap = 1'000'000'000'000;

struct PrimePower
{
  BigInt p;
  unsigned long y = 1;

  friend bool operator==(PrimePower const &, PrimePower const &) = default;
};

/// Fixes the group G_{n,c} = Z_{m^c} x| Z^r, where n = p_1^{y_1} ... p_r^{y_r}
/// and m = gcd(p_i^{y_i} - 1). The generator s_i of Z^r acts on x by
/// x -> x^{p_i^{y_i}}.
class GroupParams
{
public:
  BigInt const &n() const { return n_; }
  unsigned c() const { return c_; }
  std::vector<PrimePower> const &primes() const { return primes_; }
  std::size_t rank() const { return primes_.size(); }
  BigInt const &m() const { return m_; }
  /// m^c, the order of the torsion subgroup <x>.
  Residue modulus() const { return modulus_; }

  /// p_i^{y_i} as an integer.
  BigInt const &prime_power(std::size_t i) const { return prime_powers_[i]; }
  /// p_i^{y_i} mod m^c and its inverse.
  Residue unit(std::size_t i) const { return units_[i]; }
  Residue unit_inverse(std::size_t i) const { return unit_inverses_[i]; }

  /// m == 1: every quotient is free abelian of rank r.
  bool free_abelian() const { return modulus_ == 1; }

  friend bool operator==(GroupParams const &a, GroupParams const &b)
  {
    return a.c_ == b.c_ && a.primes_ == b.primes_;
  }

private:
  friend GroupParams make_params(std::vector<PrimePower>, unsigned, std::uint64_t);

  BigInt n_;
  unsigned c_ = 1;
  std::vector<PrimePower> primes_;
  std::vector<BigInt> prime_powers_;
  BigInt m_;
  Residue modulus_ = 1;
  std::vector<Residue> units_;
  std::vector<Residue> unit_inverses_;
};

/// Trial-division factorization, n <= 10^12.
std::vector<PrimePower> factorize(BigInt const &n);

/// Throws InvalidInput for n < 2 or c < 1, ResourceError if m^c > modulus_cap.
GroupParams make_params(BigInt const &n, unsigned c,
                        std::uint64_t modulus_cap = kDefaultModulusCap);

/// Same, from an explicit factorization (any order; primes must be distinct).
GroupParams make_params(std::vector<PrimePower> primes, unsigned c,
                        std::uint64_t modulus_cap = kDefaultModulusCap);

// Arithmetic in Z_mod. A modulus of 1 maps everything to 0.
Residue reduce_mod(BigInt const &a, Residue mod);
Residue add_mod(Residue a, Residue b, Residue mod);
Residue sub_mod(Residue a, Residue b, Residue mod);
Residue mul_mod(Residue a, Residue b, Residue mod);
/// Throws InvalidInput when a is not a unit.
Residue inv_mod(Residue a, Residue mod);
/// Negative exponents invert first.
Residue pow_mod(Residue base, BigInt const &e, Residue mod);

/// Normal form S^y x^theta with S^y = s_1^{y_1} ... s_r^{y_r}.
struct GroupElement
{
  IntVector y;
  Residue theta = 0;

  friend bool operator==(GroupElement const &, GroupElement const &) = default;
};

GroupElement make_element(GroupParams const &params, IntVector y, BigInt const &theta);
GroupElement identity_element(GroupParams const &params);
/// s_i, zero-based.
GroupElement generator_s(GroupParams const &params, std::size_t i);
GroupElement generator_x(GroupParams const &params);

/// P(y) = prod_i (p_i^{y_i})^{v_i} mod m^c for the vector v.
Residue action_exponent(GroupParams const &params, IntVector const &v);

/// (y1, t1)(y2, t2) = (y1 + y2, t1 P(y2)^{-1} + t2)
GroupElement multiply(GroupParams const &params, GroupElement const &g, GroupElement const &h);
/// (y, t)^{-1} = (-y, -t P(y))
GroupElement inverse(GroupParams const &params, GroupElement const &g);
GroupElement power(GroupParams const &params, GroupElement const &g, BigInt const &t);

/// Order by repeated multiplication; nullopt for elements of infinite order.
std::optional<std::uint64_t> order_of(GroupParams const &params, GroupElement const &g);

struct TorsionInfo
{
  /// torsion subgroup is <x^generator_exponent>
  std::uint64_t generator_exponent = 1;
  std::uint64_t order = 1;
};

TorsionInfo torsion_info(GroupParams const &params);

/// Exponent e with gamma_k = <x^e>, namely m^{k-1} mod m^c. Requires k >= 2.
Residue lcs_exponent(GroupParams const &params, unsigned k);

/// Same subgroup, computed by iterating commutators with the s_i inside <x>.
Residue lcs_exponent_bruteforce(GroupParams const &params, unsigned k);

} // namespace gsbs
