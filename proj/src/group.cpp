#include "gsbs/group.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gsbs/error.hpp"

namespace gsbs {

std::vector<PrimePower>
factorize(BigInt const &n)
{
  if (n < 2)
    throw InvalidInput("n must be at least 2, got " + to_string(n));
  if (n > from_u64(kTrialDivisionCap))
    throw ResourceError("n = " + to_string(n) +
                        " exceeds the trial-division cap 10^12; pass a factorization");
  std::uint64_t rest = to_u64(n);
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
    if (rest % p != 0)
      continue;
    unsigned long y = 0;
    while (rest % p == 0) {
      rest /= p;
      ++y;
    }
    out.push_back({from_u64(p), y});
  }
  if (rest > 1)
    out.push_back({from_u64(rest), 1});
  return out;
}

GroupParams
make_params(BigInt const &n, unsigned c, std::uint64_t modulus_cap)
{
  return make_params(factorize(n), c, modulus_cap);
}

GroupParams
make_params(std::vector<PrimePower> primes, unsigned c, std::uint64_t modulus_cap)
{
  if (c < 1)
    throw InvalidInput("class c must be at least 1");
  if (primes.empty())
    throw InvalidInput("n must be at least 2");
  std::sort(primes.begin(), primes.end(),
            [](PrimePower const &a, PrimePower const &b) { return a.p < b.p; });
  for (std::size_t i = 0; i < primes.size(); ++i) {
    auto const &pp = primes[i];
    if (pp.y < 1)
      throw InvalidInput("prime exponents must be positive");
    if (pp.p < 2 || mpz_probab_prime_p(pp.p.get_mpz_t(), 30) == 0)
      throw InvalidInput(to_string(pp.p) + " is not prime");
    if (i > 0 && primes[i - 1].p == pp.p)
      throw InvalidInput("repeated prime " + to_string(pp.p));
  }

  GroupParams g;
  g.c_ = c;
  g.primes_ = std::move(primes);
  g.n_ = 1;
  g.m_ = 0;
  for (auto const &pp : g.primes_) {
    BigInt q = pow_ui(pp.p, pp.y);
    g.n_ *= q;
    g.m_ = gcd(g.m_, q - 1);
    g.prime_powers_.push_back(std::move(q));
  }

  BigInt const modulus = pow_ui(g.m_, c);
  if (modulus > from_u64(modulus_cap))
    throw ResourceError("modulus m^c = " + to_string(g.m_) + "^" + std::to_string(c) +
                        " exceeds the cap " + std::to_string(modulus_cap));
  g.modulus_ = to_u64(modulus);

  for (auto const &q : g.prime_powers_) {
    if (gcd(q, modulus) != 1)
      throw std::logic_error("prime power is not a unit mod m^c");
    Residue const u = reduce_mod(q, g.modulus_);
    g.units_.push_back(u);
    g.unit_inverses_.push_back(inv_mod(u, g.modulus_));
  }
  return g;
}

Residue
reduce_mod(BigInt const &a, Residue mod)
{
  return to_u64(mod_floor(a, from_u64(mod)));
}

Residue
add_mod(Residue a, Residue b, Residue mod)
{
  return static_cast<Residue>((static_cast<unsigned __int128>(a) + b) % mod);
}

Residue
sub_mod(Residue a, Residue b, Residue mod)
{
  return add_mod(a % mod, mod - b % mod, mod);
}

Residue
mul_mod(Residue a, Residue b, Residue mod)
{
  return static_cast<Residue>((static_cast<unsigned __int128>(a) * b) % mod);
}

Residue
inv_mod(Residue a, Residue mod)
{
  if (mod == 1)
    return 0;
  // Extended Euclid on signed 128-bit values.
  __int128 old_r = a % mod, r = mod;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    __int128 const q = old_r / r;
    __int128 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1)
    throw InvalidInput(std::to_string(a) + " is not a unit mod " + std::to_string(mod));
  __int128 const m = static_cast<__int128>(mod);
  return static_cast<Residue>(((old_s % m) + m) % m);
}

Residue
pow_mod(Residue base, BigInt const &e, Residue mod)
{
  if (mod == 1)
    return 0;
  if (sgn(e) < 0)
    return pow_mod(inv_mod(base, mod), -e, mod);
  if (fits_u64(e)) {
    std::uint64_t k = to_u64(e);
    Residue result = 1 % mod;
    Residue b = base % mod;
    while (k != 0) {
      if (k & 1)
        result = mul_mod(result, b, mod);
      b = mul_mod(b, b, mod);
      k >>= 1;
    }
    return result;
  }
  BigInt r;
  BigInt const b = from_u64(base);
  BigInt const m = from_u64(mod);
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return to_u64(r);
}

namespace {

void
require_rank(GroupParams const &params, IntVector const &y)
{
  if (y.size() != params.rank())
    throw InvalidInput("exponent vector has length " + std::to_string(y.size()) +
                       ", expected r = " + std::to_string(params.rank()));
}

} // namespace

GroupElement
make_element(GroupParams const &params, IntVector y, BigInt const &theta)
{
  require_rank(params, y);
  return {std::move(y), reduce_mod(theta, params.modulus())};
}

GroupElement
identity_element(GroupParams const &params)
{
  return {IntVector(params.rank()), 0};
}

GroupElement
generator_s(GroupParams const &params, std::size_t i)
{
  if (i >= params.rank())
    throw InvalidInput("generator index out of range");
  GroupElement g = identity_element(params);
  g.y[i] = 1;
  return g;
}

GroupElement
generator_x(GroupParams const &params)
{
  GroupElement g = identity_element(params);
  g.theta = 1 % params.modulus();
  return g;
}

Residue
action_exponent(GroupParams const &params, IntVector const &v)
{
  require_rank(params, v);
  Residue const mod = params.modulus();
  Residue acc = 1 % mod;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0)
      continue;
    Residue const base = sgn(v[i]) > 0 ? params.unit(i) : params.unit_inverse(i);
    acc = mul_mod(acc, pow_mod(base, abs(v[i]), mod), mod);
  }
  return acc;
}

GroupElement
multiply(GroupParams const &params, GroupElement const &g, GroupElement const &h)
{
  require_rank(params, g.y);
  require_rank(params, h.y);
  Residue const mod = params.modulus();
  GroupElement out;
  out.y.resize(g.y.size());
  for (std::size_t i = 0; i < g.y.size(); ++i)
    out.y[i] = g.y[i] + h.y[i];
  if (mod == 1)
    return out;
  // x^t S^y = S^y x^{t P(y)^{-1}}, and P(y)^{-1} = P(-y).
  IntVector neg(h.y.size());
  for (std::size_t i = 0; i < h.y.size(); ++i)
    neg[i] = -h.y[i];
  Residue const twist = action_exponent(params, neg);
  out.theta = add_mod(mul_mod(g.theta, twist, mod), h.theta, mod);
  return out;
}

GroupElement
inverse(GroupParams const &params, GroupElement const &g)
{
  require_rank(params, g.y);
  Residue const mod = params.modulus();
  GroupElement out;
  out.y.resize(g.y.size());
  for (std::size_t i = 0; i < g.y.size(); ++i)
    out.y[i] = -g.y[i];
  if (mod == 1)
    return out;
  out.theta = sub_mod(0, mul_mod(g.theta, action_exponent(params, g.y), mod), mod);
  return out;
}

GroupElement
power(GroupParams const &params, GroupElement const &g, BigInt const &t)
{
  if (sgn(t) < 0)
    return power(params, inverse(params, g), -t);
  GroupElement result = identity_element(params);
  GroupElement base = g;
  BigInt k = t;
  while (sgn(k) > 0) {
    if (mpz_odd_p(k.get_mpz_t()))
      result = multiply(params, result, base);
    k >>= 1;
    if (sgn(k) > 0)
      base = multiply(params, base, base);
  }
  return result;
}

std::optional<std::uint64_t>
order_of(GroupParams const &params, GroupElement const &g)
{
  for (auto const &v : g.y)
    if (v != 0)
      return std::nullopt;
  GroupElement const e = identity_element(params);
  GroupElement h = g;
  std::uint64_t order = 1;
  while (h != e) {
    h = multiply(params, h, g);
    ++order;
  }
  return order;
}

TorsionInfo
torsion_info(GroupParams const &params)
{
  TorsionInfo info;
  info.generator_exponent = 1;
  info.order = params.modulus();
  auto const counted = order_of(params, generator_x(params));
  if (!counted || *counted != info.order)
    throw std::logic_error("order of x disagrees with m^c");
  return info;
}

namespace {

void
require_lcs_index(unsigned k)
{
  if (k < 2)
    throw InvalidInput("lower central series index must be at least 2");
}

} // namespace

Residue
lcs_exponent(GroupParams const &params, unsigned k)
{
  require_lcs_index(k);
  if (k > params.c())
    return 0;
  return reduce_mod(pow_ui(params.m(), k - 1), params.modulus());
}

Residue
lcs_exponent_bruteforce(GroupParams const &params, unsigned k)
{
  require_lcs_index(k);
  BigInt const modulus = from_u64(params.modulus());
  // gamma_2 is generated by the commutators [s_i, x] = x^{p_i^{y_i} - 1}.
  BigInt e = modulus;
  for (std::size_t i = 0; i < params.rank(); ++i)
    e = gcd(e, params.prime_power(i) - 1);
  // gamma_{j+1} = [gamma_j, G]: [s_i, x^e] = x^{e (p_i^{y_i} - 1)}.
  for (unsigned j = 2; j < k; ++j) {
    BigInt next = modulus;
    for (std::size_t i = 0; i < params.rank(); ++i)
      next = gcd(next, e * (params.prime_power(i) - 1));
    e = next;
  }
  return reduce_mod(e, params.modulus());
}

} // namespace gsbs
