#include <doctest.h>

#include <random>

#include "gsbs/error.hpp"
#include "gsbs/group.hpp"
#include "oracles.hpp"

using namespace gsbs;

namespace {

std::vector<GroupParams>
sample_params()
{
  std::vector<GroupParams> out;
  for (long n : {15, 21, 35, 65, 6, 4, 105, 12})
    for (unsigned c = 1; c <= 4; ++c)
      out.push_back(make_params(BigInt(n), c));
  return out;
}

GroupElement
elem(long y1, long y2, Residue theta)
{
  return GroupElement{IntVector{y1, y2}, theta};
}

} // namespace

TEST_SUITE("group")
{
  TEST_CASE("make_params examples")
  {
    auto const p = make_params(BigInt(15), 2);
    CHECK(p.primes() == std::vector<PrimePower>{{3, 1}, {5, 1}});
    CHECK(p.rank() == 2);
    CHECK(p.m() == 2);
    CHECK(p.modulus() == 4);
    CHECK(p.n() == 15);

    auto const q = make_params(BigInt(6), 3);
    CHECK(q.m() == 1);
    CHECK(q.modulus() == 1);
    CHECK(q.free_abelian());

    auto const s = make_params(BigInt(4), 1);
    CHECK(s.rank() == 1);
    CHECK(s.primes() == std::vector<PrimePower>{{2, 2}});
    CHECK(s.m() == 3);

    auto const t = make_params(BigInt(360), 1); // 2^3 3^2 5
    CHECK(t.primes() == std::vector<PrimePower>{{2, 3}, {3, 2}, {5, 1}});
    CHECK(t.m() == 1); // gcd(7, 8, 4)
  }

  TEST_CASE("make_params errors")
  {
    CHECK_THROWS_AS(make_params(BigInt(1), 1), InvalidInput);
    CHECK_THROWS_AS(make_params(BigInt(-7), 1), InvalidInput);
    CHECK_THROWS_AS(make_params(BigInt(15), 0), InvalidInput);
    // 4^12 > 10^7
    CHECK_THROWS_AS(make_params(BigInt(65), 12), ResourceError);
    CHECK_NOTHROW(make_params(BigInt(65), 12, 1'000'000'000));
    CHECK_THROWS_AS(make_params(BigInt(15), 5, 16), ResourceError);
    CHECK_THROWS_AS(make_params(parse_bigint("1000000000039"), 1), ResourceError);
    CHECK_THROWS_AS(make_params(std::vector<PrimePower>{{4, 1}, {3, 1}}, 1), InvalidInput);
    CHECK_THROWS_AS(make_params(std::vector<PrimePower>{{3, 1}, {3, 2}}, 1), InvalidInput);
    CHECK_THROWS_AS(make_params(std::vector<PrimePower>{{3, 0}}, 1), InvalidInput);
  }

  TEST_CASE("explicit factorization beyond the trial-division cap")
  {
    auto const p = make_params(std::vector<PrimePower>{{1000033, 1}, {1000003, 1}}, 2);
    CHECK(p.primes()[0].p == 1000003);
    CHECK(p.n() == BigInt(1000003) * 1000033);
    CHECK(p.m() == 6); // gcd(1000002, 1000032)
    CHECK(p.modulus() == 36);
  }

  TEST_CASE("action_exponent examples")
  {
    auto const p = make_params(BigInt(15), 2);
    CHECK(action_exponent(p, IntVector{0, 0}) == 1);
    CHECK(action_exponent(p, IntVector{1, 0}) == 3);
    CHECK(action_exponent(p, IntVector{-1, 0}) == 3);
    CHECK(action_exponent(p, IntVector{0, 1}) == 1);
    CHECK_THROWS_AS(action_exponent(p, IntVector{1}), InvalidInput);
  }

  TEST_CASE("multiply examples")
  {
    auto const p = make_params(BigInt(15), 2);
    auto const g = elem(1, 0, 1);
    CHECK(multiply(p, g, identity_element(p)) == g);
    CHECK(multiply(p, identity_element(p), g) == g);

    auto const s1 = generator_s(p, 0);
    auto const x = generator_x(p);
    auto const conj = multiply(p, multiply(p, s1, x), inverse(p, s1));
    CHECK(conj == elem(0, 0, 3));

    CHECK(multiply(p, elem(1, 0, 1), elem(0, 1, 2)) == elem(1, 1, 3));
  }

  TEST_CASE("inverse and power examples")
  {
    auto const p = make_params(BigInt(15), 2);
    CHECK(inverse(p, identity_element(p)) == identity_element(p));
    CHECK(inverse(p, elem(1, 0, 1)) == elem(-1, 0, 1));
    CHECK(multiply(p, elem(1, 0, 1), elem(-1, 0, 1)) == identity_element(p));
    CHECK(inverse(p, elem(0, 0, 3)) == elem(0, 0, 1));

    auto const g = elem(2, -1, 3);
    CHECK(power(p, g, 0) == identity_element(p));
    CHECK(power(p, generator_x(p), 4) == identity_element(p));
    CHECK(power(p, g, -1) == inverse(p, g));

    GroupElement acc = identity_element(p);
    for (int t = 1; t <= 13; ++t) {
      acc = multiply(p, acc, g);
      CHECK(power(p, g, t) == acc);
    }
    BigInt const big = parse_bigint("100000000000000000000001");
    auto const gb = power(p, g, big);
    CHECK(gb.y == IntVector{2 * big, -big});
  }

  TEST_CASE("modulus one degenerates to Z^r")
  {
    auto const p = make_params(BigInt(6), 4);
    auto const g = make_element(p, IntVector{3, -2}, 17);
    CHECK(g.theta == 0);
    CHECK(generator_x(p) == identity_element(p));
    CHECK(multiply(p, g, g) == GroupElement{IntVector{6, -4}, 0});
    CHECK(action_exponent(p, IntVector{5, 5}) == 0);
    CHECK(torsion_info(p).order == 1);
    for (unsigned k = 2; k <= 6; ++k) {
      CHECK(lcs_exponent(p, k) == 0);
      CHECK(lcs_exponent_bruteforce(p, k) == 0);
    }
  }

  TEST_CASE("torsion examples")
  {
    CHECK(torsion_info(make_params(BigInt(15), 2)).order == 4);
    CHECK(torsion_info(make_params(BigInt(6), 5)).order == 1);
    CHECK(torsion_info(make_params(BigInt(15), 1)).order == 2);
    CHECK(torsion_info(make_params(BigInt(65), 3)).order == 64);
    auto const p = make_params(BigInt(15), 2);
    CHECK_FALSE(order_of(p, generator_s(p, 0)).has_value());
    CHECK(order_of(p, elem(0, 0, 2)) == 2u);
  }

  TEST_CASE("lcs examples")
  {
    auto const p = make_params(BigInt(15), 3);
    CHECK(lcs_exponent(p, 2) == 2);
    CHECK(lcs_exponent(p, 3) == 4);
    CHECK(lcs_exponent(p, 4) == 0);
    CHECK(lcs_exponent_bruteforce(p, 2) == 2);
    CHECK(lcs_exponent_bruteforce(p, 3) == 4);
    CHECK(lcs_exponent_bruteforce(p, 4) == 0);
    CHECK_THROWS_AS(lcs_exponent(p, 1), InvalidInput);
    CHECK_THROWS_AS(lcs_exponent_bruteforce(p, 0), InvalidInput);
  }

  TEST_CASE("lcs routes agree with commutator closure")
  {
    for (auto const &p : sample_params())
      for (unsigned k = 2; k <= p.c() + 2; ++k) {
        CAPTURE(to_string(p.n()));
        CAPTURE(p.c());
        CAPTURE(k);
        Residue const e = lcs_exponent(p, k);
        CHECK(e == lcs_exponent_bruteforce(p, k));
        CHECK(e == oracle::lcs_by_commutators(p, k));
        // x^{m^{k-1}} lies in gamma_k.
        Residue const mk = reduce_mod(pow_ui(p.m(), k - 1), p.modulus());
        std::uint64_t const gen = std::gcd(e, p.modulus());
        CHECK(mk % (gen == 0 ? p.modulus() : gen) == 0);
      }
  }

  TEST_CASE("group axioms and presentation relations")
  {
    std::mt19937_64 rng(42);
    for (auto const &p : sample_params()) {
      CAPTURE(to_string(p.n()));
      CAPTURE(p.c());
      auto const e = identity_element(p);
      for (int trial = 0; trial < 200; ++trial) {
        auto const g = oracle::random_element(rng, p);
        auto const h = oracle::random_element(rng, p);
        auto const w = oracle::random_element(rng, p);
        CHECK(multiply(p, multiply(p, g, h), w) == multiply(p, g, multiply(p, h, w)));
        CHECK(multiply(p, g, inverse(p, g)) == e);
        CHECK(multiply(p, inverse(p, g), g) == e);
        CHECK(action_exponent(p, oracle::difference(g.y, IntVector(p.rank()))) ==
              action_exponent(p, g.y));
        IntVector sum(p.rank());
        for (std::size_t i = 0; i < p.rank(); ++i)
          sum[i] = g.y[i] + h.y[i];
        CHECK(action_exponent(p, sum) ==
              mul_mod(action_exponent(p, g.y), action_exponent(p, h.y), p.modulus()));
      }
      auto const x = generator_x(p);
      CHECK(power(p, x, from_u64(p.modulus())) == e);
      for (std::size_t i = 0; i < p.rank(); ++i) {
        auto const si = generator_s(p, i);
        auto const lhs = multiply(p, multiply(p, si, x), inverse(p, si));
        CHECK(lhs == power(p, x, p.prime_power(i)));
        for (std::size_t j = 0; j < p.rank(); ++j) {
          auto const sj = generator_s(p, j);
          CHECK(multiply(p, si, sj) == multiply(p, sj, si));
        }
      }
      CHECK(order_of(p, x) == p.modulus());
    }
  }
}
