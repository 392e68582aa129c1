// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "gsbs/corpus.hpp"
#include "gsbs/error.hpp"
#include "gsbs/group.hpp"
#include "gsbs/twisted.hpp"
#include "gsbs/witness.hpp"
#include "oracles.hpp"

using namespace gsbs;

namespace {

struct Verdict
{
  bool ok = true;
  std::string detail;

  void
  fail(std::string const &why)
  {
    if (ok)
      detail = why;
    ok = false;
  }
};

std::vector<GroupParams>
lcs_params()
{
  std::vector<GroupParams> out;
  for (long n : {15, 21, 35, 65, 6, 4})
    for (unsigned c = 1; c <= 4; ++c)
      out.push_back(make_params(BigInt(n), c));
  return out;
}

std::vector<GroupParams>
corpus_params()
{
  std::ifstream in(GSBS_DEFAULT_CORPUS);
  std::stringstream ss;
  ss << in.rdbuf();
  std::vector<GroupParams> out;
  for (auto const &cc : corpus_from_json(parse_json(ss.str())))
    out.push_back(make_params(cc.n, cc.c));
  return out;
}

std::string
label(GroupParams const &p)
{
  return "n=" + to_string(p.n()) + " c=" + std::to_string(p.c());
}

Verdict
torsion_order()
{
  Verdict v;
  std::size_t checked = 0;
  for (auto const &p : lcs_params()) {
    BigInt const expected = pow_ui(p.m(), p.c());
    if (from_u64(torsion_info(p).order) != expected)
      v.fail(label(p) + ": order " + std::to_string(torsion_info(p).order));
    auto const brute = order_of(p, generator_x(p));
    if (!brute || from_u64(*brute) != expected)
      v.fail(label(p) + ": order_of(x) disagrees");
    ++checked;
  }
  if (v.ok)
    v.detail = std::to_string(checked) + " params, |<x>| = m^c";
  return v;
}

Verdict
lower_central_series()
{
  Verdict v;
  std::size_t checked = 0;
  for (auto const &p : lcs_params())
    for (unsigned k = 2; k <= p.c() + 2; ++k) {
      Residue const fast = lcs_exponent(p, k);
      Residue const slow = lcs_exponent_bruteforce(p, k);
      Residue const expected =
        k > p.c() ? 0 : reduce_mod(pow_ui(p.m(), k - 1), p.modulus());
      Residue const commutators = oracle::lcs_by_commutators(p, k);
      if (fast != slow || fast != expected || commutators != expected)
        v.fail(label(p) + " k=" + std::to_string(k));
      ++checked;
    }
  if (v.ok)
    v.detail = std::to_string(checked) + " (params, k) pairs";
  return v;
}

Verdict
witness_determinants()
{
  Verdict v;
  for (std::size_t r = 2; r <= 5; ++r)
    for (long q : {1, 2, 3, 4, 9}) {
      IntMatrix const N = build_N(r, q);
      IntMatrix const id = IntMatrix::identity(r);
      IntMatrix const M = BigInt(q) * N + id;
      if (oracle::det_leibniz(N) != 1 || det(N) != 1)
        v.fail("det N_" + std::to_string(r) + " q=" + std::to_string(q));
      if (oracle::det_leibniz(M) != 1 || det(M) != 1)
        v.fail("det M r=" + std::to_string(r) + " q=" + std::to_string(q));
      BigInt const qr = pow_ui(BigInt(q), r);
      if (oracle::det_leibniz(M - id) != qr || det(M - id) != qr)
        v.fail("det(M - Id) r=" + std::to_string(r) + " q=" + std::to_string(q));
    }
  if (v.ok)
    v.detail = "20 (r, q) pairs";
  return v;
}

Verdict
congruence_criterion()
{
  Verdict v;
  for (auto const &p : corpus_params()) {
    IntMatrix const M = build_witness_matrix(p).M;
    IntMatrix const id = IntMatrix::identity(p.rank());
    for (std::size_t i = 0; i < p.rank(); ++i) {
      if (!congruence_holds(p, M, i))
        v.fail(label(p) + ": witness fails (M,c," + std::to_string(i + 1) + ")");
      if (!congruence_holds(p, id, i))
        v.fail(label(p) + ": identity fails");
    }
  }
  auto const p = make_params(BigInt(15), 2);
  if (congruence_holds(p, IntMatrix{{0, 1}, {1, 0}}, 0))
    v.fail("swap matrix passes (M,c,1) for n=15 c=2");
  if (v.ok)
    v.detail = "witnesses and identity pass, swap fails (M,c,1)";
  return v;
}

Verdict
finiteness_equivalence()
{
  Verdict v;
  std::mt19937_64 rng(2024);
  std::size_t finite = 0, total = 0;
  for (std::size_t r : {2u, 3u}) {
    auto const p = make_params(BigInt(r == 2 ? 15 : 105), 1);
    for (int t = 0; t < 100; ++t) {
      IntMatrix const M = oracle::random_unimodular(rng, r);
      auto const phi = make_automorphism(p, M, 1, IntVector(r, 0));
      bool const by_det = oracle::det_leibniz(M - IntMatrix::identity(r)) != 0;
      bool const fin = reidemeister_finite(p, phi);
      bool const ab = reidemeister_abelianized(M).has_value();
      if (fin != by_det || ab != by_det)
        v.fail("disagreement on a rank " + std::to_string(r) + " matrix");
      finite += fin;
      ++total;
    }
  }
  if (v.ok)
    v.detail = std::to_string(total) + " matrices, " + std::to_string(finite) + " finite";
  return v;
}

Verdict
bound_reproduction()
{
  Verdict v;
  auto const p2 = make_params(BigInt(15), 2);
  auto const r2 = reidemeister_exact(p2, witness_automorphism(p2));
  if (!r2.finite || !r2.count || *r2.count > 16 || r2.bound != 16)
    v.fail("n=15 c=2 count above 16");
  auto const p1 = make_params(BigInt(15), 1);
  auto const r1 = reidemeister_exact(p1, witness_automorphism(p1));
  if (!r1.finite || !r1.count || *r1.count > abs(r1.det_M_minus_I) * 2)
    v.fail("n=15 c=1 count above d*2");
  if (v.ok)
    v.detail = "R = " + to_string(*r2.count) + " <= 16, R = " + to_string(*r1.count) +
               " <= " + to_string(abs(r1.det_M_minus_I) * 2);
  return v;
}

Verdict
oracle_equivalence()
{
  Verdict v;
  IntMatrix const neg{{-1, 0}, {0, -1}};
  struct Config
  {
    long n;
    unsigned c;
    std::function<Automorphism(GroupParams const &)> make;
  };
  auto witness = [](GroupParams const &p) { return witness_automorphism(p); };
  std::vector<Config> const configs{
    {6, 1, [&](GroupParams const &p) { return make_automorphism(p, neg, 1, IntVector{0, 0}); }},
    {6, 2, witness},
    {10, 1, [](GroupParams const &p) {
       return make_automorphism(p, IntMatrix{{2, 1}, {1, 1}}, 1, IntVector{0, 0});
     }},
    {15, 1, witness},
    {15, 2, witness},
    {21, 2, witness},
    {15, 2, [&](GroupParams const &p) { return make_automorphism(p, neg, 3, IntVector{1, 2}); }},
    {35, 1, [&](GroupParams const &p) { return make_automorphism(p, neg, 1, IntVector{1, 0}); }},
  };
  std::string counts;
  for (auto const &cfg : configs) {
    auto const p = make_params(BigInt(cfg.n), cfg.c);
    auto const phi = cfg.make(p);
    if (!validate(p, phi).ok) {
      v.fail(label(p) + ": configuration is not an automorphism");
      continue;
    }
    auto const exact = reidemeister_exact(p, phi);
    auto const rec = reidemeister_oracle_until_stable(p, phi, 4, 8);
    if (!exact.count || !rec.stable || BigInt(*rec.count) != *exact.count)
      v.fail(label(p) + ": exact " + (exact.count ? to_string(*exact.count) : "inf") +
             " vs oracle " + (rec.count ? std::to_string(*rec.count) : "unstable"));
    else
      counts += (counts.empty() ? "" : ",") + to_string(*exact.count);
  }
  if (v.ok)
    v.detail = std::to_string(configs.size()) + " configurations, R = " + counts;
  return v;
}

Verdict
group_law()
{
  Verdict v;
  std::mt19937_64 rng(7);
  std::size_t samples = 0;
  for (auto const &p : corpus_params()) {
    std::size_t const r = p.rank();
    GroupElement const x = generator_x(p);
    GroupElement const e = identity_element(p);
    if (power(p, x, from_u64(p.modulus())) != e)
      v.fail(label(p) + ": x^(m^c) != 1");
    for (std::size_t i = 0; i < r; ++i) {
      GroupElement const s = generator_s(p, i);
      GroupElement const lhs = multiply(p, multiply(p, s, x), inverse(p, s));
      if (lhs != power(p, x, from_u64(p.unit(i))))
        v.fail(label(p) + ": s_i x s_i^-1 != x^(p_i^y_i)");
      for (std::size_t j = 0; j < r; ++j)
        if (multiply(p, s, generator_s(p, j)) != multiply(p, generator_s(p, j), s))
          v.fail(label(p) + ": s_i s_j != s_j s_i");
    }
    for (int t = 0; t < 10000; ++t) {
      auto const a = oracle::random_element(rng, p);
      auto const b = oracle::random_element(rng, p);
      auto const c = oracle::random_element(rng, p);
      if (multiply(p, multiply(p, a, b), c) != multiply(p, a, multiply(p, b, c)))
        v.fail(label(p) + ": associativity");
      if (multiply(p, a, inverse(p, a)) != e || multiply(p, inverse(p, a), a) != e)
        v.fail(label(p) + ": inverse");
      ++samples;
    }
  }
  if (v.ok)
    v.detail = std::to_string(samples) + " samples";
  return v;
}

Verdict
degree_verdict()
{
  Verdict v;
  std::ostringstream out, err;
  int code = cli::run({"analyze", "15", "--cmax", "4", "--json"}, out, err);
  if (code != cli::kOk) {
    v.fail("analyze 15 exited " + std::to_string(code));
    return v;
  }
  Json const j = parse_json(out.str());
  if (j["certificates"].size() != 4)
    v.fail("expected four certificates");
  for (auto const &cert : j["certificates"]) {
    unsigned const c = cert["c"].get<unsigned>();
    auto const p = make_params(BigInt(15), c);
    IntMatrix const M = matrix_from_json(cert["M"]);
    auto const phi = make_automorphism(p, M, 1, IntVector{0, 0});
    auto const rep = report_from_json(cert["reidemeister"]);
    if (!validate(p, phi).ok || !rep.finite || !rep.count ||
        *rep.count != oracle::reidemeister_closed_form(p, phi))
      v.fail("certificate c=" + std::to_string(c) + " invalid");
  }
  if (j["degree_infinite"] != true)
    v.fail("verdict does not rule out R_infinity");

  std::ostringstream out6, err6;
  if (cli::run({"analyze", "6", "--json"}, out6, err6) != cli::kOk ||
      parse_json(out6.str())["m"] != 1)
    v.fail("analyze 6 did not take the m = 1 branch");
  std::ostringstream out8, err8;
  code = cli::run({"analyze", "8"}, out8, err8);
  if (code != cli::kRefused || out8.str().find("out of scope") == std::string::npos)
    v.fail("analyze 8 was not refused");
  if (v.ok)
    v.detail = "4 certificates for n=15, m = 1 branch for n=6, r = 1 refusal for n=8";
  return v;
}

Verdict
unit_power_lemma()
{
  Verdict v;
  std::size_t checked = 0;
  for (auto const &p : corpus_params()) {
    if (p.m() < 2)
      continue;
    BigInt const e = pow_ui(p.m(), p.c() - 1);
    for (std::size_t i = 0; i < p.rank(); ++i) {
      if (pow_mod(p.unit(i), e, p.modulus()) != 1)
        v.fail(label(p) + " i=" + std::to_string(i + 1));
      // Same statement with plain big integers.
      if (mod_floor(pow_ui(p.prime_power(i), to_u64(e)), from_u64(p.modulus())) != 1)
        v.fail(label(p) + " i=" + std::to_string(i + 1) + " (bigint)");
      ++checked;
    }
  }
  if (v.ok)
    v.detail = std::to_string(checked) + " (params, i) pairs";
  return v;
}

} // namespace

int
main()
{
  struct Criterion
  {
    char const *name;
    Verdict (*check)();
  };
  Criterion const criteria[] = {
    {"torsion order", torsion_order},
    {"lower central series", lower_central_series},
    {"witness determinants", witness_determinants},
    {"congruence criterion", congruence_criterion},
    {"finiteness equivalence", finiteness_equivalence},
    {"bound reproduction", bound_reproduction},
    {"oracle equivalence", oracle_equivalence},
    {"group law", group_law},
    {"degree verdict", degree_verdict},
    {"unit-power lemma", unit_power_lemma},
  };
  int failures = 0;
  int index = 0;
  for (auto const &crit : criteria) {
    ++index;
    Verdict v;
    try {
      v = crit.check();
    } catch (std::exception const &e) {
      v.fail(std::string("exception: ") + e.what());
    }
    std::cout << (v.ok ? "PASS" : "FAIL") << " " << index << ". " << crit.name << ": "
              << v.detail << "\n";
    failures += !v.ok;
  }
  return failures == 0 ? 0 : 1;
}
