#include "gsbs/witness.hpp"

#include <stdexcept>

#include "gsbs/error.hpp"

namespace gsbs {

IntMatrix
build_N(std::size_t r, BigInt const &q)
{
  if (r < 2)
    throw InvalidInput("witness family needs r >= 2");
  IntMatrix N(r, r);
  N(0, 0) = 1;
  N(0, 1) = -(q + 2);
  N(1, 0) = 1;
  N(1, 1) = -(q + 1);
  // Alternating tail: column j (zero-based, j >= 2) carries sign (-1)^j.
  for (std::size_t j = 2; j < r; ++j) {
    BigInt const sign = (j % 2 == 0) ? 1 : -1;
    N(0, j) = sign * (q + 1);
    N(1, j) = sign * q;
  }
  for (std::size_t i = 2; i < r; ++i)
    N(i, i - 1) = 1;
  return N;
}

WitnessCertificate
build_witness_matrix(GroupParams const &params)
{
  std::size_t const r = params.rank();
  if (r < 2)
    throw Unsupported("n = " + to_string(params.n()) +
                      " is a prime power (r = 1): Gamma_n is BS(1,n), whose "
                      "R_infinity-nilpotency degree is known from the BS(1,n) classification "
                      "and is not computed here");

  WitnessCertificate cert;
  cert.c = params.c();
  cert.k = params.c() - 1;
  cert.q = pow_ui(params.m(), cert.k);
  cert.N = build_N(r, cert.q);
  IntMatrix const id = IntMatrix::identity(r);
  cert.M = cert.q * cert.N + id;
  cert.det_N = det(cert.N);
  cert.det_M = det(cert.M);
  cert.det_M_minus_I = det(cert.M - id);

  if (cert.det_N != 1 || cert.det_M != 1)
    throw std::logic_error("witness matrix family lost unimodularity for r = " +
                           std::to_string(r));
  if (cert.det_M_minus_I != pow_ui(cert.q, r))
    throw std::logic_error("det(M - Id) != q^r");

  cert.congruences_checked = extendable(params, cert.M);
  if (!cert.congruences_checked)
    throw std::logic_error("witness matrix fails a congruence (M,c,i)");
  return cert;
}

Automorphism
witness_automorphism(GroupParams const &params)
{
  WitnessCertificate const cert = build_witness_matrix(params);
  return make_automorphism(params, cert.M, 1, IntVector(params.rank(), 0));
}

DegreeReport
analyze_degree(BigInt const &n, unsigned c_max, AnalyzeOptions const &options)
{
  if (n < 2)
    throw InvalidInput("n must be at least 2, got " + to_string(n));
  if (c_max < 1)
    throw InvalidInput("c_max must be at least 1");

  DegreeReport report;
  report.n = n;
  report.c_max = c_max;
  report.primes = factorize(n);
  report.m = 0;
  for (auto const &pp : report.primes)
    report.m = gcd(report.m, pow_ui(pp.p, pp.y) - 1);

  if (report.primes.size() < 2) {
    report.out_of_scope = true;
    report.notice = "n = " + to_string(n) +
                    " involves a single prime, so Gamma_n = BS(1,n); its "
                    "R_infinity-nilpotency degree follows from the BS(1,n) "
                    "classification and is not computed here";
    return report;
  }

  for (unsigned c = 1; c <= c_max; ++c) {
    GroupParams const params = make_params(report.primes, c, options.modulus_cap);
    WitnessCertificate cert = build_witness_matrix(params);
    Automorphism const phi = make_automorphism(params, cert.M, 1, IntVector(params.rank(), 0));
    if (!validate(params, phi).ok)
      throw std::logic_error("witness automorphism failed validation");
    cert.reidemeister = reidemeister_exact(params, phi, options.node_cap);
    if (!cert.reidemeister->finite)
      throw std::logic_error("witness automorphism has infinite Reidemeister number");
    report.certificates.push_back(std::move(cert));
  }

  report.degree_infinite = true;
  if (report.m == 1)
    report.verdict = "m = 1: every quotient Gamma_{n,c} is free abelian of rank " +
                     std::to_string(report.primes.size()) +
                     "; no quotient has property R_infinity; degree infinite";
  else
    report.verdict = "no quotient Gamma_{n,c}, 1 <= c <= " + std::to_string(c_max) +
                     ", has property R_infinity; degree infinite";
  return report;
}

} // namespace gsbs
