#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gsbs/autos.hpp"
#include "gsbs/group.hpp"
#include "gsbs/intlin.hpp"
#include "gsbs/twisted.hpp"

namespace gsbs {

/// Evidence that G_{n,c} admits an automorphism with finite Reidemeister
/// number: M = q N + Id with q = m^k, k = c - 1, det N = det M = 1.
struct WitnessCertificate
{
  unsigned c = 1;
  unsigned k = 0;
  BigInt q;
  IntMatrix N;
  IntMatrix M;
  BigInt det_N;
  BigInt det_M;
  BigInt det_M_minus_I;
  bool congruences_checked = false;
  std::optional<ReidemeisterReport> reidemeister;
};

/// r x r matrix
///   [ 1  -(q+2)  q+1  -(q+1)  ... ]
///   [ 1  -(q+1)  q    -q      ... ]
///   [ 0   1      0     0      ... ]
///   [        ...  shifted identity ]
/// with det 1 and det(q N + Id) = 1. Throws InvalidInput for r < 2.
IntMatrix build_N(std::size_t r, BigInt const &q);

/// Fills every field except reidemeister. Throws Unsupported for r = 1.
WitnessCertificate build_witness_matrix(GroupParams const &params);

/// (M, mu = 1, beta = 0) for the witness matrix.
Automorphism witness_automorphism(GroupParams const &params);

struct AnalyzeOptions
{
  std::uint64_t modulus_cap = kDefaultModulusCap;
  std::uint64_t node_cap = kDefaultNodeCap;
};

struct DegreeReport
{
  BigInt n;
  std::vector<PrimePower> primes;
  BigInt m;
  unsigned c_max = 0;
  /// Single-prime n: BS(1,n) territory, nothing computed.
  bool out_of_scope = false;
  std::string notice;
  std::vector<WitnessCertificate> certificates;
  /// Every certificate carries a finite exact Reidemeister count.
  bool degree_infinite = false;
  std::string verdict;
};

DegreeReport analyze_degree(BigInt const &n, unsigned c_max, AnalyzeOptions const &options = {});

} // namespace gsbs
