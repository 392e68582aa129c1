#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gsbs/autos.hpp"
#include "gsbs/group.hpp"
#include "gsbs/intlin.hpp"

namespace gsbs {

inline constexpr std::uint64_t kDefaultNodeCap = 10'000'000;

/// A canonical point S^rep x^theta: rep is one of the fixed coset
/// representatives of Z^r / (Id - M) Z^r.
struct TwistedNode
{
  IntVector rep;
  Residue theta = 0;

  friend bool operator==(TwistedNode const &, TwistedNode const &) = default;
};

/// canonicalize() output together with the conjugating vector k: the node is
/// h g phi(h)^{-1} for h = S^k.
struct CanonicalForm
{
  TwistedNode node;
  IntVector conjugator;
};

enum class CountMethod
{
  exact,
  oracle
};

struct ReidemeisterReport
{
  bool finite = false;
  std::optional<BigInt> count;
  /// |det(M - Id)| * m^c; zero when the count is infinite.
  BigInt bound;
  CountMethod method = CountMethod::exact;
  BigInt det_M_minus_I;
};

/// Outcome of the brute-force box enumeration.
struct OracleRecord
{
  unsigned element_box = 0;
  unsigned conjugator_box = 0;
  /// Classes meeting the inner half-box, using conjugators of norm
  /// <= conjugator_box and <= conjugator_box - 1 respectively.
  std::uint64_t count_at_box = 0;
  std::uint64_t count_at_previous_box = 0;
  bool stable = false;
  /// Present only when stable.
  std::optional<std::uint64_t> count;
};

/// R(phi) < infinity  <=>  det(M - Id) != 0.
bool reidemeister_finite(GroupParams const &params, Automorphism const &phi);

/// R of the induced map on Z^r: |det(M - Id)|, or nullopt for infinity.
/// Throws InvalidInput unless M is unimodular.
std::optional<BigInt> reidemeister_abelianized(IntMatrix const &M);

/// h g phi(h)^{-1}
GroupElement twisted_conjugate(GroupParams const &params, Automorphism const &phi,
                               GroupElement const &h, GroupElement const &g);

/// Twisted-conjugacy workspace for one automorphism with det(Id - M) != 0.
class TwistedConjugacy
{
public:
  /// Throws Unsupported when Id - M is singular.
  TwistedConjugacy(GroupParams params, Automorphism phi);

  GroupParams const &params() const { return params_; }
  Automorphism const &automorphism() const { return phi_; }
  /// Id - M
  IntMatrix const &shift() const { return shift_; }
  Cokernel const &cokernel() const { return cokernel_; }

  CanonicalForm canonicalize(GroupElement const &g) const;

  /// Number of nodes |det(Id - M)| * m^c.
  BigInt node_count() const;
  std::uint64_t node_index(TwistedNode const &node) const;
  TwistedNode node_at(std::uint64_t index) const;

private:
  GroupParams params_;
  Automorphism phi_;
  IntMatrix shift_;
  Cokernel cokernel_;
};

CanonicalForm canonicalize(GroupParams const &params, Automorphism const &phi,
                           GroupElement const &g);

/// Exact R(phi) by union-find over canonical nodes. Infinite when
/// det(M - Id) == 0; ResourceError when the node count exceeds node_cap.
ReidemeisterReport reidemeister_exact(GroupParams const &params, Automorphism const &phi,
                                      std::uint64_t node_cap = kDefaultNodeCap);

/// Brute force over ||y|| <= element_box and conjugators ||k|| <= conjugator_box.
/// Requires det(M - Id) != 0 and conjugator_box >= 1.
OracleRecord reidemeister_oracle(GroupParams const &params, Automorphism const &phi,
                                 unsigned element_box, unsigned conjugator_box);

/// Repeats the oracle with growing boxes until two consecutive conjugator
/// boxes agree, or max_rounds runs are spent.
OracleRecord reidemeister_oracle_until_stable(GroupParams const &params,
                                              Automorphism const &phi, unsigned element_box,
                                              unsigned conjugator_box, unsigned max_rounds = 6);

} // namespace gsbs
