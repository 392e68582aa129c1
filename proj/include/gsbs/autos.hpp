#pragma once

#include <string>
#include <vector>

#include "gsbs/group.hpp"
#include "gsbs/intlin.hpp"

namespace gsbs {

/// An endomorphism of G_{n,c} given on generators:
///   x   -> x^mu
///   s_i -> S^{A_i} x^{beta_i},  A_i = column i of M.
struct Automorphism
{
  IntMatrix M;
  Residue mu = 1;
  std::vector<Residue> beta;

  friend bool operator==(Automorphism const &, Automorphism const &) = default;
};

struct ValidationFailure
{
  /// "det", "mu", "(M,c,i)" or "commute(i,j)", indices one-based.
  std::string relation;
  std::string detail;
};

struct ValidationReport
{
  bool ok = true;
  std::vector<ValidationFailure> failures;
};

Automorphism identity_automorphism(GroupParams const &params);

/// Reduces mu and beta into [0, m^c). Does not validate.
Automorphism make_automorphism(GroupParams const &params, IntMatrix M, BigInt const &mu,
                               IntVector const &beta);

/// (M,c,i): prod_j (p_j^{y_j})^{a_ji} == p_i^{y_i} mod m^c. Zero-based i.
bool congruence_holds(GroupParams const &params, IntMatrix const &M, std::size_t i);

/// True iff M lifts to an automorphism of G_{n,c}, i.e. every (M,c,i) holds.
/// Throws InvalidInput unless M is r x r with det +-1.
bool extendable(GroupParams const &params, IntMatrix const &M);

ValidationReport validate(GroupParams const &params, IntMatrix const &M, BigInt const &mu,
                          IntVector const &beta);
ValidationReport validate(GroupParams const &params, Automorphism const &phi);

GroupElement apply(GroupParams const &params, Automorphism const &phi, GroupElement const &g);

/// phi after psi.
Automorphism compose(GroupParams const &params, Automorphism const &phi,
                     Automorphism const &psi);

Automorphism invert(GroupParams const &params, Automorphism const &phi);

} // namespace gsbs
