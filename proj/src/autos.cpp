#include "gsbs/autos.hpp"

#include <stdexcept>

#include "gsbs/error.hpp"

namespace gsbs {

namespace {

void
require_shape(GroupParams const &params, IntMatrix const &M)
{
  if (M.rows() != params.rank() || M.cols() != params.rank())
    throw InvalidInput("matrix must be " + std::to_string(params.rank()) + "x" +
                       std::to_string(params.rank()));
}

std::string
one_based(std::size_t i)
{
  return std::to_string(i + 1);
}

// phi(s_i)
GroupElement
image_of_s(Automorphism const &phi, std::size_t i)
{
  return {phi.M.column(i), phi.beta[i]};
}

} // namespace

Automorphism
identity_automorphism(GroupParams const &params)
{
  return {IntMatrix::identity(params.rank()), 1 % params.modulus(),
          std::vector<Residue>(params.rank(), 0)};
}

Automorphism
make_automorphism(GroupParams const &params, IntMatrix M, BigInt const &mu,
                  IntVector const &beta)
{
  require_shape(params, M);
  if (beta.size() != params.rank())
    throw InvalidInput("beta must have r = " + std::to_string(params.rank()) + " entries");
  Automorphism phi;
  phi.M = std::move(M);
  phi.mu = reduce_mod(mu, params.modulus());
  for (auto const &b : beta)
    phi.beta.push_back(reduce_mod(b, params.modulus()));
  return phi;
}

bool
congruence_holds(GroupParams const &params, IntMatrix const &M, std::size_t i)
{
  require_shape(params, M);
  if (i >= params.rank())
    throw InvalidInput("congruence index out of range");
  return action_exponent(params, M.column(i)) == params.unit(i);
}

bool
extendable(GroupParams const &params, IntMatrix const &M)
{
  require_shape(params, M);
  if (!is_unimodular(M))
    throw InvalidInput("matrix is not in GL_r(Z): det = " + to_string(det(M)));
  for (std::size_t i = 0; i < params.rank(); ++i)
    if (!congruence_holds(params, M, i))
      return false;
  return true;
}

ValidationReport
validate(GroupParams const &params, IntMatrix const &M, BigInt const &mu, IntVector const &beta)
{
  ValidationReport report;
  auto fail = [&](std::string relation, std::string detail) {
    report.ok = false;
    report.failures.push_back({std::move(relation), std::move(detail)});
  };

  std::size_t const r = params.rank();
  if (M.rows() != r || M.cols() != r || beta.size() != r) {
    fail("shape", "expected a " + std::to_string(r) + "x" + std::to_string(r) +
                      " matrix and " + std::to_string(r) + " beta entries");
    return report;
  }

  Residue const mod = params.modulus();
  BigInt const d = det(M);
  if (abs(d) != 1)
    fail("det", "det(M) = " + to_string(d));

  Residue const mu_res = reduce_mod(mu, mod);
  if (gcd(from_u64(mu_res), from_u64(mod)) != 1)
    fail("mu", "gcd(mu, m^c) != 1 for mu = " + to_string(mu));

  std::vector<Residue> twist_minus_one(r);
  for (std::size_t i = 0; i < r; ++i) {
    IntVector const column = M.column(i);
    Residue const lhs = action_exponent(params, column);
    if (lhs != params.unit(i))
      fail("(M,c," + one_based(i) + ")",
           "lhs = " + std::to_string(lhs) + ", p_i^y_i = " + std::to_string(params.unit(i)) +
               " mod " + std::to_string(mod));
    twist_minus_one[i] = sub_mod(inv_mod(lhs, mod), 1, mod);
  }

  // phi(s_i) phi(s_j) = phi(s_j) phi(s_i) forces
  //   beta_i (P(A_j)^{-1} - 1) == beta_j (P(A_i)^{-1} - 1).
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      Residue const bi = reduce_mod(beta[i], mod);
      Residue const bj = reduce_mod(beta[j], mod);
      Residue const lhs = mul_mod(bi, twist_minus_one[j], mod);
      Residue const rhs = mul_mod(bj, twist_minus_one[i], mod);
      if (lhs != rhs)
        fail("commute(" + one_based(i) + "," + one_based(j) + ")",
             std::to_string(lhs) + " != " + std::to_string(rhs) + " mod " +
                 std::to_string(mod));
    }
  return report;
}

ValidationReport
validate(GroupParams const &params, Automorphism const &phi)
{
  IntVector beta;
  for (auto b : phi.beta)
    beta.push_back(from_u64(b));
  return validate(params, phi.M, from_u64(phi.mu), beta);
}

GroupElement
apply(GroupParams const &params, Automorphism const &phi, GroupElement const &g)
{
  GroupElement out = identity_element(params);
  for (std::size_t i = 0; i < params.rank(); ++i)
    if (g.y[i] != 0)
      out = multiply(params, out, power(params, image_of_s(phi, i), g.y[i]));
  if (g.theta != 0) {
    GroupElement torsion = identity_element(params);
    torsion.theta = mul_mod(phi.mu, g.theta, params.modulus());
    out = multiply(params, out, torsion);
  }
  return out;
}

Automorphism
compose(GroupParams const &params, Automorphism const &phi, Automorphism const &psi)
{
  Automorphism out;
  out.M = phi.M * psi.M;
  out.mu = mul_mod(phi.mu, psi.mu, params.modulus());
  for (std::size_t i = 0; i < params.rank(); ++i) {
    GroupElement const img = apply(params, phi, image_of_s(psi, i));
    if (img.y != out.M.column(i))
      throw std::logic_error("compose: free part disagrees with matrix product");
    out.beta.push_back(img.theta);
  }
  return out;
}

Automorphism
invert(GroupParams const &params, Automorphism const &phi)
{
  Residue const mod = params.modulus();
  Automorphism inv;
  inv.M = inverse_unimodular(phi.M);
  inv.mu = inv_mod(phi.mu, mod);
  // phi(S^{B_i} x^{b}) = S^{e_i} x^{g + mu b}, so b = -g mu^{-1}.
  for (std::size_t i = 0; i < params.rank(); ++i) {
    GroupElement const img = apply(params, phi, GroupElement{inv.M.column(i), 0});
    inv.beta.push_back(sub_mod(0, mul_mod(img.theta, inv.mu, mod), mod));
  }
  Automorphism const id = identity_automorphism(params);
  if (compose(params, phi, inv) != id || compose(params, inv, phi) != id)
    throw std::logic_error("invert: composition check failed");
  return inv;
}

} // namespace gsbs
