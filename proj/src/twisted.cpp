#include "gsbs/twisted.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "gsbs/error.hpp"
#include "gsbs/union_find.hpp"

namespace gsbs {

namespace {

constexpr std::uint64_t kOracleWorkCap = 2'000'000'000;

IntMatrix
shift_matrix(IntMatrix const &M)
{
  return IntMatrix::identity(M.rows()) - M;
}

// {S^{+-e_i}} and {x^{+-1}}; both signs keep the orbit graph symmetric.
std::vector<GroupElement>
elementary_conjugators(GroupParams const &params)
{
  std::vector<GroupElement> out;
  for (std::size_t i = 0; i < params.rank(); ++i) {
    GroupElement g = generator_s(params, i);
    out.push_back(g);
    g.y[i] = -1;
    out.push_back(std::move(g));
  }
  if (params.modulus() > 1) {
    out.push_back(generator_x(params));
    out.push_back(inverse(params, generator_x(params)));
  }
  return out;
}

} // namespace

bool
reidemeister_finite(GroupParams const &, Automorphism const &phi)
{
  return det(phi.M - IntMatrix::identity(phi.M.rows())) != 0;
}

std::optional<BigInt>
reidemeister_abelianized(IntMatrix const &M)
{
  if (!is_unimodular(M))
    throw InvalidInput("matrix is not in GL_r(Z)");
  BigInt const d = det(M - IntMatrix::identity(M.rows()));
  if (d == 0)
    return std::nullopt;
  return abs(d);
}

GroupElement
twisted_conjugate(GroupParams const &params, Automorphism const &phi, GroupElement const &h,
                  GroupElement const &g)
{
  GroupElement const hg = multiply(params, h, g);
  return multiply(params, hg, inverse(params, apply(params, phi, h)));
}

TwistedConjugacy::TwistedConjugacy(GroupParams params, Automorphism phi)
  : params_(std::move(params)),
    phi_(std::move(phi)),
    shift_(shift_matrix(phi_.M)),
    cokernel_(shift_)
{
}

CanonicalForm
TwistedConjugacy::canonicalize(GroupElement const &g) const
{
  IntVector const rep = cokernel_.reduce(g.y);
  IntVector diff(rep.size());
  for (std::size_t i = 0; i < rep.size(); ++i)
    diff[i] = rep[i] - g.y[i];
  // S^k g phi(S^k)^{-1} has free part y + (Id - M) k.
  auto k = cokernel_.solve(diff);
  if (!k)
    throw std::logic_error("canonicalize: representative not in the coset of y");
  GroupElement const h{*k, 0};
  GroupElement moved = twisted_conjugate(params_, phi_, h, g);
  if (moved.y != rep)
    throw std::logic_error("canonicalize: conjugation missed the representative");
  return {TwistedNode{std::move(moved.y), moved.theta}, std::move(*k)};
}

BigInt
TwistedConjugacy::node_count() const
{
  return cokernel_.order() * from_u64(params_.modulus());
}

std::uint64_t
TwistedConjugacy::node_index(TwistedNode const &node) const
{
  return cokernel_.index_of(node.rep) * params_.modulus() + node.theta;
}

TwistedNode
TwistedConjugacy::node_at(std::uint64_t index) const
{
  Residue const mod = params_.modulus();
  return {cokernel_.representative(index / mod), index % mod};
}

CanonicalForm
canonicalize(GroupParams const &params, Automorphism const &phi, GroupElement const &g)
{
  return TwistedConjugacy(params, phi).canonicalize(g);
}

ReidemeisterReport
reidemeister_exact(GroupParams const &params, Automorphism const &phi, std::uint64_t node_cap)
{
  ReidemeisterReport report;
  report.method = CountMethod::exact;
  report.det_M_minus_I = det(phi.M - IntMatrix::identity(phi.M.rows()));
  report.bound = abs(report.det_M_minus_I) * from_u64(params.modulus());
  report.finite = report.det_M_minus_I != 0;
  if (!report.finite)
    return report;

  if (report.bound > from_u64(node_cap))
    throw ResourceError("twisted orbit graph needs " + to_string(report.bound) +
                        " nodes, over the cap " + std::to_string(node_cap));

  TwistedConjugacy const tc(params, phi);
  std::uint64_t const nodes = to_u64(report.bound);
  Residue const mod = params.modulus();

  // Representatives are looked up per node, so cache them.
  std::uint64_t const cosets = to_u64(tc.cokernel().order());
  std::vector<IntVector> reps;
  reps.reserve(cosets);
  for (std::uint64_t j = 0; j < cosets; ++j)
    reps.push_back(tc.cokernel().representative(j));

  std::vector<GroupElement> const gens = elementary_conjugators(params);
  std::vector<GroupElement> gen_image_inverses;
  for (auto const &h : gens)
    gen_image_inverses.push_back(inverse(params, apply(params, phi, h)));

  UnionFind uf(nodes);
  for (std::uint64_t idx = 0; idx < nodes; ++idx) {
    GroupElement const g{reps[idx / mod], idx % mod};
    for (std::size_t e = 0; e < gens.size(); ++e) {
      GroupElement const moved =
        multiply(params, multiply(params, gens[e], g), gen_image_inverses[e]);
      CanonicalForm const cf = tc.canonicalize(moved);
      uf.unite(idx, tc.node_index(cf.node));
    }
  }
  report.count = from_u64(uf.components());
  return report;
}

namespace {

struct Box
{
  std::size_t rank;
  long radius;
  std::uint64_t side;
  std::uint64_t points;

  Box(std::size_t r, long b)
    : rank(r), radius(b), side(2 * static_cast<std::uint64_t>(b) + 1), points(1)
  {
    for (std::size_t i = 0; i < r; ++i) {
      if (points > kOracleWorkCap / side)
        throw ResourceError("oracle box too large");
      points *= side;
    }
  }

  std::vector<long> point(std::uint64_t index) const
  {
    std::vector<long> v(rank);
    for (std::size_t i = 0; i < rank; ++i) {
      v[i] = static_cast<long>(index % side) - radius;
      index /= side;
    }
    return v;
  }

  std::optional<std::uint64_t> index(std::vector<long> const &v) const
  {
    std::uint64_t idx = 0;
    std::uint64_t stride = 1;
    for (std::size_t i = 0; i < rank; ++i) {
      if (v[i] < -radius || v[i] > radius)
        return std::nullopt;
      idx += static_cast<std::uint64_t>(v[i] + radius) * stride;
      stride *= side;
    }
    return idx;
  }
};

long
sup_norm(std::vector<long> const &v)
{
  long n = 0;
  for (long x : v)
    n = std::max(n, x < 0 ? -x : x);
  return n;
}

IntVector
to_int_vector(std::vector<long> const &v)
{
  IntVector out;
  out.reserve(v.size());
  for (long x : v)
    out.emplace_back(x);
  return out;
}

} // namespace

OracleRecord
reidemeister_oracle(GroupParams const &params, Automorphism const &phi, unsigned element_box,
                    unsigned conjugator_box)
{
  if (!reidemeister_finite(params, phi))
    throw Unsupported("oracle requires det(M - Id) != 0");
  if (conjugator_box < 1)
    throw InvalidInput("conjugator box must be at least 1");

  std::size_t const r = params.rank();
  Residue const mod = params.modulus();
  Box const elements(r, element_box);
  Box const conjugators(r, conjugator_box);

  BigInt const work = from_u64(elements.points) * from_u64(conjugators.points) *
                      from_u64(mod) * from_u64(mod);
  if (work > from_u64(kOracleWorkCap))
    throw ResourceError("oracle work " + to_string(work) + " exceeds the cap");

  std::uint64_t const nodes = elements.points * mod;
  UnionFind uf(nodes);

  // Free part moves by (Id - M) k regardless of torsion parts.
  IntMatrix const shift = shift_matrix(phi.M);

  long const inner = static_cast<long>(element_box) / 2;
  auto count_inner = [&] {
    std::vector<bool> seen(nodes, false);
    std::uint64_t classes = 0;
    for (std::uint64_t e = 0; e < elements.points; ++e) {
      if (sup_norm(elements.point(e)) > inner)
        continue;
      for (Residue t = 0; t < mod; ++t) {
        std::size_t const root = uf.find(e * mod + t);
        if (!seen[root]) {
          seen[root] = true;
          ++classes;
        }
      }
    }
    return classes;
  };

  std::vector<std::vector<long>> element_points;
  std::vector<IntVector> element_vectors;
  for (std::uint64_t e = 0; e < elements.points; ++e) {
    element_points.push_back(elements.point(e));
    element_vectors.push_back(to_int_vector(element_points.back()));
  }

  OracleRecord rec;
  rec.element_box = element_box;
  rec.conjugator_box = conjugator_box;

  for (int pass = 0; pass < 2; ++pass) {
    for (std::uint64_t c = 0; c < conjugators.points; ++c) {
      std::vector<long> const k = conjugators.point(c);
      long const norm = sup_norm(k);
      // Pass 0 uses the box of radius B_c - 1, pass 1 adds the shell.
      if ((pass == 0) != (norm < static_cast<long>(conjugator_box)))
        continue;
      IntVector const kv = to_int_vector(k);
      IntVector const step = shift * kv;
      std::vector<long> delta(r);
      for (std::size_t i = 0; i < r; ++i) {
        if (!step[i].fits_slong_p()) {
          delta.clear();
          break;
        }
        delta[i] = step[i].get_si();
      }
      if (delta.empty())
        continue;

      for (Residue l = 0; l < mod; ++l) {
        GroupElement const h{kv, l};
        GroupElement const image_inv = inverse(params, apply(params, phi, h));
        for (std::uint64_t e = 0; e < elements.points; ++e) {
          std::vector<long> target = element_points[e];
          bool in_box = true;
          for (std::size_t i = 0; i < r && in_box; ++i) {
            target[i] += delta[i];
            in_box = target[i] >= -static_cast<long>(element_box) &&
                     target[i] <= static_cast<long>(element_box);
          }
          if (!in_box)
            continue;
          std::uint64_t const te = *elements.index(target);
          for (Residue t = 0; t < mod; ++t) {
            GroupElement const g{element_vectors[e], t};
            GroupElement const moved =
              multiply(params, multiply(params, h, g), image_inv);
            uf.unite(e * mod + t, te * mod + moved.theta);
          }
        }
      }
    }
    if (pass == 0)
      rec.count_at_previous_box = count_inner();
    else
      rec.count_at_box = count_inner();
  }

  rec.stable = rec.count_at_box == rec.count_at_previous_box;
  if (rec.stable)
    rec.count = rec.count_at_box;
  return rec;
}

OracleRecord
reidemeister_oracle_until_stable(GroupParams const &params, Automorphism const &phi,
                                 unsigned element_box, unsigned conjugator_box,
                                 unsigned max_rounds)
{
  OracleRecord rec;
  for (unsigned round = 0; round < max_rounds; ++round) {
    rec = reidemeister_oracle(params, phi, element_box, conjugator_box);
    if (rec.stable)
      return rec;
    element_box += 1;
    conjugator_box += 2;
  }
  return rec;
}

} // namespace gsbs
