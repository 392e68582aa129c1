#include "gsbs/corpus.hpp"

#include <sstream>

#include "gsbs/error.hpp"

namespace gsbs {

namespace {

char const *const kProvenanced[] = {"expected_m", "expected_torsion_order", "witness_matrix",
                                    "expected_finite"};

[[noreturn]] void
corpus_error(std::size_t index, std::string const &what)
{
  throw InvalidInput("corpus schema error in case " + std::to_string(index) + ": " + what);
}

Json const &
require(Json const &j, char const *key, std::size_t index)
{
  auto it = j.find(key);
  if (it == j.end())
    corpus_error(index, std::string("missing '") + key + "'");
  return *it;
}

unsigned
read_c(Json const &j, std::size_t index)
{
  BigInt const c = bigint_from_json(require(j, "c", index));
  if (c < 1 || c > 64)
    corpus_error(index, "'c' out of range");
  return static_cast<unsigned>(c.get_ui());
}

std::string
describe(CorpusCase const &cc)
{
  return "n=" + to_string(cc.n) + " c=" + std::to_string(cc.c);
}

} // namespace

std::vector<CorpusCase>
corpus_from_json(Json const &j)
{
  if (!j.is_array())
    throw InvalidInput("corpus schema error: top level must be an array");
  std::vector<CorpusCase> cases;
  for (std::size_t i = 0; i < j.size(); ++i) {
    Json const &e = j[i];
    if (!e.is_object())
      corpus_error(i, "entry must be an object");
    CorpusCase cc;
    cc.n = bigint_from_json(require(e, "n", i));
    cc.c = read_c(e, i);
    cc.expected_m = bigint_from_json(require(e, "expected_m", i));
    BigInt const order = bigint_from_json(require(e, "expected_torsion_order", i));
    if (sgn(order) <= 0 || !fits_u64(order))
      corpus_error(i, "'expected_torsion_order' out of range");
    cc.expected_torsion_order = to_u64(order);
    cc.witness_matrix = matrix_from_json(require(e, "witness_matrix", i));
    Json const &finite = require(e, "expected_finite", i);
    if (!finite.is_boolean())
      corpus_error(i, "'expected_finite' must be a boolean");
    cc.expected_finite = finite.get<bool>();
    if (e.contains("expected_count"))
      cc.expected_count = bigint_from_json(e["expected_count"]);

    Json const &prov = require(e, "provenance", i);
    if (!prov.is_object())
      corpus_error(i, "'provenance' must be an object");
    for (auto const &[key, note] : prov.items()) {
      if (!note.is_string())
        corpus_error(i, "provenance notes must be strings");
      cc.provenance[key] = note.get<std::string>();
    }
    for (char const *key : kProvenanced)
      if (!cc.provenance.count(key))
        corpus_error(i, std::string("no provenance for '") + key + "'");
    if (cc.expected_count && !cc.provenance.count("expected_count"))
      corpus_error(i, "no provenance for 'expected_count'");
    cases.push_back(std::move(cc));
  }
  return cases;
}

Json
to_json(std::vector<CorpusCase> const &cases)
{
  Json out = Json::array();
  for (auto const &cc : cases) {
    Json e;
    e["n"] = to_json(cc.n);
    e["c"] = cc.c;
    e["expected_m"] = to_json(cc.expected_m);
    e["expected_torsion_order"] = cc.expected_torsion_order;
    e["witness_matrix"] = to_json(cc.witness_matrix);
    e["expected_finite"] = cc.expected_finite;
    if (cc.expected_count)
      e["expected_count"] = to_json(*cc.expected_count);
    Json prov = Json::object();
    for (auto const &[k, v] : cc.provenance)
      prov[k] = v;
    e["provenance"] = std::move(prov);
    out.push_back(std::move(e));
  }
  return out;
}

CorpusRun
run_corpus(std::vector<CorpusCase> const &cases)
{
  CorpusRun run;
  for (auto const &cc : cases) {
    std::vector<std::string> problems;
    try {
      GroupParams const params = make_params(cc.n, cc.c);
      if (params.m() != cc.expected_m)
        problems.push_back("m = " + to_string(params.m()));
      TorsionInfo const tor = torsion_info(params);
      if (tor.order != cc.expected_torsion_order)
        problems.push_back("torsion order = " + std::to_string(tor.order));
      WitnessCertificate const cert = build_witness_matrix(params);
      if (!(cert.M == cc.witness_matrix))
        problems.push_back("witness matrix differs");
      Automorphism const phi =
        make_automorphism(params, cc.witness_matrix, 1, IntVector(params.rank(), 0));
      if (!validate(params, phi).ok)
        problems.push_back("stored witness fails validation");
      if (reidemeister_finite(params, phi) != cc.expected_finite)
        problems.push_back("finiteness differs");
      if (cc.expected_count) {
        ReidemeisterReport const rep = reidemeister_exact(params, phi);
        if (!rep.count || *rep.count != *cc.expected_count)
          problems.push_back("exact count = " + (rep.count ? to_string(*rep.count) : "inf"));
      }
    } catch (Error const &e) {
      problems.push_back(std::string("error: ") + e.what());
    }

    std::ostringstream line;
    if (problems.empty()) {
      ++run.passed;
      line << "PASS " << describe(cc);
      if (cc.expected_count)
        line << " R=" << *cc.expected_count;
    } else {
      ++run.failed;
      line << "FAIL " << describe(cc);
      for (auto const &p : problems)
        line << "; " << p;
    }
    run.lines.push_back(line.str());
  }
  return run;
}

namespace {

/// Elements x conjugators x torsion pairs touched by one oracle run.
BigInt
oracle_work(GroupParams const &params, unsigned element_box, unsigned conjugator_box)
{
  BigInt work = from_u64(params.modulus()) * from_u64(params.modulus());
  for (std::size_t d = 0; d < params.rank(); ++d)
    work *= (2 * element_box + 1) * (2 * conjugator_box + 1);
  return work;
}

} // namespace

std::vector<CorpusCase>
regen_corpus(Json const &j, RegenOptions const &options)
{
  if (!j.is_array())
    throw InvalidInput("corpus schema error: top level must be an array");
  std::vector<CorpusCase> cases;
  for (std::size_t i = 0; i < j.size(); ++i) {
    Json const &e = j[i];
    if (!e.is_object())
      corpus_error(i, "entry must be an object");
    CorpusCase cc;
    cc.n = bigint_from_json(require(e, "n", i));
    cc.c = read_c(e, i);

    GroupParams const params = make_params(cc.n, cc.c);
    cc.expected_m = params.m();
    cc.provenance["expected_m"] = "formula: m = gcd(p_i^y_i - 1)";
    cc.expected_torsion_order = torsion_info(params).order;
    cc.provenance["expected_torsion_order"] = "formula: |<x>| = m^c, checked by order_of(x)";
    WitnessCertificate const cert = build_witness_matrix(params);
    cc.witness_matrix = cert.M;
    cc.provenance["witness_matrix"] = "formula: M = m^(c-1) N_r + Id";
    Automorphism const phi =
      make_automorphism(params, cert.M, 1, IntVector(params.rank(), 0));
    cc.expected_finite = reidemeister_finite(params, phi);
    cc.provenance["expected_finite"] = "formula: det(M - Id) = m^(r(c-1)) != 0";

    // A count is kept only once it also survives growing the element box;
    // a small inner box can miss whole classes and still look stable in B_c.
    std::optional<OracleRecord> previous;
    unsigned be = options.element_box, bc = options.conjugator_box;
    for (unsigned round = 0; cc.expected_finite && round < 6; ++round, be += 2, bc += 2) {
      if (oracle_work(params, be, bc) > from_u64(options.oracle_work_budget))
        break;
      OracleRecord const rec = reidemeister_oracle(params, phi, be, bc);
      if (rec.stable && previous && previous->count == rec.count) {
        cc.expected_count = from_u64(*rec.count);
        cc.provenance["expected_count"] =
          "oracle: stable at B_e=" + std::to_string(previous->element_box) + ", B_c=" +
          std::to_string(previous->conjugator_box) + " and at B_e=" +
          std::to_string(rec.element_box) + ", B_c=" + std::to_string(rec.conjugator_box);
        break;
      }
      previous.reset();
      if (rec.stable)
        previous = rec;
    }
    cases.push_back(std::move(cc));
  }
  return cases;
}

} // namespace gsbs
