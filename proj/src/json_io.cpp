#include "gsbs/json_io.hpp"

#include "gsbs/error.hpp"

namespace gsbs {

namespace {

[[noreturn]] void
schema_error(std::string const &what)
{
  throw InvalidInput("schema error: " + what);
}

Json const &
field(Json const &j, char const *key)
{
  if (!j.is_object())
    schema_error(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end())
    schema_error(std::string("missing field '") + key + "'");
  return *it;
}

std::uint64_t
small_uint(Json const &j, char const *what)
{
  BigInt const v = bigint_from_json(j);
  if (sgn(v) < 0 || !fits_u64(v))
    schema_error(std::string(what) + " out of range");
  return to_u64(v);
}

bool
boolean(Json const &j, char const *key)
{
  Json const &v = field(j, key);
  if (!v.is_boolean())
    schema_error(std::string("'") + key + "' must be a boolean");
  return v.get<bool>();
}

} // namespace

Json
to_json(BigInt const &x)
{
  if (fits_i64(x))
    return to_i64(x);
  return to_string(x);
}

BigInt
bigint_from_json(Json const &j)
{
  if (j.is_number_unsigned())
    return from_u64(j.get<std::uint64_t>());
  if (j.is_number_integer())
    return from_i64(j.get<std::int64_t>());
  if (j.is_string())
    return parse_bigint(j.get<std::string>());
  schema_error("expected an integer, got " + j.dump());
}

Json
to_json(IntMatrix const &m)
{
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    rows.push_back(to_json(m.row(i)));
  return rows;
}

IntMatrix
matrix_from_json(Json const &j)
{
  if (!j.is_array() || j.empty())
    schema_error("matrix must be a non-empty array of rows");
  std::size_t const rows = j.size();
  std::size_t cols = 0;
  std::vector<BigInt> entries;
  for (auto const &row : j) {
    if (!row.is_array() || row.empty())
      schema_error("matrix rows must be non-empty arrays");
    if (cols == 0)
      cols = row.size();
    else if (row.size() != cols)
      schema_error("ragged matrix");
    for (auto const &x : row)
      entries.push_back(bigint_from_json(x));
  }
  return IntMatrix(rows, cols, std::move(entries));
}

Json
to_json(IntVector const &v)
{
  Json a = Json::array();
  for (auto const &x : v)
    a.push_back(to_json(x));
  return a;
}

IntVector
vector_from_json(Json const &j)
{
  if (!j.is_array())
    schema_error("expected an array of integers");
  IntVector v;
  for (auto const &x : j)
    v.push_back(bigint_from_json(x));
  return v;
}

Json
to_json(GroupParams const &params)
{
  Json primes = Json::array();
  for (auto const &pp : params.primes())
    primes.push_back(Json::array({to_json(pp.p), pp.y}));
  return Json{{"n", to_json(params.n())},
              {"c", params.c()},
              {"primes", std::move(primes)},
              {"m", to_json(params.m())},
              {"modulus", params.modulus()}};
}

GroupParams
params_from_json(Json const &j, std::uint64_t modulus_cap)
{
  auto const c = small_uint(field(j, "c"), "c");
  if (c < 1 || c > 64)
    schema_error("c out of range");
  std::vector<PrimePower> primes;
  if (j.contains("primes")) {
    Json const &list = j["primes"];
    if (!list.is_array() || list.empty())
      schema_error("'primes' must be a non-empty array");
    for (auto const &pp : list) {
      if (!pp.is_array() || pp.size() != 2)
        schema_error("each prime entry must be [p, y]");
      primes.push_back({bigint_from_json(pp[0]), static_cast<unsigned long>(small_uint(pp[1], "y"))});
    }
  } else {
    primes = factorize(bigint_from_json(field(j, "n")));
  }
  GroupParams params = make_params(std::move(primes), static_cast<unsigned>(c), modulus_cap);
  if (j.contains("n") && bigint_from_json(j["n"]) != params.n())
    schema_error("'n' does not match the factorization");
  if (j.contains("m") && bigint_from_json(j["m"]) != params.m())
    schema_error("'m' does not match gcd(p_i^y_i - 1)");
  if (j.contains("modulus") && bigint_from_json(j["modulus"]) != from_u64(params.modulus()))
    schema_error("'modulus' does not match m^c");
  return params;
}

Json
to_json(GroupElement const &g)
{
  return Json{{"y", to_json(g.y)}, {"theta", g.theta}};
}

GroupElement
element_from_json(GroupParams const &params, Json const &j)
{
  IntVector y = vector_from_json(field(j, "y"));
  if (y.size() != params.rank())
    schema_error("'y' must have r = " + std::to_string(params.rank()) + " entries");
  return make_element(params, std::move(y), bigint_from_json(field(j, "theta")));
}

Json
to_json(Automorphism const &phi)
{
  Json beta = Json::array();
  for (auto b : phi.beta)
    beta.push_back(b);
  return Json{{"M", to_json(phi.M)}, {"mu", phi.mu}, {"beta", std::move(beta)}};
}

Automorphism
automorphism_from_json(GroupParams const &params, Json const &j)
{
  IntMatrix M = matrix_from_json(field(j, "M"));
  if (M.rows() != params.rank() || M.cols() != params.rank())
    schema_error("'M' must be r x r with r = " + std::to_string(params.rank()));
  BigInt const mu = j.contains("mu") ? bigint_from_json(j["mu"]) : BigInt(1);
  IntVector const beta =
    j.contains("beta") ? vector_from_json(j["beta"]) : IntVector(params.rank(), 0);
  if (beta.size() != params.rank())
    schema_error("'beta' must have r entries");
  return make_automorphism(params, std::move(M), mu, beta);
}

Json
to_json(ReidemeisterReport const &report)
{
  Json j;
  j["finite"] = report.finite;
  if (report.count)
    j["count"] = to_json(*report.count);
  j["bound"] = to_json(report.bound);
  j["method"] = report.method == CountMethod::exact ? "exact" : "oracle";
  j["det_M_minus_I"] = to_json(report.det_M_minus_I);
  return j;
}

ReidemeisterReport
report_from_json(Json const &j)
{
  ReidemeisterReport report;
  report.finite = boolean(j, "finite");
  if (j.contains("count"))
    report.count = bigint_from_json(j["count"]);
  report.bound = bigint_from_json(field(j, "bound"));
  Json const &method = field(j, "method");
  if (method == "exact")
    report.method = CountMethod::exact;
  else if (method == "oracle")
    report.method = CountMethod::oracle;
  else
    schema_error("'method' must be \"exact\" or \"oracle\"");
  report.det_M_minus_I = bigint_from_json(field(j, "det_M_minus_I"));
  return report;
}

Json
to_json(OracleRecord const &rec)
{
  Json j;
  j["element_box"] = rec.element_box;
  j["conjugator_box"] = rec.conjugator_box;
  j["count_at_box"] = rec.count_at_box;
  j["count_at_previous_box"] = rec.count_at_previous_box;
  j["stable"] = rec.stable;
  if (rec.count)
    j["count"] = *rec.count;
  return j;
}

Json
to_json(ValidationReport const &report)
{
  Json failures = Json::array();
  for (auto const &f : report.failures)
    failures.push_back(Json{{"relation", f.relation}, {"detail", f.detail}});
  return Json{{"ok", report.ok}, {"failures", std::move(failures)}};
}

Json
to_json(WitnessCertificate const &cert)
{
  Json j;
  j["c"] = cert.c;
  j["k"] = cert.k;
  j["q"] = to_json(cert.q);
  j["N"] = to_json(cert.N);
  j["M"] = to_json(cert.M);
  j["det_N"] = to_json(cert.det_N);
  j["det_M"] = to_json(cert.det_M);
  j["det_M_minus_I"] = to_json(cert.det_M_minus_I);
  j["congruences_checked"] = cert.congruences_checked;
  if (cert.reidemeister)
    j["reidemeister"] = to_json(*cert.reidemeister);
  return j;
}

Json
to_json(DegreeReport const &report)
{
  Json primes = Json::array();
  for (auto const &pp : report.primes)
    primes.push_back(Json::array({to_json(pp.p), pp.y}));
  Json certs = Json::array();
  for (auto const &c : report.certificates)
    certs.push_back(to_json(c));
  Json j;
  j["n"] = to_json(report.n);
  j["primes"] = std::move(primes);
  j["m"] = to_json(report.m);
  j["c_max"] = report.c_max;
  j["out_of_scope"] = report.out_of_scope;
  if (report.out_of_scope)
    j["notice"] = report.notice;
  j["certificates"] = std::move(certs);
  j["degree_infinite"] = report.degree_infinite;
  j["verdict"] = report.verdict;
  return j;
}

Json
parse_json(std::string const &text)
{
  try {
    return Json::parse(text);
  } catch (Json::parse_error const &e) {
    throw InvalidInput(std::string("invalid JSON: ") + e.what());
  }
}

} // namespace gsbs
