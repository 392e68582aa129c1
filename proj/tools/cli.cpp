#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "gsbs/corpus.hpp"
#include "gsbs/error.hpp"
#include "gsbs/json_io.hpp"

namespace gsbs::cli {

namespace {

struct Common
{
  bool json = false;
  std::uint64_t cap = kDefaultModulusCap;
};

void
add_common(CLI::App *cmd, Common &common)
{
  cmd->add_flag("--json", common.json, "machine-readable output");
  cmd->add_option("--cap", common.cap, "safety cap on m^c and on orbit-graph size")
    ->check(CLI::PositiveNumber);
}

std::string
read_file(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Inline JSON when the argument starts with '[' or '{', a file path otherwise.
Json
load_json_arg(std::string const &arg)
{
  auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '[' || arg[first] == '{'))
    return parse_json(arg);
  return parse_json(read_file(arg));
}

unsigned
parse_class(std::string const &s)
{
  BigInt const c = parse_bigint(s);
  if (c < 1 || c > 64)
    throw InvalidInput("c must be between 1 and 64");
  return static_cast<unsigned>(c.get_ui());
}

std::string
format_primes(std::vector<PrimePower> const &primes)
{
  std::string s;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (i > 0)
      s += " * ";
    s += to_string(primes[i].p);
    if (primes[i].y > 1)
      s += "^" + std::to_string(primes[i].y);
  }
  return s;
}

std::string
format_element(GroupElement const &g)
{
  std::string s = "S^(";
  for (std::size_t i = 0; i < g.y.size(); ++i)
    s += (i ? "," : "") + to_string(g.y[i]);
  return s + ") x^" + std::to_string(g.theta);
}

std::string
format_report(ReidemeisterReport const &r)
{
  if (!r.finite)
    return "R(phi) = infinite (det(M - Id) = 0)";
  std::string s = "R(phi) = ";
  s += r.count ? to_string(*r.count) : std::string("?");
  s += r.method == CountMethod::exact ? " (exact)" : " (oracle)";
  s += ", bound |det(M - Id)| m^c = " + to_string(r.bound);
  s += ", det(M - Id) = " + to_string(r.det_M_minus_I);
  return s;
}

int
cmd_analyze(std::string const &n_arg, unsigned c_max, Common const &common, std::ostream &out)
{
  BigInt const n = parse_bigint(n_arg);
  AnalyzeOptions options;
  options.modulus_cap = common.cap;
  options.node_cap = common.cap;
  DegreeReport const report = analyze_degree(n, c_max, options);

  if (common.json) {
    out << to_json(report).dump(2) << "\n";
    return report.out_of_scope ? kRefused : kOk;
  }

  out << "n = " << to_string(n) << " = " << format_primes(report.primes)
      << ", r = " << report.primes.size() << ", m = " << to_string(report.m) << "\n";
  if (report.out_of_scope) {
    out << "out of scope: " << report.notice << "\n";
    return kRefused;
  }
  out << std::left << std::setw(4) << "c" << std::setw(4) << "k" << std::setw(10) << "q"
      << std::setw(14) << "det(M-Id)" << std::setw(10) << "R(phi)" << std::setw(10) << "bound"
      << "M\n";
  for (auto const &cert : report.certificates) {
    out << std::setw(4) << cert.c << std::setw(4) << cert.k << std::setw(10)
        << to_string(cert.q) << std::setw(14) << to_string(cert.det_M_minus_I) << std::setw(10)
        << to_string(*cert.reidemeister->count) << std::setw(10)
        << to_string(cert.reidemeister->bound) << to_json(cert.M).dump() << "\n";
  }
  out << "verdict: " << report.verdict << "\n";
  return kOk;
}

int
cmd_check_matrix(std::string const &n_arg, std::string const &c_arg, std::string const &file,
                 Common const &common, std::ostream &out)
{
  GroupParams const params = make_params(parse_bigint(n_arg), parse_class(c_arg), common.cap);
  IntMatrix const M = matrix_from_json(load_json_arg(file));
  if (M.rows() != params.rank() || M.cols() != params.rank())
    throw InvalidInput("matrix must be " + std::to_string(params.rank()) + "x" +
                       std::to_string(params.rank()));
  bool const ok = extendable(params, M);

  Json rows = Json::array();
  std::vector<std::string> failing;
  for (std::size_t i = 0; i < params.rank(); ++i) {
    std::string const rel = "(M,c," + std::to_string(i + 1) + ")";
    bool const holds = congruence_holds(params, M, i);
    if (!holds)
      failing.push_back(rel);
    rows.push_back(Json{{"relation", rel}, {"holds", holds}});
  }

  if (common.json) {
    out << Json{{"extendable", ok}, {"congruences", rows}}.dump(2) << "\n";
    return kOk;
  }
  for (auto const &row : rows)
    out << row["relation"].get<std::string>() << ": "
        << (row["holds"].get<bool>() ? "holds" : "fails") << "\n";
  if (ok) {
    out << "extendable\n";
  } else {
    out << "fails";
    for (auto const &f : failing)
      out << " " << f;
    out << "\n";
  }
  return kOk;
}

int
cmd_reidemeister(std::string const &n_arg, std::string const &c_arg, std::string const &file,
                 bool oracle, std::string const &box, Common const &common, std::ostream &out)
{
  GroupParams const params = make_params(parse_bigint(n_arg), parse_class(c_arg), common.cap);
  Automorphism const phi = automorphism_from_json(params, load_json_arg(file));
  ValidationReport const valid = validate(params, phi);
  if (!valid.ok) {
    if (common.json) {
      out << Json{{"validation", to_json(valid)}}.dump(2) << "\n";
    } else {
      out << "not an automorphism:\n";
      for (auto const &f : valid.failures)
        out << "  " << f.relation << ": " << f.detail << "\n";
    }
    return kRefused;
  }

  if (!oracle) {
    std::uint64_t const node_cap = common.cap;
    ReidemeisterReport const report = reidemeister_exact(params, phi, node_cap);
    if (common.json)
      out << to_json(report).dump(2) << "\n";
    else
      out << format_report(report) << "\n";
    return kOk;
  }

  unsigned element_box = 4, conjugator_box = 8;
  {
    char comma = 0;
    std::istringstream in(box);
    if (!(in >> element_box >> comma >> conjugator_box) || comma != ',' || !in.eof())
      throw InvalidInput("--box expects B_e,B_c, e.g. 4,8");
  }
  if (!reidemeister_finite(params, phi)) {
    ReidemeisterReport report = reidemeister_exact(params, phi);
    report.method = CountMethod::oracle;
    if (common.json)
      out << Json{{"report", to_json(report)}}.dump(2) << "\n";
    else
      out << format_report(report) << "\n";
    return kOk;
  }
  OracleRecord const rec =
    reidemeister_oracle_until_stable(params, phi, element_box, conjugator_box);
  ReidemeisterReport report;
  report.finite = true;
  report.method = CountMethod::oracle;
  report.det_M_minus_I = det(phi.M - IntMatrix::identity(params.rank()));
  report.bound = abs(report.det_M_minus_I) * from_u64(params.modulus());
  if (rec.count)
    report.count = from_u64(*rec.count);

  if (common.json) {
    Json j{{"oracle", to_json(rec)}};
    if (rec.stable)
      j["report"] = to_json(report);
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "oracle B_e=" << rec.element_box << " B_c=" << rec.conjugator_box
      << ": classes " << rec.count_at_previous_box << " -> " << rec.count_at_box
      << (rec.stable ? " (stable)" : " (unstable, no count asserted)") << "\n";
  if (rec.stable)
    out << format_report(report) << "\n";
  return kOk;
}

int
cmd_lcs(std::string const &n_arg, std::string const &c_arg, Common const &common,
        std::ostream &out)
{
  GroupParams const params = make_params(parse_bigint(n_arg), parse_class(c_arg), common.cap);
  Json rows = Json::array();
  for (unsigned k = 2; k <= params.c() + 1; ++k)
    rows.push_back(Json{{"k", k},
                        {"exponent", lcs_exponent(params, k)},
                        {"bruteforce", lcs_exponent_bruteforce(params, k)}});
  if (common.json) {
    out << Json{{"params", to_json(params)}, {"lcs", rows}}.dump(2) << "\n";
    return kOk;
  }
  out << "n = " << to_string(params.n()) << ", c = " << params.c() << ", m = "
      << to_string(params.m()) << ", m^c = " << params.modulus() << "\n";
  for (auto const &row : rows) {
    auto const e = row["exponent"].get<std::uint64_t>();
    out << "gamma_" << row["k"].get<unsigned>() << " = <x^" << e << ">"
        << (e == 0 ? "  (trivial)" : "") << "\n";
  }
  return kOk;
}

int
cmd_mul(std::string const &n_arg, std::string const &c_arg, std::string const &lhs,
        std::string const &rhs, Common const &common, std::ostream &out)
{
  GroupParams const params = make_params(parse_bigint(n_arg), parse_class(c_arg), common.cap);
  GroupElement const g = element_from_json(params, load_json_arg(lhs));
  GroupElement const h = element_from_json(params, load_json_arg(rhs));
  GroupElement const gh = multiply(params, g, h);
  if (common.json)
    out << to_json(gh).dump() << "\n";
  else
    out << format_element(g) << " * " << format_element(h) << " = " << format_element(gh)
        << "\n";
  return kOk;
}

int
cmd_corpus(bool do_run, bool do_regen, std::string const &path, std::ostream &out)
{
  if (do_run == do_regen)
    throw InvalidInput("corpus needs exactly one of --run or --regen");
  Json const input = parse_json(read_file(path));
  if (do_regen) {
    std::vector<CorpusCase> const cases = regen_corpus(input);
    std::ofstream file(path);
    if (!file)
      throw InvalidInput("cannot write '" + path + "'");
    file << to_json(cases).dump(2) << "\n";
    std::size_t counted = 0;
    for (auto const &cc : cases)
      counted += cc.expected_count.has_value();
    out << "regenerated " << cases.size() << " cases (" << counted
        << " with oracle counts) into " << path << "\n";
    return kOk;
  }
  CorpusRun const run = run_corpus(corpus_from_json(input));
  for (auto const &line : run.lines)
    out << line << "\n";
  out << run.passed << " passed, " << run.failed << " failed\n";
  return run.failed == 0 ? kOk : kRefused;
}

} // namespace

int
run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Nilpotent quotients of generalized solvable Baumslag-Solitar groups", "gsbs"};
  app.require_subcommand(1);

  Common common;
  std::string n_arg, c_arg, file_arg, lhs_arg, rhs_arg;

  unsigned c_max = 3;
  auto *analyze = app.add_subcommand("analyze", "R_infinity-nilpotency degree with witnesses");
  analyze->add_option("n", n_arg, "integer n >= 2")->required();
  analyze->add_option("--cmax", c_max, "largest class c to certify")->check(CLI::Range(1u, 64u));
  add_common(analyze, common);

  auto *check = app.add_subcommand("check-matrix", "congruence criterion (M,c,i) for a matrix");
  check->add_option("n", n_arg)->required();
  check->add_option("c", c_arg)->required();
  check->add_option("matrix", file_arg, "JSON file or inline array of rows")->required();
  add_common(check, common);

  bool oracle = false;
  std::string box = "4,8";
  auto *reid = app.add_subcommand("reidemeister", "Reidemeister number of an automorphism");
  reid->add_option("n", n_arg)->required();
  reid->add_option("c", c_arg)->required();
  reid->add_option("automorphism", file_arg, "JSON file or inline {M, mu, beta}")->required();
  reid->add_flag("--oracle", oracle, "brute-force box enumeration instead of the exact count");
  reid->add_option("--box", box, "oracle boxes B_e,B_c (escalated until stable)");
  add_common(reid, common);

  auto *lcs = app.add_subcommand("lcs", "lower central series generators gamma_k, k = 2..c+1");
  lcs->add_option("n", n_arg)->required();
  lcs->add_option("c", c_arg)->required();
  add_common(lcs, common);

  auto *mul = app.add_subcommand("mul", "multiply two elements in normal form S^y x^theta");
  mul->add_option("n", n_arg)->required();
  mul->add_option("c", c_arg)->required();
  mul->add_option("lhs", lhs_arg, "element JSON {y, theta}")->required();
  mul->add_option("rhs", rhs_arg, "element JSON {y, theta}")->required();
  add_common(mul, common);

  bool corpus_run = false, corpus_regen = false;
  std::string corpus_path = GSBS_DEFAULT_CORPUS;
  auto *corpus = app.add_subcommand("corpus", "check or regenerate the regression corpus");
  corpus->add_flag("--run", corpus_run);
  corpus->add_flag("--regen", corpus_regen);
  corpus->add_option("--file", corpus_path, "corpus JSON path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::ParseError const &e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (analyze->parsed())
      return cmd_analyze(n_arg, c_max, common, out);
    if (check->parsed())
      return cmd_check_matrix(n_arg, c_arg, file_arg, common, out);
    if (reid->parsed())
      return cmd_reidemeister(n_arg, c_arg, file_arg, oracle, box, common, out);
    if (lcs->parsed())
      return cmd_lcs(n_arg, c_arg, common, out);
    if (mul->parsed())
      return cmd_mul(n_arg, c_arg, lhs_arg, rhs_arg, common, out);
    if (corpus->parsed())
      return cmd_corpus(corpus_run, corpus_regen, corpus_path, out);
  } catch (ResourceError const &e) {
    err << "resource cap: " << e.what() << "\n";
    return kResource;
  } catch (Unsupported const &e) {
    err << "refused: " << e.what() << "\n";
    return kRefused;
  } catch (InvalidInput const &e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (nlohmann::json::exception const &e) {
    err << "schema error: " << e.what() << "\n";
    return kUsage;
  } catch (std::exception const &e) {
    err << "internal error: " << e.what() << "\n";
    return kRefused;
  }
  return kUsage;
}

} // namespace gsbs::cli
