#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gsbs/json_io.hpp"

namespace gsbs {

/// One regression case. Every expected value carries a provenance note,
/// keyed by the field name.
struct CorpusCase
{
  BigInt n;
  unsigned c = 1;
  BigInt expected_m;
  std::uint64_t expected_torsion_order = 1;
  IntMatrix witness_matrix;
  bool expected_finite = true;
  std::optional<BigInt> expected_count;
  std::map<std::string, std::string> provenance;
};

/// Strict: all expected fields and their provenance notes must be present.
std::vector<CorpusCase> corpus_from_json(Json const &j);
Json to_json(std::vector<CorpusCase> const &cases);

struct CorpusRun
{
  std::size_t passed = 0;
  std::size_t failed = 0;
  /// One line per case, "PASS ..." or "FAIL ...".
  std::vector<std::string> lines;
};

CorpusRun run_corpus(std::vector<CorpusCase> const &cases);

struct RegenOptions
{
  unsigned element_box = 4;
  unsigned conjugator_box = 8;
  /// Skip the oracle when (elements x conjugators) exceeds this.
  std::uint64_t oracle_work_budget = 400'000'000;
};

/// Recomputes every expected value from n and c. Only "n" and "c" are read
/// from each input entry. Counts come from the oracle, stamped with the two
/// box pairs at which it agreed.
std::vector<CorpusCase> regen_corpus(Json const &j, RegenOptions const &options = {});

} // namespace gsbs
