#pragma once

#include <string>

#include <json.hpp>

#include "gsbs/autos.hpp"
#include "gsbs/group.hpp"
#include "gsbs/intlin.hpp"
#include "gsbs/twisted.hpp"
#include "gsbs/witness.hpp"

namespace gsbs {

using Json = nlohmann::ordered_json;

// Integers that fit in a signed 64-bit value are JSON numbers; anything wider
// is a decimal string. Readers accept both forms everywhere.

Json to_json(BigInt const &x);
BigInt bigint_from_json(Json const &j);

/// Array of rows.
Json to_json(IntMatrix const &m);
IntMatrix matrix_from_json(Json const &j);

Json to_json(IntVector const &v);
IntVector vector_from_json(Json const &j);

/// {"n", "c", "primes": [[p, y], ...], "m", "modulus"}
Json to_json(GroupParams const &params);
/// Rebuilds from primes and c, then checks n, m and modulus if present.
GroupParams params_from_json(Json const &j, std::uint64_t modulus_cap = kDefaultModulusCap);

/// {"y": [...], "theta": t}
Json to_json(GroupElement const &g);
GroupElement element_from_json(GroupParams const &params, Json const &j);

/// {"M": [[...]], "mu": mu, "beta": [...]}
Json to_json(Automorphism const &phi);
Automorphism automorphism_from_json(GroupParams const &params, Json const &j);

/// {"finite", "count"?, "bound", "method", "det_M_minus_I"}
Json to_json(ReidemeisterReport const &report);
ReidemeisterReport report_from_json(Json const &j);

Json to_json(OracleRecord const &rec);
Json to_json(ValidationReport const &report);
Json to_json(WitnessCertificate const &cert);
Json to_json(DegreeReport const &report);

/// Parses text, mapping syntax errors to InvalidInput.
Json parse_json(std::string const &text);

} // namespace gsbs
