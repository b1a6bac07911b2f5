#pragma once

// JSON/CSV reading and writing for tangency data, insertion specs, bound
// reports, verification reports and tropical solutions.
//
// Input document:
//   {"k": 2, "alpha": [[2,0,0],[0,2,0],...], "insertions": [{"d":1,"nu":2},...]}
// "insertions" is optional; when absent, point constraints sit at the free
// markings. Arbitrary-precision values are written as decimal strings
// ("a/b" for rationals).

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "tropbound/bounds.hpp"
#include "tropbound/numerical_data.hpp"
#include "tropbound/tropical.hpp"
#include "tropbound/verify.hpp"

namespace tropbound::io {

using nlohmann::json;

/// Reads and parses a JSON file; InvalidInput on I/O or syntax errors.
json load_json(const std::filesystem::path &path);

NumericalData numerical_data_from_json(const json &doc);
json to_json(const NumericalData &data);

/// Parses doc["insertions"] against `data`, or derives point insertions
/// when the key is absent.
InsertionSpec insertions_from_json(const json &doc, const NumericalData &data);
json to_json(const InsertionSpec &ins);

json to_json(const BoundValue &bound);

json to_json(const VerificationReport &report);
VerificationReport report_from_json(const json &doc);

json suite_to_json(const std::vector<VerificationReport> &reports,
                   std::uint64_t seed);
std::string suite_to_csv(const std::vector<VerificationReport> &reports);

json to_json(const RandomSuiteReport &report);

json to_json(const TropicalSolution &solution);
json invariant_to_json(const InvariantResult &result);

/// "d,N_d" rows for d = 1..max_degree.
std::string nd_table_csv(long max_degree);

mpz_class parse_mpz(const json &value, const std::string &where);
mpq_class parse_mpq(const json &value, const std::string &where);

} // namespace tropbound::io
