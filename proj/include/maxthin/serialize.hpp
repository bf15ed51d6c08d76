// JSON documents for algebras and reports.  Scalars travel as decimal
// strings; unknown fields are rejected; enumeration output is one compact
// document per line.
#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include <json.hpp>

#include "maxthin/search.hpp"

namespace maxthin {

using Json = nlohmann::ordered_json;

class DocumentError : public std::runtime_error {
 public:
  explicit DocumentError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr const char* kAlgebraSchema = "maxthin.algebra/1";
inline constexpr const char* kReportSchema = "maxthin.report/1";

Json serialize(const MaxClassTable& t);
Json serialize(const ThinTable& t);
std::string document_line(const Json& doc);

using ParsedAlgebra = std::variant<MaxClassTable, ThinTable>;
ParsedAlgebra parse_algebra(const Json& doc);
ParsedAlgebra parse_algebra_line(const std::string& line);

Json profile_json(const ConstituentProfile& prof);
Json profile_json(const DiamondProfile& prof);
Json centralizers_json(const CentralizerSequence& seq);
Json stats_json(const BranchStats& stats);
Json config_json(const SearchConfig& cfg);
Json report_json(const VerificationReport& rep);

}  // namespace maxthin
