#pragma once

// JSON and CSV renderings of every result type. Big integers and rationals
// are emitted as strings so no precision is lost.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lrs/acceptance.hpp"
#include "lrs/higher_order.hpp"
#include "lrs/identities.hpp"
#include "lrs/pisano.hpp"
#include "lrs/relation.hpp"
#include "lrs/tilings.hpp"

namespace lrs {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

Json toJson(const RelationVerdict& verdict);
Json toJson(const FamilyRow& row);
Json toJson(const AnalyticVerdict& verdict);
Json toJson(const PeriodResult& result);
Json toJson(const ParityCertificate& cert);
Json toJson(const VerificationReport& report);
Json toJson(const FoundWindow& window);
Json toJson(const ConjectureScanResult& result);
Json toJson(const OddWindowReport& report);
Json toJson(const GenFibOddWindowReport& report);
Json toJson(const CriterionResult& result);

/// {tool-version, subcommand, params, result}.
Json envelope(const std::string& subcommand, Json params, Json result);

/// Columns: label,N,found,C,k,horizon.
std::string verdictCsv(const std::vector<RelationVerdict>& verdicts);

}  // namespace lrs
