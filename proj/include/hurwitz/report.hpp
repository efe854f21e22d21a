#pragma once

#include <string>

#include <json.hpp>

#include "hurwitz/chambers.hpp"
#include "hurwitz/correspondence.hpp"
#include "hurwitz/verify.hpp"

namespace hurwitz {

inline constexpr int kReportSchemaVersion = 1;

using Json = nlohmann::ordered_json;

// {"schema_version", "engine_version", "command", "status", "result"}
Json report_envelope(const std::string& command, bool pass, Json result);

Json to_json(const Partition& p);
Json to_json(const FactorizationType& t);
Json to_json(const HurwitzValue& v);
Json to_json(const GluingSequence& s);
Json to_json(const CombinatorialType& t);
Json to_json(const CorrespondenceReport& r);
Json to_json(const ExactPolynomial& p);
Json to_json(const ChamberReport& r);
Json to_json(const ForestFactResult& r);
Json to_json(const PruningOrderResult& r);
Json to_json(const FiberResult& r);
Json to_json(const BijectionResult& r);
Json to_json(const InversionResult& r);
Json to_json(const HatConsistencyResult& r);

// one row per (chamber, monomial); header included
std::string chamber_csv(const ChamberReport& r);

}  // namespace hurwitz
