#pragma once

#include <json.hpp>
#include <string>

#include "hermeis/restriction.hpp"
#include "hermeis/shimura.hpp"

namespace hermeis::io {

// Key order follows the documented schemas; entries are already canonical,
// so equal inputs serialize byte-identically.
using json = nlohmann::ordered_json;

json to_json(const hermitian::HermitianFourierTable& table);
json to_json(const siegel::SiegelFourierTable& table);
json to_json(const restriction::ScanReport& report);
json to_json(const shimura::CoefficientSequence& seq, Int t);

std::string to_csv(const hermitian::HermitianFourierTable& table);
std::string to_csv(const siegel::SiegelFourierTable& table);
std::string to_csv(const restriction::ScanReport& report);

shimura::CoefficientSequence sequence_from_json(const json& j);

}  // namespace hermeis::io
