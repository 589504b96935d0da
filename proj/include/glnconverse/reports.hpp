#pragma once

#include <string>

#include "glnconverse/experiments.hpp"

namespace glnc {

// Human readable summaries. All output is deterministic: fixed formatting,
// no timestamps, no machine identifiers.
std::string to_text(const InventoryReport& rep);
std::string to_text(const GammaReport& rep);
std::string to_text(const ConverseReport& rep);
std::string to_text(const SpecialPairReport& rep);
std::string to_text(const HeightAuditReport& rep);
std::string to_text(const CentralCharReport& rep);
std::string to_text(const VerifyReport& rep);

// Structured output. Every document carries "schema": "glnconverse/1".
std::string to_json_string(const InventoryReport& rep);
std::string to_json_string(const GammaReport& rep);
std::string to_json_string(const ConverseReport& rep);
std::string to_json_string(const SpecialPairReport& rep);
std::string to_json_string(const HeightAuditReport& rep);
std::string to_json_string(const CentralCharReport& rep);
std::string to_json_string(const VerifyReport& rep);

// Flat table of gamma factors, one row per (pi, rank, twist).
std::string gamma_csv(const GammaReport& rep);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace glnc
