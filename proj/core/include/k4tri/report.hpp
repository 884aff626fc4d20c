#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "k4tri/atlas.hpp"
#include "k4tri/checks.hpp"
#include "k4tri/packing.hpp"
#include "k4tri/partition.hpp"

namespace k4tri {

void to_json(nlohmann::json& j, const VerificationReport& r);
void from_json(const nlohmann::json& j, VerificationReport& r);

/// Scalar fields plus the pair/triple tables.
void to_json(nlohmann::json& j, const PartitionStats& s);

/// graph6, partition, label map and closed-form expectations.
nlohmann::json atlas_sidecar(const AtlasEntry& entry);

/// Host graph6 plus the packing as vertex triples.
nlohmann::json packing_certificate(const Graph& g, const TrianglePacking& packing);

/// {"tool", "version", ...extra} line written first in every report stream.
nlohmann::json report_header(const std::string& subcommand,
                             const nlohmann::json& extra = nlohmann::json::object());

}  // namespace k4tri
