#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "twostep/catalog.hpp"
#include "twostep/decompose.hpp"
#include "twostep/hypergraph.hpp"

namespace twostep::cli {

/// Human text plus a machine-readable mirror. The mirror carries the same
/// top-level keys for every command (schema_version, command, subject,
/// signature, fingerprint, verdict, matches, caveats, notes); sections a
/// command does not produce are null or empty. Every number printed in the
/// text appears in the mirror.
struct Report {
    std::string text;
    nlohmann::json machine;
};

nlohmann::json empty_machine_report(const std::string& command, const std::string& subject);

nlohmann::json fingerprint_json(const Fingerprint& f);
nlohmann::json verdict_json(const DecomposabilityVerdict& v);
nlohmann::json pencil_json(const PencilReport& r);
nlohmann::json witness_json(const BlockDiagonalWitness& w);
nlohmann::json matches_json(const std::vector<CatalogMatch>& matches);

std::string fingerprint_text(const Fingerprint& f);
std::string sequence_text(const std::vector<int>& s);

/// Standing caveats: basis dependence of connectivity, withheld center
/// sequences, and the asserted (never computed) catalog rank metadata.
std::vector<std::string> standard_caveats(const Fingerprint& f);

}  // namespace twostep::cli
