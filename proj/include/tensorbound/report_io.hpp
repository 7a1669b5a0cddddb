#pragma once

#include <ostream>

#include <json.hpp>

#include "tensorbound/bounds.hpp"
#include "tensorbound/certificates.hpp"
#include "tensorbound/linalg.hpp"
#include "tensorbound/sweep.hpp"

namespace tensorbound {

// JSON uses 0-based vertex indices; text output is 1-based.

nlohmann::json to_json(const SpectralSummary& s);
nlohmann::json to_json(const DominationReport& r);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const CertificateReport& r);
nlohmann::json to_json(const SweepSummary& s);

void write_text(std::ostream& out, const SpectralSummary& s);
void write_text(std::ostream& out, const DominationReport& r);
void write_text(std::ostream& out, const BoundReport& r);
void write_text(std::ostream& out, const CertificateReport& r);
void write_text(std::ostream& out, const SweepSummary& s);

/// Bounds table: one `quantity,value,source` row per present field.
void write_csv(std::ostream& out, const BoundReport& r);

}  // namespace tensorbound
