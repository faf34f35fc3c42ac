#pragma once

#include <optional>
#include <string>

#include "isolation/certificates.hpp"
#include "isolation/generators.hpp"
#include "isolation/sweep.hpp"

namespace isolation {

/// One JSON object (no trailing newline) describing a certificate. Keys are
/// emitted in sorted order, so output is byte-stable.
std::string certificate_json(const std::string& graph_id, int k, const Certificate& cert,
                             const std::optional<ClaimReport>& claims);

/// One JSON object for a per-(graph, k) bound report.
std::string bound_report_json(const BoundReport& report, bool include_timing);

/// Structure-map sidecar for a generated extremal instance.
std::string extremal_sidecar_json(const LabeledExtremal& instance);

}  // namespace isolation
