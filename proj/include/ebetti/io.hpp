#pragma once

#include <optional>
#include <string>

#include "ebetti/instance.hpp"
#include "ebetti/invariants.hpp"

namespace ebetti {

/// Parses an instance from JSON ({"n":8,"alpha":8,"beta":3,"edges":[[1,2],...]})
/// or, as a convenience, from whitespace-separated text: "n alpha beta"
/// followed by edge pairs. Vertices are 1-indexed in both formats.
Instance parse_instance(const std::string& content);

/// Reads the file and parses it; throws ParseError on unreadable input.
Instance load_instance(const std::string& path);

std::string instance_to_json(const Instance& inst);

/// Engine output destined for serialization. When both engines ran, `oracle`
/// and `agreement` are set and the top-level fields carry the closed-form
/// result.
struct ReportDocument {
    std::string engine;  // "closed_form", "oracle" or "both"
    ExtremalReport report;
    std::optional<ExtremalReport> oracle_report;
    std::optional<bool> agreement;
    InvariantBundle invariants;
};

std::string report_to_json(const ReportDocument& doc);

std::string invariants_to_json(const Instance& inst, const InvariantBundle& inv);

}  // namespace ebetti
