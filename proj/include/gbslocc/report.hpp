#pragma once

// Stable text and JSON renderings of decision reports. JSON fields, in order:
// d, set, verdict, mode, condition, witness, index_cardinality, wang_gap.

#include <string>
#include <string_view>

#include "gbslocc/discriminator.hpp"

namespace gbslocc {

std::string report_json(const DecisionReport &r, int indent = 2);

/// Inverse of report_json; recomputes nothing. Throws std::invalid_argument on
/// schema violations.
DecisionReport parse_report_json(std::string_view text);

std::string report_text(const DecisionReport &r);

std::string witness_string(const Witness &w);

}  // namespace gbslocc
