#pragma once

#include <json.hpp>

#include "gbslocc/discriminator.hpp"

namespace gbslocc::detail {

nlohmann::ordered_json report_to_json(const DecisionReport &r);
DecisionReport report_from_json(const nlohmann::ordered_json &j);

}  // namespace gbslocc::detail
