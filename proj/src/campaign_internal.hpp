#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/campaign.hpp"
#include "rainbow/serialize.hpp"

namespace rainbow::detail {

struct PendingRow {
  InstanceRow row;
  std::vector<Json> certificates;
  /// Instance dump for violation rows.
  std::optional<Json> dump;
};

struct ItemResult {
  std::vector<PendingRow> rows;
  /// Counters for instances that produce no row, e.g. colourings outside a hypothesis.
  std::map<std::string, std::size_t> tallies;
};

using Task = std::function<ItemResult()>;

struct Plan {
  std::vector<Task> tasks;
  std::vector<std::string> notes;
};

/// Throws BudgetExceeded when an "all" census does not fit the budget.
auto build_plan(const CampaignSpec& spec) -> Plan;

}  // namespace rainbow::detail
