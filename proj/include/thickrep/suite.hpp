#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "thickrep/repcore.hpp"
#include "thickrep/serialize.hpp"

namespace thickrep {

enum class ItemStatus { Verified, Refuted, Skipped, Unknown };
std::string to_string(ItemStatus s);

struct SuiteItemInfo {
  int id = 0;
  std::string name;
  std::string group;
};

/// The twelve verification items in id order.
const std::vector<SuiteItemInfo>& suite_items();

struct SuiteItemResult {
  SuiteItemInfo info;
  ItemStatus status = ItemStatus::Unknown;
  double runtime_ms = 0;
  std::string certificate_path;  // empty when no certificate was written
  std::vector<std::string> details;
  std::vector<std::string> failures;
};

struct SuiteOptions {
  /// Comma-separated item ids, names or groups; empty runs everything.
  std::string filter;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  /// Certificates are written here as item_<id>.json when nonempty.
  std::string certificate_dir;
  Caps caps;
};

struct SuiteReport {
  std::vector<SuiteItemResult> items;  // ordered by id
  ItemStatus overall = ItemStatus::Verified;
};

bool item_selected(const SuiteItemInfo& info, const std::string& filter);
SuiteItemResult run_suite_item(int id, const SuiteOptions& options);
SuiteReport run_suite(const SuiteOptions& options);

Json suite_to_json(const SuiteReport& report);

}  // namespace thickrep
