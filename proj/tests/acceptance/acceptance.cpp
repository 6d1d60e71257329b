// One PASS/FAIL line per acceptance criterion. A criterion passes when its
// suite item is Verified within the runtime limit below and, for items that
// emit certificates, the written certificate parses back byte-identically
// and re-verifies.

#include <cstdio>
#include <filesystem>
#include <map>
#include <set>

#include "thickrep/serialize.hpp"
#include "thickrep/suite.hpp"

using namespace thickrep;

namespace {

// Wall-clock limits in milliseconds, by criterion.
const std::map<int, double> kLimitMs{
    {1, 1'000},   {2, 1'000},   {3, 1'000},  {4, 30'000},  {5, 120'000},  {6, 300'000},
    {7, 60'000},  {8, 600'000}, {9, 600'000}, {10, 300'000}, {11, 60'000}, {12, 60'000},
};

const std::set<int> kEmitsCertificate{5, 6, 11};

std::string check_certificate(const std::string& path) {
  const Json j = read_json_file(path);
  const ReportDocument doc = report_from_json(j);
  if (dump(report_to_json(doc.rep, doc.report)) != dump(j)) return "certificate does not round-trip";
  if (doc.report.verdict != Verdict::NotThick) return "certificate verdict is not NotThick";
  const RecheckResult rc = recheck_certificate(doc.rep, doc.report);
  if (!rc.ok) return "certificate fails recheck: " + (rc.problems.empty() ? std::string() : rc.problems.front());
  return {};
}

}  // namespace

int main() {
  const std::filesystem::path certs = std::filesystem::temp_directory_path() / "thickrep_acceptance_certs";
  std::filesystem::remove_all(certs);

  SuiteOptions opts;
  opts.seed = 0;
  opts.certificate_dir = certs.string();
  opts.caps = Caps{};

  int failures = 0;
  for (const SuiteItemInfo& info : suite_items()) {
    const SuiteItemResult r = run_suite_item(info.id, opts);
    const double limit = kLimitMs.at(info.id);
    std::string reason;
    if (r.status != ItemStatus::Verified)
      reason = to_string(r.status) + (r.failures.empty() ? "" : ": " + r.failures.front());
    else if (r.runtime_ms > limit)
      reason = "runtime over limit";
    else if (kEmitsCertificate.count(info.id) && r.certificate_path.empty())
      reason = "no certificate written";
    else if (!r.certificate_path.empty())
      reason = check_certificate(r.certificate_path);
    const bool pass = reason.empty();
    failures += !pass;
    std::printf("criterion %2d %s %-24s %9.1f ms (limit %.0f ms)%s%s\n", info.id, pass ? "PASS" : "FAIL",
                info.name.c_str(), r.runtime_ms, limit, pass ? "" : "  ", reason.c_str());
  }
  std::filesystem::remove_all(certs);
  std::printf("%d/%zu criteria passed\n", static_cast<int>(suite_items().size()) - failures, suite_items().size());
  return failures == 0 ? 0 : 1;
}
