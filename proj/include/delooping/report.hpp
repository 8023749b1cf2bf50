#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "delooping/certificates.hpp"
#include "delooping/invariants.hpp"

namespace dl {

inline constexpr const char* kReportSchema = "delooping-report/1";

struct ReportOptions {
  std::vector<int> ks;  // extra k-dell columns
  int dell_cap = 8;
  GraphCaps caps;
  Method method = Method::Auto;
  SearchOptions search;
  std::string cert_dir;       // when set, ddell certificates are written here
  std::string algebra_path;   // recorded in certificates
  nlohmann::json citations;   // externally established values, keyed by algebra name
};

nlohmann::json bound_json(const Bound& b);
// Every simple's invariants plus their suprema; entries carry exact /
// upper-bound / exceeds-cap / unknown tags and unknowns are listed.
nlohmann::json build_report(const AlgPtr& a, const ReportOptions& opt);
// Whether a report contains an exceeds-cap or unknown entry.
bool report_inconclusive(const nlohmann::json& report);

}  // namespace dl
