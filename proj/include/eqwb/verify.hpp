#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eqwb/json_io.hpp"

namespace eqwb {

struct VerifyOptions {
  std::uint64_t seed = 20240611;
  /// Overrides every randomized trial count when positive.
  int trials = 0;
};

/// One acceptance criterion and the checks behind it.
struct CriterionReport {
  int id = 0;
  std::string title;
  std::vector<CheckResult> checks;
  bool passed() const;
};

inline constexpr int kCriterionCount = 12;

/// Criteria 1..11 run computations; 12 runs 1..11 twice and compares the rendered reports.
CriterionReport verify_criterion(int id, const VerifyOptions& options);
/// Criteria 1..11 in order.
std::vector<CriterionReport> verify_all(const VerifyOptions& options);

/// Summary table followed by every mismatch with both normal forms.
std::string render_text(const std::vector<CriterionReport>& reports);
Json to_json(const std::vector<CriterionReport>& reports, const VerifyOptions& options);

}  // namespace eqwb
