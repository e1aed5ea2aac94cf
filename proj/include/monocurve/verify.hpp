#pragma once

// Cross-checks every fast invariant of a curve against the brute-force
// oracles, within the oracles' size limits.

#include <string>
#include <vector>

#include "monocurve/curve.hpp"

namespace monocurve {

struct Mismatch {
  std::string what;
  std::string fast;
  std::string oracle;
  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct VerifyReport {
  std::vector<std::string> checked;
  std::vector<std::string> skipped;  // out of oracle range
  std::vector<Mismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

VerifyReport cross_check(const CurveSpec& c);
VerifyReport cross_check(const CurveSpec& c, const WProfile& w, const CohomologyProfile& h);

}  // namespace monocurve
