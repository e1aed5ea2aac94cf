#pragma once

// CurveRecord: everything computed for one curve, with JSON, CSV and
// human-readable renderings.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "monocurve/bounds.hpp"
#include "monocurve/curve.hpp"
#include "monocurve/semigroup.hpp"
#include "monocurve/sumsets.hpp"
#include "monocurve/verify.hpp"

namespace monocurve {

struct CurveRecord {
  std::vector<std::int64_t> gens;
  std::int64_t d = 0;
  std::int64_t k = 0;
  GapProfile gaps;
  CohomologyProfile profile;
  BoundReport bounds;
  std::optional<SumsetReport> sumset;
  std::optional<VerifyReport> verified;

  friend bool operator==(const CurveRecord&, const CurveRecord&) = default;
};

struct RecordOptions {
  bool sigma = false;
  SigmaMethod sigma_method = SigmaMethod::formula;
  std::optional<std::int64_t> cell_cap;
  bool verify = false;
};

CurveRecord make_record(const CurveSpec& c, const RecordOptions& opt = {});

nlohmann::json to_json(const CurveRecord& r);
/// Inverse of to_json; throws nlohmann::json::exception on malformed input.
CurveRecord record_from_json(const nlohmann::json& j);

/// Fixed column list; list-valued cells are ';'-separated.
std::string csv_header();
std::string to_csv_row(const CurveRecord& r);

std::string to_pretty(const CurveRecord& r);

}  // namespace monocurve
