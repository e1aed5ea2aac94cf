#pragma once

// h-fold sumsets of A = {0, a_1, ..., d}, the three-part structure
// decomposition hA = C1 u [c1, hd - c2] u (hd - C2), and the sumset
// regularity sigma(A) by formula and by brute force.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monocurve/bounds.hpp"
#include "monocurve/curve.hpp"
#include "monocurve/interval_set.hpp"

namespace monocurve {

/// {0, a_1, ..., a_k}.
std::vector<std::int64_t> curve_set(const CurveSpec& c);

/// All sums of h elements of A (h >= 1).
IntervalSet h_fold_sumset(std::span<const std::int64_t> A, std::int64_t h);

/// C1 = <A1> n [0, F1], c1 = F1 + 1, and the same for A2.
struct StructureDecomposition {
  std::vector<std::int64_t> C1;
  std::int64_t c1 = 0;
  std::vector<std::int64_t> C2;
  std::int64_t c2 = 0;
  friend bool operator==(const StructureDecomposition&, const StructureDecomposition&) = default;
};

StructureDecomposition structure_decomposition(const CurveSpec& c);

/// hA equals the disjoint union C1, [c1, hd - c2] (non-empty), hd - C2.
bool decomposition_holds(const IntervalSet& hA, const StructureDecomposition& s, std::int64_t h, std::int64_t d);

/// max{1, (k-1)(d-1)d}: the decomposition holds for every h from here on.
std::int64_t sumset_hmax(const CurveSpec& c);

/// max{1, ri, ceil((F1 + F2 + 2) / d)}.
std::int64_t sigma_formula(const CurveSpec& c);
std::int64_t sigma_formula(const CurveSpec& c, const WProfile& w, const CohomologyProfile& h);

/// Cell budget for the brute force; MONOCURVE_BRUTE_CAP overrides 10^6.
std::int64_t default_cell_cap();

struct SigmaBrute {
  bool cap_exceeded = false;
  std::int64_t sigma = 0;  // meaningful only when the cap was not exceeded
  std::int64_t h_max = 0;
  std::int64_t cells = 0;  // h_max * d
};

/// One more than the last h in [1, hMax] where the decomposition fails.
/// Reports cap_exceeded instead when h_max * d exceeds the cap.
SigmaBrute sigma_bruteforce(const CurveSpec& c, std::optional<std::int64_t> cell_cap = {});

/// The two sigma bounds checked against `sigma`.
std::vector<BoundEntry> sigma_bounds(const CurveSpec& c, std::int64_t sigma);

enum class SigmaMethod { formula, brute, both };

struct SumsetReport {
  std::vector<std::int64_t> A;
  StructureDecomposition decomposition;
  std::int64_t sigma = 0;
  std::string sigma_method;  // "formula" or "bruteforce"
  std::int64_t h_max = 0;
  std::int64_t sigma_formula = 0;
  std::optional<std::int64_t> sigma_brute;
  bool cap_exceeded = false;
  friend bool operator==(const SumsetReport&, const SumsetReport&) = default;
};

SumsetReport sumset_report(const CurveSpec& c, const WProfile& w, const CohomologyProfile& h,
                           SigmaMethod method = SigmaMethod::formula, std::optional<std::int64_t> cell_cap = {});

}  // namespace monocurve
