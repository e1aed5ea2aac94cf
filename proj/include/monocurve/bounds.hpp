#pragma once

// Closed-form bounds on Frobenius numbers, Apery degrees, a_1, a_2, reg and
// sigma, each with an applicability predicate, and a report comparing them
// against the exactly computed values.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monocurve/arith.hpp"
#include "monocurve/curve.hpp"
#include "monocurve/semigroup.hpp"

namespace monocurve {

/// The value a bound speaks about.
enum class BoundTarget { F1, F2, frob_sum, delta_omega1, delta_omega2, a1, a2, reg, sigma };
/// upper/lower: one value; exact: one value; one_of: the target is among values.
enum class BoundKind { upper, lower, exact, one_of };

std::string to_string(BoundTarget t);
std::string to_string(BoundKind k);
std::optional<BoundTarget> parse_bound_target(const std::string& s);
std::optional<BoundKind> parse_bound_kind(const std::string& s);

/// Result of a single bound: either not applicable (with a reason) or a
/// list of integers. `exact` carries the rational the integer was rounded
/// from when there is one.
struct Bound {
  bool applicable = false;
  std::string reason;
  std::vector<std::int64_t> values;
  std::optional<Rational> exact;

  static Bound of(std::int64_t v) { return Bound{true, {}, {v}, std::nullopt}; }
  static Bound none(std::string why) { return Bound{false, std::move(why), {}, std::nullopt}; }
};

/// (alpha_1 - 1)(alpha_k - 1) - 1.
std::int64_t schur_bound(const GeneratorSet& a);
/// Number of distinct residues of the generators modulo m.
std::size_t residue_count(const GeneratorSet& a, std::int64_t m);
/// 2 alpha_k floor(alpha_1 / k) - alpha_1, when the residues mod alpha_1
/// are pairwise distinct.
Bound selmer_bound(const GeneratorSet& a);
/// The same expression with k replaced by the number of residues mod alpha_1.
Bound selmer_residue_bound(const GeneratorSet& a);
/// 1 + floor((2 alpha_k floor(alpha_1 / k) + lambda_max) / alpha_1) on
/// max delta(omega(i)), under pairwise distinct residues mod alpha_1.
Bound delta_omega_bound(const GeneratorSet& a);

/// The three cases bounding floor((F1 + F2) / d); `sharpest` is the least
/// applicable one.
struct FrobSumBounds {
  Bound generic;   // a_1 + (d - a_{k-1}) - 3
  Bound adjacent;  // eps - 2 when i, i+1 in A1
  Bound run;       // 0 when eps consecutive elements lie in A1
  std::int64_t sharpest = 0;
};
FrobSumBounds frobsum_bound(const CurveSpec& c);

/// floor((F1 + F2) / d), from the exact Frobenius numbers.
std::int64_t a2_bound(const CurveSpec& c);

struct A1Bounds {
  Bound lower;      // max{delta_1, delta_2} - 1 over I
  Bound upper_ii;   // max{delta_1 + delta_2 - deg} - 2 over I
  Bound upper_iii;  // floor((1 - a_1/d) M1 + (a_{k-1}/d) M2) - 2
};
A1Bounds a1_bounds(const CurveSpec& c, const WProfile& p);

/// d - k + 1.
std::int64_t glp_bound(const CurveSpec& c);
/// lambda_max + lambda_sl + 1.
std::int64_t lvovsky_bound(const CurveSpec& c);

struct SmoothBounds {
  Bound upper;  // floor((lambda_max - 1) / eps) + 2 when a_1 = 1, a_{k-1} = d - 1
  Bound lower;  // ceil(lambda / p) + 1 when a_1..a_p = 1..p, a_{p+1} >= p + 2
};
SmoothBounds smooth_bound(const CurveSpec& c);

struct BuchsbaumRegBounds {
  Bound generic;   // a_1 + d - a_{k-1}
  Bound adjacent;  // eps + 1
  Bound run;       // 3
};
BuchsbaumRegBounds buchsbaum_reg_bounds(const CurveSpec& c, bool buchsbaum);

/// A1 = [0,p] u [q,d]: one exact value when q < d and p <= d - q, the pair
/// {a+1, a+2} when q = d.
Bound r1_values(const CurveSpec& c);

/// Block-shape bound M + 2 (r >= 2, b_1 = 0, b_2r < d, b_5 - b_4 + 1 >= b_2).
Bound bd2_bound(const CurveSpec& c);

struct TheoremA9Bounds {
  Bound a1;   // ceil(R) - 1, since a_1 < R
  Bound reg;  // floor(1 + R)
};
/// R = (2d + lambda_max)(d + a_{k-1} - a_1) / (k d), under a_1..a_k distinct
/// mod a_1 and a_0..a_{k-1} distinct mod d - a_{k-1}.
TheoremA9Bounds theorem_a9_bound(const CurveSpec& c);

/// lambda_max + lambda_sl + 1 and d - k + 1 on sigma.
std::int64_t sigma_lvovsky_bound(const CurveSpec& c);
std::int64_t sigma_gw_bound(const CurveSpec& c);

/// Exactly computed quantities the bounds are checked against.
struct BoundTargets {
  std::int64_t F1 = 0;
  std::int64_t F2 = 0;
  std::int64_t frob_sum = 0;
  std::int64_t delta_omega1 = 0;
  std::int64_t delta_omega2 = 0;
  std::optional<std::int64_t> a1;
  std::int64_t a2 = 0;
  std::int64_t reg = 0;
  std::optional<std::int64_t> sigma;

  std::optional<std::int64_t> get(BoundTarget t) const;
  friend bool operator==(const BoundTargets&, const BoundTargets&) = default;
};

struct BoundEntry {
  std::string name;
  BoundTarget target = BoundTarget::reg;
  BoundKind kind = BoundKind::upper;
  bool applicable = false;
  std::string reason;
  std::vector<std::int64_t> values;
  std::optional<Rational> exact;
  std::optional<bool> holds;  // absent when inapplicable or the target is undefined
  friend bool operator==(const BoundEntry&, const BoundEntry&) = default;
};

/// Whether `value` satisfies the entry (upper: value <= bound, and so on).
bool satisfies(const BoundEntry& e, std::int64_t value);

struct BoundReport {
  std::vector<BoundEntry> entries;
  BoundTargets targets;

  const BoundEntry* find(const std::string& name) const;
  /// False when some applicable entry is violated by its target.
  bool all_hold() const;
  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

BoundReport bound_report(const CurveSpec& c);
/// With precomputed profiles; `sigma` adds the two sigma entries.
BoundReport bound_report(const CurveSpec& c, const WProfile& w, const CohomologyProfile& h,
                         std::optional<std::int64_t> sigma = {});

}  // namespace monocurve
