#pragma once

// Brute-force reference implementations. None of these call into the fast
// paths; they share only the input and result types.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "monocurve/curve.hpp"
#include "monocurve/semigroup.hpp"
#include "monocurve/sumsets.hpp"

namespace monocurve::oracle {

/// An input outside the size an oracle is willing to enumerate.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

inline constexpr std::int64_t kMaxMembership = 1'000'000;
inline constexpr std::int64_t kMaxAperyGenerator = 200;
inline constexpr std::int64_t kMaxDegreeValue = 500;
inline constexpr std::int64_t kMaxSprimeD = 60;
inline constexpr std::int64_t kMaxSigmaCells = 10'000'000;

/// Sieve over [0, n]; n <= 10^6.
bool bf_membership(const GeneratorSet& a, std::int64_t n);
/// Residue-class scans of a sieve; the table is taken against a.modulus().
/// Largest generator <= 200.
AperyTable bf_apery(const GeneratorSet& a);
/// Largest hole of a sieve over [0, alpha_1 alpha_k]; largest generator <= 200.
std::int64_t bf_frobenius(const GeneratorSet& a);
/// Exhaustive coefficient search; n <= 500.
Degree bf_degree(const GeneratorSet& a, std::int64_t n);

/// I from independently computed Apery data.
std::vector<std::int64_t> bf_index_set(const CurveSpec& c);
/// Top degree of H^2 from the largest non-members of S1 and S2 per residue.
std::int64_t bf_a2(const CurveSpec& c);

/// S' \ S: points u with u1 in <A1>, u2 in <A2>, u1 + u2 = t d, and
/// u1 not in tA. Degrees up to d - k + 2 are enumerated; d <= 60.
std::vector<LatticePoint> bf_sprime_minus_s(const CurveSpec& c);

struct BfCohomology {
  std::optional<std::int64_t> a1;
  std::int64_t a2 = 0;
  std::int64_t reg = 0;
  std::int64_t ell = 0;
  std::vector<LatticePoint> points;
};
/// a1, ell and reg read off bf_sprime_minus_s and bf_a2.
BfCohomology bf_cohomology(const CurveSpec& c);

/// C1, c1, C2, c2 read off hA at h = hMax: c1 - 1 is the largest hole
/// below hd / 2 and C1 the part of hA underneath it, mirrored at the top.
StructureDecomposition bf_stabilized_sets(const CurveSpec& c);

/// sigma straight from the definition over h = 1..hMax; hMax * d <= 10^7.
std::int64_t bf_sigma(const CurveSpec& c);

}  // namespace monocurve::oracle
