#pragma once

// Invariants of the projective monomial curve C(a_1, ..., a_k): the
// w-vectors built from the two Apery sets, the index set I, the
// Cohen-Macaulay / Buchsbaum classification, the first local cohomology
// (its lattice points, a_1 and length), a_2, reg, and the Hilbert function.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monocurve/semigroup.hpp"

namespace monocurve {

/// 0 = a_0 < a_1 < ... < a_k = d, coprime, k >= 3. A1 = {a_1, ..., a_k};
/// A2 = {d - a_{k-1}, ..., d - a_1, d} (the reflected set, zero dropped).
class CurveSpec {
 public:
  explicit CurveSpec(std::vector<std::int64_t> a);

  std::span<const std::int64_t> a() const { return A1_.gens(); }
  std::int64_t a_at(std::size_t i) const { return i == 0 ? 0 : A1_.gens()[i - 1]; }
  std::int64_t d() const { return A1_.largest(); }
  std::size_t k() const { return A1_.size(); }
  const GeneratorSet& A1() const { return A1_; }
  const GeneratorSet& A2() const { return A2_; }

  /// True when {0, a_1, ..., a_k} = [0, d].
  bool is_full() const { return static_cast<std::int64_t>(k()) == d(); }
  /// Membership in {0, a_1, ..., a_k}.
  bool in_A1(std::int64_t x) const { return x == 0 || A1_.contains(x); }
  /// Membership in {0, d - a_{k-1}, ..., d}.
  bool in_A2(std::int64_t x) const { return x == 0 || A2_.contains(x); }
  /// x in {a_1, ..., a_{k-1}}.
  bool is_inner(std::int64_t x) const { return x != d() && A1_.contains(x); }

  friend bool operator==(const CurveSpec&, const CurveSpec&) = default;

 private:
  GeneratorSet A1_;
  GeneratorSet A2_;
};

std::string to_string(const CurveSpec& c);

struct LatticePoint {
  std::int64_t u1 = 0;
  std::int64_t u2 = 0;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// Degree of a lattice point in H, (u1 + u2) / d.
inline std::int64_t lattice_degree(const LatticePoint& u, std::int64_t d) { return (u.u1 + u.u2) / d; }

/// w_i = (omega_1(i), omega_2(d - i)) with its degree and the degrees of
/// both components.
struct WEntry {
  std::int64_t i = 0;
  LatticePoint w;
  std::int64_t deg = 0;
  std::int64_t d1 = 0;
  std::int64_t d2 = 0;
  bool in_I = false;
};

struct WProfile {
  std::vector<WEntry> entries;  // indexed by residue, 0 <= i < d
  std::vector<std::int64_t> I;
  std::int64_t a2 = 0;
  AperyTable ap1;
  AperyTable ap2;
};

/// Residue-by-residue w data and a_2 = max deg(w_i) - 2.
WProfile build_profile(const CurveSpec& c);

bool is_cohen_macaulay(const CurveSpec& c);

struct BuchsbaumWitness {
  enum class Kind { delta1, delta2, pair };
  Kind kind = Kind::delta1;
  std::int64_t i = 0;  // the failing index, or the lower end of the pair
  std::int64_t j = 0;  // pair only: w_j - w_i = e_h
  std::int64_t h = 0;
  friend bool operator==(const BuchsbaumWitness&, const BuchsbaumWitness&) = default;
};

std::string to_string(BuchsbaumWitness::Kind kind);

struct BuchsbaumVerdict {
  bool buchsbaum = false;
  std::optional<BuchsbaumWitness> witness;
};

/// Cohen-Macaulay rings are reported Buchsbaum. Otherwise every i in I must
/// have delta_1 = delta_2 = deg + 1 and no two w's may differ by e_h for an
/// inner generator h; the first violation found is returned.
BuchsbaumVerdict is_buchsbaum(const CurveSpec& c);
BuchsbaumVerdict is_buchsbaum(const CurveSpec& c, const WProfile& p);

struct CohomologyProfile {
  std::int64_t d = 0;
  std::vector<std::int64_t> I;
  bool cm = false;
  bool buchsbaum = false;
  std::optional<BuchsbaumWitness> witness;
  std::optional<std::int64_t> a1;  // absent when H^1 = 0
  std::int64_t a2 = 0;
  std::int64_t reg = 0;
  std::int64_t reg_curve = 0;
  std::int64_t ell_h1 = 0;
  std::vector<LatticePoint> L;
  std::vector<LatticePoint> Lprime;
  bool used_degree_table = false;
  friend bool operator==(const CohomologyProfile&, const CohomologyProfile&) = default;
};

/// H^1 as the lattice points w_i + (n1 d, n2 d), i in I, with
/// n1 <= delta_2(w_i) - deg(w_i) - 1 and
/// n2 <= delta_1(omega_1(i) + n1 d) - deg(w_i) - n1 - 1.
CohomologyProfile first_cohomology(const CurveSpec& c);
CohomologyProfile first_cohomology(const CurveSpec& c, const WProfile& p);

/// dim H^1 in degree t.
std::int64_t h1_graded_dimension(const CohomologyProfile& p, std::int64_t t);

/// dim H^2 in degree t = sum_j max(0, deg(w_j) - t - 1). Degrees below
/// `floor` (default -3d) are rejected.
std::int64_t h2_graded_dimension(const CurveSpec& c, std::int64_t t, std::optional<std::int64_t> floor = {});
std::int64_t h2_graded_dimension(const CurveSpec& c, const WProfile& p, std::int64_t t,
                                 std::optional<std::int64_t> floor = {});

struct HilbertData {
  std::vector<std::int64_t> values;  // H(0..N)
  std::int64_t slope = 0;
  std::int64_t intercept = 0;
  std::int64_t ri = 0;
};

/// H(n) = |n A| for A = {0, a_1, ..., d}; requires N >= reg + 1.
HilbertData hilbert(const CurveSpec& c, std::int64_t n_max);
HilbertData hilbert(const CurveSpec& c, const CohomologyProfile& p, std::int64_t n_max);

enum class Property { cohen_macaulay, buchsbaum };

/// Outcome of one of the closed-form classification criteria.
struct SpecialVerdict {
  std::string criterion;
  Property property = Property::cohen_macaulay;
  bool applicable = false;
  std::string reason;  // why it does not apply
  bool verdict = false;
  bool agrees = true;  // with the general classifier
};

std::string to_string(Property p);

/// Runs the consecutive-run criterion, the a_1 = 1 long-block non-CM
/// criterion and the reg = 2 / smooth Buchsbaum criteria.
std::vector<SpecialVerdict> classify_special(const CurveSpec& c, const CohomologyProfile& p);

/// The consecutive-run criterion anchored at a specific run start i
/// (i, ..., i + eps - 1 in A1); nullopt when no such run starts at i.
std::optional<bool> consecutive_run_cm_verdict(const CurveSpec& c, std::int64_t i);

/// eps = max{a_1, d - a_{k-1}}.
std::int64_t frobenius_epsilon(const CurveSpec& c);
/// Smallest i with i, ..., i + len - 1 all in {0, a_1, ..., d}.
std::optional<std::int64_t> first_run_start(const CurveSpec& c, std::int64_t len);
/// max{i : 1..i and d-1..d-i all inner generators}; 0 when none.
std::int64_t smooth_epsilon(const CurveSpec& c);

}  // namespace monocurve
