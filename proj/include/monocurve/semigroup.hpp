#pragma once

// Numerical semigroups: Apery sets, Frobenius numbers, membership and
// minimal-length (degree) representations.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace monocurve {

/// Thrown for malformed input (non-increasing, non-coprime, too few generators).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Minimum number of generators summing to a value; nullopt means the value
/// is not in the semigroup (or, for a DegreeTable, not reached).
using Degree = std::optional<std::int64_t>;
inline constexpr std::nullopt_t not_in_semigroup = std::nullopt;

/// A strictly increasing, coprime list of at least two positive integers.
/// The modulus is the generator the Apery set is taken against; it
/// defaults to the largest generator.
class GeneratorSet {
 public:
  explicit GeneratorSet(std::vector<std::int64_t> gens);
  GeneratorSet(std::vector<std::int64_t> gens, std::int64_t modulus);

  std::span<const std::int64_t> gens() const { return gens_; }
  std::int64_t modulus() const { return modulus_; }
  std::int64_t smallest() const { return gens_.front(); }
  std::int64_t largest() const { return gens_.back(); }
  std::size_t size() const { return gens_.size(); }
  bool contains(std::int64_t x) const;

  GeneratorSet with_modulus(std::int64_t modulus) const {
    return GeneratorSet(gens_, modulus);
  }

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  std::vector<std::int64_t> gens_;
  std::int64_t modulus_;
};

/// omega[i] is the least semigroup element congruent to i modulo `modulus`;
/// deg[i] is its degree. `steps` is the round at which frontier propagation
/// ran dry (one more than the largest degree).
struct AperyTable {
  std::int64_t modulus = 0;
  std::vector<std::int64_t> omega;
  std::vector<std::int64_t> deg;
  std::int64_t steps = 0;

  std::int64_t max_degree() const;
};

/// Apery set by frontier propagation: round n extends the values that
/// improved in round n-1 by one generator, keeping a cell only when the
/// new value is strictly smaller.
AperyTable apery(const GeneratorSet& a);

/// Largest integer outside the semigroup; -1 when the semigroup is N.
std::int64_t frobenius(const GeneratorSet& a);
std::int64_t frobenius(const AperyTable& table);

bool membership(const GeneratorSet& a, std::int64_t n);
bool membership(const AperyTable& table, std::int64_t n);

/// Minimum coefficient sum over representations of n, via the recursion
/// delta(n) = 1 + min delta(n - g). Works for non-minimal generating sets.
Degree degree(const GeneratorSet& a, std::int64_t n);

/// delta(i + j*d) for 0 <= i < d and 0 <= j <= max_level, filled level by
/// level with the sums of exactly n generators that are new at level n.
/// Cells whose value needs more than max_level generators (or is not in
/// the semigroup at all) are absent.
class DegreeTable {
 public:
  DegreeTable(std::int64_t d, std::int64_t max_level);

  std::int64_t modulus() const { return d_; }
  std::int64_t max_level() const { return max_level_; }
  Degree at(std::int64_t i, std::int64_t j) const;
  Degree of_value(std::int64_t value) const;

 private:
  friend DegreeTable degree_table(const GeneratorSet&, std::int64_t, std::int64_t);
  std::int64_t d_;
  std::int64_t max_level_;
  std::vector<std::int32_t> cells_;  // -1 marks an absent cell
};

DegreeTable degree_table(const GeneratorSet& a, std::int64_t d, std::int64_t max_level);

/// Maximal run [first, last] of consecutive integers in {0} u gens.
struct Block {
  std::int64_t first = 0;
  std::int64_t last = 0;
  friend bool operator==(const Block&, const Block&) = default;
};

/// Gaps lambda_i = g_i - g_{i-1} - 1 with g_0 := 0, the largest and
/// second largest gap, and the block decomposition of {0} u gens.
struct GapProfile {
  std::vector<std::int64_t> lambdas;
  std::int64_t lambda_max = 0;
  std::int64_t lambda_sl = 0;
  std::vector<Block> blocks;

  /// Number of non-zero gaps (blocks minus one).
  std::size_t r() const { return blocks.empty() ? 0 : blocks.size() - 1; }
  /// b_j in the interval notation [b_0,b_1] u [b_2,b_3] u ... .
  std::int64_t b(std::size_t j) const;

  friend bool operator==(const GapProfile&, const GapProfile&) = default;
};

GapProfile gap_profile(const GeneratorSet& a);

}  // namespace monocurve
