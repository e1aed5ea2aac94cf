#include "monocurve/semigroup.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace monocurve {

namespace {

constexpr std::int64_t kUnset = std::numeric_limits<std::int64_t>::max();

void validate(const std::vector<std::int64_t>& gens) {
  if (gens.size() < 2) throw ValidationError("need at least two generators");
  if (gens.front() <= 0) throw ValidationError("generators must be positive");
  for (std::size_t i = 1; i < gens.size(); ++i) {
    if (gens[i] <= gens[i - 1]) throw ValidationError("generators must be strictly increasing");
  }
  std::int64_t g = 0;
  for (auto x : gens) g = std::gcd(g, x);
  if (g != 1) throw ValidationError("generators must be coprime (gcd is " + std::to_string(g) + ")");
}

}  // namespace

GeneratorSet::GeneratorSet(std::vector<std::int64_t> gens) : gens_(std::move(gens)), modulus_(0) {
  validate(gens_);
  modulus_ = gens_.back();
}

GeneratorSet::GeneratorSet(std::vector<std::int64_t> gens, std::int64_t modulus)
    : gens_(std::move(gens)), modulus_(modulus) {
  validate(gens_);
  if (!contains(modulus_)) throw ValidationError("modulus must be one of the generators");
}

bool GeneratorSet::contains(std::int64_t x) const {
  return std::binary_search(gens_.begin(), gens_.end(), x);
}

std::int64_t AperyTable::max_degree() const {
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

AperyTable apery(const GeneratorSet& a) {
  const std::int64_t m = a.modulus();
  std::vector<std::int64_t> others;
  for (auto g : a.gens())
    if (g != m) others.push_back(g);

  AperyTable t;
  t.modulus = m;
  t.omega.assign(static_cast<std::size_t>(m), kUnset);
  t.deg.assign(static_cast<std::size_t>(m), 0);
  t.omega[0] = 0;
  for (auto g : others) {
    auto r = static_cast<std::size_t>(g % m);
    if (g < t.omega[r]) {
      t.omega[r] = g;
      t.deg[r] = 1;
    }
  }

  std::vector<std::int64_t> frontier = others;
  std::int64_t n = 1;
  while (!frontier.empty()) {
    ++n;
    std::vector<std::int64_t> next;
    for (auto g : others) {
      for (auto y : frontier) {
        const std::int64_t v = g + y;
        auto r = static_cast<std::size_t>(v % m);
        if (v < t.omega[r]) {
          t.omega[r] = v;
          t.deg[r] = n;
          next.push_back(v);
        }
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    frontier = std::move(next);
  }
  t.steps = n;
  return t;
}

std::int64_t frobenius(const AperyTable& table) {
  return *std::max_element(table.omega.begin(), table.omega.end()) - table.modulus;
}

std::int64_t frobenius(const GeneratorSet& a) { return frobenius(apery(a)); }

bool membership(const AperyTable& table, std::int64_t n) {
  if (n < 0) return false;
  return table.omega[static_cast<std::size_t>(n % table.modulus)] <= n;
}

bool membership(const GeneratorSet& a, std::int64_t n) { return membership(apery(a), n); }

Degree degree(const GeneratorSet& a, std::int64_t n) {
  if (n < 0) return not_in_semigroup;
  std::vector<std::int64_t> best(static_cast<std::size_t>(n) + 1, kUnset);
  best[0] = 0;
  for (std::int64_t x = 1; x <= n; ++x) {
    std::int64_t b = kUnset;
    for (auto g : a.gens()) {
      if (g > x) break;
      auto prev = best[static_cast<std::size_t>(x - g)];
      if (prev != kUnset) b = std::min(b, prev + 1);
    }
    best[static_cast<std::size_t>(x)] = b;
  }
  auto r = best[static_cast<std::size_t>(n)];
  if (r == kUnset) return not_in_semigroup;
  return r;
}

DegreeTable::DegreeTable(std::int64_t d, std::int64_t max_level)
    : d_(d), max_level_(max_level), cells_(static_cast<std::size_t>(d * (max_level + 1)), -1) {}

Degree DegreeTable::at(std::int64_t i, std::int64_t j) const {
  if (i < 0 || i >= d_ || j < 0 || j > max_level_) return not_in_semigroup;
  auto c = cells_[static_cast<std::size_t>(j * d_ + i)];
  if (c < 0) return not_in_semigroup;
  return c;
}

Degree DegreeTable::of_value(std::int64_t value) const {
  if (value < 0) return not_in_semigroup;
  return at(value % d_, value / d_);
}

DegreeTable degree_table(const GeneratorSet& a, std::int64_t d, std::int64_t max_level) {
  if (d <= 0) throw ValidationError("degree table modulus must be positive");
  if (max_level < 0) throw ValidationError("degree table level must be non-negative");
  if (d != a.largest()) throw ValidationError("degree table modulus must be the largest generator");
  DegreeTable table(d, max_level);
  table.cells_[0] = 0;
  if (max_level == 0) return table;

  // Values at level n are at most n*d, so every cell index stays in range.
  std::vector<std::int64_t> level;
  for (auto g : a.gens()) {
    table.cells_[static_cast<std::size_t>(g)] = 1;
    level.push_back(g);
  }
  for (std::int64_t n = 2; n <= max_level && !level.empty(); ++n) {
    std::vector<std::int64_t> next;
    for (auto x : level) {
      for (auto g : a.gens()) {
        const std::int64_t v = x + g;
        auto& cell = table.cells_[static_cast<std::size_t>(v)];
        if (cell < 0) {
          cell = static_cast<std::int32_t>(n);
          next.push_back(v);
        }
      }
    }
    std::sort(next.begin(), next.end());
    level = std::move(next);
  }
  return table;
}

std::int64_t GapProfile::b(std::size_t j) const {
  const Block& blk = blocks.at(j / 2);
  return (j % 2 == 0) ? blk.first : blk.last;
}

GapProfile gap_profile(const GeneratorSet& a) {
  GapProfile p;
  std::int64_t prev = 0;
  for (auto g : a.gens()) {
    p.lambdas.push_back(g - prev - 1);
    prev = g;
  }
  auto sorted = p.lambdas;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  p.lambda_max = sorted[0];
  p.lambda_sl = sorted.size() > 1 ? sorted[1] : 0;

  p.blocks.push_back({0, 0});
  for (auto g : a.gens()) {
    if (g == p.blocks.back().last + 1)
      p.blocks.back().last = g;
    else
      p.blocks.push_back({g, g});
  }
  return p;
}

}  // namespace monocurve
