#include "monocurve/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include <boost/dynamic_bitset.hpp>

namespace monocurve::oracle {

namespace {

using Bits = boost::dynamic_bitset<>;

std::vector<char> sieve(std::span<const std::int64_t> gens, std::int64_t n) {
  std::vector<char> r(static_cast<std::size_t>(n) + 1, 0);
  r[0] = 1;
  for (std::int64_t x = 1; x <= n; ++x)
    for (auto g : gens)
      if (g <= x && r[static_cast<std::size_t>(x - g)]) {
        r[static_cast<std::size_t>(x)] = 1;
        break;
      }
  return r;
}

void guard_generators(const GeneratorSet& a) {
  if (a.largest() > kMaxAperyGenerator)
    throw RangeError("largest generator " + std::to_string(a.largest()) + " exceeds " +
                     std::to_string(kMaxAperyGenerator));
}

// Fewest generators summing to n, trying large generators first and
// pruning with ceil(rem / g) for the largest generator still available.
struct Search {
  std::span<const std::int64_t> gens;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();

  void run(std::ptrdiff_t j, std::int64_t rem, std::int64_t used) {
    if (rem == 0) {
      best = std::min(best, used);
      return;
    }
    if (j < 0) return;
    const std::int64_t g = gens[static_cast<std::size_t>(j)];
    if (used + (rem + g - 1) / g >= best) return;
    for (std::int64_t x = rem / g; x >= 0; --x) run(j - 1, rem - x * g, used + x);
  }
};

Degree search_degree(std::span<const std::int64_t> gens, std::int64_t n) {
  if (n < 0) return not_in_semigroup;
  Search s{gens};
  s.run(static_cast<std::ptrdiff_t>(gens.size()) - 1, n, 0);
  if (s.best == std::numeric_limits<std::int64_t>::max()) return not_in_semigroup;
  return s.best;
}

struct AperyPair {
  AperyTable t1;
  AperyTable t2;
};

AperyPair both_tables(const CurveSpec& c) { return {bf_apery(c.A1()), bf_apery(c.A2())}; }

// Calls f(h, hA) for h = 1..h_max, growing the bitset with h.
template <class F>
void for_each_sumset(const std::vector<std::int64_t>& A, std::int64_t d, std::int64_t h_max, F&& f) {
  Bits cur(static_cast<std::size_t>(d) + 1);
  for (auto a : A) cur.set(static_cast<std::size_t>(a));
  f(1, cur);
  for (std::int64_t h = 2; h <= h_max; ++h) {
    cur.resize(static_cast<std::size_t>(h * d) + 1);
    Bits next(cur.size());
    for (auto a : A) next |= cur << static_cast<std::size_t>(a);
    cur.swap(next);
    f(h, cur);
  }
}

std::vector<std::int64_t> point_set(const CurveSpec& c) {
  std::vector<std::int64_t> A{0};
  for (auto g : c.a()) A.push_back(g);
  return A;
}

std::int64_t sigma_hmax(const CurveSpec& c) {
  const auto k = static_cast<std::int64_t>(c.k());
  return std::max<std::int64_t>(1, (k - 1) * (c.d() - 1) * c.d());
}

void guard_sigma(const CurveSpec& c) {
  if (sigma_hmax(c) * c.d() > kMaxSigmaCells)
    throw RangeError("hMax * d exceeds " + std::to_string(kMaxSigmaCells));
}

}  // namespace

bool bf_membership(const GeneratorSet& a, std::int64_t n) {
  if (n > kMaxMembership) throw RangeError("membership query above " + std::to_string(kMaxMembership));
  if (n < 0) return false;
  return sieve(a.gens(), n)[static_cast<std::size_t>(n)] != 0;
}

std::int64_t bf_frobenius(const GeneratorSet& a) {
  guard_generators(a);
  const std::int64_t top = a.smallest() * a.largest();
  const auto r = sieve(a.gens(), top);
  for (std::int64_t x = top; x >= 0; --x)
    if (!r[static_cast<std::size_t>(x)]) return x;
  return -1;
}

AperyTable bf_apery(const GeneratorSet& a) {
  guard_generators(a);
  const std::int64_t m = a.modulus();
  const std::int64_t top = a.smallest() * a.largest() + m;
  const auto r = sieve(a.gens(), top);
  AperyTable t;
  t.modulus = m;
  t.omega.assign(static_cast<std::size_t>(m), -1);
  t.deg.assign(static_cast<std::size_t>(m), 0);
  for (std::int64_t i = 0; i < m; ++i) {
    for (std::int64_t n = i; n <= top; n += m) {
      if (r[static_cast<std::size_t>(n)]) {
        t.omega[static_cast<std::size_t>(i)] = n;
        t.deg[static_cast<std::size_t>(i)] = *search_degree(a.gens(), n);
        break;
      }
    }
    if (t.omega[static_cast<std::size_t>(i)] < 0) throw std::logic_error("residue class not reached");
  }
  t.steps = t.max_degree() + 1;
  return t;
}

Degree bf_degree(const GeneratorSet& a, std::int64_t n) {
  if (n > kMaxDegreeValue) throw RangeError("degree query above " + std::to_string(kMaxDegreeValue));
  return search_degree(a.gens(), n);
}

std::vector<std::int64_t> bf_index_set(const CurveSpec& c) {
  const std::int64_t d = c.d();
  const AperyPair t = both_tables(c);
  std::vector<std::int64_t> I;
  for (std::int64_t i = 1; i < d; ++i) {
    if (c.A1().contains(i)) continue;
    const std::int64_t u1 = t.t1.omega[static_cast<std::size_t>(i)];
    const std::int64_t u2 = t.t2.omega[static_cast<std::size_t>(d - i)];
    if (t.t1.deg[static_cast<std::size_t>(i)] * d > u1 + u2) I.push_back(i);
  }
  return I;
}

std::int64_t bf_a2(const CurveSpec& c) {
  guard_generators(c.A1());
  const std::int64_t d = c.d();
  const std::int64_t top = c.A1().smallest() * d + c.A2().smallest() * d + d;
  const auto s1 = sieve(c.A1().gens(), top);
  const auto s2 = sieve(c.A2().gens(), top);
  auto largest_hole = [&](const std::vector<char>& s, std::int64_t i) {
    std::int64_t best = i - d;
    for (std::int64_t n = i; n <= top; n += d)
      if (!s[static_cast<std::size_t>(n)]) best = n;
    return best;
  };
  std::int64_t a2 = std::numeric_limits<std::int64_t>::min();
  for (std::int64_t i = 0; i < d; ++i) {
    const std::int64_t x1 = largest_hole(s1, i);
    const std::int64_t x2 = largest_hole(s2, (d - i) % d);
    a2 = std::max(a2, (x1 + x2) / d);
  }
  return a2;
}

std::vector<LatticePoint> bf_sprime_minus_s(const CurveSpec& c) {
  const std::int64_t d = c.d();
  if (d > kMaxSprimeD) throw RangeError("d exceeds " + std::to_string(kMaxSprimeD));
  const std::int64_t t_max = d - static_cast<std::int64_t>(c.k()) + 2;
  const std::int64_t top = t_max * d;
  const auto s1 = sieve(c.A1().gens(), top);
  const auto s2 = sieve(c.A2().gens(), top);
  const std::vector<std::int64_t> A = point_set(c);

  std::vector<LatticePoint> out;
  Bits tA(1);
  tA.set(0);
  for (std::int64_t t = 0; t <= t_max; ++t) {
    if (t > 0) {
      tA.resize(static_cast<std::size_t>(t * d) + 1);
      Bits next(tA.size());
      for (auto a : A) next |= tA << static_cast<std::size_t>(a);
      tA.swap(next);
    }
    for (std::int64_t u1 = 0; u1 <= t * d; ++u1) {
      const std::int64_t u2 = t * d - u1;
      if (s1[static_cast<std::size_t>(u1)] && s2[static_cast<std::size_t>(u2)] && !tA[static_cast<std::size_t>(u1)])
        out.push_back({u1, u2});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BfCohomology bf_cohomology(const CurveSpec& c) {
  BfCohomology r;
  r.points = bf_sprime_minus_s(c);
  r.ell = static_cast<std::int64_t>(r.points.size());
  for (const auto& u : r.points) {
    const std::int64_t t = (u.u1 + u.u2) / c.d();
    r.a1 = r.a1 ? std::max(*r.a1, t) : t;
  }
  r.a2 = bf_a2(c);
  r.reg = r.a1 ? std::max(*r.a1 + 1, r.a2 + 2) : r.a2 + 2;
  return r;
}

StructureDecomposition bf_stabilized_sets(const CurveSpec& c) {
  guard_sigma(c);
  const std::int64_t d = c.d(), h_max = sigma_hmax(c);
  StructureDecomposition s;
  for_each_sumset(point_set(c), d, h_max, [&](std::int64_t h, const Bits& hA) {
    if (h != h_max) return;
    const std::int64_t top = h * d, half = top / 2;
    s.c1 = 0;
    s.c2 = 0;
    for (std::int64_t x = half; x >= 0; --x)
      if (!hA[static_cast<std::size_t>(x)]) {
        s.c1 = x + 1;
        break;
      }
    for (std::int64_t y = half; y >= 0; --y)
      if (!hA[static_cast<std::size_t>(top - y)]) {
        s.c2 = y + 1;
        break;
      }
    for (std::int64_t x = 0; x < s.c1; ++x)
      if (hA[static_cast<std::size_t>(x)]) s.C1.push_back(x);
    for (std::int64_t y = 0; y < s.c2; ++y)
      if (hA[static_cast<std::size_t>(top - y)]) s.C2.push_back(y);
  });
  return s;
}

std::int64_t bf_sigma(const CurveSpec& c) {
  const StructureDecomposition s = bf_stabilized_sets(c);
  const std::int64_t d = c.d();
  std::vector<char> in1(static_cast<std::size_t>(s.c1), 0), in2(static_cast<std::size_t>(s.c2), 0);
  for (auto x : s.C1) in1[static_cast<std::size_t>(x)] = 1;
  for (auto y : s.C2) in2[static_cast<std::size_t>(y)] = 1;
  const auto expected_low = static_cast<std::int64_t>(s.C1.size());
  const auto expected_high = static_cast<std::int64_t>(s.C2.size());

  std::int64_t last_fail = 0;
  for_each_sumset(point_set(c), d, sigma_hmax(c), [&](std::int64_t h, const Bits& hA) {
    const std::int64_t top = h * d;
    bool ok = s.c1 <= top - s.c2;
    for (std::int64_t x = 0; ok && x < s.c1; ++x) ok = hA[static_cast<std::size_t>(x)] == (in1[static_cast<std::size_t>(x)] != 0);
    for (std::int64_t y = 0; ok && y < s.c2; ++y)
      ok = hA[static_cast<std::size_t>(top - y)] == (in2[static_cast<std::size_t>(y)] != 0);
    if (ok) ok = static_cast<std::int64_t>(hA.count()) == expected_low + (top - s.c2 - s.c1 + 1) + expected_high;
    if (!ok) last_fail = h;
  });
  return last_fail + 1;
}

}  // namespace monocurve::oracle
