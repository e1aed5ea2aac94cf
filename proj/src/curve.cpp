#include "monocurve/curve.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "monocurve/interval_set.hpp"

namespace monocurve {

namespace {

std::vector<std::int64_t> reflect(const std::vector<std::int64_t>& a) {
  const std::int64_t d = a.back();
  std::vector<std::int64_t> out;
  for (auto it = a.rbegin() + 1; it != a.rend(); ++it) out.push_back(d - *it);
  out.push_back(d);
  return out;
}

std::vector<std::int64_t> checked(std::vector<std::int64_t> a) {
  if (a.size() < 3) throw ValidationError("a curve needs at least three generators");
  return a;
}

// Trivial Apery data for A = [1, d]: omega(i) = i.
AperyTable full_table(std::int64_t d) {
  AperyTable t;
  t.modulus = d;
  t.omega.resize(static_cast<std::size_t>(d));
  t.deg.assign(static_cast<std::size_t>(d), 1);
  for (std::int64_t i = 0; i < d; ++i) t.omega[static_cast<std::size_t>(i)] = i;
  t.deg[0] = 0;
  t.steps = 2;
  return t;
}

SpecialVerdict make_verdict(std::string name, Property prop) {
  SpecialVerdict v;
  v.criterion = std::move(name);
  v.property = prop;
  return v;
}

bool in_double(const CurveSpec& c, std::int64_t x) {
  if (x < 0 || x > 2 * c.d()) return false;
  if (c.in_A1(x)) return true;  // x = x + 0
  for (auto g : c.a())
    if (g <= x && c.in_A1(x - g)) return true;
  return false;
}

}  // namespace

CurveSpec::CurveSpec(std::vector<std::int64_t> a) : A1_(checked(a)), A2_(reflect(a)) {}

std::string to_string(const CurveSpec& c) {
  std::ostringstream os;
  os << "C(";
  bool first = true;
  for (auto g : c.a()) {
    if (!first) os << ',';
    os << g;
    first = false;
  }
  os << ')';
  return os.str();
}

WProfile build_profile(const CurveSpec& c) {
  const std::int64_t d = c.d();
  WProfile p;
  if (c.is_full()) {
    p.ap1 = full_table(d);
    p.ap2 = full_table(d);
  } else {
    p.ap1 = apery(c.A1());
    p.ap2 = apery(c.A2());
  }
  p.entries.resize(static_cast<std::size_t>(d));
  std::int64_t max_deg = 0;
  for (std::int64_t i = 0; i < d; ++i) {
    const auto r1 = static_cast<std::size_t>(i);
    const auto r2 = static_cast<std::size_t>((d - i) % d);
    WEntry& e = p.entries[r1];
    e.i = i;
    e.w = {p.ap1.omega[r1], p.ap2.omega[r2]};
    if ((e.w.u1 + e.w.u2) % d != 0) throw std::logic_error("w vector off the lattice");
    e.deg = lattice_degree(e.w, d);
    e.d1 = p.ap1.deg[r1];
    e.d2 = p.ap2.deg[r2];
    e.in_I = i != 0 && !c.is_inner(i) && e.d1 > e.deg;
    if (e.in_I) p.I.push_back(i);
    max_deg = std::max(max_deg, e.deg);
  }
  p.a2 = max_deg - 2;
  return p;
}

bool is_cohen_macaulay(const CurveSpec& c) { return build_profile(c).I.empty(); }

std::string to_string(BuchsbaumWitness::Kind kind) {
  switch (kind) {
    case BuchsbaumWitness::Kind::delta1: return "delta1";
    case BuchsbaumWitness::Kind::delta2: return "delta2";
    case BuchsbaumWitness::Kind::pair: return "pair";
  }
  return "?";
}

BuchsbaumVerdict is_buchsbaum(const CurveSpec& c) { return is_buchsbaum(c, build_profile(c)); }

BuchsbaumVerdict is_buchsbaum(const CurveSpec& c, const WProfile& p) {
  using Kind = BuchsbaumWitness::Kind;
  for (auto i : p.I) {
    const WEntry& e = p.entries[static_cast<std::size_t>(i)];
    if (e.d1 != e.deg + 1) return {false, BuchsbaumWitness{Kind::delta1, i, 0, 0}};
    if (e.d2 != e.deg + 1) return {false, BuchsbaumWitness{Kind::delta2, i, 0, 0}};
  }
  const std::int64_t d = c.d();
  for (auto i : p.I) {
    const LatticePoint wi = p.entries[static_cast<std::size_t>(i)].w;
    for (auto j : p.I) {
      if (j == i) continue;
      const LatticePoint wj = p.entries[static_cast<std::size_t>(j)].w;
      const std::int64_t h = wj.u1 - wi.u1;
      if (h > 0 && wj.u2 - wi.u2 == d - h && c.is_inner(h)) return {false, BuchsbaumWitness{Kind::pair, i, j, h}};
    }
  }
  return {true, std::nullopt};
}

CohomologyProfile first_cohomology(const CurveSpec& c) { return first_cohomology(c, build_profile(c)); }

CohomologyProfile first_cohomology(const CurveSpec& c, const WProfile& p) {
  const std::int64_t d = c.d();
  CohomologyProfile out;
  out.d = d;
  out.I = p.I;
  out.a2 = p.a2;
  out.cm = p.I.empty();
  if (out.cm) {
    out.buchsbaum = true;
    out.reg = out.a2 + 2;
    out.reg_curve = out.reg + 1;
    return out;
  }
  auto bv = is_buchsbaum(c, p);
  out.buchsbaum = bv.buchsbaum;
  out.witness = bv.witness;

  std::int64_t n1_top = 0, nd2 = 0;
  for (auto i : p.I) {
    const WEntry& e = p.entries[static_cast<std::size_t>(i)];
    n1_top = std::max(n1_top, e.d1);
    nd2 = std::max(nd2, e.d2 - e.deg - 1);
  }
  std::optional<DegreeTable> table;
  if (nd2 > 0) {
    table = degree_table(c.A1(), d, n1_top + nd2);
    out.used_degree_table = true;
  }

  std::int64_t a1 = 0;
  bool have_a1 = false;
  for (auto i : p.I) {
    const WEntry& e = p.entries[static_cast<std::size_t>(i)];
    const std::int64_t nd2i = e.d2 - e.deg - 1;
    if (nd2i < 0) throw std::logic_error("delta_2 below deg + 1 on the index set");
    for (std::int64_t n1 = 0; n1 <= nd2i; ++n1) {
      std::int64_t v = e.d1;
      if (n1 > 0) {
        auto lookup = table->of_value(e.w.u1 + n1 * d);
        if (!lookup) throw std::logic_error("degree table too shallow");
        v = *lookup;
      }
      const std::int64_t n2max = v - e.deg - n1 - 1;
      if (n2max < 0) throw std::logic_error("negative n2 range on the index set");
      out.L.push_back({e.w.u1 + n1 * d, e.w.u2 + n2max * d});
      for (std::int64_t n2 = 0; n2 <= n2max; ++n2) out.Lprime.push_back({e.w.u1 + n1 * d, e.w.u2 + n2 * d});
      a1 = have_a1 ? std::max(a1, v - 1) : v - 1;
      have_a1 = true;
    }
  }
  std::sort(out.L.begin(), out.L.end());
  std::sort(out.Lprime.begin(), out.Lprime.end());
  if (have_a1) out.a1 = a1;
  out.ell_h1 = static_cast<std::int64_t>(out.Lprime.size());
  out.reg = std::max(have_a1 ? a1 + 1 : out.a2 + 2, out.a2 + 2);
  out.reg_curve = out.reg + 1;
  return out;
}

std::int64_t h1_graded_dimension(const CohomologyProfile& p, std::int64_t t) {
  return std::count_if(p.Lprime.begin(), p.Lprime.end(),
                       [&](const LatticePoint& u) { return lattice_degree(u, p.d) == t; });
}

std::int64_t h2_graded_dimension(const CurveSpec& c, std::int64_t t, std::optional<std::int64_t> floor) {
  return h2_graded_dimension(c, build_profile(c), t, floor);
}

std::int64_t h2_graded_dimension(const CurveSpec& c, const WProfile& p, std::int64_t t,
                                 std::optional<std::int64_t> floor) {
  const std::int64_t lo = floor.value_or(-3 * c.d());
  if (t < lo) throw ValidationError("degree " + std::to_string(t) + " below the floor " + std::to_string(lo));
  std::int64_t n = 0;
  for (const auto& e : p.entries) n += std::max<std::int64_t>(0, e.deg - t - 1);
  return n;
}

HilbertData hilbert(const CurveSpec& c, std::int64_t n_max) { return hilbert(c, first_cohomology(c), n_max); }

HilbertData hilbert(const CurveSpec& c, const CohomologyProfile& p, std::int64_t n_max) {
  if (n_max < p.reg + 1)
    throw ValidationError("Hilbert range must reach reg + 1 = " + std::to_string(p.reg + 1));
  std::vector<std::int64_t> A{0};
  A.insert(A.end(), c.a().begin(), c.a().end());
  const std::int64_t d = c.d();
  HilbertData h;
  h.slope = d;
  std::int64_t zero = 0;
  IntervalSet cur = IntervalSet::from_points(std::span<const std::int64_t>(&zero, 1));
  h.values.push_back(1);
  for (std::int64_t n = 1; n <= n_max; ++n) {
    cur = cur.sum_with(A);
    h.values.push_back(cur.cardinality());
  }
  h.intercept = h.values.back() - d * n_max;
  std::int64_t n0 = n_max;
  while (n0 > 0 && h.values[static_cast<std::size_t>(n0 - 1)] == d * (n0 - 1) + h.intercept) --n0;
  h.ri = n0;
  return h;
}

std::string to_string(Property p) { return p == Property::cohen_macaulay ? "cohen_macaulay" : "buchsbaum"; }

std::int64_t frobenius_epsilon(const CurveSpec& c) {
  return std::max(c.a_at(1), c.d() - c.a_at(c.k() - 1));
}

std::optional<std::int64_t> first_run_start(const CurveSpec& c, std::int64_t len) {
  const std::int64_t d = c.d();
  std::int64_t run = 0;
  for (std::int64_t x = 0; x <= d; ++x) {
    run = c.in_A1(x) ? run + 1 : 0;
    if (run >= len) return x - len + 1;
  }
  return std::nullopt;
}

std::int64_t smooth_epsilon(const CurveSpec& c) {
  const std::int64_t d = c.d();
  std::int64_t e = 0;
  while (e + 1 < d && c.is_inner(e + 1) && c.is_inner(d - e - 1)) ++e;
  return e;
}

std::optional<bool> consecutive_run_cm_verdict(const CurveSpec& c, std::int64_t i) {
  const std::int64_t d = c.d();
  const std::int64_t eps = frobenius_epsilon(c);
  if (i < 0 || i > d - eps + 1) return std::nullopt;
  for (std::int64_t x = i; x < i + eps; ++x)
    if (!c.in_A1(x)) return std::nullopt;
  const AperyTable t1 = apery(c.A1());
  const AperyTable t2 = apery(c.A2());
  for (std::int64_t x = 0; x < i; ++x) {
    if (c.in_A1(x)) continue;
    if (membership(t1, x) || !in_double(c, x + d)) return false;
  }
  for (std::int64_t x = i + eps; x <= d; ++x) {
    if (c.in_A1(x)) continue;
    if (membership(t2, d - x) || !in_double(c, x)) return false;
  }
  return true;
}

std::vector<SpecialVerdict> classify_special(const CurveSpec& c, const CohomologyProfile& p) {
  std::vector<SpecialVerdict> out;
  const std::int64_t d = c.d();
  const bool smooth_ends = c.a_at(1) == 1 && c.a_at(c.k() - 1) == d - 1;

  {
    SpecialVerdict v = make_verdict("consecutive_run", Property::cohen_macaulay);
    const std::int64_t eps = frobenius_epsilon(c);
    auto start = first_run_start(c, eps);
    if (start && *start <= d - eps + 1) {
      v.applicable = true;
      v.verdict = *consecutive_run_cm_verdict(c, *start);
      v.agrees = v.verdict == p.cm;
    } else {
      v.reason = "no run of " + std::to_string(eps) + " consecutive elements in A1";
    }
    out.push_back(v);
  }
  {
    SpecialVerdict v = make_verdict("long_block_not_cm", Property::cohen_macaulay);
    const GapProfile g = gap_profile(c.A1());
    if (c.a_at(1) != 1) {
      v.reason = "a1 is not 1";
    } else if (g.r() < 1) {
      v.reason = "A1 has no gap";
    } else {
      const std::int64_t last_gap = g.lambdas.back();
      for (std::size_t j = 1; j <= g.r(); ++j)
        if (g.b(2 * j + 1) - g.b(2 * j - 1) >= last_gap + 2) v.applicable = true;
      if (v.applicable) {
        v.verdict = false;
        v.agrees = !p.cm;
      } else {
        v.reason = "no block long enough";
      }
    }
    out.push_back(v);
  }
  {
    SpecialVerdict v = make_verdict("reg2_buchsbaum", Property::buchsbaum);
    if (p.reg == 2) {
      v.applicable = true;
      v.verdict = true;
      v.agrees = p.buchsbaum;
    } else {
      v.reason = "reg is not 2";
    }
    out.push_back(v);
  }
  {
    SpecialVerdict v = make_verdict("smooth_buchsbaum_iff_reg2", Property::buchsbaum);
    if (smooth_ends && !c.is_full()) {
      v.applicable = true;
      v.verdict = p.reg == 2;
      v.agrees = v.verdict == p.buchsbaum;
    } else {
      v.reason = "needs a1 = 1, a_{k-1} = d-1 and k < d";
    }
    out.push_back(v);
  }
  {
    SpecialVerdict v = make_verdict("smooth_short_gaps", Property::buchsbaum);
    if (!smooth_ends || c.is_full()) {
      v.reason = "needs a1 = 1, a_{k-1} = d-1 and k < d";
    } else if (gap_profile(c.A1()).lambda_max > smooth_epsilon(c)) {
      v.reason = "lambda_max exceeds the symmetric run length";
    } else {
      v.applicable = true;
      v.verdict = true;
      v.agrees = p.buchsbaum;
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace monocurve
