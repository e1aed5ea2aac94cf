#include "monocurve/bounds.hpp"

#include <algorithm>
#include <set>

namespace monocurve {

namespace {

bool has_adjacent_pair(const CurveSpec& c) {
  for (std::int64_t i = 0; i < c.d(); ++i)
    if (c.in_A1(i) && c.in_A1(i + 1)) return true;
  return false;
}

std::int64_t selmer_value(const GeneratorSet& a, std::int64_t kk) {
  return 2 * a.largest() * (a.smallest() / kk) - a.smallest();
}

}  // namespace

std::string to_string(BoundTarget t) {
  switch (t) {
    case BoundTarget::F1: return "F1";
    case BoundTarget::F2: return "F2";
    case BoundTarget::frob_sum: return "frobSum";
    case BoundTarget::delta_omega1: return "deltaOmega1";
    case BoundTarget::delta_omega2: return "deltaOmega2";
    case BoundTarget::a1: return "a1";
    case BoundTarget::a2: return "a2";
    case BoundTarget::reg: return "reg";
    case BoundTarget::sigma: return "sigma";
  }
  return "?";
}

std::string to_string(BoundKind k) {
  switch (k) {
    case BoundKind::upper: return "upper";
    case BoundKind::lower: return "lower";
    case BoundKind::exact: return "exact";
    case BoundKind::one_of: return "oneOf";
  }
  return "?";
}

std::optional<BoundTarget> parse_bound_target(const std::string& s) {
  for (auto t : {BoundTarget::F1, BoundTarget::F2, BoundTarget::frob_sum, BoundTarget::delta_omega1,
                 BoundTarget::delta_omega2, BoundTarget::a1, BoundTarget::a2, BoundTarget::reg, BoundTarget::sigma})
    if (to_string(t) == s) return t;
  return std::nullopt;
}

std::optional<BoundKind> parse_bound_kind(const std::string& s) {
  for (auto k : {BoundKind::upper, BoundKind::lower, BoundKind::exact, BoundKind::one_of})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

std::int64_t schur_bound(const GeneratorSet& a) { return (a.smallest() - 1) * (a.largest() - 1) - 1; }

std::size_t residue_count(const GeneratorSet& a, std::int64_t m) {
  std::set<std::int64_t> r;
  for (auto g : a.gens()) r.insert(g % m);
  return r.size();
}

Bound selmer_bound(const GeneratorSet& a) {
  const auto k = static_cast<std::int64_t>(a.size());
  if (static_cast<std::int64_t>(residue_count(a, a.smallest())) != k)
    return Bound::none("residues mod " + std::to_string(a.smallest()) + " are not pairwise distinct");
  return Bound::of(selmer_value(a, k));
}

Bound selmer_residue_bound(const GeneratorSet& a) {
  return Bound::of(selmer_value(a, static_cast<std::int64_t>(residue_count(a, a.smallest()))));
}

Bound delta_omega_bound(const GeneratorSet& a) {
  const auto k = static_cast<std::int64_t>(a.size());
  if (static_cast<std::int64_t>(residue_count(a, a.smallest())) != k)
    return Bound::none("residues mod " + std::to_string(a.smallest()) + " are not pairwise distinct");
  const std::int64_t lmax = gap_profile(a).lambda_max;
  const Rational q(2 * a.largest() * (a.smallest() / k) + lmax, a.smallest());
  Bound b = Bound::of(1 + q.floor());
  b.exact = Rational(q.num + q.den, q.den);
  return b;
}

FrobSumBounds frobsum_bound(const CurveSpec& c) {
  const std::int64_t d = c.d();
  const std::int64_t eps = frobenius_epsilon(c);
  FrobSumBounds out;
  out.generic = Bound::of(c.a_at(1) + (d - c.a_at(c.k() - 1)) - 3);
  out.adjacent = has_adjacent_pair(c) ? Bound::of(eps - 2) : Bound::none("no two consecutive elements in A1");
  out.run = first_run_start(c, eps) ? Bound::of(0)
                                    : Bound::none("no run of " + std::to_string(eps) + " consecutive elements in A1");
  out.sharpest = out.generic.values[0];
  for (const Bound* b : {&out.adjacent, &out.run})
    if (b->applicable) out.sharpest = std::min(out.sharpest, b->values[0]);
  return out;
}

std::int64_t a2_bound(const CurveSpec& c) {
  const std::int64_t f1 = c.is_full() ? -1 : frobenius(c.A1());
  const std::int64_t f2 = c.is_full() ? -1 : frobenius(c.A2());
  return floor_div(f1 + f2, c.d());
}

A1Bounds a1_bounds(const CurveSpec& c, const WProfile& p) {
  A1Bounds out;
  if (p.I.empty()) {
    out.lower = out.upper_ii = out.upper_iii = Bound::none("Cohen-Macaulay: I is empty");
    return out;
  }
  const std::int64_t d = c.d();
  std::int64_t lo = 0, hi = 0, m1 = 0, m2 = 0;
  for (auto i : p.I) {
    const WEntry& e = p.entries[static_cast<std::size_t>(i)];
    lo = std::max(lo, std::max(e.d1, e.d2));
    hi = std::max(hi, e.d1 + e.d2 - e.deg);
    m1 = std::max(m1, e.d1);
    m2 = std::max(m2, e.d2);
  }
  out.lower = Bound::of(lo - 1);
  out.upper_ii = Bound::of(hi - 2);
  const Rational mix((d - c.a_at(1)) * m1 + c.a_at(c.k() - 1) * m2 - 2 * d, d);
  out.upper_iii = Bound::of(mix.floor());
  out.upper_iii.exact = mix;
  return out;
}

std::int64_t glp_bound(const CurveSpec& c) { return c.d() - static_cast<std::int64_t>(c.k()) + 1; }

std::int64_t lvovsky_bound(const CurveSpec& c) {
  const GapProfile g = gap_profile(c.A1());
  return g.lambda_max + g.lambda_sl + 1;
}

SmoothBounds smooth_bound(const CurveSpec& c) {
  SmoothBounds out;
  const std::int64_t d = c.d();
  const GapProfile g = gap_profile(c.A1());
  if (c.a_at(1) == 1 && c.a_at(c.k() - 1) == d - 1)
    out.upper = Bound::of(floor_div(g.lambda_max - 1, smooth_epsilon(c)) + 2);
  else
    out.upper = Bound::none("needs a1 = 1 and a_{k-1} = d-1");

  const std::int64_t p = g.blocks[0].last;
  if (p < 1)
    out.lower = Bound::none("a1 is not 1");
  else if (c.is_full())
    out.lower = Bound::none("A1 has no gap");
  else
    out.lower = Bound::of(ceil_div(g.lambdas[static_cast<std::size_t>(p)], p) + 1);
  return out;
}

BuchsbaumRegBounds buchsbaum_reg_bounds(const CurveSpec& c, bool buchsbaum) {
  BuchsbaumRegBounds out;
  if (!buchsbaum) {
    out.generic = out.adjacent = out.run = Bound::none("not Buchsbaum");
    return out;
  }
  const std::int64_t eps = frobenius_epsilon(c);
  out.generic = Bound::of(c.a_at(1) + c.d() - c.a_at(c.k() - 1));
  out.adjacent = has_adjacent_pair(c) ? Bound::of(eps + 1) : Bound::none("no two consecutive elements in A1");
  out.run = first_run_start(c, eps) ? Bound::of(3)
                                    : Bound::none("no run of " + std::to_string(eps) + " consecutive elements in A1");
  return out;
}

Bound r1_values(const CurveSpec& c) {
  const GapProfile g = gap_profile(c.A1());
  if (g.r() != 1) return Bound::none("A1 is not of the form [0,p] u [q,d]");
  const std::int64_t p = g.b(1), q = g.b(2), d = c.d();
  if (p < 1) return Bound::none("A1 is not of the form [0,p] u [q,d] with p >= 1");
  if (q < d) {
    if (p > d - q) return Bound::none("p > d - q");
    return Bound::of(ceil_div(q - 1, p));
  }
  const std::int64_t a = d / p - ceil_div(p * (d / p) + 2, d);
  return Bound{true, {}, {a + 1, a + 2}, std::nullopt};
}

Bound bd2_bound(const CurveSpec& c) {
  const GapProfile g = gap_profile(c.A1());
  const std::int64_t d = c.d();
  const std::size_t r = g.r();
  if (r < 2) return Bound::none("fewer than two gaps");
  if (g.b(1) != 0) return Bound::none("b1 is not 0");
  if (g.b(2 * r) >= d) return Bound::none("b_2r is d");
  if (g.b(5) - g.b(4) + 1 < g.b(2)) return Bound::none("b5 - b4 + 1 < b2");
  const std::int64_t tail = d - g.b(2 * r), b2 = g.b(2);
  const std::int64_t m = std::max(g.lambda_sl / tail + g.lambda_max / b2, g.lambda_max / tail + g.lambda_sl / b2);
  return Bound::of(m + 2);
}

TheoremA9Bounds theorem_a9_bound(const CurveSpec& c) {
  TheoremA9Bounds out;
  const std::int64_t d = c.d(), a1 = c.a_at(1), ak1 = c.a_at(c.k() - 1);
  const auto k = static_cast<std::int64_t>(c.k());
  if (static_cast<std::int64_t>(residue_count(c.A1(), a1)) != k) {
    out.a1 = out.reg = Bound::none("a_1..a_k not distinct mod a_1");
    return out;
  }
  const std::int64_t m2 = d - ak1;
  std::set<std::int64_t> r2;
  for (std::size_t i = 0; i < c.k(); ++i) r2.insert(c.a_at(i) % m2);
  if (static_cast<std::int64_t>(r2.size()) != k) {
    out.a1 = out.reg = Bound::none("a_0..a_{k-1} not distinct mod d - a_{k-1}");
    return out;
  }
  const std::int64_t lmax = gap_profile(c.A1()).lambda_max;
  const Rational R((2 * d + lmax) * (d + ak1 - a1), k * d);
  out.a1 = Bound::of(R.ceil() - 1);
  out.a1.exact = R;
  const Rational R1(R.num + R.den, R.den);
  out.reg = Bound::of(R1.floor());
  out.reg.exact = R1;
  return out;
}

std::int64_t sigma_lvovsky_bound(const CurveSpec& c) { return lvovsky_bound(c); }
std::int64_t sigma_gw_bound(const CurveSpec& c) { return glp_bound(c); }

std::optional<std::int64_t> BoundTargets::get(BoundTarget t) const {
  switch (t) {
    case BoundTarget::F1: return F1;
    case BoundTarget::F2: return F2;
    case BoundTarget::frob_sum: return frob_sum;
    case BoundTarget::delta_omega1: return delta_omega1;
    case BoundTarget::delta_omega2: return delta_omega2;
    case BoundTarget::a1: return a1;
    case BoundTarget::a2: return a2;
    case BoundTarget::reg: return reg;
    case BoundTarget::sigma: return sigma;
  }
  return std::nullopt;
}

bool satisfies(const BoundEntry& e, std::int64_t value) {
  if (e.values.empty()) return false;
  switch (e.kind) {
    case BoundKind::upper: return value <= e.values[0];
    case BoundKind::lower: return value >= e.values[0];
    case BoundKind::exact: return value == e.values[0];
    case BoundKind::one_of: return std::find(e.values.begin(), e.values.end(), value) != e.values.end();
  }
  return false;
}

const BoundEntry* BoundReport::find(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

bool BoundReport::all_hold() const {
  return std::none_of(entries.begin(), entries.end(), [](const BoundEntry& e) { return e.holds == false; });
}

BoundReport bound_report(const CurveSpec& c) {
  const WProfile w = build_profile(c);
  return bound_report(c, w, first_cohomology(c, w));
}

BoundReport bound_report(const CurveSpec& c, const WProfile& w, const CohomologyProfile& h,
                         std::optional<std::int64_t> sigma) {
  BoundReport rep;
  BoundTargets& t = rep.targets;
  t.F1 = frobenius(w.ap1);
  t.F2 = frobenius(w.ap2);
  t.frob_sum = floor_div(t.F1 + t.F2, c.d());
  t.delta_omega1 = w.ap1.max_degree();
  t.delta_omega2 = w.ap2.max_degree();
  t.a1 = h.a1;
  t.a2 = h.a2;
  t.reg = h.reg;
  t.sigma = sigma;

  auto add = [&](std::string name, BoundTarget target, BoundKind kind, const Bound& b) {
    BoundEntry e;
    e.name = std::move(name);
    e.target = target;
    e.kind = kind;
    e.applicable = b.applicable;
    e.reason = b.reason;
    e.values = b.values;
    e.exact = b.exact;
    if (b.applicable) {
      if (auto v = t.get(target)) e.holds = satisfies(e, *v);
    }
    rep.entries.push_back(std::move(e));
  };
  using T = BoundTarget;
  using K = BoundKind;

  add("schur_A1", T::F1, K::upper, Bound::of(schur_bound(c.A1())));
  add("schur_A2", T::F2, K::upper, Bound::of(schur_bound(c.A2())));
  add("selmer_A1", T::F1, K::upper, selmer_bound(c.A1()));
  add("selmer_A2", T::F2, K::upper, selmer_bound(c.A2()));
  add("selmer_residues_A1", T::F1, K::upper, selmer_residue_bound(c.A1()));
  add("selmer_residues_A2", T::F2, K::upper, selmer_residue_bound(c.A2()));
  add("delta_omega_A1", T::delta_omega1, K::upper, delta_omega_bound(c.A1()));
  add("delta_omega_A2", T::delta_omega2, K::upper, delta_omega_bound(c.A2()));

  const FrobSumBounds fs = frobsum_bound(c);
  add("frobsum_generic", T::frob_sum, K::upper, fs.generic);
  add("frobsum_adjacent", T::frob_sum, K::upper, fs.adjacent);
  add("frobsum_run", T::frob_sum, K::upper, fs.run);
  add("a2_frobenius", T::a2, K::upper, Bound::of(t.frob_sum));

  const A1Bounds ab = a1_bounds(c, w);
  add("a1_lower", T::a1, K::lower, ab.lower);
  add("a1_upper_ii", T::a1, K::upper, ab.upper_ii);
  add("a1_upper_iii", T::a1, K::upper, ab.upper_iii);

  add("glp", T::reg, K::upper, Bound::of(glp_bound(c)));
  add("lvovsky", T::reg, K::upper, Bound::of(lvovsky_bound(c)));
  const SmoothBounds sb = smooth_bound(c);
  add("smooth_upper", T::reg, K::upper, sb.upper);
  add("smooth_lower", T::reg, K::lower, sb.lower);
  const BuchsbaumRegBounds bb = buchsbaum_reg_bounds(c, h.buchsbaum);
  add("buchsbaum_generic", T::reg, K::upper, bb.generic);
  add("buchsbaum_adjacent", T::reg, K::upper, bb.adjacent);
  add("buchsbaum_run", T::reg, K::upper, bb.run);
  const Bound r1 = r1_values(c);
  add("r1", T::reg, r1.values.size() == 2 ? K::one_of : K::exact, r1);
  add("bd2", T::reg, K::upper, bd2_bound(c));
  const TheoremA9Bounds a9 = theorem_a9_bound(c);
  add("a9_a1", T::a1, K::upper, a9.a1);
  add("a9_reg", T::reg, K::upper, a9.reg);

  if (sigma) {
    add("sigma_lvovsky", T::sigma, K::upper, Bound::of(sigma_lvovsky_bound(c)));
    add("sigma_gw", T::sigma, K::upper, Bound::of(sigma_gw_bound(c)));
  }
  return rep;
}

}  // namespace monocurve
