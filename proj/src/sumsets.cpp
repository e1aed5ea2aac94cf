#include "monocurve/sumsets.hpp"

#include <cstdlib>
#include <string>

#include "monocurve/arith.hpp"

namespace monocurve {

std::vector<std::int64_t> curve_set(const CurveSpec& c) {
  std::vector<std::int64_t> A{0};
  A.insert(A.end(), c.a().begin(), c.a().end());
  return A;
}

IntervalSet h_fold_sumset(std::span<const std::int64_t> A, std::int64_t h) {
  if (h < 1) throw ValidationError("sumset order must be at least 1");
  IntervalSet s = IntervalSet::from_points(A);
  for (std::int64_t i = 1; i < h; ++i) s = s.sum_with(A);
  return s;
}

StructureDecomposition structure_decomposition(const CurveSpec& c) {
  const WProfile w = build_profile(c);
  StructureDecomposition s;
  const std::int64_t f1 = frobenius(w.ap1), f2 = frobenius(w.ap2);
  s.c1 = f1 + 1;
  s.c2 = f2 + 1;
  for (std::int64_t x = 0; x <= f1; ++x)
    if (membership(w.ap1, x)) s.C1.push_back(x);
  for (std::int64_t x = 0; x <= f2; ++x)
    if (membership(w.ap2, x)) s.C2.push_back(x);
  return s;
}

bool decomposition_holds(const IntervalSet& hA, const StructureDecomposition& s, std::int64_t h, std::int64_t d) {
  const std::int64_t top = h * d;
  if (s.c1 > top - s.c2) return false;
  const IntervalSet low = IntervalSet::from_points(s.C1);
  const IntervalSet mid = IntervalSet::from_intervals({{s.c1, top - s.c2}});
  const IntervalSet high = IntervalSet::from_points(s.C2).reflected(top);
  if (low.intersects(mid) || low.intersects(high) || mid.intersects(high)) return false;
  return low.united(mid).united(high) == hA;
}

std::int64_t sumset_hmax(const CurveSpec& c) {
  const auto k = static_cast<std::int64_t>(c.k());
  const std::int64_t d = c.d();
  return std::max<std::int64_t>(1, (k - 1) * (d - 1) * d);
}

std::int64_t sigma_formula(const CurveSpec& c) {
  const WProfile w = build_profile(c);
  return sigma_formula(c, w, first_cohomology(c, w));
}

std::int64_t sigma_formula(const CurveSpec& c, const WProfile& w, const CohomologyProfile& h) {
  const HilbertData hd = hilbert(c, h, h.reg + 1);
  const std::int64_t f = ceil_div(frobenius(w.ap1) + frobenius(w.ap2) + 2, c.d());
  return std::max<std::int64_t>({1, hd.ri, f});
}

std::int64_t default_cell_cap() {
  const char* env = std::getenv("MONOCURVE_BRUTE_CAP");
  if (env == nullptr || *env == '\0') return 1'000'000;
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(env, &used);
  } catch (const std::exception&) {
    throw ValidationError(std::string("MONOCURVE_BRUTE_CAP is not an integer: ") + env);
  }
  if (used != std::string(env).size() || v < 1)
    throw ValidationError(std::string("MONOCURVE_BRUTE_CAP must be a positive integer: ") + env);
  return v;
}

SigmaBrute sigma_bruteforce(const CurveSpec& c, std::optional<std::int64_t> cell_cap) {
  SigmaBrute out;
  const std::int64_t d = c.d();
  out.h_max = sumset_hmax(c);
  out.cells = out.h_max * d;
  const std::int64_t cap = cell_cap ? *cell_cap : default_cell_cap();
  if (cap < 1) throw ValidationError("cell cap must be positive");
  if (out.cells > cap) {
    out.cap_exceeded = true;
    return out;
  }
  const std::vector<std::int64_t> A = curve_set(c);
  const StructureDecomposition s = structure_decomposition(c);
  IntervalSet hA = IntervalSet::from_points(A);
  std::int64_t last_fail = 0;
  for (std::int64_t h = 1; h <= out.h_max; ++h) {
    if (h > 1) hA = hA.sum_with(A);
    if (!decomposition_holds(hA, s, h, d)) last_fail = h;
  }
  out.sigma = last_fail + 1;
  return out;
}

std::vector<BoundEntry> sigma_bounds(const CurveSpec& c, std::int64_t sigma) {
  std::vector<BoundEntry> out;
  for (auto [name, v] : {std::pair<const char*, std::int64_t>{"sigma_lvovsky", sigma_lvovsky_bound(c)},
                         std::pair<const char*, std::int64_t>{"sigma_gw", sigma_gw_bound(c)}}) {
    BoundEntry e;
    e.name = name;
    e.target = BoundTarget::sigma;
    e.kind = BoundKind::upper;
    e.applicable = true;
    e.values = {v};
    e.holds = satisfies(e, sigma);
    out.push_back(e);
  }
  return out;
}

SumsetReport sumset_report(const CurveSpec& c, const WProfile& w, const CohomologyProfile& h, SigmaMethod method,
                           std::optional<std::int64_t> cell_cap) {
  SumsetReport r;
  r.A = curve_set(c);
  r.decomposition = structure_decomposition(c);
  r.h_max = sumset_hmax(c);
  r.sigma_formula = sigma_formula(c, w, h);
  r.sigma = r.sigma_formula;
  r.sigma_method = "formula";
  if (method != SigmaMethod::formula) {
    const SigmaBrute b = sigma_bruteforce(c, cell_cap);
    r.cap_exceeded = b.cap_exceeded;
    if (!b.cap_exceeded) {
      r.sigma_brute = b.sigma;
      if (method == SigmaMethod::brute) {
        r.sigma = b.sigma;
        r.sigma_method = "bruteforce";
      }
    }
  }
  return r;
}

}  // namespace monocurve
