#include "monocurve/verify.hpp"

#include <algorithm>
#include <sstream>

#include "monocurve/oracle.hpp"

namespace monocurve {

namespace {

template <class T>
std::string show(const std::vector<T>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

std::string show(const std::vector<LatticePoint>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << '(' << v[i].u1 << ',' << v[i].u2 << ')';
  os << ']';
  return os.str();
}

std::string show(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "none"; }
std::string show(std::int64_t v) { return std::to_string(v); }

class Checker {
 public:
  explicit Checker(VerifyReport& r) : r_(r) {}

  template <class T>
  void eq(const std::string& what, const T& fast, const T& oracle) {
    r_.checked.push_back(what);
    if (!(fast == oracle)) r_.mismatches.push_back({what, show(fast), show(oracle)});
  }

  template <class F>
  void guarded(const std::string& what, F&& f) {
    try {
      f();
    } catch (const oracle::RangeError&) {
      r_.skipped.push_back(what);
    }
  }

 private:
  VerifyReport& r_;
};

}  // namespace

VerifyReport cross_check(const CurveSpec& c) {
  const WProfile w = build_profile(c);
  return cross_check(c, w, first_cohomology(c, w));
}

VerifyReport cross_check(const CurveSpec& c, const WProfile& w, const CohomologyProfile& h) {
  VerifyReport r;
  Checker ck(r);
  ck.guarded("apery", [&] {
    const AperyTable b1 = oracle::bf_apery(c.A1());
    const AperyTable b2 = oracle::bf_apery(c.A2());
    ck.eq("apery.A1.omega", w.ap1.omega, b1.omega);
    ck.eq("apery.A1.deg", w.ap1.deg, b1.deg);
    ck.eq("apery.A2.omega", w.ap2.omega, b2.omega);
    ck.eq("apery.A2.deg", w.ap2.deg, b2.deg);
    ck.eq("frobenius.A1", frobenius(w.ap1), oracle::bf_frobenius(c.A1()));
    ck.eq("frobenius.A2", frobenius(w.ap2), oracle::bf_frobenius(c.A2()));
    ck.eq("I", h.I, oracle::bf_index_set(c));
    ck.eq("a2", h.a2, oracle::bf_a2(c));
  });
  ck.guarded("degree", [&] {
    const std::int64_t top = std::min<std::int64_t>(oracle::kMaxDegreeValue, 2 * c.d());
    std::vector<std::int64_t> fast, slow;
    for (std::int64_t n = 0; n <= top; ++n) {
      fast.push_back(degree(c.A1(), n).value_or(-1));
      slow.push_back(oracle::bf_degree(c.A1(), n).value_or(-1));
    }
    ck.eq("degree.A1", fast, slow);
  });
  ck.guarded("cohomology", [&] {
    const oracle::BfCohomology b = oracle::bf_cohomology(c);
    ck.eq("Lprime", h.Lprime, b.points);
    ck.eq("ellH1", h.ell_h1, b.ell);
    ck.eq("a1", h.a1, b.a1);
    ck.eq("reg", h.reg, b.reg);
  });
  return r;
}

}  // namespace monocurve
