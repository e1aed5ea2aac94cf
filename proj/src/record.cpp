#include "monocurve/record.hpp"

#include <sstream>

#include "monocurve/oracle.hpp"

namespace monocurve {

using nlohmann::json;

namespace {

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> opt_get(const json& j, const char* key) {
  const json& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<T>();
}

json points(const std::vector<LatticePoint>& v) {
  json out = json::array();
  for (const auto& u : v) out.push_back({u.u1, u.u2});
  return out;
}

std::vector<LatticePoint> points_from(const json& j) {
  std::vector<LatticePoint> out;
  for (const auto& p : j) out.push_back({p.at(0).get<std::int64_t>(), p.at(1).get<std::int64_t>()});
  return out;
}

json rational(const std::optional<Rational>& r) {
  if (!r) return nullptr;
  return {{"num", r->num}, {"den", r->den}};
}

std::optional<Rational> rational_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return Rational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
}

json bound_json(const BoundEntry& e) {
  return {{"name", e.name},
          {"target", to_string(e.target)},
          {"kind", to_string(e.kind)},
          {"applicable", e.applicable},
          {"reason", e.reason},
          {"values", e.values},
          {"exact", rational(e.exact)},
          {"holds", opt(e.holds)}};
}

BoundEntry bound_from(const json& j) {
  BoundEntry e;
  e.name = j.at("name").get<std::string>();
  auto t = parse_bound_target(j.at("target").get<std::string>());
  auto k = parse_bound_kind(j.at("kind").get<std::string>());
  if (!t || !k) throw json::other_error::create(501, "unknown bound target or kind", &j);
  e.target = *t;
  e.kind = *k;
  e.applicable = j.at("applicable").get<bool>();
  e.reason = j.at("reason").get<std::string>();
  e.values = j.at("values").get<std::vector<std::int64_t>>();
  e.exact = rational_from(j.at("exact"));
  e.holds = opt_get<bool>(j, "holds");
  return e;
}

json witness_json(const std::optional<BuchsbaumWitness>& w) {
  if (!w) return nullptr;
  json out = {{"kind", to_string(w->kind)}, {"i", w->i}};
  if (w->kind == BuchsbaumWitness::Kind::pair) {
    out["j"] = w->j;
    out["h"] = w->h;
  }
  return out;
}

std::optional<BuchsbaumWitness> witness_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  BuchsbaumWitness w;
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "delta1")
    w.kind = BuchsbaumWitness::Kind::delta1;
  else if (kind == "delta2")
    w.kind = BuchsbaumWitness::Kind::delta2;
  else if (kind == "pair")
    w.kind = BuchsbaumWitness::Kind::pair;
  else
    throw json::other_error::create(501, "unknown witness kind " + kind, &j);
  w.i = j.at("i").get<std::int64_t>();
  if (w.kind == BuchsbaumWitness::Kind::pair) {
    w.j = j.at("j").get<std::int64_t>();
    w.h = j.at("h").get<std::int64_t>();
  }
  return w;
}

json sumset_json(const SumsetReport& s) {
  return {{"A", s.A},
          {"C1", s.decomposition.C1},
          {"c1", s.decomposition.c1},
          {"C2", s.decomposition.C2},
          {"c2", s.decomposition.c2},
          {"sigma", s.sigma},
          {"sigmaMethod", s.sigma_method},
          {"hMax", s.h_max},
          {"sigmaFormula", s.sigma_formula},
          {"sigmaBrute", opt(s.sigma_brute)},
          {"capExceeded", s.cap_exceeded}};
}

SumsetReport sumset_from(const json& j) {
  SumsetReport s;
  s.A = j.at("A").get<std::vector<std::int64_t>>();
  s.decomposition.C1 = j.at("C1").get<std::vector<std::int64_t>>();
  s.decomposition.c1 = j.at("c1").get<std::int64_t>();
  s.decomposition.C2 = j.at("C2").get<std::vector<std::int64_t>>();
  s.decomposition.c2 = j.at("c2").get<std::int64_t>();
  s.sigma = j.at("sigma").get<std::int64_t>();
  s.sigma_method = j.at("sigmaMethod").get<std::string>();
  s.h_max = j.at("hMax").get<std::int64_t>();
  s.sigma_formula = j.at("sigmaFormula").get<std::int64_t>();
  s.sigma_brute = opt_get<std::int64_t>(j, "sigmaBrute");
  s.cap_exceeded = j.at("capExceeded").get<bool>();
  return s;
}

json verify_json(const VerifyReport& v) {
  json mm = json::array();
  for (const auto& m : v.mismatches) mm.push_back({{"what", m.what}, {"fast", m.fast}, {"oracle", m.oracle}});
  return {{"ok", v.ok()}, {"checked", v.checked}, {"skipped", v.skipped}, {"mismatches", mm}};
}

VerifyReport verify_from(const json& j) {
  VerifyReport v;
  v.checked = j.at("checked").get<std::vector<std::string>>();
  v.skipped = j.at("skipped").get<std::vector<std::string>>();
  for (const auto& m : j.at("mismatches"))
    v.mismatches.push_back({m.at("what").get<std::string>(), m.at("fast").get<std::string>(),
                            m.at("oracle").get<std::string>()});
  return v;
}

template <class T>
std::string join(const std::vector<T>& v, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

}  // namespace

CurveRecord make_record(const CurveSpec& c, const RecordOptions& opt) {
  CurveRecord r;
  r.gens.assign(c.a().begin(), c.a().end());
  r.d = c.d();
  r.k = static_cast<std::int64_t>(c.k());
  r.gaps = gap_profile(c.A1());
  const WProfile w = build_profile(c);
  r.profile = first_cohomology(c, w);
  std::optional<std::int64_t> sigma;
  if (opt.sigma) {
    r.sumset = sumset_report(c, w, r.profile, opt.sigma_method, opt.cell_cap);
    sigma = r.sumset->sigma;
  }
  r.bounds = bound_report(c, w, r.profile, sigma);
  if (opt.verify) r.verified = cross_check(c, w, r.profile);
  return r;
}

json to_json(const CurveRecord& r) {
  const CohomologyProfile& p = r.profile;
  json blocks = json::array();
  for (const auto& b : r.gaps.blocks) blocks.push_back({b.first, b.last});
  json bounds = json::array();
  for (const auto& e : r.bounds.entries) bounds.push_back(bound_json(e));
  const BoundTargets& t = r.bounds.targets;
  return {{"gens", r.gens},
          {"d", r.d},
          {"k", r.k},
          {"gaps", r.gaps.lambdas},
          {"lambdaMax", r.gaps.lambda_max},
          {"lambdaSl", r.gaps.lambda_sl},
          {"blocks", blocks},
          {"I", p.I},
          {"cm", p.cm},
          {"buchsbaum", p.buchsbaum},
          {"buchsbaumWitness", witness_json(p.witness)},
          {"a1", opt(p.a1)},
          {"a2", p.a2},
          {"reg", p.reg},
          {"regCurve", p.reg_curve},
          {"ellH1", p.ell_h1},
          {"L", points(p.L)},
          {"Lprime", points(p.Lprime)},
          {"usedDegreeTable", p.used_degree_table},
          {"F1", t.F1},
          {"F2", t.F2},
          {"deltaOmega1", t.delta_omega1},
          {"deltaOmega2", t.delta_omega2},
          {"bounds", bounds},
          {"boundsHold", r.bounds.all_hold()},
          {"sigma", r.sumset ? json(r.sumset->sigma) : json(nullptr)},
          {"sumset", r.sumset ? sumset_json(*r.sumset) : json(nullptr)},
          {"verified", r.verified ? verify_json(*r.verified) : json(nullptr)}};
}

CurveRecord record_from_json(const json& j) {
  CurveRecord r;
  r.gens = j.at("gens").get<std::vector<std::int64_t>>();
  r.d = j.at("d").get<std::int64_t>();
  r.k = j.at("k").get<std::int64_t>();
  r.gaps.lambdas = j.at("gaps").get<std::vector<std::int64_t>>();
  r.gaps.lambda_max = j.at("lambdaMax").get<std::int64_t>();
  r.gaps.lambda_sl = j.at("lambdaSl").get<std::int64_t>();
  for (const auto& b : j.at("blocks")) r.gaps.blocks.push_back({b.at(0).get<std::int64_t>(), b.at(1).get<std::int64_t>()});

  CohomologyProfile& p = r.profile;
  p.d = r.d;
  p.I = j.at("I").get<std::vector<std::int64_t>>();
  p.cm = j.at("cm").get<bool>();
  p.buchsbaum = j.at("buchsbaum").get<bool>();
  p.witness = witness_from(j.at("buchsbaumWitness"));
  p.a1 = opt_get<std::int64_t>(j, "a1");
  p.a2 = j.at("a2").get<std::int64_t>();
  p.reg = j.at("reg").get<std::int64_t>();
  p.reg_curve = j.at("regCurve").get<std::int64_t>();
  p.ell_h1 = j.at("ellH1").get<std::int64_t>();
  p.L = points_from(j.at("L"));
  p.Lprime = points_from(j.at("Lprime"));
  p.used_degree_table = j.at("usedDegreeTable").get<bool>();

  BoundTargets& t = r.bounds.targets;
  t.F1 = j.at("F1").get<std::int64_t>();
  t.F2 = j.at("F2").get<std::int64_t>();
  t.frob_sum = floor_div(t.F1 + t.F2, r.d);
  t.delta_omega1 = j.at("deltaOmega1").get<std::int64_t>();
  t.delta_omega2 = j.at("deltaOmega2").get<std::int64_t>();
  t.a1 = p.a1;
  t.a2 = p.a2;
  t.reg = p.reg;
  t.sigma = opt_get<std::int64_t>(j, "sigma");
  for (const auto& e : j.at("bounds")) r.bounds.entries.push_back(bound_from(e));

  if (!j.at("sumset").is_null()) r.sumset = sumset_from(j.at("sumset"));
  if (!j.at("verified").is_null()) r.verified = verify_from(j.at("verified"));
  return r;
}

std::string csv_header() {
  return "gens,d,k,gaps,lambdaMax,lambdaSl,I,cm,buchsbaum,a1,a2,reg,regCurve,ellH1,boundsHold,sigma,verified";
}

std::string to_csv_row(const CurveRecord& r) {
  const CohomologyProfile& p = r.profile;
  std::ostringstream os;
  auto b = [](bool v) { return v ? "true" : "false"; };
  os << join(r.gens, ";") << ',' << r.d << ',' << r.k << ',' << join(r.gaps.lambdas, ";") << ','
     << r.gaps.lambda_max << ',' << r.gaps.lambda_sl << ',' << join(p.I, ";") << ',' << b(p.cm) << ','
     << b(p.buchsbaum) << ',' << (p.a1 ? std::to_string(*p.a1) : "") << ',' << p.a2 << ',' << p.reg << ','
     << p.reg_curve << ',' << p.ell_h1 << ',' << b(r.bounds.all_hold()) << ','
     << (r.sumset ? std::to_string(r.sumset->sigma) : "") << ',' << (r.verified ? b(r.verified->ok()) : "");
  return os.str();
}

std::string to_pretty(const CurveRecord& r) {
  const CohomologyProfile& p = r.profile;
  std::ostringstream os;
  os << "curve      C(" << join(r.gens, ",") << ")  d=" << r.d << " k=" << r.k << '\n';
  os << "gaps       " << join(r.gaps.lambdas, " ") << "  (max " << r.gaps.lambda_max << ", second "
     << r.gaps.lambda_sl << ")\n";
  os << "I          {" << join(p.I, ",") << "}\n";
  os << "CM         " << (p.cm ? "yes" : "no") << '\n';
  os << "Buchsbaum  " << (p.buchsbaum ? "yes" : "no");
  if (p.witness) {
    os << "  (witness " << to_string(p.witness->kind) << " at i=" << p.witness->i;
    if (p.witness->kind == BuchsbaumWitness::Kind::pair) os << ", j=" << p.witness->j << ", h=" << p.witness->h;
    os << ')';
  }
  os << '\n';
  os << "a1         " << (p.a1 ? std::to_string(*p.a1) : "-") << '\n';
  os << "a2         " << p.a2 << '\n';
  os << "reg        " << p.reg << "  (curve " << p.reg_curve << ")\n";
  os << "ell(H1)    " << p.ell_h1 << '\n';
  if (r.sumset) {
    os << "sigma      " << r.sumset->sigma << " (" << r.sumset->sigma_method << ')';
    if (r.sumset->sigma_brute) os << "  brute force " << *r.sumset->sigma_brute;
    if (r.sumset->cap_exceeded) os << "  brute force cap exceeded";
    os << '\n';
  }
  os << "bounds\n";
  for (const auto& e : r.bounds.entries) {
    os << "  " << e.name << " [" << to_string(e.target) << ' ' << to_string(e.kind) << "] ";
    if (!e.applicable) {
      os << "n/a: " << e.reason << '\n';
      continue;
    }
    os << join(e.values, ",");
    if (e.holds) os << (*e.holds ? "  ok" : "  VIOLATED");
    os << '\n';
  }
  if (r.verified) {
    os << "verified   " << (r.verified->ok() ? "ok" : "MISMATCH") << " (" << r.verified->checked.size() << " checks, "
       << r.verified->skipped.size() << " skipped)\n";
    for (const auto& m : r.verified->mismatches)
      os << "  " << m.what << ": fast " << m.fast << ", oracle " << m.oracle << '\n';
  }
  return os.str();
}

}  // namespace monocurve
