#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "monocurve/curve.hpp"
#include "monocurve/oracle.hpp"
#include "monocurve/record.hpp"
#include "monocurve/semigroup.hpp"
#include "monocurve/sumsets.hpp"
#include "monocurve/tables.hpp"

namespace monocurve::cli {

using nlohmann::json;

namespace {

enum class Format { pretty, json, csv };

const std::map<std::string, Format> kFormats{{"pretty", Format::pretty}, {"json", Format::json}, {"csv", Format::csv}};
const std::map<std::string, SigmaMethod> kMethods{
    {"formula", SigmaMethod::formula}, {"brute", SigmaMethod::brute}, {"both", SigmaMethod::both}};

struct Options {
  std::vector<std::string> gens;
  Format format = Format::pretty;
  std::int64_t modulus = 0;
  std::int64_t n = 0;
  bool verify = false;
  bool sigma = false;
  SigmaMethod method = SigmaMethod::formula;
  std::optional<std::int64_t> cap;
  int table = 0;
  std::string input;
  unsigned jobs = 1;
};

std::string degree_text(Degree d) { return d ? std::to_string(*d) : "not in semigroup"; }

int cmd_apery(const Options& o, std::ostream& out) {
  const auto g = parse_generators(o.gens);
  const GeneratorSet a = o.modulus ? GeneratorSet(g, o.modulus) : GeneratorSet(g);
  const AperyTable t = apery(a);
  switch (o.format) {
    case Format::json:
      out << json{{"gens", g}, {"modulus", t.modulus}, {"omega", t.omega}, {"deg", t.deg}, {"steps", t.steps}}.dump()
          << '\n';
      break;
    case Format::csv:
      out << "i,omega,deg\n";
      for (std::size_t i = 0; i < t.omega.size(); ++i) out << i << ',' << t.omega[i] << ',' << t.deg[i] << '\n';
      break;
    case Format::pretty: {
      TextTable tt;
      tt.header = {"i", "omega", "deg"};
      for (std::size_t i = 0; i < t.omega.size(); ++i)
        tt.rows.push_back({std::to_string(i), std::to_string(t.omega[i]), std::to_string(t.deg[i])});
      out << "modulus " << t.modulus << '\n' << render_pretty(tt);
      break;
    }
  }
  return ok;
}

int cmd_frobenius(const Options& o, std::ostream& out) {
  const auto g = parse_generators(o.gens);
  const std::int64_t f = frobenius(GeneratorSet(g));
  if (o.format == Format::json)
    out << json{{"gens", g}, {"frobenius", f}}.dump() << '\n';
  else
    out << f << '\n';
  return ok;
}

int cmd_degree(const Options& o, std::ostream& out) {
  const auto g = parse_generators(o.gens);
  if (o.n < 0) throw ValidationError("--n must be non-negative");
  const Degree d = degree(GeneratorSet(g), o.n);
  if (o.format == Format::json)
    out << json{{"gens", g}, {"n", o.n}, {"degree", d ? json(*d) : json(nullptr)}}.dump() << '\n';
  else
    out << degree_text(d) << '\n';
  return ok;
}

void emit_record(const CurveRecord& r, Format f, std::ostream& out, bool header) {
  switch (f) {
    case Format::json: out << to_json(r).dump() << '\n'; break;
    case Format::csv:
      if (header) out << csv_header() << '\n';
      out << to_csv_row(r) << '\n';
      break;
    case Format::pretty: out << to_pretty(r); break;
  }
}

RecordOptions record_options(const Options& o) {
  RecordOptions ro;
  ro.sigma = o.sigma;
  ro.sigma_method = o.method;
  ro.cell_cap = o.cap;
  ro.verify = o.verify;
  return ro;
}

int cmd_invariants(const Options& o, std::ostream& out, std::ostream& err) {
  const CurveSpec c(parse_generators(o.gens));
  const CurveRecord r = make_record(c, record_options(o));
  emit_record(r, o.format, out, true);
  if (r.verified && !r.verified->ok()) {
    err << "verification failed for " << to_string(c) << ": "
        << json{{"gens", r.gens}, {"verified", to_json(r).at("verified")}}.dump() << '\n';
    return mismatch;
  }
  return ok;
}

int cmd_table(const Options& o, std::ostream& out, std::ostream& err) {
  const TableResult t = run_table(o.table);
  std::ostream& notes = o.format == Format::pretty ? out : err;
  if (o.format == Format::json) {
    json cells = json::array();
    for (const auto& d : t.diff.cells)
      cells.push_back({{"row", d.row_key},
                       {"column", d.column},
                       {"golden", d.golden},
                       {"computed", d.computed},
                       {"known", d.known != nullptr},
                       {"note", d.known ? json(d.known->note) : json(nullptr)}});
    out << json{{"table", t.which},
                {"header", t.computed.header},
                {"rows", t.computed.rows},
                {"ok", t.diff.ok()},
                {"differences", cells},
                {"structural", t.diff.structural}}
               .dump()
        << '\n';
  } else {
    if (o.format == Format::pretty) out << "Table " << t.which << '\n';
    out << (o.format == Format::csv ? render_csv(t.computed) : render_pretty(t.computed));
  }
  if (o.format != Format::json) {
    for (const auto& s : t.diff.structural) notes << "MISMATCH " << s << '\n';
    for (const auto& d : t.diff.cells) {
      notes << (d.known ? "note" : "MISMATCH") << " row " << d.row_key << ", " << d.column << ": golden \""
            << d.golden << "\", computed \"" << d.computed << "\"";
      if (d.known) notes << " (" << d.known->note << ")";
      notes << '\n';
    }
    notes << (t.diff.ok() ? "golden: match" : "golden: MISMATCH") << '\n';
  }
  return t.diff.ok() ? ok : mismatch;
}

int cmd_sigma(const Options& o, std::ostream& out) {
  const CurveSpec c(parse_generators(o.gens));
  const WProfile w = build_profile(c);
  const CohomologyProfile p = first_cohomology(c, w);
  const SumsetReport s = sumset_report(c, w, p, o.method, o.cap);
  const bool disagree = s.sigma_brute && *s.sigma_brute != s.sigma_formula;
  if (o.format == Format::json) {
    out << json{{"gens", std::vector<std::int64_t>(c.a().begin(), c.a().end())},
                {"sigma", s.sigma},
                {"sigmaMethod", s.sigma_method},
                {"sigmaFormula", s.sigma_formula},
                {"sigmaBrute", s.sigma_brute ? json(*s.sigma_brute) : json(nullptr)},
                {"capExceeded", s.cap_exceeded},
                {"hMax", s.h_max},
                {"reg", p.reg}}
               .dump()
        << '\n';
  } else if (o.format == Format::csv) {
    out << "gens,sigma,sigmaMethod,sigmaFormula,sigmaBrute,capExceeded,hMax,reg\n";
    std::string g;
    for (auto x : c.a()) g += (g.empty() ? "" : ";") + std::to_string(x);
    out << g << ',' << s.sigma << ',' << s.sigma_method << ',' << s.sigma_formula << ','
        << (s.sigma_brute ? std::to_string(*s.sigma_brute) : "") << ',' << (s.cap_exceeded ? "true" : "false") << ','
        << s.h_max << ',' << p.reg << '\n';
  } else {
    out << "sigma " << s.sigma << " (" << s.sigma_method << ")\n";
    if (o.method != SigmaMethod::formula) {
      out << "formula " << s.sigma_formula << '\n';
      if (s.cap_exceeded)
        out << "brute force: cap exceeded (hMax*d = " << s.h_max * c.d() << "), formula value reported\n";
      else
        out << "brute force " << *s.sigma_brute << (disagree ? "  DISAGREES" : "") << '\n';
    }
    out << "reg " << p.reg << '\n';
  }
  return disagree ? mismatch : ok;
}

struct BatchLine {
  std::size_t line = 0;
  std::string text;
};

struct BatchResult {
  std::string output;
  int code = ok;
};

BatchResult batch_one(const BatchLine& in, const Options& o) {
  BatchResult r;
  auto error = [&](const std::string& kind, const std::string& what) {
    if (o.format == Format::json)
      r.output = json{{"line", in.line}, {"input", in.text}, {"error", kind}, {"message", what}}.dump() + "\n";
    else
      r.output = "# line " + std::to_string(in.line) + ": " + kind + " error: " + what + "\n";
  };
  try {
    const CurveSpec c(parse_generators({in.text}));
    const CurveRecord rec = make_record(c, record_options(o));
    std::ostringstream os;
    emit_record(rec, o.format, os, false);
    r.output = os.str();
    if (rec.verified && !rec.verified->ok()) r.code = mismatch;
  } catch (const ValidationError& e) {
    error("input", e.what());
    r.code = input;
  } catch (const std::exception& e) {
    error("internal", e.what());
    r.code = internal;
  }
  return r;
}

int cmd_batch(const Options& o, std::ostream& out, std::ostream& err) {
  std::ifstream f(o.input);
  if (!f) {
    err << "cannot open " << o.input << '\n';
    return input;
  }
  std::vector<BatchLine> lines;
  std::string s;
  for (std::size_t n = 1; std::getline(f, s); ++n) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string::npos || s[first] == '#') continue;
    lines.push_back({n, s});
  }

  std::vector<BatchResult> results(lines.size());
  const unsigned jobs = std::max(1u, std::min<unsigned>(o.jobs ? o.jobs : std::thread::hardware_concurrency(),
                                                        static_cast<unsigned>(std::max<std::size_t>(1, lines.size()))));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < lines.size();) results[i] = batch_one(lines[i], o);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  if (o.format == Format::csv) out << csv_header() << '\n';
  bool bad_input = false, failed = false, broken = false;
  for (const auto& r : results) {
    out << r.output;
    bad_input |= r.code == input;
    failed |= r.code == mismatch;
    broken |= r.code == internal;
  }
  if (bad_input) return input;
  if (broken) return internal;
  return failed ? mismatch : ok;
}

void add_format(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "pretty, json or csv")
      ->transform(CLI::CheckedTransformer(kFormats))
      ->option_text("pretty|json|csv");
}

void add_gens(CLI::App* sub, Options& o) {
  sub->add_option("gens", o.gens, "generators, space or comma separated")->required();
}

void add_sigma_options(CLI::App* sub, Options& o) {
  sub->add_option("--sigma-method,--method", o.method, "formula, brute or both")
      ->transform(CLI::CheckedTransformer(kMethods))
      ->option_text("formula|brute|both");
  sub->add_option("--cap", o.cap, "brute-force cell cap (hMax * d)")->check(CLI::PositiveNumber);
}

}  // namespace

std::vector<std::int64_t> parse_generators(const std::vector<std::string>& tokens) {
  std::vector<std::int64_t> out;
  for (std::string t : tokens) {
    for (char& ch : t)
      if (ch == ',' || ch == '(' || ch == ')' || ch == '\t' || ch == ';') ch = ' ';
    std::istringstream in(t);
    std::string w;
    while (in >> w) {
      if (w == "C" || w == "c") continue;
      std::int64_t v = 0;
      const auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
      if (ec != std::errc() || p != w.data() + w.size()) throw ValidationError("not an integer: '" + w + "'");
      out.push_back(v);
    }
  }
  if (out.empty()) throw ValidationError("no generators given");
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Invariants of projective monomial curves and numerical semigroups", "monocurve"};
  app.require_subcommand(1);

  auto* ap = app.add_subcommand("apery", "Apery table of a numerical semigroup");
  add_gens(ap, o);
  add_format(ap, o);
  ap->add_option("--modulus", o.modulus, "modulus (default: largest generator)")->check(CLI::PositiveNumber);

  auto* fr = app.add_subcommand("frobenius", "Frobenius number");
  add_gens(fr, o);
  add_format(fr, o);

  auto* dg = app.add_subcommand("degree", "minimal number of generators summing to n");
  add_gens(dg, o);
  add_format(dg, o);
  dg->add_option("--n", o.n, "the element")->required();

  auto* inv = app.add_subcommand("invariants", "full curve record for C(a_1, ..., d)");
  add_gens(inv, o);
  add_format(inv, o);
  inv->add_flag("--verify", o.verify, "cross-check against the brute-force oracles");
  inv->add_flag("--sigma", o.sigma, "include the sumset report");
  add_sigma_options(inv, o);

  auto* tb = app.add_subcommand("table", "regenerate reference table 1, 2 or 3 and diff against golden");
  tb->add_option("which", o.table)->required()->check(CLI::Range(1, 3));
  add_format(tb, o);

  auto* sg = app.add_subcommand("sigma", "sumset regularity");
  add_gens(sg, o);
  add_format(sg, o);
  add_sigma_options(sg, o);

  auto* bt = app.add_subcommand("batch", "one curve per input line");
  bt->add_option("--input", o.input, "input file")->required();
  bt->add_option("--jobs", o.jobs, "worker threads (0: all cores)");
  bt->add_option("--format", o.format, "json or csv")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"json", Format::json}, {"csv", Format::csv}}))
      ->option_text("json|csv");
  bt->add_flag("--verify", o.verify, "cross-check against the brute-force oracles");
  bt->add_flag("--sigma", o.sigma, "include the sumset report");
  add_sigma_options(bt, o);
  o.format = Format::pretty;

  std::vector<std::string> storage{"monocurve"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : input;
  }
  if (bt->parsed() && o.format == Format::pretty) o.format = Format::json;

  try {
    if (ap->parsed()) return cmd_apery(o, out);
    if (fr->parsed()) return cmd_frobenius(o, out);
    if (dg->parsed()) return cmd_degree(o, out);
    if (inv->parsed()) return cmd_invariants(o, out, err);
    if (tb->parsed()) return cmd_table(o, out, err);
    if (sg->parsed()) return cmd_sigma(o, out);
    if (bt->parsed()) return cmd_batch(o, out, err);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return input;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return internal;
  }
  return internal;
}

}  // namespace monocurve::cli
