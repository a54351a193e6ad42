#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "rgflab/bijections.hpp"
#include "rgflab/closed_forms.hpp"
#include "rgflab/errors.hpp"
#include "rgflab/statistics.hpp"
#include "rgflab/verify.hpp"

namespace rgflab::cli {

namespace {

using json = nlohmann::ordered_json;

json poly_value(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"e", e}, {"c", c}});
  return {{"vars", {"q", "r", "s", "t"}}, {"terms", std::move(terms)}};
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string::npos ? text.size() : comma;
    if (end > start) out.push_back(text.substr(start, end - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

struct Globals {
  unsigned threads = default_threads();
  std::optional<int> max_n;
  std::string format = "text";

  EnumerationLimits limits() const {
    EnumerationLimits l = EnumerationLimits::from_environment();
    if (max_n) l.max_n = *max_n;
    return l;
  }
  AvoidOptions avoid() const { return {limits(), threads}; }
  bool as_json() const { return format == "json"; }
};

// Streams words as text lines or one JSON object.
class WordSink {
 public:
  WordSink(std::ostream& out, bool as_json, const json& header) : out_(out), json_(as_json) {
    if (json_) {
      std::string h = header.dump();
      h.pop_back();  // reopen the object
      out_ << h << (header.empty() ? "" : ",") << "\"words\":[";
    }
  }
  void operator()(const Word& w) {
    if (json_) {
      out_ << (first_ ? "" : ",") << json(w.str()).dump();
      first_ = false;
    } else {
      out_ << w.str() << '\n';
    }
  }
  void finish() {
    if (json_) out_ << "]}\n";
  }

 private:
  std::ostream& out_;
  bool json_;
  bool first_ = true;
};

int cmd_enumerate(const Globals& g, int n, std::ostream& out) {
  check_length(n, g.limits());
  WordSink sink(out, g.as_json(), {{"n", n}});
  for_each_rgf(n, [&](const Word& w) { sink(w); }, g.limits());
  sink.finish();
  return kOk;
}

int cmd_avoid(const Globals& g, int n, const PatternSet& V, bool count_only, std::ostream& out) {
  check_length(n, g.limits());
  if (count_only) {
    const auto count = count_avoiders(n, V, g.avoid());
    if (g.as_json()) {
      out << json{{"n", n}, {"patterns", V.str()}, {"count", count}}.dump() << '\n';
    } else {
      out << count << '\n';
    }
    return kOk;
  }
  WordSink sink(out, g.as_json(), {{"n", n}, {"patterns", V.str()}});
  // avoiders() is ordered whatever the thread count
  for (const auto& w : avoiders(n, V, g.avoid())) sink(w);
  sink.finish();
  return kOk;
}

int cmd_stats(const Globals& g, const Word& w, bool letters, std::ostream& out) {
  const StatVector v = stat_vector(w);
  const Stat all[] = {Stat::lb, Stat::ls, Stat::rb, Stat::rs};
  if (g.as_json()) {
    json j{{"word", w.str()}};
    for (Stat s : all) j[stat_name(s)] = v.get(s);
    if (letters) {
      json per = json::array();
      for (std::size_t i = 0; i < w.size(); ++i) {
        json row{{"letter", w[i]}};
        for (Stat s : all) row[stat_name(s)] = stat_letter(w, i, s);
        per.push_back(std::move(row));
      }
      j["letters"] = std::move(per);
    }
    out << j.dump() << '\n';
    return kOk;
  }
  for (Stat s : all) out << stat_name(s) << ' ' << v.get(s) << '\n';
  if (letters) {
    out << "i letter lb ls rb rs\n";
    for (std::size_t i = 0; i < w.size(); ++i) {
      out << i << ' ' << w[i];
      for (Stat s : all) out << ' ' << stat_letter(w, i, s);
      out << '\n';
    }
  }
  return kOk;
}

void print_poly(const Globals& g, const MultiPoly& p, std::ostream& out) {
  if (g.as_json()) {
    out << poly_value(p).dump() << '\n';
  } else {
    out << p.str() << '\n';
  }
}

struct GenpolyArgs {
  std::optional<int> n;
  std::string patterns;
  std::string stat = "all";
  std::string formula;
  std::optional<int> k, m;
  std::string v;
  bool check = false;
};

int genpoly_formula(const Globals& g, const GenpolyArgs& a, std::ostream& out, std::ostream& err) {
  const Formula& f = find_formula(a.formula);
  std::ostream& rep = g.as_json() ? err : out;  // check lines stay out of JSON
  FormulaArgs fa{a.n.value_or(0), a.k.value_or(0), a.m.value_or(0), a.v};
  auto need = [&](bool given, const char* flag) {
    if (!given) throw DomainError(f.id + " needs " + flag);
  };
  if (f.arity.find('n') != std::string::npos) need(a.n.has_value(), "--n");
  if (f.arity.find('k') != std::string::npos) need(a.k.has_value(), "--k");
  if (f.arity.find('m') != std::string::npos) need(a.m.has_value(), "--m");
  if (f.arity.find('v') != std::string::npos) {
    need(!a.v.empty(), "--v");
    require_rgf(Word::parse(a.v), "--v");
  }
  if (f.eval_rational) {
    const QRational r = f.eval_rational(fa);
    try {
      print_poly(g, r.to_polynomial(), out);
    } catch (const NonPolynomialError&) {
      if (g.as_json()) {
        out << json{{"num", poly_value(r.num())}, {"den", poly_value(r.den())}}.dump() << '\n';
      } else {
        out << r.str() << '\n';
      }
    }
    if (a.check) rep << f.id << " has no enumeration target\n";
    return kOk;
  }
  const MultiPoly value = evaluate(f.id, fa);
  print_poly(g, value, out);
  if (!a.check) return kOk;
  check_length(fa.n, g.limits());
  const TheoremCheck c = make_formula_check(f.id, f, [fa](int) { return fa; }, fa.n, fa.n);
  const CheckResult r = c.run(fa.n, g.avoid());
  if (r.status == Status::pass) {
    rep << "check " << f.id << ": pass\n";
    return kOk;
  }
  rep << "check " << f.id << ": fail: " << r.witness << '\n';
  return kCheckFailed;
}

int cmd_genpoly(const Globals& g, const GenpolyArgs& a, std::ostream& out, std::ostream& err) {
  if (!a.formula.empty()) return genpoly_formula(g, a, out, err);
  std::ostream& rep = g.as_json() ? err : out;
  if (!a.n) throw DomainError("genpoly needs --n or --formula");
  const PatternSet V = PatternSet::parse(a.patterns);
  std::optional<Stat> stat;
  if (a.stat != "all") stat = parse_stat(a.stat);
  check_length(*a.n, g.limits());
  const MultiPoly F = gen_poly(*a.n, V, g.avoid());
  const MultiPoly value = stat ? specialize(F, *stat) : F;
  print_poly(g, value, out);
  if (!a.check) return kOk;
  const auto candidates = formulas_for(V, stat);
  if (candidates.empty()) {
    rep << "no registered formula for this pattern set and statistic\n";
    return kUsage;
  }
  int code = kOk;
  for (const Formula* f : candidates) {
    if (*a.n < f->n_min) {
      rep << "check " << f->id << ": skipped, needs n >= " << f->n_min << '\n';
      continue;
    }
    const MultiPoly expected = f->eval(FormulaArgs{*a.n, 0, 0, {}});
    if (expected == value) {
      rep << "check " << f->id << ": pass\n";
    } else {
      rep << "check " << f->id << ": fail, formula gives " << expected.str() << '\n';
      code = kCheckFailed;
    }
  }
  return code;
}

int cmd_bijection(const Globals& g, const std::string& name, const std::string& input, bool inverse,
                  bool show_stats, bool list, std::ostream& out) {
  if (list) {
    for (const auto& b : bijections()) {
      out << b.id << ": " << b.domain << " -> " << b.codomain << " (" << b.transport << ")\n";
    }
    return kOk;
  }
  if (name.empty()) throw DomainError("bijection needs --name");
  const BijectionEntry& b = find_bijection(name);
  const std::string image = inverse ? b.apply_inverse(input) : b.apply(input);
  std::vector<std::string> stats;
  if (show_stats) stats = inverse ? b.show_stats(image) : b.show_stats(input);
  if (g.as_json()) {
    json j{{"name", b.id}, {"input", input}, {"inverse", inverse}, {"output", image}};
    if (show_stats) j["stats"] = stats;
    out << j.dump() << '\n';
    return kOk;
  }
  out << image << '\n';
  for (const auto& line : stats) out << line << '\n';
  return kOk;
}

int cmd_verify(const Globals& g, const std::string& ids, std::optional<int> n_max, double budget,
               std::ostream& out) {
  VerifyOptions opts;
  opts.ids = split_commas(ids);
  opts.n_max = n_max;
  opts.budget_seconds = budget;
  opts.threads = g.threads;
  opts.limits = g.limits();
  const Report report = run_checks(opts);
  out << (g.as_json() ? report.json() + "\n" : report.text());
  return report.ok() ? kOk : kCheckFailed;
}

int cmd_explore(const Globals& g, const std::string& report, int n_max, std::ostream& out) {
  if (report != "rb1221") throw DomainError("unknown report '" + report + "'");
  check_length(n_max, g.limits());
  const PatternSet V = PatternSet::parse("1221");
  std::vector<std::vector<std::int64_t>> rows;
  std::size_t width = 0;
  for (int n = 0; n <= n_max; ++n) {
    rows.push_back(specialize(gen_poly(n, V, g.avoid()), Stat::rb).coefficients(kQ));
    width = std::max(width, rows.back().size());
  }
  if (g.as_json()) {
    json j{{"report", report}, {"rows", json::array()}};
    for (int n = 0; n <= n_max; ++n) j["rows"].push_back({{"n", n}, {"coefficients", rows[n]}});
    out << j.dump() << '\n';
    return kOk;
  }
  // coefficient of q^k in RB_n(1221)
  std::vector<std::size_t> col(width, 1);
  for (const auto& r : rows) {
    for (std::size_t k = 0; k < r.size(); ++k) col[k] = std::max(col[k], std::to_string(r[k]).size());
  }
  for (std::size_t k = 0; k < width; ++k) col[k] = std::max(col[k], ("k=" + std::to_string(k)).size());
  auto cell = [](std::string s, std::size_t w) { return std::string(w - s.size(), ' ') + s; };
  out << " n";
  for (std::size_t k = 0; k < width; ++k) out << ' ' << cell("k=" + std::to_string(k), col[k]);
  out << '\n';
  for (int n = 0; n <= n_max; ++n) {
    out << cell(std::to_string(n), 2);
    for (std::size_t k = 0; k < rows[n].size(); ++k) out << ' ' << cell(std::to_string(rows[n][k]), col[k]);
    out << '\n';
  }
  return kOk;
}

}  // namespace

std::string poly_json(const MultiPoly& p) { return poly_value(p).dump(); }

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Restricted growth function pattern avoidance toolkit", "rgflab"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--threads", g.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--max-n", g.max_n, "length ceiling (overrides RGFLAB_MAX_N)")->check(CLI::NonNegativeNumber);
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}));

  int n = 0;
  std::string patterns, word, name, input, ids, report;
  bool count_only = false, letters = false, inverse = false, show_stats = false, list = false;
  std::optional<int> n_max;
  int explore_n_max = 10;
  double budget = 0;
  GenpolyArgs gp;

  auto* enumerate = app.add_subcommand("enumerate", "list R_n in lexicographic order");
  enumerate->add_option("--n", n)->required();

  auto* avoid = app.add_subcommand("avoid", "list or count R_n(V)");
  avoid->add_option("--n", n)->required();
  avoid->add_option("--patterns", patterns, "comma-separated RGFs")->required();
  avoid->add_flag("--count-only", count_only);

  auto* stats = app.add_subcommand("stats", "lb, ls, rb, rs of one word");
  stats->add_option("--word", word)->required();
  stats->add_flag("--letters", letters, "per-letter table");

  auto* genpoly = app.add_subcommand("genpoly", "generating polynomial by enumeration or formula");
  genpoly->add_option("--n", gp.n);
  genpoly->add_option("--patterns", gp.patterns);
  genpoly->add_option("--stat", gp.stat)->check(CLI::IsMember({"lb", "ls", "rb", "rs", "all"}));
  genpoly->add_option("--formula", gp.formula);
  genpoly->add_option("--k", gp.k);
  genpoly->add_option("--m", gp.m);
  genpoly->add_option("--v", gp.v);
  genpoly->add_flag("--check", gp.check, "compare formula and enumeration");

  auto* bijection = app.add_subcommand("bijection", "apply a registered bijection");
  bijection->add_option("--name", name);
  bijection->add_option("--input", input);
  bijection->add_flag("--inverse", inverse);
  bijection->add_flag("--show-stats", show_stats);
  bijection->add_flag("--list", list);

  auto* verify = app.add_subcommand("verify", "run registered checks against enumeration");
  verify->add_option("--ids", ids, "comma-separated check ids");
  verify->add_option("--n-max", n_max)->check(CLI::NonNegativeNumber);
  verify->add_option("--budget", budget, "seconds per check")->check(CLI::NonNegativeNumber);

  auto* explore = app.add_subcommand("explore", "exploratory tables");
  explore->add_option("--report", report)->required();
  explore->add_option("--n-max", explore_n_max)->check(CLI::NonNegativeNumber);

  std::vector<const char*> argv{"rgflab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    // validate text inputs before any enumeration
    if (*avoid) {
      return cmd_avoid(g, n, PatternSet::parse(patterns), count_only, out);
    }
    if (*enumerate) return cmd_enumerate(g, n, out);
    if (*stats) {
      const Word w = Word::parse(word);
      require_rgf(w);
      return cmd_stats(g, w, letters, out);
    }
    if (*genpoly) return cmd_genpoly(g, gp, out, err);
    if (*bijection) return cmd_bijection(g, name, input, inverse, show_stats, list, out);
    if (*verify) return cmd_verify(g, ids, n_max, budget, out);
    if (*explore) return cmd_explore(g, report, explore_n_max, out);
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kCeiling;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return kCeiling;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NonPolynomialError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace rgflab::cli
