#include "rgflab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include <json.hpp>

#include "rgflab/bijections.hpp"
#include "rgflab/errors.hpp"
#include "rgflab/statistics.hpp"

namespace rgflab {

const char* kind_name(CheckKind k) {
  switch (k) {
    case CheckKind::formula: return "formula";
    case CheckKind::characterization: return "characterization";
    case CheckKind::bijection: return "bijection";
    case CheckKind::equidistribution: return "equidistribution";
    case CheckKind::cardinality: return "cardinality";
  }
  return "?";
}

const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

namespace {

std::string exponent_str(const Exponent& e) {
  std::ostringstream os;
  os << "q^" << e[0] << " r^" << e[1] << " s^" << e[2] << " t^" << e[3];
  return os.str();
}

// "<what> differs at q^a r^b s^c t^d: x vs y"
std::string poly_witness(const std::string& what, const MultiPoly& expected, const MultiPoly& actual) {
  const auto e = first_difference(expected, actual);
  if (!e) return {};
  return what + " differs at " + exponent_str(*e) + ": " + std::to_string(expected.coeff(*e)) + " vs " +
         std::to_string(actual.coeff(*e));
}

MultiPoly brute_force(const FormulaTarget& t, int n, const AvoidOptions& opts) {
  using K = FormulaTarget::Kind;
  switch (t.kind) {
    case K::stat: return specialize(gen_poly(n, PatternSet::parse(t.patterns), opts), t.stat);
    case K::full: return gen_poly(n, PatternSet::parse(t.patterns), opts);
    case K::count:
      return MultiPoly(static_cast<std::int64_t>(count_avoiders(n, PatternSet::parse(t.patterns), opts)));
    case K::area: return motzkin_q_by_area(n);
    case K::ls_degree: break;
  }
  throw DomainError("no polynomial for " + t.str());
}

CheckResult check_target(const MultiPoly& value, const FormulaTarget& t, int n, const AvoidOptions& opts) {
  if (t.kind == FormulaTarget::Kind::ls_degree) {
    const MultiPoly ls = specialize(gen_poly(n, PatternSet::parse(t.patterns), opts), Stat::ls);
    const int deg = ls.degree(kQ);
    if (value != MultiPoly(deg)) {
      return {Status::fail, t.str() + ": formula " + value.str() + ", enumeration " + std::to_string(deg)};
    }
    const std::int64_t lead = ls.coeff({deg, 0, 0, 0});
    if (lead != 1) return {Status::fail, t.str() + ": leading coefficient " + std::to_string(lead)};
    return {};
  }
  const MultiPoly truth = brute_force(t, n, opts);
  if (value == truth) return {};
  return {Status::fail, poly_witness(t.str() + " (formula vs enumeration)", value, truth)};
}

TheoremCheck formula_check(std::string id, const Formula& f, std::function<FormulaArgs(int)> args, int n_min,
                           int n_max) {
  return make_formula_check(std::move(id), f, std::move(args), n_min, n_max);
}

int default_n_max(const std::string& id) {
  static const std::map<std::string, int> table{
      {"SUM_GAUSS", 10},    {"DISTINCT_PROD", 10}, {"BINOM_SHIFT", 10}, {"TRIANG", 10},
      {"RS_1212", 8},       {"MOTZKIN_Q", 8},      {"LB_111_1221", 8},  {"RS_111_1212", 9},
      {"CARD_2POW", 11},    {"CARD_111", 11},      {"CARD_FIB", 12},    {"CARD_CATALAN", 11},
  };
  if (auto it = table.find(id); it != table.end()) return it->second;
  if (id.rfind("MULT_", 0) == 0) return 9;
  return 9;
}

std::vector<TheoremCheck> build_checks() {
  std::vector<TheoremCheck> out;

  // Formulas in n alone, cardinalities among them.
  for (const auto& f : formulas()) {
    if (f.arity != "n") continue;
    TheoremCheck c = formula_check(f.id, f, [](int n) { return FormulaArgs{n, 0, 0, {}}; }, f.n_min, default_n_max(f.id));
    if (f.id.rfind("CARD_", 0) == 0) c.kind = CheckKind::cardinality;
    out.push_back(std::move(c));
  }

  for (const char* machine : {"LS_MACHINE", "RS_MACHINE"}) {
    const Formula& f = find_formula(machine);
    for (std::string v : {"11", "111", "112", "121", "122", "123"}) {
      out.push_back(formula_check(std::string(machine) + "[v=" + v + "]", f,
                                  [v](int n) { return FormulaArgs{n, 0, 0, v}; }, 0, 9));
    }
  }
  for (int k = 3; k <= 5; ++k) {
    out.push_back(formula_check("LS_12K[k=" + std::to_string(k) + "]", find_formula("LS_12K"),
                                [k](int n) { return FormulaArgs{n, k, 0, {}}; }, 1, 7));
  }
  for (int m = 1; m <= 5; ++m) {
    out.push_back(formula_check("LS_ONES[m=" + std::to_string(m) + "]", find_formula("LS_ONES"),
                                [m](int n) { return FormulaArgs{n, 0, m, {}}; }, 0, 7));
  }
  for (int m = 2; m <= 5; ++m) {
    out.push_back(formula_check("RS_ONES[m=" + std::to_string(m) + "]", find_formula("RS_ONES"),
                                [m](int n) { return FormulaArgs{n, 0, m, {}}; }, 0, 7));
  }
  for (int k = 3; k <= 5; ++k) {
    out.push_back(formula_check("DEG_LS_12K[k=" + std::to_string(k) + "]", find_formula("DEG_LS_12K"),
                                [k](int n) { return FormulaArgs{n, k, 0, {}}; }, k, 8));
  }

  for (const auto& s : symmetries()) {
    const int n_min = std::max(find_formula("MULT_" + std::to_string(s.lhs)).n_min,
                               find_formula("MULT_" + std::to_string(s.rhs)).n_min);
    TheoremCheck c;
    c.id = s.id;
    c.kind = CheckKind::formula;
    c.n_min = n_min;
    c.n_max = 10;
    c.run = [s](int n, const AvoidOptions&) -> CheckResult {
      const MultiPoly lhs = mult(s.lhs, n).substitute(s.lhs_images);
      const MultiPoly rhs = mult(s.rhs, n).substitute(s.rhs_images);
      if (lhs == rhs) return {};
      return {Status::fail, poly_witness(s.statement, lhs, rhs)};
    };
    out.push_back(std::move(c));
  }

  for (const auto& ch : characterizations()) {
    TheoremCheck c;
    c.id = ch.id;
    c.kind = CheckKind::characterization;
    c.n_min = 0;
    c.n_max = 9;
    c.run = [&ch](int n, const AvoidOptions& opts) -> CheckResult {
      CheckResult r;
      for_each_rgf(
          n,
          [&](const Word& w) {
            if (r.status == Status::fail) return;
            const bool structural = ch.test(w);
            const bool avoid = avoids(w, ch.patterns);
            if (structural != avoid) {
              r = {Status::fail, (w.empty() ? std::string("(empty)") : w.str()) + ": characterization " + (structural ? "true" : "false") +
                                     ", avoids " + ch.patterns.str() + " " + (avoid ? "true" : "false")};
            }
          },
          opts.limits);
      return r;
    };
    out.push_back(std::move(c));
  }

  for (const auto& b : bijections()) {
    TheoremCheck c;
    c.id = b.id;
    c.kind = CheckKind::bijection;
    c.n_min = b.n_min;
    c.n_max = b.n_max;
    c.run = [&b](int n, const AvoidOptions& opts) -> CheckResult {
      check_length(n, opts.limits);
      if (auto w = b.check(n)) return {Status::fail, *w};
      return {};
    };
    out.push_back(std::move(c));
  }

  for (const auto& e : equidistributions()) {
    TheoremCheck c;
    c.id = e.id;
    c.kind = CheckKind::equidistribution;
    c.n_min = e.n_min;
    c.n_max = e.n_max;
    c.run = [&e](int n, const AvoidOptions& opts) -> CheckResult {
      auto bad = compare_sides(e, n, opts);
      if (!bad) return {};
      return {Status::fail,
              poly_witness(e.sides[0].label + " vs " + e.sides[bad->side].label, bad->expected, bad->actual)};
    };
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Record> run_one(const TheoremCheck& c, const VerifyOptions& opts) {
  std::vector<Record> out;
  const int hi = opts.n_max ? *opts.n_max : c.n_max;
  AvoidOptions inner;
  inner.limits = opts.limits;
  inner.threads = 1;
  const auto start = std::chrono::steady_clock::now();
  for (int n = c.n_min; n <= hi; ++n) {
    Record r{c.id, c.kind, n, Status::pass, {}};
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (opts.budget_seconds > 0 && elapsed > opts.budget_seconds) {
      r.status = Status::skipped;
      r.witness = "budget";
    } else {
      try {
        CheckResult res = c.run(n, inner);
        r.status = res.status;
        r.witness = std::move(res.witness);
      } catch (const ResourceLimitError& e) {
        r.status = Status::skipped;
        r.witness = "ceiling";
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

TheoremCheck make_formula_check(std::string id, Formula formula, std::function<FormulaArgs(int)> args,
                                int n_min, int n_max) {
  TheoremCheck c;
  c.id = std::move(id);
  c.kind = CheckKind::formula;
  c.n_min = n_min;
  c.n_max = n_max;
  c.run = [f = std::move(formula), args = std::move(args)](int n, const AvoidOptions& opts) -> CheckResult {
    const FormulaArgs a = args(n);
    const MultiPoly value = f.eval(a);
    for (const auto& t : f.targets(a)) {
      CheckResult r = check_target(value, t, n, opts);
      if (r.status != Status::pass) return r;
    }
    return {};
  };
  return c;
}

const std::vector<TheoremCheck>& theorem_checks() {
  static const std::vector<TheoremCheck> registry = build_checks();
  return registry;
}

bool Report::ok() const {
  return std::none_of(records.begin(), records.end(), [](const Record& r) { return r.status == Status::fail; });
}

std::string Report::json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& r : records) {
    nlohmann::ordered_json j;
    j["check_id"] = r.check_id;
    j["kind"] = kind_name(r.kind);
    j["n"] = r.n;
    j["status"] = status_name(r.status);
    if (!r.witness.empty()) j["witness"] = r.witness;
    arr.push_back(std::move(j));
    ++counts[static_cast<int>(r.status)];
  }
  nlohmann::ordered_json out;
  out["records"] = std::move(arr);
  out["summary"] = {{"pass", counts[0]}, {"fail", counts[1]}, {"skipped", counts[2]}};
  return out.dump(2);
}

std::string Report::text() const {
  // one row per check: id, kind, n range, worst status, first witness
  std::ostringstream os;
  std::size_t width = 8;
  for (const auto& r : records) width = std::max(width, r.check_id.size());
  std::size_t pass = 0, fail = 0, skipped = 0;
  for (std::size_t i = 0; i < records.size();) {
    std::size_t j = i;
    const Record* first_bad = nullptr;
    Status worst = Status::pass;
    while (j < records.size() && records[j].check_id == records[i].check_id) {
      const Record& r = records[j];
      if (r.status == Status::fail) {
        if (worst != Status::fail) first_bad = &r;
        worst = Status::fail;
      } else if (r.status == Status::skipped && worst == Status::pass) {
        worst = Status::skipped;
        first_bad = &r;
      }
      ++j;
    }
    (worst == Status::pass ? pass : worst == Status::fail ? fail : skipped)++;
    std::string id = records[i].check_id;
    id.resize(width, ' ');
    std::string kind = kind_name(records[i].kind);
    kind.resize(17, ' ');
    std::string range = "n=" + std::to_string(records[i].n) + ".." + std::to_string(records[j - 1].n);
    range.resize(9, ' ');
    os << id << "  " << kind << " " << range << " " << status_name(worst);
    if (first_bad) os << " at n=" << first_bad->n << ": " << first_bad->witness;
    os << '\n';
    i = j;
  }
  os << pass << " passed, " << fail << " failed, " << skipped << " skipped\n";
  return os.str();
}

Report run_checks(const std::vector<TheoremCheck>& checks, const VerifyOptions& opts) {
  if (opts.n_max) check_length(*opts.n_max, opts.limits);
  std::vector<const TheoremCheck*> selected;
  if (opts.ids.empty()) {
    for (const auto& c : checks) selected.push_back(&c);
  } else {
    for (const auto& id : opts.ids) {
      auto it = std::find_if(checks.begin(), checks.end(), [&](const TheoremCheck& c) { return c.id == id; });
      if (it == checks.end()) throw DomainError("unknown check '" + id + "'");
      selected.push_back(&*it);
    }
  }
  std::vector<std::vector<Record>> parts(selected.size());
  parallel_for(selected.size(), opts.threads, [&](std::size_t i) { parts[i] = run_one(*selected[i], opts); });
  Report report;
  for (auto& p : parts) {
    for (auto& r : p) report.records.push_back(std::move(r));
  }
  return report;
}

Report run_checks(const VerifyOptions& opts) { return run_checks(theorem_checks(), opts); }

}  // namespace rgflab
