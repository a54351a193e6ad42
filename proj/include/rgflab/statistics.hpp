#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "rgflab/patterns.hpp"
#include "rgflab/polynomial.hpp"

namespace rgflab {

// Slot order matches the variables q, r, s, t.
enum class Stat : int { lb = 0, ls = 1, rb = 2, rs = 3 };

Stat parse_stat(std::string_view name);
const char* stat_name(Stat s);

struct StatVector {
  int lb = 0, ls = 0, rb = 0, rs = 0;
  int get(Stat s) const;
  friend bool operator==(const StatVector&, const StatVector&) = default;
};

// Number of distinct values on the given side of position j (0-based) that
// are bigger (lb, rb) or smaller (ls, rs) than w_j.
int stat_letter(const Word& w, std::size_t j, Stat which);
int stat_total(const Word& w, Stat which);
StatVector stat_vector(const Word& w);

// q^lb r^ls s^rb t^rs
MultiPoly stat_monomial(const StatVector& v);

// F_n(V; q, r, s, t) summed over R_n(V), accumulated per subtree and merged.
MultiPoly gen_poly(int n, const PatternSet& V, const AvoidOptions& opts = {},
                   WalkCounters* counters = nullptr);

// Univariate specialization: the chosen statistic's variable becomes q and
// the other three are set to 1.
MultiPoly specialize(const MultiPoly& F, Stat which);

}  // namespace rgflab
