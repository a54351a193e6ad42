#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rgflab/patterns.hpp"
#include "rgflab/polynomial.hpp"
#include "rgflab/statistics.hpp"

namespace rgflab {

// Arguments of a registered formula. Unused fields are ignored.
struct FormulaArgs {
  int n = 0;
  int k = 0;
  int m = 0;
  std::string v;  // base pattern for LS_MACHINE / RS_MACHINE
};

// What a formula claims to equal, for brute-force comparison.
struct FormulaTarget {
  enum class Kind {
    stat,      // specialize(F_n(patterns), stat)
    full,      // F_n(patterns; q, r, s, t)
    count,     // |R_n(patterns)|, as a constant
    ls_degree, // degree of LS_n(patterns), which is also claimed monic
    area       // sum of q^area over two-colored paths of length n
  };
  Kind kind = Kind::stat;
  std::string patterns;
  Stat stat = Stat::lb;

  std::string str() const;  // "LB_n(112)", "F_n(111,112)", "#R_n(1212)"
};

struct Formula {
  std::string id;
  std::string arity;      // "n", "n,k", "m,n", "v,n", "k"
  std::string statement;  // human-readable claim
  int n_min = 0;          // smallest n (or k for C_COEFF) where it holds
  std::function<MultiPoly(const FormulaArgs&)> eval;
  // Claimed brute-force equivalents; empty for K and C_COEFF.
  std::function<std::vector<FormulaTarget>(const FormulaArgs&)> targets;
  // Set for the formulas that live in Q(q).
  std::function<QRational(const FormulaArgs&)> eval_rational;
};

const std::vector<Formula>& formulas();
// Throws DomainError for an unknown id.
const Formula& find_formula(std::string_view id);
// Validates the arguments, then evaluates.
MultiPoly evaluate(std::string_view id, const FormulaArgs& args);
// Registered formulas with no parameters besides n that claim this target.
std::vector<const Formula*> formulas_for(const PatternSet& V, std::optional<Stat> stat);

// Individual formulas.
MultiPoly sum_gauss(int n);
MultiPoly distinct_prod(int n);
MultiPoly binom_shift(int n);
MultiPoly triang(int n);
// The nine 4-variable formulas for pairs, indexed 1..9.
MultiPoly mult(int index, int n);
// Pattern pair of MULT_index, e.g. "111,112".
std::string mult_patterns(int index);
MultiPoly ls_machine(const Word& v, int n);
MultiPoly rs_machine(const Word& v, int n);
QRational k_rational(int m, int n);
QRational c_coeff(int k);
MultiPoly ls_12k(int n, int k);
MultiPoly ls_ones(int m, int n);
MultiPoly rs_ones(int m, int n);
MultiPoly rs_1212(int n);
MultiPoly motzkin_q(int n);
// Sum of q^area over two-colored paths of length n, by enumeration.
MultiPoly motzkin_q_by_area(int n);
MultiPoly rs_111_1212(int n);
MultiPoly lb_111_1221(int n);
std::int64_t card_2pow(int n);
std::int64_t card_111(int n);
std::int64_t card_fib(int n);
std::int64_t card_catalan(int n);
int deg_ls_12k(int n, int k);

// 12...k(v+k).
Word lift(const Word& v, int k);

// One side of an equidistribution claim.
struct Side {
  std::string label;
  std::function<MultiPoly(int n, const AvoidOptions&)> eval;
};

// F_n(V) with slot i replaced by images[i].
Side substituted_side(std::string label, std::string patterns, std::array<MultiPoly, 4> images);
Side stat_side(std::string patterns, Stat stat);

// Claims of the form side_1 = side_2 = ..., checked by brute force.
struct Equidistribution {
  std::string id;
  std::vector<Side> sides;
  int n_min = 0;
  int n_max = 9;  // default range for the brute-force check
};

const std::vector<Equidistribution>& equidistributions();

// First side index (>= 1) that disagrees with side 0 at size n, and the two
// polynomials.
struct SideMismatch {
  std::size_t side;
  MultiPoly expected;
  MultiPoly actual;
};
std::optional<SideMismatch> compare_sides(const Equidistribution& e, int n, const AvoidOptions& opts = {});

// Symmetries of the MULT_* outputs.
struct Symmetry {
  std::string id;
  std::string statement;
  int lhs;  // MULT index
  std::array<MultiPoly, 4> lhs_images;
  int rhs;
  std::array<MultiPoly, 4> rhs_images;
};

const std::vector<Symmetry>& symmetries();
// Checks the identity on the formula outputs for every valid n <= n_max.
bool symmetry_check(std::string_view id, int n_max = 10);

// st-equidistribution of the lifted patterns lift(v, k) and lift(w, k) over
// R_n, brute force for n <= n_max.
bool wilf_transport(const Word& v, const Word& w, Stat stat, int k, int n_max,
                    const AvoidOptions& opts = {});

}  // namespace rgflab
