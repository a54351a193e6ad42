#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rgflab/objects.hpp"
#include "rgflab/patterns.hpp"

namespace rgflab {

// A partition together with the rectangle it is placed in.
struct BoxedPartition {
  IntegerPartition lambda;
  Rectangle box;

  std::string str() const;  // "(5,5,4,3,3) in 6x5"
  static BoxedPartition parse(std::string_view text);

  friend bool operator==(const BoxedPartition&, const BoxedPartition&) = default;
  friend auto operator<=>(const BoxedPartition&, const BoxedPartition&) = default;
};

// Every (lambda, a x b) with a + b = n - 1 and lambda inside; n >= 1.
std::vector<BoxedPartition> boxed_partitions(int n);

// R_n(112) -> A_n with u_i = rs(w_i), rooted at the first maximum.
RootedUnimodal psi112(const Word& w);
Word psi112_inverse(const RootedUnimodal& u);

// A_n -> B_n, |u| = |lambda|; rectangle (m-1) x (n-m) for root m.
BoxedPartition phi_unimodal(const RootedUnimodal& u);
RootedUnimodal phi_unimodal_inverse(const BoxedPartition& p);

// R_n(112) -> B_n, lb(w) = |lambda|; rectangle (n-m) x (m-1) for max m.
BoxedPartition rho112(const Word& w);
Word rho112_inverse(const BoxedPartition& p);

// R_n(112) -> R_n(122), (lb, ls, rb) goes to (lb, rb, ls).
Word eta(const Word& w);
Word eta_inverse(const Word& v);

// R_n(112) -> R_n(121) by sorting; ls preserved.
Word xi(const Word& w);
Word xi_inverse(const Word& v);

// R_n(122) -> R_n(123), letters >= 2 become 2; rs preserved.
Word f122_123(const Word& w);
Word f122_123_inverse(const Word& v);

// Two-colored paths of length n-1 -> R_n(1212), area = rs.
Word psi_motzkin(const MotzkinPath& p);
MotzkinPath psi_motzkin_inverse(const Word& w);

// R_n(111,1212) -> plain Motzkin paths of length n, rs(w_i) = l(s_i).
MotzkinPath phi_motzkin(const Word& w);
Word phi_motzkin_inverse(const MotzkinPath& p);

// Repeated letters sorted into weakly increasing order; defined on all RGFs.
Word inc(const Word& w);
// inc restricted to R_n(1212) is a bijection onto R_n(1221).
Word inc_restricted(const Word& w);
Word inc_restricted_inverse(const Word& v);

// R_k(1221) -> R_{k+2}(1221), alpha(v) = inc(1 vbar 1).
Word alpha(const Word& v);
// Properties (i)-(iii) describing the image of alpha inside R(1221).
bool in_alpha_image(const Word& w);
Word alpha_inverse(const Word& w);

// The RGF v(R) of a two-colored path; beta(R) = inc(v(R)).
Word v_map(const MotzkinPath& p);
Word beta(const MotzkinPath& p);
// Index (0-based) of the letter breaking w, if any.
std::optional<std::size_t> breaking_letter(const Word& w);
MotzkinPath beta_inverse(const Word& w);

// R_n(111,112) -> C'_n: (delta(lambda), (n-m) x (2m-n)).
BoxedPartition rho_prime(const Word& w);
Word rho_prime_inverse(const BoxedPartition& p);
// Members of C'_n.
std::vector<BoxedPartition> rho_prime_codomain(int n);

// delta on a boxed partition with distinct parts: r x l goes to r x (l-r+1).
BoxedPartition delta_boxed(const BoxedPartition& p);
BoxedPartition delta_boxed_inverse(const BoxedPartition& p);
// Distinct-part partitions in r x l with r + l = n (last part may be 0).
std::vector<BoxedPartition> delta_domain(int n);
std::vector<BoxedPartition> delta_codomain(int n);

// Registry entry for the generic battery and the CLI.
struct BijectionEntry {
  std::string id;
  std::string domain;     // description, e.g. "R_n(112)"
  std::string codomain;   // description
  std::string transport;  // declared statistic transport
  int n_min = 1;
  int n_max = 8;          // default exhaustive bound
  // Text-level application for the CLI; inputs validated against the domain.
  std::function<std::string(std::string_view)> apply;
  std::function<std::string(std::string_view)> apply_inverse;
  // Transported statistics for one input, as "name: source -> target" lines.
  std::function<std::vector<std::string>(std::string_view)> show_stats;
  // Exhaustive check at size n: round trips both ways, codomain hit exactly,
  // transport on every element. Returns the first failing domain element.
  std::function<std::optional<std::string>(int)> check;
};

const std::vector<BijectionEntry>& bijections();
const BijectionEntry& find_bijection(std::string_view id);

}  // namespace rgflab
