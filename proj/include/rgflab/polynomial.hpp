#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rgflab/errors.hpp"

namespace rgflab {

// Exponent vector over the four variable slots, in (q, r, s, t) order.
using Exponent = std::array<int, 4>;

// Display names per slot. The bivariate q-analogues keep p in the r slot.
using VarNames = std::array<const char*, 4>;
inline constexpr VarNames kStatVars{"q", "r", "s", "t"};
inline constexpr VarNames kPQVars{"q", "p", "s", "t"};

enum Var : int { kQ = 0, kR = 1, kS = 2, kT = 3, kP = 1 };

// Checked int64 helpers; OverflowError instead of wraparound.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// C(a, b) with C(a, 0) = 1 for every integer a, and 0 when b < 0 or
// 0 <= a < b. Negative a with b > 0 is rejected.
std::int64_t binom(std::int64_t a, std::int64_t b);

// Sparse polynomial with int64 coefficients; zero coefficients are never stored.
class MultiPoly {
 public:
  using Terms = std::map<Exponent, std::int64_t>;

  MultiPoly() = default;
  MultiPoly(std::int64_t c);  // NOLINT: constants convert implicitly
  static MultiPoly monomial(const Exponent& e, std::int64_t c = 1);
  static MultiPoly var(int slot, int power = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coeff(const Exponent& e) const;

  // Largest exponent of `slot` (or total degree) over all terms; -1 for zero.
  int degree(int slot) const;
  int total_degree() const;
  // True when only slot `slot` carries nonzero exponents.
  bool univariate_in(int slot) const;
  // Coefficient list c[0..d] of a polynomial in `slot` alone.
  std::vector<std::int64_t> coefficients(int slot) const;
  static MultiPoly from_coefficients(const std::vector<std::int64_t>& c, int slot = kQ);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;
  MultiPoly pow(int e) const;

  void add_term(const Exponent& e, std::int64_t c);

  // Sum of coefficients.
  std::int64_t at_one() const;
  // Set the listed slots to 1.
  MultiPoly set_to_one(std::initializer_list<int> slots) const;
  // Replace slot i by images[i] everywhere.
  MultiPoly substitute(const std::array<MultiPoly, 4>& images) const;
  // Exchange two slots.
  MultiPoly swap(int a, int b) const;

  // Ascending total degree; within a degree, larger exponent vectors first.
  std::string str(const VarNames& names = kStatVars) const;

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

// First exponent vector (lexicographic) whose coefficients differ, if any.
std::optional<Exponent> first_difference(const MultiPoly& a, const MultiPoly& b);

MultiPoly q_int(int n);
MultiPoly q_factorial(int n);
// 0 when k < 0 or k > n.
MultiPoly gaussian(int n, int k);

// p in the r slot.
MultiPoly pq_int(int n);
MultiPoly pq_gaussian(int n, int k);

// Exact quotient of univariate-in-q polynomials, or nullopt when b does not
// divide a over the integers. b must be nonzero.
std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);

// Ratio of two polynomials in q. Reduction happens only on request.
class QRational {
 public:
  QRational(MultiPoly num = MultiPoly(0), MultiPoly den = MultiPoly(1));

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }

  friend QRational operator+(const QRational& a, const QRational& b);
  friend QRational operator-(const QRational& a, const QRational& b);
  friend QRational operator*(const QRational& a, const QRational& b);
  friend QRational operator/(const QRational& a, const QRational& b);
  friend bool operator==(const QRational& a, const QRational& b);

  // Throws NonPolynomialError unless den divides num exactly.
  MultiPoly to_polynomial() const;

  std::string str() const;

 private:
  MultiPoly num_, den_;
};

}  // namespace rgflab
