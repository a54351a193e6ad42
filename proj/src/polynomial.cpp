#include "rgflab/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace rgflab {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("coefficient overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("coefficient overflow in multiplication");
  return r;
}

std::int64_t binom(std::int64_t a, std::int64_t b) {
  if (b == 0) return 1;
  if (b < 0) return 0;
  if (a < 0) throw DomainError("binomial with negative top and positive bottom");
  if (b > a) return 0;
  b = std::min(b, a - b);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    // r * (a - b + i) / i stays integral at every step
    const std::int64_t g = std::gcd(r, i);
    r = checked_mul(r / g, (a - b + i) / (i / g));
  }
  return r;
}

MultiPoly::MultiPoly(std::int64_t c) {
  if (c != 0) terms_[Exponent{0, 0, 0, 0}] = c;
}

MultiPoly MultiPoly::monomial(const Exponent& e, std::int64_t c) {
  for (int x : e) {
    if (x < 0) throw DomainError("negative exponent");
  }
  MultiPoly p;
  if (c != 0) p.terms_[e] = c;
  return p;
}

MultiPoly MultiPoly::var(int slot, int power) {
  Exponent e{0, 0, 0, 0};
  e[static_cast<std::size_t>(slot)] = power;
  return monomial(e, 1);
}

std::int64_t MultiPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

int MultiPoly::degree(int slot) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(slot)]);
  return d;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2] + e[3]);
  return d;
}

bool MultiPoly::univariate_in(int slot) const {
  for (const auto& [e, c] : terms_) {
    for (int i = 0; i < 4; ++i) {
      if (i != slot && e[static_cast<std::size_t>(i)] != 0) return false;
    }
  }
  return true;
}

std::vector<std::int64_t> MultiPoly::coefficients(int slot) const {
  if (!univariate_in(slot)) throw DomainError("polynomial is not univariate");
  std::vector<std::int64_t> c(static_cast<std::size_t>(std::max(degree(slot) + 1, 0)), 0);
  for (const auto& [e, v] : terms_) c[static_cast<std::size_t>(e[static_cast<std::size_t>(slot)])] = v;
  return c;
}

MultiPoly MultiPoly::from_coefficients(const std::vector<std::int64_t>& c, int slot) {
  MultiPoly p;
  for (std::size_t i = 0; i < c.size(); ++i) {
    Exponent e{0, 0, 0, 0};
    e[static_cast<std::size_t>(slot)] = static_cast<int>(i);
    p.add_term(e, c[i]);
  }
  return p;
}

void MultiPoly::add_term(const Exponent& e, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, checked_mul(c, -1));
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
      out.add_term(e, checked_mul(ca, cb));
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly MultiPoly::operator-() const {
  MultiPoly out;
  for (const auto& [e, c] : terms_) out.terms_[e] = checked_mul(c, -1);
  return out;
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) throw DomainError("negative power");
  MultiPoly result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::int64_t MultiPoly::at_one() const {
  std::int64_t s = 0;
  for (const auto& [e, c] : terms_) s = checked_add(s, c);
  return s;
}

MultiPoly MultiPoly::set_to_one(std::initializer_list<int> slots) const {
  MultiPoly out;
  for (const auto& [key, c] : terms_) {
    Exponent e = key;
    for (int s : slots) e[static_cast<std::size_t>(s)] = 0;
    out.add_term(e, c);
  }
  return out;
}

MultiPoly MultiPoly::substitute(const std::array<MultiPoly, 4>& images) const {
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    MultiPoly term(c);
    for (std::size_t i = 0; i < 4; ++i) {
      if (e[i] > 0) term *= images[i].pow(e[i]);
    }
    out += term;
  }
  return out;
}

MultiPoly MultiPoly::swap(int a, int b) const {
  MultiPoly out;
  for (const auto& [key, c] : terms_) {
    Exponent e = key;
    std::swap(e[static_cast<std::size_t>(a)], e[static_cast<std::size_t>(b)]);
    out.terms_[e] = c;
  }
  return out;
}

std::string MultiPoly::str(const VarNames& names) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponent, std::int64_t>> order(terms_.begin(), terms_.end());
  std::stable_sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
    const int dx = x.first[0] + x.first[1] + x.first[2] + x.first[3];
    const int dy = y.first[0] + y.first[1] + y.first[2] + y.first[3];
    if (dx != dy) return dx < dy;
    return x.first > y.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : order) {
    const bool constant = e == Exponent{0, 0, 0, 0};
    std::int64_t mag = c;
    if (first) {
      if (c < 0) {
        os << '-';
        mag = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) mag = -c;
    }
    first = false;
    if (constant || mag != 1) os << mag;
    for (std::size_t i = 0; i < 4; ++i) {
      if (e[i] == 0) continue;
      os << names[i];
      if (e[i] > 1) os << '^' << e[i];
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

std::optional<Exponent> first_difference(const MultiPoly& a, const MultiPoly& b) {
  auto ia = a.terms().begin(), ib = b.terms().begin();
  while (ia != a.terms().end() || ib != b.terms().end()) {
    if (ib == b.terms().end() || (ia != a.terms().end() && ia->first < ib->first)) return ia->first;
    if (ia == a.terms().end() || ib->first < ia->first) return ib->first;
    if (ia->second != ib->second) return ia->first;
    ++ia;
    ++ib;
  }
  return std::nullopt;
}

MultiPoly q_int(int n) {
  if (n < 0) throw DomainError("q_int needs n >= 0");
  MultiPoly p;
  for (int i = 0; i < n; ++i) p.add_term({i, 0, 0, 0}, 1);
  return p;
}

MultiPoly q_factorial(int n) {
  if (n < 0) throw DomainError("q_factorial needs n >= 0");
  MultiPoly p(1);
  for (int i = 2; i <= n; ++i) p *= q_int(i);
  return p;
}

MultiPoly gaussian(int n, int k) {
  if (n < 0) throw DomainError("gaussian needs n >= 0");
  if (k < 0 || k > n) return MultiPoly(0);
  auto q = divide_exact(q_factorial(n), q_factorial(k) * q_factorial(n - k));
  if (!q) throw NonPolynomialError("gaussian division failed");
  return *q;
}

MultiPoly pq_int(int n) {
  if (n < 0) throw DomainError("pq_int needs n >= 0");
  MultiPoly p;
  for (int i = 0; i < n; ++i) p.add_term({i, n - 1 - i, 0, 0}, 1);
  return p;
}

MultiPoly pq_gaussian(int n, int k) {
  MultiPoly g = gaussian(n, k);
  if (g.is_zero()) return g;
  const int top = k * (n - k);
  MultiPoly out;
  for (const auto& [e, c] : g.terms()) out.add_term({e[0], top - e[0], 0, 0}, c);
  return out;
}

std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  auto rem = a.coefficients(kQ);
  const auto d = b.coefficients(kQ);
  const std::size_t db = d.size() - 1;
  if (rem.size() < d.size()) {
    if (a.is_zero()) return MultiPoly(0);
    return std::nullopt;
  }
  std::vector<std::int64_t> quot(rem.size() - db, 0);
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    if (rem[i] % d[db] != 0) return std::nullopt;
    const std::int64_t f = rem[i] / d[db];
    quot[i - db] = f;
    for (std::size_t j = 0; j <= db; ++j) {
      rem[i - db + j] = checked_add(rem[i - db + j], -checked_mul(f, d[j]));
    }
  }
  for (std::int64_t r : rem) {
    if (r != 0) return std::nullopt;
  }
  return MultiPoly::from_coefficients(quot);
}

QRational::QRational(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("zero denominator");
  if (!num_.univariate_in(kQ) || !den_.univariate_in(kQ)) {
    throw DomainError("rational functions are in q only");
  }
  const auto c = den_.coefficients(kQ);
  if (c.back() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

QRational operator+(const QRational& a, const QRational& b) {
  if (a.den_ == b.den_) return QRational(a.num_ + b.num_, a.den_);
  return QRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QRational operator-(const QRational& a, const QRational& b) {
  if (a.den_ == b.den_) return QRational(a.num_ - b.num_, a.den_);
  return QRational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

QRational operator*(const QRational& a, const QRational& b) {
  return QRational(a.num_ * b.num_, a.den_ * b.den_);
}

QRational operator/(const QRational& a, const QRational& b) {
  if (b.num_.is_zero()) throw DomainError("division by zero");
  return QRational(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const QRational& a, const QRational& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

MultiPoly QRational::to_polynomial() const {
  auto q = divide_exact(num_, den_);
  if (!q) throw NonPolynomialError("(" + num_.str() + ")/(" + den_.str() + ") is not a polynomial");
  return *q;
}

std::string QRational::str() const {
  if (den_ == MultiPoly(1)) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace rgflab
