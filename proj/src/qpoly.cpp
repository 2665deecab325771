#include "sheafwc/qpoly.hpp"

#include <algorithm>
#include <sstream>

#include "sheafwc/errors.hpp"

namespace sheafwc {

namespace {

template <typename Coeff>
std::string render(const std::vector<Coeff>& c) {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == Coeff(0)) continue;
    Coeff v = c[i];
    bool negative = v < Coeff(0);
    if (negative) v = -v;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = v == Coeff(1);
    if (i == 0 || !unit) os << v;
    if (i >= 1) os << "q";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------- QPoly

QPoly::QPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

QPoly::QPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(const BigInt& c) { return QPoly(std::vector<BigInt>{c}); }

QPoly QPoly::monomial(int k, const BigInt& c) {
  if (k < 0) throw DomainError("negative exponent in monomial");
  std::vector<BigInt> v(static_cast<std::size_t>(k) + 1, BigInt(0));
  v.back() = c;
  return QPoly(std::move(v));
}

BigInt QPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<std::size_t>(i)];
}

const BigInt& QPoly::leading() const {
  if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return c_.back();
}

BigInt QPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational QPoly::eval(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

QPoly QPoly::shifted(int k) const {
  if (k < 0) throw DomainError("negative shift");
  if (is_zero()) return {};
  std::vector<BigInt> v(static_cast<std::size_t>(k), BigInt(0));
  v.insert(v.end(), c_.begin(), c_.end());
  return QPoly(std::move(v));
}

BigInt QPoly::content() const {
  BigInt g = 0;
  for (const auto& v : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

QPoly QPoly::primitive_part() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (leading() < 0) g = -g;
  std::vector<BigInt> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) mpz_divexact(v[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
  return QPoly(std::move(v));
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.c_.size() + b.c_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(v));
}

QPoly& QPoly::operator*=(const QPoly& o) { return *this = *this * o; }

QPoly& QPoly::operator*=(const BigInt& s) {
  for (auto& v : c_) v *= s;
  trim();
  return *this;
}

std::string QPoly::str() const { return render(c_); }

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

// ---------------------------------------------------------------- RatPoly

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(const QPoly& p) {
  c_.reserve(p.coefficients().size());
  for (const auto& v : p.coefficients()) c_.emplace_back(v);
}

Rational RatPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<std::size_t>(i)];
}

std::optional<QPoly> RatPoly::to_integer() const {
  std::vector<BigInt> v;
  v.reserve(c_.size());
  for (const auto& r : c_) {
    if (!r.is_integer()) return std::nullopt;
    v.push_back(r.num());
  }
  return QPoly(std::move(v));
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return RatPoly(std::move(v));
}

std::string RatPoly::str() const { return render(c_); }

void RatPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

// ---------------------------------------------------------------- algorithms

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPoly{}, a};
  std::vector<Rational> rem = a.coefficients();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const Rational lead = b.coefficients().back();
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    const Rational t = rem[static_cast<std::size_t>(i)] / lead;
    quot[static_cast<std::size_t>(i - db)] = t;
    if (t.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= t * b.coeff(j);
  }
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

std::optional<QPoly> exact_quotient(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.is_zero()) return QPoly{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<BigInt> rem = a.coefficients();
  std::vector<BigInt> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const BigInt& lead = b.leading();
  const int db = b.degree();
  BigInt t;
  for (int i = a.degree(); i >= db; --i) {
    const BigInt& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    quot[static_cast<std::size_t>(i - db)] = t;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= t * b.coefficients()[static_cast<std::size_t>(j)];
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  return QPoly(std::move(quot));
}

namespace {

// lc(b)^(deg a - deg b + 1) * a mod b, computed without leaving the integers.
QPoly pseudo_remainder(const QPoly& a, const QPoly& b) {
  std::vector<BigInt> r = a.coefficients();
  const int db = b.degree();
  const BigInt& lead = b.leading();
  int dr = a.degree();
  int steps = a.degree() - db + 1;
  while (dr >= db && dr >= 0) {
    const BigInt top = r[static_cast<std::size_t>(dr)];
    for (auto& v : r) v *= lead;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(dr - db + j)] -= top * b.coefficients()[static_cast<std::size_t>(j)];
    --steps;
    while (dr >= 0 && r[static_cast<std::size_t>(dr)] == 0) --dr;
  }
  BigInt scale;
  mpz_pow_ui(scale.get_mpz_t(), lead.get_mpz_t(), static_cast<unsigned long>(std::max(steps, 0)));
  QPoly out(std::move(r));
  return out * scale;
}

}  // namespace

QPoly gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  QPoly x = a.primitive_part();
  QPoly y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    QPoly r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x.primitive_part();
}

bool is_palindromic(const QPoly& p) {
  if (p.is_zero()) throw DomainError("palindromicity of the zero polynomial is undefined");
  const auto& c = p.coefficients();
  return std::equal(c.begin(), c.begin() + static_cast<long>(c.size() / 2), c.rbegin());
}

QPoly projective_poincare(int n) {
  if (n < 0) throw DomainError("projective space of negative dimension");
  return QPoly(std::vector<BigInt>(static_cast<std::size_t>(n) + 1, BigInt(1)));
}

QPoly grassmannian_poincare(int k, int n) {
  if (k < 0 || n < 0 || k > n) throw DomainError("Gr(k, n) requires 0 <= k <= n");
  // [n choose k]_q = prod_{i=1..k} (1 - q^{n-k+i}) / (1 - q^i); each partial
  // product is itself a Gaussian binomial, so every division is exact.
  QPoly acc = QPoly::constant(1);
  for (int i = 1; i <= k; ++i) {
    acc = acc * (QPoly::constant(1) - QPoly::monomial(n - k + i));
    const auto next = exact_quotient(acc, QPoly::constant(1) - QPoly::monomial(i));
    if (!next) throw ConventionError("Gaussian binomial partial product is not a polynomial");
    acc = *next;
  }
  return acc;
}

}  // namespace sheafwc
