#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sheafwc/rational.hpp"

namespace sheafwc {

class RatPoly;

/// Polynomial in one variable q with arbitrary-precision integer
/// coefficients, stored in ascending powers with trailing zeros trimmed.
class QPoly {
 public:
  /// Degree reported for the zero polynomial.
  static constexpr int kZeroDegree = -1;

  QPoly() = default;
  QPoly(std::initializer_list<long> coeffs);
  explicit QPoly(std::vector<BigInt> coeffs);

  static QPoly constant(const BigInt& c);
  /// c * q^k
  static QPoly monomial(int k, const BigInt& c = 1);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  /// Coefficient of q^i (zero outside the stored range).
  BigInt coeff(int i) const;
  const std::vector<BigInt>& coefficients() const { return c_; }
  const BigInt& leading() const;

  BigInt eval(const BigInt& x) const;
  Rational eval(const Rational& x) const;

  /// Multiplies by q^k, k >= 0.
  QPoly shifted(int k) const;

  /// gcd of the coefficients, positive; zero for the zero polynomial.
  BigInt content() const;
  QPoly primitive_part() const;

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  QPoly& operator*=(const BigInt& s);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const BigInt& s) { return a *= s; }
  friend QPoly operator*(const BigInt& s, QPoly a) { return a *= s; }
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  /// Human-readable form, e.g. "1 + 2q + q^2".
  std::string str() const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

/// Polynomial in q with rational coefficients; produced only where division
/// can leave the integers.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  explicit RatPoly(const QPoly& p);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int i) const;
  const std::vector<Rational>& coefficients() const { return c_; }

  /// The integer polynomial with the same coefficients, if they are all integral.
  std::optional<QPoly> to_integer() const;

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

  std::string str() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Euclidean division over the rationals: a = quot * b + rem, deg rem < deg b.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

/// a / b when b divides a exactly with an integer-coefficient quotient.
std::optional<QPoly> exact_quotient(const QPoly& a, const QPoly& b);

/// Primitive gcd over the integers, with positive leading coefficient.
QPoly gcd(const QPoly& a, const QPoly& b);

/// True iff the coefficient list reads the same reversed. Zero polynomial is
/// rejected with DomainError.
bool is_palindromic(const QPoly& p);

/// Poincare polynomial of P^n: 1 + q + ... + q^n.
QPoly projective_poincare(int n);

/// Gaussian binomial [n choose k]_q, the Poincare polynomial of Gr(k, n).
QPoly grassmannian_poincare(int k, int n);

}  // namespace sheafwc
