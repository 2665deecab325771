#pragma once

#include <string>
#include <string_view>

#include "sheafwc/chow.hpp"
#include "sheafwc/rational.hpp"

namespace sheafwc {

/// K-theory class on P^2 as its Chern character (rank, degree, ch2).
/// Construction enforces that ch2 - c^2/2 is an integer.
class ChernP2 {
 public:
  ChernP2() = default;
  ChernP2(long r, long c, const Rational& e);

  /// Parses "r,c,e", e.g. "1,3,-7/2".
  static ChernP2 parse(std::string_view text);

  long r() const { return r_; }
  long c() const { return c_; }
  const Rational& e() const { return e_; }

  /// The class as r + c h + e h^2 in A*(P^2).
  chow::ChowP2 as_chow() const { return {r_, c_, e_}; }

  friend ChernP2 operator+(const ChernP2& a, const ChernP2& b) { return {a.r_ + b.r_, a.c_ + b.c_, a.e_ + b.e_}; }
  friend ChernP2 operator-(const ChernP2& a, const ChernP2& b) { return {a.r_ - b.r_, a.c_ - b.c_, a.e_ - b.e_}; }
  friend ChernP2 operator*(long k, const ChernP2& a) { return {k * a.r_, k * a.c_, Rational(k) * a.e_}; }
  friend bool operator==(const ChernP2&, const ChernP2&) = default;

  /// "(r,c,e)"
  std::string str() const;

 private:
  long r_ = 0;
  long c_ = 0;
  Rational e_;
};

namespace ktheory {

ChernP2 line_bundle(long k);
/// I_Z(k) with |Z| = n.
ChernP2 ideal_twisted(long n, long k);
ChernP2 point();
/// O_l(k) for a line l.
ChernP2 line_support(long k);
/// Class of the sheaves in M_d: Hilbert polynomial dm + 1.
ChernP2 moduli(long d);

ChernP2 dual(const ChernP2& v);
ChernP2 twist(const ChernP2& v, long k);
ChernP2 shift(const ChernP2& v);

/// Riemann-Roch pairing of ch(v) ch(w) Td(P^2), with no dualization.
Rational euler_product(const ChernP2& v, const ChernP2& w);
/// sum (-1)^i ext^i(v, w) = euler_product(dual(v), w).
Rational euler_hom(const ChernP2& v, const ChernP2& w);

/// chi(v(m)) = quadratic m^2 + linear m + constant.
struct HilbertPolynomial {
  Rational quadratic, linear, constant;
  friend bool operator==(const HilbertPolynomial&, const HilbertPolynomial&) = default;
  std::string str() const;
};

HilbertPolynomial hilbert_polynomial(const ChernP2& v);

}  // namespace ktheory
}  // namespace sheafwc
