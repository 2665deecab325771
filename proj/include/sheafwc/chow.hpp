#pragma once

#include <string>
#include <string_view>

#include "sheafwc/rational.hpp"

namespace sheafwc::chow {

/// Class in A*(P^2) on the basis {1, h, h^2}; h^3 = 0.
struct ChowP2 {
  Rational c0, c1, c2;

  friend ChowP2 operator+(const ChowP2& a, const ChowP2& b) { return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2}; }
  friend ChowP2 operator-(const ChowP2& a, const ChowP2& b) { return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2}; }
  friend ChowP2 operator*(const ChowP2& a, const ChowP2& b);
  friend ChowP2 operator*(const Rational& s, const ChowP2& a) { return {s * a.c0, s * a.c1, s * a.c2}; }
  friend bool operator==(const ChowP2&, const ChowP2&) = default;
};

enum class Monomial { One, H, H2, P, PH, PH2 };

/// Parses "1", "h", "h^2", "p", "ph", "ph^2"; anything else is a DomainError.
Monomial parse_monomial(std::string_view tag);

/// Class in A*(B x P^2) for a curve B with point class p, on the basis
/// {1, h, h^2, p, ph, ph^2}; p^2 = 0 and h^3 = 0. Stored as base + p * fiber.
class ChowCurveP2 {
 public:
  ChowCurveP2() = default;
  ChowCurveP2(ChowP2 base, ChowP2 p_part) : base_(std::move(base)), p_(std::move(p_part)) {}
  ChowCurveP2(const Rational& a1, const Rational& ah, const Rational& ah2, const Rational& ap,
              const Rational& aph, const Rational& aph2)
      : base_{a1, ah, ah2}, p_{ap, aph, aph2} {}

  /// Pull-back of a class on the plane.
  static ChowCurveP2 pullback(const ChowP2& x) { return {x, ChowP2{}}; }

  const ChowP2& base() const { return base_; }
  const ChowP2& p_part() const { return p_; }
  bool is_p_free() const { return p_ == ChowP2{}; }

  friend ChowCurveP2 operator+(const ChowCurveP2& a, const ChowCurveP2& b) { return {a.base_ + b.base_, a.p_ + b.p_}; }
  friend ChowCurveP2 operator-(const ChowCurveP2& a, const ChowCurveP2& b) { return {a.base_ - b.base_, a.p_ - b.p_}; }
  friend ChowCurveP2 operator*(const Rational& s, const ChowCurveP2& a) { return {s * a.base_, s * a.p_}; }
  friend ChowCurveP2 operator*(const ChowCurveP2& a, const ChowCurveP2& b) { return mul(a, b); }
  friend bool operator==(const ChowCurveP2&, const ChowCurveP2&) = default;

  friend ChowCurveP2 mul(const ChowCurveP2& x, const ChowCurveP2& y);

  /// "c + c·h + c·h^2 + c·p + c·p h + c·p h^2"
  std::string str() const;

 private:
  ChowP2 base_;
  ChowP2 p_;
};

/// exp(alpha p + beta h), truncated.
ChowCurveP2 exp_class(const Rational& alpha, const Rational& beta);

/// Relative Todd class of (B x P^2)/B, i.e. Td(P^2) = 1 + 3/2 h + h^2.
ChowCurveP2 todd_relative();

Rational coeff(const ChowCurveP2& x, Monomial m);

}  // namespace sheafwc::chow
