#pragma once

#include <optional>
#include <string>

#include "sheafwc/qpoly.hpp"

namespace sheafwc {

/// Rational function num/den in q with integer-coefficient numerator and
/// denominator. Common polynomial factors are cancelled on construction;
/// equality is decided by cross-multiplication.
class QRational {
 public:
  QRational() : num_(), den_(QPoly{1}) {}
  QRational(const QPoly& p) : num_(p), den_(QPoly{1}) {}  // NOLINT(google-explicit-constructor)
  QRational(QPoly num, QPoly den);

  /// q^k for any integer k.
  static QRational q_power(int k);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// The polynomial this function equals, if the denominator divides exactly.
  std::optional<QPoly> to_polynomial() const;

  QRational operator-() const;
  friend QRational operator+(const QRational& a, const QRational& b);
  friend QRational operator-(const QRational& a, const QRational& b);
  friend QRational operator*(const QRational& a, const QRational& b);
  friend QRational operator/(const QRational& a, const QRational& b);
  QRational& operator+=(const QRational& o) { return *this = *this + o; }
  QRational& operator-=(const QRational& o) { return *this = *this - o; }
  QRational& operator*=(const QRational& o) { return *this = *this * o; }

  friend bool operator==(const QRational& a, const QRational& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  std::string str() const;

 private:
  struct Raw {};
  QRational(QPoly num, QPoly den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
  void reduce();

  QPoly num_;
  QPoly den_;
};

}  // namespace sheafwc
