#include "sheafwc/qrational.hpp"

#include "sheafwc/errors.hpp"

namespace sheafwc {

QRational::QRational(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  reduce();
}

QRational QRational::q_power(int k) {
  if (k >= 0) return QRational(QPoly::monomial(k), QPoly{1}, Raw{});
  return QRational(QPoly{1}, QPoly::monomial(-k), Raw{});
}

void QRational::reduce() {
  if (num_.is_zero()) {
    den_ = QPoly{1};
    return;
  }
  const QPoly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = *exact_quotient(num_, g);
    den_ = *exact_quotient(den_, g);
  }
  BigInt c;
  const BigInt cn = num_.content();
  const BigInt cd = den_.content();
  mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (den_.leading() < 0) c = -c;
  if (c != 1) {
    num_ = *exact_quotient(num_, QPoly::constant(c));
    den_ = *exact_quotient(den_, QPoly::constant(c));
  }
}

std::optional<QPoly> QRational::to_polynomial() const { return exact_quotient(num_, den_); }

QRational QRational::operator-() const { return QRational(-num_, den_, Raw{}); }

QRational operator+(const QRational& a, const QRational& b) {
  if (a.den_ == b.den_) return QRational(a.num_ + b.num_, a.den_);
  return QRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QRational operator-(const QRational& a, const QRational& b) { return a + (-b); }

QRational operator*(const QRational& a, const QRational& b) {
  return QRational(a.num_ * b.num_, a.den_ * b.den_);
}

QRational operator/(const QRational& a, const QRational& b) {
  if (b.is_zero()) throw DomainError("division by the zero rational function");
  return QRational(a.num_ * b.den_, a.den_ * b.num_);
}

std::string QRational::str() const { return "(" + num_.str() + ") / (" + den_.str() + ")"; }

}  // namespace sheafwc
