#include "sheafwc/chow.hpp"

#include "sheafwc/errors.hpp"

namespace sheafwc::chow {

ChowP2 operator*(const ChowP2& a, const ChowP2& b) {
  return {a.c0 * b.c0, a.c0 * b.c1 + a.c1 * b.c0, a.c0 * b.c2 + a.c1 * b.c1 + a.c2 * b.c0};
}

ChowCurveP2 mul(const ChowCurveP2& x, const ChowCurveP2& y) {
  // (a + p b)(c + p d) = ac + p(ad + bc), since p^2 = 0.
  return {x.base_ * y.base_, x.base_ * y.p_ + x.p_ * y.base_};
}

Monomial parse_monomial(std::string_view tag) {
  if (tag == "1") return Monomial::One;
  if (tag == "h") return Monomial::H;
  if (tag == "h^2" || tag == "h2") return Monomial::H2;
  if (tag == "p") return Monomial::P;
  if (tag == "ph") return Monomial::PH;
  if (tag == "ph^2" || tag == "ph2") return Monomial::PH2;
  throw DomainError("unknown Chow monomial '" + std::string(tag) + "'");
}

std::string ChowCurveP2::str() const {
  return base_.c0.str() + " + " + base_.c1.str() + "·h + " + base_.c2.str() + "·h^2 + " + p_.c0.str() +
         "·p + " + p_.c1.str() + "·p h + " + p_.c2.str() + "·p h^2";
}

ChowCurveP2 exp_class(const Rational& alpha, const Rational& beta) {
  const ChowP2 eh{1, beta, beta * beta / 2};
  return {eh, alpha * eh};
}

ChowCurveP2 todd_relative() { return {ChowP2{1, Rational(3, 2), 1}, ChowP2{}}; }

Rational coeff(const ChowCurveP2& x, Monomial m) {
  switch (m) {
    case Monomial::One: return x.base().c0;
    case Monomial::H: return x.base().c1;
    case Monomial::H2: return x.base().c2;
    case Monomial::P: return x.p_part().c0;
    case Monomial::PH: return x.p_part().c1;
    case Monomial::PH2: return x.p_part().c2;
  }
  throw DomainError("unknown Chow monomial tag");
}

}  // namespace sheafwc::chow
