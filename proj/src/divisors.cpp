#include "sheafwc/divisors.hpp"

#include <array>

#include "sheafwc/errors.hpp"

namespace sheafwc::divisors {

using chow::ChowCurveP2;
using chow::ChowP2;
using chow::exp_class;

namespace {

std::string coefficient_term(const Rational& coef, const char* symbol) {
  if (coef == Rational(1)) return symbol;
  if (coef == Rational(-1)) return std::string("-") + symbol;
  return coef.str() + symbol;
}

void require_degree(long d) {
  if (d < 3) throw DomainError("M_d divisor computations require d >= 3, got " + std::to_string(d));
}

// Coefficients of w -> euler_product(w, v) on w = (r, c, e).
std::array<Rational, 3> pairing_row(const ChernP2& v) {
  const Rational r(v.r()), c(v.c());
  return {v.e() + Rational(3, 2) * c + r, c + Rational(3, 2) * r, r};
}

}  // namespace

std::string DivisorAL::str() const {
  if (a.is_zero() && l.is_zero()) return "0";
  if (l.is_zero()) return coefficient_term(a, "A");
  if (a.is_zero()) return coefficient_term(l, "L");
  const std::string lt = coefficient_term(abs(l), "L");
  return coefficient_term(a, "A") + (l.sign() < 0 ? " - " : " + ") + lt;
}

long genus(long d) {
  if (d < 1) throw DomainError("genus of a plane curve requires d >= 1");
  return (d - 1) * (d - 2) / 2;
}

ChernP2 first_wall_destabilizer(long d) {
  if (d < 3) throw DomainError("first wall is defined for d >= 3");
  if (d % 2 == 0) return ktheory::ideal_twisted((d - 2) / 2, (d - 2) / 2);
  return ktheory::line_bundle((d - 3) / 2);
}

ChernP2 orthogonal_wall_class(const ChernP2& v, const ChernP2& vprime) {
  const auto x = pairing_row(v);
  const auto y = pairing_row(vprime);
  const Rational kr = x[1] * y[2] - x[2] * y[1];
  const Rational kc = x[2] * y[0] - x[0] * y[2];
  const Rational ke = x[0] * y[1] - x[1] * y[0];
  if (kr.is_zero() && kc.is_zero() && ke.is_zero())
    throw DomainError("rank-deficient orthogonality system for " + v.str() + " and " + vprime.str());
  if (kc.is_zero()) throw DomainError("orthogonal class has c1 = 0 and cannot be normalized");
  const Rational r = kr / kc;
  if (!r.is_integer()) throw DomainError("orthogonal class has non-integral rank " + r.str());
  return {r.to_long(), 1, ke / kc};
}

DivisorAL lambda_decompose(const ChernP2& w, long d) {
  if (!ktheory::euler_product(w, ktheory::moduli(d)).is_zero())
    throw DomainError(w.str() + " is not orthogonal to the class of M_" + std::to_string(d));
  // Orthogonality forces r = -d c, so w = alpha (0,0,1) + beta (-d,1,-1/2)
  // with beta = c; then lambda(0,0,1) = A and lambda(-d,1,-1/2) = D = (1-d)A + L.
  const Rational beta(w.c());
  const Rational alpha = w.e() + beta / 2;
  return {alpha + beta * Rational(1 - d), beta};
}

DivisorAL wall_divisor(long d, const ChernP2& vprime) {
  return lambda_decompose(orthogonal_wall_class(ktheory::moduli(d), vprime), d);
}

DivisorAL nef_closed_form(long d) {
  require_degree(d);
  if (d % 2 == 0) return {Rational((d - 2) * (d - 2) * (d + 2), 8), 1};
  return {Rational((d - 1) * (d + 4) * (d - 3), 8), 1};
}

std::pair<DivisorAL, DivisorAL> nef_generators(long d) {
  require_degree(d);
  const DivisorAL b = wall_divisor(d, first_wall_destabilizer(d));
  if (b != nef_closed_form(d))
    throw ConventionError("first-wall divisor " + b.str() + " disagrees with closed form " + nef_closed_form(d).str());
  return {kA, b};
}

DivisorAL nef_via_wall_family(long d) {
  require_degree(d);
  const FamilyKind kind = d % 2 == 0 ? FamilyKind::EvenWall : FamilyKind::OddWall;
  const Rational c = -intersection_degree(family_class(kind, d), d_class(d));
  return d_in_AL(d) + DivisorAL{c, 0};
}

std::pair<DivisorAL, DivisorAL> effective_generators(long d) {
  require_degree(d);
  const DivisorAL collapsing = wall_divisor(d, ktheory::line_bundle(0));
  if (collapsing != kL) throw ConventionError("collapsing-wall divisor is " + collapsing.str() + ", expected L");
  return {kA, collapsing};
}

FamilyKind parse_family(std::string_view name) {
  if (name == "pencil") return FamilyKind::Pencil;
  if (name == "jacobian") return FamilyKind::Jacobian;
  if (name == "evenwall" || name == "even_wall") return FamilyKind::EvenWall;
  if (name == "oddwall" || name == "odd_wall") return FamilyKind::OddWall;
  throw DomainError("unknown family '" + std::string(name) + "'");
}

std::string family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Pencil: return "pencil";
    case FamilyKind::Jacobian: return "jacobian";
    case FamilyKind::EvenWall: return "evenwall";
    case FamilyKind::OddWall: return "oddwall";
  }
  return "?";
}

FamilyClass family_class(FamilyKind kind, long d) {
  if (d < 1) throw DomainError("family degree must be positive");
  const Rational dd(d);
  const Rational g(genus(d));
  const ChowCurveP2 h2(0, 0, 1, 0, 0, 0);
  ChowCurveP2 ch;
  switch (kind) {
    case FamilyKind::Pencil:
      ch = exp_class(1, 0) - exp_class(0, -dd) + g * h2;
      break;
    case FamilyKind::Jacobian:
      ch = ChowCurveP2(0, dd, g - dd * dd / 2, 0, dd, Rational(1) - g - Rational(3, 2) * dd);
      break;
    case FamilyKind::EvenWall:
      if (d % 2 != 0) throw DomainError("even-wall family needs even d");
      if (d < 4) throw DomainError("even-wall family needs d >= 4");
      // The subscheme term is p-free: it cannot reach the ph^2 coefficient.
      ch = exp_class(0, Rational(d - 2, 2)) - exp_class(-1, Rational(-(d + 2), 2)) - Rational(d - 2, 2) * h2;
      break;
    case FamilyKind::OddWall:
      if (d % 2 == 0) throw DomainError("odd-wall family needs odd d");
      if (d < 3) throw DomainError("odd-wall family needs d >= 3");
      // Skyscraper at a fixed point swept over the pencil: h^2, p-free.
      ch = exp_class(1, Rational(d - 3, 2)) - exp_class(0, Rational(-(d + 3), 2)) + h2;
      break;
  }
  return {ch, kind, d};
}

Rational intersection_degree(const FamilyClass& fam, const ChernP2& w) {
  const ChowCurveP2 integrand = fam.chern * chow::todd_relative() * ChowCurveP2::pullback(w.as_chow());
  return chow::coeff(integrand, chow::Monomial::PH2);
}

ChernP2 d_class(long d) { return (-d) * ktheory::line_bundle(0) + ktheory::line_support(0); }

TestCurveConstants test_curve_constants(long d) {
  require_degree(d);
  return {1, 0, 0, Rational(d * genus(d))};
}

DivisorAL d_in_AL(long d) {
  require_degree(d);
  const ChernP2 dc = d_class(d);
  const Rational d_dot_p = intersection_degree(family_class(FamilyKind::Pencil, d), dc);
  const Rational d_dot_t = intersection_degree(family_class(FamilyKind::Jacobian, d), dc);
  const TestCurveConstants k = test_curve_constants(d);
  // [A.P L.P; A.T L.T] (a, l)^T = (D.P, D.T)^T
  const Rational det = k.a_dot_p * k.l_dot_t - k.l_dot_p * k.a_dot_t;
  if (det.is_zero()) throw ConventionError("test curves do not separate A and L");
  return {(d_dot_p * k.l_dot_t - k.l_dot_p * d_dot_t) / det, (k.a_dot_p * d_dot_t - d_dot_p * k.a_dot_t) / det};
}

}  // namespace sheafwc::divisors
