#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "sheafwc/chow.hpp"
#include "sheafwc/ktheory.hpp"
#include "sheafwc/rational.hpp"

namespace sheafwc::divisors {

/// Divisor class a*A + l*L on M_d, where A = lambda(O_p) and L is the
/// fixed-line incidence divisor.
struct DivisorAL {
  Rational a;
  Rational l;

  friend DivisorAL operator+(const DivisorAL& x, const DivisorAL& y) { return {x.a + y.a, x.l + y.l}; }
  friend DivisorAL operator-(const DivisorAL& x, const DivisorAL& y) { return {x.a - y.a, x.l - y.l}; }
  friend bool operator==(const DivisorAL&, const DivisorAL&) = default;

  /// e.g. "16A + L", "A", "L", "-5A + L".
  std::string str() const;
};

inline const DivisorAL kA{1, 0};
inline const DivisorAL kL{0, 1};

long genus(long d);

/// Class of the destabilizing subobject along the first wall of M_d:
/// I_Z((d-2)/2) with |Z| = (d-2)/2 for even d, O((d-3)/2) for odd d.
ChernP2 first_wall_destabilizer(long d);

/// The class w with euler_product(w, v) = euler_product(w, vprime) = 0,
/// normalized to c1(w) = 1.
ChernP2 orthogonal_wall_class(const ChernP2& v, const ChernP2& vprime);

/// lambda(w) in the (A, L) basis; w must be orthogonal to moduli(d).
DivisorAL lambda_decompose(const ChernP2& w, long d);

/// Divisor lambda(w) attached to the wall of M_d destabilized by vprime.
DivisorAL wall_divisor(long d, const ChernP2& vprime);

/// Closed form of the second nef generator B.
DivisorAL nef_closed_form(long d);

/// (A, B): extremal rays of the nef cone, with B taken at the first wall.
std::pair<DivisorAL, DivisorAL> nef_generators(long d);

/// B computed the other way: D + c*A where c makes the divisor vanish on the
/// test curve inside the first wall-crossing locus.
DivisorAL nef_via_wall_family(long d);

/// (A, L): extremal rays of the effective cone.
std::pair<DivisorAL, DivisorAL> effective_generators(long d);

// ---------------------------------------------------------------- GRR degrees

enum class FamilyKind { Pencil, Jacobian, EvenWall, OddWall };

FamilyKind parse_family(std::string_view name);
std::string family_name(FamilyKind kind);

/// Chern character of a one-parameter family of sheaves in M_d, as a class on
/// (parameter curve) x P^2.
struct FamilyClass {
  chow::ChowCurveP2 chern;
  FamilyKind kind;
  long degree_d;
};

FamilyClass family_class(FamilyKind kind, long d);

/// deg lambda(w) on the family's parameter curve, by Grothendieck-Riemann-Roch:
/// the ph^2 coefficient of ch(F) Td_rel ch(w).
Rational intersection_degree(const FamilyClass& fam, const ChernP2& w);

/// ch(-d O + O_l), the class defining the determinant divisor D.
ChernP2 d_class(long d);

/// Intersection numbers of A and L with the pencil P and the Jacobian curve T.
struct TestCurveConstants {
  Rational a_dot_p, l_dot_p, a_dot_t, l_dot_t;
};
TestCurveConstants test_curve_constants(long d);

/// D in the (A, L) basis, solved from its degrees on P and T.
DivisorAL d_in_AL(long d);

}  // namespace sheafwc::divisors
