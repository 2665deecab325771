#include <doctest.h>

#include "sheafwc/divisors.hpp"
#include "sheafwc/errors.hpp"
#include "sheafwc/ktheory.hpp"
#include "support.hpp"

using namespace sheafwc;
using namespace sheafwc::divisors;

namespace {

DivisorAL al(const Rational& a, const Rational& l) { return {a, l}; }

Rational nef_coefficient(long d) {
  if (d % 2 == 0) return Rational((d - 2) * (d - 2) * (d + 2), 8);
  return Rational((d - 1) * (d + 4) * (d - 3), 8);
}

Rational wall_family_degree(long d) {
  if (d % 2 == 0) return Rational(-d * (d * d - 2 * d + 4), 8);
  return Rational(-(d - 1) * (d * d + d - 4), 8);
}

ChernP2 random_orthogonal(testsupport::Rng& rng, long d) {
  const ChernP2 v = ktheory::moduli(d);
  const ChernP2 a = rng.chern(), b = rng.chern();
  return ktheory::euler_product(b, v).to_long() * a - ktheory::euler_product(a, v).to_long() * b;
}

}  // namespace

TEST_CASE("printing") {
  CHECK(al(16, 1).str() == "16A + L");
  CHECK(kA.str() == "A");
  CHECK(kL.str() == "L");
  CHECK(al(-5, 1).str() == "-5A + L");
  CHECK(al(Rational(1, 2), -2).str() == "1/2A - 2L");
}

TEST_CASE("genus and first-wall destabilizers") {
  CHECK(genus(6) == 10);
  CHECK(genus(3) == 1);
  CHECK(genus(4) == 3);
  CHECK(first_wall_destabilizer(6) == ChernP2(1, 2, 0));
  CHECK(first_wall_destabilizer(5) == ChernP2(1, 1, Rational(1, 2)));
  CHECK(first_wall_destabilizer(4) == ChernP2(1, 1, Rational(-1, 2)));
  CHECK_THROWS_AS(first_wall_destabilizer(2), DomainError);
}

TEST_CASE("orthogonal wall classes") {
  CHECK(orthogonal_wall_class(ktheory::moduli(6), ChernP2(1, 2, 0)) == ChernP2(-6, 1, Rational(41, 2)));
  for (long d = 3; d <= 12; ++d)
    CHECK(orthogonal_wall_class(ktheory::moduli(d), ktheory::line_bundle(0)) ==
          ChernP2(-d, 1, Rational(d) - Rational(3, 2)));
  // -d + h + d(d^2-5)/8 h^2 at d = 5
  CHECK(orthogonal_wall_class(ktheory::moduli(5), ktheory::line_bundle(1)) == ChernP2(-5, 1, Rational(25, 2)));
  CHECK_THROWS_AS(orthogonal_wall_class(ktheory::moduli(6), ktheory::moduli(6)), DomainError);
}

TEST_CASE("lambda decomposition") {
  CHECK(lambda_decompose(ChernP2(-6, 1, Rational(41, 2)), 6) == al(16, 1));
  for (long d = 3; d <= 9; ++d) CHECK(lambda_decompose(ktheory::point(), d) == kA);
  CHECK(lambda_decompose(ChernP2(-6, 1, Rational(9, 2)), 6) == kL);
  CHECK_THROWS_AS(lambda_decompose(ktheory::line_bundle(0), 6), DomainError);
}

TEST_CASE("wall divisors") {
  CHECK(wall_divisor(6, ChernP2(1, 1, Rational(1, 2))) == al(11, 1));
  CHECK(wall_divisor(6, ChernP2(1, 3, Rational(-7, 2))) == al(3, 1));
  CHECK(wall_divisor(6, ChernP2(1, 2, -1)) == al(10, 1));
  CHECK(wall_divisor(5, ktheory::line_bundle(1)) == al(9, 1));
}

TEST_CASE("nef and effective cones") {
  CHECK(nef_generators(6).second == al(16, 1));
  CHECK(nef_generators(5).second == al(9, 1));
  CHECK(nef_generators(4).second == al(3, 1));
  CHECK(nef_generators(6).first == kA);
  CHECK(effective_generators(6) == std::make_pair(kA, kL));
  CHECK(effective_generators(3) == std::make_pair(kA, kL));
  CHECK_THROWS_AS(nef_generators(2), DomainError);
}

TEST_CASE("family classes") {
  CHECK(family_class(FamilyKind::Pencil, 6).chern.p_part() == chow::ChowP2{1, 0, 0});
  CHECK(family_class(FamilyKind::EvenWall, 6).chern.p_part() == chow::ChowP2{1, -4, 8});
  CHECK(family_class(FamilyKind::OddWall, 5).chern.p_part() == chow::ChowP2{1, 1, Rational(1, 2)});
  CHECK_THROWS_AS(family_class(FamilyKind::EvenWall, 5), DomainError);
  CHECK_THROWS_AS(family_class(FamilyKind::OddWall, 6), DomainError);
  CHECK(parse_family("even_wall") == FamilyKind::EvenWall);
  CHECK(family_name(FamilyKind::Jacobian) == "jacobian");
  CHECK_THROWS_AS(parse_family("conic"), DomainError);
}

TEST_CASE("intersection degrees on test curves") {
  for (long d = 3; d <= 12; ++d) {
    const auto pencil = family_class(FamilyKind::Pencil, d);
    const auto jac = family_class(FamilyKind::Jacobian, d);
    CHECK(intersection_degree(pencil, d_class(d)) == Rational(1 - d));
    CHECK(intersection_degree(jac, d_class(d)) == Rational(d * genus(d)));
    CHECK(intersection_degree(pencil, ktheory::point()) == 1);
    CHECK(intersection_degree(jac, ktheory::point()) == 0);
  }
  CHECK(intersection_degree(family_class(FamilyKind::EvenWall, 6), d_class(6)) == -21);
  CHECK(intersection_degree(family_class(FamilyKind::OddWall, 5), d_class(5)) == -13);
}

TEST_CASE("determinant divisor in the geometric basis") {
  CHECK(d_in_AL(6) == al(-5, 1));
  CHECK(d_in_AL(4) == al(-3, 1));
  CHECK(d_in_AL(3) == al(-2, 1));
  CHECK(d_class(6) == ChernP2(-6, 1, Rational(-1, 2)));
}

TEST_CASE("property: two routes to the nef generator") {
  for (long d = 3; d <= 12; ++d) {
    const DivisorAL b = al(nef_coefficient(d), 1);
    CHECK(wall_divisor(d, first_wall_destabilizer(d)) == b);
    const FamilyKind kind = d % 2 == 0 ? FamilyKind::EvenWall : FamilyKind::OddWall;
    CHECK(intersection_degree(family_class(kind, d), d_class(d)) == wall_family_degree(d));
    CHECK(nef_via_wall_family(d) == b);
    CHECK(nef_closed_form(d) == b);
    CHECK(wall_divisor(d, ktheory::line_bundle(0)) == kL);
  }
}

TEST_CASE("property: lambda is linear") {
  testsupport::Rng rng(51);
  for (int i = 0; i < testsupport::kCases; ++i) {
    const long d = rng.integer(3, 12);
    const ChernP2 w1 = random_orthogonal(rng, d), w2 = random_orthogonal(rng, d);
    REQUIRE(ktheory::euler_product(w1, ktheory::moduli(d)) == 0);
    CHECK(lambda_decompose(w1 + w2, d) == lambda_decompose(w1, d) + lambda_decompose(w2, d));
    const long k = rng.integer(-5, 5);
    const DivisorAL lw = lambda_decompose(w1, d);
    CHECK(lambda_decompose(k * w1, d) == al(Rational(k) * lw.a, Rational(k) * lw.l));
  }
}

TEST_CASE("property: p-free terms do not change intersection degrees") {
  testsupport::Rng rng(52);
  const FamilyKind kinds[] = {FamilyKind::Pencil, FamilyKind::Jacobian, FamilyKind::EvenWall, FamilyKind::OddWall};
  for (int i = 0; i < testsupport::kCases; ++i) {
    const FamilyKind kind = kinds[rng.integer(0, 3)];
    long d = rng.integer(4, 12);
    if (kind == FamilyKind::EvenWall && d % 2 != 0) ++d;
    if (kind == FamilyKind::OddWall && d % 2 == 0) ++d;
    const FamilyClass fam = family_class(kind, d);
    FamilyClass perturbed = fam;
    perturbed.chern = fam.chern + chow::ChowCurveP2::pullback({rng.rational(), rng.rational(), rng.rational()});
    const ChernP2 w = rng.chern();
    CHECK(intersection_degree(perturbed, w) == intersection_degree(fam, w));
  }
}
