#include <doctest.h>

#include <optional>
#include <set>

#include "sheafwc/divisors.hpp"
#include "sheafwc/errors.hpp"
#include "sheafwc/ktheory.hpp"
#include "sheafwc/walls.hpp"
#include "support.hpp"

using namespace sheafwc;
using namespace sheafwc::walls;

TEST_CASE("walls between classes") {
  const Wall w5 = wall_between(ktheory::moduli(6), ChernP2(1, 2, 0));
  CHECK(w5.center() == Rational(-4, 3));
  CHECK(w5.radius_sq() == Rational(64, 9));
  const Wall t = wall_between(ChernP2(-1, 5, Rational(-17, 2)), ChernP2(-1, 4, -8));
  CHECK(t.center() == Rational(-1, 2));
  CHECK(t.radius_sq() == Rational(49, 4));
  const Wall w0 = wall_between(ktheory::moduli(6), ChernP2(1, 0, 0));
  CHECK(w0 == Wall(Rational(-4, 3), Rational(16, 9)));
  CHECK_THROWS_AS(wall_between(ChernP2(1, 1, Rational(1, 2)), ChernP2(2, 2, 1)), DomainError);
  CHECK_THROWS_AS(Wall(0, 0), DomainError);
}

TEST_CASE("potential walls of M_6") {
  const auto ws = enumerate_potential_walls(6);
  REQUIRE(ws.size() == 9);
  std::set<Rational> radii;
  for (const auto& pw : ws) radii.insert(pw.wall.radius_sq());
  for (const auto& r : {Rational(64, 9), Rational(49, 9), Rational(46, 9), Rational(31, 9), Rational(28, 9),
                        Rational(25, 9), Rational(16, 9), Rational(61, 9), Rational(43, 9)})
    CHECK(radii.count(r) == 1);
  CHECK(radii.size() == 9);
  for (const auto& pw : ws) {
    if (pw.wall.radius_sq() == Rational(25, 9)) CHECK(pw.destabilizer == ChernP2(1, 3, Rational(-7, 2)));
    if (pw.wall.radius_sq() == Rational(61, 9)) CHECK(pw.destabilizer == ChernP2(1, 3, Rational(-3, 2)));
    if (pw.wall.radius_sq() == Rational(43, 9)) CHECK(pw.destabilizer == ChernP2(1, 3, Rational(-5, 2)));
  }
  for (std::size_t i = 1; i < ws.size(); ++i) CHECK(ws[i - 1].wall.radius_sq() >= ws[i].wall.radius_sq());
}

TEST_CASE("small degrees") {
  const auto ws = enumerate_potential_walls(4);
  bool has_structure_sheaf = false;
  for (const auto& pw : ws) has_structure_sheaf |= pw.destabilizer == ktheory::line_bundle(0);
  CHECK(has_structure_sheaf);
  CHECK_THROWS_AS(enumerate_potential_walls(2), DomainError);
}

TEST_CASE("radius formula for d = 6") {
  for (const auto& pw : enumerate_potential_walls(6)) {
    const auto& v = pw.destabilizer;
    CHECK(v.r() == 1);
    CHECK(pw.wall.center() == Rational(-4, 3));
    CHECK(pw.wall.radius_sq() == Rational(16, 9) + (Rational(6) * v.e() + Rational(8 * v.c())) / Rational(3));
  }
}

TEST_CASE("reference systems and transforms") {
  const auto h8 = transform_walls(abch_reference_walls(8), Twist{3});
  bool found = false;
  for (const auto& rw : h8.walls)
    if (rw.source_x == Rational(-25, 6)) {
      found = true;
      CHECK(rw.wall == Wall(Rational(-7, 6), Rational(49, 36)));
    }
  CHECK(found);

  const auto h4 = transform_walls(transform_walls(abch_reference_walls(4), Dual{}), Twist{-5});
  REQUIRE(h4.walls.front().source_x == Rational(-9, 2));
  CHECK(h4.walls.front().wall == Wall(Rational(-1, 2), Rational(49, 4)));

  const auto base = abch_reference_walls(8);
  const auto same = transform_walls(base, Twist{0});
  REQUIRE(same.walls.size() == base.walls.size());
  for (std::size_t i = 0; i < base.walls.size(); ++i) CHECK(same.walls[i].wall == base.walls[i].wall);
  CHECK_THROWS_AS(abch_reference_walls(5), DomainError);
}

TEST_CASE("chamber location") {
  const auto h8 = transform_walls(abch_reference_walls(8), Twist{3});
  CHECK(locate_model(Wall(Rational(-4, 3), Rational(25, 9)), h8) == 6);
  const auto h4 = transform_walls(transform_walls(abch_reference_walls(4), Dual{}), Twist{-5});
  CHECK(locate_model(Wall(Rational(-4, 3), Rational(49, 9)), h4) == 1);
  CHECK(locate_model(Wall(0, 10000), h8) == 0);
  const Wall& top = h8.walls.front().wall;
  CHECK_THROWS_AS(locate_model(Wall(top.center(), top.radius_sq()), h8), DomainError);
}

TEST_CASE("actual walls of M_6") {
  const auto& ws = m6_actual_walls();
  REQUIRE(ws.size() == 7);
  const Rational expected[] = {Rational(64, 9), Rational(49, 9), Rational(46, 9), Rational(31, 9),
                               Rational(28, 9), Rational(25, 9), Rational(16, 9)};
  for (std::size_t i = 0; i < ws.size(); ++i)
    CHECK(wall_between(ktheory::moduli(6), ws[i].destabilizer).radius_sq() == expected[i]);
}

namespace {

// Wall of a random pair, or nothing if the pair has no wall.
std::optional<Wall> try_wall(const ChernP2& v, const ChernP2& w) {
  try {
    return wall_between(v, w);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

}  // namespace

TEST_CASE("property: twist, dual and shift equivariance") {
  testsupport::Rng rng(41);
  int tested = 0;
  for (int i = 0; i < 20 * testsupport::kCases && tested < testsupport::kCases; ++i) {
    const auto v = rng.chern(), w = rng.chern();
    const auto base = try_wall(v, w);
    if (!base) continue;
    ++tested;
    const long n = rng.integer(-5, 5);
    const auto tw = try_wall(ktheory::twist(v, n), ktheory::twist(w, n));
    REQUIRE(tw.has_value());
    CHECK(tw->center() == base->center() + Rational(n));
    CHECK(tw->radius_sq() == base->radius_sq());
    const auto dw = try_wall(ktheory::dual(v), ktheory::dual(w));
    REQUIRE(dw.has_value());
    CHECK(dw->center() == -base->center());
    CHECK(dw->radius_sq() == base->radius_sq());
    const auto sw = try_wall(ktheory::shift(v), ktheory::shift(w));
    REQUIRE(sw.has_value());
    CHECK(*sw == *base);
  }
  CHECK(tested >= 100);
}

TEST_CASE("property: enumerated radii lie in the window") {
  for (long d = 3; d <= 14; ++d) {
    const auto ws = enumerate_potential_walls(d);
    REQUIRE_FALSE(ws.empty());
    const Rational first = wall_between(ktheory::moduli(d), divisors::first_wall_destabilizer(d)).radius_sq();
    CHECK(ws.front().wall.radius_sq() == first);
    for (const auto& pw : ws) {
      CHECK(pw.wall.radius_sq().sign() > 0);
      CHECK(pw.wall.radius_sq() <= first);
      CHECK(wall_between(ktheory::moduli(d), pw.destabilizer) == pw.wall);
    }
    CHECK(ws.back().destabilizer == ktheory::line_bundle(0));
  }
}
