#include "sheafwc/walls.hpp"

#include <algorithm>

#include "sheafwc/divisors.hpp"
#include "sheafwc/errors.hpp"

namespace sheafwc::walls {

using ktheory::moduli;

Wall::Wall(Rational center, Rational radius_sq) : center_(std::move(center)), radius_sq_(std::move(radius_sq)) {
  if (radius_sq_.sign() <= 0) throw DomainError("empty wall: radius_sq = " + radius_sq_.str());
}

namespace {

// (center, radius_sq) before the emptiness check.
std::pair<Rational, Rational> wall_parameters(const ChernP2& v, const ChernP2& w) {
  const Rational r(v.r()), c(v.c()), rr(w.r()), cc(w.c());
  const Rational denom = r * cc - rr * c;
  if (denom.is_zero()) throw DomainError("no semicircular wall between " + v.str() + " and " + w.str());
  const Rational x = (r * w.e() - rr * v.e()) / denom;
  return {x, x * x - Rational(2) * (c * w.e() - cc * v.e()) / denom};
}

}  // namespace

Wall wall_between(const ChernP2& v, const ChernP2& w) {
  auto [x, radius_sq] = wall_parameters(v, w);
  if (radius_sq.sign() <= 0) throw DomainError("empty wall between " + v.str() + " and " + w.str());
  return {x, radius_sq};
}

std::vector<PotentialWall> enumerate_potential_walls(long d) {
  if (d < 3) throw DomainError("wall enumeration requires d >= 3");
  const ChernP2 v = moduli(d);
  const Rational lo = wall_between(v, ktheory::line_bundle(0)).radius_sq();
  const Rational hi = wall_between(v, divisors::first_wall_destabilizer(d)).radius_sq();

  std::vector<PotentialWall> out;
  for (long c = 0; 2 * c <= d; ++c) {
    // radius_sq grows with ch2 at fixed c, so walk ch2 down from its maximum
    // c^2/2 until the wall falls inside the collapsing wall.
    for (Rational e(c * c, 2);; e -= 1) {
      const ChernP2 w(1, c, e);
      const auto [x, radius_sq] = wall_parameters(v, w);
      if (radius_sq < lo) break;
      if (radius_sq <= hi) out.push_back({w, Wall(x, radius_sq)});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const PotentialWall& a, const PotentialWall& b) {
    if (a.wall.radius_sq() != b.wall.radius_sq()) return a.wall.radius_sq() > b.wall.radius_sq();
    if (a.wall.center() != b.wall.center()) return a.wall.center() < b.wall.center();
    if (a.destabilizer.c() != b.destabilizer.c()) return a.destabilizer.c() < b.destabilizer.c();
    return a.destabilizer.e() > b.destabilizer.e();
  });
  return out;
}

ReferenceWallSystem abch_reference_walls(int n) {
  std::vector<Rational> xs;
  if (n == 8) {
    // W_{-17/2} has two destabilizers but is listed once; a repeated wall
    // cannot change an enclosure count.
    xs = {Rational(-17, 2), Rational(-15, 2), Rational(-13, 2), Rational(-11, 2),
          Rational(-5),     Rational(-9, 2),  Rational(-25, 6)};
  } else if (n == 4) {
    xs = {Rational(-9, 2), Rational(-7, 2), Rational(-3)};
  } else {
    throw DomainError("reference walls are tabulated only for Hilb^4 and Hilb^8");
  }
  ReferenceWallSystem sys{"hilb" + std::to_string(n), {}};
  for (const auto& x : xs) sys.walls.push_back({x, Wall(x, x * x - Rational(2 * n))});
  return sys;
}

ReferenceWallSystem transform_walls(const ReferenceWallSystem& ws, const WallTransform& op) {
  ReferenceWallSystem out{ws.label, {}};
  out.walls.reserve(ws.walls.size());
  std::visit(
      [&](const auto& t) {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, Twist>) {
          out.label += "|twist(" + std::to_string(t.n) + ")";
          for (const auto& rw : ws.walls)
            out.walls.push_back({rw.source_x, Wall(rw.wall.center() + Rational(t.n), rw.wall.radius_sq())});
        } else {
          out.label += "|dual";
          for (const auto& rw : ws.walls) out.walls.push_back({rw.source_x, Wall(-rw.wall.center(), rw.wall.radius_sq())});
        }
      },
      op);
  return out;
}

int locate_model(const Wall& wall, const ReferenceWallSystem& refs) {
  int count = 0;
  for (const auto& ref : refs.walls) {
    const Rational dx = wall.center() - ref.wall.center();
    const Rational dist_sq = dx * dx + wall.radius_sq();
    if (dist_sq == ref.wall.radius_sq())
      throw DomainError("top point of the wall lies exactly on reference wall W_" + ref.source_x.str());
    if (dist_sq < ref.wall.radius_sq()) ++count;
  }
  return count;
}

const std::vector<ActualWall>& m6_actual_walls() {
  static const std::vector<ActualWall> walls = {
      {"W5", ChernP2(1, 2, 0)},
      {"W4", ChernP2(1, 1, Rational(1, 2))},
      {"W3", ChernP2(1, 2, -1)},
      {"W2", ChernP2(1, 1, Rational(-1, 2))},
      {"W1'", ChernP2(1, 2, -2)},
      {"W1", ChernP2(1, 3, Rational(-7, 2))},
      {"W0", ChernP2(1, 0, 0)},
  };
  return walls;
}

}  // namespace sheafwc::walls
