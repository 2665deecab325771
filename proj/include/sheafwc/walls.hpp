#pragma once

#include <string>
#include <variant>
#include <vector>

#include "sheafwc/ktheory.hpp"
#include "sheafwc/rational.hpp"

namespace sheafwc::walls {

/// A potential Bridgeland wall: the semicircle with the given center on the
/// x-axis and squared radius. Radii are compared through radius_sq only, so
/// no irrational number is ever formed.
class Wall {
 public:
  Wall(Rational center, Rational radius_sq);

  const Rational& center() const { return center_; }
  const Rational& radius_sq() const { return radius_sq_; }

  friend bool operator==(const Wall&, const Wall&) = default;

 private:
  Rational center_;
  Rational radius_sq_;
};

/// Semicircular wall along which v and w have equal phase.
Wall wall_between(const ChernP2& v, const ChernP2& w);

struct PotentialWall {
  ChernP2 destabilizer;
  Wall wall;
};

/// Rank-one potential destabilizers of moduli(d) whose walls lie between the
/// collapsing wall and the first wall, largest first. Candidates sharing a
/// wall are adjacent.
std::vector<PotentialWall> enumerate_potential_walls(long d);

struct ReferenceWall {
  Rational source_x;  ///< parameter x of the untransformed wall W_x
  Wall wall;
};

struct ReferenceWallSystem {
  std::string label;
  std::vector<ReferenceWall> walls;  ///< descending radius_sq
};

/// Walls of Hilb^n(P^2) from the Arcara-Bertram-Coskun-Huizenga list, for
/// n in {4, 8}: centers x with radius_sq = x^2 - 2n.
ReferenceWallSystem abch_reference_walls(int n);

struct Twist {
  long n;
};
struct Dual {};
using WallTransform = std::variant<Twist, Dual>;

ReferenceWallSystem transform_walls(const ReferenceWallSystem& ws, const WallTransform& op);

/// Number of reference walls strictly enclosing the top point of `wall`, i.e.
/// the index k of the birational model (Hilb^n)_k in whose chamber it sits.
int locate_model(const Wall& wall, const ReferenceWallSystem& refs);

/// Actual walls of M_6 with their destabilizing subobjects, largest first
/// (W_5, W_4, W_3, W_2, W_1', W_1, W_0).
struct ActualWall {
  std::string label;
  ChernP2 destabilizer;
};
const std::vector<ActualWall>& m6_actual_walls();

}  // namespace sheafwc::walls
