#pragma once

#include <string>
#include <vector>

#include "sheafwc/ktheory.hpp"
#include "sheafwc/qpoly.hpp"

namespace sheafwc::betti {

/// Poincare polynomials here are QPoly with q^i <-> H^{2i}.
using PoincarePolynomial = QPoly;

/// A space whose Poincare polynomial is known to the engine.
class SpaceDescriptor {
 public:
  enum class Kind { Projective, Grassmannian, Hilb, HilbModel, Kronecker, Product, Bundle };

  static SpaceDescriptor projective(int n);
  static SpaceDescriptor grassmannian(int k, int n);
  static SpaceDescriptor hilb(int n);
  /// k-th Bridgeland birational model (Hilb^n)_k.
  static SpaceDescriptor hilb_model(int n, int k);
  static SpaceDescriptor kronecker(int m, int e, int f);
  static SpaceDescriptor product(std::vector<SpaceDescriptor> factors);
  /// Fiber bundle; Poincare polynomials multiply (Leray-Hirsch).
  static SpaceDescriptor bundle(SpaceDescriptor fiber, SpaceDescriptor base);

  Kind kind() const { return kind_; }
  const std::vector<int>& params() const { return params_; }
  const std::vector<SpaceDescriptor>& parts() const { return parts_; }

  std::string str() const;

 private:
  SpaceDescriptor(Kind kind, std::vector<int> params, std::vector<SpaceDescriptor> parts = {})
      : kind_(kind), params_(std::move(params)), parts_(std::move(parts)) {}

  Kind kind_;
  std::vector<int> params_;
  std::vector<SpaceDescriptor> parts_;
};

struct DimVector {
  long e;
  long f;
};

/// Poincare polynomial of Hilb^n(P^2), 0 <= n <= 12, from Goettsche's product
/// formula.
PoincarePolynomial hilb_poincare(int n);

/// Poincare polynomial of (Hilb^n)_k for the models that occur in M_6.
PoincarePolynomial hilb_model_poincare(int n, int k);

/// Poincare polynomial of the Kronecker moduli N(m; e, f), via the
/// Harder-Narasimhan recursion on stack counts. gcd(e, f) must be 1.
PoincarePolynomial kronecker_poincare(long m, DimVector dv);

/// Number of stable representations over F_p, times (p-1) / |GL_e x GL_f|:
/// the value at q = p of kronecker_poincare(m, dv), counted by enumeration.
BigInt brute_force_kronecker_count(long m, DimVector dv, long p);

struct ExtDims {
  long forward;   ///< ext^1(Q, S): fiber dimension + 1 on the flipped-in side
  long backward;  ///< ext^1(S, Q)
  friend bool operator==(const ExtDims&, const ExtDims&) = default;
};

/// Ext dimensions between the destabilizing subobject S and the quotient
/// Q = moduli(d) - S at a wall, assuming exactly one Ext group survives.
ExtDims ext_dims_at_wall(long d, const ChernP2& destab);

struct WallRecord {
  std::string label;
  ChernP2 destabilizer;
  SpaceDescriptor base;
};

/// Walls of M_6 with the bases of their exceptional loci, in the order
/// W_1, W_1', W_2, W_3, W_4, W_5.
std::vector<WallRecord> m6_wall_records();

PoincarePolynomial space_poincare(const SpaceDescriptor& sd);

/// (P(P^{a-1}) - P(P^{b-1})) * P(base) for ext dims (a, b).
QPoly wall_contribution(long d, const WallRecord& rec);

/// Q_6: the P^17-bundle over N_6 = N(3; 5, 4).
SpaceDescriptor q6_descriptor();

/// P(M_6) = P(Q_6) + sum of the six wall contributions.
PoincarePolynomial assemble_m6();

}  // namespace sheafwc::betti
