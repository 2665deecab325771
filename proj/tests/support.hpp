#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "sheafwc/ktheory.hpp"
#include "sheafwc/qpoly.hpp"
#include "sheafwc/rational.hpp"

namespace testsupport {

inline constexpr int kCases = 200;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

  sheafwc::Rational rational(long bound = 12) {
    const long den = integer(1, bound);
    return {integer(-bound * den, bound * den), den};
  }

  // A random integral class: ch2 = c^2/2 + k.
  sheafwc::ChernP2 chern(long bound = 6) {
    const long r = integer(-bound, bound);
    const long c = integer(-bound, bound);
    return {r, c, sheafwc::Rational(c * c, 2) + sheafwc::Rational(integer(-bound * 2, bound * 2))};
  }

 private:
  std::mt19937_64 gen_;
};

// Partitions of n, each as a list of parts.
inline std::vector<std::vector<int>> partitions(int n, int max_part = -1) {
  if (max_part < 0) max_part = n;
  if (n == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int first = std::min(n, max_part); first >= 1; --first)
    for (auto rest : partitions(n - first, first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  return out;
}

// Betti numbers of Hilb^n(P^2) from torus-fixed points: triples of partitions
// (one per fixed point of P^2), with cell dimension |a|-l(a) + |b| + |c|+l(c).
inline sheafwc::QPoly hilb_fixed_point_oracle(int n) {
  std::vector<sheafwc::BigInt> coeffs(static_cast<std::size_t>(2 * n) + 1, 0);
  for (int n0 = 0; n0 <= n; ++n0)
    for (int n1 = 0; n0 + n1 <= n; ++n1) {
      const int n2 = n - n0 - n1;
      for (const auto& a : partitions(n0))
        for (const auto& b : partitions(n1))
          for (const auto& c : partitions(n2)) {
            const auto la = static_cast<int>(a.size());
            const auto lc = static_cast<int>(c.size());
            ++coeffs[static_cast<std::size_t>((n0 - la) + n1 + (n2 + lc))];
          }
    }
  return sheafwc::QPoly(coeffs);
}

inline long partition_triples(int n) {
  long total = 0;
  for (int n0 = 0; n0 <= n; ++n0)
    for (int n1 = 0; n0 + n1 <= n; ++n1)
      total += static_cast<long>(partitions(n0).size() * partitions(n1).size() * partitions(n - n0 - n1).size());
  return total;
}

}  // namespace testsupport
