#include "sheafwc/betti.hpp"

#include <map>
#include <numeric>
#include <optional>
#include <utility>

#include "sheafwc/errors.hpp"
#include "sheafwc/qrational.hpp"

namespace sheafwc::betti {

// ---------------------------------------------------------------- descriptors

SpaceDescriptor SpaceDescriptor::projective(int n) { return {Kind::Projective, {n}}; }
SpaceDescriptor SpaceDescriptor::grassmannian(int k, int n) { return {Kind::Grassmannian, {k, n}}; }
SpaceDescriptor SpaceDescriptor::hilb(int n) { return {Kind::Hilb, {n}}; }
SpaceDescriptor SpaceDescriptor::hilb_model(int n, int k) { return {Kind::HilbModel, {n, k}}; }
SpaceDescriptor SpaceDescriptor::kronecker(int m, int e, int f) { return {Kind::Kronecker, {m, e, f}}; }

SpaceDescriptor SpaceDescriptor::product(std::vector<SpaceDescriptor> factors) {
  if (factors.empty()) throw DomainError("empty product of spaces");
  return {Kind::Product, {}, std::move(factors)};
}

SpaceDescriptor SpaceDescriptor::bundle(SpaceDescriptor fiber, SpaceDescriptor base) {
  return {Kind::Bundle, {}, {std::move(fiber), std::move(base)}};
}

std::string SpaceDescriptor::str() const {
  auto p = [this](std::size_t i) { return std::to_string(params_.at(i)); };
  switch (kind_) {
    case Kind::Projective: return "P^" + p(0);
    case Kind::Grassmannian: return "Gr(" + p(0) + "," + p(1) + ")";
    case Kind::Hilb: return "Hilb^" + p(0);
    case Kind::HilbModel: return "(Hilb^" + p(0) + ")_" + p(1);
    case Kind::Kronecker: return "N(" + p(0) + ";" + p(1) + "," + p(2) + ")";
    case Kind::Product: {
      std::string out;
      for (const auto& f : parts_) out += (out.empty() ? "" : " x ") + f.str();
      return out;
    }
    case Kind::Bundle: return parts_[0].str() + "-bundle over " + parts_[1].str();
  }
  return "?";
}

// ---------------------------------------------------------------- Hilbert schemes

PoincarePolynomial hilb_poincare(int n) {
  if (n < 0 || n > 12) throw DomainError("hilb_poincare supports 0 <= n <= 12");
  // sum_n P(Hilb^n) z^n = prod_k prod_{s=k-1..k+1} 1/(1 - q^s z^k), truncated at z^n.
  std::vector<QPoly> series(static_cast<std::size_t>(n) + 1);
  series[0] = QPoly{1};
  for (int k = 1; k <= n; ++k) {
    for (int s = k - 1; s <= k + 1; ++s) {
      for (int deg = k; deg <= n; ++deg)
        series[static_cast<std::size_t>(deg)] += series[static_cast<std::size_t>(deg - k)].shifted(s);
    }
  }
  return series[static_cast<std::size_t>(n)];
}

PoincarePolynomial hilb_model_poincare(int n, int k) {
  const QPoly p2 = projective_poincare(2);
  if (k == 0) return hilb_poincare(n);
  if (n == 3 && k == 1) return hilb_poincare(3) + (projective_poincare(0) - projective_poincare(3)) * p2;
  if (n == 4 && k == 1) return hilb_poincare(4) + (projective_poincare(1) - projective_poincare(4)) * p2;
  if (n == 4 && k == 2)
    return hilb_model_poincare(4, 1) + (projective_poincare(0) - projective_poincare(3)) * (p2 * p2);
  if (n == 5 && k == 2)
    return hilb_poincare(5) + (projective_poincare(2) - projective_poincare(5)) * p2 +
           (projective_poincare(1) - projective_poincare(4)) * (p2 * p2);
  // Final model of Hilb^8: the Gr(2, 9)-bundle of cubic pencils through a point.
  if (n == 8 && k == 6) return grassmannian_poincare(2, 9) * p2;
  throw DomainError("no Poincare polynomial known for (Hilb^" + std::to_string(n) + ")_" + std::to_string(k));
}

// ---------------------------------------------------------------- Kronecker moduli

namespace {

// |GL_n(F_q)| = prod_{i<n} (q^n - q^i)
QPoly gl_order(long n) {
  QPoly out{1};
  for (long i = 0; i < n; ++i) out *= QPoly::monomial(static_cast<int>(n)) - QPoly::monomial(static_cast<int>(i));
  return out;
}

BigInt gl_order_at(long n, long p) { return gl_order(n).eval(BigInt(p)); }

// Harder-Narasimhan recursion for semistable stack counts A(e, f). One
// instance per top-level call; the memo is never shared across threads.
class HnRecursion {
 public:
  explicit HnRecursion(long m) : m_(m) {}

  const QRational& semistable(long e, long f) {
    const auto key = std::make_pair(e, f);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    QRational total = all_reps(e, f);
    QRational strata;
    dfs(e, f, e, f, std::nullopt, 0, 0, 0, QRational(QPoly{1}), 0, strata);
    return memo_.emplace(key, total - strata).first->second;
  }

 private:
  // ee' + ff' - m e f'
  long euler(long e, long f, long e2, long f2) const { return e * e2 + f * f2 - m_ * e * f2; }

  QRational all_reps(long e, long f) const {
    return QRational(QPoly::monomial(static_cast<int>(m_ * e * f)), gl_order(e) * gl_order(f));
  }

  // Enumerates ordered decompositions of (e, f) into nonzero parts with
  // strictly decreasing slope e_k / (e_k + f_k). `twist` accumulates
  // sum_{k<l} <d_l, d_k>, added one part at a time against the prefix sum.
  void dfs(long top_e, long top_f, long rem_e, long rem_f, const std::optional<Rational>& last, long pre_e,
           long pre_f, long twist, const QRational& product, int parts, QRational& acc) {
    if (rem_e == 0 && rem_f == 0) {
      if (parts >= 2) acc += QRational::q_power(static_cast<int>(-twist)) * product;
      return;
    }
    for (long a = 0; a <= rem_e; ++a) {
      for (long b = 0; b <= rem_f; ++b) {
        if (a == 0 && b == 0) continue;
        if (a == top_e && b == top_f) continue;
        const Rational slope(a, a + b);
        if (last && !(slope < *last)) continue;
        const long next_twist = twist + euler(a, b, pre_e, pre_f);
        dfs(top_e, top_f, rem_e - a, rem_f - b, slope, pre_e + a, pre_f + b, next_twist,
            product * semistable(a, b), parts + 1, acc);
      }
    }
  }

  long m_;
  std::map<std::pair<long, long>, QRational> memo_;
};

void check_dim_vector(DimVector dv) {
  if (dv.e < 0 || dv.f < 0 || (dv.e == 0 && dv.f == 0))
    throw DomainError("dimension vector must be nonnegative and nonzero");
  if (std::gcd(dv.e, dv.f) != 1) throw DomainError("dimension vector must be coprime");
}

}  // namespace

PoincarePolynomial kronecker_poincare(long m, DimVector dv) {
  if (m < 1) throw DomainError("Kronecker quiver needs at least one arrow");
  check_dim_vector(dv);
  HnRecursion hn(m);
  const QRational stable = QRational(QPoly{-1, 1}) * hn.semistable(dv.e, dv.f);
  const auto poly = stable.to_polynomial();
  if (!poly) throw ConventionError("HN recursion did not produce a polynomial: " + stable.str());
  for (const auto& c : poly->coefficients())
    if (c < 0) throw ConventionError("HN recursion produced a negative Betti number: " + poly->str());
  const long expected = m * dv.e * dv.f - dv.e * dv.e - dv.f * dv.f + 1;
  if (poly->is_zero() ? expected >= 0 : poly->degree() != expected)
    throw ConventionError("HN recursion produced degree " + std::to_string(poly->degree()) + ", expected " +
                          std::to_string(expected));
  return *poly;
}

// ---------------------------------------------------------------- finite-field oracle

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Rank over F_p of `rows` vectors of length `cols`, stored row-major; destroys input.
int rank_mod_p(std::vector<int>& a, int rows, int cols, int p) {
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r * cols + col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = 0; j < cols; ++j) std::swap(a[pivot * cols + j], a[rank * cols + j]);
    int inv = 1;
    while ((a[rank * cols + col] * inv) % p != 1) ++inv;
    for (int r = rank + 1; r < rows; ++r) {
      const int factor = (a[r * cols + col] * inv) % p;
      if (factor == 0) continue;
      for (int j = col; j < cols; ++j) a[r * cols + j] = ((a[r * cols + j] - factor * a[rank * cols + j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

// Every subspace of F_p^n, as a list of basis vectors in reduced row echelon form.
std::vector<std::vector<std::vector<int>>> all_subspaces(int n, int p) {
  std::vector<std::vector<std::vector<int>>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> pivots;
    for (int j = 0; j < n; ++j)
      if (mask & (1u << j)) pivots.push_back(j);
    const int k = static_cast<int>(pivots.size());
    // Free entries: row i, columns after pivots[i] that are not pivots.
    std::vector<std::pair<int, int>> free;
    for (int i = 0; i < k; ++i)
      for (int j = pivots[i] + 1; j < n; ++j)
        if (!(mask & (1u << j))) free.emplace_back(i, j);
    std::vector<int> digits(free.size(), 0);
    while (true) {
      std::vector<std::vector<int>> basis(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(n), 0));
      for (int i = 0; i < k; ++i) basis[i][pivots[i]] = 1;
      for (std::size_t t = 0; t < free.size(); ++t) basis[free[t].first][free[t].second] = digits[t];
      out.push_back(std::move(basis));
      std::size_t t = 0;
      while (t < digits.size() && ++digits[t] == p) digits[t++] = 0;
      if (t == digits.size()) break;
    }
  }
  return out;
}

class StabilityChecker {
 public:
  StabilityChecker(long m, long e, long f, int p)
      : m_(static_cast<int>(m)), e_(static_cast<int>(e)), f_(static_cast<int>(f)), p_(p),
        subspaces_(all_subspaces(e_, p)) {}

  // `maps` holds m matrices of shape f x e, row-major, concatenated.
  bool stable(const std::vector<int>& maps) const {
    std::vector<int> images;
    for (const auto& basis : subspaces_) {
      const int k = static_cast<int>(basis.size());
      // (E', F') with F' = sum_i phi_i(E') destabilizes iff k f - e dim F' > 0.
      images.assign(static_cast<std::size_t>(m_ * k * f_), 0);
      int row = 0;
      for (int i = 0; i < m_; ++i) {
        const int* phi = maps.data() + i * e_ * f_;
        for (const auto& v : basis) {
          for (int a = 0; a < f_; ++a) {
            int s = 0;
            for (int b = 0; b < e_; ++b) s += phi[a * e_ + b] * v[b];
            images[row * f_ + a] = s % p_;
          }
          ++row;
        }
      }
      const int dim_f = f_ == 0 ? 0 : rank_mod_p(images, m_ * k, f_, p_);
      if (k * f_ - e_ * dim_f > 0) return false;
    }
    return true;
  }

 private:
  int m_, e_, f_, p_;
  std::vector<std::vector<std::vector<int>>> subspaces_;
};

// Advances a base-p odometer over `digits[from, to)`; false once it wraps.
bool advance(std::vector<int>& digits, std::size_t from, std::size_t to, int p) {
  for (std::size_t i = from; i < to; ++i) {
    if (++digits[i] < p) return true;
    digits[i] = 0;
  }
  return false;
}

}  // namespace

BigInt brute_force_kronecker_count(long m, DimVector dv, long p) {
  if (m < 1) throw DomainError("Kronecker quiver needs at least one arrow");
  check_dim_vector(dv);
  if (!is_prime(p) || p > 7) throw DomainError("field size must be a prime <= 7");
  if (m * dv.e * dv.f > 20) throw DomainError("enumeration infeasible: m*e*f must be <= 20");
  const long block = dv.e * dv.f;
  BigInt work;
  mpz_ui_pow_ui(work.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>((m - 1) * block));
  if (work > 50'000'000) throw DomainError("enumeration infeasible for this field size");

  const int ip = static_cast<int>(p);
  const std::size_t bsz = static_cast<std::size_t>(block);
  StabilityChecker checker(m, dv.e, dv.f, ip);

  // Stability is invariant under GL_e x GL_f acting on all m maps at once, so
  // the first map can be fixed to a rank-normal form J_r, weighted by the
  // number of f x e matrices of rank r (itself counted by enumeration).
  const long max_rank = std::min(dv.e, dv.f);
  std::vector<BigInt> rank_count(static_cast<std::size_t>(max_rank) + 1, BigInt(0));
  {
    std::vector<int> phi(bsz, 0);
    do {
      std::vector<int> scratch = phi;
      ++rank_count[static_cast<std::size_t>(rank_mod_p(scratch, static_cast<int>(dv.f), static_cast<int>(dv.e), ip))];
    } while (advance(phi, 0, bsz, ip));
  }

  BigInt stable_count = 0;
  std::vector<int> maps(static_cast<std::size_t>(m) * bsz, 0);
  for (long r = 0; r <= max_rank; ++r) {
    if (rank_count[static_cast<std::size_t>(r)] == 0) continue;
    std::fill(maps.begin(), maps.end(), 0);
    for (long i = 0; i < r; ++i) maps[static_cast<std::size_t>(i * dv.e + i)] = 1;
    BigInt with_rank = 0;
    do {
      if (checker.stable(maps)) ++with_rank;
    } while (advance(maps, bsz, maps.size(), ip));
    stable_count += with_rank * rank_count[static_cast<std::size_t>(r)];
  }

  const BigInt numer = stable_count * (p - 1);
  const BigInt denom = gl_order_at(dv.e, p) * gl_order_at(dv.f, p);
  if (numer % denom != 0) throw ConventionError("stable locus count is not divisible by |PGL|");
  return numer / denom;
}

// ---------------------------------------------------------------- wall-crossing

ExtDims ext_dims_at_wall(long d, const ChernP2& destab) {
  const ChernP2 quotient = ktheory::moduli(d) - destab;
  const Rational chi_qs = ktheory::euler_hom(quotient, destab);
  const Rational chi_sq = ktheory::euler_hom(destab, quotient);
  if (chi_qs.sign() >= 0 || chi_sq.sign() >= 0)
    throw ConventionError("expected negative Euler characteristics at the wall of " + destab.str() + ", got " +
                          chi_qs.str() + " and " + chi_sq.str());
  return {(-chi_qs).to_long(), (-chi_sq).to_long()};
}

std::vector<WallRecord> m6_wall_records() {
  using S = SpaceDescriptor;
  return {
      {"W1", ChernP2(1, 3, Rational(-7, 2)), S::hilb_model(8, 6)},
      {"W1'", ChernP2(1, 2, -2), S::product({S::hilb_model(4, 2), S::hilb(2)})},
      {"W2", ChernP2(1, 1, Rational(-1, 2)), S::product({S::hilb_model(5, 2), S::projective(2)})},
      {"W3", ChernP2(1, 2, -1), S::product({S::hilb_model(3, 1), S::projective(2)})},
      {"W4", ChernP2(1, 1, Rational(1, 2)), S::hilb_model(4, 1)},
      {"W5", ChernP2(1, 2, 0), S::hilb(2)},
  };
}

PoincarePolynomial space_poincare(const SpaceDescriptor& sd) {
  const auto& p = sd.params();
  switch (sd.kind()) {
    case SpaceDescriptor::Kind::Projective: return projective_poincare(p.at(0));
    case SpaceDescriptor::Kind::Grassmannian: return grassmannian_poincare(p.at(0), p.at(1));
    case SpaceDescriptor::Kind::Hilb: return hilb_poincare(p.at(0));
    case SpaceDescriptor::Kind::HilbModel: return hilb_model_poincare(p.at(0), p.at(1));
    case SpaceDescriptor::Kind::Kronecker: return kronecker_poincare(p.at(0), {p.at(1), p.at(2)});
    case SpaceDescriptor::Kind::Product:
    case SpaceDescriptor::Kind::Bundle: {
      QPoly out{1};
      for (const auto& part : sd.parts()) out *= space_poincare(part);
      return out;
    }
  }
  throw DomainError("unsupported space descriptor");
}

QPoly wall_contribution(long d, const WallRecord& rec) {
  const ExtDims ext = ext_dims_at_wall(d, rec.destabilizer);
  return (projective_poincare(static_cast<int>(ext.forward - 1)) -
          projective_poincare(static_cast<int>(ext.backward - 1))) *
         space_poincare(rec.base);
}

SpaceDescriptor q6_descriptor() {
  return SpaceDescriptor::bundle(SpaceDescriptor::projective(17), SpaceDescriptor::kronecker(3, 5, 4));
}

PoincarePolynomial assemble_m6() {
  QPoly total = space_poincare(q6_descriptor());
  for (const auto& rec : m6_wall_records()) total += wall_contribution(6, rec);
  return total;
}

}  // namespace sheafwc::betti
