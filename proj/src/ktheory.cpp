#include "sheafwc/ktheory.hpp"

#include <vector>

#include "sheafwc/errors.hpp"

namespace sheafwc {

ChernP2::ChernP2(long r, long c, const Rational& e) : r_(r), c_(c), e_(e) {
  if (!(e_ - Rational(c_ * c_, 2)).is_integer())
    throw DomainError("not an integral class: ch2 - c1^2/2 must be an integer in (" + std::to_string(r) + "," +
                      std::to_string(c) + "," + e.str() + ")");
}

ChernP2 ChernP2::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    parts.push_back(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 3) throw DomainError("Chern character must be 'r,c,e', got '" + std::string(text) + "'");
  return {Rational::parse(parts[0]).to_long(), Rational::parse(parts[1]).to_long(), Rational::parse(parts[2])};
}

std::string ChernP2::str() const { return "(" + std::to_string(r_) + "," + std::to_string(c_) + "," + e_.str() + ")"; }

namespace ktheory {

ChernP2 line_bundle(long k) { return {1, k, Rational(k * k, 2)}; }

ChernP2 ideal_twisted(long n, long k) {
  if (n < 0) throw DomainError("ideal sheaf of a negative number of points");
  return {1, k, Rational(k * k, 2) - Rational(n)};
}

ChernP2 point() { return {0, 0, 1}; }

ChernP2 line_support(long k) { return {0, 1, Rational(k) - Rational(1, 2)}; }

ChernP2 moduli(long d) {
  if (d < 1) throw DomainError("M_d requires d >= 1");
  return {0, d, Rational(2 - 3 * d, 2)};
}

ChernP2 dual(const ChernP2& v) { return {v.r(), -v.c(), v.e()}; }

ChernP2 twist(const ChernP2& v, long k) {
  return {v.r(), v.c() + k * v.r(), v.e() + Rational(k * v.c()) + Rational(k * k * v.r(), 2)};
}

ChernP2 shift(const ChernP2& v) { return {-v.r(), -v.c(), -v.e()}; }

Rational euler_product(const ChernP2& v, const ChernP2& w) {
  const Rational r(v.r()), c(v.c()), rr(w.r()), cc(w.c());
  return (r * w.e() + c * cc + v.e() * rr) + Rational(3, 2) * (r * cc + c * rr) + r * rr;
}

Rational euler_hom(const ChernP2& v, const ChernP2& w) {
  const Rational r(v.r()), c(v.c()), rr(w.r()), cc(w.c());
  return (r * w.e() - c * cc + v.e() * rr) + Rational(3, 2) * (r * cc - c * rr) + r * rr;
}

std::string HilbertPolynomial::str() const {
  std::string out;
  auto term = [&out](const Rational& coef, const std::string& var) {
    if (coef.is_zero()) return;
    const bool neg = coef.sign() < 0;
    const Rational mag = abs(coef);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (var.empty() || mag != Rational(1)) out += mag.str();
    out += var;
  };
  term(quadratic, "m^2");
  term(linear, "m");
  term(constant, "");
  return out.empty() ? "0" : out;
}

HilbertPolynomial hilbert_polynomial(const ChernP2& v) {
  const Rational r(v.r()), c(v.c());
  return {r / 2, c + Rational(3, 2) * r, v.e() + Rational(3, 2) * c + r};
}

}  // namespace ktheory
}  // namespace sheafwc
