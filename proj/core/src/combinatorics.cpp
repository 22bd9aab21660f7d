#include "shf/combinatorics.hpp"

#include <limits>

namespace shf {

Count checked_mul(Count a, Count b) {
  Count out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("shf: 64-bit overflow in multiplication");
  return out;
}

Count checked_add(Count a, Count b) {
  Count out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("shf: 64-bit overflow in addition");
  return out;
}

Count checked_pow(Count base, unsigned exponent) {
  Count out = 1;
  for (unsigned i = 0; i < exponent; ++i) out = checked_mul(out, base);
  return out;
}

Count binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  // C(n, i+1) = C(n, i) * (n-i) / (i+1) stays integral at every step.
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    acc = acc * (n - i) / (i + 1);
    if (acc > std::numeric_limits<Count>::max()) throw std::overflow_error("shf: binomial exceeds 64 bits");
  }
  return static_cast<Count>(acc);
}

Rational::Rational(Count n, Count d) : num(n), den(d) {
  if (d == 0) throw std::invalid_argument("shf: rational with zero denominator");
  const Count g = std::gcd(n, d);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

bool operator<(const Rational& a, const Rational& b) {
  const unsigned __int128 lhs = static_cast<unsigned __int128>(a.num) * b.den;
  const unsigned __int128 rhs = static_cast<unsigned __int128>(b.num) * a.den;
  return lhs < rhs;
}

}  // namespace shf
