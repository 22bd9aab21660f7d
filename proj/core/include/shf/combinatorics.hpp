#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace shf {

using Count = std::uint64_t;

/// Exact binomial coefficient. Returns 0 when k > n.
/// Throws std::overflow_error if the value does not fit in 64 bits.
Count binomial(std::uint64_t n, std::uint64_t k);

/// Checked 64-bit arithmetic; throws std::overflow_error on wrap.
Count checked_mul(Count a, Count b);
Count checked_add(Count a, Count b);
Count checked_pow(Count base, unsigned exponent);

/// Nonnegative rational kept in lowest terms.
struct Rational {
  Count num = 0;
  Count den = 1;

  Rational() = default;
  Rational(Count n, Count d);

  friend bool operator==(const Rational&, const Rational&) = default;
  std::string to_string() const;
};

bool operator<(const Rational& a, const Rational& b);
inline bool operator>(const Rational& a, const Rational& b) { return b < a; }
inline bool operator<(const Rational& a, Count b) { return a < Rational(b, 1); }
inline bool operator>(const Rational& a, Count b) { return Rational(b, 1) < a; }

/// Visits every k-subset of `pool` in lexicographic order of positions.
/// The callback receives the current subset and returns false to stop early.
/// Returns false iff the callback stopped the enumeration.
template <typename T, typename Fn>
bool for_each_combination(std::span<const T> pool, std::size_t k, Fn&& fn) {
  const std::size_t n = pool.size();
  if (k > n) return true;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::vector<T> current(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) current[i] = pool[idx[i]];
    if (!fn(std::span<const T>(current))) return false;
    // Advance the rightmost index that still has room.
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace shf
