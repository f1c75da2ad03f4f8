#pragma once

// Elements and vectors of Z_{2^s}, the four weight functions and the Z4 Gray map.

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "modcodes/error.hpp"

namespace modcodes {

/// The ring Z_{2^s}. Supported exponents are 1..8 so that elements fit a byte.
class RingSpec {
 public:
  static constexpr int kMaxExponent = 8;

  explicit RingSpec(int s);

  static RingSpec binary() { return RingSpec(1); }
  static RingSpec z4() { return RingSpec(2); }

  int s() const { return s_; }
  std::uint32_t modulus() const { return std::uint32_t{1} << s_; }
  /// The unique element of order two, 2^{s-1}.
  std::uint32_t half() const { return std::uint32_t{1} << (s_ - 1); }
  std::uint32_t mask() const { return modulus() - 1; }

  std::uint32_t reduce(std::int64_t x) const;
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) & mask(); }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a - b) & mask(); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return (a * b) & mask(); }
  std::uint32_t neg(std::uint32_t a) const { return (0u - a) & mask(); }

  /// 2-adic valuation of x in the ring; valuation(0) == s.
  int valuation(std::uint32_t x) const;
  bool is_unit(std::uint32_t x) const { return (x & 1u) != 0; }
  /// Inverse of an odd element.
  std::uint32_t inverse(std::uint32_t unit) const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  int s_;
};

enum class Metric { Hamming, Lee, Homogeneous, Euclidean };

inline constexpr std::array<Metric, 4> kAllMetrics = {Metric::Hamming, Metric::Lee, Metric::Homogeneous,
                                                      Metric::Euclidean};

std::string_view to_string(Metric m);
Metric parse_metric(std::string_view name);

/// Lee weight is defined for Z4 (and degenerately Z2, where it is Hamming).
bool metric_valid_for(Metric m, RingSpec ring);
void require_metric(Metric m, RingSpec ring);

/// Homogeneous weight of a single element: 0 at zero, 2^{s-1} at 2^{s-1}, 2^{s-2} elsewhere.
/// For s = 1 this is the Hamming weight.
std::uint32_t homogeneous_weight(std::uint32_t x, RingSpec ring);

/// Weight of a single element under any metric.
std::uint32_t element_weight(std::uint32_t x, RingSpec ring, Metric m);

/// Per-element weight lookup, indexed by ring element.
std::vector<std::uint32_t> weight_table(RingSpec ring, Metric m);

/// Largest weight a single coordinate can carry.
std::uint32_t max_element_weight(RingSpec ring, Metric m);

/// A vector in Z_{2^s}^n. Coordinates are always reduced.
class ZqVector {
 public:
  ZqVector(RingSpec ring, std::size_t n) : ring_(ring), coords_(n, 0) {}
  ZqVector(RingSpec ring, std::vector<std::uint8_t> coords);
  /// Reduces each value mod 2^s.
  ZqVector(RingSpec ring, std::initializer_list<int> values);
  /// Strict: throws if any value lies outside [0, 2^s).
  static ZqVector from_values(RingSpec ring, std::span<const long long> values);

  RingSpec ring() const { return ring_; }
  std::size_t size() const { return coords_.size(); }
  bool empty() const { return coords_.empty(); }

  std::uint32_t operator[](std::size_t i) const { return coords_[i]; }
  void set(std::size_t i, std::int64_t value) { coords_[i] = static_cast<std::uint8_t>(ring_.reduce(value)); }
  std::span<const std::uint8_t> coords() const { return coords_; }

  bool is_zero() const;

  ZqVector& operator+=(const ZqVector& other);
  ZqVector& operator-=(const ZqVector& other);
  ZqVector& scale(std::uint32_t factor);
  friend ZqVector operator+(ZqVector a, const ZqVector& b) { return a += b; }
  friend ZqVector operator-(ZqVector a, const ZqVector& b) { return a -= b; }
  friend ZqVector operator*(std::uint32_t factor, ZqVector v) { return v.scale(factor); }
  ZqVector operator-() const;

  /// Same coordinates reduced into a smaller ring Z_{2^t}, t <= s.
  ZqVector reduced_to(RingSpec target) const;

  friend bool operator==(const ZqVector&, const ZqVector&) = default;
  friend auto operator<=>(const ZqVector& a, const ZqVector& b) { return a.coords_ <=> b.coords_; }

  /// Space-separated decimal coordinates, e.g. "0 1 2 3".
  std::string to_string() const;

 private:
  void check_compatible(const ZqVector& other) const;

  RingSpec ring_;
  std::vector<std::uint8_t> coords_;
};

/// Standard inner product mod 2^s.
std::uint32_t dot(const ZqVector& a, const ZqVector& b);

std::uint64_t weight(const ZqVector& v, Metric m);
std::uint64_t distance(const ZqVector& u, const ZqVector& v, Metric m);

/// Z4 -> Z2^2 Gray map, 0->00, 1->01, 2->11, 3->10, coordinate-wise.
ZqVector gray_map(const ZqVector& v);
/// Inverse of gray_map on vectors of even length.
ZqVector gray_unmap(const ZqVector& bits);

enum class EnumerationOrder { Lexicographic, GrayCode };

/// Deterministic enumeration of all of Z_{2^s}^n.
///
/// Lexicographic order treats coordinate 0 as most significant. Gray-code order is the
/// reflected 2^s-ary code: each step changes exactly one coordinate by +1 or -1.
class VectorEnumerator {
 public:
  /// Throws BudgetExceeded if (2^s)^n exceeds `budget`.
  VectorEnumerator(RingSpec ring, std::size_t n, EnumerationOrder order, std::uint64_t budget = std::uint64_t{1} << 32);

  /// Total number of vectors the stream yields.
  std::uint64_t count() const { return count_; }

  /// Writes the next vector into `out`; returns false once the stream is exhausted.
  bool next(ZqVector& out);

 private:
  bool advance_lex();
  bool advance_gray();

  RingSpec ring_;
  std::size_t n_;
  EnumerationOrder order_;
  std::uint64_t count_;
  std::uint64_t emitted_ = 0;
  ZqVector current_;
  // Gray-order state, innermost coordinate n-1 first
  std::vector<int> digit_;
  std::vector<int> direction_;
  std::vector<std::size_t> focus_;
};

/// Loopless reflected Gray walk over a subset of coordinates. `positions` lists the
/// coordinates that move, innermost (fastest changing) first. Calls `on_step(coordinate, delta)`
/// for each of the (2^s)^|positions| - 1 steps.
template <typename OnStep>
void gray_walk(RingSpec ring, std::span<const std::size_t> positions, OnStep&& on_step) {
  const std::size_t m = positions.size();
  const std::uint32_t q = ring.modulus();
  const int top = static_cast<int>(q) - 1;
  std::vector<int> digit(m, 0);
  std::vector<int> dir(m, 1);
  // focus pointers (Knuth, Algorithm H for reflected mixed-radix Gray codes)
  std::vector<std::size_t> focus(m + 1);
  for (std::size_t j = 0; j <= m; ++j) focus[j] = j;
  while (true) {
    const std::size_t j = focus[0];
    focus[0] = 0;
    if (j == m) break;
    digit[j] += dir[j];
    on_step(positions[j], dir[j]);
    if (digit[j] == 0 || digit[j] == top) {
      dir[j] = -dir[j];
      focus[j] = focus[j + 1];
      focus[j + 1] = j + 1;
    }
  }
}

}  // namespace modcodes
