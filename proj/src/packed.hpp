#pragma once

// Bit-packed vectors over Z_{2^s} and the per-metric distance kernels the search engines run on.
// Coordinate 0 occupies the most significant field, so integer order is lexicographic order.

#include <bit>
#include <cstdint>
#include <vector>

#include "modcodes/linalg.hpp"
#include "modcodes/ring.hpp"

namespace modcodes::detail {

class PackedLayout {
 public:
  PackedLayout(RingSpec ring, std::size_t n);

  RingSpec ring() const { return ring_; }
  std::size_t length() const { return n_; }
  int bits() const { return static_cast<int>(n_) * ring_.s(); }
  /// Lowest bit of every field.
  std::uint64_t low_bits() const { return low_; }
  /// Highest bit of every field.
  std::uint64_t high_bits() const { return high_; }
  int shift(std::size_t coordinate) const { return static_cast<int>(n_ - 1 - coordinate) * ring_.s(); }

  std::uint64_t pack(const ZqVector& v) const;
  ZqVector unpack(std::uint64_t word) const;

  /// Field-wise u - c mod 2^s.
  std::uint64_t subtract(std::uint64_t u, std::uint64_t c) const {
    return ((u | high_) - (c & ~high_)) ^ ((u ^ ~c) & high_);
  }

 private:
  RingSpec ring_;
  std::size_t n_;
  std::uint64_t low_ = 0;
  std::uint64_t high_ = 0;
};

/// d(u, c) on packed words. For Hamming and homogeneous weight (any s), and for every metric
/// at s <= 2, the class of u - c (zero / the element 2^{s-1} / other) is read off u XOR c.
class PackedDistance {
 public:
  enum class Kind { Binary, Z4, XorClasses, Tabulated };

  PackedDistance(RingSpec ring, std::size_t n, Metric m);

  Kind kind() const { return kind_; }

  std::uint32_t operator()(std::uint64_t u, std::uint64_t c) const {
    switch (kind_) {
      case Kind::Binary:
        return static_cast<std::uint32_t>(std::popcount(u ^ c));
      case Kind::Z4:
        return z4(u ^ c);
      case Kind::XorClasses:
        return xor_classes(u ^ c);
      case Kind::Tabulated:
        return tabulated(layout_.subtract(u, c));
    }
    return 0;
  }

  std::uint32_t z4(std::uint64_t x) const {
    const auto odd = static_cast<std::uint32_t>(std::popcount(x & low_));
    const auto twos = static_cast<std::uint32_t>(std::popcount((x >> 1) & ~x & low_));
    return odd * w_odd_ + twos * w_two_;
  }

  std::uint32_t xor_classes(std::uint64_t x) const {
    const int s = layout_.ring().s();
    std::uint64_t below_top = 0;
    for (int t = 0; t < s - 1; ++t) below_top |= x >> t;
    below_top &= low_;
    const std::uint64_t top = (x >> (s - 1)) & low_;
    const auto nonzero = static_cast<std::uint32_t>(std::popcount(below_top | top));
    const auto halves = static_cast<std::uint32_t>(std::popcount(top & ~below_top));
    return (nonzero - halves) * w_odd_ + halves * w_two_;
  }

  std::uint32_t tabulated(std::uint64_t diff) const {
    std::uint32_t w = 0;
    const int s = layout_.ring().s();
    const std::uint64_t mask = layout_.ring().mask();
    for (std::size_t j = 0; j < layout_.length(); ++j) w += table_[(diff >> (j * s)) & mask];
    return w;
  }

 private:
  PackedLayout layout_;
  Kind kind_;
  std::uint64_t low_;
  // weight of a non-half nonzero element (constant under the XOR-classified metrics) and of 2^{s-1}
  std::uint32_t w_odd_ = 1;
  std::uint32_t w_two_ = 1;
  std::vector<std::uint32_t> table_;
};

/// Syndromes u -> (u . h) over the dual generators, packed so that the key space is dense:
/// a dual row 2^l h' contributes the field (u . h') mod 2^{s-l} of width s - l, and the
/// total width is the 2-dimension of the dual, i.e. log2 of the number of cosets.
class SyndromeMap {
 public:
  explicit SyndromeMap(const LinearCode& code);

  int key_bits() const { return key_bits_; }
  std::uint64_t coset_count() const { return std::uint64_t{1} << key_bits_; }
  /// Top bit of every key field.
  std::uint64_t top_mask() const { return top_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    return ((a & ~top_) + (b & ~top_)) ^ ((a ^ b) & top_);
  }
  /// Key contribution of value x placed at coordinate j.
  std::uint64_t contribution(std::size_t j, std::uint32_t x) const { return contrib_[j][x]; }
  std::uint64_t key_of(const ZqVector& v) const;

  /// Coordinates sorted so that the ones touching only low key bits come first.
  const std::vector<std::size_t>& locality_order() const { return locality_order_; }

 private:
  int key_bits_ = 0;
  std::uint64_t top_ = 0;
  std::vector<std::vector<std::uint64_t>> contrib_;
  std::vector<std::size_t> locality_order_;
};

}  // namespace modcodes::detail
