#include "packed.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace modcodes::detail {

PackedLayout::PackedLayout(RingSpec ring, std::size_t n) : ring_(ring), n_(n) {
  if (n * static_cast<std::size_t>(ring.s()) > 64) {
    throw BudgetExceeded("vectors of length " + std::to_string(n) + " over Z_" + std::to_string(ring.modulus()) +
                         " do not fit a 64-bit word");
  }
  for (std::size_t j = 0; j < n; ++j) {
    low_ |= std::uint64_t{1} << (j * ring.s());
    high_ |= std::uint64_t{1} << (j * ring.s() + ring.s() - 1);
  }
}

std::uint64_t PackedLayout::pack(const ZqVector& v) const {
  std::uint64_t w = 0;
  for (std::size_t j = 0; j < n_; ++j) w |= std::uint64_t{v[j]} << shift(j);
  return w;
}

ZqVector PackedLayout::unpack(std::uint64_t word) const {
  ZqVector v(ring_, n_);
  for (std::size_t j = 0; j < n_; ++j) v.set(j, static_cast<std::int64_t>((word >> shift(j)) & ring_.mask()));
  return v;
}

PackedDistance::PackedDistance(RingSpec ring, std::size_t n, Metric m)
    : layout_(ring, n), low_(layout_.low_bits()) {
  require_metric(m, ring);
  table_ = weight_table(ring, m);
  if (ring.s() == 1) {
    kind_ = Kind::Binary;
  } else if (ring.s() == 2) {
    kind_ = Kind::Z4;
  } else if (m == Metric::Hamming || m == Metric::Homogeneous) {
    kind_ = Kind::XorClasses;
  } else {
    kind_ = Kind::Tabulated;
  }
  w_odd_ = table_[1];
  w_two_ = table_[ring.half()];
}

SyndromeMap::SyndromeMap(const LinearCode& code) {
  const RingSpec ring = code.ring();
  const std::size_t n = code.length();
  const LinearCode dual = dual_code(code);
  const auto& sf = dual.standard();
  const std::size_t rows = sf.reduced_rows.size();

  std::vector<int> offset(rows), width(rows);
  int bits = 0;
  // fields are laid out from the last row upward
  for (std::size_t r = rows; r-- > 0;) {
    width[r] = ring.s() - sf.row_levels[r];
    offset[r] = bits;
    bits += width[r];
  }
  if (bits > 63) throw BudgetExceeded("syndrome needs " + std::to_string(bits) + " bits");
  key_bits_ = bits;
  for (std::size_t r = 0; r < rows; ++r) top_ |= std::uint64_t{1} << (offset[r] + width[r] - 1);

  contrib_.assign(n, std::vector<std::uint64_t>(ring.modulus(), 0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::uint32_t x = 0; x < ring.modulus(); ++x) {
      std::uint64_t key = 0;
      for (std::size_t r = 0; r < rows; ++r) {
        const std::uint32_t h = sf.reduced_rows[r][j] >> sf.row_levels[r];
        const std::uint64_t field = (std::uint64_t{x} * h) & ((std::uint64_t{1} << width[r]) - 1);
        key |= field << offset[r];
      }
      contrib_[j][x] = key;
    }
  }

  std::vector<int> high(n, -1);
  for (std::size_t j = 0; j < n; ++j) {
    std::uint64_t any = 0;
    for (auto k : contrib_[j]) any |= k;
    high[j] = any == 0 ? -1 : 63 - std::countl_zero(any);
  }
  locality_order_.resize(n);
  std::iota(locality_order_.begin(), locality_order_.end(), std::size_t{0});
  std::stable_sort(locality_order_.begin(), locality_order_.end(),
                   [&](std::size_t a, std::size_t b) { return high[a] < high[b]; });
}

std::uint64_t SyndromeMap::key_of(const ZqVector& v) const {
  std::uint64_t key = 0;
  for (std::size_t j = 0; j < v.size(); ++j) key = add(key, contrib_[j][v[j]]);
  return key;
}

}  // namespace modcodes::detail
