#include "modcodes/ring.hpp"

#include <algorithm>
#include <sstream>

namespace modcodes {

RingSpec::RingSpec(int s) : s_(s) {
  if (s < 1 || s > kMaxExponent) {
    throw InvalidArgument("ring exponent s must lie in [1, " + std::to_string(kMaxExponent) + "], got " +
                          std::to_string(s));
  }
}

std::uint32_t RingSpec::reduce(std::int64_t x) const {
  const auto m = static_cast<std::int64_t>(modulus());
  auto r = x % m;
  if (r < 0) r += m;
  return static_cast<std::uint32_t>(r);
}

int RingSpec::valuation(std::uint32_t x) const {
  x &= mask();
  if (x == 0) return s_;
  int v = 0;
  while ((x & 1u) == 0) {
    x >>= 1;
    ++v;
  }
  return v;
}

std::uint32_t RingSpec::inverse(std::uint32_t unit) const {
  if (!is_unit(unit)) throw InvalidArgument("element " + std::to_string(unit) + " is not a unit");
  // Newton iteration doubles the number of correct low bits each round.
  std::uint32_t inv = unit;
  for (int i = 0; i < 5; ++i) inv *= 2u - unit * inv;
  return inv & mask();
}

std::string_view to_string(Metric m) {
  switch (m) {
    case Metric::Hamming:
      return "hamming";
    case Metric::Lee:
      return "lee";
    case Metric::Homogeneous:
      return "homogeneous";
    case Metric::Euclidean:
      return "euclidean";
  }
  return "?";
}

Metric parse_metric(std::string_view name) {
  for (Metric m : kAllMetrics) {
    if (to_string(m) == name) return m;
  }
  throw InvalidArgument("unknown metric '" + std::string(name) + "'");
}

bool metric_valid_for(Metric m, RingSpec ring) { return m != Metric::Lee || ring.s() <= 2; }

void require_metric(Metric m, RingSpec ring) {
  if (!metric_valid_for(m, ring)) {
    throw InvalidArgument("Lee weight is only defined over Z4 (requested over Z_" + std::to_string(ring.modulus()) +
                          ")");
  }
}

std::uint32_t homogeneous_weight(std::uint32_t x, RingSpec ring) {
  x &= ring.mask();
  if (x == 0) return 0;
  if (ring.s() == 1) return 1;
  if (x == ring.half()) return ring.half();
  return ring.half() >> 1;
}

std::uint32_t element_weight(std::uint32_t x, RingSpec ring, Metric m) {
  require_metric(m, ring);
  x &= ring.mask();
  const std::uint32_t q = ring.modulus();
  switch (m) {
    case Metric::Hamming:
      return x != 0 ? 1 : 0;
    case Metric::Lee:
      return std::min(x, q - x);
    case Metric::Homogeneous:
      return homogeneous_weight(x, ring);
    case Metric::Euclidean: {
      const std::uint32_t a = std::min(x, q - x);
      return a * a;
    }
  }
  return 0;
}

std::vector<std::uint32_t> weight_table(RingSpec ring, Metric m) {
  std::vector<std::uint32_t> table(ring.modulus());
  for (std::uint32_t x = 0; x < ring.modulus(); ++x) table[x] = element_weight(x, ring, m);
  return table;
}

std::uint32_t max_element_weight(RingSpec ring, Metric m) {
  const auto table = weight_table(ring, m);
  return *std::max_element(table.begin(), table.end());
}

ZqVector::ZqVector(RingSpec ring, std::vector<std::uint8_t> coords) : ring_(ring), coords_(std::move(coords)) {
  for (auto& c : coords_) {
    if (c >= ring_.modulus()) {
      throw InvalidArgument("coordinate " + std::to_string(c) + " out of range for Z_" +
                            std::to_string(ring_.modulus()));
    }
  }
}

ZqVector::ZqVector(RingSpec ring, std::initializer_list<int> values) : ring_(ring) {
  coords_.reserve(values.size());
  for (int v : values) coords_.push_back(static_cast<std::uint8_t>(ring_.reduce(v)));
}

ZqVector ZqVector::from_values(RingSpec ring, std::span<const long long> values) {
  std::vector<std::uint8_t> coords;
  coords.reserve(values.size());
  for (long long v : values) {
    if (v < 0 || v >= static_cast<long long>(ring.modulus())) {
      throw InvalidArgument("coordinate " + std::to_string(v) + " out of range for Z_" +
                            std::to_string(ring.modulus()));
    }
    coords.push_back(static_cast<std::uint8_t>(v));
  }
  return ZqVector(ring, std::move(coords));
}

bool ZqVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](std::uint8_t c) { return c == 0; });
}

void ZqVector::check_compatible(const ZqVector& other) const {
  if (!(ring_ == other.ring_)) throw InvalidArgument("vectors live over different rings");
  if (size() != other.size()) {
    throw InvalidArgument("length mismatch: " + std::to_string(size()) + " vs " + std::to_string(other.size()));
  }
}

ZqVector& ZqVector::operator+=(const ZqVector& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    coords_[i] = static_cast<std::uint8_t>(ring_.add(coords_[i], other.coords_[i]));
  }
  return *this;
}

ZqVector& ZqVector::operator-=(const ZqVector& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    coords_[i] = static_cast<std::uint8_t>(ring_.sub(coords_[i], other.coords_[i]));
  }
  return *this;
}

ZqVector& ZqVector::scale(std::uint32_t factor) {
  for (auto& c : coords_) c = static_cast<std::uint8_t>(ring_.mul(c, factor));
  return *this;
}

ZqVector ZqVector::operator-() const {
  ZqVector r = *this;
  for (auto& c : r.coords_) c = static_cast<std::uint8_t>(ring_.neg(c));
  return r;
}

ZqVector ZqVector::reduced_to(RingSpec target) const {
  if (target.s() > ring_.s()) throw InvalidArgument("cannot reduce into a larger ring");
  ZqVector r(target, size());
  for (std::size_t i = 0; i < size(); ++i) r.coords_[i] = static_cast<std::uint8_t>(coords_[i] & target.mask());
  return r;
}

std::string ZqVector::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out << ' ';
    out << static_cast<unsigned>(coords_[i]);
  }
  return out.str();
}

std::uint32_t dot(const ZqVector& a, const ZqVector& b) {
  if (!(a.ring() == b.ring()) || a.size() != b.size()) throw InvalidArgument("dot: incompatible vectors");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::uint64_t{a[i]} * b[i];
  return static_cast<std::uint32_t>(acc & a.ring().mask());
}

std::uint64_t weight(const ZqVector& v, Metric m) {
  const auto table = weight_table(v.ring(), m);
  std::uint64_t w = 0;
  for (auto c : v.coords()) w += table[c];
  return w;
}

std::uint64_t distance(const ZqVector& u, const ZqVector& v, Metric m) { return weight(u - v, m); }

ZqVector gray_map(const ZqVector& v) {
  if (v.ring().s() != 2) throw InvalidArgument("the Gray map is defined for Z4 vectors only");
  static constexpr std::uint8_t kImage[4][2] = {{0, 0}, {0, 1}, {1, 1}, {1, 0}};
  std::vector<std::uint8_t> bits;
  bits.reserve(2 * v.size());
  for (auto c : v.coords()) {
    bits.push_back(kImage[c][0]);
    bits.push_back(kImage[c][1]);
  }
  return ZqVector(RingSpec::binary(), std::move(bits));
}

ZqVector gray_unmap(const ZqVector& bits) {
  if (bits.ring().s() != 1 || bits.size() % 2 != 0) {
    throw InvalidArgument("gray_unmap expects a binary vector of even length");
  }
  std::vector<std::uint8_t> out(bits.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const unsigned hi = bits[2 * i], lo = bits[2 * i + 1];
    // 00->0, 01->1, 11->2, 10->3
    out[i] = static_cast<std::uint8_t>(hi ? (lo ? 2 : 3) : (lo ? 1 : 0));
  }
  return ZqVector(RingSpec::z4(), std::move(out));
}

namespace {

std::uint64_t space_size(RingSpec ring, std::size_t n, std::uint64_t budget) {
  if (static_cast<std::uint64_t>(ring.s()) * n >= 64) {
    throw BudgetExceeded("enumeration of Z_" + std::to_string(ring.modulus()) + "^" + std::to_string(n) +
                         " exceeds 2^64 vectors");
  }
  const std::uint64_t count = std::uint64_t{1} << (ring.s() * n);
  if (count > budget) {
    throw BudgetExceeded("enumeration of " + std::to_string(count) + " vectors exceeds the budget of " +
                         std::to_string(budget));
  }
  return count;
}

}  // namespace

VectorEnumerator::VectorEnumerator(RingSpec ring, std::size_t n, EnumerationOrder order, std::uint64_t budget)
    : ring_(ring), n_(n), order_(order), count_(space_size(ring, n, budget)), current_(ring, n) {
  if (order_ == EnumerationOrder::GrayCode) {
    digit_.assign(n_, 0);
    direction_.assign(n_, 1);
    focus_.resize(n_ + 1);
    for (std::size_t j = 0; j <= n_; ++j) focus_[j] = j;
  }
}

bool VectorEnumerator::next(ZqVector& out) {
  if (emitted_ == count_) return false;
  if (emitted_ > 0) {
    const bool ok = order_ == EnumerationOrder::Lexicographic ? advance_lex() : advance_gray();
    if (!ok) return false;
  }
  ++emitted_;
  out = current_;
  return true;
}

bool VectorEnumerator::advance_lex() {
  for (std::size_t i = n_; i-- > 0;) {
    const std::uint32_t next = ring_.add(current_[i], 1);
    current_.set(i, next);
    if (next != 0) return true;
  }
  return false;
}

bool VectorEnumerator::advance_gray() {
  // Algorithm H position j moves coordinate n-1-j, so the last coordinate changes fastest.
  const int top = static_cast<int>(ring_.modulus()) - 1;
  const std::size_t j = focus_[0];
  focus_[0] = 0;
  if (j == n_) return false;
  digit_[j] += direction_[j];
  current_.set(n_ - 1 - j, digit_[j]);
  if (digit_[j] == 0 || digit_[j] == top) {
    direction_[j] = -direction_[j];
    focus_[j] = focus_[j + 1];
    focus_[j + 1] = j + 1;
  }
  return true;
}

}  // namespace modcodes
