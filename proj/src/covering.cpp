#include "modcodes/covering.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <limits>
#include <thread>

#include "modcodes/bounds.hpp"
#include "packed.hpp"

namespace modcodes {

using detail::PackedDistance;
using detail::PackedLayout;
using detail::SyndromeMap;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

unsigned effective_threads(unsigned requested) { return std::max(1u, requested); }

/// Runs `work(chunk)` for chunk in [0, chunks) on up to `threads` workers.
template <typename Work>
void run_chunks(std::uint64_t chunks, unsigned threads, Work&& work) {
  threads = static_cast<unsigned>(std::min<std::uint64_t>(effective_threads(threads), std::max<std::uint64_t>(chunks, 1)));
  if (threads <= 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) work(c);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::uint64_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) work(c);
    });
  }
  for (auto& th : pool) th.join();
}

template <typename F>
decltype(auto) with_kernel(const PackedDistance& d, F&& f) {
  switch (d.kind()) {
    case PackedDistance::Kind::Binary:
      return f([](std::uint64_t u, std::uint64_t c) { return static_cast<std::uint32_t>(std::popcount(u ^ c)); });
    case PackedDistance::Kind::Z4:
      return f([&d](std::uint64_t u, std::uint64_t c) { return d.z4(u ^ c); });
    case PackedDistance::Kind::XorClasses:
      return f([&d](std::uint64_t u, std::uint64_t c) { return d.xor_classes(u ^ c); });
    case PackedDistance::Kind::Tabulated:
      break;
  }
  return f([&d](std::uint64_t u, std::uint64_t c) { return d(u, c); });
}

std::uint64_t space_bits(RingSpec ring, std::size_t n) { return static_cast<std::uint64_t>(ring.s()) * n; }

struct ChunkBest {
  std::int64_t value = -1;
  std::uint64_t witness = 0;
  std::uint64_t evaluations = 0;
};

RadiusReport direct_on_packed(RingSpec ring, std::size_t n, const std::vector<std::uint64_t>& words, Metric metric,
                              const SearchBudget& budget) {
  const auto start = Clock::now();
  require_metric(metric, ring);
  if (words.empty()) throw InvalidArgument("covering radius of an empty word set is undefined");
  if (space_bits(ring, n) > 62) throw BudgetExceeded("ambient space too large for the direct engine");
  const std::uint64_t space = std::uint64_t{1} << space_bits(ring, n);
  const long double work = static_cast<long double>(space) * static_cast<long double>(words.size());
  if (work > static_cast<long double>(budget.distance_evaluations)) {
    throw BudgetExceeded("direct engine needs " + std::to_string(space) + " x " + std::to_string(words.size()) +
                         " distance evaluations (budget " + std::to_string(budget.distance_evaluations) +
                         "); try the syndrome method");
  }

  const PackedLayout layout(ring, n);
  const PackedDistance dist(ring, n, metric);
  const unsigned threads = effective_threads(budget.threads);
  const std::uint64_t chunks = std::min<std::uint64_t>(space, threads == 1 ? 1 : std::uint64_t{64} * threads);
  const std::uint64_t per_chunk = (space + chunks - 1) / chunks;
  std::vector<ChunkBest> results(chunks);

  with_kernel(dist, [&](auto kernel) {
    run_chunks(chunks, threads, [&](std::uint64_t chunk) {
      ChunkBest best;
      const std::uint64_t begin = chunk * per_chunk;
      const std::uint64_t end = std::min(space, begin + per_chunk);
      for (std::uint64_t u = begin; u < end; ++u) {
        std::int64_t nearest = std::numeric_limits<std::int64_t>::max();
        for (std::uint64_t c : words) {
          ++best.evaluations;
          const std::int64_t d = kernel(u, c);
          if (d < nearest) {
            nearest = d;
            // u cannot beat the running maximum any more
            if (nearest <= best.value) break;
          }
        }
        if (nearest > best.value) {
          best.value = nearest;
          best.witness = u;
        }
      }
      results[chunk] = best;
    });
    return 0;
  });

  RadiusReport report;
  report.metric = metric;
  report.method = Method::Direct;
  report.exact = true;
  ChunkBest merged;
  for (const auto& r : results) {
    merged.evaluations += r.evaluations;
    // chunks are in lexicographic order, so strict > keeps the first deep hole
    if (r.value > merged.value) {
      merged.value = r.value;
      merged.witness = r.witness;
    }
  }
  report.lo = static_cast<std::uint64_t>(merged.value);
  report.hi = report.lo;
  report.witness = layout.unpack(merged.witness);
  report.stats.vectors_visited = space;
  report.stats.distance_evaluations = merged.evaluations;
  report.stats.threads = threads;
  report.stats.seconds = seconds_since(start);
  return report;
}

// ---- coset tables ----------------------------------------------------------------------------

template <typename W>
constexpr W unreached() {
  return std::numeric_limits<W>::max();
}

template <typename W, bool Shared>
inline void relax(std::vector<W>& table, std::uint64_t key, W w) {
  if constexpr (Shared) {
    std::atomic_ref<W> slot(table[key]);
    W cur = slot.load(std::memory_order_relaxed);
    while (w < cur && !slot.compare_exchange_weak(cur, w, std::memory_order_relaxed)) {
    }
  } else {
    if (w < table[key]) table[key] = w;
  }
}

struct FillContext {
  RingSpec ring;
  std::size_t n;
  const SyndromeMap& map;
  std::vector<std::uint32_t> wt;
};

/// Gray-code pass over the whole space, partitioned by the values of the slowest coordinates.
template <typename W, bool Shared>
void fill_table(std::vector<W>& table, const FillContext& ctx, unsigned threads, std::size_t prefix_len,
                std::atomic<std::uint64_t>& visited) {
  const auto& order = ctx.map.locality_order();
  const std::vector<std::size_t> inner(order.begin(), order.end() - static_cast<std::ptrdiff_t>(prefix_len));
  const std::vector<std::size_t> outer(order.end() - static_cast<std::ptrdiff_t>(prefix_len), order.end());
  const std::uint32_t q = ctx.ring.modulus();
  const std::uint64_t chunks = std::uint64_t{1} << (ctx.ring.s() * prefix_len);

  run_chunks(chunks, threads, [&](std::uint64_t chunk) {
    std::vector<std::uint32_t> value(ctx.n, 0);
    std::uint64_t key = 0;
    std::uint32_t w = 0;
    std::uint64_t rest = chunk;
    for (std::size_t j : outer) {
      value[j] = static_cast<std::uint32_t>(rest & ctx.ring.mask());
      rest >>= ctx.ring.s();
      key = ctx.map.add(key, ctx.map.contribution(j, value[j]));
      w += ctx.wt[value[j]];
    }
    std::uint64_t local = 1;
    relax<W, Shared>(table, key, static_cast<W>(w));
    gray_walk(ctx.ring, inner, [&](std::size_t j, int delta) {
      const std::uint32_t old = value[j];
      const std::uint32_t now = (old + static_cast<std::uint32_t>(delta)) & ctx.ring.mask();
      value[j] = now;
      key = ctx.map.add(key, ctx.map.contribution(j, delta > 0 ? 1 : q - 1));
      w = w - ctx.wt[old] + ctx.wt[now];
      relax<W, Shared>(table, key, static_cast<W>(w));
      ++local;
    });
    visited.fetch_add(local, std::memory_order_relaxed);
  });
}

/// Single-threaded fill that also records the lexicographically smallest leader per coset.
template <typename W>
void fill_table_with_leaders(std::vector<W>& table, std::vector<std::uint64_t>& leaders, const FillContext& ctx,
                             std::atomic<std::uint64_t>& visited) {
  const PackedLayout layout(ctx.ring, ctx.n);
  const auto& order = ctx.map.locality_order();
  const std::uint32_t q = ctx.ring.modulus();
  std::vector<std::uint32_t> value(ctx.n, 0);
  std::uint64_t key = 0, packed = 0, count = 1;
  std::uint32_t w = 0;
  auto visit = [&] {
    const W cur = table[key];
    if (static_cast<W>(w) < cur || (static_cast<W>(w) == cur && packed < leaders[key])) {
      table[key] = static_cast<W>(w);
      leaders[key] = packed;
    }
  };
  visit();
  gray_walk(ctx.ring, order, [&](std::size_t j, int delta) {
    const std::uint32_t old = value[j];
    const std::uint32_t now = (old + static_cast<std::uint32_t>(delta)) & ctx.ring.mask();
    value[j] = now;
    key = ctx.map.add(key, ctx.map.contribution(j, delta > 0 ? 1 : q - 1));
    w = w - ctx.wt[old] + ctx.wt[now];
    const int sh = layout.shift(j);
    packed = packed - (std::uint64_t{old} << sh) + (std::uint64_t{now} << sh);
    visit();
    ++count;
  });
  visited += count;
}

std::size_t prefix_length(std::size_t n, int s, unsigned threads) {
  if (threads <= 1) return 0;
  std::size_t p = 0;
  while (p < n && (std::uint64_t{1} << (s * p)) < std::uint64_t{16} * threads) ++p;
  return p;
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Auto:
      return "auto";
    case Method::Direct:
      return "direct";
    case Method::Syndrome:
      return "syndrome";
    case Method::Bfs:
      return "bfs";
    case Method::BoundOnly:
      return "bound_only";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  for (Method m : {Method::Auto, Method::Direct, Method::Syndrome, Method::Bfs, Method::BoundOnly}) {
    if (to_string(m) == name) return m;
  }
  throw InvalidArgument("unknown method '" + std::string(name) + "'");
}

std::uint64_t RadiusReport::value() const {
  if (!exact) throw Error("radius report holds an interval, not an exact value");
  return lo;
}

RadiusReport covering_radius_direct(const LinearCode& code, Metric metric, const SearchBudget& budget) {
  require_metric(metric, code.ring());
  if (space_bits(code.ring(), code.length()) > 62 ||
      code.two_dimension() + space_bits(code.ring(), code.length()) > 62) {
    throw BudgetExceeded("direct engine: search space too large; try the syndrome method");
  }
  const long double work = std::ldexp(1.0L, static_cast<int>(space_bits(code.ring(), code.length()) +
                                                              code.two_dimension()));
  if (work > static_cast<long double>(budget.distance_evaluations)) {
    throw BudgetExceeded("direct engine needs 2^" +
                         std::to_string(space_bits(code.ring(), code.length()) + code.two_dimension()) +
                         " distance evaluations (budget " + std::to_string(budget.distance_evaluations) +
                         "); try the syndrome method");
  }
  const auto words = enumerate_codewords(code, 62);
  return covering_radius_direct(words, metric, budget);
}

RadiusReport covering_radius_direct(const CodewordSet& words, Metric metric, const SearchBudget& budget) {
  const PackedLayout layout(words.ring, words.n);
  std::vector<std::uint64_t> packed;
  packed.reserve(words.words.size());
  for (const auto& w : words.words) {
    if (!(w.ring() == words.ring) || w.size() != words.n) throw InvalidArgument("word set is not homogeneous");
    packed.push_back(layout.pack(w));
  }
  std::sort(packed.begin(), packed.end());
  packed.erase(std::unique(packed.begin(), packed.end()), packed.end());
  return direct_on_packed(words.ring, words.n, packed, metric, budget);
}

std::uint64_t CosetLeaderTable::size() const {
  return std::visit([](const auto& t) { return static_cast<std::uint64_t>(t.size()); }, weights_);
}

std::uint32_t CosetLeaderTable::weight(std::uint64_t key) const {
  return std::visit(
      [key](const auto& t) -> std::uint32_t {
        using W = typename std::decay_t<decltype(t)>::value_type;
        return t[key] == unreached<W>() ? kUnreached : t[key];
      },
      weights_);
}

bool CosetLeaderTable::complete() const {
  for (std::uint64_t k = 0; k < size(); ++k) {
    if (weight(k) == kUnreached) return false;
  }
  return true;
}

std::optional<ZqVector> CosetLeaderTable::leader(std::uint64_t key) const {
  if (leaders_.empty() || weight(key) == kUnreached) return std::nullopt;
  return PackedLayout(ring_, n_).unpack(leaders_[key]);
}

std::uint64_t CosetLeaderTable::add_contribution(std::uint64_t key, std::size_t j, std::uint32_t x) const {
  const std::uint64_t b = contributions_[j][x];
  return ((key & ~top_) + (b & ~top_)) ^ ((key ^ b) & top_);
}

std::uint64_t CosetLeaderTable::key_of(const ZqVector& v) const {
  if (!(v.ring() == ring_) || v.size() != n_) throw InvalidArgument("vector does not match the table's code");
  std::uint64_t key = 0;
  for (std::size_t j = 0; j < n_; ++j) key = add_contribution(key, j, v[j]);
  return key;
}

std::uint32_t CosetLeaderTable::max_weight() const {
  std::uint32_t best = 0;
  for (std::uint64_t k = 0; k < size(); ++k) {
    const auto w = weight(k);
    if (w == kUnreached) throw Error("coset table is incomplete");
    best = std::max(best, w);
  }
  return best;
}

std::map<std::uint64_t, std::uint64_t> CosetLeaderTable::histogram() const {
  std::map<std::uint64_t, std::uint64_t> h;
  for (std::uint64_t k = 0; k < size(); ++k) {
    const auto w = weight(k);
    if (w != kUnreached) ++h[w];
  }
  return h;
}

CosetLeaderTable build_coset_leader_table(const LinearCode& code, Metric metric, const SearchBudget& budget,
                                          bool keep_leaders, SearchStats* stats) {
  const auto start = Clock::now();
  const RingSpec ring = code.ring();
  const std::size_t n = code.length();
  require_metric(metric, ring);
  if (space_bits(ring, n) > 62) throw BudgetExceeded("syndrome engine: ambient space too large");
  const std::uint64_t space = std::uint64_t{1} << space_bits(ring, n);
  if (space > budget.syndrome_vectors) {
    throw BudgetExceeded("syndrome engine would visit " + std::to_string(space) + " vectors (budget " +
                         std::to_string(budget.syndrome_vectors) + ")");
  }
  const SyndromeMap map(code);
  if (map.coset_count() > budget.table_entries) {
    throw BudgetExceeded("coset table needs " + std::to_string(map.coset_count()) + " entries (budget " +
                         std::to_string(budget.table_entries) + ")");
  }

  CosetLeaderTable table;
  table.metric_ = metric;
  table.key_bits_ = map.key_bits();
  table.ring_ = ring;
  table.n_ = n;
  table.contributions_.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::uint32_t x = 0; x < ring.modulus(); ++x) table.contributions_[j].push_back(map.contribution(j, x));
  }
  table.top_ = map.top_mask();

  FillContext ctx{ring, n, map, weight_table(ring, metric)};
  const std::uint64_t max_weight = static_cast<std::uint64_t>(max_element_weight(ring, metric)) * n;
  const unsigned threads = keep_leaders ? 1u : effective_threads(budget.threads);
  std::atomic<std::uint64_t> visited{0};

  auto fill = [&](auto& weights) {
    using W = typename std::decay_t<decltype(weights)>::value_type;
    weights.assign(map.coset_count(), unreached<W>());
    if (keep_leaders) {
      table.leaders_.assign(map.coset_count(), std::numeric_limits<std::uint64_t>::max());
      fill_table_with_leaders<W>(weights, table.leaders_, ctx, visited);
    } else if (threads == 1) {
      fill_table<W, false>(weights, ctx, 1, 0, visited);
    } else {
      fill_table<W, true>(weights, ctx, threads, prefix_length(n, ring.s(), threads), visited);
    }
  };
  if (max_weight < unreached<std::uint8_t>()) {
    table.weights_ = std::vector<std::uint8_t>{};
    fill(std::get<std::vector<std::uint8_t>>(table.weights_));
  } else {
    table.weights_ = std::vector<std::uint32_t>{};
    fill(std::get<std::vector<std::uint32_t>>(table.weights_));
  }
  if (stats != nullptr) {
    stats->vectors_visited = visited.load();
    stats->threads = threads;
    stats->seconds = seconds_since(start);
  }
  return table;
}

RadiusReport covering_radius_syndrome(const LinearCode& code, Metric metric, const SearchBudget& budget) {
  const auto start = Clock::now();
  SearchStats stats;
  const auto table = build_coset_leader_table(code, metric, budget, false, &stats);
  const std::uint32_t radius = table.max_weight();

  // second pass: first vector in lexicographic order lying in a deepest coset
  const RingSpec ring = code.ring();
  const std::size_t n = code.length();
  ZqVector u(ring, n);
  std::uint64_t key = 0;
  std::uint64_t scanned = 1;
  while (table.weight(key) != radius) {
    std::size_t j = n;
    while (j-- > 0) {
      const std::uint32_t next = ring.add(u[j], 1);
      u.set(j, next);
      key = table.add_contribution(key, j, 1);
      if (next != 0) break;
    }
    ++scanned;
  }

  RadiusReport report;
  report.metric = metric;
  report.method = Method::Syndrome;
  report.exact = true;
  report.lo = radius;
  report.hi = radius;
  report.witness = u;
  report.stats = stats;
  report.stats.vectors_visited += scanned;
  report.stats.seconds = seconds_since(start);
  return report;
}

namespace {

/// Enumerates vectors of an exact weight in lexicographic order, carrying the syndrome key.
class WeightLevelWalker {
 public:
  WeightLevelWalker(RingSpec ring, std::size_t n, const SyndromeMap& map, std::vector<std::uint32_t> wt)
      : ring_(ring), n_(n), map_(map), wt_(std::move(wt)), value_(n, 0) {
    max_wt_ = *std::max_element(wt_.begin(), wt_.end());
  }

  /// visit(key, values) returns false to stop the walk; returns false if stopped.
  template <typename Visit>
  bool walk(std::uint64_t target, Visit&& visit) {
    std::fill(value_.begin(), value_.end(), 0);
    return step(0, target, 0, visit);
  }

 private:
  template <typename Visit>
  bool step(std::size_t pos, std::uint64_t rem, std::uint64_t key, Visit& visit) {
    if (rem == 0) {
      return visit(key, value_);
    }
    if (pos == n_ || rem > static_cast<std::uint64_t>(max_wt_) * (n_ - pos)) return true;
    for (std::uint32_t x = 0; x < ring_.modulus(); ++x) {
      if (wt_[x] > rem) continue;
      value_[pos] = x;
      if (!step(pos + 1, rem - wt_[x], map_.add(key, map_.contribution(pos, x)), visit)) {
        value_[pos] = 0;
        return false;
      }
    }
    value_[pos] = 0;
    return true;
  }

  RingSpec ring_;
  std::size_t n_;
  const SyndromeMap& map_;
  std::vector<std::uint32_t> wt_;
  std::uint32_t max_wt_ = 0;
  std::vector<std::uint32_t> value_;
};

ZqVector to_vector(RingSpec ring, const std::vector<std::uint32_t>& values) {
  ZqVector v(ring, values.size());
  for (std::size_t j = 0; j < values.size(); ++j) v.set(j, values[j]);
  return v;
}

}  // namespace

RadiusReport covering_radius_bfs(const LinearCode& code, Metric metric, std::uint64_t r_cap,
                                 const SearchBudget& budget) {
  const auto start = Clock::now();
  const RingSpec ring = code.ring();
  const std::size_t n = code.length();
  require_metric(metric, ring);
  const SyndromeMap map(code);
  if (map.coset_count() > budget.table_entries) {
    throw BudgetExceeded("coset table needs " + std::to_string(map.coset_count()) + " entries (budget " +
                         std::to_string(budget.table_entries) + ")");
  }
  std::vector<std::uint32_t> level(map.coset_count(), CosetLeaderTable::kUnreached);
  std::uint64_t covered = 0;
  std::uint64_t visited = 0;
  WeightLevelWalker walker(ring, n, map, weight_table(ring, metric));

  RadiusReport report;
  report.metric = metric;
  report.method = Method::Bfs;
  bool out_of_budget = false;
  const std::uint64_t max_possible = static_cast<std::uint64_t>(max_element_weight(ring, metric)) * n;
  const std::uint64_t last = std::min(r_cap, max_possible);
  for (std::uint64_t w = 0; w <= last; ++w) {
    std::optional<ZqVector> first_new;
    const bool finished = walker.walk(w, [&](std::uint64_t key, const std::vector<std::uint32_t>& values) {
      if (++visited > budget.bfs_vectors) {
        out_of_budget = true;
        return false;
      }
      if (level[key] == CosetLeaderTable::kUnreached) {
        level[key] = static_cast<std::uint32_t>(w);
        ++covered;
        if (!first_new) first_new = to_vector(ring, values);
      }
      return true;
    });
    if (!finished) {
      report.exact = false;
      report.lo = w;
      report.note = "bfs vector budget exhausted at weight " + std::to_string(w);
      break;
    }
    if (covered == map.coset_count()) {
      report.exact = true;
      report.lo = w;
      report.hi = w;
      report.witness = first_new;
      break;
    }
  }
  if (!report.exact && !out_of_budget) {
    report.lo = last + 1;
    report.note = "no complete covering at weight <= " + std::to_string(last);
  }
  report.stats.vectors_visited = visited;
  report.stats.seconds = seconds_since(start);
  return report;
}

std::optional<std::uint64_t> minimum_weight_by_search(const LinearCode& code, Metric metric, std::uint64_t cap,
                                                      const SearchBudget& budget) {
  const RingSpec ring = code.ring();
  require_metric(metric, ring);
  const SyndromeMap map(code);
  WeightLevelWalker walker(ring, code.length(), map, weight_table(ring, metric));
  std::uint64_t visited = 0;
  for (std::uint64_t w = 1; w <= cap; ++w) {
    bool found = false;
    walker.walk(w, [&](std::uint64_t key, const std::vector<std::uint32_t>&) {
      if (++visited > budget.bfs_vectors) throw BudgetExceeded("minimum-weight search exceeded its vector budget");
      if (key == 0) {
        found = true;
        return false;
      }
      return true;
    });
    if (found) return w;
  }
  return std::nullopt;
}

RadiusReport covering_radius(const LinearCode& code, Metric metric, Method method, const SearchBudget& budget) {
  switch (method) {
    case Method::Direct:
      return covering_radius_direct(code, metric, budget);
    case Method::Syndrome:
      return covering_radius_syndrome(code, metric, budget);
    case Method::Bfs:
      return covering_radius_bfs(code, metric,
                                 static_cast<std::uint64_t>(max_element_weight(code.ring(), metric)) * code.length(),
                                 budget);
    case Method::BoundOnly:
      break;
    case Method::Auto: {
      const std::uint64_t bits = space_bits(code.ring(), code.length());
      if (bits + code.two_dimension() <= 24) {
        try {
          return covering_radius_direct(code, metric, budget);
        } catch (const BudgetExceeded&) {
        }
      }
      try {
        return covering_radius_syndrome(code, metric, budget);
      } catch (const BudgetExceeded&) {
      }
      try {
        auto report = covering_radius(code, metric, Method::Bfs, budget);
        if (report.exact) return report;
      } catch (const BudgetExceeded&) {
      }
      break;
    }
  }
  const auto start = Clock::now();
  RadiusReport report;
  report.metric = metric;
  report.method = Method::BoundOnly;
  report.exact = false;
  report.lo = ball_covering_lower_bound(code.ring(), code.length(), metric, code.two_dimension());
  report.hi = static_cast<std::uint64_t>(max_element_weight(code.ring(), metric)) * code.length();
  if (metric == Metric::Homogeneous || (metric == Metric::Lee && code.ring().s() == 2)) {
    if (auto d = delsarte_bound(code)) report.hi = std::min(*report.hi, *d);
  }
  report.note = "no exact engine fits the budget; interval from the ball-covering and Delsarte bounds";
  report.stats.seconds = seconds_since(start);
  return report;
}

std::map<std::uint64_t, std::uint64_t> coset_weight_distribution(const LinearCode& code, Metric metric,
                                                                 const SearchBudget& budget) {
  return build_coset_leader_table(code, metric, budget).histogram();
}

}  // namespace modcodes
