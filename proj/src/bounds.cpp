#include "modcodes/bounds.hpp"

#include <set>

namespace modcodes {

std::uint64_t sphere_covering_lower_bound(std::uint64_t n, const BigInt& code_size, int s) {
  if (n < 1) throw InvalidArgument("sphere-covering bound needs n >= 1");
  if (code_size < 1) throw InvalidArgument("sphere-covering bound needs a nonempty code");
  if (s < 1) throw InvalidArgument("ring exponent must be positive");
  const std::uint64_t length = (std::uint64_t{1} << (s - 1)) * n;
  const BigInt space = BigInt(1) << length;
  BigInt binom = 1;
  BigInt sum = 1;
  std::uint64_t r = 0;
  while (code_size * sum < space) {
    ++r;
    binom = binom * (length - r + 1) / r;
    sum += binom;
  }
  return r;
}

std::uint64_t ball_covering_lower_bound(RingSpec ring, std::size_t n, Metric metric, std::size_t two_dim) {
  const auto wt = weight_table(ring, metric);
  // weight enumerator of the whole space: (sum_x z^{wt(x)})^n
  std::vector<BigInt> per_coord(max_element_weight(ring, metric) + 1, 0);
  for (auto w : wt) per_coord[w] += 1;
  std::vector<BigInt> poly{1};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<BigInt> next(poly.size() + per_coord.size() - 1, 0);
    for (std::size_t a = 0; a < poly.size(); ++a) {
      if (poly[a] == 0) continue;
      for (std::size_t b = 0; b < per_coord.size(); ++b) next[a + b] += poly[a] * per_coord[b];
    }
    poly = std::move(next);
  }
  const BigInt space = BigInt(1) << (static_cast<std::size_t>(ring.s()) * n);
  const BigInt size = BigInt(1) << two_dim;
  BigInt ball = 0;
  for (std::uint64_t r = 0; r < poly.size(); ++r) {
    ball += poly[r];
    if (size * ball >= space) return r;
  }
  return poly.size() - 1;
}

std::optional<std::uint64_t> distinct_nonzero_weights(const LinearCode& code, Metric metric, std::size_t max_two_dim) {
  if (code.two_dimension() > max_two_dim) return std::nullopt;
  const auto words = enumerate_codewords(code, max_two_dim);
  std::set<std::uint64_t> seen;
  for (const auto& w : words.words) {
    const auto x = weight(w, metric);
    if (x != 0) seen.insert(x);
  }
  return seen.size();
}

std::optional<std::uint64_t> delsarte_bound(const LinearCode& code, std::size_t max_two_dim) {
  const std::size_t dual_dim = static_cast<std::size_t>(code.ring().s()) * code.length() - code.two_dimension();
  if (dual_dim > max_two_dim) return std::nullopt;
  return distinct_nonzero_weights(dual_code(code), Metric::Homogeneous, max_two_dim);
}

LinearCode mattson_stack(const LinearCode& c0, const LinearCode& c1, const GeneratorMatrix& connect) {
  if (!(c0.ring() == c1.ring())) throw InvalidArgument("mattson_stack: rings differ");
  const RingSpec ring = c0.ring();
  const std::size_t n0 = c0.length(), n1 = c1.length();
  if (connect.size() != c0.generators().size()) {
    throw InvalidArgument("connecting matrix needs " + std::to_string(c0.generators().size()) + " rows, got " +
                          std::to_string(connect.size()));
  }
  for (const auto& row : connect) {
    if (row.size() != n1 || !(row.ring() == ring)) {
      throw InvalidArgument("connecting matrix rows must have length " + std::to_string(n1));
    }
  }
  GeneratorMatrix top = hconcat(GeneratorMatrix(c1.generators().size(), ZqVector(ring, n0)), c1.generators());
  GeneratorMatrix bottom = hconcat(c0.generators(), connect);
  top.insert(top.end(), bottom.begin(), bottom.end());
  return LinearCode(ring, n0 + n1, std::move(top));
}

LinearCode direct_sum(const LinearCode& c0, const LinearCode& c1) {
  const RingSpec ring = c0.ring();
  GeneratorMatrix g = hconcat(c0.generators(), GeneratorMatrix(c0.generators().size(), ZqVector(ring, c1.length())));
  const auto lower = hconcat(GeneratorMatrix(c1.generators().size(), ZqVector(ring, c0.length())), c1.generators());
  g.insert(g.end(), lower.begin(), lower.end());
  return LinearCode(ring, c0.length() + c1.length(), std::move(g));
}

MattsonSplit mattson_split(const LinearCode& code, std::size_t top_rows, std::size_t left_cols) {
  const auto& g = code.generators();
  if (top_rows > g.size() || left_cols > code.length()) throw InvalidArgument("split outside the matrix");
  const RingSpec ring = code.ring();
  GeneratorMatrix g1, g0;
  for (std::size_t r = 0; r < g.size(); ++r) {
    ZqVector left(ring, left_cols), right(ring, code.length() - left_cols);
    for (std::size_t j = 0; j < code.length(); ++j) {
      if (j < left_cols) {
        left.set(j, g[r][j]);
      } else {
        right.set(j - left_cols, g[r][j]);
      }
    }
    if (r < top_rows) {
      if (!left.is_zero()) throw InvalidArgument("rows above the split must vanish on the left block");
      g1.push_back(std::move(right));
    } else {
      g0.push_back(std::move(left));
    }
  }
  return MattsonSplit{LinearCode(ring, left_cols, std::move(g0)), LinearCode(ring, code.length() - left_cols, std::move(g1))};
}

BoundReport compute_bounds(const LinearCode& code, Metric metric, const SearchBudget& budget,
                           std::optional<std::pair<std::size_t, std::size_t>> split) {
  BoundReport report;
  report.metric = metric;
  if (code.length() > 0) {
    report.sphere_covering_lb =
        sphere_covering_lower_bound(code.length(), BigInt(1) << code.two_dimension(), code.ring().s());
  }
  report.delsarte_ub = delsarte_bound(code);
  if (split) {
    const auto parts = mattson_split(code, split->first, split->second);
    try {
      const auto r0 = covering_radius(parts.c0, metric, Method::Auto, budget);
      const auto r1 = covering_radius(parts.c1, metric, Method::Auto, budget);
      if (r0.exact && r1.exact) report.mattson_ub = r0.lo + r1.lo;
    } catch (const BudgetExceeded&) {
    }
    report.mattson_decomposition = "C0: first " + std::to_string(split->second) + " columns of the last " +
                                   std::to_string(code.generators().size() - split->first) + " rows; C1: first " +
                                   std::to_string(split->first) + " rows";
  }
  return report;
}

}  // namespace modcodes
