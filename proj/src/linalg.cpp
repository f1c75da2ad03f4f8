#include "modcodes/linalg.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace modcodes {

namespace {

using Row = std::vector<std::uint32_t>;

Row to_row(const ZqVector& v) { return Row(v.coords().begin(), v.coords().end()); }

ZqVector to_vector(RingSpec ring, const Row& r) {
  std::vector<std::uint8_t> c(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) c[i] = static_cast<std::uint8_t>(r[i] & ring.mask());
  return ZqVector(ring, std::move(c));
}

void axpy(RingSpec ring, Row& y, std::uint32_t a, const Row& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = ring.sub(y[i], ring.mul(a, x[i]));
}

void check_generators(RingSpec ring, std::size_t n, std::span<const ZqVector> generators) {
  for (const auto& g : generators) {
    if (!(g.ring() == ring)) throw InvalidArgument("generator over a different ring");
    if (g.size() != n) {
      throw InvalidArgument("generator of length " + std::to_string(g.size()) + ", expected " + std::to_string(n));
    }
  }
}

}  // namespace

GeneratorMatrix hconcat(const GeneratorMatrix& left, const GeneratorMatrix& right) {
  if (left.size() != right.size()) throw InvalidArgument("hconcat: row count mismatch");
  GeneratorMatrix out;
  out.reserve(left.size());
  for (std::size_t r = 0; r < left.size(); ++r) {
    std::vector<std::uint8_t> c(left[r].coords().begin(), left[r].coords().end());
    c.insert(c.end(), right[r].coords().begin(), right[r].coords().end());
    out.emplace_back(left[r].ring(), std::move(c));
  }
  return out;
}

GeneratorMatrix constant_row_block(RingSpec ring, std::size_t rows, std::size_t cols, std::uint32_t value) {
  GeneratorMatrix out(rows, ZqVector(ring, cols));
  for (auto& row : out) {
    for (std::size_t j = 0; j < cols; ++j) row.set(j, value);
  }
  return out;
}

std::vector<ZqVector> matrix_columns(const GeneratorMatrix& g) {
  if (g.empty()) return {};
  const RingSpec ring = g.front().ring();
  std::vector<ZqVector> cols(g.front().size(), ZqVector(ring, g.size()));
  for (std::size_t r = 0; r < g.size(); ++r) {
    for (std::size_t j = 0; j < g[r].size(); ++j) cols[j].set(r, g[r][j]);
  }
  return cols;
}

GeneratorMatrix matrix_from_columns(RingSpec ring, std::size_t rows, const std::vector<ZqVector>& columns) {
  GeneratorMatrix out(rows, ZqVector(ring, columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw InvalidArgument("column height mismatch");
    for (std::size_t r = 0; r < rows; ++r) out[r].set(j, columns[j][r]);
  }
  return out;
}

std::size_t StandardForm::two_dimension() const {
  const std::size_t s = block_sizes.size();
  std::size_t k = 0;
  for (std::size_t i = 0; i < s; ++i) k += (s - i) * block_sizes[i];
  return k;
}

StandardForm standard_form(RingSpec ring, std::size_t n, std::span<const ZqVector> generators) {
  check_generators(ring, n, generators);
  std::vector<Row> m;
  m.reserve(generators.size());
  for (const auto& g : generators) m.push_back(to_row(g));

  StandardForm sf;
  sf.block_sizes.assign(static_cast<std::size_t>(ring.s()), 0);
  std::vector<bool> used(n, false);
  std::size_t top = 0;
  for (int level = 0; level < ring.s(); ++level) {
    const std::size_t level_start = top;
    while (true) {
      // greedy: leftmost unused column holding an entry of valuation exactly `level`
      std::size_t pr = m.size(), pc = n;
      for (std::size_t c = 0; c < n && pc == n; ++c) {
        if (used[c]) continue;
        for (std::size_t r = top; r < m.size(); ++r) {
          if (m[r][c] != 0 && ring.valuation(m[r][c]) == level) {
            pr = r;
            pc = c;
            break;
          }
        }
      }
      if (pc == n) break;
      std::swap(m[pr], m[top]);
      const std::uint32_t unit = m[top][pc] >> level;
      const std::uint32_t inv = ring.inverse(unit);
      for (auto& x : m[top]) x = ring.mul(x, inv);
      for (std::size_t r = level_start; r < m.size(); ++r) {
        if (r == top || m[r][pc] == 0) continue;
        axpy(ring, m[r], m[r][pc] >> level, m[top]);
      }
      used[pc] = true;
      sf.pivot_columns.push_back(pc);
      sf.row_levels.push_back(level);
      ++sf.block_sizes[static_cast<std::size_t>(level)];
      ++top;
    }
  }
  for (std::size_t r = 0; r < top; ++r) sf.reduced_rows.push_back(to_vector(ring, m[r]));

  sf.column_permutation = sf.pivot_columns;
  for (std::size_t c = 0; c < n; ++c) {
    if (!used[c]) sf.column_permutation.push_back(c);
  }
  for (const auto& row : sf.reduced_rows) {
    ZqVector p(ring, n);
    for (std::size_t j = 0; j < n; ++j) p.set(j, row[sf.column_permutation[j]]);
    sf.rows.push_back(std::move(p));
  }
  return sf;
}

LinearCode::LinearCode(RingSpec ring, std::size_t n, GeneratorMatrix generators)
    : ring_(ring), n_(n), generators_(std::move(generators)), standard_(standard_form(ring_, n_, generators_)) {}

LinearCode LinearCode::zero(RingSpec ring, std::size_t n) { return LinearCode(ring, n, {}); }

LinearCode LinearCode::full(RingSpec ring, std::size_t n) {
  GeneratorMatrix g;
  for (std::size_t i = 0; i < n; ++i) {
    ZqVector e(ring, n);
    e.set(i, 1);
    g.push_back(std::move(e));
  }
  return LinearCode(ring, n, std::move(g));
}

bool LinearCode::is_free() const {
  return std::all_of(block_sizes().begin() + 1, block_sizes().end(), [](std::size_t k) { return k == 0; });
}

bool LinearCode::contains(const ZqVector& v) const {
  if (!(v.ring() == ring_) || v.size() != n_) return false;
  Row x = to_row(v);
  for (std::size_t i = 0; i < standard_.reduced_rows.size(); ++i) {
    const std::size_t p = standard_.pivot_columns[i];
    const int level = standard_.row_levels[i];
    if (x[p] == 0) continue;
    if (ring_.valuation(x[p]) < level) return false;
    axpy(ring_, x, x[p] >> level, to_row(standard_.reduced_rows[i]));
  }
  return std::all_of(x.begin(), x.end(), [](std::uint32_t c) { return c == 0; });
}

GeneratorMatrix two_basis(const LinearCode& code) {
  const auto& sf = code.standard();
  GeneratorMatrix basis;
  for (int t = 0; t < code.ring().s(); ++t) {
    for (int level = 0; level <= t; ++level) {
      for (std::size_t i = 0; i < sf.reduced_rows.size(); ++i) {
        if (sf.row_levels[i] != level) continue;
        basis.push_back((std::uint32_t{1} << (t - level)) * sf.reduced_rows[i]);
      }
    }
  }
  return basis;
}

CodewordSet enumerate_codewords(const LinearCode& code, std::size_t max_two_dim) {
  const std::size_t k = code.two_dimension();
  if (k > max_two_dim || k >= 63) {
    throw BudgetExceeded("code has 2-dimension " + std::to_string(k) + ", enumeration budget is " +
                         std::to_string(max_two_dim));
  }
  const auto basis = two_basis(code);
  CodewordSet set{code.ring(), code.length(), {}};
  set.words.reserve(std::size_t{1} << k);
  ZqVector word(code.ring(), code.length());
  set.words.push_back(word);
  std::vector<bool> on(k, false);
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << k); ++i) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(i));
    if (on[bit]) {
      word -= basis[bit];
    } else {
      word += basis[bit];
    }
    on[bit] = !on[bit];
    set.words.push_back(word);
  }
  return set;
}

namespace {

void validate_dual(const LinearCode& code, const LinearCode& dual) {
  for (const auto& g : code.generators()) {
    for (const auto& h : dual.generators()) {
      if (dot(g, h) != 0) throw Error("internal error: dual generator is not orthogonal to the code");
    }
  }
  const std::size_t expected = static_cast<std::size_t>(code.ring().s()) * code.length();
  if (code.two_dimension() + dual.two_dimension() != expected) {
    throw Error("internal error: 2-dimensions of code and dual do not sum to s*n");
  }
}

LinearCode dual_z4_companion(const LinearCode& code) {
  const RingSpec ring = code.ring();
  const auto& sf = code.standard();
  const std::size_t n = code.length();
  const std::size_t k0 = sf.block_sizes[0], k1 = sf.block_sizes[1];
  const std::size_t k2 = n - k0 - k1;
  // permuted blocks: level-0 rows [I A B], level-1 rows [0 2I 2C]
  auto entry = [&](std::size_t row, std::size_t col) { return sf.rows[row][col]; };
  auto a = [&](std::size_t i, std::size_t j) { return entry(i, k0 + j); };
  auto b = [&](std::size_t i, std::size_t j) { return entry(i, k0 + k1 + j); };
  auto c = [&](std::size_t i, std::size_t j) { return entry(k0 + i, k0 + k1 + j) >> 1; };

  GeneratorMatrix h;
  // [-(B + A C)^T | C^T | I]
  for (std::size_t r = 0; r < k2; ++r) {
    ZqVector row(ring, n);
    for (std::size_t i = 0; i < k0; ++i) {
      std::uint32_t acc = b(i, r);
      for (std::size_t j = 0; j < k1; ++j) acc = ring.add(acc, ring.mul(a(i, j), c(j, r)));
      row.set(sf.column_permutation[i], ring.neg(acc));
    }
    for (std::size_t j = 0; j < k1; ++j) row.set(sf.column_permutation[k0 + j], c(j, r));
    row.set(sf.column_permutation[k0 + k1 + r], 1);
    h.push_back(std::move(row));
  }
  // [2A^T | 2I | 0]
  for (std::size_t r = 0; r < k1; ++r) {
    ZqVector row(ring, n);
    for (std::size_t i = 0; i < k0; ++i) row.set(sf.column_permutation[i], ring.mul(2, a(i, r)));
    row.set(sf.column_permutation[k0 + r], 2);
    h.push_back(std::move(row));
  }
  return LinearCode(ring, n, std::move(h));
}

}  // namespace

LinearCode dual_code_by_kernel(const LinearCode& code) {
  const RingSpec ring = code.ring();
  const std::size_t n = code.length();
  std::vector<Row> m;
  for (const auto& g : code.generators()) m.push_back(to_row(g));
  // columns of the accumulated column transform
  std::vector<Row> v(n, Row(n, 0));
  for (std::size_t i = 0; i < n; ++i) v[i][i] = 1;

  std::vector<int> pivot_valuation;
  std::size_t idx = 0;
  for (; idx < std::min(m.size(), n); ++idx) {
    int best = ring.s();
    std::size_t br = 0, bc = 0;
    for (std::size_t r = idx; r < m.size(); ++r) {
      for (std::size_t c = idx; c < n; ++c) {
        if (m[r][c] == 0) continue;
        const int val = ring.valuation(m[r][c]);
        if (val < best) {
          best = val;
          br = r;
          bc = c;
        }
      }
    }
    if (best == ring.s()) break;
    std::swap(m[br], m[idx]);
    if (bc != idx) {
      for (auto& row : m) std::swap(row[bc], row[idx]);
      std::swap(v[bc], v[idx]);
    }
    const std::uint32_t inv = ring.inverse(m[idx][idx] >> best);
    for (auto& x : m[idx]) x = ring.mul(x, inv);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r != idx && m[r][idx] != 0) axpy(ring, m[r], m[r][idx] >> best, m[idx]);
    }
    for (std::size_t c = idx + 1; c < n; ++c) {
      if (m[idx][c] == 0) continue;
      const std::uint32_t t = m[idx][c] >> best;
      m[idx][c] = 0;
      axpy(ring, v[c], t, v[idx]);
    }
    pivot_valuation.push_back(best);
  }

  GeneratorMatrix h;
  for (std::size_t i = 0; i < n; ++i) {
    if (i < pivot_valuation.size()) {
      if (pivot_valuation[i] == 0) continue;
      h.push_back((std::uint32_t{1} << (ring.s() - pivot_valuation[i])) * to_vector(ring, v[i]));
    } else {
      h.push_back(to_vector(ring, v[i]));
    }
  }
  LinearCode dual(ring, n, std::move(h));
  validate_dual(code, dual);
  return dual;
}

LinearCode dual_code(const LinearCode& code) {
  if (code.ring().s() != 2) return dual_code_by_kernel(code);
  LinearCode dual = dual_z4_companion(code);
  validate_dual(code, dual);
  return dual;
}

LinearCode residue_code(const LinearCode& code) {
  if (code.ring().s() != 2) throw InvalidArgument("residue code is defined for Z4 codes");
  GeneratorMatrix g;
  for (const auto& row : code.generators()) g.push_back(row.reduced_to(RingSpec::binary()));
  return LinearCode(RingSpec::binary(), code.length(), std::move(g));
}

LinearCode torsion_code(const LinearCode& code) {
  if (code.ring().s() != 2) throw InvalidArgument("torsion code is defined for Z4 codes");
  const auto& sf = code.standard();
  GeneratorMatrix g;
  for (std::size_t i = 0; i < sf.reduced_rows.size(); ++i) {
    ZqVector row(RingSpec::binary(), code.length());
    for (std::size_t j = 0; j < code.length(); ++j) {
      // level-0 row g gives g mod 2; level-1 row 2h gives h mod 2
      const std::uint32_t x = sf.reduced_rows[i][j];
      row.set(j, sf.row_levels[i] == 0 ? x : x >> 1);
    }
    g.push_back(std::move(row));
  }
  return LinearCode(RingSpec::binary(), code.length(), std::move(g));
}

bool is_self_orthogonal(const LinearCode& code) {
  const auto& g = code.generators();
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i; j < g.size(); ++j) {
      if (dot(g[i], g[j]) != 0) return false;
    }
  }
  return true;
}

bool same_code(const LinearCode& a, const LinearCode& b) {
  if (!(a.ring() == b.ring()) || a.length() != b.length()) return false;
  if (a.two_dimension() != b.two_dimension()) return false;
  return std::all_of(a.generators().begin(), a.generators().end(), [&](const ZqVector& g) { return b.contains(g); });
}

LinearCode negate_coordinates(const LinearCode& code, std::span<const std::size_t> positions) {
  GeneratorMatrix rows = code.generators();
  for (std::size_t j : positions) {
    if (j >= code.length()) throw InvalidArgument("coordinate " + std::to_string(j) + " out of range");
    for (auto& row : rows) row.set(j, -static_cast<std::int64_t>(row[j]));
  }
  return LinearCode(code.ring(), code.length(), std::move(rows));
}

CodewordSet gray_image(const CodewordSet& words) {
  if (words.ring.s() != 2) throw InvalidArgument("the Gray map is defined over Z4 only");
  CodewordSet image{RingSpec(1), 2 * words.n, {}};
  image.words.reserve(words.words.size());
  for (const auto& w : words.words) image.words.push_back(gray_map(w));
  return image;
}

}  // namespace modcodes
