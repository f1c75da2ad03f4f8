#pragma once

// Independent reference computations for the tests. Deliberately naive: plain integer
// vectors, spans by trying every coefficient tuple, radii by max-min over everything.
// Nothing here touches the packed engines or the standard form.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "modcodes/linalg.hpp"

namespace oracle {

using Word = std::vector<int>;

inline int weight(int x, int q, modcodes::Metric m) {
  x = ((x % q) + q) % q;
  if (x == 0) return 0;
  switch (m) {
    case modcodes::Metric::Hamming:
      return 1;
    case modcodes::Metric::Lee:
      return std::min(x, q - x);
    case modcodes::Metric::Euclidean:
      return std::min(x, q - x) * std::min(x, q - x);
    case modcodes::Metric::Homogeneous:
      if (q == 2) return 1;
      return x == q / 2 ? q / 2 : q / 4;
  }
  return -1;
}

inline int distance(const Word& a, const Word& b, int q, modcodes::Metric m) {
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += weight(a[i] - b[i], q, m);
  return d;
}

/// Every word of Z_q^n in lexicographic order.
inline std::vector<Word> space(int q, std::size_t n) {
  std::vector<Word> out;
  Word w(n, 0);
  while (true) {
    out.push_back(w);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++w[i] < q) break;
      w[i] = 0;
      if (i == 0) return out;
    }
    if (n == 0) return out;
  }
}

inline std::vector<Word> rows_of(const modcodes::GeneratorMatrix& g) {
  std::vector<Word> rows;
  for (const auto& r : g) {
    Word w;
    for (std::size_t j = 0; j < r.size(); ++j) w.push_back(static_cast<int>(r[j]));
    rows.push_back(w);
  }
  return rows;
}

/// Span by all q^rows coefficient tuples.
inline std::set<Word> span(const std::vector<Word>& rows, int q, std::size_t n) {
  std::set<Word> out;
  for (const auto& coeffs : space(q, rows.size())) {
    Word w(n, 0);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t j = 0; j < n; ++j) w[j] = (w[j] + coeffs[r] * rows[r][j]) % q;
    }
    out.insert(w);
  }
  return out;
}

inline std::set<Word> span(const modcodes::LinearCode& c) {
  return span(rows_of(c.generators()), static_cast<int>(c.ring().modulus()), c.length());
}

inline int covering_radius(const std::set<Word>& words, int q, std::size_t n, modcodes::Metric m) {
  int best = -1;
  for (const auto& u : space(q, n)) {
    int nearest = 1 << 30;
    for (const auto& c : words) nearest = std::min(nearest, distance(u, c, q, m));
    best = std::max(best, nearest);
  }
  return best;
}

inline int covering_radius(const modcodes::LinearCode& c, modcodes::Metric m) {
  return covering_radius(span(c), static_cast<int>(c.ring().modulus()), c.length(), m);
}

/// Minimum distance from u to the word set.
inline int distance_to(const Word& u, const std::set<Word>& words, int q, modcodes::Metric m) {
  int nearest = 1 << 30;
  for (const auto& c : words) nearest = std::min(nearest, distance(u, c, q, m));
  return nearest;
}

inline Word to_word(const modcodes::ZqVector& v) {
  Word w;
  for (std::size_t j = 0; j < v.size(); ++j) w.push_back(static_cast<int>(v[j]));
  return w;
}

/// Random generator matrix with entries in Z_{2^s}.
inline modcodes::LinearCode random_code(std::mt19937_64& rng, modcodes::RingSpec ring, std::size_t n,
                                        std::size_t rows) {
  std::uniform_int_distribution<int> digit(0, static_cast<int>(ring.modulus()) - 1);
  modcodes::GeneratorMatrix g;
  for (std::size_t r = 0; r < rows; ++r) {
    modcodes::ZqVector v(ring, n);
    for (std::size_t j = 0; j < n; ++j) v.set(j, digit(rng));
    g.push_back(v);
  }
  return modcodes::LinearCode(ring, n, std::move(g));
}

}  // namespace oracle
