#include <doctest.h>

#include <random>

#include "modcodes/linalg.hpp"
#include "oracle.hpp"

using namespace modcodes;

namespace {

const RingSpec kZ4 = RingSpec::z4();

LinearCode z4code(std::size_t n, std::initializer_list<std::initializer_list<int>> rows) {
  GeneratorMatrix g;
  for (auto r : rows) g.emplace_back(kZ4, r);
  return LinearCode(kZ4, n, g);
}

std::set<oracle::Word> words_of(const CodewordSet& set) {
  std::set<oracle::Word> out;
  for (const auto& w : set.words) out.insert(oracle::to_word(w));
  return out;
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("standard form examples") {
    CHECK(z4code(1, {{2}}).block_sizes() == std::vector<std::size_t>{0, 1});
    CHECK(z4code(2, {{1, 1}, {0, 2}}).block_sizes() == std::vector<std::size_t>{1, 1});
    const auto c = z4code(2, {{2, 1}});
    CHECK(c.block_sizes() == std::vector<std::size_t>{1, 0});
    // the unit sits in column 1, so the permutation moves it first
    CHECK(c.standard().column_permutation.front() == 1);
    CHECK(words_of(enumerate_codewords(c)) == oracle::span(c));
    CHECK(LinearCode::zero(kZ4, 3).block_sizes() == std::vector<std::size_t>{0, 0});
  }

  TEST_CASE("standard form shape") {
    std::mt19937_64 rng(11);
    for (int s : {2, 3}) {
      const RingSpec ring(s);
      for (int trial = 0; trial < 40; ++trial) {
        const auto code = oracle::random_code(rng, ring, 2 + trial % 4, 1 + trial % 3);
        const auto& sf = code.standard();
        std::size_t row = 0;
        for (int level = 0; level < s; ++level) {
          for (std::size_t i = 0; i < sf.block_sizes[level]; ++i, ++row) {
            const auto pivot = 1u << level;
            // pivot entry 2^level at the row's own block position, zeros before it in permuted order
            CHECK(sf.rows[row][row] == pivot);
            for (std::size_t j = 0; j < row; ++j) CHECK(sf.rows[row][j] == 0);
            for (std::size_t r = 0; r < sf.rows.size(); ++r) {
              if (r != row && sf.row_levels[r] == level) CHECK(sf.rows[r][row] == 0);
            }
          }
        }
        CHECK(row == sf.rows.size());
      }
    }
  }

  TEST_CASE("standard form round trip (random, n <= 6, s = 2)") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 1 + trial % 6;
      const auto code = oracle::random_code(rng, kZ4, n, 1 + trial % 3);
      const auto& sf = code.standard();
      // permuted standard rows generate the permuted code
      std::set<oracle::Word> permuted;
      for (const auto& w : oracle::span(code)) {
        oracle::Word p(n);
        for (std::size_t j = 0; j < n; ++j) p[j] = w[sf.column_permutation[j]];
        permuted.insert(p);
      }
      CHECK(oracle::span(oracle::rows_of(sf.rows), 4, n) == permuted);
      CHECK(oracle::span(oracle::rows_of(sf.reduced_rows), 4, n) == oracle::span(code));
      CHECK(oracle::span(code).size() == (std::size_t{1} << code.two_dimension()));
      // identical weight distributions under every metric
      for (Metric m : kAllMetrics) {
        std::multiset<int> a, b;
        for (const auto& w : oracle::span(code)) b.insert(oracle::distance(w, oracle::Word(n, 0), 4, m));
        for (const auto& w : permuted) a.insert(oracle::distance(w, oracle::Word(n, 0), 4, m));
        CHECK(a == b);
      }
    }
  }

  TEST_CASE("two_basis examples") {
    const auto b1 = two_basis(z4code(1, {{1}}));
    REQUIRE(b1.size() == 2);
    CHECK(b1[0].to_string() == "1");
    CHECK(b1[1].to_string() == "2");
    const auto b2 = two_basis(z4code(1, {{2}}));
    REQUIRE(b2.size() == 1);
    CHECK(b2[0].to_string() == "2");
    CHECK(two_basis(z4code(4, {{0, 1, 2, 3}})).size() == 2);
  }

  TEST_CASE("two_basis: unique Z2 combinations and 2*row_i in the span of later rows") {
    std::mt19937_64 rng(3);
    for (int s : {2, 3}) {
      const RingSpec ring(s);
      const int q = static_cast<int>(ring.modulus());
      for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const auto code = oracle::random_code(rng, ring, n, 1 + trial % 3);
        const auto basis = two_basis(code);
        REQUIRE(basis.size() == code.two_dimension());
        const auto rows = oracle::rows_of(basis);
        // Z2 combinations are distinct and exhaust the code
        std::set<oracle::Word> combos;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rows.size()); ++mask) {
          oracle::Word w(n, 0);
          for (std::size_t r = 0; r < rows.size(); ++r) {
            if (mask >> r & 1) {
              for (std::size_t j = 0; j < n; ++j) w[j] = (w[j] + rows[r][j]) % q;
            }
          }
          combos.insert(w);
        }
        CHECK(combos.size() == (std::size_t{1} << rows.size()));
        CHECK(combos == oracle::span(code));
        for (std::size_t i = 0; i < rows.size(); ++i) {
          oracle::Word twice(n);
          for (std::size_t j = 0; j < n; ++j) twice[j] = 2 * rows[i][j] % q;
          std::set<oracle::Word> later;
          for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (rows.size() - i - 1)); ++mask) {
            oracle::Word w(n, 0);
            for (std::size_t r = i + 1; r < rows.size(); ++r) {
              if (mask >> (r - i - 1) & 1) {
                for (std::size_t j = 0; j < n; ++j) w[j] = (w[j] + rows[r][j]) % q;
              }
            }
            later.insert(w);
          }
          CHECK(later.count(twice) == 1);
        }
      }
    }
  }

  TEST_CASE("enumerate_codewords examples") {
    const auto set = enumerate_codewords(z4code(2, {{1, 1}}));
    CHECK(words_of(set) == std::set<oracle::Word>{{0, 0}, {1, 1}, {2, 2}, {3, 3}});
    const auto empty = enumerate_codewords(LinearCode(kZ4, 3, {}));
    CHECK(words_of(empty) == std::set<oracle::Word>{{0, 0, 0}});
    const auto s1 = enumerate_codewords(z4code(4, {{0, 1, 2, 3}}));
    REQUIRE(s1.words.size() == 4);
    for (const auto& w : s1.words) CHECK(weight(w, Metric::Lee) == (w.is_zero() ? 0u : 4u));
    CHECK_THROWS_AS(enumerate_codewords(LinearCode::full(kZ4, 10), 16), BudgetExceeded);
  }

  TEST_CASE("dual examples") {
    const auto d = dual_code(z4code(2, {{1, 1}}));
    CHECK(words_of(enumerate_codewords(d)) == std::set<oracle::Word>{{0, 0}, {1, 3}, {2, 2}, {3, 1}});
    CHECK(dual_code(LinearCode::full(kZ4, 3)).two_dimension() == 0);
    GeneratorMatrix g = {ZqVector(kZ4, {0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 3}),
                         ZqVector(kZ4, {0, 1, 2, 3, 0, 1, 2, 3, 0, 1, 2, 3, 0, 1, 2, 3})};
    CHECK(dual_code(LinearCode(kZ4, 16, g)).two_dimension() == 2 * 16 - 4);
  }

  TEST_CASE("dual against orthogonality filter, companion vs kernel, involution, counting") {
    std::mt19937_64 rng(5);
    for (int s : {1, 2, 3}) {
      const RingSpec ring(s);
      const int q = static_cast<int>(ring.modulus());
      for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + trial % (s == 3 ? 3 : 5);
        const auto code = oracle::random_code(rng, ring, n, trial % 4);
        const auto dual = dual_code(code);
        const auto words = oracle::span(code);
        std::set<oracle::Word> expected;
        for (const auto& v : oracle::space(q, n)) {
          bool orth = true;
          for (const auto& c : words) {
            int dot = 0;
            for (std::size_t j = 0; j < n; ++j) dot += v[j] * c[j];
            orth = orth && dot % q == 0;
          }
          if (orth) expected.insert(v);
        }
        CHECK(oracle::span(dual) == expected);
        CHECK(same_code(dual, dual_code_by_kernel(code)));
        CHECK(same_code(dual_code(dual), code));
        CHECK(words.size() * expected.size() == (std::size_t{1} << (s * n)));
      }
    }
  }

  TEST_CASE("residue and torsion examples") {
    CHECK(words_of(enumerate_codewords(residue_code(z4code(2, {{2, 2}})))) == std::set<oracle::Word>{{0, 0}});
    CHECK(words_of(enumerate_codewords(residue_code(z4code(2, {{1, 1}})))) ==
          std::set<oracle::Word>{{0, 0}, {1, 1}});
    CHECK(words_of(enumerate_codewords(residue_code(z4code(2, {{1, 2}, {2, 0}})))) ==
          std::set<oracle::Word>{{0, 0}, {1, 0}});
    CHECK(words_of(enumerate_codewords(torsion_code(z4code(1, {{2}})))) == std::set<oracle::Word>{{0}, {1}});
    CHECK(words_of(enumerate_codewords(torsion_code(LinearCode::zero(kZ4, 1)))) == std::set<oracle::Word>{{0}});
    CHECK(words_of(enumerate_codewords(torsion_code(z4code(2, {{1, 1}})))) ==
          std::set<oracle::Word>{{0, 0}, {1, 1}});
    CHECK_THROWS_AS(residue_code(LinearCode::zero(RingSpec(3), 2)), InvalidArgument);
  }

  TEST_CASE("residue and torsion against their definitions (random)") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 1 + trial % 5;
      const auto code = oracle::random_code(rng, kZ4, n, 1 + trial % 3);
      const auto words = oracle::span(code);
      std::set<oracle::Word> res, tor;
      for (const auto& w : words) {
        oracle::Word r(n);
        for (std::size_t j = 0; j < n; ++j) r[j] = w[j] % 2;
        res.insert(r);
      }
      for (const auto& v : oracle::space(2, n)) {
        oracle::Word twice(n);
        for (std::size_t j = 0; j < n; ++j) twice[j] = 2 * v[j];
        if (words.count(twice)) tor.insert(v);
      }
      CHECK(oracle::span(residue_code(code)) == res);
      CHECK(oracle::span(torsion_code(code)) == tor);
    }
  }

  TEST_CASE("self-orthogonality") {
    CHECK(is_self_orthogonal(z4code(2, {{2, 2}})));
    CHECK_FALSE(is_self_orthogonal(z4code(2, {{1, 0}})));
    CHECK(is_self_orthogonal(LinearCode::zero(kZ4, 3)));
  }

  TEST_CASE("membership") {
    const auto code = z4code(3, {{1, 1, 2}, {0, 2, 2}});
    for (const auto& v : oracle::space(4, 3)) {
      ZqVector z(kZ4, 3);
      for (std::size_t j = 0; j < 3; ++j) z.set(j, v[j]);
      CHECK(code.contains(z) == (oracle::span(code).count(v) == 1));
    }
  }

  TEST_CASE("sign-change equivalence preserves Lee and Euclidean weight distributions") {
    const auto code = z4code(4, {{1, 2, 3, 1}, {0, 2, 0, 2}});
    const std::vector<std::size_t> flip = {0, 2};
    const auto neg = negate_coordinates(code, flip);
    for (Metric m : kAllMetrics) {
      std::multiset<std::uint64_t> a, b;
      for (const auto& w : enumerate_codewords(code).words) a.insert(weight(w, m));
      for (const auto& w : enumerate_codewords(neg).words) b.insert(weight(w, m));
      CHECK(a == b);
    }
  }

  TEST_CASE("generators are validated") {
    CHECK_THROWS_AS(LinearCode(kZ4, 3, {ZqVector(kZ4, {1, 1})}), InvalidArgument);
    CHECK_THROWS_AS(LinearCode(kZ4, 1, {ZqVector(RingSpec(3), {1})}), InvalidArgument);
  }
}
