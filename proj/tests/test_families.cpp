#include <doctest.h>

#include <algorithm>
#include <map>

#include "modcodes/covering.hpp"
#include "modcodes/families.hpp"
#include "oracle.hpp"

using namespace modcodes;

namespace {

const RingSpec kZ4 = RingSpec::z4();

std::uint64_t min_weight(const LinearCode& code, Metric m) {
  std::uint64_t best = UINT64_MAX;
  for (const auto& w : oracle::span(code)) {
    const int d = oracle::distance(w, oracle::Word(w.size(), 0), 4, m);
    if (d > 0) best = std::min<std::uint64_t>(best, d);
  }
  return best;
}

FamilySpec spec(Family f, std::uint64_t n, std::uint64_t m = 0, std::uint64_t k = 0, std::uint64_t u = 0) {
  FamilySpec s;
  s.family = f;
  s.n = n;
  s.m = m;
  s.k = k;
  s.u = u;
  return s;
}

std::map<oracle::Word, int> column_multiset(const GeneratorMatrix& g) {
  std::map<oracle::Word, int> out;
  for (const auto& c : matrix_columns(g)) ++out[oracle::to_word(c)];
  return out;
}

}  // namespace

TEST_SUITE("families") {
  TEST_CASE("repetition codes") {
    CHECK(oracle::span(repetition_alpha(1)) == std::set<oracle::Word>{{0}, {2}});
    const auto a2 = repetition_alpha(2);
    CHECK(oracle::span(a2) == std::set<oracle::Word>{{0, 0}, {2, 2}});
    CHECK(min_weight(a2, Metric::Lee) == 4);
    CHECK(repetition_alpha(3).two_dimension() == 1);
    CHECK(oracle::span(repetition_beta(1)).size() == 4);
    const auto b2 = repetition_beta(2);
    CHECK(oracle::span(b2) == std::set<oracle::Word>{{0, 0}, {1, 1}, {2, 2}, {3, 3}});
    CHECK(min_weight(b2, Metric::Lee) == 2);
    const auto b4 = repetition_beta(4);
    CHECK(oracle::span(b4).size() == 4);
    CHECK(min_weight(b4, Metric::Lee) == 4);
    for (std::uint64_t n = 1; n <= 6; ++n) {
      CHECK(min_weight(repetition_alpha(n), Metric::Lee) == 2 * n);
      CHECK(min_weight(repetition_beta(n), Metric::Hamming) == n);
    }
    CHECK_THROWS_AS(repetition_alpha(0), InvalidArgument);
    CHECK_THROWS_AS(repetition_beta(0), InvalidArgument);
  }

  TEST_CASE("block repetition codes") {
    const auto c = block_repetition(1, 1, 1);
    REQUIRE(c.generators().size() == 1);
    CHECK(c.generators()[0].to_string() == "1 2 3");
    for (const auto& w : oracle::span(c)) {
      const int lee = oracle::distance(w, oracle::Word(3, 0), 4, Metric::Lee);
      CHECK((lee == 0 || lee == 4));
    }
    const auto d = block_repetition(2, 2, 0);
    CHECK(d.length() == 4);
    CHECK(d.two_dimension() == 2);
    CHECK(min_weight(d, Metric::Hamming) == 2);
    CHECK(min_weight(d, Metric::Lee) == 4);
    CHECK(min_weight(d, Metric::Euclidean) == 8);
    CHECK_THROWS_AS(block_repetition(0, 1, 1), InvalidArgument);
    CHECK_THROWS_AS(block_repetition(0, 0, 0), InvalidArgument);
  }

  TEST_CASE("simplex alpha") {
    const auto g1 = simplex_alpha_matrix(1);
    REQUIRE(g1.size() == 1);
    CHECK(g1[0].to_string() == "0 1 2 3");
    const auto s2 = simplex_alpha(2);
    CHECK(s2.length() == 16);
    CHECK(oracle::span(s2).size() == 16);
    CHECK(min_weight(s2, Metric::Hamming) == 8);
    // top row 0..0|1..1|2..2|3..3 over four copies of G_1
    const auto& top = s2.generators()[0];
    for (std::size_t j = 0; j < 16; ++j) CHECK(top[j] == j / 4);
    CHECK_THROWS_AS(simplex_alpha(0), InvalidArgument);
    CHECK_THROWS_AS(simplex_alpha(5), InvalidArgument);
    CHECK_NOTHROW(simplex_alpha(5, 5).length());
  }

  TEST_CASE("simplex alpha has constant Lee weight 4^k (k <= 3)") {
    for (std::uint64_t k = 1; k <= 3; ++k) {
      const auto code = simplex_alpha(k);
      const auto words = enumerate_codewords(code);
      CHECK(words.words.size() == (std::size_t{1} << (2 * k)));
      for (const auto& w : words.words) {
        if (!w.is_zero()) CHECK(weight(w, Metric::Lee) == (std::uint64_t{1} << (2 * k)));
      }
    }
  }

  TEST_CASE("simplex beta") {
    const auto g2 = simplex_beta_matrix(2);
    REQUIRE(g2.size() == 2);
    CHECK(g2[0].to_string() == "1 1 1 1 0 2");
    CHECK(g2[1].to_string() == "0 1 2 3 1 1");
    const auto s2 = simplex_beta(2);
    CHECK(s2.length() == 6);
    CHECK(min_weight(s2, Metric::Lee) == 6);
    CHECK(simplex_beta(3).length() == 28);
    CHECK(simplex_beta(4).length() == 120);
    CHECK_THROWS_AS(simplex_beta(1), InvalidArgument);
  }

  TEST_CASE("simplex beta columns are pairwise inequivalent unit columns") {
    // every column has a unit entry and no two columns agree up to sign
    for (std::uint64_t k = 2; k <= 4; ++k) {
      const auto cols = matrix_columns(simplex_beta_matrix(k));
      std::set<oracle::Word> classes;
      for (const auto& c : cols) {
        auto w = oracle::to_word(c);
        auto neg = w;
        for (auto& x : neg) x = (4 - x) % 4;
        classes.insert(std::min(w, neg));
      }
      CHECK(classes.size() == cols.size());
      std::size_t unit = 0;
      for (const auto& c : cols) {
        bool has_unit = false;
        for (std::size_t i = 0; i < c.size(); ++i) has_unit = has_unit || (c[i] & 1);
        unit += has_unit;
      }
      const std::uint64_t p = std::uint64_t{1} << (2 * k), h = std::uint64_t{1} << k;
      CHECK(unit == cols.size());
      CHECK(cols.size() == (p - h) / 2);
    }
  }

  TEST_CASE("MacDonald codes") {
    const auto a = macdonald_alpha(2, 1);
    CHECK(a.length() == 12);
    CHECK(a.two_dimension() == 4);
    const auto b = macdonald_beta(3, 2);
    CHECK(b.length() == 22);
    CHECK(b.two_dimension() == 6);
    CHECK_THROWS_AS(macdonald_alpha(2, 2), InvalidArgument);
    CHECK_THROWS_AS(macdonald_alpha(2, 0), InvalidArgument);
    CHECK_THROWS_AS(macdonald_beta(3, 1), InvalidArgument);
    CHECK(macdonald_beta(2, 1, true).length() == 5);
    for (std::uint64_t k = 2; k <= 4; ++k) {
      for (std::uint64_t u = 1; u < k; ++u) {
        const std::uint64_t pk = std::uint64_t{1} << k, pu = std::uint64_t{1} << u;
        CHECK(macdonald_alpha(k, u).length() == pk * pk - pu * pu);
        CHECK(macdonald_alpha(k, u).is_free());
        if (u >= 2) {
          CHECK(macdonald_beta(k, u).length() == (pk / 2 - pu / 2) * (pk + pu - 1));
          CHECK(macdonald_beta(k, u).is_free());
          CHECK(macdonald_beta(k, u).two_dimension() == 2 * k);
        }
      }
    }
  }

  TEST_CASE("MacDonald deletion removes exactly the [0; G_u] column multiset") {
    for (Family f : {Family::MacDonaldAlpha, Family::MacDonaldBeta}) {
      for (std::uint64_t k = 2; k <= 4; ++k) {
        for (std::uint64_t u = f == Family::MacDonaldAlpha ? 1 : 2; u < k; ++u) {
          const auto full = f == Family::MacDonaldAlpha ? simplex_alpha_matrix(k) : simplex_beta_matrix(k);
          const auto gu = f == Family::MacDonaldAlpha ? simplex_alpha_matrix(u) : simplex_beta_matrix(u);
          const auto block = macdonald_deleted_block(f, k, u);
          REQUIRE(block.size() == k);
          // the block is k-u zero rows stacked over G_u
          for (std::uint64_t r = 0; r < k - u; ++r) CHECK(block[r].is_zero());
          for (std::uint64_t r = 0; r < u; ++r) CHECK(block[k - u + r] == gu[r]);
          const auto kept = f == Family::MacDonaldAlpha ? macdonald_alpha(k, u) : macdonald_beta(k, u);
          auto all = column_multiset(full);
          for (const auto& [col, count] : column_multiset(block)) all[col] -= count;
          std::erase_if(all, [](const auto& e) { return e.second == 0; });
          CHECK(column_multiset(kept.generators()) == all);
        }
      }
    }
  }

  TEST_CASE("delete_columns matches left to right") {
    const GeneratorMatrix g = {ZqVector(kZ4, {1, 2, 1, 3})};
    const auto out = delete_columns(g, {ZqVector(kZ4, {1})});
    CHECK(out[0].to_string() == "2 1 3");
    CHECK_THROWS_AS(delete_columns(g, {ZqVector(kZ4, {0})}), InvalidArgument);
  }

  TEST_CASE("duals of the simplex codes") {
    for (std::uint64_t k = 2; k <= 3; ++k) {
      const auto dual = dual_code(simplex_beta(k));
      const std::uint64_t p = std::uint64_t{1} << (2 * k), h = std::uint64_t{1} << k;
      CHECK(dual.two_dimension() == p - h - 2 * k);
      CHECK_FALSE(minimum_weight_by_search(dual, Metric::Lee, 2).has_value());
      CHECK(minimum_weight_by_search(dual, Metric::Lee, 3) == std::optional<std::uint64_t>(3));
    }
    for (std::uint64_t k = 1; k <= 2; ++k) {
      const auto dual = dual_code(simplex_alpha(k));
      CHECK(dual.two_dimension() == (std::uint64_t{2} << (2 * k)) - 2 * k);
    }
  }

  TEST_CASE("parameter audit passes for every in-budget constructor") {
    std::vector<FamilySpec> grid;
    for (std::uint64_t n = 1; n <= 5; ++n) {
      grid.push_back(spec(Family::RepetitionAlpha, n));
      grid.push_back(spec(Family::RepetitionBeta, n));
      grid.push_back(spec(Family::BlockRep2n, n));
      grid.push_back(spec(Family::BlockRep3n, n));
      grid.push_back(spec(Family::BlockRepMN, n, 1 + n % 3));
    }
    for (std::uint64_t k = 1; k <= 3; ++k) grid.push_back(spec(Family::SimplexAlpha, 0, 0, k));
    for (std::uint64_t k = 2; k <= 3; ++k) grid.push_back(spec(Family::SimplexBeta, 0, 0, k));
    grid.push_back(spec(Family::MacDonaldAlpha, 0, 0, 2, 1));
    grid.push_back(spec(Family::MacDonaldAlpha, 0, 0, 3, 2));
    grid.push_back(spec(Family::MacDonaldBeta, 0, 0, 3, 2));
    for (std::uint64_t k = 2; k <= 3; ++k) {
      FamilySpec d;
      d.family = Family::Dual;
      d.inner = std::make_shared<FamilySpec>(spec(Family::SimplexBeta, 0, 0, k));
      grid.push_back(d);
    }
    for (const auto& s : grid) {
      const auto fc = construct(s);
      INFO(s.label(), " declared ", fc.declared.to_string(), " ", fc.audit_detail);
      CHECK(fc.audit != AuditStatus::Failed);
      if (fc.measured) CHECK(fc.measured->length == fc.declared.length);
    }
    // small instances measure every declared value
    CHECK(construct(spec(Family::BlockRep3n, 2)).audit == AuditStatus::Passed);
    CHECK(construct(spec(Family::SimplexAlpha, 0, 0, 2)).audit == AuditStatus::Passed);
  }

  TEST_CASE("measured parameters agree with the oracle") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 30; ++trial) {
      const auto code = oracle::random_code(rng, kZ4, 2 + trial % 4, 1 + trial % 2);
      const auto p = measure_parameters(code);
      CHECK(p.length == code.length());
      CHECK(p.two_dimension == code.two_dimension());
      if (oracle::span(code).size() > 1) {
        CHECK(p.d_hamming == min_weight(code, Metric::Hamming));
        CHECK(p.d_lee == min_weight(code, Metric::Lee));
        CHECK(p.d_euclidean == min_weight(code, Metric::Euclidean));
      }
    }
  }

  TEST_CASE("family names and specs") {
    CHECK(parse_family("macdonald-beta") == Family::MacDonaldBeta);
    CHECK_THROWS_AS(parse_family("hadamard"), InvalidArgument);
    auto s = spec(Family::SimplexBeta, 0, 0, 1);
    CHECK_THROWS_AS(build_code(s), InvalidArgument);
    CHECK(build_code(spec(Family::BlockRep3n, 2)).length() == 6);
    CHECK(build_code(spec(Family::BlockRepMN, 2, 3)).length() == 5);
    CHECK(build_code(spec(Family::BlockRep2n, 2)).length() == 4);
  }
}
