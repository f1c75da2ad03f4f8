#pragma once

// Lower and upper bounds on the covering radius, and the block constructions they reason about.

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "modcodes/covering.hpp"
#include "modcodes/linalg.hpp"

namespace modcodes {

using BigInt = boost::multiprecision::cpp_int;

/// Smallest r with |C| * sum_{i<=r} binom(N, i) >= 2^N, N = 2^{s-1} n: the homogeneous-weight
/// sphere-covering bound via the binary image of length N. Exact integer arithmetic.
std::uint64_t sphere_covering_lower_bound(std::uint64_t n, const BigInt& code_size, int s);

/// The same argument for any metric using the true ball sizes in Z_{2^s}^n:
/// smallest r with 2^{two_dim} * |B_r| >= 2^{s n}.
std::uint64_t ball_covering_lower_bound(RingSpec ring, std::size_t n, Metric metric, std::size_t two_dim);

/// Distinct nonzero weights among the codewords, by enumeration.
std::optional<std::uint64_t> distinct_nonzero_weights(const LinearCode& code, Metric metric,
                                                      std::size_t max_two_dim = kDefaultEnumerationTwoDim);

/// r_HW(C) <= number of distinct nonzero homogeneous weights of C^perp. Empty when the dual is
/// too large to enumerate.
std::optional<std::uint64_t> delsarte_bound(const LinearCode& code,
                                            std::size_t max_two_dim = kDefaultEnumerationTwoDim);

/// The code generated by [[0 | G1], [G0 | A]]. `connect` has rows(G0) rows of length n1.
LinearCode mattson_stack(const LinearCode& c0, const LinearCode& c1, const GeneratorMatrix& connect);

/// Concatenation (direct sum) generated by [[G0 | 0], [0 | G1]].
LinearCode direct_sum(const LinearCode& c0, const LinearCode& c1);

/// Splits a code whose generator matrix has the shape [[0 | G1], [G0 | A]] with G1 the first
/// `top_rows` rows and G0 occupying the first `left_cols` columns. Throws if the zero block is not zero.
struct MattsonSplit {
  LinearCode c0;
  LinearCode c1;
};
MattsonSplit mattson_split(const LinearCode& code, std::size_t top_rows, std::size_t left_cols);

struct BoundReport {
  Metric metric = Metric::Homogeneous;
  std::uint64_t sphere_covering_lb = 0;
  std::optional<std::uint64_t> delsarte_ub;
  std::optional<std::uint64_t> mattson_ub;
  std::string mattson_decomposition;
};

/// Sphere-covering and Delsarte bounds (homogeneous weight), plus the Mattson sum when a split is
/// given and both component radii are computable within the budget.
BoundReport compute_bounds(const LinearCode& code, Metric metric, const SearchBudget& budget = {},
                           std::optional<std::pair<std::size_t, std::size_t>> split = std::nullopt);

}  // namespace modcodes
