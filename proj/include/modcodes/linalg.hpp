#pragma once

// Generator-matrix algebra over Z_{2^s}.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "modcodes/ring.hpp"

namespace modcodes {

/// Rows of a generator matrix. All rows share one ring and one length.
using GeneratorMatrix = std::vector<ZqVector>;

/// Column-wise view helpers used by the code constructors.
GeneratorMatrix hconcat(const GeneratorMatrix& left, const GeneratorMatrix& right);
GeneratorMatrix constant_row_block(RingSpec ring, std::size_t rows, std::size_t cols, std::uint32_t value);
std::vector<ZqVector> matrix_columns(const GeneratorMatrix& g);
GeneratorMatrix matrix_from_columns(RingSpec ring, std::size_t rows, const std::vector<ZqVector>& columns);

/// Block-triangular standard form of a generator matrix.
///
/// Row i of `rows` reads, in permuted column order, as 2^level * (0 .. 0 1 0 .. 0 *),
/// giving the shape [I A ..; 0 2I ..; ..] with blocks k_0, k_1, ..., k_{s-1}.
struct StandardForm {
  /// Rows with columns permuted into the block shape.
  GeneratorMatrix rows;
  /// Column j of `rows` is column `column_permutation[j]` of the input matrix.
  std::vector<std::size_t> column_permutation;
  /// k_0, ..., k_{s-1}.
  std::vector<std::size_t> block_sizes;
  /// The same rows in the input column order; they generate the input code.
  GeneratorMatrix reduced_rows;
  /// Input column holding each row's pivot 2^level.
  std::vector<std::size_t> pivot_columns;
  std::vector<int> row_levels;

  /// k = sum (s - i) k_i.
  std::size_t two_dimension() const;
};

StandardForm standard_form(RingSpec ring, std::size_t n, std::span<const ZqVector> generators);

/// A linear code over Z_{2^s} given by generators. Immutable; the standard form is computed eagerly.
class LinearCode {
 public:
  LinearCode(RingSpec ring, std::size_t n, GeneratorMatrix generators);

  /// The code {0} of length n.
  static LinearCode zero(RingSpec ring, std::size_t n);
  /// The whole space Z_{2^s}^n.
  static LinearCode full(RingSpec ring, std::size_t n);

  RingSpec ring() const { return ring_; }
  std::size_t length() const { return n_; }
  const GeneratorMatrix& generators() const { return generators_; }
  const StandardForm& standard() const { return standard_; }
  std::size_t two_dimension() const { return standard_.two_dimension(); }
  const std::vector<std::size_t>& block_sizes() const { return standard_.block_sizes; }
  /// Only unit pivots (k_i = 0 for i > 0).
  bool is_free() const;

  /// Membership by reduction against the standard form.
  bool contains(const ZqVector& v) const;

 private:
  RingSpec ring_;
  std::size_t n_;
  GeneratorMatrix generators_;
  StandardForm standard_;
};

/// Rows ordered as in the block layout [G0; 2G0, G1; ...; 2^{s-1}G0, ..., G_{s-1}], so that
/// 2 * row i is a 2-linear combination of later rows and every codeword is a unique
/// Z2-combination of the rows.
GeneratorMatrix two_basis(const LinearCode& code);

struct CodewordSet {
  RingSpec ring;
  std::size_t n;
  std::vector<ZqVector> words;
};

inline constexpr std::size_t kDefaultEnumerationTwoDim = 26;

/// All 2^k codewords, generated by a Gray walk over Z2 coefficients of the 2-basis.
CodewordSet enumerate_codewords(const LinearCode& code, std::size_t max_two_dim = kDefaultEnumerationTwoDim);

/// Dual code. Over Z4 the parity-check companion of the standard form is used;
/// other rings go through dual_code_by_kernel. The result is checked for
/// orthogonality and for 2-dim(C) + 2-dim(C^perp) = s n.
LinearCode dual_code(const LinearCode& code);

/// Dual computed as the kernel of x -> G x^T by diagonalising G with row and column operations.
LinearCode dual_code_by_kernel(const LinearCode& code);

/// Binary code of mod-2 reductions (Z4 only).
LinearCode residue_code(const LinearCode& code);
/// Binary code {c : 2c in C} (Z4 only).
LinearCode torsion_code(const LinearCode& code);

bool is_self_orthogonal(const LinearCode& code);

/// Same codeword set, possibly different generators.
bool same_code(const LinearCode& a, const LinearCode& b);

/// Sign-change equivalence: multiplies the listed coordinates by -1.
LinearCode negate_coordinates(const LinearCode& code, std::span<const std::size_t> positions);

/// Coordinate-wise Gray image of a Z4 word set: a binary (generally nonlinear) set of length 2n.
CodewordSet gray_image(const CodewordSet& words);

}  // namespace modcodes
