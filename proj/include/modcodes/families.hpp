#pragma once

// Constructors for the Z4 code families: repetition, block repetition, simplex and MacDonald codes
// of both types, and their duals. Each returns a LinearCode; `construct` additionally audits the
// enumerated parameters against the declared ones.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "modcodes/linalg.hpp"

namespace modcodes {

enum class Family {
  RepetitionAlpha,
  RepetitionBeta,
  BlockRepetition,
  BlockRep2n,
  BlockRep3n,
  BlockRepMN,
  SimplexAlpha,
  SimplexBeta,
  MacDonaldAlpha,
  MacDonaldBeta,
  Dual,
};

std::string_view to_string(Family f);
Family parse_family(std::string_view name);

struct FamilySpec {
  Family family = Family::RepetitionAlpha;
  // only the parameters the family uses are read
  std::uint64_t n = 0;   // repetition length, or block size for the BRep families
  std::uint64_t m = 0;   // size of the 1-block (BlockRepetition, BlockRepMN)
  std::uint64_t n2 = 0;  // size of the 2-block (BlockRepetition)
  std::uint64_t n3 = 0;  // size of the 3-block (BlockRepetition)
  std::uint64_t k = 0;
  std::uint64_t u = 0;
  /// MacDonald beta with u = 1 deletes the column block [0; G_1^beta], G_1^beta = [1].
  bool allow_beta_u1 = false;
  /// For Family::Dual.
  std::shared_ptr<const FamilySpec> inner;

  std::string label() const;
};

inline constexpr std::uint64_t kDefaultSimplexBudget = 4;

/// Parameters as measured or as declared: [n, k, d_H, d_HW(= d_L over Z4), d_E].
struct ParameterTuple {
  std::uint64_t length = 0;
  std::uint64_t two_dimension = 0;
  std::optional<std::uint64_t> d_hamming;
  std::optional<std::uint64_t> d_lee;
  std::optional<std::uint64_t> d_euclidean;

  std::string to_string() const;
};

LinearCode repetition_alpha(std::uint64_t n);
LinearCode repetition_beta(std::uint64_t n);
/// Single row (1..1 | 2..2 | 3..3) with block sizes m, n2, n3.
LinearCode block_repetition(std::uint64_t m, std::uint64_t n2, std::uint64_t n3);

GeneratorMatrix simplex_alpha_matrix(std::uint64_t k);
GeneratorMatrix simplex_beta_matrix(std::uint64_t k);
LinearCode simplex_alpha(std::uint64_t k, std::uint64_t max_k = kDefaultSimplexBudget);
LinearCode simplex_beta(std::uint64_t k, std::uint64_t max_k = kDefaultSimplexBudget);

/// Removes from `g` the columns of `block`, matching each block column (in order) to the leftmost
/// not-yet-removed column of `g` with the same content. Throws if some column has no match.
GeneratorMatrix delete_columns(const GeneratorMatrix& g, const GeneratorMatrix& block);

/// The column block removed from G_k to form the MacDonald matrix: k - u zero rows over G_u.
GeneratorMatrix macdonald_deleted_block(Family family, std::uint64_t k, std::uint64_t u);
LinearCode macdonald_alpha(std::uint64_t k, std::uint64_t u, std::uint64_t max_k = kDefaultSimplexBudget);
LinearCode macdonald_beta(std::uint64_t k, std::uint64_t u, bool allow_u1 = false,
                          std::uint64_t max_k = kDefaultSimplexBudget);

/// Declared parameter tuple for the family, where one is stated.
ParameterTuple declared_parameters(const FamilySpec& spec);

struct AuditPolicy {
  /// Enumerate codewords up to this 2-dimension.
  std::size_t max_enumeration_two_dim = 16;
  /// Fall back to increasing-weight search for minimum weights up to this weight.
  std::uint64_t min_weight_search_cap = 4;
};

/// Measured parameters. Minimum weights come from enumeration when the code is small enough,
/// else from increasing-weight search bounded by the policy's cap (missing when not found).
ParameterTuple measure_parameters(const LinearCode& code, const AuditPolicy& policy = {});

enum class AuditStatus { Passed, Failed, Skipped };
std::string_view to_string(AuditStatus s);

struct FamilyCode {
  FamilySpec spec;
  LinearCode code;
  ParameterTuple declared;
  std::optional<ParameterTuple> measured;
  AuditStatus audit = AuditStatus::Skipped;
  std::string audit_detail;
};

/// Builds the code, then audits every declared parameter that can be measured within the policy.
FamilyCode construct(const FamilySpec& spec, const AuditPolicy& policy = {});

/// Builds just the code for a spec.
LinearCode build_code(const FamilySpec& spec);

}  // namespace modcodes
