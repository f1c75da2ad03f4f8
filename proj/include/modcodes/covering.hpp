#pragma once

// Exact covering-radius engines.
//
// Three independent routes compute r_d(C) = max_u min_c d(u, c):
//   direct    every ambient vector against every codeword (also works for nonlinear word sets)
//   syndrome  one pass over the ambient space filling a coset-leader table
//   bfs       vectors in increasing weight order until every coset is reached
// All of them refuse to run past their budget rather than return a partial answer as exact.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "modcodes/linalg.hpp"
#include "modcodes/ring.hpp"

namespace modcodes {

struct SearchBudget {
  std::uint64_t distance_evaluations = std::uint64_t{1} << 34;
  std::uint64_t syndrome_vectors = std::uint64_t{1} << 32;
  std::uint64_t table_entries = std::uint64_t{1} << 28;
  std::uint64_t bfs_vectors = std::uint64_t{1} << 30;
  unsigned threads = 1;
};

enum class Method { Auto, Direct, Syndrome, Bfs, BoundOnly };

std::string_view to_string(Method m);
Method parse_method(std::string_view name);

struct SearchStats {
  std::uint64_t vectors_visited = 0;
  std::uint64_t distance_evaluations = 0;
  double seconds = 0.0;
  unsigned threads = 1;
};

struct RadiusReport {
  Metric metric = Metric::Hamming;
  Method method = Method::Auto;
  bool exact = false;
  std::uint64_t lo = 0;
  /// Upper end of the interval; empty means unbounded. Equal to lo when exact.
  std::optional<std::uint64_t> hi;
  /// A deep hole when exact.
  std::optional<ZqVector> witness;
  SearchStats stats;
  std::string note;

  /// The exact radius; throws if the report only holds an interval.
  std::uint64_t value() const;
};

/// Exhaustive max-min over Z_{2^s}^n x C. The witness is the lexicographically first deep hole.
RadiusReport covering_radius_direct(const LinearCode& code, Metric metric, const SearchBudget& budget = {});
/// Same, for an arbitrary (possibly nonlinear) nonempty set of words.
RadiusReport covering_radius_direct(const CodewordSet& words, Metric metric, const SearchBudget& budget = {});

/// Minimum weight per coset, keyed by syndrome.
class CosetLeaderTable {
 public:
  static constexpr std::uint32_t kUnreached = 0xFFFFFFFFu;

  Metric metric() const { return metric_; }
  int key_bits() const { return key_bits_; }
  std::uint64_t size() const;
  bool complete() const;
  /// kUnreached for cosets not yet seen.
  std::uint32_t weight(std::uint64_t key) const;
  /// Leader vector for the coset, when leaders were kept.
  std::optional<ZqVector> leader(std::uint64_t key) const;
  /// Syndrome key of an arbitrary ambient vector.
  std::uint64_t key_of(const ZqVector& v) const;
  /// Key of v + x e_j given the key of v.
  std::uint64_t add_contribution(std::uint64_t key, std::size_t j, std::uint32_t x) const;

  std::uint32_t max_weight() const;
  /// weight -> number of cosets whose leader has that weight.
  std::map<std::uint64_t, std::uint64_t> histogram() const;

 private:
  friend CosetLeaderTable build_coset_leader_table(const LinearCode&, Metric, const SearchBudget&, bool,
                                                   SearchStats*);
  Metric metric_ = Metric::Hamming;
  int key_bits_ = 0;
  RingSpec ring_{1};
  std::size_t n_ = 0;
  std::vector<std::vector<std::uint64_t>> contributions_;
  std::uint64_t top_ = 0;
  std::variant<std::vector<std::uint8_t>, std::vector<std::uint32_t>> weights_;
  std::vector<std::uint64_t> leaders_;  // packed, only when kept
};

/// Fills the table by a Gray-code pass over the whole ambient space. Leaders (lexicographically
/// smallest minimum-weight member of each coset) are kept only on request.
CosetLeaderTable build_coset_leader_table(const LinearCode& code, Metric metric, const SearchBudget& budget = {},
                                          bool keep_leaders = false, SearchStats* stats = nullptr);

/// Radius as the largest coset-leader weight.
RadiusReport covering_radius_syndrome(const LinearCode& code, Metric metric, const SearchBudget& budget = {});

/// Radius by increasing-weight search, visiting only vectors of weight <= r_cap. If some coset is
/// still unreached the report is the open interval [r_cap + 1, inf).
RadiusReport covering_radius_bfs(const LinearCode& code, Metric metric, std::uint64_t r_cap,
                                 const SearchBudget& budget = {});

/// Picks an engine from the budget; falls back to a bound interval when nothing exact fits.
RadiusReport covering_radius(const LinearCode& code, Metric metric, Method method = Method::Auto,
                             const SearchBudget& budget = {});

/// Histogram of coset-leader weights; its largest key is the covering radius.
std::map<std::uint64_t, std::uint64_t> coset_weight_distribution(const LinearCode& code, Metric metric,
                                                                 const SearchBudget& budget = {});

/// Smallest nonzero codeword weight found by increasing-weight search (membership via syndromes),
/// for codes too large to enumerate. Empty if no codeword of weight <= cap exists.
std::optional<std::uint64_t> minimum_weight_by_search(const LinearCode& code, Metric metric, std::uint64_t cap,
                                                      const SearchBudget& budget = {});

}  // namespace modcodes
