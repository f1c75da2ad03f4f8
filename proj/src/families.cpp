#include "modcodes/families.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "modcodes/covering.hpp"

namespace modcodes {

namespace {

const RingSpec kZ4 = RingSpec::z4();

std::uint64_t pow4(std::uint64_t e) { return std::uint64_t{1} << (2 * e); }
std::uint64_t pow2(std::uint64_t e) { return std::uint64_t{1} << e; }

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidArgument(message);
}

GeneratorMatrix row_of_blocks(std::initializer_list<std::pair<std::uint64_t, std::uint32_t>> blocks) {
  std::vector<std::uint8_t> row;
  for (auto [size, value] : blocks) row.insert(row.end(), size, static_cast<std::uint8_t>(value));
  return {ZqVector(kZ4, std::move(row))};
}

GeneratorMatrix vstack(GeneratorMatrix top, const GeneratorMatrix& bottom) {
  top.insert(top.end(), bottom.begin(), bottom.end());
  return top;
}

std::size_t row_length(const GeneratorMatrix& g) { return g.empty() ? 0 : g.front().size(); }

GeneratorMatrix simplex_beta_base_1() { return {ZqVector(kZ4, {1})}; }

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::RepetitionAlpha:
      return "repetition-alpha";
    case Family::RepetitionBeta:
      return "repetition-beta";
    case Family::BlockRepetition:
      return "block-repetition";
    case Family::BlockRep2n:
      return "brep2n";
    case Family::BlockRep3n:
      return "brep3n";
    case Family::BlockRepMN:
      return "brepmn";
    case Family::SimplexAlpha:
      return "simplex-alpha";
    case Family::SimplexBeta:
      return "simplex-beta";
    case Family::MacDonaldAlpha:
      return "macdonald-alpha";
    case Family::MacDonaldBeta:
      return "macdonald-beta";
    case Family::Dual:
      return "dual";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::RepetitionAlpha, Family::RepetitionBeta, Family::BlockRepetition, Family::BlockRep2n,
                   Family::BlockRep3n, Family::BlockRepMN, Family::SimplexAlpha, Family::SimplexBeta,
                   Family::MacDonaldAlpha, Family::MacDonaldBeta, Family::Dual}) {
    if (to_string(f) == name) return f;
  }
  throw InvalidArgument("unknown code family '" + std::string(name) + "'");
}

std::string FamilySpec::label() const {
  std::ostringstream out;
  switch (family) {
    case Family::RepetitionAlpha:
    case Family::RepetitionBeta:
    case Family::BlockRep2n:
    case Family::BlockRep3n:
      out << to_string(family) << "(n=" << n << ")";
      break;
    case Family::BlockRepMN:
      out << "brepmn(m=" << m << ",n=" << n << ")";
      break;
    case Family::BlockRepetition:
      out << "block-repetition(" << m << "," << n2 << "," << n3 << ")";
      break;
    case Family::SimplexAlpha:
    case Family::SimplexBeta:
      out << to_string(family) << "(k=" << k << ")";
      break;
    case Family::MacDonaldAlpha:
    case Family::MacDonaldBeta:
      out << to_string(family) << "(k=" << k << ",u=" << u << ")";
      break;
    case Family::Dual:
      out << "dual(" << (inner ? inner->label() : "?") << ")";
      break;
  }
  return out.str();
}

std::string ParameterTuple::to_string() const {
  std::ostringstream out;
  auto opt = [&](const std::optional<std::uint64_t>& v) {
    if (v) {
      out << *v;
    } else {
      out << '-';
    }
  };
  out << '[' << length << ',' << two_dimension << ',';
  opt(d_hamming);
  out << ',';
  opt(d_lee);
  out << ',';
  opt(d_euclidean);
  out << ']';
  return out.str();
}

LinearCode repetition_alpha(std::uint64_t n) {
  require(n >= 1, "repetition code needs n >= 1");
  return LinearCode(kZ4, n, row_of_blocks({{n, 2}}));
}

LinearCode repetition_beta(std::uint64_t n) {
  require(n >= 1, "repetition code needs n >= 1");
  return LinearCode(kZ4, n, row_of_blocks({{n, 1}}));
}

LinearCode block_repetition(std::uint64_t m, std::uint64_t n2, std::uint64_t n3) {
  require(m >= 1, "block repetition code needs a nonempty 1-block (m >= 1)");
  return LinearCode(kZ4, m + n2 + n3, row_of_blocks({{m, 1}, {n2, 2}, {n3, 3}}));
}

GeneratorMatrix simplex_alpha_matrix(std::uint64_t k) {
  require(k >= 1, "simplex alpha needs k >= 1");
  GeneratorMatrix g = row_of_blocks({{1, 0}, {1, 1}, {1, 2}, {1, 3}});
  for (std::uint64_t level = 2; level <= k; ++level) {
    const std::uint64_t w = row_length(g);
    GeneratorMatrix top = row_of_blocks({{w, 0}, {w, 1}, {w, 2}, {w, 3}});
    g = vstack(std::move(top), hconcat(hconcat(g, g), hconcat(g, g)));
  }
  return g;
}

GeneratorMatrix simplex_beta_matrix(std::uint64_t k) {
  require(k >= 1, "simplex beta needs k >= 1");
  if (k == 1) return simplex_beta_base_1();
  GeneratorMatrix g = vstack(row_of_blocks({{4, 1}, {1, 0}, {1, 2}}), row_of_blocks({{1, 0}, {1, 1}, {1, 2}, {1, 3}, {2, 1}}));
  for (std::uint64_t level = 3; level <= k; ++level) {
    const GeneratorMatrix alpha = simplex_alpha_matrix(level - 1);
    const std::uint64_t a = row_length(alpha), b = row_length(g);
    GeneratorMatrix top = row_of_blocks({{a, 1}, {b, 0}, {b, 2}});
    g = vstack(std::move(top), hconcat(alpha, hconcat(g, g)));
  }
  return g;
}

LinearCode simplex_alpha(std::uint64_t k, std::uint64_t max_k) {
  require(k >= 1, "simplex alpha needs k >= 1");
  require(k <= max_k, "simplex alpha k=" + std::to_string(k) + " exceeds the budget k <= " + std::to_string(max_k));
  return LinearCode(kZ4, pow4(k), simplex_alpha_matrix(k));
}

LinearCode simplex_beta(std::uint64_t k, std::uint64_t max_k) {
  require(k >= 2, "simplex beta needs k >= 2");
  require(k <= max_k, "simplex beta k=" + std::to_string(k) + " exceeds the budget k <= " + std::to_string(max_k));
  const auto g = simplex_beta_matrix(k);
  return LinearCode(kZ4, row_length(g), g);
}

GeneratorMatrix delete_columns(const GeneratorMatrix& g, const GeneratorMatrix& block) {
  require(g.size() == block.size(), "column deletion needs matching row counts");
  if (g.empty()) return g;
  const RingSpec ring = g.front().ring();
  auto cols = matrix_columns(g);
  std::vector<bool> removed(cols.size(), false);
  for (const auto& target : matrix_columns(block)) {
    bool found = false;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (!removed[j] && cols[j] == target) {
        removed[j] = true;
        found = true;
        break;
      }
    }
    require(found, "column (" + target.to_string() + ") not present in the matrix");
  }
  std::vector<ZqVector> kept;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (!removed[j]) kept.push_back(cols[j]);
  }
  return matrix_from_columns(ring, g.size(), kept);
}

GeneratorMatrix macdonald_deleted_block(Family family, std::uint64_t k, std::uint64_t u) {
  const GeneratorMatrix small = family == Family::MacDonaldAlpha ? simplex_alpha_matrix(u) : simplex_beta_matrix(u);
  GeneratorMatrix zeros(k - u, ZqVector(kZ4, row_length(small)));
  return vstack(std::move(zeros), small);
}

LinearCode macdonald_alpha(std::uint64_t k, std::uint64_t u, std::uint64_t max_k) {
  require(k >= 2 && u >= 1 && u <= k - 1, "MacDonald alpha needs 1 <= u <= k-1");
  require(k <= max_k, "MacDonald alpha k=" + std::to_string(k) + " exceeds the budget k <= " + std::to_string(max_k));
  auto g = delete_columns(simplex_alpha_matrix(k), macdonald_deleted_block(Family::MacDonaldAlpha, k, u));
  const auto n = row_length(g);
  return LinearCode(kZ4, n, std::move(g));
}

LinearCode macdonald_beta(std::uint64_t k, std::uint64_t u, bool allow_u1, std::uint64_t max_k) {
  require(k >= 2 && u >= 1 && u <= k - 1, "MacDonald beta needs k >= 2 and 1 <= u <= k-1");
  require(u >= 2 || allow_u1, "MacDonald beta with u = 1 needs the explicit u=1 flag (G_1^beta is not part of the "
                              "simplex beta recursion)");
  require(k <= max_k, "MacDonald beta k=" + std::to_string(k) + " exceeds the budget k <= " + std::to_string(max_k));
  auto g = delete_columns(simplex_beta_matrix(k), macdonald_deleted_block(Family::MacDonaldBeta, k, u));
  const auto n = row_length(g);
  return LinearCode(kZ4, n, std::move(g));
}

LinearCode build_code(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::RepetitionAlpha:
      return repetition_alpha(spec.n);
    case Family::RepetitionBeta:
      return repetition_beta(spec.n);
    case Family::BlockRepetition:
      return block_repetition(spec.m, spec.n2, spec.n3);
    case Family::BlockRep2n:
      return block_repetition(spec.n, spec.n, 0);
    case Family::BlockRep3n:
      return block_repetition(spec.n, spec.n, spec.n);
    case Family::BlockRepMN:
      return block_repetition(spec.m, spec.n, 0);
    case Family::SimplexAlpha:
      return simplex_alpha(spec.k);
    case Family::SimplexBeta:
      return simplex_beta(spec.k);
    case Family::MacDonaldAlpha:
      return macdonald_alpha(spec.k, spec.u);
    case Family::MacDonaldBeta:
      return macdonald_beta(spec.k, spec.u, spec.allow_beta_u1);
    case Family::Dual:
      require(spec.inner != nullptr, "dual family needs an inner family");
      return dual_code(build_code(*spec.inner));
  }
  throw InvalidArgument("unknown family");
}

ParameterTuple declared_parameters(const FamilySpec& spec) {
  ParameterTuple p;
  const std::uint64_t n = spec.n, m = spec.m, k = spec.k, u = spec.u;
  switch (spec.family) {
    case Family::RepetitionAlpha:  // [n,1,n,2n]
      p = {n, 1, n, 2 * n, std::nullopt};
      break;
    case Family::RepetitionBeta:  // [n,2,n,n]
      p = {n, 2, n, n, std::nullopt};
      break;
    case Family::BlockRep3n:  // [3n,2,2n,4n,6n]
      p = {3 * n, 2, 2 * n, 4 * n, 6 * n};
      break;
    case Family::BlockRep2n:  // [2n,2,n,2n,4n]
      p = {2 * n, 2, n, 2 * n, 4 * n};
      break;
    case Family::BlockRepMN:  // [m+n,2,m,min{2m,m+2n},min{4m,m+4n}]
      p = {m + n, 2, m, std::min(2 * m, m + 2 * n), std::min(4 * m, m + 4 * n)};
      break;
    case Family::BlockRepetition:
      p.length = spec.m + spec.n2 + spec.n3;
      p.two_dimension = 2;
      break;
    case Family::SimplexAlpha:  // [2^{2k}, 2k, 2^{2k-1}, 2^{2k}, 3 2^{2k-1}]
      p = {pow4(k), 2 * k, pow2(2 * k - 1), pow4(k), 3 * pow2(2 * k - 1)};
      break;
    case Family::SimplexBeta:  // [2^{k-1}(2^k-1), 2k, 2^{2(k-1)}, 2^{k-1}(2^k-1), 2^k(3 2^{k-2} - 1)]
      p = {pow2(k - 1) * (pow2(k) - 1), 2 * k, pow4(k - 1), pow2(k - 1) * (pow2(k) - 1),
           pow2(k) * (3 * pow2(k - 2) - 1)};
      break;
    case Family::MacDonaldAlpha:
      p.length = pow4(k) - pow4(u);
      p.two_dimension = 2 * k;
      break;
    case Family::MacDonaldBeta:
      p.length = (pow2(k - 1) - pow2(u - 1)) * (pow2(k) + pow2(u) - 1);
      p.two_dimension = 2 * k;
      break;
    case Family::Dual: {
      require(spec.inner != nullptr, "dual family needs an inner family");
      const auto inner = declared_parameters(*spec.inner);
      p.length = inner.length;
      p.two_dimension = 2 * inner.length - inner.two_dimension;
      if (spec.inner->family == Family::SimplexBeta) p.d_lee = 3;
      break;
    }
  }
  return p;
}

ParameterTuple measure_parameters(const LinearCode& code, const AuditPolicy& policy) {
  ParameterTuple p;
  p.length = code.length();
  p.two_dimension = code.two_dimension();
  const std::array<std::pair<Metric, std::optional<std::uint64_t>*>, 3> targets = {
      std::pair{Metric::Hamming, &p.d_hamming}, std::pair{Metric::Homogeneous, &p.d_lee},
      std::pair{Metric::Euclidean, &p.d_euclidean}};
  if (code.two_dimension() == 0) return p;
  if (code.two_dimension() <= policy.max_enumeration_two_dim) {
    const auto words = enumerate_codewords(code, policy.max_enumeration_two_dim);
    for (auto [metric, slot] : targets) {
      std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
      for (const auto& w : words.words) {
        if (!w.is_zero()) best = std::min(best, weight(w, metric));
      }
      *slot = best;
    }
    return p;
  }
  for (auto [metric, slot] : targets) {
    try {
      *slot = minimum_weight_by_search(code, metric, policy.min_weight_search_cap);
    } catch (const BudgetExceeded&) {
    }
  }
  return p;
}

std::string_view to_string(AuditStatus s) {
  switch (s) {
    case AuditStatus::Passed:
      return "passed";
    case AuditStatus::Failed:
      return "failed";
    case AuditStatus::Skipped:
      return "skipped";
  }
  return "?";
}

FamilyCode construct(const FamilySpec& spec, const AuditPolicy& policy) {
  FamilyCode result{spec, build_code(spec), declared_parameters(spec), std::nullopt, AuditStatus::Skipped, ""};
  const auto measured = measure_parameters(result.code, policy);
  result.measured = measured;

  std::vector<std::string> mismatches, unmeasured;
  auto check = [&](const char* name, std::uint64_t declared, std::optional<std::uint64_t> got) {
    if (!got) {
      unmeasured.emplace_back(name);
    } else if (*got != declared) {
      mismatches.push_back(std::string(name) + " declared " + std::to_string(declared) + " measured " +
                           std::to_string(*got));
    }
  };
  check("length", result.declared.length, measured.length);
  check("two_dimension", result.declared.two_dimension, measured.two_dimension);
  if (result.declared.d_hamming) check("d_H", *result.declared.d_hamming, measured.d_hamming);
  if (result.declared.d_lee) check("d_L", *result.declared.d_lee, measured.d_lee);
  if (result.declared.d_euclidean) check("d_E", *result.declared.d_euclidean, measured.d_euclidean);

  if (!mismatches.empty()) {
    result.audit = AuditStatus::Failed;
    for (const auto& m : mismatches) result.audit_detail += (result.audit_detail.empty() ? "" : "; ") + m;
  } else if (!unmeasured.empty()) {
    result.audit = AuditStatus::Skipped;
    result.audit_detail = "not measured within budget:";
    for (const auto& u : unmeasured) result.audit_detail += " " + u;
  } else {
    result.audit = AuditStatus::Passed;
  }
  return result;
}

}  // namespace modcodes
