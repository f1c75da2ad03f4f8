// Acceptance runner: one PASS/FAIL line per criterion, with the detail lines above it.
//
//   acceptance [AC1 .. AC11 | all]
//
// Exit status is 0 iff every selected criterion passed. Grids, seeds, runtime limits and
// tolerances are fixed here. All radii are exact integers and all formula values exact
// rationals, so every comparison is exact (tolerance 0).

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "modcodes/bounds.hpp"
#include "modcodes/covering.hpp"
#include "modcodes/families.hpp"

using namespace modcodes;
using Rational = boost::multiprecision::cpp_rational;

namespace {

const RingSpec kZ4 = RingSpec::z4();

std::string fmt(const Rational& r) {
  std::ostringstream out;
  out << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1) out << '/' << boost::multiprecision::denominator(r);
  return out.str();
}

SearchBudget budget() {
  SearchBudget b;
  if (const char* env = std::getenv("MODCODES_THREADS")) b.threads = static_cast<unsigned>(std::max(1, std::atoi(env)));
  return b;
}

/// Collects sub-checks for one criterion.
class Criterion {
 public:
  explicit Criterion(std::string name) : name_(std::move(name)) {}

  void check(bool ok, const std::string& what) {
    std::cout << "  " << name_ << ' ' << (ok ? "ok   " : "BAD  ") << what << '\n';
    ++total_;
    if (!ok) ++failed_;
  }
  /// Recorded but not asserted.
  void note(const std::string& what) { std::cout << "  " << name_ << " note " << what << '\n'; }

  bool passed() const { return failed_ == 0; }
  std::size_t failed() const { return failed_; }
  std::size_t total() const { return total_; }

 private:
  std::string name_;
  std::size_t total_ = 0;
  std::size_t failed_ = 0;
};

std::uint64_t exact(const LinearCode& code, Metric m, Method method = Method::Auto) {
  return covering_radius(code, m, method, budget()).value();
}

std::string eq_text(const std::string& what, std::uint64_t got, const Rational& want) {
  return what + ": exact " + std::to_string(got) + ", stated " + fmt(want);
}

// Random Z4 code with n <= max_n and 2-dimension <= max_two_dim.
LinearCode random_z4_code(std::mt19937_64& rng, std::size_t max_n, std::size_t max_two_dim, std::size_t max_rows) {
  std::uniform_int_distribution<std::size_t> len(1, max_n), rows(0, max_rows);
  std::uniform_int_distribution<int> digit(0, 3);
  while (true) {
    const std::size_t n = len(rng);
    GeneratorMatrix g;
    const std::size_t r = rows(rng);
    for (std::size_t i = 0; i < r; ++i) {
      ZqVector v(kZ4, n);
      for (std::size_t j = 0; j < n; ++j) v.set(j, digit(rng));
      g.push_back(v);
    }
    LinearCode code(kZ4, n, g);
    if (code.two_dimension() <= max_two_dim) return code;
  }
}

std::string code_text(const LinearCode& code) {
  std::string out = "n=" + std::to_string(code.length()) + " G=[";
  for (std::size_t i = 0; i < code.generators().size(); ++i) {
    if (i) out += "; ";
    out += code.generators()[i].to_string();
  }
  return out + "]";
}

// ---------------------------------------------------------------------------------------------

void ac1(Criterion& c) {
  for (std::uint64_t n = 1; n <= 6; ++n) {
    const auto a = repetition_alpha(n), b = repetition_beta(n);
    const auto ns = " n=" + std::to_string(n);
    const auto la = exact(a, Metric::Lee), ea = exact(a, Metric::Euclidean), lb = exact(b, Metric::Lee);
    c.check(la == n, eq_text("r_L(C_alpha)" + ns, la, n));
    c.check(ea == 2 * n, eq_text("r_E(C_alpha)" + ns, ea, 2 * n));
    c.check(lb == n, eq_text("r_L(C_beta)" + ns, lb, n));
    const auto eb = exact(b, Metric::Euclidean);
    const Rational stated = Rational(3 * n) / 2;
    if (n == 2 || n == 4) {
      c.check(Rational(eb) == stated, eq_text("r_E(C_beta)" + ns, eb, stated));
    } else if (n % 2 == 1) {
      c.note(eq_text("r_E(C_beta)" + ns, eb, stated) + (Rational(eb) == stated ? " MATCH" : " FLAGGED"));
    } else {
      c.note(eq_text("r_E(C_beta)" + ns, eb, stated) + " (outside the asserted grid)");
    }
  }
}

void ac2(Criterion& c) {
  for (std::uint64_t n = 1; n <= 2; ++n) {
    const auto code = build_code([&] {
      FamilySpec s;
      s.family = Family::BlockRep3n;
      s.n = n;
      return s;
    }());
    const auto ns = " n=" + std::to_string(n);
    const auto l = exact(code, Metric::Lee), e = exact(code, Metric::Euclidean);
    c.check(l == 3 * n, eq_text("r_L(BRep^3n)" + ns, l, 3 * n));
    const Rational hi = Rational(11 * n) / 2;
    c.check(5 * n <= e && Rational(e) <= hi,
            "r_E(BRep^3n)" + ns + ": exact " + std::to_string(e) + ", stated range [" + std::to_string(5 * n) + ", " +
                fmt(hi) + "]");
  }
  for (std::uint64_t n : {2, 4}) {
    const auto code = block_repetition(n, n, 0);
    const auto ns = " n=" + std::to_string(n);
    const auto l = exact(code, Metric::Lee), e = exact(code, Metric::Euclidean);
    c.check(l == 2 * n, eq_text("r_L(BRep^2n)" + ns, l, 2 * n));
    const Rational stated = Rational(7 * n) / 2;
    c.check(Rational(e) == stated, eq_text("r_E(BRep^2n)" + ns, e, stated));
  }
  for (auto [m, n] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{2, 1}, {2, 2}, {4, 1}}) {
    const auto code = block_repetition(m, n, 0);
    const auto ms = " (m,n)=(" + std::to_string(m) + "," + std::to_string(n) + ")";
    const auto l = exact(code, Metric::Lee), e = exact(code, Metric::Euclidean);
    c.check(l == m + n, eq_text("r_L(BRep^{m+n})" + ms, l, m + n));
    const Rational stated = Rational(2 * n) + Rational(3 * m) / 2;
    c.check(Rational(e) == stated, eq_text("r_E(BRep^{m+n})" + ms, e, stated));
  }
}

void ac3(Criterion& c) {
  const auto s1 = simplex_alpha(1);
  const auto l1 = exact(s1, Metric::Lee), e1 = exact(s1, Metric::Euclidean);
  c.check(l1 == 4, eq_text("r_L(S_1^alpha)", l1, 4));
  c.check(e1 <= 7, "r_E(S_1^alpha): exact " + std::to_string(e1) + ", stated <= 7");
  const Rational bound = Rational(11 * 3 + 9) / 6;
  c.check(Rational(e1) <= bound, "r_E(S_1^alpha): exact " + std::to_string(e1) + ", stated <= " + fmt(bound));
  // k = 2: syndrome engine over 4^16 vectors
  const auto s2 = simplex_alpha(2);
  const auto l2 = exact(s2, Metric::Lee, Method::Syndrome);
  c.check(l2 == 16, eq_text("r_L(S_2^alpha)", l2, 16));
}

void ac4(Criterion& c) {
  const auto s2 = simplex_beta(2);
  const auto l = exact(s2, Metric::Lee), e = exact(s2, Metric::Euclidean);
  c.check(l <= 4, "r_L(S_2^beta): exact " + std::to_string(l) + ", stated <= 4");
  // 2^k (2^{k+1} - 1) + (4^k - 1)/3 - 147/2 at k = 2
  const Rational bound = Rational(4 * 7) + Rational(15, 3) - Rational(147, 2);
  if (bound > 0) {
    c.check(Rational(e) <= bound, "r_E(S_2^beta): exact " + std::to_string(e) + ", stated <= " + fmt(bound));
  } else {
    c.note("r_E(S_2^beta): exact " + std::to_string(e) + ", stated bound " + fmt(bound) + " is not positive: FLAGGED");
  }
}

void ac5(Criterion& c) {
  auto run = [&](const std::string& name, const LinearCode& dual, std::uint64_t want) {
    const auto l = covering_radius_bfs(dual, Metric::Lee, 3, budget());
    c.check(l.exact && l.lo == want,
            name + ": bfs r_cap 3 gives " + (l.exact ? std::to_string(l.lo) : "open") + ", stated " + std::to_string(want));
    const auto e = covering_radius_bfs(dual, Metric::Euclidean, 4, budget());
    c.check(e.exact && e.lo <= 4,
            name + ": r_E " + (e.exact ? std::to_string(e.lo) : "> 4") + ", stated <= 4");
  };
  for (std::uint64_t k = 1; k <= 2; ++k) run("r_L(S_" + std::to_string(k) + "^alpha^perp)", dual_code(simplex_alpha(k)), 1);
  for (std::uint64_t k = 2; k <= 3; ++k) run("r_L(S_" + std::to_string(k) + "^beta^perp)", dual_code(simplex_beta(k)), 2);
}

void ac6(Criterion& c) {
  for (bool alpha : {true, false}) {
    const auto code = alpha ? macdonald_alpha(2, 1) : macdonald_beta(2, 1, true);
    const std::string name = alpha ? "r_L(M_{2,1}^alpha)" : "r_L(M_{2,1}^beta)";
    const auto r = covering_radius_direct(code, Metric::Lee, budget()).value();
    const auto sc = sphere_covering_lower_bound(code.length(), BigInt(1) << code.two_dimension(), 2);
    c.check(r >= sc, name + ": exact " + std::to_string(r) + " >= sphere-covering bound " + std::to_string(sc));
    // at r = k the recursive bound reads r_L(M_{k,u}) <= 0 + r_L(M_{k,u})
    c.check(r <= 0 + r, name + ": recursive bound at r = k holds");
    c.note(name + ": no r with u < r < k exists at (k,u) = (2,1); larger k is out of budget");
  }
}

void ac7_ac8(Criterion& c, bool gray) {
  std::mt19937_64 rng(20240701);
  for (int i = 0; i < 50; ++i) {
    const auto code = random_z4_code(rng, 6, 8, 4);
    const auto lee = covering_radius_syndrome(code, Metric::Lee, budget()).value();
    if (gray) {
      const auto image = gray_image(enumerate_codewords(code));
      const auto ham = covering_radius_direct(image, Metric::Hamming, budget()).value();
      c.check(lee == ham, code_text(code) + ": r_L " + std::to_string(lee) + ", r_H(Gray image) " + std::to_string(ham));
    } else {
      const auto sc = sphere_covering_lower_bound(code.length(), BigInt(1) << code.two_dimension(), 2);
      const auto del = delsarte_bound(code);
      if (!del) {
        c.note(code_text(code) + ": dual not enumerable");
        c.check(sc <= lee, code_text(code) + ": " + std::to_string(sc) + " <= " + std::to_string(lee));
        continue;
      }
      c.check(sc <= lee && lee <= *del, code_text(code) + ": " + std::to_string(sc) + " <= r_L " + std::to_string(lee) +
                                            " <= " + std::to_string(*del));
    }
  }
}

void ac9(Criterion& c) {
  std::mt19937_64 rng(9090);
  std::uniform_int_distribution<int> digit(0, 3);
  for (int i = 0; i < 20; ++i) {
    const auto c0 = random_z4_code(rng, 3, 6, 2);
    const auto c1 = random_z4_code(rng, 3, 6, 2);
    GeneratorMatrix a;
    for (std::size_t r = 0; r < c0.generators().size(); ++r) {
      ZqVector v(kZ4, c1.length());
      for (std::size_t j = 0; j < c1.length(); ++j) v.set(j, digit(rng));
      a.push_back(v);
    }
    const auto stack = mattson_stack(c0, c1, a);
    for (Metric m : {Metric::Hamming, Metric::Lee, Metric::Euclidean}) {
      const auto r = exact(stack, m), r0 = exact(c0, m), r1 = exact(c1, m);
      c.check(r <= r0 + r1, "stack " + std::to_string(i) + " " + std::string(to_string(m)) + ": " + std::to_string(r) +
                                " <= " + std::to_string(r0) + " + " + std::to_string(r1));
    }
  }
}

void ac10(Criterion& c) {
  std::mt19937_64 rng(100100);
  for (int i = 0; i < 100; ++i) {
    const auto code = random_z4_code(rng, 5, 10, 3);
    for (Metric m : kAllMetrics) {
      const auto d = covering_radius_direct(code, m, budget()).value();
      const auto s = covering_radius_syndrome(code, m, budget()).value();
      const auto cap = code.length() * max_element_weight(kZ4, m);
      const auto b = covering_radius_bfs(code, m, cap, budget()).value();
      c.check(d == s && s == b, code_text(code) + " " + std::string(to_string(m)) + ": direct " + std::to_string(d) +
                                    ", syndrome " + std::to_string(s) + ", bfs " + std::to_string(b));
    }
  }
}

void ac11(Criterion& c) {
  std::vector<FamilySpec> grid;
  auto add = [&](Family f, std::uint64_t n, std::uint64_t m, std::uint64_t k, std::uint64_t u, bool u1 = false) {
    FamilySpec s;
    s.family = f;
    s.n = n;
    s.m = m;
    s.k = k;
    s.u = u;
    s.allow_beta_u1 = u1;
    grid.push_back(s);
  };
  for (std::uint64_t n = 1; n <= 6; ++n) {
    add(Family::RepetitionAlpha, n, 0, 0, 0);
    add(Family::RepetitionBeta, n, 0, 0, 0);
    add(Family::BlockRep2n, n, 0, 0, 0);
    add(Family::BlockRep3n, n, 0, 0, 0);
    for (std::uint64_t m = 1; m <= 4; ++m) add(Family::BlockRepMN, n, m, 0, 0);
  }
  for (std::uint64_t k = 1; k <= 3; ++k) add(Family::SimplexAlpha, 0, 0, k, 0);
  for (std::uint64_t k = 2; k <= 3; ++k) add(Family::SimplexBeta, 0, 0, k, 0);
  for (std::uint64_t k = 2; k <= 3; ++k) {
    for (std::uint64_t u = 1; u < k; ++u) {
      add(Family::MacDonaldAlpha, 0, 0, k, u);
      add(Family::MacDonaldBeta, 0, 0, k, u, true);
    }
  }
  for (const auto& s : grid) {
    const auto fc = construct(s);
    const std::string measured = fc.measured ? fc.measured->to_string() : "-";
    c.check(fc.audit == AuditStatus::Passed, s.label() + ": declared " + fc.declared.to_string() + ", measured " +
                                                 measured + " (" + std::string(to_string(fc.audit)) + ")");
  }
  for (std::uint64_t k = 2; k <= 3; ++k) {
    const auto dual = dual_code(simplex_beta(k));
    const bool none_below = !minimum_weight_by_search(dual, Metric::Lee, 2, budget()).has_value();
    const auto three = minimum_weight_by_search(dual, Metric::Lee, 3, budget());
    c.check(none_below && three == std::optional<std::uint64_t>(3),
            "d_L(S_" + std::to_string(k) + "^beta^perp) = 3");
  }
}

struct Entry {
  std::string id;
  double limit_seconds;
  std::function<void(Criterion&)> run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all = {
      {"AC1", 1.0, ac1},
      {"AC2", 60.0, ac2},
      {"AC3", 15 * 60.0, ac3},
      {"AC4", 5.0, ac4},
      {"AC5", 60.0, ac5},
      {"AC6", 120.0, ac6},
      {"AC7", 120.0, [](Criterion& c) { ac7_ac8(c, true); }},
      {"AC8", 120.0, [](Criterion& c) { ac7_ac8(c, false); }},
      {"AC9", 120.0, ac9},
      {"AC10", 300.0, ac10},
      {"AC11", 300.0, ac11},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> wanted(argv + 1, argv + argc);
  if (wanted.empty()) wanted.push_back("all");
  bool all_passed = true;
  for (const auto& name : wanted) {
    bool found = false;
    for (const auto& e : entries()) {
      if (name != "all" && name != e.id) continue;
      found = true;
      Criterion c(e.id);
      const auto start = std::chrono::steady_clock::now();
      std::string error;
      try {
        e.run(c);
      } catch (const std::exception& ex) {
        error = ex.what();
      }
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      const bool in_time = secs <= e.limit_seconds;
      const bool ok = c.passed() && error.empty() && in_time;
      all_passed = all_passed && ok;
      std::ostringstream line;
      line << e.id << ' ' << (ok ? "PASS" : "FAIL") << "  " << c.total() - c.failed() << '/' << c.total()
           << " checks";
      line.precision(2);
      line << std::fixed << "  " << secs << "s (limit " << e.limit_seconds << "s)";
      if (!in_time) line << "  over time";
      if (!error.empty()) line << "  error: " << error;
      std::cout << line.str() << std::endl;
    }
    if (!found) {
      std::cerr << "unknown criterion '" << name << "'\n";
      return 2;
    }
  }
  return all_passed ? 0 : 1;
}
