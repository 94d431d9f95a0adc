// Acceptance suite: end-to-end checks of the toolkit's headline behavior,
// one pass/fail line per criterion. Every expected constant below was either
// taken from a worked example or frozen from an independent reference
// computation (the oracles in oracles.hpp or an exact algebraic identity).

#include <chrono>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "wordlab/complexity.hpp"
#include "wordlab/decoloring.hpp"
#include "wordlab/frequency.hpp"
#include "wordlab/harness.hpp"
#include "wordlab/induction.hpp"
#include "wordlab/rotation.hpp"

using namespace wordlab;

namespace {

int failures = 0;

struct CheckFailure {
  std::string message;
};

#define ACCEPT_REQUIRE(cond)                                                       \
  do {                                                                             \
    if (!(cond)) throw CheckFailure{std::string("requirement failed: ") + #cond};  \
  } while (false)

template <typename Fn>
void criterion(int id, const std::string& name, double budget_seconds, Fn&& fn) {
  auto start = std::chrono::steady_clock::now();
  bool pass = true;
  std::string detail;
  try {
    detail = fn();
  } catch (const CheckFailure& f) {
    pass = false;
    detail = f.message;
  } catch (const std::exception& e) {
    pass = false;
    detail = e.what();
  }
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (pass && budget_seconds > 0 && elapsed > budget_seconds) {
    pass = false;
    detail += " [exceeded the " + std::to_string(budget_seconds) + "s budget]";
  }
  if (!pass) ++failures;
  std::ostringstream line;
  line << (pass ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << name;
  if (!detail.empty()) line << " - " << detail;
  line << " (" << elapsed << "s)";
  std::cout << line.str() << std::endl;
}

WordGeneratorSpec fibonacci_spec(std::size_t n) {
  return {SubstitutionSpec{{{'0', "01"}, {'1', "0"}}, '0'}, n};
}

WordGeneratorSpec tribonacci_spec(std::size_t n) {
  return {SubstitutionSpec{{{'1', "12"}, {'2', "13"}, {'3', "1"}}, '1'}, n};
}

std::string fixed_point_fixture() {
  ACCEPT_REQUIRE(generate(fibonacci_spec(34)).symbols() ==
                 "0100101001001010010100100101001001");
  ExactReal angle = parse_exact("2-phi");
  FiniteWord rotation = generate({RotationBinarySpec{angle, angle}, 1000});
  ACCEPT_REQUIRE(rotation == generate(fibonacci_spec(1000)));
  return "34-symbol fixed point and 1000-symbol rotation coding match exactly";
}

std::string sturmian_profile() {
  ComplexityProfile profile = compute_profile(generate(fibonacci_spec(5000)), 200, "fibonacci");
  for (const auto& row : profile.rows) {
    ACCEPT_REQUIRE(row.abelian == 2);
    ACCEPT_REQUIRE(row.subword == row.n + 1);
    ACCEPT_REQUIRE(row.deviation[0] <= 1);
    ACCEPT_REQUIRE(row.deviation[1] <= 1);
  }
  return "abelian = 2, subword = n+1, deviation <= 1 for every n <= 200";
}

std::string periodic_formula() {
  FiniteWord w = generate({PeriodicSpec{"12"}, 300});
  for (std::size_t n = 1; n <= 100; ++n) {
    std::int64_t expected = n % 2 == 0 ? 1 : 2;
    ACCEPT_REQUIRE(abelian_complexity(w, n) == expected);
  }
  return "class count alternates 2,1 exactly for n <= 100";
}

std::string tribonacci_bounds() {
  FiniteWord w = generate(tribonacci_spec(100000));
  bool three_late = false;
  bool five = false;
  for (std::size_t n = 1; n <= 300; ++n) {
    std::int64_t rho = abelian_complexity(w, n);
    ACCEPT_REQUIRE(rho >= 3);
    ACCEPT_REQUIRE(rho <= 7);
    if (rho == 3 && n >= 2) three_late = true;
    if (rho == 5) five = true;
  }
  ACCEPT_REQUIRE(abelian_complexity(w, 1) == 3);
  ACCEPT_REQUIRE(three_late);
  ACCEPT_REQUIRE(five);
  // Values 6 and 7 are first attained beyond n = 300; the first-occurrence
  // lengths are frozen fixtures, stable across prefixes 1e5..1e6.
  ACCEPT_REQUIRE(abelian_complexity(w, 341) == 5);
  ACCEPT_REQUIRE(abelian_complexity(w, 342) == 6);
  ACCEPT_REQUIRE(abelian_complexity(w, 3913) == 4);
  ACCEPT_REQUIRE(abelian_complexity(w, 3914) == 7);

  // Deviation via the library, cross-checked against per-letter prefix-sum
  // extremes recomputed here, plus window recounts for small n.
  BalanceProfile balance = balance_profile(w, 300);
  std::int64_t max_dev =
      std::max({balance.max_deviation[0], balance.max_deviation[1], balance.max_deviation[2]});
  ACCEPT_REQUIRE(max_dev == 2);
  for (std::uint32_t letter = 0; letter < 3; ++letter) {
    std::vector<std::int32_t> prefix(w.length() + 1, 0);
    for (std::size_t i = 0; i < w.length(); ++i) {
      prefix[i + 1] = prefix[i] + (w[i] == letter ? 1 : 0);
    }
    std::int64_t reference = 0;
    for (std::size_t n = 1; n <= 300; ++n) {
      std::int32_t lo = prefix[n];
      std::int32_t hi = prefix[n];
      for (std::size_t p = 1; p + n <= w.length(); ++p) {
        std::int32_t c = prefix[p + n] - prefix[p];
        lo = std::min(lo, c);
        hi = std::max(hi, c);
      }
      reference = std::max<std::int64_t>(reference, hi - lo);
      ACCEPT_REQUIRE(balance.deviation[letter][n - 1] == hi - lo);
    }
    ACCEPT_REQUIRE(reference <= 2);
  }
  for (std::size_t n : {std::size_t{7}, std::size_t{30}, std::size_t{55}}) {
    for (std::uint32_t letter = 0; letter < 3; ++letter) {
      ACCEPT_REQUIRE(balance.deviation[letter][n - 1] == oracles::deviation(w, letter, n));
    }
  }
  return "3 <= rho <= 7 on n <= 300; rho hits 3,4,5 there, 6 at 342, 7 at 3914; deviation = 2";
}

std::string block_identity_battery() {
  std::vector<FiniteWord> corpus;
  for (const auto& entry : default_catalog(20000)) corpus.push_back(generate(entry.spec));
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 1000; ++k) {
    const FiniteWord& w = corpus[k % corpus.size()];
    std::size_t ell = 1 + rng() % 20;
    std::size_t blocks = 1 + rng() % (w.length() / ell);
    ParikhVector diff = verify_block_identity(w, ell, blocks);
    ACCEPT_REQUIRE(diff.cwiseAbs().sum() == 0);
  }

  auto vec3 = [](std::int64_t a, std::int64_t b, std::int64_t c) {
    ParikhVector v(3);
    v << a, b, c;
    return v;
  };
  auto matrix_of = [](const std::vector<ParikhVector>& cols) {
    InductionMatrix m;
    m.block_length = static_cast<std::size_t>(cols.front().sum());
    m.m = IntMatrix(3, static_cast<Eigen::Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) m.m.col(static_cast<Eigen::Index>(j)) = cols[j];
    return m;
  };
  RankReport invertible =
      matrix_rank_check(matrix_of({vec3(2, 0, 0), vec3(1, 1, 0), vec3(1, 0, 1)}));
  ACCEPT_REQUIRE(invertible.invertible);
  ACCEPT_REQUIRE(invertible.determinant == Rational(2) || invertible.determinant == Rational(-2));
  RankReport singular =
      matrix_rank_check(matrix_of({vec3(2, 0, 0), vec3(0, 2, 0), vec3(1, 1, 0)}));
  ACCEPT_REQUIRE(!singular.invertible);
  ACCEPT_REQUIRE(singular.transpose_kernel.has_value());
  ACCEPT_REQUIRE(*singular.transpose_kernel == (std::vector<std::int64_t>{0, 0, 1}));
  RankReport mixed = matrix_rank_check(matrix_of({vec3(2, 1, 1), vec3(1, 2, 1), vec3(3, 0, 1)}));
  ACCEPT_REQUIRE(!mixed.invertible);
  ACCEPT_REQUIRE(mixed.transpose_kernel.has_value());
  ACCEPT_REQUIRE(*mixed.transpose_kernel == (std::vector<std::int64_t>{1, 1, -3}));
  return "1000 random block prefixes match exactly; hand-eliminated 3x3 cases agree";
}

std::string shape_dichotomy() {
  // The hypothesis needs three classes AND a deviation-2 letter at the same
  // length; no catalog word realizes it (that is the point of the theory), so
  // the scan is expected to be vacuous there and the pipeline is additionally
  // driven by a constructed word whose class set is a genuine Chain.
  std::size_t qualifying = 0;
  for (const auto& entry : default_catalog(10000)) {
    FiniteWord w = generate(entry.spec);
    if (w.alphabet().size() != 3) continue;
    for (std::size_t ell = 1; ell <= 50; ++ell) {
      std::vector<ParikhVector> classes = parikh_classes(w, ell);
      if (classes.size() != 3) continue;
      std::vector<std::int64_t> dev = window_deviation(w, ell);
      if (*std::max_element(dev.begin(), dev.end()) != 2) continue;
      ++qualifying;
      ParikhShapeKind kind = classify_parikh_set(classes).kind;
      ACCEPT_REQUIRE(kind == ParikhShapeKind::Chain || kind == ParikhShapeKind::LShape);
    }
  }

  FiniteWord chain_word = FiniteWord::from_symbols(
      Alphabet("123"), generate({PeriodicSpec{"1122"}, 400}).symbols());
  std::vector<ParikhVector> classes = parikh_classes(chain_word, 2);
  ACCEPT_REQUIRE(classes.size() == 3);
  std::vector<std::int64_t> dev = window_deviation(chain_word, 2);
  ACCEPT_REQUIRE(*std::max_element(dev.begin(), dev.end()) == 2);
  ParikhSetShape shape = classify_parikh_set(classes);
  ACCEPT_REQUIRE(shape.kind == ParikhShapeKind::Chain);

  ParikhVector l1(3), l2(3), l3(3);
  l1 << 2, 3, 1;
  l2 << 3, 2, 1;
  l3 << 4, 2, 0;
  ACCEPT_REQUIRE(classify_parikh_set({l1, l2, l3}).kind == ParikhShapeKind::LShape);
  return "no Other shape among " + std::to_string(qualifying) +
         " qualifying catalog lengths (vacuous there, as expected); constructed Chain and "
         "LShape sets classify correctly";
}

std::string low_complexity_relations() {
  std::size_t qualifying = 0;
  for (const auto& entry : default_catalog(10000)) {
    FiniteWord w = generate(entry.spec);
    if (w.alphabet().size() != 3) continue;  // the extraction is ternary by contract
    FrequencyVector exact = exact_frequencies(entry.spec);
    for (std::size_t ell = 1; ell <= 50; ++ell) {
      std::vector<ParikhVector> classes = parikh_classes(w, ell);
      if (classes.size() > 2) continue;
      ++qualifying;
      LowAbelianResult result =
          relation_from_low_abelian(classes, static_cast<std::int64_t>(ell));
      if (const auto* freq = std::get_if<FrequencyVector>(&result)) {
        for (int i = 0; i < 3; ++i) {
          ACCEPT_REQUIRE(freq->entries[static_cast<std::size_t>(i)].value ==
                         exact.entries[static_cast<std::size_t>(i)].value);
        }
      } else {
        const auto& relation = std::get<IntegerRelation>(result);
        ExactReal dot;
        for (int i = 0; i < 3; ++i) {
          dot += exact.entries[static_cast<std::size_t>(i)].value *
                 Rational(relation.coefficients[static_cast<std::size_t>(i)]);
        }
        ACCEPT_REQUIRE(dot.is_zero());
      }
    }
  }
  ACCEPT_REQUIRE(qualifying > 0);
  return std::to_string(qualifying) +
         " low-complexity lengths annihilate the exact frequencies (residual 0)";
}

std::string decoloring_identities() {
  std::mt19937_64 rng(2025);
  for (int k = 0; k < 100; ++k) {
    FiniteWord w = oracles::random_word(rng, 2 + static_cast<int>(rng() % 3), 1 + rng() % 200);
    char kept = w.alphabet().symbol(static_cast<int>(rng() % w.alphabet().size()));
    DecoloringSpec spec{kept, '_'};
    for (std::size_t n = 0; n <= w.length(); ++n) {
      ACCEPT_REQUIRE(verify_decolored_counts(w, spec, n));
    }
  }
  FiniteWord worked = FiniteWord::from_symbols(Alphabet("123"), "123123");
  ACCEPT_REQUIRE(decolor(worked, {'2', '0'}).symbols() == "020020");
  ACCEPT_REQUIRE(decolor(FiniteWord::from_symbols(Alphabet("123"), "123"), {'3', '0'}).symbols() ==
                 "003");
  return "count identity holds at every prefix of 100 random words; worked images byte-exact";
}

std::string kronecker_engine() {
  TorusRotation torus{parse_exact("sqrt2-1"), parse_exact("sqrt3-1"), ExactReal(0),
                      ExactReal(0)};
  auto n = find_conflict(torus, 1000000);
  ACCEPT_REQUIRE(n.has_value());
  ACCEPT_REQUIRE(*n == 2);  // frozen fixture
  EquidistributionStats stats = equidistribution_check(torus, 1000000);
  ACCEPT_REQUIRE(stats.gap <= 0.01);
  TorusRotation out_of_phase{parse_exact("1/2"), parse_exact("1/2"), ExactReal(0),
                             parse_exact("1/2")};
  ACCEPT_REQUIRE(!find_conflict(out_of_phase, 1000000).has_value());
  std::ostringstream detail;
  detail << "conflict at n = 2; |hit fraction - box area| = " << stats.gap
         << "; out-of-phase rational case returns none";
  return detail.str();
}

std::string search_oracle_equivalence() {
  SearchConfig cfg;
  cfg.max_length = 12;
  cfg.report_top = 10;
  SearchStats stats = search_rho_bounded(cfg);

  std::vector<std::string> oracle_top;
  std::vector<std::uint64_t> oracle_counts =
      oracles::brute_force_survivors(12, 3, &oracle_top, 10);
  for (std::size_t len = 1; len <= 12; ++len) {
    ACCEPT_REQUIRE(stats.survivors_by_length[len] == oracle_counts[len]);
  }
  std::vector<std::string> engine_top;
  for (const auto& s : stats.top_survivors) engine_top.push_back(s.word);
  ACCEPT_REQUIRE(engine_top == oracle_top);
  return "survivor counts and lexicographic survivor sets match the exhaustive enumeration (" +
         std::to_string(oracle_counts[12]) + " survivors at length 12)";
}

}  // namespace

int main() {
  criterion(1, "golden fixed-point fixtures", 1.0, fixed_point_fixture);
  criterion(2, "Sturmian profile of the golden fixed point", 10.0, sturmian_profile);
  criterion(3, "periodic two-letter class counts", 0.0, periodic_formula);
  criterion(4, "three-letter fixed point bounds", 60.0, tribonacci_bounds);
  criterion(5, "block counting identity battery", 0.0, block_identity_battery);
  criterion(6, "class-set shape dichotomy", 0.0, shape_dichotomy);
  criterion(7, "low-complexity frequency relations", 0.0, low_complexity_relations);
  criterion(8, "decoloring count identities", 0.0, decoloring_identities);
  criterion(9, "torus conflict engine", 30.0, kronecker_engine);
  criterion(10, "search oracle equivalence", 120.0, search_oracle_equivalence);

  if (failures == 0) {
    std::cout << "all acceptance criteria passed" << std::endl;
    return 0;
  }
  std::cout << failures << " acceptance criteria failed" << std::endl;
  return 1;
}
