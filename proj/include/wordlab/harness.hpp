#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wordlab/frequency.hpp"
#include "wordlab/words.hpp"

namespace wordlab {

struct SearchConfig {
  std::size_t max_length = 1;
  std::int64_t rho_bound = 3;
  std::size_t report_top = 3;
  bool require_all_letters = false;  // count only prefixes using every letter
  bool fix_first_letter = false;     // symmetry reduction (factor 3), off by default
  std::uint64_t node_budget = UINT64_MAX;
};

struct Survivor {
  std::string word;
  std::vector<Rational> frequencies;  // exact count ratios at the final length
  std::optional<IntegerRelation> relation;
};

struct SearchStats {
  SearchConfig config;
  std::vector<std::uint64_t> survivors_by_length;  // index n = count at length n
  std::vector<Survivor> top_survivors;             // lexicographically least
  std::uint64_t nodes_visited = 0;
  bool budget_exhausted = false;
  std::string disclaimer;
};

/// Depth-first extension over {1,2,3}* with incremental per-length abelian
/// class sets; prunes any prefix whose class count exceeds rho_bound.
SearchStats search_rho_bounded(const SearchConfig& config);

struct CorpusEntry {
  std::string name;
  WordGeneratorSpec spec;
  /// Analysis input, when it should differ from generate(spec) (e.g. fault
  /// injection); the spec still provides the reference quantities.
  std::optional<FiniteWord> word_override;
};

/// Fibonacci, Tribonacci, the periodic words 12 and 123, and a ternary
/// rotation coding with sqrt2/sqrt3 cuts.
std::vector<CorpusEntry> default_catalog(std::size_t prefix_length);

struct SuiteBounds {
  std::size_t ell_max = 50;
  std::size_t n_max = 200;
  std::int64_t relation_bound = 50;
  std::size_t block_checks = 200;  // random block-identity triples per word
  std::size_t ell_fixed = 0;       // restrict block-length checks to one ell (0 = sweep)
  std::uint64_t rng_seed = 20240601;
};

struct CheckResult {
  std::string check;
  std::string word;
  std::string status;  // pass | fail | skipped
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool all_pass = true;
  std::string disclaimer;
};

/// Known suites: lemma10, lemma16, lemma19, lemma22, eq4, all.
bool known_suite(const std::string& suite);
SuiteReport run_lemma_suite(const std::string& suite, const std::vector<CorpusEntry>& corpus,
                            const SuiteBounds& bounds);

}  // namespace wordlab
