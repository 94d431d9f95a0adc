#pragma once

#include <optional>

#include "wordlab/complexity.hpp"
#include "wordlab/words.hpp"

namespace wordlab {

struct DecoloringSpec {
  char kept_letter = '\0';
  char zero_symbol = '0';
};

/// Letter-to-letter map: the kept letter survives, everything else becomes the
/// zero symbol. Output alphabet is (zero_symbol, kept_letter), length preserved.
FiniteWord decolor(const FiniteWord& word, const DecoloringSpec& spec);

/// Exact prefix-count identity: the zero-symbol count of the decolored prefix
/// equals the summed counts of all non-kept letters of the source prefix.
bool verify_decolored_counts(const FiniteWord& word, const DecoloringSpec& spec, std::size_t n);

struct SturmianReport {
  std::size_t n_max = 0;
  std::vector<std::int64_t> max_deviation;     // per letter
  bool abelian_constant_two = true;            // rho(n) == 2 for all tested n
  std::optional<std::int64_t> first_bad_rho_n;
  std::optional<std::size_t> least_period;     // reported when <= length/2
  bool sturmian_consistent = false;            // over the tested range
};

/// Balance, abelian-complexity and periodicity probes of a binary word;
/// the verdict is explicitly limited to the tested range.
SturmianReport sturmian_diagnostic(const FiniteWord& word, std::size_t n_max);

}  // namespace wordlab
