#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wordlab/words.hpp"

namespace wordlab {

/// Suffix automaton over the word's index sequence; exact distinct-factor
/// counting with no hashing involved.
class SuffixAutomaton {
 public:
  explicit SuffixAutomaton(const FiniteWord& word);

  /// counts[n] = number of distinct length-n factors, for 0 <= n <= n_max.
  std::vector<std::int64_t> factor_counts(std::size_t n_max) const;

 private:
  struct State {
    int len = 0;
    int link = -1;
    std::map<std::uint32_t, int> next;
  };
  std::vector<State> states_;
};

/// Number of distinct length-n factors of w, as observed on the prefix.
std::int64_t subword_complexity(const FiniteWord& word, std::size_t n);

/// Number of distinct Parikh vectors among the length-n factors, computed by a
/// sliding window with constant-time count updates per step.
std::int64_t abelian_complexity(const FiniteWord& word, std::size_t n);

/// The distinct Parikh vectors of the length-n factors, sorted lexicographically.
std::vector<ParikhVector> parikh_classes(const FiniteWord& word, std::size_t n);

/// Per-letter max window count minus min window count at a single length n.
std::vector<std::int64_t> window_deviation(const FiniteWord& word, std::size_t n);

struct BalanceProfile {
  std::size_t n_max = 0;
  /// deviation[letter][n-1] for n in [1, n_max]
  std::vector<std::vector<std::int64_t>> deviation;
  std::vector<std::int64_t> max_deviation;  // per letter, over the tested range
};

BalanceProfile balance_profile(const FiniteWord& word, std::size_t n_max);

struct ComplexityRow {
  std::int64_t n = 0;
  std::int64_t subword = 0;
  std::int64_t abelian = 0;
  std::vector<std::int64_t> deviation;  // per letter
};

struct ComplexityProfile {
  std::string word_id;
  std::size_t n_max = 0;
  std::string letters;
  std::vector<ComplexityRow> rows;
};

ComplexityProfile compute_profile(const FiniteWord& word, std::size_t n_max,
                                  std::string word_id = {});

/// CSV with header n,subword,abelian,dev_<sym1>,...
std::string profile_csv(const ComplexityProfile& profile);

struct BalanceAbelianViolation {
  std::int64_t n = 0;
  std::int64_t deviation = 0;
  std::int64_t abelian = 0;
  bool advisory = false;  // upper-bound reports are advisory only
  std::string message;
};

/// Checks deviation(n) + 1 <= abelian(n) per length (hard), and the
/// (C+1)^(d-1) upper bound with the range-wide deviation (advisory).
std::vector<BalanceAbelianViolation> check_balance_abelian_inequality(
    const ComplexityProfile& profile);

enum class ParikhShapeKind { Singleton, Pair, Chain, LShape, Other };

const char* to_string(ParikhShapeKind kind);

struct ParikhSetShape {
  ParikhShapeKind kind = ParikhShapeKind::Other;
  ParikhVector base;
  /// Letter permutation: role position r is played by letter permutation[r].
  std::vector<int> permutation;
};

/// Matches the set against the templates, in the order Singleton, Pair,
/// Chain {v, v+ei-ej, v+2ei-2ej}, LShape {v, v+ei-ej, v+2ei-ej-ek}; base
/// candidates and permutations are tried in lexicographic order.
ParikhSetShape classify_parikh_set(const std::vector<ParikhVector>& set);

/// Least n with subword_count(n) <= (d-1)*n, if any in the profile.
std::optional<std::int64_t> tijdeman_flag(const ComplexityProfile& profile, int alphabet_size);

}  // namespace wordlab
