#pragma once

#include <optional>
#include <vector>

#include "wordlab/complexity.hpp"
#include "wordlab/frequency.hpp"
#include "wordlab/words.hpp"

namespace wordlab {

/// Abelian classes realized by the aligned length-ell blocks, in lexicographic
/// order of their Parikh vectors; the order names the induced letters.
struct InducedAlphabet {
  std::vector<ParikhVector> classes;
  std::size_t block_length = 0;
  Alphabet names;
};

/// Integer matrix whose column j is the Parikh vector of induced class j.
struct InductionMatrix {
  IntMatrix m;
  std::size_t block_length = 0;
};

struct InductionResult {
  FiniteWord word;
  InducedAlphabet alphabet;
  InductionMatrix matrix;
};

/// Recodes w by the abelian classes of its consecutive aligned length-ell
/// blocks; the trailing remainder is discarded.
InductionResult induce(const FiniteWord& word, std::size_t ell);

/// Exact integer check of counts(pref_{n*ell}(w)) = M * counts(pref_n(induced));
/// returns the per-coordinate differences (all zero on success).
ParikhVector verify_block_identity(const FiniteWord& word, std::size_t ell, std::size_t blocks);

struct RankReport {
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  Eigen::Index rank = 0;
  bool square = false;
  bool invertible = false;
  Rational determinant = 0;  // square matrices only
  /// gcd-reduced integer kernel vector of the transpose, when rank < rows.
  std::optional<std::vector<std::int64_t>> transpose_kernel;
};

/// Exact rational rank; for singular square matrices also a transpose-kernel
/// vector (the vector annihilating the letter frequencies). Non-square
/// matrices are reported as such rather than rejected.
RankReport matrix_rank_check(const InductionMatrix& matrix);

/// (1/ell) * M * f_induced: the base-word frequencies implied by induced ones.
FrequencyVector induced_frequency_relation(const FrequencyVector& f_induced,
                                           const InductionMatrix& matrix);

struct PreservationRow {
  std::int64_t n = 0;
  std::int64_t induced_abelian = 0;
  std::int64_t base_abelian = 0;  // at length n*ell
};

struct PreservationReport {
  std::size_t ell = 0;
  std::size_t n_max = 0;
  std::vector<PreservationRow> rows;
  bool inequality_holds = true;  // induced <= base at every tested n
};

/// Requires an induction matrix of full column rank (distinct induced classes
/// then abelianize to distinct base vectors).
PreservationReport verify_complexity_preservation(const FiniteWord& word, std::size_t ell,
                                                  std::size_t n_max);

struct BalancedInductionResult {
  std::size_t block_length = 0;   // least ell exhibiting a deviation-2 letter
  int deviation_letter = -1;      // letter of the base word with deviation >= 2
  ParikhSetShape shape;           // classification of all length-ell classes
  ParikhVector middle_class;      // base + e_i - e_j under the recorded permutation
  std::optional<int> middle_induced_letter;  // its index in the induced alphabet
  BalanceProfile induced_balance;
  std::vector<int> one_balanced_letters;  // induced letters with deviation <= 1
};

/// Searches ell <= ell_max for a window length where some letter attains
/// deviation 2, induces there, classifies the class set, and reports which
/// induced letters are 1-balanced over n <= n_max.
BalancedInductionResult induce_to_balanced(const FiniteWord& word, std::size_t ell_max,
                                           std::size_t n_max);

/// The induced word alone; the stride-k reduction of linear-length hypotheses.
FiniteWord stride_reduce(const FiniteWord& word, std::size_t k);

}  // namespace wordlab
