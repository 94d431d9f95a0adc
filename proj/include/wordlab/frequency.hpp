#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wordlab/complexity.hpp"
#include "wordlab/words.hpp"

namespace wordlab {

/// One letter frequency: an exact value plus a certified radius. Radius 0
/// means the value is exact; substitution frequencies carry small enclosure
/// radii from the Perron computation.
struct FrequencyEntry {
  ExactReal value;
  Rational radius = 0;
};

enum class FrequencySource { Empirical, Exact };

struct FrequencyVector {
  std::vector<FrequencyEntry> entries;
  FrequencySource source = FrequencySource::Exact;
  std::size_t prefix_length = 0;  // for empirical sources
  std::string origin;

  int size() const { return static_cast<int>(entries.size()); }
  bool all_exact() const;
};

/// Exact rational prefix ratios; entries sum to 1.
FrequencyVector empirical_frequencies(const FiniteWord& word);

/// Closed-form frequencies per generator family; substitutions use a
/// certified Perron-eigenvector enclosure of the incidence matrix.
FrequencyVector exact_frequencies(const WordGeneratorSpec& spec);

struct IntegerRelation {
  std::vector<std::int64_t> coefficients;  // gcd-reduced, nonzero
  ExactReal residual;                      // |q . f| on the entry values
  double residual_bound = 0.0;             // |q . f| plus radius slack
  bool certificate = false;                // residual exactly zero on exact input
};

/// Exhaustive scan of nonzero integer vectors with max-norm <= bound, up to
/// sign and gcd; returns the residual-minimizing vector when the minimum is
/// <= tolerance. Ties go to the lexicographically least vector.
std::optional<IntegerRelation> integer_relation_search(const std::vector<FrequencyEntry>& f,
                                                       std::int64_t bound,
                                                       const Rational& tolerance);
std::optional<IntegerRelation> integer_relation_search(const FrequencyVector& f,
                                                       std::int64_t bound,
                                                       const Rational& tolerance);

using LowAbelianResult = std::variant<FrequencyVector, IntegerRelation>;

/// Constructive consequence of a ternary length-ell Parikh-class set of
/// cardinality <= 2: either the exact frequencies (card 1) or an integer
/// relation annihilating them (card 2).
LowAbelianResult relation_from_low_abelian(const std::vector<ParikhVector>& classes,
                                           std::int64_t ell);

struct HubertReport {
  enum class Status {
    RelationFound,        // 1-balanced over the range and a relation exists
    Inconclusive,         // 1-balanced over the range, no relation up to the bound
    SkippedSmallAlphabet, // d < 3
    NotOneBalanced,       // deviation 2 observed; the check does not apply
  };
  Status status = Status::Inconclusive;
  std::optional<IntegerRelation> relation;
  std::int64_t max_deviation = 0;
  std::size_t n_max = 0;
};

/// For d >= 3 words that look 1-balanced over the tested range, searches for
/// an integer relation (bound 100, tolerance 0) among the exact frequencies.
HubertReport hubert_consistency_check(const FiniteWord& word, const FrequencyVector& f,
                                      std::size_t n_max);

struct PerronEnclosure {
  std::vector<Rational> lo;
  std::vector<Rational> hi;
  int positivity_power = 0;
};

/// Certified per-coordinate enclosure of the normalized Perron eigenvector of
/// a primitive nonnegative integer matrix, via normalized columns of repeated
/// squarings. Width shrinks below `width_target` before returning.
PerronEnclosure perron_frequency_enclosure(const IntMatrix& incidence,
                                           const Rational& width_target);

}  // namespace wordlab
