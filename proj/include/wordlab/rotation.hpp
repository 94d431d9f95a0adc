#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "wordlab/frequency.hpp"
#include "wordlab/words.hpp"

namespace wordlab {

using AngleValue = ExactReal;

struct CircleRotation {
  AngleValue angle;
  AngleValue start;
  Partition partition = Partition::A;
};

struct TorusRotation {
  AngleValue alpha;
  AngleValue beta;
  AngleValue x;
  AngleValue y;
};

/// For a binary frequency vector (1-a, a): the rotation angle a, i.e. the
/// kept-letter frequency.
AngleValue angle_from_frequencies(const FrequencyVector& f);

/// {x + n*angle}, evaluated exactly.
ExactReal orbit_point(const CircleRotation& rotation, std::uint64_t n);
std::pair<ExactReal, ExactReal> orbit_point(const TorusRotation& rotation, std::uint64_t n);

/// Least n in [0, n_max] whose torus orbit point lies in the simultaneous
/// kept-letter box [1-alpha, 1) x [1-beta, 1); for rational parameters the
/// scan stops after one full period, which decides the question exactly.
std::optional<std::uint64_t> find_conflict(const TorusRotation& rotation, std::uint64_t n_max);

struct EquidistributionStats {
  std::uint64_t hits = 0;
  std::uint64_t iterations = 0;
  Rational hit_fraction = 0;
  double box_area = 0.0;
  double gap = 0.0;  // |hit_fraction - box_area|
};

/// Fraction of the first N orbit points inside the box [1-a, 1) x [1-b, 1).
EquidistributionStats equidistribution_check(const TorusRotation& rotation, std::uint64_t N);

struct MergeResult {
  std::optional<FiniteWord> merged;  // present only when there is no conflict
  std::vector<std::size_t> conflicts;
};

/// Merges two binary flag words (position n flagged when it carries the
/// second alphabet symbol) into a ternary word: '1' where neither flags, the
/// respective kept symbols where exactly one flags. Positions where both flag
/// are conflicts.
MergeResult merge_and_detect(const FiniteWord& w2, const FiniteWord& w3);

}  // namespace wordlab
