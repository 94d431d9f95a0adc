#include "wordlab/induction.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <boost/multiprecision/eigen.hpp>

namespace wordlab {

namespace {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  }
  return out;
}

struct Echelon {
  RationalMatrix mat;
  std::vector<Eigen::Index> pivot_cols;
  Rational det = 1;  // square matrices: product of pivots with row-swap signs
};

Echelon row_echelon(RationalMatrix m) {
  Echelon result;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = row; r < m.rows(); ++r) {
      if (m(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      m.row(pivot).swap(m.row(row));
      result.det = -result.det;
    }
    result.det *= m(row, col);
    for (Eigen::Index r = row + 1; r < m.rows(); ++r) {
      if (m(r, col) == 0) continue;
      Rational factor = m(r, col) / m(row, col);
      for (Eigen::Index c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    result.pivot_cols.push_back(col);
    ++row;
  }
  if (static_cast<Eigen::Index>(result.pivot_cols.size()) < std::min(m.rows(), m.cols())) {
    result.det = 0;
  }
  result.mat = std::move(m);
  return result;
}

// First kernel vector of m (column space), gcd-reduced with positive leading
// entry; requires rank < cols.
std::vector<std::int64_t> integer_kernel_vector(const RationalMatrix& m) {
  Echelon e = row_echelon(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (Eigen::Index c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  Eigen::Index free_col = -1;
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    if (!is_pivot[static_cast<std::size_t>(c)]) {
      free_col = c;
      break;
    }
  }
  if (free_col < 0) fail(errc::internal_error, "kernel requested of a full-rank matrix");

  std::vector<Rational> x(static_cast<std::size_t>(m.cols()), Rational(0));
  x[static_cast<std::size_t>(free_col)] = 1;
  for (Eigen::Index r = static_cast<Eigen::Index>(e.pivot_cols.size()) - 1; r >= 0; --r) {
    Eigen::Index pc = e.pivot_cols[static_cast<std::size_t>(r)];
    Rational sum(0);
    for (Eigen::Index c = pc + 1; c < m.cols(); ++c) {
      sum += e.mat(r, c) * x[static_cast<std::size_t>(c)];
    }
    x[static_cast<std::size_t>(pc)] = -sum / e.mat(r, pc);
  }

  BigInt den(1);
  for (const auto& v : x) den = lcm(den, denominator(v));
  std::vector<BigInt> scaled;
  scaled.reserve(x.size());
  BigInt g(0);
  for (const auto& v : x) {
    BigInt s = numerator(v) * (den / denominator(v));
    g = gcd(g, s);
    scaled.push_back(s);
  }
  if (g == 0) fail(errc::internal_error, "zero kernel vector");
  int lead_sign = 0;
  for (const auto& s : scaled) {
    if (s != 0) {
      lead_sign = s > 0 ? 1 : -1;
      break;
    }
  }
  std::vector<std::int64_t> out;
  out.reserve(scaled.size());
  for (const auto& s : scaled) {
    BigInt v = s / g * lead_sign;
    out.push_back(v.convert_to<std::int64_t>());
  }
  return out;
}

}  // namespace

InductionResult induce(const FiniteWord& word, std::size_t ell) {
  if (ell < 1) fail(errc::invalid_parameter, "block length must be >= 1");
  if (ell > word.length()) {
    fail(errc::block_too_long, "block length " + std::to_string(ell) +
                                   " exceeds the word length " +
                                   std::to_string(word.length()));
  }
  int d = word.alphabet().size();
  std::size_t blocks = word.length() / ell;

  std::map<std::vector<std::int64_t>, int> class_ids;
  for (std::size_t b = 0; b < blocks; ++b) {
    ParikhVector counts = ParikhVector::Zero(d);
    for (std::size_t i = b * ell; i < (b + 1) * ell; ++i) {
      ++counts[static_cast<Eigen::Index>(word[i])];
    }
    std::vector<std::int64_t> key(counts.data(), counts.data() + counts.size());
    class_ids.emplace(std::move(key), 0);
  }

  // Canonical lexicographic order of the realized classes (std::map keys are
  // already lexicographically sorted).
  std::vector<ParikhVector> classes;
  int next_id = 0;
  for (auto& [key, id] : class_ids) {
    id = next_id++;
    ParikhVector v(d);
    for (int i = 0; i < d; ++i) v[i] = key[static_cast<std::size_t>(i)];
    classes.push_back(std::move(v));
  }
  InducedAlphabet alphabet{std::move(classes), ell, synthetic_alphabet(next_id)};

  std::vector<std::uint32_t> data(blocks);
  for (std::size_t b = 0; b < blocks; ++b) {
    ParikhVector counts = ParikhVector::Zero(d);
    for (std::size_t i = b * ell; i < (b + 1) * ell; ++i) {
      ++counts[static_cast<Eigen::Index>(word[i])];
    }
    std::vector<std::int64_t> key(counts.data(), counts.data() + counts.size());
    data[b] = static_cast<std::uint32_t>(class_ids.at(key));
  }

  InductionMatrix matrix;
  matrix.block_length = ell;
  matrix.m = IntMatrix(d, next_id);
  for (int j = 0; j < next_id; ++j) {
    matrix.m.col(j) = alphabet.classes[static_cast<std::size_t>(j)];
  }

  return {FiniteWord(alphabet.names, std::move(data)), std::move(alphabet), std::move(matrix)};
}

ParikhVector verify_block_identity(const FiniteWord& word, std::size_t ell,
                                   std::size_t blocks) {
  if (blocks < 1 || ell < 1 || blocks * ell > word.length()) {
    fail(errc::block_too_long, "prefix of " + std::to_string(blocks) + " blocks of length " +
                                   std::to_string(ell) + " exceeds the word");
  }
  InductionResult induction = induce(word, ell);
  ParikhVector lhs = parikh(word.factor(0, blocks * ell - 1));
  ParikhVector induced_counts = parikh(induction.word.factor(0, blocks - 1));
  ParikhVector rhs = induction.matrix.m * induced_counts;
  return lhs - rhs;
}

RankReport matrix_rank_check(const InductionMatrix& matrix) {
  RankReport report;
  report.rows = matrix.m.rows();
  report.cols = matrix.m.cols();
  report.square = report.rows == report.cols;

  Echelon e = row_echelon(to_rational(matrix.m));
  report.rank = static_cast<Eigen::Index>(e.pivot_cols.size());
  if (report.square) {
    report.determinant = e.det;
    report.invertible = e.det != 0;
  }
  if (report.rank < report.rows) {
    // Kernel of the transpose: the annihilator the frequency argument uses.
    report.transpose_kernel =
        integer_kernel_vector(to_rational(IntMatrix(matrix.m.transpose())));
  }
  return report;
}

FrequencyVector induced_frequency_relation(const FrequencyVector& f_induced,
                                           const InductionMatrix& matrix) {
  if (f_induced.size() != matrix.m.cols()) {
    fail(errc::dimension_mismatch, "frequency vector does not match the matrix columns");
  }
  auto ell = static_cast<long long>(matrix.block_length);
  FrequencyVector out;
  out.source = f_induced.source;
  out.prefix_length = f_induced.prefix_length;
  out.origin = "induced frequencies through the induction matrix";
  for (Eigen::Index i = 0; i < matrix.m.rows(); ++i) {
    ExactReal value;
    Rational radius(0);
    for (Eigen::Index j = 0; j < matrix.m.cols(); ++j) {
      const auto& entry = f_induced.entries[static_cast<std::size_t>(j)];
      value += entry.value * Rational(matrix.m(i, j));
      radius += Rational(matrix.m(i, j) < 0 ? -matrix.m(i, j) : matrix.m(i, j)) * entry.radius;
    }
    out.entries.push_back({value / Rational(ell), radius / ell});
  }
  return out;
}

PreservationReport verify_complexity_preservation(const FiniteWord& word, std::size_t ell,
                                                  std::size_t n_max) {
  InductionResult induction = induce(word, ell);
  RankReport rank = matrix_rank_check(induction.matrix);
  // Injectivity of the class map is what the inequality needs: distinct
  // induced count vectors must come from distinct base count vectors.
  if (rank.rank != rank.cols) {
    fail(errc::singular_matrix, "the induction matrix does not have full column rank");
  }
  PreservationReport report;
  report.ell = ell;
  report.n_max = n_max;
  for (std::size_t n = 1; n <= n_max && n <= induction.word.length() && n * ell <= word.length();
       ++n) {
    PreservationRow row;
    row.n = static_cast<std::int64_t>(n);
    row.induced_abelian = abelian_complexity(induction.word, n);
    row.base_abelian = abelian_complexity(word, n * ell);
    if (row.induced_abelian > row.base_abelian) report.inequality_holds = false;
    report.rows.push_back(row);
  }
  return report;
}

BalancedInductionResult induce_to_balanced(const FiniteWord& word, std::size_t ell_max,
                                           std::size_t n_max) {
  if (word.alphabet().size() != 3) {
    fail(errc::not_ternary, "balanced induction needs a ternary word");
  }
  std::size_t found_ell = 0;
  int found_letter = -1;
  for (std::size_t ell = 1; ell <= ell_max && ell <= word.length(); ++ell) {
    std::vector<std::int64_t> dev = window_deviation(word, ell);
    for (std::size_t a = 0; a < dev.size(); ++a) {
      if (dev[a] >= 2) {
        found_ell = ell;
        found_letter = static_cast<int>(a);
        break;
      }
    }
    if (found_letter >= 0) break;
  }
  if (found_letter < 0) {
    fail(errc::no_deviation_two,
         "no window length up to " + std::to_string(ell_max) + " has a deviation-2 letter");
  }

  std::vector<ParikhVector> classes = parikh_classes(word, found_ell);
  if (classes.size() != 3) {
    fail(errc::not_three_classes, "observed " + std::to_string(classes.size()) +
                                      " abelian classes at length " +
                                      std::to_string(found_ell));
  }

  BalancedInductionResult result;
  result.block_length = found_ell;
  result.deviation_letter = found_letter;
  result.shape = classify_parikh_set(classes);

  if (result.shape.kind == ParikhShapeKind::Chain ||
      result.shape.kind == ParikhShapeKind::LShape) {
    ParikhVector middle = result.shape.base;
    ++middle[result.shape.permutation[0]];
    --middle[result.shape.permutation[1]];
    result.middle_class = middle;
  }

  InductionResult induction = induce(word, found_ell);
  if (result.middle_class.size() > 0) {
    for (std::size_t j = 0; j < induction.alphabet.classes.size(); ++j) {
      if (induction.alphabet.classes[j] == result.middle_class) {
        result.middle_induced_letter = static_cast<int>(j);
        break;
      }
    }
  }

  result.induced_balance =
      balance_profile(induction.word, std::min(n_max, induction.word.length()));
  for (std::size_t a = 0; a < result.induced_balance.max_deviation.size(); ++a) {
    if (result.induced_balance.max_deviation[a] <= 1) {
      result.one_balanced_letters.push_back(static_cast<int>(a));
    }
  }
  return result;
}

FiniteWord stride_reduce(const FiniteWord& word, std::size_t k) {
  return induce(word, k).word;
}

}  // namespace wordlab
