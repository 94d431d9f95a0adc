#include "wordlab/frequency.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/multiprecision/eigen.hpp>

namespace wordlab {

namespace {

using BigMatrix = Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic>;

BigMatrix to_big(const IntMatrix& m) {
  BigMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  }
  return out;
}

// Eigen's product expressions trip over boost's converting constructors for
// cpp_int, so the multiply is spelled out.
BigMatrix big_product(const BigMatrix& a, const BigMatrix& b) {
  BigMatrix out(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      BigInt sum = 0;
      for (Eigen::Index k = 0; k < a.cols(); ++k) sum += a(i, k) * b(k, j);
      out(i, j) = sum;
    }
  }
  return out;
}

bool all_positive(const BigMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (m(i, j) <= 0) return false;
    }
  }
  return true;
}

}  // namespace

bool FrequencyVector::all_exact() const {
  for (const auto& e : entries) {
    if (e.radius != 0) return false;
  }
  return true;
}

FrequencyVector empirical_frequencies(const FiniteWord& word) {
  if (word.length() == 0) fail(errc::empty_word, "cannot take frequencies of an empty word");
  ParikhVector counts = parikh(word);
  FrequencyVector f;
  f.source = FrequencySource::Empirical;
  f.prefix_length = word.length();
  f.origin = "prefix counts";
  auto len = static_cast<long long>(word.length());
  for (Eigen::Index i = 0; i < counts.size(); ++i) {
    f.entries.push_back({ExactReal(Rational(counts[i], len)), 0});
  }
  return f;
}

PerronEnclosure perron_frequency_enclosure(const IntMatrix& incidence,
                                           const Rational& width_target) {
  if (incidence.rows() != incidence.cols() || incidence.rows() < 1) {
    fail(errc::invalid_parameter, "incidence matrix must be square");
  }
  Eigen::Index d = incidence.rows();
  BigMatrix m = to_big(incidence);

  // Wielandt bound: a primitive d x d matrix has a positive power of exponent
  // at most (d-1)^2 + 1.
  int positivity_cap = static_cast<int>((d - 1) * (d - 1) + 1);
  BigMatrix power = m;
  int exponent = 1;
  while (!all_positive(power)) {
    if (exponent > positivity_cap) {
      fail(errc::non_primitive_substitution, "incidence matrix is not primitive");
    }
    power = big_product(power, m);
    ++exponent;
  }

  PerronEnclosure enclosure;
  enclosure.positivity_power = exponent;
  enclosure.lo.assign(static_cast<std::size_t>(d), Rational(0));
  enclosure.hi.assign(static_cast<std::size_t>(d), Rational(1));

  // The normalized Perron direction lies in the convex hull of the normalized
  // columns of every positive power, so per-coordinate column extremes give a
  // rigorous interval that contracts under squaring.
  for (int step = 0; step < 40; ++step) {
    Rational width(0);
    for (Eigen::Index i = 0; i < d; ++i) {
      Rational lo, hi;
      for (Eigen::Index j = 0; j < d; ++j) {
        BigInt colsum = 0;
        for (Eigen::Index r = 0; r < d; ++r) colsum += power(r, j);
        Rational value(power(i, j), colsum);
        if (j == 0 || value < lo) lo = value;
        if (j == 0 || value > hi) hi = value;
      }
      enclosure.lo[static_cast<std::size_t>(i)] = lo;
      enclosure.hi[static_cast<std::size_t>(i)] = hi;
      width = std::max(width, Rational(hi - lo));
    }
    if (width <= width_target) return enclosure;
    power = big_product(power, power);
  }
  fail(errc::internal_error, "Perron enclosure did not reach the target width");
}

namespace {

FrequencyVector frequencies_of_substitution(const SubstitutionSpec& spec) {
  IntMatrix m = incidence_matrix(spec);
  PerronEnclosure enclosure = perron_frequency_enclosure(m, Rational(1, 1000000000));
  auto d = static_cast<std::size_t>(m.rows());
  FrequencyVector f;
  f.source = FrequencySource::Exact;
  f.origin = "Perron eigenvector enclosure";
  Rational mid_sum(0);
  Rational radius_sum(0);
  for (std::size_t i = 0; i < d; ++i) {
    Rational mid = (enclosure.lo[i] + enclosure.hi[i]) / 2;
    Rational radius = (enclosure.hi[i] - enclosure.lo[i]) / 2;
    if (i + 1 < d) {
      f.entries.push_back({ExactReal(mid), radius});
      mid_sum += mid;
      radius_sum += radius;
    } else {
      // Close the sum exactly; the radius absorbs the adjustment.
      Rational last = 1 - mid_sum;
      f.entries.push_back({ExactReal(last), radius + radius_sum});
    }
  }
  return f;
}

}  // namespace

FrequencyVector exact_frequencies(const WordGeneratorSpec& spec) {
  FrequencyVector f;
  f.source = FrequencySource::Exact;
  if (const auto* p = std::get_if<PeriodicSpec>(&spec.variant)) {
    FiniteWord pattern = generate({PeriodicSpec{p->pattern}, p->pattern.size()});
    ParikhVector counts = parikh(pattern);
    auto period = static_cast<long long>(p->pattern.size());
    for (Eigen::Index i = 0; i < counts.size(); ++i) {
      f.entries.push_back({ExactReal(Rational(counts[i], period)), 0});
    }
    f.origin = "pattern counts";
    return f;
  }
  if (const auto* rb = std::get_if<RotationBinarySpec>(&spec.variant)) {
    f.entries.push_back({ExactReal(1) - rb->angle, 0});
    f.entries.push_back({rb->angle, 0});
    f.origin = "partition interval lengths";
    return f;
  }
  if (const auto* rt = std::get_if<RotationTernarySpec>(&spec.variant)) {
    f.entries.push_back({rt->cut1, 0});
    f.entries.push_back({rt->cut2 - rt->cut1, 0});
    f.entries.push_back({ExactReal(1) - rt->cut2, 0});
    f.origin = "partition interval lengths";
    return f;
  }
  return frequencies_of_substitution(std::get<SubstitutionSpec>(spec.variant));
}

namespace {

std::int64_t vector_gcd(const std::vector<std::int64_t>& q) {
  std::int64_t g = 0;
  for (std::int64_t x : q) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

}  // namespace

std::optional<IntegerRelation> integer_relation_search(const std::vector<FrequencyEntry>& f,
                                                       std::int64_t bound,
                                                       const Rational& tolerance) {
  if (f.empty()) fail(errc::invalid_parameter, "empty frequency vector");
  if (bound < 1) fail(errc::invalid_parameter, "relation bound must be >= 1");
  if (tolerance < 0) fail(errc::invalid_parameter, "tolerance must be >= 0");
  int d = static_cast<int>(f.size());

  std::vector<double> approx(static_cast<std::size_t>(d));
  double scale = 0.0;
  for (int i = 0; i < d; ++i) {
    approx[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(i)].value.to_double();
    scale = std::max(scale, std::fabs(approx[static_cast<std::size_t>(i)]));
  }
  double slack = 1e-9 * (scale + 1.0) * static_cast<double>(bound) * d;

  std::vector<std::int64_t> q(static_cast<std::size_t>(d), -bound);
  std::optional<std::vector<std::int64_t>> best_q;
  ExactReal best_abs;
  double best_approx = 0.0;

  auto advance = [&]() {
    int i = d - 1;
    while (i >= 0) {
      auto ui = static_cast<std::size_t>(i);
      if (q[ui] < bound) {
        ++q[ui];
        return true;
      }
      q[ui] = -bound;
      --i;
    }
    return false;
  };

  // Lexicographic enumeration ensures the tie-break: the first vector
  // attaining the minimum is the lexicographically least one.
  do {
    int first_nonzero = -1;
    for (int i = 0; i < d; ++i) {
      if (q[static_cast<std::size_t>(i)] != 0) {
        first_nonzero = i;
        break;
      }
    }
    if (first_nonzero < 0) continue;                          // zero vector
    if (q[static_cast<std::size_t>(first_nonzero)] < 0) continue;  // canonical sign
    if (vector_gcd(q) != 1) continue;

    double r = 0.0;
    for (int i = 0; i < d; ++i) {
      r += static_cast<double>(q[static_cast<std::size_t>(i)]) *
           approx[static_cast<std::size_t>(i)];
    }
    r = std::fabs(r);
    if (best_q && r > best_approx + slack) continue;

    ExactReal dot;
    for (int i = 0; i < d; ++i) {
      if (q[static_cast<std::size_t>(i)] != 0) {
        dot += f[static_cast<std::size_t>(i)].value * Rational(q[static_cast<std::size_t>(i)]);
      }
    }
    ExactReal abs = dot.abs();
    if (!best_q || abs < best_abs) {
      best_q = q;
      best_abs = abs;
      best_approx = abs.to_double();
    }
  } while (advance());

  if (!best_q) return std::nullopt;
  if ((best_abs - ExactReal(tolerance)).sign() > 0) return std::nullopt;

  IntegerRelation relation;
  relation.coefficients = *best_q;
  relation.residual = best_abs;
  double radius_slack = 0.0;
  bool exact = true;
  for (int i = 0; i < d; ++i) {
    const auto& entry = f[static_cast<std::size_t>(i)];
    if (entry.radius != 0) exact = false;
    radius_slack += std::fabs(static_cast<double>((*best_q)[static_cast<std::size_t>(i)])) *
                    entry.radius.convert_to<double>();
  }
  relation.residual_bound = best_abs.to_double() + radius_slack;
  relation.certificate = exact && best_abs.is_zero();
  return relation;
}

std::optional<IntegerRelation> integer_relation_search(const FrequencyVector& f,
                                                       std::int64_t bound,
                                                       const Rational& tolerance) {
  return integer_relation_search(f.entries, bound, tolerance);
}

LowAbelianResult relation_from_low_abelian(const std::vector<ParikhVector>& classes,
                                           std::int64_t ell) {
  if (classes.empty()) fail(errc::inconsistent_set, "empty class set");
  if (classes.size() > 2) {
    fail(errc::not_low_complexity,
         "class set has cardinality " + std::to_string(classes.size()));
  }
  for (const auto& v : classes) {
    if (v.size() != 3) fail(errc::invalid_parameter, "class vectors must be ternary");
    if (v.sum() != ell) fail(errc::inconsistent_set, "class vector does not sum to ell");
  }

  if (classes.size() == 1) {
    const ParikhVector& v = classes.front();
    FrequencyVector f;
    f.source = FrequencySource::Exact;
    f.origin = "single abelian class";
    for (Eigen::Index i = 0; i < 3; ++i) {
      f.entries.push_back({ExactReal(Rational(v[i], ell)), 0});
    }
    return f;
  }

  ParikhVector diff = classes[1] - classes[0];
  int gained = -1;
  int lost = -1;
  int fixed = -1;
  for (int i = 0; i < 3; ++i) {
    if (diff[i] == 1 && gained < 0) {
      gained = i;
    } else if (diff[i] == -1 && lost < 0) {
      lost = i;
    } else if (diff[i] == 0 && fixed < 0) {
      fixed = i;
    } else {
      fail(errc::inconsistent_set, "classes do not differ by a single letter swap");
    }
  }
  if (gained < 0 || lost < 0 || fixed < 0) {
    fail(errc::inconsistent_set, "classes do not differ by a single letter swap");
  }

  std::int64_t fixed_count = classes[0][fixed];
  IntegerRelation relation;
  relation.coefficients.assign(3, 0);
  if (fixed_count == 0) {
    // The fixed letter never occurs at this length: frequency zero.
    relation.coefficients[static_cast<std::size_t>(fixed)] = 1;
  } else {
    // 1*f_a + 1*f_b + (1 - ell/k)*f_c = 0, cleared by k.
    relation.coefficients[static_cast<std::size_t>(gained)] = fixed_count;
    relation.coefficients[static_cast<std::size_t>(lost)] = fixed_count;
    relation.coefficients[static_cast<std::size_t>(fixed)] = fixed_count - ell;
    std::int64_t g = vector_gcd(relation.coefficients);
    for (auto& c : relation.coefficients) c /= g;
  }
  relation.residual = ExactReal(0);
  relation.residual_bound = 0.0;
  relation.certificate = true;
  return relation;
}

HubertReport hubert_consistency_check(const FiniteWord& word, const FrequencyVector& f,
                                      std::size_t n_max) {
  if (f.source != FrequencySource::Exact) {
    fail(errc::invalid_parameter, "the consistency check needs exact frequencies");
  }
  if (f.size() != word.alphabet().size()) {
    fail(errc::dimension_mismatch, "frequency vector does not match the alphabet");
  }
  HubertReport report;
  report.n_max = n_max;
  if (word.alphabet().size() < 3) {
    report.status = HubertReport::Status::SkippedSmallAlphabet;
    return report;
  }
  BalanceProfile balance = balance_profile(word, n_max);
  for (std::int64_t dev : balance.max_deviation) {
    report.max_deviation = std::max(report.max_deviation, dev);
  }
  if (report.max_deviation > 1) {
    report.status = HubertReport::Status::NotOneBalanced;
    return report;
  }
  report.relation = integer_relation_search(f, 100, Rational(0));
  report.status = report.relation ? HubertReport::Status::RelationFound
                                  : HubertReport::Status::Inconclusive;
  return report;
}

}  // namespace wordlab
