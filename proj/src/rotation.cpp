#include "wordlab/rotation.hpp"

#include <cmath>

namespace wordlab {

namespace {

void check_rotation_parameter(const ExactReal& v, const char* what) {
  if (v.sign() < 0 || (v - ExactReal(1)).sign() >= 0) {
    fail(errc::invalid_parameter, std::string(what) + " must lie in [0, 1)");
  }
}

/// Incremental membership tests for the box [1-angle, 1) on one circle axis.
/// Runs on doubles with a drift bound; any step too close to a boundary is
/// decided exactly from the closed form {start + n*angle}.
class AxisScanner {
 public:
  AxisScanner(const ExactReal& angle, const ExactReal& start) : angle_(angle), start_(start) {
    threshold_ = ExactReal(1) - angle;
    angle_d_ = angle.to_double();
    threshold_d_ = 1.0 - angle_d_;
    point_d_ = start.to_double();
    drift_ = 1e-15;
  }

  /// Membership of orbit point n; must be called with n = 0, 1, 2, ...
  bool in_box(std::uint64_t n) {
    if (n > 0) {
      point_d_ += angle_d_;
      if (point_d_ >= 1.0) point_d_ -= 1.0;
      drift_ += 4e-16;
    }
    double margin = drift_ + 1e-13;
    if (point_d_ >= threshold_d_ + margin && point_d_ <= 1.0 - margin) return true;
    if (point_d_ >= margin && point_d_ <= threshold_d_ - margin) return false;
    ExactReal exact = (start_ + angle_ * Rational(n)).frac();
    return (exact - threshold_).sign() >= 0;
  }

 private:
  ExactReal angle_;
  ExactReal start_;
  ExactReal threshold_;
  double angle_d_ = 0.0;
  double threshold_d_ = 0.0;
  double point_d_ = 0.0;
  double drift_ = 0.0;
};

/// lcm of the orbit periods when all parameters are rational, else nullopt.
std::optional<BigInt> rational_period(const TorusRotation& r) {
  if (!r.alpha.is_rational() || !r.beta.is_rational() || !r.x.is_rational() ||
      !r.y.is_rational()) {
    return std::nullopt;
  }
  BigInt qa = denominator(r.alpha.rational_value());
  BigInt qb = denominator(r.beta.rational_value());
  return lcm(qa, qb);
}

void validate_torus(const TorusRotation& r) {
  check_rotation_parameter(r.alpha, "alpha");
  check_rotation_parameter(r.beta, "beta");
  check_rotation_parameter(r.x, "x");
  check_rotation_parameter(r.y, "y");
  if (r.alpha.is_zero() || r.beta.is_zero()) {
    fail(errc::degenerate_box, "a zero angle makes the target box empty");
  }
}

}  // namespace

AngleValue angle_from_frequencies(const FrequencyVector& f) {
  if (f.size() != 2) fail(errc::not_binary, "angle recovery needs a binary frequency vector");
  return f.entries[1].value;
}

ExactReal orbit_point(const CircleRotation& rotation, std::uint64_t n) {
  check_rotation_parameter(rotation.angle, "angle");
  check_rotation_parameter(rotation.start, "start");
  return (rotation.start + rotation.angle * Rational(n)).frac();
}

std::pair<ExactReal, ExactReal> orbit_point(const TorusRotation& rotation, std::uint64_t n) {
  return {(rotation.x + rotation.alpha * Rational(n)).frac(),
          (rotation.y + rotation.beta * Rational(n)).frac()};
}

std::optional<std::uint64_t> find_conflict(const TorusRotation& rotation, std::uint64_t n_max) {
  validate_torus(rotation);
  std::uint64_t limit = n_max;
  if (auto period = rational_period(rotation)) {
    // One full period decides the question for every n.
    if (*period <= n_max) limit = period->convert_to<std::uint64_t>() - 1;
  }
  AxisScanner ax(rotation.alpha, rotation.x);
  AxisScanner ay(rotation.beta, rotation.y);
  for (std::uint64_t n = 0; n <= limit; ++n) {
    bool hit_x = ax.in_box(n);
    bool hit_y = ay.in_box(n);
    if (hit_x && hit_y) return n;
  }
  return std::nullopt;
}

EquidistributionStats equidistribution_check(const TorusRotation& rotation, std::uint64_t N) {
  validate_torus(rotation);
  if (N < 1) fail(errc::invalid_parameter, "need at least one iteration");
  AxisScanner ax(rotation.alpha, rotation.x);
  AxisScanner ay(rotation.beta, rotation.y);
  EquidistributionStats stats;
  stats.iterations = N;
  for (std::uint64_t n = 0; n < N; ++n) {
    bool hit_x = ax.in_box(n);
    bool hit_y = ay.in_box(n);
    if (hit_x && hit_y) ++stats.hits;
  }
  stats.hit_fraction = Rational(stats.hits, N);
  stats.box_area = rotation.alpha.to_double() * rotation.beta.to_double();
  stats.gap = std::fabs(stats.hit_fraction.convert_to<double>() - stats.box_area);
  return stats;
}

MergeResult merge_and_detect(const FiniteWord& w2, const FiniteWord& w3) {
  if (w2.length() != w3.length()) {
    fail(errc::length_mismatch, "flag words must have equal length");
  }
  if (w2.alphabet().size() != 2 || w3.alphabet().size() != 2) {
    fail(errc::not_binary, "flag words must be binary");
  }
  char kept2 = w2.alphabet().symbol(1);
  char kept3 = w3.alphabet().symbol(1);
  if (kept2 == kept3 || kept2 == '1' || kept3 == '1') {
    fail(errc::invalid_parameter, "kept symbols must be distinct and differ from '1'");
  }

  MergeResult result;
  std::vector<std::uint32_t> merged(w2.length());
  for (std::size_t n = 0; n < w2.length(); ++n) {
    bool f2 = w2[n] == 1;
    bool f3 = w3[n] == 1;
    if (f2 && f3) {
      result.conflicts.push_back(n);
    } else {
      merged[n] = f2 ? 1u : (f3 ? 2u : 0u);
    }
  }
  if (result.conflicts.empty()) {
    result.merged = FiniteWord(Alphabet(std::string{'1', kept2, kept3}), std::move(merged));
  }
  return result;
}

}  // namespace wordlab
