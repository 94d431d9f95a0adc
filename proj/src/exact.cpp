#include "wordlab/exact.hpp"

#include <cctype>
#include <cmath>
#include <mutex>
#include <sstream>
#include <vector>

namespace wordlab {
namespace {

struct RatInterval {
  Rational lo;
  Rational hi;
};

// Enclosure of sqrt(d) with width 2^-bits.
RatInterval sqrt_enclosure(unsigned d, unsigned bits) {
  BigInt scale = BigInt(1) << bits;
  BigInt n = BigInt(d) * scale * scale;
  BigInt s = boost::multiprecision::sqrt(n);  // floor of the integer square root
  return {Rational(s, scale), Rational(s + 1, scale)};
}

Rational cubic(const Rational& x) { return x * x * x - x * x - x - 1; }

// Enclosure of the real root of x^3 = x^2 + x + 1, refined by bisection.
// The cubic is increasing on [1, 2], so sign(cubic(mid)) steers the bracket.
RatInterval tribonacci_enclosure(unsigned bits) {
  Rational lo(1), hi(2);
  for (unsigned i = 0; i < bits; ++i) {
    Rational mid = (lo + hi) / 2;
    if (cubic(mid) < 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

RatInterval basis_enclosure(int idx, unsigned bits) {
  switch (idx) {
    case 0:
      return {Rational(1), Rational(1)};
    case 1:
      return sqrt_enclosure(2, bits);
    case 2:
      return sqrt_enclosure(3, bits);
    case 3:
      return sqrt_enclosure(5, bits);
    case 4:
      return tribonacci_enclosure(bits);
    case 5: {
      RatInterval t = tribonacci_enclosure(bits);
      return {t.lo * t.lo, t.hi * t.hi};
    }
    default:
      fail(errc::internal_error, "unknown basis constant");
  }
}

struct EnclosureCache {
  std::mutex mu;
  std::array<unsigned, ExactReal::kBasis> bits{};
  std::array<RatInterval, ExactReal::kBasis> value;
};

// A tighter cached enclosure is still a valid enclosure for smaller `bits`.
RatInterval cached_enclosure(int idx, unsigned bits) {
  static EnclosureCache cache;
  std::scoped_lock lock(cache.mu);
  auto i = static_cast<std::size_t>(idx);
  if (cache.bits[i] < bits) {
    cache.value[i] = basis_enclosure(idx, bits);
    cache.bits[i] = bits;
  }
  return cache.value[i];
}

double basis_double(int idx) {
  static const std::array<double, ExactReal::kBasis> values = [] {
    std::array<double, ExactReal::kBasis> v{};
    v[0] = 1.0;
    v[1] = std::sqrt(2.0);
    v[2] = std::sqrt(3.0);
    v[3] = std::sqrt(5.0);
    double t = 1.8;
    for (int i = 0; i < 64; ++i) {
      t = t - (t * t * t - t * t - t - 1) / (3 * t * t - 2 * t - 1);
    }
    v[4] = t;
    v[5] = t * t;
    return v;
  }();
  return values[static_cast<std::size_t>(idx)];
}

const char* basis_name(int idx) {
  switch (idx) {
    case 1:
      return "sqrt2";
    case 2:
      return "sqrt3";
    case 3:
      return "sqrt5";
    case 4:
      return "trib";
    case 5:
      return "trib^2";
    default:
      return "";
  }
}

}  // namespace

ExactReal ExactReal::basis_unit(int i) {
  ExactReal r;
  r.coef_[static_cast<std::size_t>(i)] = 1;
  return r;
}

ExactReal ExactReal::golden() {
  ExactReal r;
  r.coef_[0] = Rational(1, 2);
  r.coef_[3] = Rational(1, 2);
  return r;
}

bool ExactReal::is_rational() const {
  for (int i = 1; i < kBasis; ++i) {
    if (coef_[static_cast<std::size_t>(i)] != 0) return false;
  }
  return true;
}

const Rational& ExactReal::rational_value() const {
  if (!is_rational()) fail(errc::invalid_parameter, "value is irrational");
  return coef_[0];
}

bool ExactReal::is_zero() const {
  for (const auto& c : coef_) {
    if (c != 0) return false;
  }
  return true;
}

int ExactReal::sign() const {
  if (is_zero()) return 0;
  if (is_rational()) return coef_[0].sign();

  // Certified double estimate: clear denominators, then bound the rounding
  // error by a small multiple of the term-magnitude sum.
  BigInt den(1);
  for (const auto& c : coef_) {
    if (c != 0) den = lcm(den, denominator(c));
  }
  double val = 0.0;
  double mag = 0.0;
  for (int i = 0; i < kBasis; ++i) {
    const Rational& c = coef_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    BigInt num = numerator(c) * (den / denominator(c));
    double term = num.convert_to<double>() * basis_double(i);
    val += term;
    mag += std::fabs(term);
  }
  if (std::isfinite(val) && std::isfinite(mag) && std::fabs(val) > mag * 1e-12) {
    return val > 0 ? 1 : -1;
  }

  for (unsigned bits = 96; bits <= (1u << 15); bits *= 2) {
    Rational lo(0), hi(0);
    for (int i = 0; i < kBasis; ++i) {
      const Rational& c = coef_[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      RatInterval e = cached_enclosure(i, bits);
      if (c > 0) {
        lo += c * e.lo;
        hi += c * e.hi;
      } else {
        lo += c * e.hi;
        hi += c * e.lo;
      }
    }
    if (lo > 0) return 1;
    if (hi < 0) return -1;
  }
  fail(errc::internal_error, "sign refinement did not converge");
}

BigInt ExactReal::floor_int() const {
  if (is_rational()) {
    BigInt n = numerator(coef_[0]);
    BigInt d = denominator(coef_[0]);
    BigInt q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
  }
  BigInt k(static_cast<long long>(std::floor(to_double())));
  while ((*this - ExactReal(Rational(k))).sign() < 0) --k;
  while ((*this - ExactReal(Rational(k + 1))).sign() >= 0) ++k;
  return k;
}

ExactReal ExactReal::frac() const { return *this - ExactReal(Rational(floor_int())); }

double ExactReal::to_double() const {
  if (is_rational()) return coef_[0].convert_to<double>();
  Rational lo(0), hi(0);
  for (int i = 0; i < kBasis; ++i) {
    const Rational& c = coef_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    RatInterval e = cached_enclosure(i, 128);
    if (c > 0) {
      lo += c * e.lo;
      hi += c * e.hi;
    } else {
      lo += c * e.hi;
      hi += c * e.lo;
    }
  }
  return (Rational(lo + hi) / 2).convert_to<double>();
}

ExactReal ExactReal::operator-() const {
  ExactReal r;
  for (int i = 0; i < kBasis; ++i) {
    r.coef_[static_cast<std::size_t>(i)] = -coef_[static_cast<std::size_t>(i)];
  }
  return r;
}

ExactReal& ExactReal::operator+=(const ExactReal& o) {
  for (int i = 0; i < kBasis; ++i) {
    coef_[static_cast<std::size_t>(i)] += o.coef_[static_cast<std::size_t>(i)];
  }
  return *this;
}

ExactReal& ExactReal::operator-=(const ExactReal& o) {
  for (int i = 0; i < kBasis; ++i) {
    coef_[static_cast<std::size_t>(i)] -= o.coef_[static_cast<std::size_t>(i)];
  }
  return *this;
}

ExactReal& ExactReal::operator*=(const Rational& r) {
  for (auto& c : coef_) c *= r;
  return *this;
}

ExactReal& ExactReal::operator/=(const Rational& r) {
  if (r == 0) fail(errc::invalid_parameter, "division by zero");
  for (auto& c : coef_) c /= r;
  return *this;
}

std::string ExactReal::to_string() const {
  std::ostringstream out;
  bool wrote = false;
  if (coef_[0] != 0 || is_zero()) {
    out << coef_[0];
    wrote = true;
  }
  for (int i = 1; i < kBasis; ++i) {
    const Rational& c = coef_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational a = c < 0 ? Rational(-c) : c;
    if (wrote) {
      out << (c < 0 ? " - " : " + ");
    } else if (c < 0) {
      out << "-";
    }
    if (a != 1) out << a << "*";
    out << basis_name(i);
    wrote = true;
  }
  return out.str();
}

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eof() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool consume(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  Rational parse_number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    std::string integral(text.substr(start, pos - start));
    std::string fractional;
    if (pos < text.size() && text[pos] == '.') {
      ++pos;
      std::size_t fstart = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      fractional = std::string(text.substr(fstart, pos - fstart));
    }
    if (integral.empty() && fractional.empty()) {
      fail(errc::invalid_parameter, "expected a number in '" + std::string(text) + "'");
    }
    BigInt num = integral.empty() ? BigInt(0) : BigInt(integral);
    BigInt den(1);
    for (char c : fractional) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
    Rational value(num, den);
    if (fractional.empty() && consume('/')) {
      skip_ws();
      std::size_t dstart = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (dstart == pos) fail(errc::invalid_parameter, "expected a denominator");
      BigInt d(std::string(text.substr(dstart, pos - dstart)));
      if (d == 0) fail(errc::invalid_parameter, "zero denominator");
      value /= Rational(d);
    }
    return value;
  }

  std::string parse_name() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '^')) {
      ++pos;
    }
    return std::string(text.substr(start, pos - start));
  }

  ExactReal named_constant(const std::string& name) {
    if (name == "sqrt2") return ExactReal::sqrt2();
    if (name == "sqrt3") return ExactReal::sqrt3();
    if (name == "sqrt5") return ExactReal::sqrt5();
    if (name == "phi" || name == "golden") return ExactReal::golden();
    if (name == "trib" || name == "tribonacci") return ExactReal::tribonacci_constant();
    if (name == "trib^2" || name == "trib2") return ExactReal::tribonacci_constant_sq();
    fail(errc::invalid_parameter, "unknown constant '" + name + "'");
  }

  ExactReal parse_term() {
    if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') {
      Rational coef = parse_number();
      if (consume('*') || std::isalpha(static_cast<unsigned char>(peek()))) {
        return named_constant(parse_name()) * coef;
      }
      return ExactReal(coef);
    }
    return named_constant(parse_name());
  }

  ExactReal parse_expr() {
    ExactReal value;
    bool negate = false;
    if (consume('-')) {
      negate = true;
    } else {
      consume('+');
    }
    while (true) {
      ExactReal term = parse_term();
      value += negate ? -term : term;
      if (eof()) break;
      if (consume('-')) {
        negate = true;
      } else if (consume('+')) {
        negate = false;
      } else {
        fail(errc::invalid_parameter,
             "unexpected character in expression '" + std::string(text) + "'");
      }
    }
    return value;
  }
};

}  // namespace

ExactReal parse_exact(std::string_view text) {
  Parser p{text};
  if (p.eof()) fail(errc::invalid_parameter, "empty expression");
  return p.parse_expr();
}

const char* to_string(errc code) {
  switch (code) {
    case errc::invalid_parameter:
      return "InvalidParameter";
    case errc::non_prolongable_morphism:
      return "NonProlongableMorphism";
    case errc::boundary_ambiguity:
      return "BoundaryAmbiguity";
    case errc::index_out_of_range:
      return "IndexOutOfRange";
    case errc::length_out_of_range:
      return "LengthOutOfRange";
    case errc::mixed_lengths:
      return "MixedLengths";
    case errc::not_low_complexity:
      return "NotLowComplexity";
    case errc::inconsistent_set:
      return "InconsistentSet";
    case errc::empty_word:
      return "EmptyWord";
    case errc::non_primitive_substitution:
      return "NonPrimitiveSubstitution";
    case errc::block_too_long:
      return "BlockTooLong";
    case errc::dimension_mismatch:
      return "DimensionMismatch";
    case errc::singular_matrix:
      return "SingularMatrix";
    case errc::not_ternary:
      return "NotTernary";
    case errc::no_deviation_two:
      return "NoDeviationTwo";
    case errc::not_three_classes:
      return "NotThreeClasses";
    case errc::letter_not_in_alphabet:
      return "LetterNotInAlphabet";
    case errc::not_binary:
      return "NotBinary";
    case errc::length_mismatch:
      return "LengthMismatch";
    case errc::degenerate_box:
      return "DegenerateBox";
    case errc::io_error:
      return "IoError";
    case errc::internal_error:
      return "InternalError";
  }
  return "UnknownError";
}

}  // namespace wordlab
