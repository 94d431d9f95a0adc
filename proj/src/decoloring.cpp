#include "wordlab/decoloring.hpp"

#include <algorithm>

namespace wordlab {

FiniteWord decolor(const FiniteWord& word, const DecoloringSpec& spec) {
  int kept = word.alphabet().index(spec.kept_letter);
  if (spec.zero_symbol == spec.kept_letter) {
    fail(errc::invalid_parameter, "the zero symbol must differ from the kept letter");
  }
  Alphabet binary(std::string{spec.zero_symbol, spec.kept_letter});
  std::vector<std::uint32_t> data(word.length());
  for (std::size_t i = 0; i < word.length(); ++i) {
    data[i] = word[i] == static_cast<std::uint32_t>(kept) ? 1u : 0u;
  }
  return FiniteWord(binary, std::move(data));
}

bool verify_decolored_counts(const FiniteWord& word, const DecoloringSpec& spec,
                             std::size_t n) {
  if (n > word.length()) fail(errc::length_out_of_range, "prefix exceeds the word");
  FiniteWord image = decolor(word, spec);
  int kept = word.alphabet().index(spec.kept_letter);
  std::int64_t zero_count = 0;
  std::int64_t other_count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (image[i] == 0) ++zero_count;
    if (word[i] != static_cast<std::uint32_t>(kept)) ++other_count;
  }
  return zero_count == other_count;
}

namespace {

// Least weak period via the prefix function: length minus the longest border.
std::size_t least_period(const std::vector<std::uint32_t>& s) {
  std::vector<std::size_t> pi(s.size(), 0);
  for (std::size_t i = 1; i < s.size(); ++i) {
    std::size_t j = pi[i - 1];
    while (j > 0 && s[i] != s[j]) j = pi[j - 1];
    if (s[i] == s[j]) ++j;
    pi[i] = j;
  }
  return s.empty() ? 0 : s.size() - pi.back();
}

}  // namespace

SturmianReport sturmian_diagnostic(const FiniteWord& word, std::size_t n_max) {
  if (word.alphabet().size() != 2) {
    fail(errc::not_binary, "the Sturmian diagnostic needs a binary word");
  }
  if (n_max < 1 || n_max > word.length()) {
    fail(errc::length_out_of_range, "diagnostic range exceeds the word length");
  }
  SturmianReport report;
  report.n_max = n_max;

  BalanceProfile balance = balance_profile(word, n_max);
  report.max_deviation = balance.max_deviation;

  for (std::size_t n = 1; n <= n_max; ++n) {
    if (abelian_complexity(word, n) != 2) {
      report.abelian_constant_two = false;
      report.first_bad_rho_n = static_cast<std::int64_t>(n);
      break;
    }
  }

  std::size_t period = least_period(word.data());
  if (period <= word.length() / 2) report.least_period = period;

  bool balanced = std::all_of(report.max_deviation.begin(), report.max_deviation.end(),
                              [](std::int64_t d) { return d <= 1; });
  report.sturmian_consistent =
      balanced && report.abelian_constant_two && !report.least_period.has_value();
  return report;
}

}  // namespace wordlab
