#include "wordlab/complexity.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>
#include <unordered_set>

namespace wordlab {

SuffixAutomaton::SuffixAutomaton(const FiniteWord& word) {
  states_.reserve(2 * word.length() + 2);
  states_.push_back(State{});
  int last = 0;
  for (std::uint32_t c : word.data()) {
    int cur = static_cast<int>(states_.size());
    states_.push_back(State{});
    states_[static_cast<std::size_t>(cur)].len =
        states_[static_cast<std::size_t>(last)].len + 1;
    int p = last;
    while (p >= 0 && !states_[static_cast<std::size_t>(p)].next.count(c)) {
      states_[static_cast<std::size_t>(p)].next[c] = cur;
      p = states_[static_cast<std::size_t>(p)].link;
    }
    if (p < 0) {
      states_[static_cast<std::size_t>(cur)].link = 0;
    } else {
      int q = states_[static_cast<std::size_t>(p)].next[c];
      if (states_[static_cast<std::size_t>(p)].len + 1 ==
          states_[static_cast<std::size_t>(q)].len) {
        states_[static_cast<std::size_t>(cur)].link = q;
      } else {
        int clone = static_cast<int>(states_.size());
        states_.push_back(states_[static_cast<std::size_t>(q)]);
        states_[static_cast<std::size_t>(clone)].len =
            states_[static_cast<std::size_t>(p)].len + 1;
        while (p >= 0 && states_[static_cast<std::size_t>(p)].next[c] == q) {
          states_[static_cast<std::size_t>(p)].next[c] = clone;
          p = states_[static_cast<std::size_t>(p)].link;
        }
        states_[static_cast<std::size_t>(q)].link = clone;
        states_[static_cast<std::size_t>(cur)].link = clone;
      }
    }
    last = cur;
  }
}

std::vector<std::int64_t> SuffixAutomaton::factor_counts(std::size_t n_max) const {
  // Every state covers the length range (len(link), len]; a difference array
  // turns that into per-length distinct-factor counts.
  std::vector<std::int64_t> diff(n_max + 2, 0);
  for (std::size_t s = 1; s < states_.size(); ++s) {
    auto lo = static_cast<std::size_t>(states_[static_cast<std::size_t>(states_[s].link)].len) + 1;
    auto hi = static_cast<std::size_t>(states_[s].len);
    if (lo > n_max) continue;
    hi = std::min(hi, n_max);
    diff[lo] += 1;
    diff[hi + 1] -= 1;
  }
  std::vector<std::int64_t> counts(n_max + 1, 0);
  std::int64_t running = 0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    running += diff[n];
    counts[n] = running;
  }
  return counts;
}

namespace {

void check_window_length(const FiniteWord& word, std::size_t n) {
  if (n < 1 || n > word.length()) {
    fail(errc::length_out_of_range, "window length " + std::to_string(n) +
                                        " on a word of length " +
                                        std::to_string(word.length()));
  }
}

void encode_count(std::string& key, int letter, std::int64_t count) {
  auto v = static_cast<std::uint32_t>(count);
  std::memcpy(key.data() + 4 * letter, &v, 4);
}

// Visits the count vector of every length-n window once; `emit` receives the
// exact byte key of the current window.
template <typename Emit>
void scan_windows(const FiniteWord& word, std::size_t n, Emit&& emit) {
  int d = word.alphabet().size();
  std::vector<std::int64_t> counts(static_cast<std::size_t>(d), 0);
  std::string key(static_cast<std::size_t>(4 * d), '\0');
  const auto& data = word.data();
  for (std::size_t i = 0; i < n; ++i) ++counts[data[i]];
  for (int a = 0; a < d; ++a) encode_count(key, a, counts[static_cast<std::size_t>(a)]);
  emit(key);
  for (std::size_t i = n; i < data.size(); ++i) {
    std::uint32_t out = data[i - n];
    std::uint32_t in = data[i];
    if (out != in) {
      encode_count(key, static_cast<int>(out), --counts[out]);
      encode_count(key, static_cast<int>(in), ++counts[in]);
    }
    emit(key);
  }
}

ParikhVector decode_key(const std::string& key, int d) {
  ParikhVector v(d);
  for (int a = 0; a < d; ++a) {
    std::uint32_t raw;
    std::memcpy(&raw, key.data() + 4 * a, 4);
    v[a] = static_cast<std::int64_t>(raw);
  }
  return v;
}

}  // namespace

std::int64_t subword_complexity(const FiniteWord& word, std::size_t n) {
  check_window_length(word, n);
  SuffixAutomaton automaton(word);
  return automaton.factor_counts(n)[n];
}

std::int64_t abelian_complexity(const FiniteWord& word, std::size_t n) {
  check_window_length(word, n);
  std::unordered_set<std::string> seen;
  scan_windows(word, n, [&](const std::string& key) { seen.insert(key); });
  return static_cast<std::int64_t>(seen.size());
}

std::vector<ParikhVector> parikh_classes(const FiniteWord& word, std::size_t n) {
  check_window_length(word, n);
  std::unordered_set<std::string> seen;
  scan_windows(word, n, [&](const std::string& key) { seen.insert(key); });
  std::vector<ParikhVector> classes;
  classes.reserve(seen.size());
  for (const auto& key : seen) classes.push_back(decode_key(key, word.alphabet().size()));
  std::sort(classes.begin(), classes.end(), lex_less);
  return classes;
}

std::vector<std::int64_t> window_deviation(const FiniteWord& word, std::size_t n) {
  check_window_length(word, n);
  int d = word.alphabet().size();
  std::vector<std::int64_t> counts(static_cast<std::size_t>(d), 0);
  std::vector<std::int64_t> min_count(static_cast<std::size_t>(d));
  std::vector<std::int64_t> max_count(static_cast<std::size_t>(d));
  const auto& data = word.data();
  for (std::size_t i = 0; i < n; ++i) ++counts[data[i]];
  min_count = counts;
  max_count = counts;
  for (std::size_t i = n; i < data.size(); ++i) {
    --counts[data[i - n]];
    ++counts[data[i]];
    for (int a : {static_cast<int>(data[i - n]), static_cast<int>(data[i])}) {
      auto ua = static_cast<std::size_t>(a);
      min_count[ua] = std::min(min_count[ua], counts[ua]);
      max_count[ua] = std::max(max_count[ua], counts[ua]);
    }
  }
  std::vector<std::int64_t> dev(static_cast<std::size_t>(d));
  for (int a = 0; a < d; ++a) {
    auto ua = static_cast<std::size_t>(a);
    dev[ua] = max_count[ua] - min_count[ua];
  }
  return dev;
}

BalanceProfile balance_profile(const FiniteWord& word, std::size_t n_max) {
  if (n_max > word.length()) {
    fail(errc::length_out_of_range, "balance range exceeds the word length");
  }
  int d = word.alphabet().size();
  BalanceProfile profile;
  profile.n_max = n_max;
  profile.deviation.assign(static_cast<std::size_t>(d),
                           std::vector<std::int64_t>(n_max, 0));
  profile.max_deviation.assign(static_cast<std::size_t>(d), 0);

  const auto& data = word.data();
  std::vector<std::int32_t> prefix(data.size() + 1);
  for (int a = 0; a < d; ++a) {
    auto ua = static_cast<std::size_t>(a);
    prefix[0] = 0;
    for (std::size_t i = 0; i < data.size(); ++i) {
      prefix[i + 1] = prefix[i] + (data[i] == static_cast<std::uint32_t>(a) ? 1 : 0);
    }
    for (std::size_t n = 1; n <= n_max; ++n) {
      std::int32_t lo = prefix[n];
      std::int32_t hi = prefix[n];
      for (std::size_t p = 1; p + n <= data.size(); ++p) {
        std::int32_t c = prefix[p + n] - prefix[p];
        lo = std::min(lo, c);
        hi = std::max(hi, c);
      }
      profile.deviation[ua][n - 1] = hi - lo;
      profile.max_deviation[ua] = std::max<std::int64_t>(profile.max_deviation[ua], hi - lo);
    }
  }
  return profile;
}

ComplexityProfile compute_profile(const FiniteWord& word, std::size_t n_max,
                                  std::string word_id) {
  if (n_max < 1 || n_max > word.length()) {
    fail(errc::length_out_of_range, "profile range exceeds the word length");
  }
  ComplexityProfile profile;
  profile.word_id = std::move(word_id);
  profile.n_max = n_max;
  profile.letters = word.alphabet().symbols();

  SuffixAutomaton automaton(word);
  std::vector<std::int64_t> subword = automaton.factor_counts(n_max);
  BalanceProfile balance = balance_profile(word, n_max);

  profile.rows.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    ComplexityRow row;
    row.n = static_cast<std::int64_t>(n);
    row.subword = subword[n];
    row.abelian = abelian_complexity(word, n);
    row.deviation.reserve(balance.deviation.size());
    for (const auto& letter_dev : balance.deviation) row.deviation.push_back(letter_dev[n - 1]);
    profile.rows.push_back(std::move(row));
  }
  return profile;
}

std::string profile_csv(const ComplexityProfile& profile) {
  std::ostringstream out;
  out << "n,subword,abelian";
  for (char c : profile.letters) out << ",dev_" << c;
  out << "\n";
  for (const auto& row : profile.rows) {
    out << row.n << "," << row.subword << "," << row.abelian;
    for (std::int64_t dev : row.deviation) out << "," << dev;
    out << "\n";
  }
  return out.str();
}

std::vector<BalanceAbelianViolation> check_balance_abelian_inequality(
    const ComplexityProfile& profile) {
  std::vector<BalanceAbelianViolation> violations;
  std::int64_t range_dev = 0;
  for (const auto& row : profile.rows) {
    for (std::int64_t dev : row.deviation) range_dev = std::max(range_dev, dev);
  }
  int d = static_cast<int>(profile.letters.size());
  // (range_dev + 1)^(d-1), saturating well above any achievable class count.
  std::int64_t upper = 1;
  for (int i = 0; i + 1 < d; ++i) {
    if (upper > (std::int64_t{1} << 40)) break;
    upper *= range_dev + 1;
  }
  for (const auto& row : profile.rows) {
    std::int64_t dev = 0;
    for (std::int64_t x : row.deviation) dev = std::max(dev, x);
    if (dev + 1 > row.abelian) {
      violations.push_back({row.n, dev, row.abelian, false,
                            "deviation + 1 exceeds the abelian class count"});
    }
    if (row.abelian > upper) {
      violations.push_back({row.n, range_dev, row.abelian, true,
                            "abelian class count exceeds (C+1)^(d-1) for the tested range"});
    }
  }
  return violations;
}

const char* to_string(ParikhShapeKind kind) {
  switch (kind) {
    case ParikhShapeKind::Singleton:
      return "Singleton";
    case ParikhShapeKind::Pair:
      return "Pair";
    case ParikhShapeKind::Chain:
      return "Chain";
    case ParikhShapeKind::LShape:
      return "LShape";
    case ParikhShapeKind::Other:
      return "Other";
  }
  return "Other";
}

namespace {

bool contains(const std::vector<ParikhVector>& set, const ParikhVector& v) {
  for (const auto& u : set) {
    if (u == v) return true;
  }
  return false;
}

ParikhVector shifted(const ParikhVector& v, int i, std::int64_t di, int j, std::int64_t dj,
                     int k = -1, std::int64_t dk = 0) {
  ParikhVector out = v;
  out[i] += di;
  out[j] += dj;
  if (k >= 0) out[k] += dk;
  return out;
}

}  // namespace

ParikhSetShape classify_parikh_set(const std::vector<ParikhVector>& set) {
  if (set.empty()) fail(errc::invalid_parameter, "empty Parikh set");
  Eigen::Index d = set.front().size();
  std::int64_t total = set.front().sum();
  for (const auto& v : set) {
    if (v.size() != d) fail(errc::mixed_lengths, "vectors over different alphabets");
    if (v.sum() != total) fail(errc::mixed_lengths, "vectors with different coordinate sums");
  }
  std::vector<ParikhVector> sorted = set;
  std::sort(sorted.begin(), sorted.end(), lex_less);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<int> identity(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) identity[static_cast<std::size_t>(i)] = i;

  if (sorted.size() == 1) {
    return {ParikhShapeKind::Singleton, sorted.front(), identity};
  }
  if (sorted.size() == 2) {
    for (const auto& base : sorted) {
      for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
          if (i == j) continue;
          if (shifted(base, i, 1, j, -1) == (base == sorted[0] ? sorted[1] : sorted[0])) {
            std::vector<int> perm{i, j};
            for (int r = 0; r < d; ++r) {
              if (r != i && r != j) perm.push_back(r);
            }
            return {ParikhShapeKind::Pair, base, perm};
          }
        }
      }
    }
    return {ParikhShapeKind::Other, sorted.front(), identity};
  }
  if (sorted.size() == 3 && d == 3) {
    std::vector<int> perm{0, 1, 2};
    std::sort(perm.begin(), perm.end());
    // Chain before LShape, bases and permutations in lexicographic order.
    for (int shape = 0; shape < 2; ++shape) {
      std::vector<int> p = perm;
      do {
        for (const auto& base : sorted) {
          ParikhVector second = shifted(base, p[0], 1, p[1], -1);
          ParikhVector third = shape == 0 ? shifted(base, p[0], 2, p[1], -2)
                                          : shifted(base, p[0], 2, p[1], -1, p[2], -1);
          if (contains(sorted, second) && contains(sorted, third)) {
            return {shape == 0 ? ParikhShapeKind::Chain : ParikhShapeKind::LShape, base, p};
          }
        }
      } while (std::next_permutation(p.begin(), p.end()));
    }
  }
  return {ParikhShapeKind::Other, sorted.front(), identity};
}

std::optional<std::int64_t> tijdeman_flag(const ComplexityProfile& profile, int alphabet_size) {
  for (const auto& row : profile.rows) {
    if (row.subword <= static_cast<std::int64_t>(alphabet_size - 1) * row.n) return row.n;
  }
  return std::nullopt;
}

}  // namespace wordlab
