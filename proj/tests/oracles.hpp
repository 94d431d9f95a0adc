// Independent reference implementations used to freeze expected values.
// Everything here recomputes from scratch and shares no code path with the
// library internals it checks.
#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "wordlab/words.hpp"

namespace oracles {

using wordlab::Alphabet;
using wordlab::FiniteWord;

// Distinct length-n substrings by direct enumeration.
inline std::int64_t subword_count(const FiniteWord& w, std::size_t n) {
  std::set<std::string> seen;
  std::string s = w.symbols();
  for (std::size_t i = 0; i + n <= s.size(); ++i) seen.insert(s.substr(i, n));
  return static_cast<std::int64_t>(seen.size());
}

// Distinct count vectors, recounting every window from scratch.
inline std::int64_t abelian_count(const FiniteWord& w, std::size_t n) {
  std::set<std::vector<std::int64_t>> seen;
  for (std::size_t i = 0; i + n <= w.length(); ++i) {
    std::vector<std::int64_t> counts(static_cast<std::size_t>(w.alphabet().size()), 0);
    for (std::size_t j = i; j < i + n; ++j) ++counts[w[j]];
    seen.insert(counts);
  }
  return static_cast<std::int64_t>(seen.size());
}

// Max minus min count of one letter over all length-n windows, recounted.
inline std::int64_t deviation(const FiniteWord& w, std::uint32_t letter, std::size_t n) {
  std::int64_t lo = -1;
  std::int64_t hi = -1;
  for (std::size_t i = 0; i + n <= w.length(); ++i) {
    std::int64_t c = 0;
    for (std::size_t j = i; j < i + n; ++j) {
      if (w[j] == letter) ++c;
    }
    if (lo < 0 || c < lo) lo = c;
    if (c > hi) hi = c;
  }
  return hi - lo;
}

inline FiniteWord random_word(std::mt19937_64& rng, int alphabet_size, std::size_t length) {
  static const std::string symbols = "1234567890";
  Alphabet alphabet(std::string_view(symbols).substr(0, static_cast<std::size_t>(alphabet_size)));
  std::vector<std::uint32_t> data(length);
  for (auto& x : data) x = static_cast<std::uint32_t>(rng() % alphabet_size);
  return FiniteWord(alphabet, std::move(data));
}

// True iff every window length n <= len(w) realizes at most `bound` distinct
// count vectors.
inline bool rho_bounded(const FiniteWord& w, std::int64_t bound) {
  for (std::size_t n = 1; n <= w.length(); ++n) {
    if (abelian_count(w, n) > bound) return false;
  }
  return true;
}

// Survivor counts per length for the exhaustive ternary enumeration.
inline std::vector<std::uint64_t> brute_force_survivors(std::size_t max_length,
                                                        std::int64_t bound,
                                                        std::vector<std::string>* at_top = nullptr,
                                                        std::size_t top_limit = 0) {
  std::vector<std::uint64_t> counts(max_length + 1, 0);
  Alphabet ternary("123");
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<std::uint32_t> data(len, 0);
    while (true) {
      FiniteWord w(ternary, data);
      if (rho_bounded(w, bound)) {
        ++counts[len];
        if (at_top && len == max_length && at_top->size() < top_limit) {
          at_top->push_back(w.symbols());
        }
      }
      std::size_t i = len;
      while (i > 0 && data[i - 1] == 2) data[--i] = 0;
      if (i == 0) break;
      ++data[i - 1];
    }
  }
  return counts;
}

}  // namespace oracles
