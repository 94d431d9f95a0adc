#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "wordlab/errors.hpp"
#include "wordlab/exact.hpp"

namespace wordlab {

/// Occurrence-count vector indexed by the alphabet order.
using ParikhVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

bool lex_less(const ParikhVector& a, const ParikhVector& b);

/// Ordered set of distinct single-character symbols. The declared order is
/// fixed at construction and defines Parikh-vector indexing.
class Alphabet {
 public:
  explicit Alphabet(std::string_view symbols);

  int size() const { return static_cast<int>(symbols_.size()); }
  char symbol(int index) const;
  int index(char symbol) const;  // throws LetterNotInAlphabet
  int find(char symbol) const;   // -1 when absent
  const std::string& symbols() const { return symbols_; }

  friend bool operator==(const Alphabet& a, const Alphabet& b) = default;

 private:
  std::string symbols_;
};

/// Canonical generated names a..z, A..Z, 0..9 for induced alphabets.
Alphabet synthetic_alphabet(int size);

class FiniteWord {
 public:
  FiniteWord(Alphabet alphabet, std::vector<std::uint32_t> data);
  static FiniteWord from_symbols(const Alphabet& alphabet, std::string_view text);

  std::size_t length() const { return data_.size(); }
  std::uint32_t operator[](std::size_t i) const { return data_[i]; }
  const std::vector<std::uint32_t>& data() const { return data_; }
  const Alphabet& alphabet() const { return alphabet_; }

  std::string symbols() const;

  /// Inclusive slice w[start..end].
  FiniteWord factor(std::size_t start, std::size_t end) const;

  /// Same index sequence over a different alphabet of equal size.
  FiniteWord with_alphabet(const Alphabet& alphabet) const;

  friend bool operator==(const FiniteWord& a, const FiniteWord& b) = default;

 private:
  Alphabet alphabet_;
  std::vector<std::uint32_t> data_;
};

ParikhVector parikh(const FiniteWord& word);

enum class Partition { A, B };

struct PeriodicSpec {
  std::string pattern;
};

struct SubstitutionSpec {
  std::vector<std::pair<char, std::string>> rules;  // declared order = alphabet order
  char seed = '\0';
};

struct RotationBinarySpec {
  ExactReal angle;
  ExactReal start;
  Partition partition = Partition::A;
};

struct RotationTernarySpec {
  ExactReal angle;
  ExactReal start;
  ExactReal cut1;
  ExactReal cut2;
};

struct WordGeneratorSpec {
  std::variant<PeriodicSpec, SubstitutionSpec, RotationBinarySpec, RotationTernarySpec> variant;
  std::size_t prefix_length = 0;
};

/// Deterministic prefix of the specified infinite word.
FiniteWord generate(const WordGeneratorSpec& spec);

/// Column j counts the letters of the image of letter j.
IntMatrix incidence_matrix(const SubstitutionSpec& spec);

/// Word file format: optional "#alphabet:<symbols>" header line, then one
/// line of symbols with no separators.
FiniteWord parse_word_text(std::string_view text);
std::string word_file_text(const FiniteWord& word);
FiniteWord read_word_file(const std::string& path);
void write_word_file(const FiniteWord& word, const std::string& path);

}  // namespace wordlab
