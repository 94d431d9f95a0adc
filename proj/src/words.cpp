#include "wordlab/words.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace wordlab {

bool lex_less(const ParikhVector& a, const ParikhVector& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(),
                                      b.data() + b.size());
}

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
  if (symbols_.empty()) fail(errc::invalid_parameter, "alphabet must not be empty");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    for (std::size_t j = i + 1; j < symbols_.size(); ++j) {
      if (symbols_[i] == symbols_[j]) {
        fail(errc::invalid_parameter,
             std::string("duplicate alphabet symbol '") + symbols_[i] + "'");
      }
    }
  }
}

char Alphabet::symbol(int index) const {
  if (index < 0 || index >= size()) fail(errc::index_out_of_range, "alphabet index");
  return symbols_[static_cast<std::size_t>(index)];
}

int Alphabet::index(char symbol) const {
  int i = find(symbol);
  if (i < 0) {
    fail(errc::letter_not_in_alphabet, std::string("'") + symbol + "' not in alphabet '" +
                                           symbols_ + "'");
  }
  return i;
}

int Alphabet::find(char symbol) const {
  auto pos = symbols_.find(symbol);
  return pos == std::string::npos ? -1 : static_cast<int>(pos);
}

Alphabet synthetic_alphabet(int size) {
  static const std::string pool =
      "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
  if (size < 1 || size > static_cast<int>(pool.size())) {
    fail(errc::invalid_parameter,
         "cannot name an induced alphabet of size " + std::to_string(size));
  }
  return Alphabet(std::string_view(pool).substr(0, static_cast<std::size_t>(size)));
}

FiniteWord::FiniteWord(Alphabet alphabet, std::vector<std::uint32_t> data)
    : alphabet_(std::move(alphabet)), data_(std::move(data)) {
  auto d = static_cast<std::uint32_t>(alphabet_.size());
  for (std::uint32_t x : data_) {
    if (x >= d) fail(errc::index_out_of_range, "symbol index exceeds alphabet size");
  }
}

FiniteWord FiniteWord::from_symbols(const Alphabet& alphabet, std::string_view text) {
  std::vector<std::uint32_t> data;
  data.reserve(text.size());
  for (char c : text) data.push_back(static_cast<std::uint32_t>(alphabet.index(c)));
  return FiniteWord(alphabet, std::move(data));
}

std::string FiniteWord::symbols() const {
  std::string out;
  out.reserve(data_.size());
  for (std::uint32_t x : data_) out.push_back(alphabet_.symbol(static_cast<int>(x)));
  return out;
}

FiniteWord FiniteWord::factor(std::size_t start, std::size_t end) const {
  if (start > end || end >= data_.size()) {
    fail(errc::index_out_of_range, "factor [" + std::to_string(start) + ", " +
                                       std::to_string(end) + "] of a length-" +
                                       std::to_string(data_.size()) + " word");
  }
  std::vector<std::uint32_t> slice(data_.begin() + static_cast<std::ptrdiff_t>(start),
                                   data_.begin() + static_cast<std::ptrdiff_t>(end) + 1);
  return FiniteWord(alphabet_, std::move(slice));
}

FiniteWord FiniteWord::with_alphabet(const Alphabet& alphabet) const {
  if (alphabet.size() != alphabet_.size()) {
    fail(errc::dimension_mismatch, "replacement alphabet has a different size");
  }
  return FiniteWord(alphabet, data_);
}

ParikhVector parikh(const FiniteWord& word) {
  ParikhVector counts = ParikhVector::Zero(word.alphabet().size());
  for (std::uint32_t x : word.data()) ++counts[static_cast<Eigen::Index>(x)];
  return counts;
}

namespace {

Alphabet alphabet_from_first_occurrence(std::string_view text) {
  std::string symbols;
  for (char c : text) {
    if (symbols.find(c) == std::string::npos) symbols.push_back(c);
  }
  return Alphabet(symbols);
}

FiniteWord generate_periodic(const PeriodicSpec& spec, std::size_t n) {
  if (spec.pattern.empty()) fail(errc::invalid_parameter, "empty periodic pattern");
  Alphabet alphabet = alphabet_from_first_occurrence(spec.pattern);
  std::vector<std::uint32_t> data(n);
  for (std::size_t i = 0; i < n; ++i) {
    data[i] = static_cast<std::uint32_t>(alphabet.index(spec.pattern[i % spec.pattern.size()]));
  }
  return FiniteWord(alphabet, std::move(data));
}

FiniteWord generate_substitution(const SubstitutionSpec& spec, std::size_t n) {
  if (spec.rules.empty()) fail(errc::invalid_parameter, "substitution has no rules");
  std::string symbols;
  for (const auto& [letter, image] : spec.rules) symbols.push_back(letter);
  Alphabet alphabet(symbols);

  std::vector<std::vector<std::uint32_t>> images(spec.rules.size());
  for (std::size_t j = 0; j < spec.rules.size(); ++j) {
    const std::string& image = spec.rules[j].second;
    if (image.empty()) {
      fail(errc::invalid_parameter, std::string("empty image for letter '") +
                                        spec.rules[j].first + "'");
    }
    for (char c : image) images[j].push_back(static_cast<std::uint32_t>(alphabet.index(c)));
  }

  int seed = alphabet.find(spec.seed);
  if (seed < 0) fail(errc::letter_not_in_alphabet, "seed letter has no rule");
  const auto& seed_image = images[static_cast<std::size_t>(seed)];
  if (seed_image.size() < 2 || seed_image[0] != static_cast<std::uint32_t>(seed)) {
    fail(errc::non_prolongable_morphism,
         "image of the seed letter must start with the seed and have length >= 2");
  }

  // Expand the fixed point in place: the image of the prefix extends the prefix.
  std::vector<std::uint32_t> data(seed_image);
  std::size_t cursor = 1;
  while (data.size() < n) {
    const auto& image = images[data[cursor]];
    data.insert(data.end(), image.begin(), image.end());
    ++cursor;
  }
  data.resize(n);
  return FiniteWord(alphabet, std::move(data));
}

void check_unit_interval(const ExactReal& v, const char* what) {
  if (v.sign() < 0 || (v - ExactReal(1)).sign() >= 0) {
    fail(errc::invalid_parameter, std::string(what) + " must lie in [0, 1)");
  }
}

FiniteWord generate_rotation_binary(const RotationBinarySpec& spec, std::size_t n) {
  check_unit_interval(spec.angle, "rotation angle");
  check_unit_interval(spec.start, "rotation start");
  Alphabet alphabet("01");
  ExactReal threshold = ExactReal(1) - spec.angle;  // partition point 1 - alpha
  ExactReal point = spec.start;
  std::vector<std::uint32_t> data(n);
  for (std::size_t i = 0; i < n; ++i) {
    bool high;
    if (spec.partition == Partition::A) {
      // [0, 1-a) -> 0,  [1-a, 1) -> 1
      high = (point - threshold).sign() >= 0;
    } else {
      // (0, 1-a] -> 0,  (1-a, 1] -> 1, with the wrap point 0 == 1 read as 1
      high = point.is_zero() || (point - threshold).sign() > 0;
    }
    data[i] = high ? 1u : 0u;
    point = (point + spec.angle).frac();
  }
  return FiniteWord(alphabet, std::move(data));
}

FiniteWord generate_rotation_ternary(const RotationTernarySpec& spec, std::size_t n) {
  check_unit_interval(spec.angle, "rotation angle");
  check_unit_interval(spec.start, "rotation start");
  if (spec.cut1.sign() <= 0 || (spec.cut2 - spec.cut1).sign() <= 0 ||
      (ExactReal(1) - spec.cut2).sign() <= 0) {
    fail(errc::invalid_parameter, "cuts must satisfy 0 < cut1 < cut2 < 1");
  }
  Alphabet alphabet("123");
  ExactReal point = spec.start;
  std::vector<std::uint32_t> data(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t letter;
    if ((point - spec.cut1).sign() < 0) {
      letter = 0;  // [0, cut1)
    } else if ((point - spec.cut2).sign() < 0) {
      letter = 1;  // [cut1, cut2)
    } else {
      letter = 2;  // [cut2, 1)
    }
    data[i] = letter;
    point = (point + spec.angle).frac();
  }
  return FiniteWord(alphabet, std::move(data));
}

}  // namespace

FiniteWord generate(const WordGeneratorSpec& spec) {
  if (spec.prefix_length == 0) fail(errc::invalid_parameter, "prefix length must be positive");
  std::size_t n = spec.prefix_length;
  if (const auto* p = std::get_if<PeriodicSpec>(&spec.variant)) return generate_periodic(*p, n);
  if (const auto* s = std::get_if<SubstitutionSpec>(&spec.variant)) {
    return generate_substitution(*s, n);
  }
  if (const auto* rb = std::get_if<RotationBinarySpec>(&spec.variant)) {
    return generate_rotation_binary(*rb, n);
  }
  return generate_rotation_ternary(std::get<RotationTernarySpec>(spec.variant), n);
}

IntMatrix incidence_matrix(const SubstitutionSpec& spec) {
  std::string symbols;
  for (const auto& [letter, image] : spec.rules) symbols.push_back(letter);
  Alphabet alphabet(symbols);
  auto d = static_cast<Eigen::Index>(spec.rules.size());
  IntMatrix m = IntMatrix::Zero(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    for (char c : spec.rules[static_cast<std::size_t>(j)].second) {
      ++m(alphabet.index(c), j);
    }
  }
  return m;
}

FiniteWord parse_word_text(std::string_view text) {
  std::string header;
  std::string_view body = text;
  constexpr std::string_view kHeader = "#alphabet:";
  if (body.substr(0, kHeader.size()) == kHeader) {
    std::size_t eol = body.find('\n');
    if (eol == std::string_view::npos) fail(errc::io_error, "word file has no content line");
    header = std::string(body.substr(kHeader.size(), eol - kHeader.size()));
    body = body.substr(eol + 1);
  }
  std::size_t end = body.find_first_of("\r\n");
  std::string_view line = end == std::string_view::npos ? body : body.substr(0, end);
  if (line.empty()) fail(errc::io_error, "word file has an empty content line");
  Alphabet alphabet = header.empty() ? alphabet_from_first_occurrence(line) : Alphabet(header);
  return FiniteWord::from_symbols(alphabet, line);
}

std::string word_file_text(const FiniteWord& word) {
  return "#alphabet:" + word.alphabet().symbols() + "\n" + word.symbols() + "\n";
}

FiniteWord read_word_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::io_error, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_word_text(buffer.str());
}

void write_word_file(const FiniteWord& word, const std::string& path) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(errc::io_error, "cannot write '" + tmp + "'");
    out << word_file_text(word);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    fail(errc::io_error, "cannot replace '" + path + "'");
  }
}

}  // namespace wordlab
