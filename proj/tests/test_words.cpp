#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wordlab/words.hpp"

using namespace wordlab;

namespace {

WordGeneratorSpec fibonacci_spec(std::size_t n) {
  return {SubstitutionSpec{{{'0', "01"}, {'1', "0"}}, '0'}, n};
}

WordGeneratorSpec tribonacci_spec(std::size_t n) {
  return {SubstitutionSpec{{{'1', "12"}, {'2', "13"}, {'3', "1"}}, '1'}, n};
}

}  // namespace

TEST_CASE("alphabet invariants") {
  Alphabet ab("123");
  CHECK(ab.size() == 3);
  CHECK(ab.index('2') == 1);
  CHECK(ab.find('9') == -1);
  CHECK_THROWS_AS(ab.index('9'), Error);
  CHECK_THROWS_AS(Alphabet("121"), Error);
  CHECK_THROWS_AS(Alphabet(""), Error);
}

TEST_CASE("substitution generator fixed points") {
  CHECK(generate(fibonacci_spec(34)).symbols() ==
        "0100101001001010010100100101001001");
  CHECK(generate(tribonacci_spec(13)).symbols() == "1213121121312");
  CHECK(generate(fibonacci_spec(34)) == generate(fibonacci_spec(34)));

  SUBCASE("non-prolongable morphisms are rejected") {
    WordGeneratorSpec bad{SubstitutionSpec{{{'0', "10"}, {'1', "0"}}, '0'}, 10};
    CHECK_THROWS_AS(generate(bad), Error);
    WordGeneratorSpec short_image{SubstitutionSpec{{{'0', "0"}, {'1', "0"}}, '0'}, 10};
    CHECK_THROWS_AS(generate(short_image), Error);
  }

  SUBCASE("telescoping: the image of a prefix extends the prefix") {
    FiniteWord prefix = generate(fibonacci_spec(200));
    FiniteWord longer = generate(fibonacci_spec(500));
    std::string image;
    for (std::size_t i = 0; i < prefix.length(); ++i) {
      image += prefix[i] == 0 ? "01" : "0";
    }
    CHECK(image.substr(0, 320) == longer.symbols().substr(0, 320));
  }
}

TEST_CASE("periodic generator") {
  CHECK(generate({PeriodicSpec{"12"}, 6}).symbols() == "121212");
  CHECK(generate({PeriodicSpec{"112"}, 7}).symbols() == "1121121");
  CHECK_THROWS_AS(generate({PeriodicSpec{""}, 5}), Error);
  CHECK_THROWS_AS(generate({PeriodicSpec{"12"}, 0}), Error);
}

TEST_CASE("rotation coding, partition A") {
  WordGeneratorSpec quarter{RotationBinarySpec{parse_exact("1/4"), ExactReal(0)}, 8};
  CHECK(generate(quarter).symbols() == "00010001");

  SUBCASE("the golden rotation reproduces the substitution fixed point") {
    ExactReal angle = parse_exact("2-phi");
    WordGeneratorSpec rot{RotationBinarySpec{angle, angle}, 1000};
    CHECK(generate(rot) == generate(fibonacci_spec(1000)));
  }

  SUBCASE("rational rotations are periodic with period dividing q") {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 30; ++k) {
      long long q = 2 + static_cast<long long>(rng() % 20);
      long long p = 1 + static_cast<long long>(rng() % (q - 1));
      WordGeneratorSpec spec{
          RotationBinarySpec{ExactReal(Rational(p, q)), ExactReal(Rational(rng() % q, q))},
          static_cast<std::size_t>(4 * q)};
      FiniteWord w = generate(spec);
      for (std::size_t i = 0; i + q < w.length(); ++i) {
        REQUIRE(w[i] == w[i + static_cast<std::size_t>(q)]);
      }
    }
  }
}

TEST_CASE("rotation coding, partition B") {
  // Orbit 0, 1/4, 1/2, 3/4; the wrap point 0 == 1 lies in (1-a, 1].
  WordGeneratorSpec spec{RotationBinarySpec{parse_exact("1/4"), ExactReal(0), Partition::B}, 8};
  CHECK(generate(spec).symbols() == "10001000");
}

TEST_CASE("ternary rotation coding") {
  WordGeneratorSpec spec{RotationTernarySpec{parse_exact("1/4"), ExactReal(0),
                                             parse_exact("1/4"), parse_exact("3/4")},
                         8};
  // Orbit 0, 1/4, 1/2, 3/4 against [0,1/4), [1/4,3/4), [3/4,1).
  CHECK(generate(spec).symbols() == "12231223");
  WordGeneratorSpec bad{RotationTernarySpec{parse_exact("1/4"), ExactReal(0),
                                            parse_exact("3/4"), parse_exact("1/4")},
                        8};
  CHECK_THROWS_AS(generate(bad), Error);
}

TEST_CASE("parikh vectors") {
  Alphabet latin("abcdefghijklmnopqrstuvwxyz");
  CHECK(parikh(FiniteWord::from_symbols(latin, "astronomer")) ==
        parikh(FiniteWord::from_symbols(latin, "moonstarer")));
  ParikhVector v = parikh(FiniteWord::from_symbols(Alphabet("123"), "121"));
  CHECK(v[0] == 2);
  CHECK(v[1] == 1);
  CHECK(v[2] == 0);
  CHECK(parikh(FiniteWord(Alphabet("123"), {})).sum() == 0);

  SUBCASE("additivity over random splits") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 1000; ++k) {
      FiniteWord w = oracles::random_word(rng, 2 + static_cast<int>(rng() % 3),
                                          2 + rng() % 60);
      std::size_t cut = 1 + rng() % (w.length() - 1);
      ParikhVector left = parikh(w.factor(0, cut - 1));
      ParikhVector right = parikh(w.factor(cut, w.length() - 1));
      REQUIRE(parikh(w) == left + right);
    }
  }
}

TEST_CASE("factor slicing") {
  FiniteWord w = FiniteWord::from_symbols(Alphabet("12"), "121212");
  CHECK(w.factor(0, 1).symbols() == "12");
  CHECK(w.factor(2, 5).symbols() == "1212");
  CHECK(w.factor(0, w.length() - 1) == w);
  CHECK_THROWS_AS(w.factor(3, 2), Error);
  CHECK_THROWS_AS(w.factor(0, 6), Error);
}

TEST_CASE("word file format") {
  FiniteWord w = generate({PeriodicSpec{"12"}, 6});
  std::string text = word_file_text(w);
  CHECK(text == "#alphabet:12\n121212\n");
  CHECK(parse_word_text(text) == w);

  SUBCASE("headerless files infer the alphabet from first occurrence") {
    FiniteWord parsed = parse_word_text("2121\n");
    CHECK(parsed.alphabet().symbols() == "21");
    CHECK(parsed.symbols() == "2121");
  }
  SUBCASE("empty content is an error") {
    CHECK_THROWS_AS(parse_word_text(""), Error);
    CHECK_THROWS_AS(parse_word_text("#alphabet:12\n"), Error);
  }
  SUBCASE("disk round trip is byte exact") {
    std::string path = "roundtrip_test_word.txt";
    write_word_file(w, path);
    CHECK(read_word_file(path) == w);
    std::remove(path.c_str());
  }
}

TEST_CASE("incidence matrix") {
  IntMatrix m = incidence_matrix(SubstitutionSpec{{{'0', "01"}, {'1', "0"}}, '0'});
  CHECK(m(0, 0) == 1);
  CHECK(m(1, 0) == 1);
  CHECK(m(0, 1) == 1);
  CHECK(m(1, 1) == 0);
}
