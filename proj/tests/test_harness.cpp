#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "wordlab/harness.hpp"
#include "wordlab/report.hpp"

using namespace wordlab;

TEST_CASE("bounded-complexity search basics") {
  SUBCASE("single letters all survive") {
    SearchConfig cfg;
    cfg.max_length = 1;
    SearchStats stats = search_rho_bounded(cfg);
    CHECK(stats.survivors_by_length[1] == 3);
  }

  SUBCASE("length three with all letters present leaves the six permutations") {
    SearchConfig cfg;
    cfg.max_length = 3;
    cfg.require_all_letters = true;
    cfg.report_top = 6;
    SearchStats stats = search_rho_bounded(cfg);
    CHECK(stats.survivors_by_length[3] == 6);
    std::vector<std::string> words;
    for (const auto& s : stats.top_survivors) words.push_back(s.word);
    CHECK(words == std::vector<std::string>{"123", "132", "213", "231", "312", "321"});
  }

  SUBCASE("invalid configurations") {
    SearchConfig cfg;
    cfg.max_length = 0;
    CHECK_THROWS_AS(search_rho_bounded(cfg), Error);
  }
}

TEST_CASE("search matches the exhaustive oracle at length 8") {
  SearchConfig cfg;
  cfg.max_length = 8;
  cfg.report_top = 5;
  SearchStats stats = search_rho_bounded(cfg);

  std::vector<std::string> oracle_top;
  std::vector<std::uint64_t> oracle_counts =
      oracles::brute_force_survivors(8, 3, &oracle_top, 5);
  for (std::size_t n = 1; n <= 8; ++n) {
    REQUIRE(stats.survivors_by_length[n] == oracle_counts[n]);
  }
  std::vector<std::string> engine_top;
  for (const auto& s : stats.top_survivors) engine_top.push_back(s.word);
  CHECK(engine_top == oracle_top);
}

TEST_CASE("survivor reports carry exact frequencies and a trivial relation") {
  SearchConfig cfg;
  cfg.max_length = 6;
  cfg.report_top = 2;
  SearchStats stats = search_rho_bounded(cfg);
  REQUIRE(!stats.top_survivors.empty());
  for (const auto& s : stats.top_survivors) {
    Rational sum(0);
    for (const auto& f : s.frequencies) sum += f;
    REQUIRE(sum == 1);
    // Finite-length count ratios are rational, so a relation always exists.
    REQUIRE(s.relation.has_value());
    REQUIRE(s.relation->certificate);
  }
  CHECK(!stats.disclaimer.empty());
}

TEST_CASE("symmetry reduction cuts survivor counts by the letter factor") {
  SearchConfig full;
  full.max_length = 6;
  SearchConfig fixed = full;
  fixed.fix_first_letter = true;
  SearchStats a = search_rho_bounded(full);
  SearchStats b = search_rho_bounded(fixed);
  for (std::size_t n = 1; n <= 6; ++n) {
    REQUIRE(a.survivors_by_length[n] == 3 * b.survivors_by_length[n]);
  }
}

TEST_CASE("node budgets flag partial results") {
  SearchConfig cfg;
  cfg.max_length = 10;
  cfg.node_budget = 16;
  SearchStats stats = search_rho_bounded(cfg);
  CHECK(stats.budget_exhausted);
  CHECK(stats.nodes_visited <= 16);
}

TEST_CASE("verification suites over the catalog") {
  SuiteBounds bounds;
  bounds.ell_max = 20;
  bounds.n_max = 60;
  bounds.block_checks = 40;
  std::vector<CorpusEntry> corpus = default_catalog(3000);

  SUBCASE("every named suite passes on the clean catalog") {
    for (const char* suite : {"lemma10", "lemma16", "lemma19", "lemma22", "eq4"}) {
      SuiteReport report = run_lemma_suite(suite, corpus, bounds);
      for (const auto& check : report.checks) {
        INFO(check.check, " ", check.word, " ", check.detail);
        REQUIRE(check.status != "fail");
      }
      REQUIRE(report.all_pass);
    }
  }

  SUBCASE("the aggregate suite carries skipped entries where checks do not apply") {
    SuiteReport report = run_lemma_suite("all", corpus, bounds);
    CHECK(report.all_pass);
    bool fibonacci_skip = false;
    for (const auto& check : report.checks) {
      if (check.word == "fibonacci" && check.check == "lemma10/rho-at-least-3") {
        fibonacci_skip = check.status == "skipped";
      }
    }
    CHECK(fibonacci_skip);
  }

  SUBCASE("fault injection: a flipped symbol is flagged") {
    FiniteWord clean = generate({PeriodicSpec{"12"}, 3000});
    std::vector<std::uint32_t> data = clean.data();
    data[1500] = 1 - data[1500];
    CorpusEntry corrupted{"periodic12", {PeriodicSpec{"12"}, 3000},
                          FiniteWord(clean.alphabet(), std::move(data))};
    SuiteReport report = run_lemma_suite("eq4", {corrupted}, bounds);
    CHECK(!report.all_pass);
    bool flagged = false;
    for (const auto& check : report.checks) {
      if (check.check == "eq4/periodic-profile" && check.status == "fail") flagged = true;
    }
    CHECK(flagged);
  }

  SUBCASE("unknown suites are rejected") {
    CHECK_THROWS_AS(run_lemma_suite("bogus", corpus, bounds), Error);
    CHECK(known_suite("lemma16"));
    CHECK(!known_suite("bogus"));
  }
}

TEST_CASE("report serialization shapes") {
  SearchConfig cfg;
  cfg.max_length = 4;
  Json search_json = to_json(search_rho_bounded(cfg));
  CHECK(search_json.contains("counts_by_length"));
  CHECK(search_json.contains("disclaimer"));
  CHECK(search_json["config"]["max_length"] == 4);

  SuiteBounds bounds;
  bounds.ell_max = 6;
  bounds.n_max = 20;
  bounds.block_checks = 5;
  SuiteReport report = run_lemma_suite("eq4", default_catalog(500), bounds);
  Json suite_json = to_json(report);
  CHECK(suite_json["suite"] == "eq4");
  CHECK(suite_json["all_pass"].is_boolean());
  CHECK(suite_json["checks"].is_array());
}
