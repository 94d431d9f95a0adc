// wordlab CLI: word generation, complexity profiles, relation search,
// abelian induction, decoloring, torus-rotation scans, the rho-bounded
// search, and the batch verification suites.
//
// Exit codes: 0 ok, 1 usage, 2 computation error, 3 verification failure.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "wordlab/complexity.hpp"
#include "wordlab/decoloring.hpp"
#include "wordlab/frequency.hpp"
#include "wordlab/harness.hpp"
#include "wordlab/induction.hpp"
#include "wordlab/report.hpp"
#include "wordlab/rotation.hpp"
#include "wordlab/words.hpp"

namespace {

using namespace wordlab;

constexpr int kExitUsage = 1;
constexpr int kExitComputation = 2;
constexpr int kExitVerification = 3;

struct RunConfig {
  int precision_digits = 64;
  std::size_t prefix_length = 10000;
  std::size_t n_max = 200;
  std::string output_format = "csv";
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    write_text_file(out_path, text);
  }
}

SubstitutionSpec parse_substitution(const std::string& rules_text, const std::string& seed) {
  SubstitutionSpec spec;
  std::size_t pos = 0;
  while (pos < rules_text.size()) {
    std::size_t comma = rules_text.find(',', pos);
    std::string rule = rules_text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    std::size_t colon = rule.find(':');
    if (colon != 1 || rule.size() < 3) {
      fail(errc::invalid_parameter,
           "substitution rules look like \"0:01,1:0\"; got '" + rule + "'");
    }
    spec.rules.emplace_back(rule[0], rule.substr(colon + 1));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (seed.size() != 1) fail(errc::invalid_parameter, "seed must be a single letter");
  spec.seed = seed[0];
  return spec;
}

struct GenOptions {
  std::string periodic;
  std::string subst;
  std::string seed;
  bool rot_binary = false;
  bool rot_ternary = false;
  std::string alpha;
  std::string x = "0";
  std::string cut1;
  std::string cut2;
  std::string partition = "A";
  std::size_t len = 0;
  std::string out;
};

int cmd_gen(const GenOptions& opt) {
  WordGeneratorSpec spec;
  spec.prefix_length = opt.len;
  int chosen = (!opt.periodic.empty()) + (!opt.subst.empty()) + opt.rot_binary + opt.rot_ternary;
  if (chosen != 1) {
    std::cerr << "choose exactly one of --periodic, --subst, --rot-binary, --rot-ternary\n";
    return kExitUsage;
  }
  if (!opt.periodic.empty()) {
    spec.variant = PeriodicSpec{opt.periodic};
  } else if (!opt.subst.empty()) {
    spec.variant = parse_substitution(opt.subst, opt.seed);
  } else if (opt.rot_binary) {
    spec.variant = RotationBinarySpec{parse_exact(opt.alpha), parse_exact(opt.x),
                                      opt.partition == "B" ? Partition::B : Partition::A};
  } else {
    spec.variant = RotationTernarySpec{parse_exact(opt.alpha), parse_exact(opt.x),
                                       parse_exact(opt.cut1), parse_exact(opt.cut2)};
  }
  FiniteWord word = generate(spec);
  if (opt.out.empty()) {
    std::cout << word_file_text(word);
  } else {
    write_word_file(word, opt.out);
  }
  std::cerr << "length=" << word.length() << " alphabet=" << word.alphabet().symbols() << "\n";
  return 0;
}

int cmd_profile(const std::string& path, const RunConfig& cfg, const std::string& out) {
  FiniteWord word = read_word_file(path);
  std::size_t n_max = std::min(cfg.n_max, word.length());
  ComplexityProfile profile = compute_profile(word, n_max, path);
  if (cfg.output_format == "json") {
    emit(to_json(profile).dump(2), out);
  } else {
    emit(profile_csv(profile), out);
  }
  return 0;
}

int cmd_relation(const std::string& path, const std::string& freq_text, std::int64_t bound,
                 const std::string& eps_text, const std::string& out) {
  std::vector<FrequencyEntry> entries;
  Rational eps;
  bool exact_input = false;
  if (!freq_text.empty()) {
    std::size_t pos = 0;
    while (pos <= freq_text.size()) {
      std::size_t comma = freq_text.find(',', pos);
      std::string piece =
          freq_text.substr(pos, comma == std::string::npos ? comma : comma - pos);
      entries.push_back({parse_exact(piece), 0});
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    exact_input = true;
  } else if (!path.empty()) {
    FrequencyVector f = empirical_frequencies(read_word_file(path));
    entries = f.entries;
  } else {
    std::cerr << "relation needs a word file or --freq\n";
    return kExitUsage;
  }
  if (eps_text.empty()) {
    eps = exact_input ? Rational(0) : Rational(1, 1000000);
  } else {
    eps = parse_exact(eps_text).rational_value();
  }
  auto relation = integer_relation_search(entries, bound, eps);
  Json json = relation ? to_json(*relation, bound, eps) : relation_not_found_json(bound, eps);
  emit(json.dump(2), out);
  return 0;
}

int cmd_induce(const std::string& path, std::size_t ell, const std::string& out,
               const std::string& json_path) {
  FiniteWord word = read_word_file(path);
  InductionResult induction = induce(word, ell);
  Json sidecar = to_json(induction);
  if (out.empty()) {
    std::cout << word_file_text(induction.word);
    std::cout << sidecar.dump(2) << "\n";
  } else {
    write_word_file(induction.word, out);
    write_text_file(json_path.empty() ? out + ".json" : json_path, sidecar.dump(2));
  }
  return 0;
}

int cmd_decolor(const std::string& path, const std::string& keep, const std::string& zero,
                const std::string& out) {
  if (keep.size() != 1 || zero.size() != 1) {
    std::cerr << "--keep and --zero take single letters\n";
    return kExitUsage;
  }
  FiniteWord word = read_word_file(path);
  FiniteWord image = decolor(word, {keep[0], zero[0]});
  if (out.empty()) {
    std::cout << word_file_text(image);
  } else {
    write_word_file(image, out);
  }
  return 0;
}

int cmd_conflict(const std::string& alpha, const std::string& beta, const std::string& x,
                 const std::string& y, std::uint64_t n_max, std::uint64_t equidist_n,
                 const std::string& out) {
  TorusRotation torus{parse_exact(alpha), parse_exact(beta), parse_exact(x), parse_exact(y)};
  auto n_found = find_conflict(torus, n_max);
  EquidistributionStats stats = equidistribution_check(torus, equidist_n ? equidist_n : n_max);
  emit(to_json(stats, n_found, n_max).dump(2), out);
  return 0;
}

int cmd_search(const SearchConfig& cfg, const std::string& out) {
  SearchStats stats = search_rho_bounded(cfg);
  emit(to_json(stats).dump(2), out);
  return 0;
}

int cmd_verify(const std::string& suite, const std::string& word_filter, const RunConfig& cfg,
               const SuiteBounds& bounds, const std::string& out) {
  std::vector<CorpusEntry> corpus = default_catalog(cfg.prefix_length);
  if (!word_filter.empty()) {
    std::vector<CorpusEntry> filtered;
    for (auto& entry : corpus) {
      if (entry.name == word_filter) filtered.push_back(std::move(entry));
    }
    if (filtered.empty()) {
      std::cerr << "no catalog word named '" << word_filter << "'\n";
      return kExitUsage;
    }
    corpus = std::move(filtered);
  }
  SuiteReport report = run_lemma_suite(suite, corpus, bounds);
  for (const auto& check : report.checks) {
    std::cout << "[" << check.status << "] " << check.check << " " << check.word;
    if (!check.detail.empty()) std::cout << " - " << check.detail;
    std::cout << "\n";
  }
  if (!out.empty()) write_text_file(out, to_json(report).dump(2));
  std::cout << (report.all_pass ? "all checks passed" : "some checks failed") << "\n";
  return report.all_pass ? 0 : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wordlab: abelian complexity, balance and induction analysis for finite words"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--precision", cfg.precision_digits, "decimal digits for printed approximations")
      ->envname("WORDLAB_PRECISION")
      ->check(CLI::Range(16, 4096));

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a word prefix");
  gen_cmd->add_option("--periodic", gen.periodic, "repeat this pattern");
  gen_cmd->add_option("--subst", gen.subst, "substitution rules, e.g. \"0:01,1:0\"");
  gen_cmd->add_option("--seed", gen.seed, "seed letter for --subst");
  gen_cmd->add_flag("--rot-binary", gen.rot_binary, "binary rotation coding");
  gen_cmd->add_flag("--rot-ternary", gen.rot_ternary, "ternary rotation coding");
  gen_cmd->add_option("--alpha", gen.alpha, "rotation angle (exact expression)");
  gen_cmd->add_option("--x", gen.x, "orbit start (exact expression)");
  gen_cmd->add_option("--cut1", gen.cut1, "first cut for --rot-ternary");
  gen_cmd->add_option("--cut2", gen.cut2, "second cut for --rot-ternary");
  gen_cmd->add_option("--partition", gen.partition, "A or B")->check(CLI::IsMember({"A", "B"}));
  gen_cmd->add_option("--len", gen.len, "prefix length")->required();
  gen_cmd->add_option("--out", gen.out, "output word file (stdout if omitted)");

  std::string profile_path, profile_out;
  auto* profile_cmd = app.add_subcommand("profile", "complexity/balance profile of a word file");
  profile_cmd->add_option("file", profile_path, "word file")->required();
  profile_cmd->add_option("--n-max", cfg.n_max, "largest window length");
  profile_cmd->add_option("--format", cfg.output_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  profile_cmd->add_option("--out", profile_out, "output path (stdout if omitted)");

  std::string rel_path, rel_freq, rel_eps, rel_out;
  std::int64_t rel_bound = 50;
  auto* rel_cmd = app.add_subcommand("relation", "bounded integer-relation search");
  rel_cmd->add_option("file", rel_path, "word file (empirical frequencies)");
  rel_cmd->add_option("--freq", rel_freq, "comma-separated exact values");
  rel_cmd->add_option("--bound", rel_bound, "max-norm bound for coefficients");
  rel_cmd->add_option("--eps", rel_eps, "residual tolerance (exact rational)");
  rel_cmd->add_option("--out", rel_out, "output path (stdout if omitted)");

  std::string ind_path, ind_out, ind_json;
  std::size_t ind_ell = 1;
  auto* ind_cmd = app.add_subcommand("induce", "abelian induction by aligned blocks");
  ind_cmd->add_option("file", ind_path, "word file")->required();
  ind_cmd->add_option("--ell", ind_ell, "block length")->required();
  ind_cmd->add_option("--out", ind_out, "induced word file");
  ind_cmd->add_option("--json", ind_json, "sidecar path (default <out>.json)");

  std::string dec_path, dec_keep, dec_zero = "0", dec_out;
  auto* dec_cmd = app.add_subcommand("decolor", "keep one letter, zero the rest");
  dec_cmd->add_option("file", dec_path, "word file")->required();
  dec_cmd->add_option("--keep", dec_keep, "letter to keep")->required();
  dec_cmd->add_option("--zero", dec_zero, "replacement symbol");
  dec_cmd->add_option("--out", dec_out, "output word file");

  std::string con_alpha, con_beta, con_x = "0", con_y = "0", con_out;
  std::uint64_t con_nmax = 1000000, con_equidist = 0;
  auto* con_cmd = app.add_subcommand("conflict", "simultaneous kept-letter event on the torus");
  con_cmd->add_option("--alpha", con_alpha, "first angle")->required();
  con_cmd->add_option("--beta", con_beta, "second angle")->required();
  con_cmd->add_option("--x", con_x, "first start");
  con_cmd->add_option("--y", con_y, "second start");
  con_cmd->add_option("--n-max", con_nmax, "scan bound");
  con_cmd->add_option("--equidist", con_equidist, "iterations for the hit fraction");
  con_cmd->add_option("--out", con_out, "output path (stdout if omitted)");

  SearchConfig search_cfg;
  std::string search_out;
  auto* search_cmd = app.add_subcommand("search", "enumerate ternary prefixes with bounded "
                                                  "abelian complexity");
  search_cmd->add_option("--max-length", search_cfg.max_length, "target length")->required();
  search_cmd->add_option("--rho-bound", search_cfg.rho_bound, "class-count bound");
  search_cmd->add_option("--report-top", search_cfg.report_top, "survivors to report");
  search_cmd->add_flag("--require-all-letters", search_cfg.require_all_letters,
                       "count only prefixes using all three letters");
  search_cmd->add_flag("--fix-first-letter", search_cfg.fix_first_letter,
                       "symmetry reduction: first letter fixed to 1");
  search_cmd->add_option("--node-budget", search_cfg.node_budget, "search node budget");
  search_cmd->add_option("--out", search_out, "output path (stdout if omitted)");

  std::string verify_suite, verify_word, verify_out;
  SuiteBounds bounds;
  auto* verify_cmd = app.add_subcommand("verify", "run a named check suite on the catalog");
  verify_cmd->add_option("suite", verify_suite, "lemma10|lemma16|lemma19|lemma22|eq4|all")
      ->required();
  verify_cmd->add_option("--word", verify_word, "restrict to one catalog word");
  verify_cmd->add_option("--prefix-length", cfg.prefix_length, "catalog prefix length");
  verify_cmd->add_option("--ell-max", bounds.ell_max, "largest block length tested");
  verify_cmd->add_option("--ell", bounds.ell_fixed, "restrict block-length checks to one value");
  verify_cmd->add_option("--n-max", bounds.n_max, "largest window length tested");
  verify_cmd->add_option("--relation-bound", bounds.relation_bound, "relation search bound");
  verify_cmd->add_option("--block-checks", bounds.block_checks, "random block-identity triples");
  verify_cmd->add_option("--seed", bounds.rng_seed, "seed for randomized selections");
  verify_cmd->add_option("--out", verify_out, "JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    std::cout.precision(std::min(cfg.precision_digits, 17));
    if (gen_cmd->parsed()) return cmd_gen(gen);
    if (profile_cmd->parsed()) return cmd_profile(profile_path, cfg, profile_out);
    if (rel_cmd->parsed()) {
      return cmd_relation(rel_path, rel_freq, rel_bound, rel_eps, rel_out);
    }
    if (ind_cmd->parsed()) return cmd_induce(ind_path, ind_ell, ind_out, ind_json);
    if (dec_cmd->parsed()) return cmd_decolor(dec_path, dec_keep, dec_zero, dec_out);
    if (con_cmd->parsed()) {
      return cmd_conflict(con_alpha, con_beta, con_x, con_y, con_nmax, con_equidist, con_out);
    }
    if (search_cmd->parsed()) return cmd_search(search_cfg, search_out);
    if (verify_cmd->parsed()) {
      if (!known_suite(verify_suite)) {
        std::cerr << "unknown suite '" << verify_suite << "'\n";
        return kExitUsage;
      }
      if (cfg.prefix_length < bounds.n_max) {
        std::cerr << "prefix length must be at least n-max\n";
        return kExitUsage;
      }
      return cmd_verify(verify_suite, verify_word, cfg, bounds, verify_out);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitComputation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitComputation;
  }
  return kExitUsage;
}
