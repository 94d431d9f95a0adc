#include "wordlab/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace wordlab {

namespace {

std::string rational_str(const Rational& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

}  // namespace

Json to_json(const ComplexityProfile& profile) {
  Json rows = Json::array();
  for (const auto& row : profile.rows) {
    Json entry;
    entry["n"] = row.n;
    entry["subword"] = row.subword;
    entry["abelian"] = row.abelian;
    Json dev;
    for (std::size_t a = 0; a < row.deviation.size(); ++a) {
      dev[std::string("dev_") + profile.letters[a]] = row.deviation[a];
    }
    entry["deviation"] = dev;
    rows.push_back(entry);
  }
  return Json{{"word_id", profile.word_id},
              {"n_max", profile.n_max},
              {"alphabet", profile.letters},
              {"rows", rows}};
}

Json to_json(const IntegerRelation& relation, std::int64_t bound, const Rational& tolerance) {
  return Json{{"coefficients", relation.coefficients},
              {"residual", relation.residual.to_string()},
              {"residual_double", relation.residual.to_double()},
              {"residual_bound", relation.residual_bound},
              {"bound", bound},
              {"tolerance", rational_str(tolerance)},
              {"certificate", relation.certificate}};
}

Json relation_not_found_json(std::int64_t bound, const Rational& tolerance) {
  return Json{{"coefficients", nullptr},
              {"bound", bound},
              {"tolerance", rational_str(tolerance)},
              {"certificate", false},
              {"note", "no integer vector within the bound meets the tolerance"}};
}

Json to_json(const FrequencyVector& f) {
  Json entries = Json::array();
  for (const auto& e : f.entries) {
    entries.push_back(Json{{"value", e.value.to_string()},
                           {"value_double", e.value.to_double()},
                           {"radius", rational_str(e.radius)}});
  }
  return Json{{"entries", entries},
              {"source", f.source == FrequencySource::Exact ? "exact" : "empirical"},
              {"prefix_length", f.prefix_length},
              {"origin", f.origin}};
}

Json to_json(const InductionResult& induction) {
  Json classes = Json::array();
  for (const auto& v : induction.alphabet.classes) {
    Json counts = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) counts.push_back(v[i]);
    classes.push_back(counts);
  }
  Json matrix = Json::array();
  for (Eigen::Index i = 0; i < induction.matrix.m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < induction.matrix.m.cols(); ++j) {
      row.push_back(induction.matrix.m(i, j));
    }
    matrix.push_back(row);
  }
  RankReport rank = matrix_rank_check(induction.matrix);
  Json det_or_rank;
  if (rank.square) {
    det_or_rank = Json{{"det", rational_str(rank.determinant)}};
  } else {
    det_or_rank = Json{{"rank", rank.rank}};
  }
  return Json{{"block_length", induction.matrix.block_length},
              {"classes", classes},
              {"matrix", matrix},
              {"det_or_rank", det_or_rank},
              {"induced_alphabet", induction.alphabet.names.symbols()}};
}

Json to_json(const EquidistributionStats& stats, const std::optional<std::uint64_t>& n_found,
             std::uint64_t n_max) {
  Json out;
  if (n_found) {
    out["n_found"] = *n_found;
  } else {
    out["n_found"] = nullptr;
  }
  out["n_max"] = n_max;
  out["hit_fraction"] = stats.hit_fraction.convert_to<double>();
  out["hits"] = stats.hits;
  out["iterations"] = stats.iterations;
  out["box_area"] = stats.box_area;
  out["gap"] = stats.gap;
  return out;
}

Json to_json(const SearchStats& stats) {
  Json counts = Json::object();
  for (std::size_t n = 1; n < stats.survivors_by_length.size(); ++n) {
    counts[std::to_string(n)] = stats.survivors_by_length[n];
  }
  Json survivors = Json::array();
  for (const auto& s : stats.top_survivors) {
    Json freq = Json::array();
    for (const auto& r : s.frequencies) freq.push_back(rational_str(r));
    Json relation;
    if (s.relation) {
      relation = to_json(*s.relation, 20, Rational(0));
      relation["trivially_expected_at_finite_length"] = true;
    }
    survivors.push_back(Json{{"word", s.word}, {"frequencies", freq}, {"relation", relation}});
  }
  return Json{{"config",
               Json{{"max_length", stats.config.max_length},
                    {"rho_bound", stats.config.rho_bound},
                    {"report_top", stats.config.report_top},
                    {"require_all_letters", stats.config.require_all_letters},
                    {"fix_first_letter", stats.config.fix_first_letter}}},
              {"counts_by_length", counts},
              {"survivors", survivors},
              {"nodes_visited", stats.nodes_visited},
              {"budget_exhausted", stats.budget_exhausted},
              {"disclaimer", stats.disclaimer}};
}

Json to_json(const SuiteReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back(
        Json{{"check", c.check}, {"word", c.word}, {"status", c.status}, {"detail", c.detail}});
  }
  return Json{{"suite", report.suite},
              {"checks", checks},
              {"all_pass", report.all_pass},
              {"disclaimer", report.disclaimer}};
}

Json to_json(const SturmianReport& report) {
  Json out;
  out["n_max"] = report.n_max;
  out["max_deviation"] = report.max_deviation;
  out["abelian_constant_two"] = report.abelian_constant_two;
  if (report.first_bad_rho_n) out["first_bad_rho_n"] = *report.first_bad_rho_n;
  if (report.least_period) {
    out["least_period"] = *report.least_period;
  } else {
    out["least_period"] = "aperiodic over prefix";
  }
  out["sturmian_consistent"] = report.sturmian_consistent;
  return out;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(errc::io_error, "cannot write '" + tmp + "'");
    out << text;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    fail(errc::io_error, "cannot replace '" + path + "'");
  }
}

}  // namespace wordlab
