#pragma once

#include <string>

#include <json.hpp>

#include "wordlab/complexity.hpp"
#include "wordlab/decoloring.hpp"
#include "wordlab/frequency.hpp"
#include "wordlab/harness.hpp"
#include "wordlab/induction.hpp"
#include "wordlab/rotation.hpp"

namespace wordlab {

using Json = nlohmann::ordered_json;

Json to_json(const ComplexityProfile& profile);
Json to_json(const IntegerRelation& relation, std::int64_t bound, const Rational& tolerance);
Json relation_not_found_json(std::int64_t bound, const Rational& tolerance);
Json to_json(const FrequencyVector& f);
Json to_json(const InductionResult& induction);
Json to_json(const EquidistributionStats& stats, const std::optional<std::uint64_t>& n_found,
             std::uint64_t n_max);
Json to_json(const SearchStats& stats);
Json to_json(const SuiteReport& report);
Json to_json(const SturmianReport& report);

/// Write-to-temp-then-rename, so partially written reports never appear.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace wordlab
