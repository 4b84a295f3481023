#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "lyubgraph/arrangement.hpp"
#include "lyubgraph/connectedness.hpp"
#include "lyubgraph/gamma.hpp"
#include "lyubgraph/lyubeznik.hpp"
#include "lyubgraph/projective.hpp"

namespace lyubgraph {

using Json = nlohmann::ordered_json;

inline constexpr std::size_t kDefaultMaxVariables = 128;

/// Variable cap for coordinate input: LYUBGRAPH_MAX_VARS when set to a
/// positive integer, otherwise kDefaultMaxVariables.
std::size_t default_max_variables();

struct ParseOptions {
  /// Reject unknown keys, duplicate primes and non-antichain prime lists
  /// instead of warning.
  bool strict = false;
  std::size_t max_variables = default_max_variables();
};

using Document = std::variant<CoordinateArrangement, AbstractArrangement, ProjectiveVariety>;

struct ParsedDocument {
  Document document;
  std::vector<std::string> warnings;
};

/// Parses any of the three input forms ("coordinate", "abstract",
/// "projective"). Throws InputError with a line/column or field path.
ParsedDocument parse_document(std::string_view text, const ParseOptions& options = {});
ParsedDocument load_document(const std::filesystem::path& path,
                             const ParseOptions& options = {});

CoordinateArrangement parse_coordinate(const Json& doc, const ParseOptions& options,
                                       std::vector<std::string>& warnings);

/// Writers for the input schemas.
Json to_json(const CoordinateArrangement& arr);
Json to_json(const AbstractArrangement& arr);
Json to_json(const ProjectiveVariety& x);

Json to_json(const InvariantReport& report);
Json to_json(const ConnResult& result);
Json to_json(const GammaGraph& g, const std::vector<std::string>& labels);
Json to_json(const ProjectiveReport& report);

std::string to_markdown(const InvariantReport& report);
std::string to_markdown(const ProjectiveReport& report);
std::string to_dot(const GammaGraph& g, const std::vector<std::string>& labels);

/// Display names for the primes of an arrangement, e.g. "(x,y)".
std::vector<std::string> prime_labels(const CoordinateArrangement& arr);
/// "P1".."Ps".
std::vector<std::string> default_prime_labels(std::size_t s);

}  // namespace lyubgraph
