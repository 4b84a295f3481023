#include "lyubgraph/io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "lyubgraph/error.hpp"

namespace lyubgraph {
namespace {

using RawJson = Json;

std::string location(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

void check_keys(const RawJson& doc, std::initializer_list<const char*> known,
                const ParseOptions& options, std::vector<std::string>& warnings) {
  for (const auto& [key, value] : doc.items()) {
    const bool ok = std::any_of(known.begin(), known.end(),
                                [&key](const char* k) { return key == k; });
    if (ok) continue;
    if (options.strict) throw InputError("unknown key '" + key + "'");
    warnings.push_back("ignored unknown key '" + key + "'");
  }
}

const RawJson& require(const RawJson& doc, const char* key) {
  if (!doc.contains(key)) throw InputError(std::string("missing required key '") + key + "'");
  return doc.at(key);
}

int as_int(const RawJson& v, const std::string& where) {
  if (!v.is_number_integer()) throw InputError(where + ": expected an integer");
  return v.get<int>();
}

std::vector<std::vector<int>> as_matrix(const RawJson& v, const std::string& where) {
  if (!v.is_array()) throw InputError(where + ": expected an array of rows");
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto row_where = where + "[" + std::to_string(i) + "]";
    if (!v[i].is_array()) throw InputError(row_where + ": expected an array");
    auto& row = out.emplace_back();
    for (std::size_t j = 0; j < v[i].size(); ++j) {
      row.push_back(as_int(v[i][j], row_where + "[" + std::to_string(j) + "]"));
    }
  }
  return out;
}

std::vector<std::string> as_strings(const RawJson& v, const std::string& where) {
  if (!v.is_array()) throw InputError(where + ": expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string()) {
      throw InputError(where + "[" + std::to_string(i) + "]: expected a string");
    }
    out.push_back(v[i].get<std::string>());
  }
  return out;
}

AbstractArrangement parse_abstract(const RawJson& doc, const ParseOptions& options,
                                   std::vector<std::string>& warnings) {
  check_keys(doc, {"type", "dim", "pairdim"}, options, warnings);
  const int d = as_int(require(doc, "dim"), "dim");
  return AbstractArrangement(d, as_matrix(require(doc, "pairdim"), "pairdim"));
}

ProjectiveVariety parse_projective(const RawJson& doc, const ParseOptions& options,
                                   std::vector<std::string>& warnings) {
  check_keys(doc, {"type", "dim", "components", "inter_dim"}, options, warnings);
  const int d = as_int(require(doc, "dim"), "dim");
  std::vector<std::string> labels;
  if (doc.contains("components")) labels = as_strings(doc.at("components"), "components");
  return ProjectiveVariety(d, as_matrix(require(doc, "inter_dim"), "inter_dim"),
                           std::move(labels));
}

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

Json indices_1based(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (auto i : v) out.push_back(i + 1);
  return out;
}

Json checks_json(const std::vector<Check>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) {
    out.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return out;
}

}  // namespace

std::size_t default_max_variables() {
  if (const char* env = std::getenv("LYUBGRAPH_MAX_VARS")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultMaxVariables;
}

CoordinateArrangement parse_coordinate(const Json& doc, const ParseOptions& options,
                                       std::vector<std::string>& warnings) {
  check_keys(doc, {"type", "variables", "primes"}, options, warnings);

  const auto& raw_primes = require(doc, "primes");
  if (!raw_primes.is_array()) throw InputError("primes: expected an array");

  std::vector<std::string> names;
  std::map<std::string, std::size_t> index;
  const bool declared = doc.contains("variables");
  if (declared) {
    names = as_strings(doc.at("variables"), "variables");
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (!index.emplace(names[i], i).second) {
        throw InputError("variables[" + std::to_string(i) + "]: duplicate variable '" +
                         names[i] + "'");
      }
    }
  }

  std::vector<std::vector<std::size_t>> prime_vars;
  for (std::size_t p = 0; p < raw_primes.size(); ++p) {
    const auto where = "primes[" + std::to_string(p) + "]";
    const auto members = as_strings(raw_primes[p], where);
    if (members.empty()) throw InputError(where + ": empty prime");
    auto& vars = prime_vars.emplace_back();
    for (std::size_t k = 0; k < members.size(); ++k) {
      auto it = index.find(members[k]);
      if (it == index.end()) {
        if (declared) {
          throw InputError(where + "[" + std::to_string(k) + "]: unknown variable '" +
                           members[k] + "'");
        }
        it = index.emplace(members[k], names.size()).first;
        names.push_back(members[k]);
      }
      vars.push_back(it->second);
    }
  }
  if (prime_vars.empty()) throw InputError("primes: at least one prime is required");

  const auto n = names.size();
  if (n > options.max_variables) {
    throw InputError(std::to_string(n) + " variables exceed the cap of " +
                     std::to_string(options.max_variables) +
                     " (set LYUBGRAPH_MAX_VARS to raise it)");
  }

  std::vector<VariableSet> primes;
  for (std::size_t p = 0; p < prime_vars.size(); ++p) {
    auto set = VariableSet::from_indices(n, prime_vars[p]);
    if (set.full()) {
      throw InputError("primes[" + std::to_string(p) +
                       "]: prime contains every variable (the maximal ideal)");
    }
    primes.push_back(std::move(set));
  }

  for (std::size_t i = 0; i < primes.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (!(primes[i] == primes[j])) continue;
      const auto msg = "primes[" + std::to_string(i) + "] duplicates primes[" +
                       std::to_string(j) + "]";
      if (options.strict) throw InputError(msg);
      warnings.push_back(msg + "; removed");
      break;
    }
  }
  auto minimal = minimalize(primes);
  std::vector<VariableSet> deduped;
  for (const auto& p : primes)
    if (std::find(deduped.begin(), deduped.end(), p) == deduped.end()) deduped.push_back(p);
  if (minimal.size() != deduped.size()) {
    const auto msg = std::to_string(deduped.size() - minimal.size()) +
                     " prime(s) contain another prime and are not minimal";
    if (options.strict) throw InputError(msg);
    warnings.push_back(msg + "; removed");
  }
  return CoordinateArrangement(n, std::move(minimal), std::move(names));
}

ParsedDocument parse_document(std::string_view text, const ParseOptions& options) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("JSON syntax error at " + location(text, e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw InputError("top-level JSON value must be an object");
  if (!doc.contains("type") || !doc.at("type").is_string()) {
    throw InputError("missing string key 'type' (coordinate, abstract or projective)");
  }
  const auto type = doc.at("type").get<std::string>();
  std::vector<std::string> warnings;
  if (type == "coordinate") {
    auto arr = parse_coordinate(doc, options, warnings);
    return {std::move(arr), std::move(warnings)};
  }
  if (type == "abstract") {
    auto arr = parse_abstract(doc, options, warnings);
    return {std::move(arr), std::move(warnings)};
  }
  if (type == "projective") {
    auto x = parse_projective(doc, options, warnings);
    return {std::move(x), std::move(warnings)};
  }
  throw InputError("type: unknown input type '" + type + "'");
}

ParsedDocument load_document(const std::filesystem::path& path, const ParseOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_document(buf.str(), options);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

Json to_json(const CoordinateArrangement& arr) {
  Json primes = Json::array();
  for (const auto& p : arr.primes()) {
    Json names = Json::array();
    for (auto v : p.indices()) names.push_back(arr.labels()[v]);
    primes.push_back(std::move(names));
  }
  return {{"type", "coordinate"}, {"variables", arr.labels()}, {"primes", std::move(primes)}};
}

Json to_json(const AbstractArrangement& arr) {
  return {{"type", "abstract"}, {"dim", arr.dim()}, {"pairdim", arr.matrix()}};
}

Json to_json(const ProjectiveVariety& x) {
  return {{"type", "projective"},
          {"dim", x.dim()},
          {"components", x.labels()},
          {"inter_dim", x.inter_dims()}};
}

Json to_json(const ConnResult& result) {
  Json out{{"c", result.c},
           {"method", result.method == ConnResult::Method::graph ? "graph" : "bruteforce"}};
  if (result.cover) {
    out["cover"] = {{"S", indices_1based(result.cover->s_side)},
                    {"T", indices_1based(result.cover->t_side)}};
  }
  if (result.separating_threshold) out["separating_threshold"] = *result.separating_threshold;
  return out;
}

Json to_json(const InvariantReport& r) {
  Json out;
  out["d"] = r.d;
  out["s"] = r.s;
  out["gamma_profile"] = r.gamma_profile;
  out["c_graph"] = optional_int(r.c_graph);
  out["c_oracle"] = r.c_oracle ? to_json(*r.c_oracle) : Json(nullptr);
  out["lambda01"] = optional_int(r.lambda01);
  out["lambda12"] = optional_int(r.lambda12);
  out["lambda_top"] = optional_int(r.lambda_top);
  Json bounds = Json::array();
  for (std::size_t k = 0; k < r.superdiag_lower_bounds.size(); ++k) {
    const auto i = k + 1;
    bounds.push_back({{"i", i},
                      {"entry", "lambda_{" + std::to_string(i) + "," + std::to_string(i + 1) + "}"},
                      {"lower_bound", r.superdiag_lower_bounds[k]},
                      {"exact", i == 1}});
  }
  out["superdiag_lower_bounds"] = std::move(bounds);
  Json comps = Json::array();
  for (std::size_t e = 0; e < r.max_components.size(); ++e) {
    comps.push_back({{"e", e}, {"count", r.max_components[e]}});
  }
  out["max_components"] = std::move(comps);
  if (r.dim3_table) {
    Json table = Json::array();
    for (const auto& row : *r.dim3_table) {
      Json cells = Json::array();
      for (const auto& cell : row) {
        cells.push_back(cell.value ? Json(*cell.value) : Json(cell.unknown));
      }
      table.push_back(std::move(cells));
    }
    out["dim3_table"] = std::move(table);
  } else {
    out["dim3_table"] = nullptr;
  }
  out["checks"] = checks_json(r.checks);
  out["notes"] = r.notes;
  return out;
}

Json to_json(const GammaGraph& g, const std::vector<std::string>& labels) {
  Json edges = Json::array();
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    for (std::size_t j = i + 1; j < g.vertex_count(); ++j)
      if (g.adjacent(i, j)) edges.push_back({i + 1, j + 1});
  Json comps = Json::array();
  for (const auto& c : g.components()) comps.push_back(indices_1based(c));
  return {{"t", g.threshold()},
          {"vertices", labels},
          {"edges", std::move(edges)},
          {"component_count", g.component_count()},
          {"components", std::move(comps)}};
}

Json to_json(const ProjectiveReport& r) {
  Json out;
  out["d"] = r.d;
  out["s"] = r.s;
  out["gamma_profile"] = r.gamma_profile;
  out["cone_profile"] = r.cone_profile;
  out["lambda12"] = optional_int(r.lambda12);
  Json bounds = Json::array();
  for (std::size_t k = 0; k < r.superdiag_lower_bounds.size(); ++k) {
    bounds.push_back({{"i", k + 2}, {"lower_bound", r.superdiag_lower_bounds[k]}});
  }
  out["superdiag_lower_bounds"] = std::move(bounds);
  out["checks"] = checks_json(r.checks);
  return out;
}

namespace {

void render_checks(std::ostringstream& md, const std::vector<Check>& checks) {
  if (checks.empty()) return;
  md << "\n## Checks\n\n| check | result | detail |\n|---|---|---|\n";
  for (const auto& c : checks) {
    md << "| " << c.name << " | " << (c.passed ? "pass" : "FAIL") << " | " << c.detail << " |\n";
  }
}

}  // namespace

std::string to_markdown(const InvariantReport& r) {
  std::ostringstream md;
  md << "# Invariant report\n\n";
  md << "- dim A: " << r.d << "\n- minimal primes: " << r.s << "\n";
  if (r.c_graph) md << "- connectedness dimension c(A): " << *r.c_graph << "\n";
  if (r.c_oracle) {
    md << "- c(A) by cover search: " << r.c_oracle->c;
    if (r.c_oracle->cover) {
      const auto join = [](const std::vector<std::size_t>& v) {
        std::string s;
        for (auto i : v) s += (s.empty() ? "" : ",") + std::to_string(i + 1);
        return s;
      };
      md << " (S = {" << join(r.c_oracle->cover->s_side) << "}, T = {"
         << join(r.c_oracle->cover->t_side) << "})";
    }
    md << "\n";
  }
  if (r.lambda_top) md << "- lambda_{" << r.d << "," << r.d << "} = #Gamma_1 = " << *r.lambda_top << "\n";

  if (!r.gamma_profile.empty()) {
    md << "\n## Superdiagonal and graph profile\n\n";
    md << "| i | lambda_{i,i+1} | t = d-i-1 | #Gamma_t |\n|---|---|---|---|\n";
    for (int i = 0; i <= r.d - 2; ++i) {
      const int t = r.d - i - 1;
      std::string entry;
      if (i == 0) {
        entry = "= " + std::to_string(*r.lambda01);
      } else if (i == 1) {
        entry = "= " + std::to_string(*r.lambda12);
      } else {
        entry = ">= " + std::to_string(r.superdiag_lower_bounds[i - 1]);
      }
      md << "| " << i << " | " << entry << " | " << t << " | " << r.gamma_profile[t - 1]
         << " |\n";
    }
  }
  if (!r.max_components.empty()) {
    md << "\n## Maximal disconnection\n\n| dim X <= e | max components |\n|---|---|\n";
    for (std::size_t e = 0; e < r.max_components.size(); ++e) {
      md << "| " << e << " | " << r.max_components[e] << " |\n";
    }
  }
  if (r.dim3_table) {
    md << "\n## Lyubeznik table (d = 3)\n\n| | 0 | 1 | 2 | 3 |\n|---|---|---|---|---|\n";
    for (std::size_t i = 0; i < 4; ++i) {
      md << "| " << i << " |";
      for (const auto& cell : (*r.dim3_table)[i]) {
        md << " " << (cell.value ? std::to_string(*cell.value) : cell.unknown) << " |";
      }
      md << "\n";
    }
  }
  render_checks(md, r.checks);
  if (!r.notes.empty()) {
    md << "\n## Notes\n\n";
    for (const auto& n : r.notes) md << "- " << n << "\n";
  }
  return md.str();
}

std::string to_markdown(const ProjectiveReport& r) {
  std::ostringstream md;
  md << "# Projective variety report\n\n- dim X: " << r.d << "\n- components: " << r.s << "\n";
  if (r.lambda12) md << "- lambda_{1,2} of the cone: " << *r.lambda12 << "\n";
  if (!r.gamma_profile.empty()) {
    md << "\n| t | #Gamma_t(X) | #Gamma_t(cone) |\n|---|---|---|\n";
    for (std::size_t t = 1; t <= r.gamma_profile.size(); ++t) {
      md << "| " << t << " | " << r.gamma_profile[t - 1] << " | " << r.cone_profile[t - 1]
         << " |\n";
    }
  }
  if (!r.superdiag_lower_bounds.empty()) {
    md << "\n| i | lambda_{i,i+1} |\n|---|---|\n";
    for (std::size_t k = 0; k < r.superdiag_lower_bounds.size(); ++k) {
      md << "| " << k + 2 << " | >= " << r.superdiag_lower_bounds[k] << " |\n";
    }
  }
  render_checks(md, r.checks);
  return md.str();
}

std::string to_dot(const GammaGraph& g, const std::vector<std::string>& labels) {
  std::ostringstream dot;
  dot << "graph gamma_" << g.threshold() << " {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    dot << "  v" << v + 1 << " [label=\"" << labels.at(v) << "\", component="
        << g.component_label(v) + 1 << "];\n";
  }
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    for (std::size_t j = i + 1; j < g.vertex_count(); ++j)
      if (g.adjacent(i, j)) dot << "  v" << i + 1 << " -- v" << j + 1 << ";\n";
  dot << "}\n";
  return dot.str();
}

std::vector<std::string> prime_labels(const CoordinateArrangement& arr) {
  std::vector<std::string> out;
  for (const auto& p : arr.primes()) {
    std::string s = "(";
    for (auto v : p.indices()) s += (s.size() > 1 ? "," : "") + arr.labels()[v];
    out.push_back(s + ")");
  }
  return out;
}

std::vector<std::string> default_prime_labels(std::size_t s) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < s; ++i) out.push_back("P" + std::to_string(i + 1));
  return out;
}

}  // namespace lyubgraph
