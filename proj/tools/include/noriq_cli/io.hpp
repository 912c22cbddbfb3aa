// JSON documents for pairs, maps, zigzags, quivers, modules and corpus manifests.
#pragma once

#include <filesystem>
#include <map>
#include <string>

#include <json.hpp>

#include "noriq/presentation.hpp"

namespace noriq::cli {

using json = nlohmann::json;
namespace fs = std::filesystem;

// Malformed input; the message carries the file and a line/column or a JSON path.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json(const fs::path& path);

// Where relative paths resolve, plus the named pairs of a quiver document.
struct Scope {
  fs::path base;
  std::map<std::string, SPair> named;
};

// Pair specs are a name from the scope, a file path, an inline {vertices, simplices, sub} document,
// {"builtin": "interval" | "point" | "ray" | "points", "d": k}, or {"op": name, "args": [specs]}.
SPair parse_pair(const json& spec, const Scope& scope);
json pair_to_json(const SPair& p);

// {source, target, vertex_map}
PairMap parse_map(const json& spec, const Scope& scope);

// A list of {dir, map} arrows, or {"builtin": "identity" | "inversion" | "realize" | "sum", ...}.
// start is the source pair of an empty arrow list.
Zigzag parse_zigzag(const json& spec, const Scope& scope, const std::optional<SPair>& start);

// A file path or an inline {vertices, simplices, middle, inner} document.
Triple parse_triple(const json& spec, const Scope& scope);

Rational parse_rational_value(const json& v);
RatMatrix parse_matrix(const json& v);
json matrix_to_json(const RatMatrix& m);

// Objects and morphisms as described in the README.
QuiverRep parse_quiver(const json& doc, const fs::path& base);
QuiverRep load_quiver(const fs::path& path);
SPair load_pair(const fs::path& path);
PairMap load_map(const fs::path& path);

// "regular", "zero", "object:<id>", or a file holding {dim, action}.
ModuleOverCommutant parse_module(const std::string& spec, const QuiverRep& rep, const fs::path& base);

struct ManifestEntry {
  std::string name;
  std::string kind;  // pair | map | quiver | random
  fs::path path;     // resolved against the manifest directory
  json params;
};
struct Manifest {
  std::string version;
  std::vector<ManifestEntry> entries;
};
Manifest load_manifest(const fs::path& path);

// "RxC [[...]]"
std::string matrix_value(const RatMatrix& m);
std::string vector_value(const std::vector<Rational>& v);

}  // namespace noriq::cli
