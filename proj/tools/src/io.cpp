#include "noriq_cli/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace noriq::cli {
namespace {

[[noreturn]] void fail(const std::string& msg) { throw InputError(msg); }

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where + ": missing '" + key + "'");
  return *it;
}

std::string string_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_string()) fail(where + ": '" + key + "' must be a string");
  return v.get<std::string>();
}

int int_field(const json& obj, const char* key, int fallback, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_number_integer()) fail(where + ": '" + key + "' must be an integer");
  return it->get<int>();
}

std::vector<std::string> string_list(const json& v, const std::string& where) {
  if (!v.is_array()) fail(where + ": expected a list of names");
  std::vector<std::string> out;
  for (const auto& x : v) {
    if (!x.is_string()) fail(where + ": names must be strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

std::vector<std::vector<std::string>> simplex_list(const json& v, const std::string& where) {
  if (!v.is_array()) fail(where + ": expected a list of simplices");
  std::vector<std::vector<std::string>> out;
  for (const auto& s : v) out.push_back(string_list(s, where));
  return out;
}

fs::path resolve(const fs::path& base, const std::string& rel) {
  fs::path p(rel);
  return p.is_absolute() ? p : base / p;
}

// Maximal simplices among the masked ones.
std::vector<std::vector<std::string>> facets(const OrderedComplex& c, const std::vector<bool>& mask) {
  const auto& simplices = c.simplices();
  std::vector<bool> covered(simplices.size(), false);
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    if (!mask[i] || simplices[i].size() < 2) continue;
    for (std::size_t drop = 0; drop < simplices[i].size(); ++drop) {
      Simplex face;
      for (std::size_t k = 0; k < simplices[i].size(); ++k)
        if (k != drop) face.push_back(simplices[i][k]);
      covered[static_cast<std::size_t>(c.simplex_index(face))] = true;
    }
  }
  std::vector<std::vector<std::string>> out;
  for (std::size_t i = 0; i < simplices.size(); ++i)
    if (mask[i] && !covered[i]) out.push_back(c.labels(simplices[i]));
  return out;
}

SPair inline_pair(const json& doc, const std::string& where) {
  auto vertices = string_list(field(doc, "vertices", where), where + ".vertices");
  auto simplices = simplex_list(field(doc, "simplices", where), where + ".simplices");
  auto sub = simplex_list(field(doc, "sub", where), where + ".sub");
  try {
    return SPair::from_labels(OrderedComplex::from_facets(std::move(vertices), simplices), sub);
  } catch (const TopologyError& e) {
    fail(where + ": " + e.what());
  }
}

SPair builtin_pair(const json& spec, const std::string& where) {
  std::string name = string_field(spec, "builtin", where);
  if (name == "interval") return interval_pair();
  if (name == "point") return point_pair();
  if (name == "ray") return ray_pair();
  if (name == "points") {
    int d = int_field(spec, "d", 1, where);
    if (d < 0) fail(where + ": 'd' must be nonnegative");
    return points_pair(static_cast<std::size_t>(d));
  }
  fail(where + ": unknown builtin pair '" + name + "'");
}

SPair op_pair(const json& spec, const Scope& scope, const std::string& where) {
  std::string op = string_field(spec, "op", where);
  const json& args = field(spec, "args", where);
  if (!args.is_array()) fail(where + ": 'args' must be a list");
  std::vector<SPair> ps;
  for (const auto& a : args) ps.push_back(parse_pair(a, scope));
  auto arity = [&](std::size_t n) {
    if (ps.size() != n) fail(where + ": '" + op + "' takes " + std::to_string(n) + " argument(s)");
  };
  if (op == "wedge") {
    if (ps.empty()) fail(where + ": 'wedge' needs at least one argument");
    return wedge(ps).pair;
  }
  if (op == "smash") {
    arity(2);
    return smash(ps[0], ps[1]);
  }
  if (op == "cone") {
    arity(1);
    return cone(ps[0]);
  }
  if (op == "suspend") {
    arity(1);
    return suspension(ps[0]);
  }
  fail(where + ": unknown pair op '" + op + "'");
}

std::string describe(const json& spec) {
  if (spec.is_string()) return spec.get<std::string>();
  return "pair";
}

}  // namespace

json read_json(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path.string() + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    if (auto pos = what.find(": syntax error"); pos != std::string::npos) what = what.substr(pos + 2);
    fail(path.string() + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what);
  }
}

SPair parse_pair(const json& spec, const Scope& scope) {
  if (spec.is_string()) {
    std::string name = spec.get<std::string>();
    if (auto it = scope.named.find(name); it != scope.named.end()) return it->second;
    return load_pair(resolve(scope.base, name));
  }
  if (!spec.is_object()) fail("pair spec must be a name, a path or an object");
  if (spec.contains("builtin")) return builtin_pair(spec, "builtin pair");
  if (spec.contains("op")) return op_pair(spec, scope, "pair op");
  return inline_pair(spec, "pair");
}

json pair_to_json(const SPair& p) {
  const OrderedComplex& c = p.total();
  json doc;
  doc["vertices"] = c.vertices();
  doc["simplices"] = facets(c, std::vector<bool>(c.size(), true));
  doc["sub"] = facets(c, p.sub_mask());
  return doc;
}

SPair load_pair(const fs::path& path) {
  json doc = read_json(path);
  Scope scope{path.parent_path(), {}};
  if (doc.is_object() && (doc.contains("builtin") || doc.contains("op"))) return parse_pair(doc, scope);
  return inline_pair(doc, path.string());
}

PairMap parse_map(const json& spec, const Scope& scope) {
  if (spec.is_string()) return load_map(resolve(scope.base, spec.get<std::string>()));
  const std::string where = "map";
  SPair source = parse_pair(field(spec, "source", where), scope);
  SPair target = parse_pair(field(spec, "target", where), scope);
  const json& vm = field(spec, "vertex_map", where);
  if (!vm.is_object()) fail(where + ": 'vertex_map' must be an object of name -> name");
  std::map<std::string, std::string> table;
  for (auto it = vm.begin(); it != vm.end(); ++it) {
    if (!it.value().is_string()) fail(where + ": vertex_map values must be strings");
    table[it.key()] = it.value().get<std::string>();
  }
  try {
    return PairMap::from_labels(source, target, table);
  } catch (const TopologyError& e) {
    fail(where + " " + describe(spec["source"]) + " -> " + describe(spec["target"]) + ": " + e.what());
  }
}

PairMap load_map(const fs::path& path) {
  return parse_map(read_json(path), Scope{path.parent_path(), {}});
}

Zigzag parse_zigzag(const json& spec, const Scope& scope, const std::optional<SPair>& start) {
  const std::string where = "zigzag";
  if (spec.is_object()) {
    std::string name = string_field(spec, "builtin", where);
    if (name == "identity") {
      if (spec.contains("pair")) return Zigzag(parse_pair(spec["pair"], scope));
      if (!start) fail(where + ": identity needs a 'pair'");
      return Zigzag(*start);
    }
    if (name == "inversion") return inversion(SuspensionWitness::of(parse_pair(field(spec, "base", where), scope)));
    if (name == "realize") {
      IntMatrix alpha = to_integer(parse_matrix(field(spec, "matrix", where)));
      if (alpha.rows() != alpha.cols()) fail(where + ": realize needs a square matrix");
      return realize_matrix_on_wedge(alpha, alpha.rows()).map;
    }
    if (name == "sum") {
      SuspensionWitness w = SuspensionWitness::of(parse_pair(field(spec, "base", where), scope));
      const json& terms = field(spec, "terms", where);
      if (!terms.is_array()) fail(where + ": 'terms' must be a list of [coefficient, zigzag]");
      std::vector<std::pair<long, Zigzag>> parts;
      for (const auto& t : terms) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer())
          fail(where + ": each term is [integer, zigzag]");
        parts.emplace_back(t[0].get<long>(), parse_zigzag(t[1], scope, w.pair));
      }
      return int_combination(parts, w, w.pair);
    }
    fail(where + ": unknown builtin '" + name + "'");
  }
  if (!spec.is_array()) fail(where + ": expected a list of arrows or a builtin");
  if (spec.empty()) {
    if (!start) fail(where + ": an empty zigzag needs a known source");
    return Zigzag(*start);
  }
  std::optional<Zigzag> z;
  for (const auto& arrow : spec) {
    std::string dir = string_field(arrow, "dir", where);
    PairMap f = parse_map(field(arrow, "map", where), scope);
    try {
      if (dir == "forward") {
        if (!z) z = Zigzag(f.source());
        z->forward(f);
      } else if (dir == "backward") {
        if (!z) z = Zigzag(f.target());
        z->backward(f);
      } else {
        fail(where + ": 'dir' must be forward or backward");
      }
    } catch (const TopologyError& e) {
      fail(where + ": " + e.what());
    }
  }
  return *z;
}

Triple parse_triple(const json& spec, const Scope& scope) {
  if (spec.is_string()) {
    fs::path path = resolve(scope.base, spec.get<std::string>());
    return parse_triple(read_json(path), Scope{path.parent_path(), {}});
  }
  const std::string where = "triple";
  auto vertices = string_list(field(spec, "vertices", where), where + ".vertices");
  auto simplices = simplex_list(field(spec, "simplices", where), where + ".simplices");
  auto middle = simplex_list(field(spec, "middle", where), where + ".middle");
  auto inner = simplex_list(field(spec, "inner", where), where + ".inner");
  try {
    return Triple::from_labels(OrderedComplex::from_facets(std::move(vertices), simplices), middle, inner);
  } catch (const TopologyError& e) {
    fail(where + ": " + e.what());
  }
}

Rational parse_rational_value(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::exception& e) {
      fail("bad rational '" + v.get<std::string>() + "': " + e.what());
    }
  }
  fail("rationals are integers or \"p/q\" strings");
}

RatMatrix parse_matrix(const json& v) {
  if (v.is_object()) {
    // {"rows": r, "cols": c, "entries": [...]} covers empty shapes.
    std::size_t r = field(v, "rows", "matrix").get<std::size_t>();
    std::size_t c = field(v, "cols", "matrix").get<std::size_t>();
    const json& e = field(v, "entries", "matrix");
    if (!e.is_array() || e.size() != r * c) fail("matrix: entries do not match the shape");
    std::vector<Rational> entries;
    for (const auto& x : e) entries.push_back(parse_rational_value(x));
    return RatMatrix(r, c, std::move(entries));
  }
  if (!v.is_array()) fail("matrix must be a list of rows");
  std::size_t rows = v.size(), cols = rows ? v[0].size() : 0;
  std::vector<Rational> entries;
  for (const auto& row : v) {
    if (!row.is_array() || row.size() != cols) fail("matrix rows must have equal length");
    for (const auto& x : row) entries.push_back(parse_rational_value(x));
  }
  return RatMatrix(rows, cols, std::move(entries));
}

json matrix_to_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

QuiverRep parse_quiver(const json& doc, const fs::path& base) {
  if (!doc.is_object()) fail("quiver: expected an object");
  Scope scope{base, {}};
  if (auto it = doc.find("pairs"); it != doc.end()) {
    if (!it->is_object()) fail("quiver: 'pairs' must map names to pair specs");
    for (auto p = it->begin(); p != it->end(); ++p) scope.named[p.key()] = parse_pair(p.value(), scope);
  }
  const json& objs = field(doc, "objects", "quiver");
  if (!objs.is_array()) fail("quiver: 'objects' must be a list");
  std::vector<QObject> objects;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < objs.size(); ++i) {
    const json& o = objs[i];
    std::string where = "objects[" + std::to_string(i) + "]";
    std::string id = string_field(o, "id", where);
    int degree = int_field(o, "degree", 0, where);
    int twist = int_field(o, "twist", 0, where);
    if (o.contains("pair")) {
      objects.push_back(QObject::geometric_object(id, parse_pair(o["pair"], scope), degree, twist));
    } else if (o.contains("dim")) {
      if (!o["dim"].is_number_unsigned()) fail(where + ": 'dim' must be a nonnegative integer");
      objects.push_back(QObject::abstract_object(id, o["dim"].get<std::size_t>(), degree, twist));
    } else {
      fail(where + ": needs 'pair' or 'dim'");
    }
    index[id] = i;
  }
  std::vector<QMorphism> morphisms;
  if (auto it = doc.find("morphisms"); it != doc.end()) {
    if (!it->is_array()) fail("quiver: 'morphisms' must be a list");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& m = (*it)[i];
      std::string where = "morphisms[" + std::to_string(i) + "]";
      std::string id = string_field(m, "id", where);
      std::string kind = string_field(m, "kind", where);
      std::string src = string_field(m, "source", where);
      std::string tgt = string_field(m, "target", where);
      if (!index.count(src) || !index.count(tgt)) fail(where + ": unknown endpoint");
      MorphismKind k;
      if (kind == "a") {
        k = MorphismKind::A;
      } else if (kind == "b") {
        k = MorphismKind::B;
      } else if (kind == "c") {
        k = MorphismKind::C;
      } else {
        fail(where + ": 'kind' must be a, b or c");
      }
      if (m.contains("matrix")) {
        morphisms.push_back(QMorphism::with_matrix(id, k, src, tgt, parse_matrix(m["matrix"])));
      } else if (k == MorphismKind::A) {
        const QObject& target = objects[index[tgt]];
        if (!target.geometric()) fail(where + ": abstract endpoints need a matrix");
        morphisms.push_back(QMorphism::with_zigzag(id, src, tgt, parse_zigzag(field(m, "zigzag", where), scope, target.pair)));
      } else if (k == MorphismKind::B) {
        morphisms.push_back(QMorphism::with_triple(id, src, tgt, parse_triple(field(m, "triple", where), scope)));
      } else {
        morphisms.push_back(QMorphism::tate(id, src, tgt));
      }
    }
  }
  try {
    return QuiverRep(std::move(objects), std::move(morphisms));
  } catch (const QuiverError& e) {
    fail(std::string("quiver: ") + e.what());
  } catch (const TopologyError& e) {
    fail(std::string("quiver: ") + e.what());
  }
}

QuiverRep load_quiver(const fs::path& path) {
  json doc = read_json(path);
  try {
    return parse_quiver(doc, path.parent_path());
  } catch (const InputError& e) {
    fail(path.string() + ": " + e.what());
  } catch (const json::exception& e) {
    fail(path.string() + ": " + e.what());
  }
}

ModuleOverCommutant parse_module(const std::string& spec, const QuiverRep& rep, const fs::path& base) {
  Commutant c = commutant(rep);
  if (spec == "regular") return regular_module(c);
  if (spec == "zero") return ModuleOverCommutant{0, std::vector<RatMatrix>(c.dim(), RatMatrix(0, 0))};
  if (spec.rfind("object:", 0) == 0) {
    std::string id = spec.substr(7);
    if (!rep.has_object(id)) fail("module: unknown object '" + id + "'");
    return module_from_object(c, id);
  }
  fs::path path = resolve(base, spec);
  json doc = read_json(path);
  ModuleOverCommutant m;
  m.dim = field(doc, "dim", path.string()).get<std::size_t>();
  const json& action = field(doc, "action", path.string());
  if (!action.is_array() || action.size() != c.dim())
    fail(path.string() + ": 'action' needs one matrix per commutant basis element (" + std::to_string(c.dim()) + ")");
  for (const auto& a : action) m.action.push_back(parse_matrix(a));
  if (std::string v = module_violation(m, c); !v.empty()) fail(path.string() + ": not a module: " + v);
  return m;
}

Manifest load_manifest(const fs::path& path) {
  json doc = read_json(path);
  const std::string where = path.string();
  Manifest m;
  m.version = string_field(doc, "version", where);
  if (m.version != "1") fail(where + ": unsupported manifest version '" + m.version + "'");
  const json& entries = field(doc, "entries", where);
  if (!entries.is_array()) fail(where + ": 'entries' must be a list");
  std::set<std::string> names;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const json& e = entries[i];
    std::string ew = where + ": entries[" + std::to_string(i) + "]";
    ManifestEntry entry;
    entry.name = string_field(e, "name", ew);
    if (!names.insert(entry.name).second) fail(ew + ": duplicate name '" + entry.name + "'");
    entry.kind = string_field(e, "kind", ew);
    if (entry.kind != "pair" && entry.kind != "map" && entry.kind != "quiver" && entry.kind != "random")
      fail(ew + ": unknown kind '" + entry.kind + "'");
    if (entry.kind != "random") {
      entry.path = resolve(path.parent_path(), string_field(e, "path", ew));
      if (!fs::exists(entry.path)) fail(ew + ": missing file " + entry.path.string());
    }
    entry.params = e.value("params", json::object());
    m.entries.push_back(std::move(entry));
  }
  return m;
}

std::string matrix_value(const RatMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " " + m.str();
}

std::string vector_value(const std::vector<Rational>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + to_string(v[i]);
  return out + "]";
}

}  // namespace noriq::cli
