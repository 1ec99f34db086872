#include "kslogos/scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "kslogos/error.hpp"

namespace kslogos {

using nlohmann::json;

namespace {

[[noreturn]] void field_error(const std::string& path, const std::string& what) {
  throw Error(path + ": " + what);
}

void reject_unknown(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) field_error(path, "expected an object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& item : obj.items()) {
    if (!ok.count(item.key())) field_error(path.empty() ? item.key() : path + "." + item.key(), "unknown field");
  }
}

std::string join_path(const std::string& base, const std::string& key) {
  return base.empty() ? key : base + "." + key;
}

std::string index_path(const std::string& base, std::size_t k) {
  return base + "[" + std::to_string(k) + "]";
}

Scalar number_at(const json& node, const std::string& path, Field field) {
  Scalar value;
  try {
    if (node.is_number_integer()) {
      value = Scalar(Rational(mpz_class(node.dump(), 10)));
    } else if (node.is_string()) {
      value = parse_scalar(node.get<std::string>());
    } else {
      field_error(path, "expected an exact number as a string or integer, got " + node.dump());
    }
  } catch (const Error& e) {
    if (std::string(e.what()).rfind(path, 0) == 0) throw;
    field_error(path, e.what());
  }
  if (field == Field::rational && !value.is_real()) {
    field_error(path, "complex entry \"" + to_string(value) + "\" in a rational scenario");
  }
  return value;
}

int id_at(const json& node, const std::string& path) {
  if (!node.is_number_integer()) field_error(path, "expected an integer id");
  return node.get<int>();
}

Vector vector_at(const json& node, const std::string& path, Field field) {
  if (!node.is_array() || node.empty()) field_error(path, "expected a nonempty array of numbers");
  std::vector<Scalar> entries;
  for (std::size_t k = 0; k < node.size(); ++k) entries.push_back(number_at(node[k], index_path(path, k), field));
  return Vector(std::move(entries));
}

State state_at(const json& node, const std::string& path, std::size_t dim, Field field) {
  reject_unknown(node, path, {"pure", "density"});
  if (node.contains("pure") == node.contains("density")) {
    field_error(path, "expected exactly one of \"pure\" or \"density\"");
  }
  try {
    if (node.contains("pure")) {
      Vector psi = vector_at(node["pure"], join_path(path, "pure"), field);
      if (psi.dim() != dim) {
        field_error(join_path(path, "pure"), "state has dimension " + std::to_string(psi.dim()) +
                                                 ", expected " + std::to_string(dim));
      }
      if (psi.is_zero()) field_error(join_path(path, "pure"), "zero state vector");
      return psi;
    }
    const std::string dpath = join_path(path, "density");
    const json& rows = node["density"];
    if (!rows.is_array() || rows.size() != dim) {
      field_error(dpath, "expected " + std::to_string(dim) + " rows");
    }
    std::vector<Scalar> entries;
    for (std::size_t i = 0; i < dim; ++i) {
      const std::string rpath = index_path(dpath, i);
      if (!rows[i].is_array() || rows[i].size() != dim) {
        field_error(rpath, "expected " + std::to_string(dim) + " entries");
      }
      for (std::size_t j = 0; j < dim; ++j) entries.push_back(number_at(rows[i][j], index_path(rpath, j), field));
    }
    return DensityOperator(Operator(dim, std::move(entries)));
  } catch (const Error& e) {
    if (std::string(e.what()).rfind(path, 0) == 0) throw;
    field_error(path, e.what());
  }
}

json number_json(const Scalar& s) { return to_string(s); }

json state_json(const State& state) {
  json out = json::object();
  if (const auto* psi = std::get_if<Vector>(&state)) {
    json coords = json::array();
    for (const auto& s : psi->entries()) coords.push_back(number_json(s));
    out["pure"] = std::move(coords);
    return out;
  }
  const Operator& op = std::get<DensityOperator>(state).op();
  json rows = json::array();
  for (std::size_t i = 0; i < op.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < op.dim(); ++j) row.push_back(number_json(op(i, j)));
    rows.push_back(std::move(row));
  }
  out["density"] = std::move(rows);
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(std::string_view text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    for (std::size_t k = 0; k + 1 < upto; ++k)
      if (text[k] == '\n') ++line;
    throw Error(origin + ":" + std::to_string(line) + ": JSON syntax error: " + e.what());
  }
}

}  // namespace

// ---------------------------------------------------------------- Scenario

std::vector<int> Scenario::ids() const {
  if (frame) return frame->ids();
  const auto span = graph.ids();
  return {span.begin(), span.end()};
}

std::string Scenario::node_name(int id) const {
  if (frame) return frame->name(id);
  const auto it = labels.find(id);
  return it != labels.end() ? it->second : "n" + std::to_string(id);
}

const Frame& Scenario::require_frame(std::string_view command) const {
  if (!frame) {
    throw Error(std::string(command) + " needs a ray frame; scenario \"" + name +
                "\" is an abstract graph without quantum backing");
  }
  return *frame;
}

Scenario parse_scenario(std::string_view text, const std::string& origin) {
  const json doc = parse_json(text, origin);
  try {
    reject_unknown(doc, "", {"name", "description", "field", "dimension", "rays", "bases", "nodes",
                             "edges", "state", "valuation"});
    Scenario s;
    if (doc.contains("name")) {
      if (!doc["name"].is_string()) field_error("name", "expected a string");
      s.name = doc["name"].get<std::string>();
    }
    if (doc.contains("description")) {
      if (!doc["description"].is_string()) field_error("description", "expected a string");
      s.description = doc["description"].get<std::string>();
    }
    if (!doc.contains("field") || !doc["field"].is_string()) {
      field_error("field", "required: \"rational\" or \"gaussian-rational\"");
    }
    const auto field = doc["field"].get<std::string>();
    if (field == "rational") {
      s.field = Field::rational;
    } else if (field == "gaussian-rational") {
      s.field = Field::gaussian_rational;
    } else {
      field_error("field", "unknown field tag \"" + field + "\"");
    }

    const bool has_rays = doc.contains("rays");
    const bool has_nodes = doc.contains("nodes");
    if (has_rays == has_nodes) field_error("rays", "expected exactly one of \"rays\" or \"nodes\"");

    if (has_rays) {
      if (doc.contains("edges")) field_error("edges", "edges are derived from orthogonality in a ray scenario");
      if (!doc.contains("dimension") || !doc["dimension"].is_number_unsigned() || doc["dimension"].get<int>() < 1) {
        field_error("dimension", "required positive integer");
      }
      const auto dim = doc["dimension"].get<std::size_t>();
      const json& rays = doc["rays"];
      if (!rays.is_array()) field_error("rays", "expected an array");
      std::vector<Ray> parsed;
      for (std::size_t k = 0; k < rays.size(); ++k) {
        const std::string path = index_path("rays", k);
        reject_unknown(rays[k], path, {"id", "label", "coords"});
        if (!rays[k].contains("id")) field_error(path + ".id", "required");
        if (!rays[k].contains("coords")) field_error(path + ".coords", "required");
        Ray r;
        r.id = id_at(rays[k]["id"], path + ".id");
        if (rays[k].contains("label")) {
          if (!rays[k]["label"].is_string()) field_error(path + ".label", "expected a string");
          r.label = rays[k]["label"].get<std::string>();
        }
        r.coords = vector_at(rays[k]["coords"], path + ".coords", s.field);
        if (r.coords.dim() != dim) {
          field_error(path + ".coords", "has " + std::to_string(r.coords.dim()) + " entries, dimension is " +
                                            std::to_string(dim));
        }
        parsed.push_back(std::move(r));
      }
      std::optional<std::vector<std::vector<int>>> bases;
      if (doc.contains("bases")) {
        const json& b = doc["bases"];
        if (!b.is_array()) field_error("bases", "expected an array of id arrays");
        bases.emplace();
        for (std::size_t k = 0; k < b.size(); ++k) {
          if (!b[k].is_array()) field_error(index_path("bases", k), "expected an array of ids");
          std::vector<int> ids;
          for (std::size_t j = 0; j < b[k].size(); ++j) ids.push_back(id_at(b[k][j], index_path(index_path("bases", k), j)));
          bases->push_back(std::move(ids));
        }
      }
      try {
        s.frame.emplace(dim, std::move(parsed), std::move(bases));
      } catch (const Error& e) {
        field_error("rays", e.what());
      }
      s.graph = build_graph(*s.frame, ExecutionPolicy::sequential);
    } else {
      if (doc.contains("dimension")) field_error("dimension", "only meaningful with \"rays\"");
      if (doc.contains("bases")) field_error("bases", "only meaningful with \"rays\"");
      if (doc.contains("state")) field_error("state", "only meaningful with \"rays\"");
      const json& nodes = doc["nodes"];
      if (!nodes.is_array()) field_error("nodes", "expected an array");
      std::vector<int> ids;
      for (std::size_t k = 0; k < nodes.size(); ++k) {
        const std::string path = index_path("nodes", k);
        reject_unknown(nodes[k], path, {"id", "label"});
        if (!nodes[k].contains("id")) field_error(path + ".id", "required");
        const int id = id_at(nodes[k]["id"], path + ".id");
        ids.push_back(id);
        if (nodes[k].contains("label")) {
          if (!nodes[k]["label"].is_string()) field_error(path + ".label", "expected a string");
          s.labels[id] = nodes[k]["label"].get<std::string>();
        }
      }
      std::vector<std::pair<int, int>> edges;
      if (doc.contains("edges")) {
        const json& e = doc["edges"];
        if (!e.is_array()) field_error("edges", "expected an array of [u, v] pairs");
        for (std::size_t k = 0; k < e.size(); ++k) {
          const std::string path = index_path("edges", k);
          if (!e[k].is_array() || e[k].size() != 2) field_error(path, "expected [u, v]");
          edges.emplace_back(id_at(e[k][0], path + "[0]"), id_at(e[k][1], path + "[1]"));
        }
      }
      try {
        s.graph = Graph(std::move(ids), edges);
      } catch (const Error& e) {
        field_error("nodes", e.what());
      }
    }

    if (doc.contains("state")) s.state = state_at(doc["state"], "state", s.frame->dim(), s.field);

    if (doc.contains("valuation")) {
      const json& v = doc["valuation"];
      if (!v.is_object()) field_error("valuation", "expected an object mapping node id to value");
      std::map<int, Rational> values;
      const auto ids = s.ids();
      const std::set<int> known(ids.begin(), ids.end());
      for (const auto& item : v.items()) {
        const std::string path = "valuation." + item.key();
        int id = 0;
        try {
          std::size_t used = 0;
          id = std::stoi(item.key(), &used);
          if (used != item.key().size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
          field_error(path, "key is not an integer id");
        }
        if (!known.count(id)) field_error(path, "unknown node id");
        const Scalar q = number_at(item.value(), path, Field::rational);
        values.emplace(id, q.real());
      }
      for (int id : ids)
        if (!values.count(id)) field_error("valuation", "missing value for node " + std::to_string(id));
      try {
        s.valuation.emplace(std::move(values), IntensiveValuation::Origin::loaded, "scenario");
      } catch (const Error& e) {
        field_error("valuation", e.what());
      }
    }
    return s;
  } catch (const Error& e) {
    throw Error(origin + ": " + e.what());
  }
}

Scenario load_scenario(const std::filesystem::path& path) {
  return parse_scenario(read_file(path), path.string());
}

std::string write_scenario(const Scenario& s) {
  nlohmann::ordered_json out;
  if (!s.name.empty()) out["name"] = s.name;
  if (!s.description.empty()) out["description"] = s.description;
  out["field"] = s.field == Field::rational ? "rational" : "gaussian-rational";
  if (s.frame) {
    out["dimension"] = s.frame->dim();
    auto rays = nlohmann::ordered_json::array();
    for (const auto& r : s.frame->rays()) {
      nlohmann::ordered_json ray;
      ray["id"] = r.id;
      if (r.label) ray["label"] = *r.label;
      auto coords = nlohmann::ordered_json::array();
      for (const auto& c : r.coords.entries()) coords.push_back(to_string(c));
      ray["coords"] = std::move(coords);
      rays.push_back(std::move(ray));
    }
    out["rays"] = std::move(rays);
    if (const auto& bases = s.frame->declared_bases()) out["bases"] = *bases;
  } else {
    auto nodes = nlohmann::ordered_json::array();
    for (int id : s.graph.ids()) {
      nlohmann::ordered_json node;
      node["id"] = id;
      if (const auto it = s.labels.find(id); it != s.labels.end()) node["label"] = it->second;
      nodes.push_back(std::move(node));
    }
    out["nodes"] = std::move(nodes);
    auto edges = nlohmann::ordered_json::array();
    for (const auto& [i, j] : s.graph.edges()) edges.push_back({s.graph.id(i), s.graph.id(j)});
    out["edges"] = std::move(edges);
  }
  if (s.state) out["state"] = state_json(*s.state);
  if (s.valuation) {
    nlohmann::ordered_json values = nlohmann::ordered_json::object();
    for (const auto& [id, q] : s.valuation->values()) values[std::to_string(id)] = to_string(q);
    out["valuation"] = std::move(values);
  }
  return out.dump(2) + "\n";
}

// ---------------------------------------------------------------- command arguments

State parse_state_argument(std::string_view arg, std::size_t dim, Field field) {
  const std::string text(arg);
  if (text == "mixed") return DensityOperator::maximally_mixed(dim);
  if (!text.empty() && text.front() == '{') return state_at(parse_json(text, "--state"), "state", dim, field);
  if (std::filesystem::is_regular_file(text)) {
    return state_at(parse_json(read_file(text), text), "state", dim, field);
  }
  if (text.find(',') != std::string::npos || dim == 1) {
    std::vector<Scalar> coords;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) coords.push_back(parse_scalar(item));
    if (coords.size() != dim) {
      throw Error("--state has " + std::to_string(coords.size()) + " coordinates, expected " +
                  std::to_string(dim));
    }
    Vector psi(std::move(coords));
    if (field == Field::rational && !psi.is_real()) throw Error("--state: complex state in a rational scenario");
    if (psi.is_zero()) throw Error("--state: zero state vector");
    return psi;
  }
  throw Error("--state: no such file and not a state literal: " + text);
}

namespace {

RationalUnitary parse_one_unitary(const std::string& text, std::size_t dim) {
  auto split = [](const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(item);
    return parts;
  };
  auto coordinate = [&](const std::string& s) -> std::size_t {
    const int k = std::stoi(s);
    if (k < 1 || static_cast<std::size_t>(k) > dim) throw Error("--unitary: coordinate " + s + " out of range");
    return static_cast<std::size_t>(k - 1);
  };

  if (text == "identity" || text == "id") return RationalUnitary::identity(dim);
  if (text == "rot345") return RationalUnitary::givens(dim, 0, 1, Scalar(Rational(3, 5)), Scalar(Rational(4, 5)));
  if (text.rfind("perm:", 0) == 0) {
    std::vector<std::size_t> perm;
    for (const auto& p : split(text.substr(5), ',')) perm.push_back(coordinate(p));
    if (perm.size() != dim) throw Error("--unitary: permutation needs " + std::to_string(dim) + " entries");
    return RationalUnitary::permutation(perm);
  }
  if (text.rfind("givens:", 0) == 0) {
    const auto parts = split(text.substr(7), ':');
    if (parts.size() != 4) throw Error("--unitary: expected givens:I:J:C:S");
    return RationalUnitary::givens(dim, coordinate(parts[0]), coordinate(parts[1]), parse_scalar(parts[2]),
                                   parse_scalar(parts[3]));
  }

  json doc;
  if (!text.empty() && (text.front() == '[' || text.front() == '{')) {
    doc = parse_json(text, "--unitary");
  } else if (std::filesystem::is_regular_file(text)) {
    doc = parse_json(read_file(text), text);
  } else {
    throw Error("--unitary: unrecognized unitary \"" + text + "\"");
  }
  if (doc.is_object()) {
    reject_unknown(doc, "unitary", {"unitary"});
    doc = doc["unitary"];
  }
  if (!doc.is_array() || doc.size() != dim) throw Error("--unitary: expected a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
  std::vector<Scalar> entries;
  for (std::size_t i = 0; i < dim; ++i) {
    if (!doc[i].is_array() || doc[i].size() != dim) throw Error("--unitary: row " + std::to_string(i) + " has the wrong length");
    for (std::size_t j = 0; j < dim; ++j) entries.push_back(number_at(doc[i][j], "unitary[" + std::to_string(i) + "][" + std::to_string(j) + "]", Field::gaussian_rational));
  }
  return RationalUnitary(Operator(dim, std::move(entries)));
}

}  // namespace

RationalUnitary parse_unitary_argument(std::string_view arg, std::size_t dim) {
  const std::string text(arg);
  if (!text.empty() && (text.front() == '[' || text.front() == '{')) return parse_one_unitary(text, dim);
  RationalUnitary u = RationalUnitary::identity(dim);
  std::stringstream ss(text);
  std::string item;
  bool any = false;
  while (std::getline(ss, item, ';')) {
    u = u * parse_one_unitary(item, dim);
    any = true;
  }
  if (!any) throw Error("--unitary: empty argument");
  return u;
}

}  // namespace kslogos
