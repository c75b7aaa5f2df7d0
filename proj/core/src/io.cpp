#include "antimagic/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"

namespace antimagic::io {

using nlohmann::json;

namespace {

json parse_or_throw(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("malformed JSON");
  return j;
}

int get_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw std::invalid_argument(std::string("missing or non-integer field '") +
                                key + "'");
  return j[key].get<int>();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string join_ints(const std::vector<int>& v, char sep) {
  std::string out;
  for (size_t i = 0; i < v.size(); i++) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

std::string graph_to_json_string(const OrientedGraph& g) {
  json arcs = json::array();
  for (const Arc& a : g.sorted_arcs())
    arcs.push_back({a.tail + 1, a.head + 1});
  json comps = json::array();
  for (int v = 0; v < g.order(); v++)
    comps.push_back(g.component_of()[v] + 1);
  return dump({{"n", g.order()}, {"arcs", arcs}, {"components", comps}});
}

OrientedGraph graph_from_json_string(const std::string& text) {
  json j = parse_or_throw(text);
  int n = get_int(j, "n");
  if (n < 1) throw std::invalid_argument("graph order must be >= 1");
  if (!j.contains("arcs") || !j["arcs"].is_array())
    throw std::invalid_argument("missing 'arcs' array");
  std::vector<Arc> arcs;
  for (const json& e : j["arcs"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw std::invalid_argument("each arc must be a [tail, head] pair");
    int t = e[0].get<int>(), h = e[1].get<int>();
    if (t < 1 || t > n || h < 1 || h > n)
      throw std::invalid_argument("arc endpoint out of range");
    arcs.push_back({t - 1, h - 1});
  }
  OrientedGraph g;
  try {
    g = OrientedGraph::from_arcs(n, arcs);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("invalid arc set: ") + e.what());
  }
  if (j.contains("components")) {
    const json& comps = j["components"];
    if (!comps.is_array() || (int)comps.size() != n)
      throw std::invalid_argument("'components' must list one id per vertex");
    // stored ids may be any consistent renaming of the recomputed partition
    std::unordered_map<int, int> stored_to_real, real_to_stored;
    for (int v = 0; v < n; v++) {
      if (!comps[v].is_number_integer())
        throw std::invalid_argument("component ids must be integers");
      int stored = comps[v].get<int>(), real = g.component_of()[v];
      auto [it1, fresh1] = stored_to_real.emplace(stored, real);
      auto [it2, fresh2] = real_to_stored.emplace(real, stored);
      if (it1->second != real || it2->second != stored)
        throw std::invalid_argument(
            "'components' disagrees with the partition computed from arcs");
    }
  }
  return g;
}

std::string labeling_to_json_string(const Labeling& f) {
  return dump({{"n", f.order()}, {"labels", f.values}});
}

Labeling labeling_from_json_string(const std::string& text) {
  json j = parse_or_throw(text);
  int n = get_int(j, "n");
  if (!j.contains("labels") || !j["labels"].is_array() ||
      (int)j["labels"].size() != n)
    throw std::invalid_argument("'labels' must list one label per vertex");
  Labeling f;
  for (const json& e : j["labels"]) {
    if (!e.is_number_integer())
      throw std::invalid_argument("labels must be integers");
    f.values.push_back(e.get<int>());
  }
  return f;
}

std::string spec_to_json_string(const TwoRegularSpec& spec) {
  json comps = json::array();
  for (const TwoRegularComponent& c : spec.components) {
    json e = {{"n", c.order}, {"m", c.multiplicity}};
    switch (c.kind) {
      case ComponentKind::Unidirectional:
        e["kind"] = "unidirectional";
        break;
      case ComponentKind::Theta:
        e["kind"] = "theta";
        break;
      case ComponentKind::Custom:
        e["kind"] = "custom";
        e["bits"] = orientation_bits_string(c.custom);
        break;
    }
    comps.push_back(e);
  }
  return dump({{"components", comps}});
}

TwoRegularSpec spec_from_json_string(const std::string& text) {
  json j = parse_or_throw(text);
  if (!j.contains("components") || !j["components"].is_array() ||
      j["components"].empty())
    throw std::invalid_argument("'components' must be a non-empty array");
  TwoRegularSpec spec;
  for (const json& e : j["components"]) {
    TwoRegularComponent c;
    c.order = get_int(e, "n");
    c.multiplicity = get_int(e, "m");
    if (!e.contains("kind") || !e["kind"].is_string())
      throw std::invalid_argument("each component needs a 'kind' string");
    std::string kind = e["kind"].get<std::string>();
    if (kind == "unidirectional") {
      c.kind = ComponentKind::Unidirectional;
    } else if (kind == "theta") {
      c.kind = ComponentKind::Theta;
    } else if (kind == "custom") {
      c.kind = ComponentKind::Custom;
      if (!e.contains("bits") || !e["bits"].is_string())
        throw std::invalid_argument("custom components need a 'bits' string");
      c.custom = parse_orientation_bits(e["bits"].get<std::string>());
    } else {
      throw std::invalid_argument("unknown component kind '" + kind + "'");
    }
    spec.components.push_back(std::move(c));
  }
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("invalid spec: ") + e.what());
  }
  return spec;
}

std::string fixture_to_json_string(const FixtureWitness& fw) {
  return dump({{"name", fw.name},
               {"n", fw.n},
               {"orientation_bits", orientation_bits_string(fw.orientation)},
               {"d", fw.d},
               {"labels", fw.labeling.values}});
}

FixtureWitness fixture_from_json_string(const std::string& text) {
  json j = parse_or_throw(text);
  if (!j.contains("name") || !j["name"].is_string())
    throw std::invalid_argument("missing 'name'");
  int n = get_int(j, "n");
  if (!j.contains("orientation_bits") || !j["orientation_bits"].is_string())
    throw std::invalid_argument("missing 'orientation_bits'");
  if (!j.contains("d") || !j["d"].is_array() || j["d"].empty())
    throw std::invalid_argument("missing 'd'");
  if (!j.contains("labels") || !j["labels"].is_array() ||
      (int)j["labels"].size() != n)
    throw std::invalid_argument("'labels' must list one label per vertex");
  FixtureWitness fw;
  fw.name = j["name"].get<std::string>();
  fw.n = n;
  fw.orientation = parse_orientation_bits(j["orientation_bits"].get<std::string>());
  if (fw.orientation.n != n)
    throw std::invalid_argument("'orientation_bits' length disagrees with n");
  std::vector<int> dv;
  for (const json& e : j["d"]) {
    if (!e.is_number_integer())
      throw std::invalid_argument("'d' entries must be integers");
    dv.push_back(e.get<int>());
  }
  (void)DistanceSet(dv);  // range and ordering validation
  fw.d = std::move(dv);
  for (const json& e : j["labels"]) fw.labeling.values.push_back(e.get<int>());
  return fw;
}

std::string weights_csv(const Labeling& f, const WeightReport& rep) {
  std::string out = "vertex,label,weight\n";
  for (size_t v = 0; v < rep.weights.size(); v++)
    out += std::to_string(v + 1) + "," + std::to_string(f.values[v]) + "," +
           std::to_string(rep.weights[v]) + "\n";
  return out;
}

std::string verdict_json_string(const WeightReport& rep,
                                const DistanceSet& d) {
  json w;
  if (rep.witness)
    w = {rep.witness->first + 1, rep.witness->second + 1};
  else
    w = nullptr;
  return dump({{"antimagic", rep.antimagic}, {"d", d.values()}, {"witness", w}});
}

std::string sweep_csv(const SweepResult& res) {
  std::string out = "n,orientation_bits,D,outcome,witness_labels\n";
  for (const SweepRow& row : res.rows) {
    const char* outcome = row.outcome == SweepVerdict::Exists ? "Exists"
                          : row.outcome == SweepVerdict::NotExists
                              ? "NotExists"
                              : "Unknown";
    out += std::to_string(row.n) + "," + row.orientation_bits + ",{" +
           join_ints(row.d, ';') + "}," + outcome + "," +
           join_ints(row.witness_labels, ';') + "\n";
  }
  return out;
}

std::string to_dot(const OrientedGraph& g, const Labeling* f) {
  std::string out = "digraph G {\n";
  for (int v = 0; v < g.order(); v++) {
    out += "  v" + std::to_string(v + 1) + " [label=\"v_" +
           std::to_string(v + 1);
    if (f) out += " [" + std::to_string(f->values[v]) + "]";
    out += "\"];\n";
  }
  for (const Arc& a : g.sorted_arcs())
    out += "  v" + std::to_string(a.tail + 1) + " -> v" +
           std::to_string(a.head + 1) + ";\n";
  out += "}\n";
  return out;
}

std::vector<int> parse_distance_csv(const std::string& text) {
  std::vector<int> out;
  std::string item;
  std::stringstream ss(text);
  if (text.empty()) throw std::invalid_argument("empty distance list");
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    int value;
    try {
      value = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("distance list entry '" + item +
                                  "' is not an integer");
    }
    if (pos != item.size())
      throw std::invalid_argument("distance list entry '" + item +
                                  "' is not an integer");
    if (value < 0)
      throw std::invalid_argument("distances must be non-negative");
    out.push_back(value);
  }
  if (out.empty()) throw std::invalid_argument("empty distance list");
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "' for reading");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace antimagic::io
