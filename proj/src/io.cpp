#include "chinampa/io.hpp"

#include <fstream>
#include <sstream>

#include "chinampa/errors.hpp"

namespace chinampa {

namespace {

int as_int(const Json& value, const char* what) {
  if (!value.is_number_integer()) throw Error(ErrorKind::parse, std::string(what) + " must be an integer");
  return value.get<int>();
}

}  // namespace

Network network_from_json(const Json& doc) {
  if (!doc.is_object()) throw Error(ErrorKind::parse, "network must be a JSON object");
  std::vector<VertexId> vertices;
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) throw Error(ErrorKind::parse, "network needs a vertices array");
  for (const Json& v : doc["vertices"]) vertices.push_back(as_int(v, "vertex id"));

  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw Error(ErrorKind::parse, "edges must be an array");
    for (const Json& e : doc["edges"]) {
      if (!e.is_object() || !e.contains("src") || !e.contains("dst"))
        throw Error(ErrorKind::parse, "edge needs src and dst");
      Edge edge{as_int(e["src"], "src"), as_int(e["dst"], "dst"), 1, 1};
      if (e.contains("time")) edge.travel_time = as_int(e["time"], "time");
      if (e.contains("intensity")) edge.intensity = as_int(e["intensity"], "intensity");
      edges.push_back(edge);
    }
  }

  std::map<VertexId, int> thresholds;
  if (doc.contains("thresholds")) {
    if (!doc["thresholds"].is_object()) throw Error(ErrorKind::parse, "thresholds must be an object");
    for (auto it = doc["thresholds"].begin(); it != doc["thresholds"].end(); ++it) {
      try {
        std::size_t used = 0;
        const int v = std::stoi(it.key(), &used);
        if (used != it.key().size()) throw std::invalid_argument(it.key());
        thresholds[v] = as_int(it.value(), "threshold");
      } catch (const std::logic_error&) {
        throw Error(ErrorKind::parse, "threshold key '" + it.key() + "' is not a vertex id");
      }
    }
  }

  Network network(std::move(vertices), std::move(edges), std::move(thresholds));
  const auto problems = validate(network);
  if (!problems.empty()) throw Error(ErrorKind::parse, problems.front());
  return network;
}

Json network_to_json(const Network& network) {
  Json doc;
  doc["vertices"] = network.vertices();
  doc["edges"] = Json::array();
  for (const Edge& e : network.edges())
    doc["edges"].push_back({{"src", e.src}, {"dst", e.dst}, {"time", e.travel_time}, {"intensity", e.intensity}});
  doc["thresholds"] = Json::object();
  for (VertexId v : network.vertices()) doc["thresholds"][std::to_string(v)] = network.threshold(v);
  return doc;
}

StvSet stimuli_from_json(const Json& doc) {
  if (!doc.is_array()) throw Error(ErrorKind::parse, "stimuli must be an array of [vertex,time] pairs");
  StvSet stimuli;
  for (const Json& pair : doc) {
    if (!pair.is_array() || pair.size() != 2) throw Error(ErrorKind::parse, "stimulus must be a [vertex,time] pair");
    stimuli.insert({as_int(pair[0], "vertex"), as_int(pair[1], "time")});
  }
  return stimuli;
}

Json stimuli_to_json(const StvSet& stimuli) {
  Json doc = Json::array();
  for (const Stv& s : stimuli) doc.push_back({s.vertex, s.time});
  return doc;
}

Json activation_to_json(const ActivationDiagram& diagram) {
  Json doc;
  doc["primary"] = stimuli_to_json(diagram.primaries());
  doc["secondary"] = stimuli_to_json(diagram.secondaries());
  doc["profit"] = profit(diagram);
  doc["redundant"] = is_redundant(diagram);
  doc["connected"] = is_connected(diagram);
  return doc;
}

Json factorization_to_json(const Factorization& factorization) {
  Json doc = Json::array();
  for (const FactorNode& n : factorization.nodes) {
    Json node;
    node["t"] = n.pyramid.t;
    node["lP"] = n.pyramid.lp;
    node["rP"] = n.pyramid.rp;
    node["parent"] = n.parent ? Json(*n.parent) : Json(nullptr);
    doc.push_back(node);
  }
  return doc;
}

Factorization factorization_from_json(const Json& doc) {
  if (!doc.is_array()) throw Error(ErrorKind::parse, "factorization must be an array");
  Factorization f;
  for (const Json& node : doc) {
    if (!node.is_object()) throw Error(ErrorKind::parse, "factorization node must be an object");
    FactorNode n;
    n.pyramid = {as_int(node.at("t"), "t"), as_int(node.at("lP"), "lP"), as_int(node.at("rP"), "rP")};
    if (!node.at("parent").is_null()) n.parent = static_cast<std::size_t>(as_int(node.at("parent"), "parent"));
    f.nodes.push_back(n);
  }
  return f;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, path + ": " + e.what());
  }
}

Network read_network_file(const std::string& path) { return network_from_json(read_json_file(path)); }

StvSet read_stimuli_file(const std::string& path) { return stimuli_from_json(read_json_file(path)); }

}  // namespace chinampa
