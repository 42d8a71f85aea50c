#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "epg/core.hpp"

namespace epg {

using Json = nlohmann::json;

// Graph document: { "vertices": [...], "edges": [[a, b], ...] }
// Representation document: { "paths": { label: [[col, row], ...], ... } }

inline Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back(Json::array({a, b}));
  return Json{{"vertices", g.vertices()}, {"edges", std::move(edges)}};
}

inline Graph graph_from_json(const Json& doc) {
  try {
    Graph g;
    for (const auto& v : doc.at("vertices")) g.add_vertex(v.get<std::string>());
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::ParseError, "edge must be a pair of labels");
      if (!g.add_edge(e[0].get<std::string>(), e[1].get<std::string>())) {
        throw Error(ErrorCode::InvalidGraph, "duplicate edge " + e.dump());
      }
    }
    return g;
  } catch (const Json::exception& ex) {
    throw Error(ErrorCode::ParseError, ex.what());
  }
}

inline Json path_to_json(const GridPath& p) {
  Json pts = Json::array();
  for (const auto& q : p.points()) pts.push_back(Json::array({q.col, q.row}));
  return pts;
}

inline std::vector<GridPoint> points_from_json(const Json& pts) {
  std::vector<GridPoint> out;
  for (const auto& q : pts) {
    if (!q.is_array() || q.size() != 2) throw Error(ErrorCode::ParseError, "point must be [col, row]");
    out.push_back({q[0].get<Coord>(), q[1].get<Coord>()});
  }
  return out;
}

inline Json representation_to_json(const Representation& r) {
  Json paths = Json::object();
  for (const auto& [label, path] : r) paths[label] = path_to_json(path);
  return Json{{"paths", std::move(paths)}};
}

/// Strict parse: any malformed path aborts with the underlying path error.
inline Representation representation_from_json(const Json& doc) {
  try {
    Representation r;
    for (const auto& [label, pts] : doc.at("paths").items()) {
      r.emplace(label, canonicalize_path(points_from_json(pts)));
    }
    return r;
  } catch (const Json::exception& ex) {
    throw Error(ErrorCode::ParseError, ex.what());
  }
}

/// Lenient parse used by validation: well-formed paths are kept and the
/// labels of the rest are collected.
struct LoadedRepresentation {
  Representation paths;
  std::vector<Label> malformed;
};

inline LoadedRepresentation representation_from_json_lenient(const Json& doc) {
  LoadedRepresentation out;
  try {
    for (const auto& [label, pts] : doc.at("paths").items()) {
      try {
        out.paths.emplace(label, canonicalize_path(points_from_json(pts)));
      } catch (const Error&) {
        out.malformed.push_back(label);
      } catch (const Json::exception&) {
        out.malformed.push_back(label);
      }
    }
  } catch (const Json::exception& ex) {
    throw Error(ErrorCode::ParseError, ex.what());
  }
  return out;
}

inline std::string serialize(const Json& doc) { return doc.dump(); }

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& ex) {
    throw Error(ErrorCode::ParseError, path + ": " + ex.what());
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << text;
}

}  // namespace epg
