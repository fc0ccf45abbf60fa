#include "facering/io.hpp"

#include <cstdio>

#include <json.hpp>

#include "facering/errors.hpp"

namespace facering {

using nlohmann::ordered_json;

std::string to_document(const SimplicialComplex& complex) {
  ordered_json doc;
  doc["n"] = complex.n();
  ordered_json facets = ordered_json::array();
  for (Face f : complex.facets()) {
    if (f != 0) facets.push_back(vertices_of(f));
  }
  doc["facets"] = facets;
  if (complex.is_void()) doc["void"] = true;
  return doc.dump();
}

std::string to_document(const Graph& g) {
  ordered_json doc;
  doc["n"] = g.n();
  ordered_json edges = ordered_json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  doc["edges"] = edges;
  return doc.dump();
}

namespace {

int read_n(const ordered_json& doc) {
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    throw ParseError("document needs an integer field \"n\"");
  }
  const auto n = doc["n"].get<long long>();
  if (n < 1 || n > kMaxVertices) {
    throw ParseError("\"n\" must lie in [1," + std::to_string(kMaxVertices) + "]");
  }
  return static_cast<int>(n);
}

std::vector<int> read_increasing(const ordered_json& row, int n, const char* what) {
  if (!row.is_array()) throw ParseError(std::string(what) + " entries must be arrays");
  std::vector<int> out;
  for (const auto& x : row) {
    if (!x.is_number_integer()) throw ParseError(std::string(what) + " entries must be integers");
    const auto v = x.get<long long>();
    if (v < 1 || v > n) {
      throw ParseError("vertex " + std::to_string(v) + " outside [1," + std::to_string(n) + "]");
    }
    if (!out.empty() && v <= out.back()) {
      throw ParseError(std::string(what) + " entries must be strictly increasing");
    }
    out.push_back(static_cast<int>(v));
  }
  return out;
}

}  // namespace

Instance parse_document(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("document must be an object");
  const bool has_facets = doc.contains("facets");
  const bool has_edges = doc.contains("edges");
  if (has_facets == has_edges) {
    throw ParseError("document needs exactly one of \"facets\" or \"edges\"");
  }
  const int n = read_n(doc);
  if (has_edges) {
    if (!doc["edges"].is_array()) throw ParseError("\"edges\" must be an array");
    Graph g = Graph::empty(n);
    for (const auto& row : doc["edges"]) {
      const auto e = read_increasing(row, n, "edge");
      if (e.size() != 2) throw ParseError("edges must have exactly two endpoints");
      g.add_edge(e[0], e[1]);
    }
    return g;
  }
  if (!doc["facets"].is_array()) throw ParseError("\"facets\" must be an array");
  bool is_void = false;
  if (doc.contains("void")) {
    if (!doc["void"].is_boolean()) throw ParseError("\"void\" must be a boolean");
    is_void = doc["void"].get<bool>();
  }
  if (is_void) {
    if (!doc["facets"].empty()) throw ParseError("a void complex has no facets");
    return SimplicialComplex::void_complex(n);
  }
  std::vector<std::vector<int>> facets;
  for (const auto& row : doc["facets"]) facets.push_back(read_increasing(row, n, "facet"));
  if (facets.empty()) return SimplicialComplex::irrelevant(n);
  return SimplicialComplex::from_vertex_lists(n, facets);
}

namespace {

std::string fnv1a(const std::string& text) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(hash));
  return buffer;
}

}  // namespace

std::string digest(const SimplicialComplex& complex) { return fnv1a(to_document(complex)); }
std::string digest(const Graph& g) { return fnv1a(to_document(g)); }

std::string table_to_document(const GradedBettiTable& table) {
  ordered_json doc;
  doc["n"] = table.n();
  doc["field"] = table.field().to_string();
  ordered_json entries = ordered_json::array();
  for (const auto& [key, value] : table.entries()) {
    entries.push_back({key.first, key.second, value});
  }
  doc["entries"] = entries;
  return doc.dump();
}

}  // namespace facering
