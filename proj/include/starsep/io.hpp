#pragma once

#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "starsep/graph.hpp"
#include "starsep/weights.hpp"

namespace starsep {

struct GraphFile {
  Graph graph;
  std::optional<WeightFn> weights;
};

namespace detail {

struct Rational {
  std::int64_t num, den;
};

inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      std::int64_t n = std::stoll(text, &used);
      if (used != text.size()) throw InputError("bad weight '" + text + "'");
      return {n, 1};
    }
    std::string a = text.substr(0, slash), b = text.substr(slash + 1);
    std::int64_t n = std::stoll(a, &used);
    if (used != a.size()) throw InputError("bad weight '" + text + "'");
    std::int64_t d = std::stoll(b, &used);
    if (used != b.size() || d <= 0) throw InputError("bad weight '" + text + "'");
    return {n, d};
  } catch (const std::logic_error&) {
    throw InputError("bad weight '" + text + "'");
  }
}

inline WeightFn weights_from_json(const Graph& g, const nlohmann::json& arr) {
  if (!arr.is_array() || static_cast<int>(arr.size()) != g.capacity())
    throw InputError("weights must be an array with one entry per vertex");
  bool exact = true;
  for (const auto& x : arr)
    if (x.is_number_float()) exact = false;
    else if (!x.is_string() && !x.is_number_integer()) throw InputError("weights must be numbers or \"p/q\" strings");
  if (!exact) {
    std::vector<double> values;
    for (const auto& x : arr) {
      if (x.is_string()) {
        Rational r = parse_rational(x.get<std::string>());
        values.push_back(static_cast<double>(r.num) / static_cast<double>(r.den));
      } else {
        values.push_back(x.get<double>());
      }
    }
    return WeightFn::real(g, std::move(values));
  }
  std::vector<Rational> parts;
  std::int64_t den = 1;
  for (const auto& x : arr) {
    Rational r = x.is_string() ? parse_rational(x.get<std::string>()) : Rational{x.get<std::int64_t>(), 1};
    std::int64_t g0 = std::gcd(r.num, r.den);
    if (g0 > 1) r = {r.num / g0, r.den / g0};
    den = std::lcm(den, r.den);
    if (den > (std::int64_t{1} << 40)) throw CapacityError("weight denominators too large");
    parts.push_back(r);
  }
  std::vector<std::int64_t> num;
  for (const auto& r : parts) num.push_back(r.num * (den / r.den));
  return WeightFn::exact(g, std::move(num), den);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace detail

/// {"n": int, "edges": [[u,v],...], "weights": optional [...]}; weights are
/// floats or exact "p/q" strings.
inline GraphFile parse_edge_list_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
    throw InputError("edge-list JSON needs an integer field \"n\"");
  int n = doc["n"].get<int>();
  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw InputError("\"edges\" must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
        throw InputError("each edge must be a pair of integers");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  }
  GraphFile out{Graph::from_edges(n, edges), std::nullopt};
  if (doc.contains("weights") && !doc["weights"].is_null()) out.weights = detail::weights_from_json(out.graph, doc["weights"]);
  return out;
}

inline std::string to_edge_list_json(const Graph& g) {
  nlohmann::json doc;
  doc["n"] = g.capacity();
  doc["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) doc["edges"].push_back({u, v});
  return doc.dump();
}

inline Graph parse_graph6(std::string text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.pop_back();
  if (text.rfind(">>graph6<<", 0) == 0) text = text.substr(10);
  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= text.size()) throw InputError("graph6 string truncated");
    int c = static_cast<unsigned char>(text[pos++]);
    if (c < 63 || c > 126) throw InputError("invalid graph6 character");
    return c - 63;
  };
  long n = next();
  if (n == 63) {
    n = 0;
    int first = next();
    if (first == 63) {
      for (int i = 0; i < 6; ++i) n = (n << 6) | next();
    } else {
      n = first;
      for (int i = 0; i < 2; ++i) n = (n << 6) | next();
    }
  }
  if (n > max_vertices) throw CapacityError("graph6 graph has " + std::to_string(n) + " vertices");
  std::vector<Edge> edges;
  int bits = 0, word = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      if (bits == 0) {
        word = next();
        bits = 6;
      }
      --bits;
      if ((word >> bits) & 1) edges.emplace_back(u, v);
    }
  if (pos != text.size()) throw InputError("trailing characters after graph6 data");
  return Graph::from_edges(static_cast<int>(n), edges);
}

/// graph6 encoding of the graph on 0..capacity()-1.
inline std::string to_graph6(const Graph& g) {
  const int n = g.capacity();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int bits = 0, word = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      word = (word << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(word + 63));
        bits = word = 0;
      }
    }
  if (bits > 0) out.push_back(static_cast<char>((word << (6 - bits)) + 63));
  return out;
}

/// DIMACS .col: "p edge n m" then "e u v" lines with 1-based vertices.
inline Graph parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string format;
      long m = 0;
      if (!(ls >> format >> n >> m)) throw InputError("bad DIMACS problem line");
    } else if (tag == "e") {
      int u = 0, v = 0;
      if (n < 0 || !(ls >> u >> v)) throw InputError("bad DIMACS edge line");
      if (u > v) std::swap(u, v);
      Edge e{u - 1, v - 1};
      if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
    } else {
      throw InputError("unknown DIMACS line '" + tag + "'");
    }
  }
  if (n < 0) throw InputError("DIMACS input has no problem line");
  return Graph::from_edges(n, edges);
}

/// Dispatch on extension: .json, .g6/.graph6, .col/.dimacs.
inline GraphFile load_graph_file(const std::string& path) {
  std::string text = detail::read_file(path);
  auto ends_with = [&](const std::string& suffix) {
    return path.size() >= suffix.size() && path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends_with(".g6") || ends_with(".graph6")) return {parse_graph6(text), std::nullopt};
  if (ends_with(".col") || ends_with(".dimacs")) return {parse_dimacs(text), std::nullopt};
  return parse_edge_list_json(text);
}

inline WeightFn load_weights(const Graph& g, const std::string& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(detail::read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (doc.is_object() && doc.contains("weights")) doc = doc["weights"];
  return detail::weights_from_json(g, doc);
}

}  // namespace starsep
