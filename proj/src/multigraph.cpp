#include "edgeblocks/multigraph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

#include "edgeblocks/errors.hpp"

namespace edgeblocks {

Multigraph::Multigraph(int n, const std::vector<EdgeSpec>& edges, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
  if (n <= 0) throw graph_format_error("graph must have a non-empty vertex set");
  labels_.resize(n_);
  std::map<std::pair<int, int>, long long> agg;
  for (const auto& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw graph_format_error("edge endpoint out of range: (" + std::to_string(e.u) + "," +
                               std::to_string(e.v) + ")");
    if (e.u == e.v) throw graph_format_error("loop edge at vertex " + std::to_string(e.u));
    if (e.mult < 1) throw graph_format_error("edge multiplicity must be >= 1");
    agg[{std::min(e.u, e.v), std::max(e.u, e.v)}] += e.mult;
  }
  adj_.resize(n_);
  for (const auto& [pair, mult] : agg) {
    edges_.push_back({pair.first, pair.second, mult});
    adj_[pair.first].emplace_back(pair.second, mult);
    adj_[pair.second].emplace_back(pair.first, mult);
    total_mult_ += mult;
  }
  for (auto& row : adj_) std::sort(row.begin(), row.end());
}

long long Multigraph::degree(int v) const {
  if (v < 0 || v >= n_) throw precondition_error("vertex out of range");
  long long d = 0;
  for (const auto& [to, mult] : adj_[v]) d += mult;
  return d;
}

std::string Multigraph::display(int v) const {
  if (v >= 0 && v < n_ && !labels_[v].empty()) return labels_[v];
  return std::to_string(v);
}

VertexSet Multigraph::all_vertices() const {
  std::vector<int> all(n_);
  for (int v = 0; v < n_; ++v) all[v] = v;
  return VertexSet(n_, std::move(all));
}

namespace {

// Flood fill restricted to `allowed` (nullptr = everything).
std::vector<VertexSet> flood_components(const Multigraph& g, const VertexSet* allowed) {
  const int n = g.vertex_count();
  std::vector<char> in(n, allowed == nullptr ? 1 : 0);
  if (allowed != nullptr)
    for (int v : allowed->members()) in[v] = 1;
  std::vector<char> seen(n, 0);
  std::vector<VertexSet> out;
  for (int start = 0; start < n; ++start) {
    if (!in[start] || seen[start]) continue;
    std::vector<int> comp, stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (const auto& [to, mult] : g.adjacency()[v]) {
        (void)mult;
        if (in[to] && !seen[to]) {
          seen[to] = 1;
          stack.push_back(to);
        }
      }
    }
    out.emplace_back(n, std::move(comp));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<VertexSet> components(const Multigraph& g) { return flood_components(g, nullptr); }

std::vector<VertexSet> components_within(const Multigraph& g, const VertexSet& within) {
  return flood_components(g, &within);
}

bool is_connected(const Multigraph& g) { return components(g).size() == 1; }

Contraction contract(const Multigraph& g, const std::vector<VertexSet>& parts) {
  const int n = g.vertex_count();
  std::vector<int> part_of(n, -1);
  for (size_t p = 0; p < parts.size(); ++p) {
    if (parts[p].empty()) throw precondition_error("contraction part must be non-empty");
    for (int v : parts[p].members()) {
      if (v < 0 || v >= n) throw precondition_error("contraction part vertex out of range");
      if (part_of[v] != -1) throw precondition_error("contraction parts overlap at vertex " +
                                                     std::to_string(v));
      part_of[v] = static_cast<int>(p);
    }
  }
  // group key = smallest original vertex, so new ids follow ascending minima
  std::vector<int> group_min(parts.size(), n);
  for (size_t p = 0; p < parts.size(); ++p) group_min[p] = parts[p].members().front();
  std::vector<std::pair<int, int>> keyed;  // (min original vertex, part id or -v-1 for singleton)
  for (size_t p = 0; p < parts.size(); ++p) keyed.emplace_back(group_min[p], static_cast<int>(p));
  for (int v = 0; v < n; ++v)
    if (part_of[v] == -1) keyed.emplace_back(v, -v - 1);
  std::sort(keyed.begin(), keyed.end());

  std::vector<int> old_to_new(n, -1);
  for (size_t id = 0; id < keyed.size(); ++id) {
    int tag = keyed[id].second;
    if (tag >= 0) {
      for (int v : parts[tag].members()) old_to_new[v] = static_cast<int>(id);
    } else {
      old_to_new[-tag - 1] = static_cast<int>(id);
    }
  }

  std::vector<Multigraph::EdgeSpec> new_edges;
  for (const auto& e : g.edges()) {
    int a = old_to_new[e.u], b = old_to_new[e.v];
    if (a == b) continue;  // contraction loop: dropped
    new_edges.push_back({a, b, e.mult});
  }
  return {Multigraph(static_cast<int>(keyed.size()), new_edges), std::move(old_to_new)};
}

CutEdges cut_edges(const Multigraph& g, const VertexSet& side) {
  if (side.empty() || side.full())
    throw precondition_error("cut side must be a non-empty proper subset");
  std::vector<char> in(g.vertex_count(), 0);
  for (int v : side.members()) in[v] = 1;
  CutEdges out;
  for (const auto& e : g.edges()) {
    if (in[e.u] != in[e.v]) {
      out.edges.push_back(e);
      out.total += e.mult;
    }
  }
  return out;
}

long long cut_order(const Multigraph& g, const VertexSet& side) {
  if (side.empty() || side.full())
    throw precondition_error("cut side must be a non-empty proper subset");
  std::vector<char> in(g.vertex_count(), 0);
  for (int v : side.members()) in[v] = 1;
  long long total = 0;
  for (const auto& e : g.edges())
    if (in[e.u] != in[e.v]) total += e.mult;
  return total;
}

Multigraph load_graph(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw graph_format_error(std::string("graph document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw graph_format_error("graph document must be a JSON object");
  if (!doc.contains("vertices") || !doc["vertices"].is_number_integer())
    throw graph_format_error("graph document needs an integer \"vertices\" field");
  long long n = doc["vertices"].get<long long>();
  if (n <= 0) throw graph_format_error("graph must have a non-empty vertex set");

  std::vector<Multigraph::EdgeSpec> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw graph_format_error("\"edges\" must be an array");
    for (const auto& item : doc["edges"]) {
      if (!item.is_array() || item.size() < 2 || item.size() > 3)
        throw graph_format_error("each edge must be [u,v] or [u,v,multiplicity]");
      for (const auto& x : item)
        if (!x.is_number_integer()) throw graph_format_error("edge entries must be integers");
      Multigraph::EdgeSpec e{item[0].get<int>(), item[1].get<int>(),
                             item.size() == 3 ? item[2].get<long long>() : 1};
      edges.push_back(e);
    }
  }

  std::vector<std::string> labels(static_cast<size_t>(n));
  if (doc.contains("labels")) {
    if (!doc["labels"].is_object()) throw graph_format_error("\"labels\" must be an object");
    for (const auto& [key, value] : doc["labels"].items()) {
      long long v;
      try {
        v = std::stoll(key);
      } catch (...) {
        throw graph_format_error("label key is not a vertex index: " + key);
      }
      if (v < 0 || v >= n) throw graph_format_error("label vertex out of range: " + key);
      if (!value.is_string()) throw graph_format_error("labels must map to strings");
      labels[static_cast<size_t>(v)] = value.get<std::string>();
    }
  }
  return Multigraph(static_cast<int>(n), edges, std::move(labels));
}

Multigraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw graph_format_error("cannot open graph document: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_graph(buffer.str());
}

std::string graph_to_json(const Multigraph& g) {
  nlohmann::json doc;
  doc["vertices"] = g.vertex_count();
  auto edges = nlohmann::json::array();
  for (const auto& e : g.edges()) {
    if (e.mult == 1)
      edges.push_back({e.u, e.v});
    else
      edges.push_back({e.u, e.v, e.mult});
  }
  doc["edges"] = std::move(edges);
  nlohmann::json labels = nlohmann::json::object();
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!g.labels()[v].empty()) labels[std::to_string(v)] = g.labels()[v];
  if (!labels.empty()) doc["labels"] = std::move(labels);
  return doc.dump(2) + "\n";
}

}  // namespace edgeblocks
