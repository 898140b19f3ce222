#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "json.hpp"

#include "edgeblocks/distinguishers.hpp"
#include "edgeblocks/edge_blocks.hpp"
#include "edgeblocks/errors.hpp"
#include "edgeblocks/generation.hpp"
#include "edgeblocks/mincut.hpp"
#include "edgeblocks/multigraph.hpp"
#include "edgeblocks/oracles.hpp"
#include "edgeblocks/reports.hpp"
#include "edgeblocks/treecut.hpp"

namespace py = pybind11;
using namespace edgeblocks;

namespace {

py::object json_to_py(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null: return py::none();
    case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer: return py::int_(j.get<long long>());
    case nlohmann::json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
    case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case nlohmann::json::value_t::object: {
      py::dict out;
      for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
      return out;
    }
    default: return py::none();
  }
}

VertexSet to_set(const Multigraph& g, const std::vector<int>& members) {
  return VertexSet(g.vertex_count(), members);
}

std::vector<CutSeparation> to_separations(const Multigraph& g,
                                          const std::vector<std::vector<int>>& sides) {
  std::vector<CutSeparation> out;
  out.reserve(sides.size());
  for (const auto& side : sides) out.emplace_back(g, to_set(g, side));
  return out;
}

std::vector<std::vector<int>> from_separations(const std::vector<CutSeparation>& seps) {
  std::vector<std::vector<int>> out;
  out.reserve(seps.size());
  for (const CutSeparation& s : seps) out.push_back(s.ref_side().members());
  return out;
}

}  // namespace

PYBIND11_MODULE(edgeblocks, m) {
  m.doc() = "k-edge-block decompositions, nested bond sets and tree-cut decompositions";
  m.attr("__version__") = "0.1.0";

  py::register_exception<graph_format_error>(m, "GraphFormatError");
  py::register_exception<precondition_error>(m, "PreconditionError");
  py::register_exception<enumeration_cap_error>(m, "EnumerationCapError");
  py::register_exception<internal_invariant_error>(m, "InternalInvariantError");

  py::class_<Multigraph>(m, "Multigraph")
      .def(py::init([](int vertices, const std::vector<std::vector<long long>>& edges,
                       const std::map<int, std::string>& labels) {
             std::vector<Multigraph::EdgeSpec> specs;
             for (const auto& e : edges) {
               if (e.size() < 2 || e.size() > 3)
                 throw graph_format_error("each edge must be (u, v) or (u, v, multiplicity)");
               specs.push_back({static_cast<int>(e[0]), static_cast<int>(e[1]),
                                e.size() == 3 ? e[2] : 1});
             }
             std::vector<std::string> label_vec(vertices > 0 ? vertices : 0);
             for (const auto& [v, name] : labels) {
               if (v < 0 || v >= vertices)
                 throw graph_format_error("label vertex out of range");
               label_vec[v] = name;
             }
             return Multigraph(vertices, specs, std::move(label_vec));
           }),
           py::arg("vertices"), py::arg("edges"),
           py::arg("labels") = std::map<int, std::string>{})
      .def_property_readonly("vertex_count", &Multigraph::vertex_count)
      .def_property_readonly("total_multiplicity", &Multigraph::total_multiplicity)
      .def("edges",
           [](const Multigraph& g) {
             std::vector<std::tuple<int, int, long long>> out;
             for (const auto& e : g.edges()) out.emplace_back(e.u, e.v, e.mult);
             return out;
           })
      .def("degree", &Multigraph::degree)
      .def("to_json", &graph_to_json)
      .def("__repr__", [](const Multigraph& g) {
        return "<Multigraph n=" + std::to_string(g.vertex_count()) + " edges=" +
               std::to_string(g.edges().size()) + ">";
      });

  m.def("load_graph", &load_graph, py::arg("json_text"), "Parse a graph document");
  m.def("load_graph_file", &load_graph_file, py::arg("path"));

  m.def("components", [](const Multigraph& g) {
    std::vector<std::vector<int>> out;
    for (const VertexSet& comp : components(g)) out.push_back(comp.members());
    return out;
  });
  m.def("is_connected", &is_connected);
  m.def(
      "cut_edges",
      [](const Multigraph& g, const std::vector<int>& side) {
        CutEdges cut = cut_edges(g, to_set(g, side));
        std::vector<std::tuple<int, int, long long>> edges;
        for (const auto& e : cut.edges) edges.emplace_back(e.u, e.v, e.mult);
        return py::make_tuple(edges, cut.total);
      },
      py::arg("graph"), py::arg("side"));
  m.def(
      "contract",
      [](const Multigraph& g, const std::vector<std::vector<int>>& parts) {
        std::vector<VertexSet> sets;
        for (const auto& part : parts) sets.push_back(to_set(g, part));
        Contraction c = contract(g, sets);
        return py::make_tuple(c.graph, c.old_to_new);
      },
      py::arg("graph"), py::arg("parts"));

  m.def("edge_connectivity", &lambda, py::arg("graph"), py::arg("u"), py::arg("v"),
        "Pairwise edge connectivity λ(u,v)");
  m.def(
      "min_cut",
      [](const Multigraph& g, const std::vector<int>& S, const std::vector<int>& T) {
        MinCutResult r = min_cut(g, to_set(g, S), to_set(g, T));
        return py::make_tuple(r.value, r.separation.ref_side().members());
      },
      py::arg("graph"), py::arg("S"), py::arg("T"));
  m.def(
      "gomory_hu",
      [](const Multigraph& g) {
        GomoryHuTree tree = gomory_hu(g);
        std::vector<std::tuple<int, int, long long>> out;
        for (const auto& e : tree.edges()) out.emplace_back(e.u, e.v, e.weight);
        return out;
      },
      py::arg("graph"), "Gomory–Hu tree edges as (u, v, weight)");
  m.def(
      "enumerate_min_separations",
      [](const Multigraph& g, const std::vector<int>& S, const std::vector<int>& T,
         long long cap) {
        return from_separations(enumerate_min_separations(g, to_set(g, S), to_set(g, T), cap));
      },
      py::arg("graph"), py::arg("S"), py::arg("T"), py::arg("cap") = kDefaultEnumerationCap);

  m.def(
      "block_hierarchy",
      [](const Multigraph& g) { return json_to_py(hierarchy_to_json(block_hierarchy(g))); },
      py::arg("graph"));
  m.def(
      "k_blocks",
      [](const Multigraph& g, long long k) {
        std::vector<std::vector<int>> out;
        for (const VertexSet& block : block_hierarchy(g).k_blocks(k)) out.push_back(block.members());
        return out;
      },
      py::arg("graph"), py::arg("k"));
  m.def(
      "block_pairs",
      [](const Multigraph& g) {
        EdgeBlockHierarchy h = block_hierarchy(g);
        std::vector<std::tuple<std::vector<int>, std::vector<int>, long long>> out;
        for (const BlockPair& pair : block_pairs(h, g))
          out.emplace_back(pair.beta1.members(), pair.beta2.members(), pair.order);
        return out;
      },
      py::arg("graph"));

  m.def(
      "build_nested_set",
      [](const Multigraph& g, long long cap) {
        return json_to_py(nested_set_to_json(build_nested_set(g, cap)));
      },
      py::arg("graph"), py::arg("cap") = kDefaultEnumerationCap);
  m.def(
      "verify_nested_set",
      [](const Multigraph& g, const std::vector<std::vector<int>>& sides) {
        return json_to_py(verify_report_to_json(verify_nested_set(g, to_separations(g, sides))));
      },
      py::arg("graph"), py::arg("sides"));
  m.def(
      "check_generation_equivalence",
      [](const Multigraph& g, const std::vector<std::vector<int>>& sides,
         std::optional<long long> k_max) {
        return json_to_py(equivalence_report_to_json(check_generation_equivalence(g, to_separations(g, sides), k_max)));
      },
      py::arg("graph"), py::arg("sides"), py::arg("k_max") = std::nullopt);

  m.def(
      "build_tree_cut",
      [](const Multigraph& g, const std::vector<std::vector<int>>& sides, int root) {
        return json_to_py(tree_cut_to_json(build_tree_cut(g, to_separations(g, sides), root)));
      },
      py::arg("graph"), py::arg("sides"), py::arg("root") = 0);
  m.def(
      "tree_cut_dot",
      [](const Multigraph& g, const std::vector<std::vector<int>>& sides, int root) {
        return tree_cut_to_dot(g, build_tree_cut(g, to_separations(g, sides), root));
      },
      py::arg("graph"), py::arg("sides"), py::arg("root") = 0);

  m.def(
      "brute_lambda",
      [](const Multigraph& g, int u, int v) { return brute_lambda(g, u, v); },
      py::arg("graph"), py::arg("u"), py::arg("v"));
  m.def(
      "brute_blocks",
      [](const Multigraph& g, long long k) {
        std::vector<std::vector<int>> out;
        for (const VertexSet& block : brute_blocks(g, k)) out.push_back(block.members());
        return out;
      },
      py::arg("graph"), py::arg("k"));
}
