#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <optional>

#include "panther/errors.hpp"
#include "panther/eval.hpp"
#include "panther/exact_oracle.hpp"
#include "panther/graph.hpp"
#include "panther/pantherpp.hpp"
#include "panther/sampling.hpp"
#include "panther/serialize.hpp"
#include "panther/similarity.hpp"

namespace py = pybind11;
using namespace panther;

namespace {

WeightedGraph graph_from_edges(const std::vector<std::tuple<std::string, std::string, double>>& edges,
                               const std::vector<std::string>& extra_vertices) {
    GraphBuilder builder;
    for (const auto& label : extra_vertices) builder.add_vertex(label);
    for (const auto& [u, v, w] : edges) builder.add_edge(u, v, w);
    return builder.build();
}

WeightedGraph graph_from_file(const std::string& path, bool weighted) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open graph file '" + path + "'");
    return load_edge_list(in, weighted);
}

std::vector<std::pair<std::string, double>> labeled_entries(const WeightedGraph& g,
                                                            const TopKResult& r) {
    std::vector<std::pair<std::string, double>> out;
    out.reserve(r.entries.size());
    for (const auto& [v, s] : r.entries) out.emplace_back(g.label(v), s);
    return out;
}

}  // namespace

PYBIND11_MODULE(panther_core, m) {
    m.doc() = "Random-path-sampling top-k vertex similarity (Panther / Panther++)";

    py::register_exception<IngestError>(m, "IngestError", PyExc_ValueError);
    py::register_exception<DataError>(m, "DataError", PyExc_ValueError);
    py::register_exception<OracleTooLargeError>(m, "OracleTooLargeError", PyExc_ValueError);

    py::class_<WeightedGraph>(m, "WeightedGraph")
        .def_property_readonly("vertex_count", &WeightedGraph::vertex_count)
        .def_property_readonly("edge_count", &WeightedGraph::edge_count)
        .def("degree", &WeightedGraph::degree, py::arg("v"))
        .def("neighbors",
             [](const WeightedGraph& g, VertexId v) {
                 const auto span = g.neighbors(v);
                 return std::vector<VertexId>(span.begin(), span.end());
             },
             py::arg("v"))
        .def("has_edge", &WeightedGraph::has_edge, py::arg("u"), py::arg("v"))
        .def("edge_weight", &WeightedGraph::edge_weight, py::arg("u"), py::arg("v"))
        .def("label", &WeightedGraph::label, py::arg("v"))
        .def("vertex_id",
             [](const WeightedGraph& g, const std::string& label) -> std::optional<VertexId> {
                 return g.find_vertex(label);
             },
             py::arg("label"))
        .def("transition_probabilities", &WeightedGraph::transition_probabilities, py::arg("v"));

    m.def("graph_from_edges", &graph_from_edges, py::arg("edges"),
          py::arg("extra_vertices") = std::vector<std::string>{},
          "Build a graph from (label_u, label_v, weight) tuples.");
    m.def("load_edge_list", &graph_from_file, py::arg("path"), py::arg("weighted") = true);

    py::class_<SamplingBudget>(m, "SamplingBudget")
        .def(py::init([](double epsilon, double delta, double c, std::uint32_t T) {
                 return SamplingBudget{epsilon, delta, c, T};
             }),
             py::arg("epsilon") = 0.1, py::arg("delta") = 0.1, py::arg("c") = 0.5,
             py::arg("T") = 5)
        .def_readwrite("epsilon", &SamplingBudget::epsilon)
        .def_readwrite("delta", &SamplingBudget::delta)
        .def_readwrite("c", &SamplingBudget::c)
        .def_readwrite("T", &SamplingBudget::path_length);

    m.def("required_sample_size", &required_sample_size, py::arg("budget"));
    m.def(
        "required_sample_size",
        [](double epsilon, double delta, double c, std::uint32_t T) {
            return required_sample_size(SamplingBudget{epsilon, delta, c, T});
        },
        py::arg("epsilon"), py::arg("delta") = 0.1, py::arg("c") = 0.5, py::arg("T") = 5);

    py::class_<PathIndex>(m, "PathIndex")
        .def_readonly("sample_size", &PathIndex::sample_size)
        .def_readonly("path_length", &PathIndex::path_length)
        .def_readonly("seed", &PathIndex::seed)
        .def_readonly("vertex_count", &PathIndex::vertex_count)
        .def("path",
             [](const PathIndex& idx, std::uint32_t path_id) {
                 const auto span = idx.path(path_id);
                 return std::vector<VertexId>(span.begin(), span.end());
             },
             py::arg("path_id"))
        .def("paths_containing",
             [](const PathIndex& idx, VertexId v) {
                 const auto span = idx.paths_containing(v);
                 return std::vector<std::uint32_t>(span.begin(), span.end());
             },
             py::arg("v"))
        .def("save", [](const PathIndex& idx, const std::string& path) {
            save_path_index_file(idx, path);
        })
        .def_static("load", &load_path_index_file, py::arg("path"));

    m.def("generate_paths", &generate_paths, py::arg("graph"), py::arg("R"), py::arg("T"),
          py::arg("seed"), py::arg("threads") = 1,
          py::call_guard<py::gil_scoped_release>());

    m.def(
        "similarity",
        [](const PathIndex& idx, VertexId u, VertexId v) { return similarity(idx, u, v).value; },
        py::arg("index"), py::arg("u"), py::arg("v"),
        "Sampled path similarity |P_u intersect P_v| / R.");

    m.def(
        "top_k",
        [](const WeightedGraph& g, const PathIndex& idx, const std::string& query, std::size_t k) {
            const auto v = g.find_vertex(query);
            if (!v) throw DataError("query label '" + query + "' not found");
            return labeled_entries(g, top_k(idx, *v, k));
        },
        py::arg("graph"), py::arg("index"), py::arg("query"), py::arg("k"),
        "Top-k co-occurring vertices as (label, score) pairs.");

    py::class_<FeatureMatrix>(m, "FeatureMatrix")
        .def_readonly("dimension", &FeatureMatrix::dimension)
        .def_readonly("vertex_count", &FeatureMatrix::vertex_count)
        .def("row",
             [](const FeatureMatrix& m_, VertexId v) {
                 const auto span = m_.row(v);
                 return std::vector<double>(span.begin(), span.end());
             },
             py::arg("v"))
        .def("save", [](const FeatureMatrix& m_, const std::string& path) {
            save_feature_matrix_file(m_, path);
        })
        .def_static("load", &load_feature_matrix_file, py::arg("path"));

    m.def("build_feature_vectors", &build_feature_vectors, py::arg("index"), py::arg("D"),
          py::arg("threads") = 1, py::call_guard<py::gil_scoped_release>());

    m.def(
        "reciprocal_euclidean",
        [](const std::vector<double>& a, const std::vector<double>& b) {
            return reciprocal_euclidean(a, b);
        },
        py::arg("a"), py::arg("b"));

    py::class_<VectorIndex>(m, "VectorIndex")
        .def(py::init<FeatureMatrix>(), py::arg("vectors"))
        .def_property_readonly("dimension", &VectorIndex::dimension)
        .def_property_readonly("size", &VectorIndex::size);

    m.def(
        "top_k_pp",
        [](const WeightedGraph& g, const VectorIndex& index, const std::string& query,
           std::size_t k) {
            const auto v = g.find_vertex(query);
            if (!v) throw DataError("query label '" + query + "' not found");
            return labeled_entries(g, top_k_pp(index, *v, k));
        },
        py::arg("graph"), py::arg("index"), py::arg("query"), py::arg("k"));

    m.def(
        "cross_network_top_k",
        [](const WeightedGraph& ga, const VectorIndex& ia, const WeightedGraph& gb,
           const VectorIndex& ib, const std::string& query, std::size_t k) {
            const auto v = ga.find_vertex(query);
            if (!v) throw DataError("query label '" + query + "' not found");
            return labeled_entries(gb, cross_network_top_k(ia, ib, *v, k));
        },
        py::arg("graph_a"), py::arg("index_a"), py::arg("graph_b"), py::arg("index_b"),
        py::arg("query"), py::arg("k"));

    m.def("exact_path_similarity", &exact_path_similarity, py::arg("graph"), py::arg("T"),
          py::arg("u"), py::arg("v"));
    m.def("jaccard", &jaccard, py::arg("graph"), py::arg("u"), py::arg("v"));

    m.def("erdos_renyi", &erdos_renyi, py::arg("n"), py::arg("p"), py::arg("seed"));
    m.def("preferential_attachment", &preferential_attachment, py::arg("n"), py::arg("m"),
          py::arg("seed"));
}
