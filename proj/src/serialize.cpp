#include "panther/serialize.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

#include "panther/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "binary snapshots assume a little-endian host");

namespace panther {

namespace {

constexpr std::uint32_t kGraphMagic = 0x474e5450;   // "PTNG"
constexpr std::uint32_t kPathsMagic = 0x504e5450;   // "PTNP"
constexpr std::uint32_t kVectorsMagic = 0x564e5450; // "PTNV"
constexpr std::uint32_t kVersion = 1;

template <typename T>
void write_pod(std::ostream& out, T value) {
    out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T read_pod(std::istream& in) {
    T value{};
    in.read(reinterpret_cast<char*>(&value), sizeof(T));
    if (!in) throw DataError("truncated file");
    return value;
}

template <typename T>
void write_vec(std::ostream& out, const std::vector<T>& v) {
    out.write(reinterpret_cast<const char*>(v.data()),
              static_cast<std::streamsize>(v.size() * sizeof(T)));
}

template <typename T>
void read_vec(std::istream& in, std::vector<T>& v, std::size_t count) {
    v.resize(count);
    in.read(reinterpret_cast<char*>(v.data()), static_cast<std::streamsize>(count * sizeof(T)));
    if (!in) throw DataError("truncated file");
}

void expect_header(std::istream& in, std::uint32_t magic, const char* what) {
    const auto got_magic = read_pod<std::uint32_t>(in);
    if (got_magic != magic) throw DataError(std::string("not a ") + what + " file (bad magic)");
    const auto version = read_pod<std::uint32_t>(in);
    if (version != kVersion) {
        throw DataError(std::string(what) + " file version " + std::to_string(version) +
                        " unsupported");
    }
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot open '" + path + "' for writing");
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open '" + path + "' for reading");
    return in;
}

}  // namespace

void save_graph(const WeightedGraph& g, std::ostream& out) {
    write_pod(out, kGraphMagic);
    write_pod(out, kVersion);
    write_pod<std::uint64_t>(out, g.vertex_count());
    write_pod<std::uint64_t>(out, g.edge_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const std::string& label = g.label(v);
        write_pod<std::uint32_t>(out, static_cast<std::uint32_t>(label.size()));
        out.write(label.data(), static_cast<std::streamsize>(label.size()));
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto nbrs = g.neighbors(v);
        const auto ws = g.neighbor_weights(v);
        write_pod<std::uint64_t>(out, nbrs.size());
        out.write(reinterpret_cast<const char*>(nbrs.data()),
                  static_cast<std::streamsize>(nbrs.size() * sizeof(VertexId)));
        out.write(reinterpret_cast<const char*>(ws.data()),
                  static_cast<std::streamsize>(ws.size() * sizeof(double)));
    }
    if (!out) throw DataError("graph snapshot write failed");
}

WeightedGraph load_graph(std::istream& in) {
    expect_header(in, kGraphMagic, "graph snapshot");
    const auto n = read_pod<std::uint64_t>(in);
    const auto edge_count = read_pod<std::uint64_t>(in);

    GraphBuilder builder;
    std::vector<std::string> labels(n);
    for (std::uint64_t v = 0; v < n; ++v) {
        const auto len = read_pod<std::uint32_t>(in);
        labels[v].resize(len);
        in.read(labels[v].data(), len);
        if (!in) throw DataError("truncated file");
        builder.add_vertex(labels[v]);
    }
    for (std::uint64_t v = 0; v < n; ++v) {
        const auto degree = read_pod<std::uint64_t>(in);
        std::vector<VertexId> nbrs;
        std::vector<double> ws;
        read_vec(in, nbrs, degree);
        read_vec(in, ws, degree);
        for (std::uint64_t i = 0; i < degree; ++i) {
            if (nbrs[i] >= n) throw DataError("graph snapshot: neighbor id out of range");
            if (nbrs[i] >= v) {  // each undirected edge stored twice; add once
                builder.add_edge(static_cast<VertexId>(v), nbrs[i], ws[i]);
            }
        }
    }
    WeightedGraph g = builder.build();
    if (g.edge_count() != edge_count) throw DataError("graph snapshot: edge count mismatch");
    return g;
}

void save_path_index(const PathIndex& idx, std::ostream& out) {
    write_pod(out, kPathsMagic);
    write_pod(out, kVersion);
    write_pod<std::uint64_t>(out, idx.sample_size);
    write_pod<std::uint32_t>(out, idx.path_length);
    write_pod<std::uint64_t>(out, idx.seed);
    write_pod<std::uint64_t>(out, idx.vertex_count);
    write_pod<std::uint64_t>(out, idx.path_vertices.size());
    write_pod<std::uint64_t>(out, idx.inverted_paths.size());
    write_vec(out, idx.path_offsets);
    write_vec(out, idx.path_vertices);
    write_vec(out, idx.inverted_offsets);
    write_vec(out, idx.inverted_paths);
    if (!out) throw DataError("path index write failed");
}

PathIndex load_path_index(std::istream& in) {
    expect_header(in, kPathsMagic, "path index");
    PathIndex idx;
    idx.sample_size = read_pod<std::uint64_t>(in);
    idx.path_length = read_pod<std::uint32_t>(in);
    idx.seed = read_pod<std::uint64_t>(in);
    idx.vertex_count = read_pod<std::uint64_t>(in);
    const auto total_vertices = read_pod<std::uint64_t>(in);
    const auto total_postings = read_pod<std::uint64_t>(in);
    read_vec(in, idx.path_offsets, idx.sample_size + 1);
    read_vec(in, idx.path_vertices, total_vertices);
    read_vec(in, idx.inverted_offsets, idx.vertex_count + 1);
    read_vec(in, idx.inverted_paths, total_postings);
    if (idx.path_offsets.back() != total_vertices || idx.inverted_offsets.back() != total_postings) {
        throw DataError("path index: inconsistent offsets");
    }
    return idx;
}

void save_feature_matrix(const FeatureMatrix& m, std::ostream& out) {
    write_pod(out, kVectorsMagic);
    write_pod(out, kVersion);
    write_pod<std::uint64_t>(out, m.vertex_count);
    write_pod<std::uint32_t>(out, m.dimension);
    write_vec(out, m.values);
    if (!out) throw DataError("feature vector write failed");
}

FeatureMatrix load_feature_matrix(std::istream& in) {
    expect_header(in, kVectorsMagic, "feature vector");
    FeatureMatrix m;
    m.vertex_count = read_pod<std::uint64_t>(in);
    m.dimension = read_pod<std::uint32_t>(in);
    read_vec(in, m.values, static_cast<std::size_t>(m.vertex_count) * m.dimension);
    return m;
}

void save_path_index_file(const PathIndex& idx, const std::string& path) {
    auto out = open_out(path);
    save_path_index(idx, out);
}

PathIndex load_path_index_file(const std::string& path) {
    auto in = open_in(path);
    return load_path_index(in);
}

void save_feature_matrix_file(const FeatureMatrix& m, const std::string& path) {
    auto out = open_out(path);
    save_feature_matrix(m, out);
}

FeatureMatrix load_feature_matrix_file(const std::string& path) {
    auto in = open_in(path);
    return load_feature_matrix(in);
}

}  // namespace panther
