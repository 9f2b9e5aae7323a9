#include <sstream>

#include "doctest.h"
#include "panther/errors.hpp"
#include "panther/pantherpp.hpp"
#include "panther/serialize.hpp"
#include "test_helpers.hpp"

using namespace panther;

TEST_SUITE("serialize") {

TEST_CASE("graph snapshot round trip") {
    GraphBuilder b;
    b.add_edge("alpha", "beta", 1.5);
    b.add_edge("beta", "gamma", 2.25);
    b.add_edge("gamma", "gamma", 0.5);
    b.add_vertex("isolated");
    const auto g = b.build();

    std::stringstream buf(std::ios::in | std::ios::out | std::ios::binary);
    save_graph(g, buf);
    const auto g2 = load_graph(buf);

    CHECK(g2.vertex_count() == g.vertex_count());
    CHECK(g2.edge_count() == g.edge_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        CHECK(g2.label(v) == g.label(v));
        const auto na = g.neighbors(v);
        const auto nb = g2.neighbors(v);
        REQUIRE(na.size() == nb.size());
        for (std::size_t i = 0; i < na.size(); ++i) {
            CHECK(na[i] == nb[i]);
            CHECK(g.neighbor_weights(v)[i] == g2.neighbor_weights(v)[i]);
        }
    }
}

TEST_CASE("path index round trip is byte identical") {
    const auto g = testing::small_pa_graph();
    const auto idx = generate_paths(g, 2500, 4, 88);

    std::stringstream buf(std::ios::in | std::ios::out | std::ios::binary);
    save_path_index(idx, buf);
    const std::string first = buf.str();
    const auto idx2 = load_path_index(buf);

    std::ostringstream again(std::ios::binary);
    save_path_index(idx2, again);
    CHECK(first == again.str());
    CHECK(idx2.sample_size == idx.sample_size);
    CHECK(idx2.path_length == idx.path_length);
    CHECK(idx2.seed == idx.seed);
}

TEST_CASE("feature matrix round trip") {
    const auto g = testing::small_pa_graph();
    const auto idx = generate_paths(g, 2000, 3, 5);
    const auto m = build_feature_vectors(idx, 16);

    std::stringstream buf(std::ios::in | std::ios::out | std::ios::binary);
    save_feature_matrix(m, buf);
    const auto m2 = load_feature_matrix(buf);
    CHECK(m2.dimension == m.dimension);
    CHECK(m2.vertex_count == m.vertex_count);
    CHECK(m2.values == m.values);
}

TEST_CASE("wrong magic and truncation are data errors") {
    std::stringstream junk(std::ios::in | std::ios::out | std::ios::binary);
    junk << "not a snapshot at all";
    CHECK_THROWS_AS(load_graph(junk), DataError);

    const auto g = testing::complete_graph(3);
    std::stringstream buf(std::ios::in | std::ios::out | std::ios::binary);
    save_graph(g, buf);
    const std::string bytes = buf.str();

    std::stringstream truncated(std::ios::in | std::ios::out | std::ios::binary);
    truncated << bytes.substr(0, bytes.size() / 2);
    CHECK_THROWS_AS(load_graph(truncated), DataError);

    // a graph snapshot is not a path index
    std::stringstream wrong(std::ios::in | std::ios::out | std::ios::binary);
    wrong << bytes;
    CHECK_THROWS_AS(load_path_index(wrong), DataError);
}

}  // TEST_SUITE
