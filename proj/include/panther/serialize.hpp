#pragma once

#include <iosfwd>
#include <string>

#include "panther/graph.hpp"
#include "panther/pantherpp.hpp"
#include "panther/sampling.hpp"

namespace panther {

// Versioned little-endian binary snapshots so sampling and vector
// construction are paid once per network. Exact layouts are documented in
// the README; loaders throw DataError on bad magic, unknown versions or
// truncated files.

void save_graph(const WeightedGraph& g, std::ostream& out);
WeightedGraph load_graph(std::istream& in);

void save_path_index(const PathIndex& idx, std::ostream& out);
PathIndex load_path_index(std::istream& in);

void save_feature_matrix(const FeatureMatrix& m, std::ostream& out);
FeatureMatrix load_feature_matrix(std::istream& in);

// File-path conveniences; throw DataError when the file cannot be opened.
void save_path_index_file(const PathIndex& idx, const std::string& path);
PathIndex load_path_index_file(const std::string& path);
void save_feature_matrix_file(const FeatureMatrix& m, const std::string& path);
FeatureMatrix load_feature_matrix_file(const std::string& path);

}  // namespace panther
