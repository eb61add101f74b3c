#pragma once

#include <string>

#include "lplab/graph.hpp"
#include "lplab/pipeline.hpp"
#include "lplab/plane.hpp"

namespace lplab {

/// Matrices serialize as {"rows", "cols", "data": [[re, im], ...]} row-major.
std::string matrix_to_json(const DenseMatrix& m);
DenseMatrix matrix_from_json(const std::string& text);

/// {"p", "primes", "pairs": [{"a": ..., "b": ...}]}; p serializes as "inf"
/// when infinite.
std::string tensor_to_json(const TensorDecomposition& t);
TensorDecomposition tensor_from_json(const std::string& text);

std::string graph_to_json(const Graph& g);
std::string graph_to_edge_list(const Graph& g);
/// Accepts either the JSON form or plain "u v" lines.
Graph graph_from_text(const std::string& text);

/// Point representatives as integer triples plus the sign-set mask.
std::string plane_to_json(const ProjectivePlane& plane);
/// Group elements as 9-integer row-major arrays.
std::string group_to_json(std::uint32_t l, const std::vector<Mat3>& elements);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace lplab
