#ifndef SRGQ_IO_HPP
#define SRGQ_IO_HPP

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "srgq/gewirtz_structure.hpp"
#include "srgq/graph.hpp"
#include "srgq/q_analyzer.hpp"
#include "srgq/quadratic.hpp"
#include "srgq/sign_parity.hpp"

namespace srgq::io {

using nlohmann::json;

/// {"n": <int>, "edges": [[u,v],...]} with u < v in lexicographic order.
json graph_to_json(const Graph& g);

/// Accepts pairs in any order or orientation. Throws FormatError for a
/// malformed document, GraphError for invalid pairs.
Graph graph_from_json(const json& j);

Graph read_graph_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

/// Graphviz "graph G { ... }" with vertex ids as labels.
void write_dot(std::ostream& os, const Graph& g);

/// Entries as [a_num, a_den, b_num, b_den] for a + b*sqrt5, row-major.
json matrix_to_json(const QuadMatrix& m);
QuadMatrix matrix_from_json(const json& j);

json decomposition_to_json(const PltDecomposition& dec);
json witness_to_json(const SignAssignment& s);
json certificate_to_json(const InfeasibilityCertificate& c);
json report_to_json(const QReport& r);

}  // namespace srgq::io

#endif  // SRGQ_IO_HPP
