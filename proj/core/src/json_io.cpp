#include "lplab/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace lplab {

using ordered_json = nlohmann::ordered_json;

namespace detail {

ordered_json matrix_json(const DenseMatrix& m) {
  ordered_json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  ordered_json data = ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      data.push_back({m(i, c).real(), m(i, c).imag()});
    }
  }
  j["data"] = std::move(data);
  return j;
}

DenseMatrix matrix_from(const ordered_json& j) {
  const Eigen::Index rows = j.at("rows").get<Eigen::Index>();
  const Eigen::Index cols = j.at("cols").get<Eigen::Index>();
  const auto& data = j.at("data");
  if (static_cast<Eigen::Index>(data.size()) != rows * cols) {
    throw std::invalid_argument("matrix json: data length mismatch");
  }
  DenseMatrix m(rows, cols);
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index c = 0; c < cols; ++c, ++k) {
      m(i, c) = {data[k][0].get<double>(), data[k][1].get<double>()};
    }
  }
  return m;
}

ordered_json p_json(double p) {
  if (p == kInf) return "inf";
  return p;
}

double p_from(const ordered_json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return kInf;
    throw std::invalid_argument("p json: unknown string value");
  }
  return j.get<double>();
}

}  // namespace detail

std::string matrix_to_json(const DenseMatrix& m) {
  return detail::matrix_json(m).dump();
}

DenseMatrix matrix_from_json(const std::string& text) {
  return detail::matrix_from(ordered_json::parse(text));
}

std::string tensor_to_json(const TensorDecomposition& t) {
  ordered_json j;
  j["p"] = detail::p_json(t.p);
  j["primes"] = t.primes;
  ordered_json pairs = ordered_json::array();
  for (const auto& [a, b] : t.pairs) {
    pairs.push_back({{"a", detail::matrix_json(a)}, {"b", detail::matrix_json(b)}});
  }
  j["pairs"] = std::move(pairs);
  return j.dump();
}

TensorDecomposition tensor_from_json(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  TensorDecomposition t;
  t.p = detail::p_from(j.at("p"));
  t.primes = j.at("primes").get<std::vector<std::uint32_t>>();
  for (const auto& pj : j.at("pairs")) {
    t.pairs.emplace_back(detail::matrix_from(pj.at("a")), detail::matrix_from(pj.at("b")));
  }
  const auto d = static_cast<Eigen::Index>(t.dim());
  for (const auto& [a, b] : t.pairs) {
    if (a.rows() != d || a.cols() != d || b.rows() != d || b.cols() != d) {
      throw std::invalid_argument("tensor json: pair shape does not match the block structure");
    }
  }
  return t;
}

std::string graph_to_json(const Graph& g) {
  ordered_json j;
  j["n"] = g.n;
  j["k"] = g.k;
  ordered_json edges = ordered_json::array();
  for (const auto& [u, v] : g.edges) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j.dump();
}

std::string graph_to_edge_list(const Graph& g) {
  std::ostringstream os;
  for (const auto& [u, v] : g.edges) os << u << ' ' << v << '\n';
  return os.str();
}

Graph graph_from_text(const std::string& text) {
  // JSON first; fall back to "u v" lines.
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    const ordered_json j = ordered_json::parse(text);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& e : j.at("edges")) {
      edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
    return Graph::from_edges(j.at("n").get<std::size_t>(), std::move(edges));
  }
  std::istringstream is(text);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t u = 0, v = 0, n = 0;
  while (is >> u >> v) {
    edges.emplace_back(u, v);
    n = std::max({n, u + 1, v + 1});
  }
  if (edges.empty()) throw std::invalid_argument("graph text: no edges parsed");
  return Graph::from_edges(n, std::move(edges));
}

std::string plane_to_json(const ProjectivePlane& plane) {
  ordered_json j;
  j["l"] = plane.l();
  j["point_count"] = plane.size();
  ordered_json pts = ordered_json::array();
  for (const auto& p : plane.points()) pts.push_back({p.rep[0], p.rep[1], p.rep[2]});
  j["points"] = std::move(pts);
  ordered_json mask = ordered_json::array();
  for (const bool b : plane.sign_set()) mask.push_back(b ? 1 : 0);
  j["sign_set"] = std::move(mask);
  return j.dump();
}

std::string group_to_json(std::uint32_t l, const std::vector<Mat3>& elements) {
  ordered_json j;
  j["l"] = l;
  j["order"] = elements.size();
  ordered_json els = ordered_json::array();
  for (const Mat3& m : elements) {
    ordered_json row = ordered_json::array();
    for (const auto v : m.e) row.push_back(v);
    els.push_back(std::move(row));
  }
  j["elements"] = std::move(els);
  return j.dump();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace lplab
