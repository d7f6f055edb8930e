#include "qwalk/graph.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include <json.hpp>

#include "qwalk/matrix_io.hpp"

namespace qwalk {

Graph::Graph(std::size_t n, const std::vector<Edge>& edges) : adj_(n) {
  for (const auto& [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n)
      throw std::invalid_argument("Graph: edge {" + std::to_string(u) + "," + std::to_string(v) +
                                  "} has an endpoint outside 1.." + std::to_string(n));
    if (u == v) throw std::invalid_argument("Graph: loop at vertex " + std::to_string(u));
    auto& nu = adj_[u - 1];
    if (std::find(nu.begin(), nu.end(), v - 1) != nu.end())
      throw std::invalid_argument("Graph: duplicate edge {" + std::to_string(u) + "," +
                                  std::to_string(v) + "}");
    nu.push_back(v - 1);
    adj_[v - 1].push_back(u - 1);
    ++edge_count_;
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

std::size_t Graph::index(Vertex v) const {
  if (v < 1 || v > adj_.size())
    throw std::out_of_range("Graph: vertex " + std::to_string(v) + " outside 1.." +
                            std::to_string(adj_.size()));
  return v - 1;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < adj_.size(); ++u)
    for (std::size_t v : adj_[u])
      if (u < v) out.emplace_back(u + 1, v + 1);
  return out;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  const auto& nb = adj_[index(v)];
  std::vector<Vertex> out;
  out.reserve(nb.size());
  for (std::size_t w : nb) out.push_back(w + 1);
  return out;
}

std::size_t Graph::degree(Vertex v) const { return adj_[index(v)].size(); }

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = adj_[index(u)];
  return std::binary_search(nb.begin(), nb.end(), index(v));
}

Graph dynkin_a(std::size_t n) {
  if (n == 0) throw std::invalid_argument("dynkin_a: n must be at least 1");
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  return {n, edges};
}

IntMatrix adjacency_matrix(const Graph& g) {
  IntMatrix a(g.vertex_count(), g.vertex_count());
  for (const auto& [u, v] : g.edges()) {
    a(u - 1, v - 1) = 1;
    a(v - 1, u - 1) = 1;
  }
  return a;
}

IntMatrix degree_matrix(const Graph& g) {
  IntMatrix d(g.vertex_count(), g.vertex_count());
  for (Vertex v = 1; v <= g.vertex_count(); ++v)
    d(v - 1, v - 1) = static_cast<unsigned long>(g.degree(v));
  return d;
}

IntMatrix signless_laplacian(const Graph& g) { return adjacency_matrix(g) + degree_matrix(g); }

EquitablePartition partition_pi(std::size_t n) {
  EquitablePartition p;
  for (Vertex i = 1; 2 * i <= n; ++i) p.cells.push_back({i, n + 1 - i});
  if (n % 2 == 1) p.cells.push_back({(n + 1) / 2});
  return p;
}

namespace {

// cell_of[v-1] = index of the cell containing v; validates coverage.
std::vector<std::size_t> cell_index(const Graph& g, const EquitablePartition& p) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> cell_of(g.vertex_count(), unset);
  for (std::size_t c = 0; c < p.cells.size(); ++c) {
    if (p.cells[c].empty()) throw std::invalid_argument("partition: empty cell");
    for (Vertex v : p.cells[c]) {
      if (v < 1 || v > g.vertex_count())
        throw std::invalid_argument("partition: vertex " + std::to_string(v) + " outside 1.." +
                                    std::to_string(g.vertex_count()));
      if (cell_of[v - 1] != unset)
        throw std::invalid_argument("partition: vertex " + std::to_string(v) +
                                    " appears more than once");
      cell_of[v - 1] = c;
    }
  }
  for (std::size_t v = 0; v < cell_of.size(); ++v)
    if (cell_of[v] == unset)
      throw std::invalid_argument("partition: vertex " + std::to_string(v + 1) + " not covered");
  return cell_of;
}

// counts[c] = neighbours of v in cell c
std::vector<std::size_t> neighbor_profile(const Graph& g, Vertex v,
                                          const std::vector<std::size_t>& cell_of,
                                          std::size_t cells) {
  std::vector<std::size_t> counts(cells, 0);
  for (Vertex w : g.neighbors(v)) ++counts[cell_of[w - 1]];
  return counts;
}

}  // namespace

bool is_equitable(const Graph& g, const EquitablePartition& p) {
  const auto cell_of = cell_index(g, p);
  for (const auto& cell : p.cells) {
    const auto first = neighbor_profile(g, cell.front(), cell_of, p.size());
    for (std::size_t k = 1; k < cell.size(); ++k)
      if (neighbor_profile(g, cell[k], cell_of, p.size()) != first) return false;
  }
  return true;
}

QuotientData quotient(const Graph& g, const EquitablePartition& p) {
  if (!is_equitable(g, p)) throw std::invalid_argument("quotient: partition is not equitable");
  const auto cell_of = cell_index(g, p);
  const std::size_t r = p.size();
  QuotientData q{p, IntMatrix(g.vertex_count(), r), IntMatrix(r, r)};
  for (std::size_t v = 0; v < g.vertex_count(); ++v) q.characteristic(v, cell_of[v]) = 1;
  for (std::size_t c = 0; c < r; ++c) {
    const auto profile = neighbor_profile(g, p.cells[c].front(), cell_of, r);
    for (std::size_t d = 0; d < r; ++d) q.divisor(c, d) = static_cast<unsigned long>(profile[d]);
  }
  return q;
}

IntMatrix reduced_degree_matrix(std::size_t n) {
  return principal_submatrix(degree_matrix(dynkin_a(n)), (n + 1) / 2);
}

Graph parse_graph_text(std::string_view text) {
  std::size_t line_no = 0, pos = 0;
  bool have_n = false;
  std::size_t n = 0;
  std::vector<Edge> edges;
  auto count = [](std::string_view tok, std::size_t line) {
    const BigInt v = parse_bigint(tok, line);
    if (sgn(v) < 0 || !v.fits_ulong_p()) throw ParseError(line, "expected a vertex count/label");
    return static_cast<std::size_t>(v.get_ui());
  };
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    std::vector<std::string_view> tok;
    for (std::size_t i = 0; i < line.size();) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) tok.push_back(line.substr(i, j - i));
      i = j;
    }
    if (tok.empty()) continue;
    if (!have_n) {
      if (tok.size() != 1) throw ParseError(line_no, "first line must be the vertex count");
      n = count(tok[0], line_no);
      have_n = true;
      continue;
    }
    if (tok.size() != 2) throw ParseError(line_no, "edge lines must be 'i j'");
    edges.emplace_back(count(tok[0], line_no), count(tok[1], line_no));
  }
  if (!have_n) throw ParseError(1, "empty input, expected the vertex count");
  try {
    return {n, edges};
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

std::string format_graph_text(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + "\n";
  for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Graph parse_graph_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_unsigned())
    throw ParseError(0, "graph JSON needs a non-negative integer \"n\"");
  std::vector<Edge> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw ParseError(0, "\"edges\" must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
          !e[1].is_number_unsigned())
        throw ParseError(0, "each edge must be a pair of positive integers");
      edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
  }
  try {
    return {j["n"].get<std::size_t>(), edges};
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

std::string format_graph_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.vertex_count();
  auto& arr = j["edges"] = nlohmann::ordered_json::array();
  for (const auto& [u, v] : g.edges()) arr.push_back({u, v});
  return j.dump() + "\n";
}

}  // namespace qwalk
