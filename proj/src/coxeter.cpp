#include "garside/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace garside {

namespace {

constexpr int kMaxRank = 255;

std::string trimmed(const std::string& s) {
  std::size_t first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  std::size_t last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::optional<int> parse_int(const std::string& token) {
  if (token.empty() ||
      !std::all_of(token.begin(), token.end(),
                   [](unsigned char c) { return std::isdigit(c); })) {
    return std::nullopt;
  }
  try {
    return std::stoi(token);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::vector<int> identity_map(int rank) {
  std::vector<int> map(static_cast<std::size_t>(rank));
  std::iota(map.begin(), map.end(), 1);
  return map;
}

}  // namespace

bool catalog_id_valid(const CatalogId& id) {
  switch (id.family) {
    case Family::A:
      return id.param >= 1 && id.param <= kMaxRank;
    case Family::B:
      return id.param >= 2 && id.param <= kMaxRank;
    case Family::D:
      return id.param >= 3 && id.param <= kMaxRank;
    case Family::E:
      return id.param >= 6 && id.param <= 8;
    case Family::F:
      return id.param == 4;
    case Family::G:
      return id.param == 2;
    case Family::H:
      return id.param == 3 || id.param == 4;
    case Family::I2:
      return id.param >= 5 && id.param != 6;
  }
  return false;
}

std::string catalog_label(const CatalogId& id) {
  switch (id.family) {
    case Family::A:
      return "A" + std::to_string(id.param);
    case Family::B:
      return "B" + std::to_string(id.param);
    case Family::D:
      return "D" + std::to_string(id.param);
    case Family::E:
      return "E" + std::to_string(id.param);
    case Family::F:
      return "F" + std::to_string(id.param);
    case Family::G:
      return "G" + std::to_string(id.param);
    case Family::H:
      return "H" + std::to_string(id.param);
    case Family::I2:
      return "I2(" + std::to_string(id.param) + ")";
  }
  return "?";
}

std::optional<CatalogId> parse_catalog_id(const std::string& text) {
  std::string s = trimmed(text);
  if (s.size() >= 4 && s.compare(0, 3, "I2(") == 0 && s.back() == ')') {
    auto p = parse_int(s.substr(3, s.size() - 4));
    if (!p) return std::nullopt;
    CatalogId id{Family::I2, *p};
    return catalog_id_valid(id) ? std::optional<CatalogId>(id) : std::nullopt;
  }
  if (s.size() < 2) return std::nullopt;
  Family family;
  switch (s[0]) {
    case 'A': family = Family::A; break;
    case 'B': family = Family::B; break;
    case 'D': family = Family::D; break;
    case 'E': family = Family::E; break;
    case 'F': family = Family::F; break;
    case 'G': family = Family::G; break;
    case 'H': family = Family::H; break;
    default: return std::nullopt;
  }
  auto n = parse_int(s.substr(1));
  if (!n) return std::nullopt;
  CatalogId id{family, *n};
  return catalog_id_valid(id) ? std::optional<CatalogId>(id) : std::nullopt;
}

CoxeterGraph::CoxeterGraph(int rank, const std::vector<Edge>& edges)
    : rank_(rank) {
  if (rank < 0 || rank > kMaxRank) {
    throw std::invalid_argument("rank out of range: " + std::to_string(rank));
  }
  orders_.assign(static_cast<std::size_t>(rank) * rank, 2);
  for (int i = 1; i <= rank; ++i) {
    orders_[static_cast<std::size_t>(i - 1) * rank + (i - 1)] = 1;
  }
  for (const Edge& e : edges) {
    if (!valid_vertex(e.i) || !valid_vertex(e.j) || e.i == e.j) {
      throw std::invalid_argument("bad edge (" + std::to_string(e.i) + ", " +
                                  std::to_string(e.j) + ")");
    }
    if (e.m < 2) {
      throw std::invalid_argument("edge order must be at least 2, got " +
                                  std::to_string(e.m));
    }
    std::size_t a = static_cast<std::size_t>(e.i - 1) * rank + (e.j - 1);
    std::size_t b = static_cast<std::size_t>(e.j - 1) * rank + (e.i - 1);
    if (orders_[a] != 2 && orders_[a] != e.m) {
      throw std::invalid_argument("conflicting orders for edge (" +
                                  std::to_string(e.i) + ", " +
                                  std::to_string(e.j) + ")");
    }
    orders_[a] = e.m;
    orders_[b] = e.m;
  }
}

int CoxeterGraph::order(int i, int j) const {
  if (!valid_vertex(i) || !valid_vertex(j)) {
    throw std::domain_error("vertex out of range: order(" + std::to_string(i) +
                            ", " + std::to_string(j) + ")");
  }
  return orders_[static_cast<std::size_t>(i - 1) * rank_ + (j - 1)];
}

bool CoxeterGraph::valid_word(const Word& w) const {
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    if (!valid_vertex(w.letter(pos))) return false;
  }
  return true;
}

GraphEmbedding::GraphEmbedding(CoxeterGraph source, CoxeterGraph target,
                               std::vector<int> vertex_map)
    : source_(std::move(source)),
      target_(std::move(target)),
      map_(std::move(vertex_map)) {
  if (map_.size() != static_cast<std::size_t>(source_.rank())) {
    throw std::invalid_argument("embedding map has wrong size");
  }
  std::vector<bool> seen(static_cast<std::size_t>(target_.rank()) + 1, false);
  for (int v : map_) {
    if (!target_.valid_vertex(v)) {
      throw std::invalid_argument("embedding image out of range: " +
                                  std::to_string(v));
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("embedding map is not injective");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  for (int i = 1; i <= source_.rank(); ++i) {
    for (int j = i + 1; j <= source_.rank(); ++j) {
      if (source_.order(i, j) != target_.order(apply(i), apply(j))) {
        throw std::invalid_argument(
            "embedding does not preserve the order of (" + std::to_string(i) +
            ", " + std::to_string(j) + ")");
      }
    }
  }
}

int GraphEmbedding::apply(int source_vertex) const {
  if (!source_.valid_vertex(source_vertex)) {
    throw std::domain_error("vertex outside the embedding source: " +
                            std::to_string(source_vertex));
  }
  return map_[static_cast<std::size_t>(source_vertex - 1)];
}

bool GraphEmbedding::hits_target_vertex(int v) const {
  return std::find(map_.begin(), map_.end(), v) != map_.end();
}

CoxeterGraph catalog_graph(const CatalogId& id) {
  if (!catalog_id_valid(id)) {
    throw std::domain_error("not a spherical catalog id: " +
                            catalog_label(id));
  }
  const int n = id.param;
  std::vector<CoxeterGraph::Edge> edges;
  switch (id.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) edges.push_back({i, i + 1, 3});
      break;
    case Family::B:
      edges.push_back({1, 2, 4});
      for (int i = 2; i < n; ++i) edges.push_back({i, i + 1, 3});
      break;
    case Family::D:
      // Chain x1..x(n-2) with the fork x(n-1), xn attached at x(n-2).
      for (int i = 1; i + 1 <= n - 2; ++i) edges.push_back({i, i + 1, 3});
      edges.push_back({n - 2, n - 1, 3});
      edges.push_back({n - 2, n, 3});
      break;
    case Family::E:
      // Chain x1 x2 x3 x5 x6 ... xn with the extra vertex x4 attached at x3.
      edges.push_back({1, 2, 3});
      edges.push_back({2, 3, 3});
      edges.push_back({3, 4, 3});
      edges.push_back({3, 5, 3});
      for (int i = 5; i < n; ++i) edges.push_back({i, i + 1, 3});
      break;
    case Family::F:
      edges.push_back({1, 2, 3});
      edges.push_back({2, 3, 4});
      edges.push_back({3, 4, 3});
      break;
    case Family::G:
      edges.push_back({1, 2, 6});
      break;
    case Family::H:
      edges.push_back({1, 2, 5});
      edges.push_back({2, 3, 3});
      if (n == 4) edges.push_back({3, 4, 3});
      break;
    case Family::I2:
      edges.push_back({1, 2, n});
      break;
  }
  return CoxeterGraph(id.family == Family::I2 || id.family == Family::G ? 2
                                                                        : n,
                      edges);
}

CoxeterGraph parse_graph(const std::string& text) {
  if (auto id = parse_catalog_id(text)) {
    return catalog_graph(*id);
  }
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int rank = -1;
  std::vector<CoxeterGraph::Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::string s = trimmed(line.substr(0, line.find('#')));
    if (s.empty()) continue;
    std::istringstream fields(s);
    std::string head;
    fields >> head;
    if (head == "rank") {
      if (rank >= 0) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": duplicate rank line");
      }
      std::string tok;
      if (!(fields >> tok)) {
        throw ParseError("line " + std::to_string(line_no) + ": missing rank");
      }
      auto value = parse_int(tok);
      if (!value || *value < 0 || *value > kMaxRank) {
        throw ParseError("line " + std::to_string(line_no) + ": bad rank '" +
                         tok + "'");
      }
      rank = *value;
    } else if (head == "edge") {
      if (rank < 0) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": edge before rank line");
      }
      std::string ti, tj, tm;
      if (!(fields >> ti >> tj >> tm)) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": edge needs 'edge i j m'");
      }
      if (tm == "inf" || tm == "infinity" || tm == "oo") {
        throw ParseError("line " + std::to_string(line_no) +
                         ": infinite orders are not supported");
      }
      auto vi = parse_int(ti), vj = parse_int(tj), vm = parse_int(tm);
      if (!vi || !vj || !vm) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": bad edge fields");
      }
      if (*vi < 1 || *vi > rank || *vj < 1 || *vj > rank || *vi == *vj) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": edge endpoints out of range");
      }
      if (*vm < 2) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": edge order must be at least 2");
      }
      for (const auto& e : edges) {
        bool same = (e.i == *vi && e.j == *vj) || (e.i == *vj && e.j == *vi);
        if (same && e.m != *vm) {
          throw ParseError("line " + std::to_string(line_no) +
                           ": conflicting order for edge (" + ti + ", " + tj +
                           ")");
        }
      }
      edges.push_back({*vi, *vj, *vm});
    } else {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 'rank' or 'edge', got '" + head + "'");
    }
  }
  if (rank < 0) {
    throw ParseError("graph text has no rank line and is not a catalog label");
  }
  return CoxeterGraph(rank, edges);
}

int expected_reflection_count(const CatalogId& id) {
  if (!catalog_id_valid(id)) {
    throw std::domain_error("not a spherical catalog id: " +
                            catalog_label(id));
  }
  const int n = id.param;
  switch (id.family) {
    case Family::A:
      return n * (n + 1) / 2;
    case Family::B:
      return n * n;
    case Family::D:
      return n * n - n;
    case Family::E:
      if (n == 6) return 36;
      if (n == 7) return 63;
      return 120;
    case Family::F:
      return 24;
    case Family::G:
      return 6;
    case Family::H:
      return n == 3 ? 15 : 60;
    case Family::I2:
      return n;
  }
  return 0;
}

DisjointUnion disjoint_union(const CoxeterGraph& g1, const CoxeterGraph& g2) {
  const int r1 = g1.rank();
  const int r2 = g2.rank();
  std::vector<CoxeterGraph::Edge> edges;
  for (int i = 1; i <= r1; ++i) {
    for (int j = i + 1; j <= r1; ++j) {
      if (g1.order(i, j) != 2) edges.push_back({i, j, g1.order(i, j)});
    }
  }
  for (int i = 1; i <= r2; ++i) {
    for (int j = i + 1; j <= r2; ++j) {
      if (g2.order(i, j) != 2) edges.push_back({i + r1, j + r1, g2.order(i, j)});
    }
  }
  CoxeterGraph whole(r1 + r2, edges);
  std::vector<int> map2(static_cast<std::size_t>(r2));
  std::iota(map2.begin(), map2.end(), r1 + 1);
  return DisjointUnion{whole, GraphEmbedding(g1, whole, identity_map(r1)),
                       GraphEmbedding(g2, whole, std::move(map2))};
}

Word relabel_word(const Word& w, const GraphEmbedding& e) {
  Word out;
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    out.push_back(e.apply(w.letter(pos)));
  }
  return out;
}

std::vector<ChainStep> inclusion_chain(const CatalogId& id) {
  if (!catalog_id_valid(id)) {
    throw std::domain_error("not a spherical catalog id: " +
                            catalog_label(id));
  }
  std::vector<ChainStep> chain;
  auto push = [&chain](CatalogId step_id, std::vector<int> map) {
    CoxeterGraph g = catalog_graph(step_id);
    const CoxeterGraph prev =
        chain.empty() ? CoxeterGraph() : chain.back().graph;
    GraphEmbedding emb(prev, g, std::move(map));
    chain.push_back({step_id, std::move(g), std::move(emb)});
  };
  auto push_identity = [&](CatalogId step_id) {
    int prev_rank = chain.empty() ? 0 : chain.back().graph.rank();
    push(step_id, identity_map(prev_rank));
  };

  const int n = id.param;
  push_identity({Family::A, 1});
  switch (id.family) {
    case Family::A:
      for (int k = 2; k <= n; ++k) push_identity({Family::A, k});
      break;
    case Family::B:
      for (int k = 2; k <= n; ++k) push_identity({Family::B, k});
      break;
    case Family::D:
      for (int k = 2; k <= n - 1; ++k) push_identity({Family::A, k});
      push_identity({Family::D, n});
      break;
    case Family::E:
      for (int k = 2; k <= 4; ++k) push_identity({Family::A, k});
      push_identity({Family::D, 5});
      for (int k = 6; k <= n; ++k) push_identity({Family::E, k});
      break;
    case Family::F:
      push_identity({Family::B, 2});
      push_identity({Family::B, 3});
      push({Family::F, 4}, {3, 2, 1});  // the B3 chain sits on x3, x2, x1
      break;
    case Family::G:
      push_identity({Family::G, 2});
      break;
    case Family::H:
      push_identity({Family::I2, 5});
      push_identity({Family::H, 3});
      if (n == 4) push_identity({Family::H, 4});
      break;
    case Family::I2:
      push_identity({Family::I2, n});
      break;
  }
  return chain;
}

}  // namespace garside
