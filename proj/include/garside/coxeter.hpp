#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "garside/word.hpp"

namespace garside {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Family { A, B, D, E, F, G, H, I2 };

// Catalog identifier: family plus rank (or the dihedral order p for I2).
// Admitted parameters follow the classification of the connected graphs
// whose Coxeter group is finite: A n>=1, B n>=2, D n>=4 plus the D3 alias
// for the relabeled A3 fork, E 6..8, F4, G2, H3, H4, I2(p) p>=5 and p != 6
// (I2(6) is written G2).
struct CatalogId {
  Family family = Family::A;
  int param = 1;
  bool operator==(const CatalogId&) const = default;
};

bool catalog_id_valid(const CatalogId& id);
std::string catalog_label(const CatalogId& id);  // "A5", "I2(7)", ...
std::optional<CatalogId> parse_catalog_id(const std::string& text);

// Coxeter graph on vertices 1..rank storing the finite order m(i,j) >= 2 for
// every pair; m(i,i) = 1. Infinite orders are rejected up front, which keeps
// every presentation in scope complemented and homogeneous.
class CoxeterGraph {
 public:
  struct Edge {
    int i;
    int j;
    int m;
  };

  CoxeterGraph() = default;  // rank 0, the empty graph
  CoxeterGraph(int rank, const std::vector<Edge>& edges);

  int rank() const { return rank_; }
  int order(int i, int j) const;
  bool valid_vertex(int v) const { return v >= 1 && v <= rank_; }
  bool valid_word(const Word& w) const;

  bool operator==(const CoxeterGraph&) const = default;

 private:
  int rank_ = 0;
  std::vector<int> orders_;  // rank*rank, row-major, 1-based vertices
};

// Injective map of one graph onto a full subgraph of another, preserving
// every pairwise order. vertex_map()[i-1] is the target vertex for source
// vertex i.
class GraphEmbedding {
 public:
  GraphEmbedding(CoxeterGraph source, CoxeterGraph target,
                 std::vector<int> vertex_map);

  const CoxeterGraph& source() const { return source_; }
  const CoxeterGraph& target() const { return target_; }
  const std::vector<int>& vertex_map() const { return map_; }
  int apply(int source_vertex) const;
  bool hits_target_vertex(int v) const;

 private:
  CoxeterGraph source_;
  CoxeterGraph target_;
  std::vector<int> map_;
};

CoxeterGraph catalog_graph(const CatalogId& id);

// Text format: a "rank N" line followed by "edge i j m" lines; omitted pairs
// commute (m = 2). '#' starts a comment. A catalog label ("B3", "I2(7)") is
// accepted in place of the full format. Infinite orders ("inf") are refused
// with the offending line number.
CoxeterGraph parse_graph(const std::string& text);

// Number of reflections of the finite Coxeter group, which is also the letter
// length of the Garside element.
int expected_reflection_count(const CatalogId& id);

struct DisjointUnion {
  CoxeterGraph graph;
  GraphEmbedding first;
  GraphEmbedding second;
};

// Side-by-side union: vertices of the second part are shifted past the first,
// all cross orders are 2. The rank-0 graph is the unit.
DisjointUnion disjoint_union(const CoxeterGraph& g1, const CoxeterGraph& g2);

// Applies the embedding letterwise. Letters outside the source alphabet are
// an error.
Word relabel_word(const Word& w, const GraphEmbedding& e);

// One step of the factorization chain of a catalog graph: the step's graph
// plus the embedding of the previous step's graph (rank 0 for the first
// step). Every chain starts at A1 and grows one vertex per step.
struct ChainStep {
  CatalogId id;
  CoxeterGraph graph;
  GraphEmbedding from_previous;
};

// A1 < A2 < ... for the A family; A1 < B2 < B3 < ... for B; the A chain up to
// A(n-1) then D(n) for D; A1 < I2(p) for the dihedral types; A1 < B2 < B3 <
// F4 with B3 embedded on {x3, x2, x1}; A1 < I2(5) < H3 < H4; the A chain up
// to A4, then D5, then E6 < E7 < E8.
std::vector<ChainStep> inclusion_chain(const CatalogId& id);

}  // namespace garside
