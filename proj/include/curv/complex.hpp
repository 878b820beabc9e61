#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "curv/bitset.hpp"
#include "curv/types.hpp"

namespace curv {

// A finite simplicial complex: vertex count, maximal simplices, and a derived
// 1-skeleton adjacency matrix. Instances are immutable after construction and
// safe for concurrent reads. Complexes built as clique complexes keep only the
// graph and enumerate their maximal cliques lazily (cached, synchronized).
class Complex {
 public:
  Complex();  // the empty complex

  // Keeps the inclusion-maximal members of `simplices`. Every vertex must be
  // covered by some simplex; ids must lie in [0, vertex_count).
  static Complex from_maximal_simplices(int vertex_count, std::vector<Simplex> simplices);

  // The flag complex on a graph: maximal simplices are the maximal cliques.
  static Complex clique_complex(int vertex_count, const std::vector<std::pair<int, int>>& edges);
  static Complex clique_complex(BitMatrix adjacency);

  int vertex_count() const { return n_; }
  bool empty() const { return n_ == 0; }

  bool adjacent(VertexId u, VertexId v) const { return adj_.get(u, v); }
  std::span<const std::uint64_t> adjacency_row(VertexId v) const { return adj_.row(v); }
  const BitMatrix& adjacency() const { return adj_; }
  int degree(VertexId v) const;
  std::vector<VertexId> neighbours(VertexId v) const;

  // True when this instance was constructed as a clique complex, in which
  // case face queries reduce to pairwise adjacency.
  bool flag_backed() const { return flag_backed_; }

  const std::vector<Simplex>& maximal_simplices() const;

  // Whether the (sorted, distinct) vertex set spans a simplex.
  bool spans_simplex(std::span<const VertexId> sorted_vertices) const;
  bool contains_simplex(Simplex s) const;  // sorts and validates its argument

  int dimension() const;
  std::vector<std::int64_t> f_vector() const;
  std::int64_t euler_characteristic() const;
  // All faces grouped by dimension, each list sorted lexicographically.
  std::vector<std::vector<Simplex>> simplices_by_dimension() const;

  bool operator==(const Complex& o) const;

 private:
  struct Cache;

  int n_ = 0;
  BitMatrix adj_;
  bool flag_backed_ = false;
  std::shared_ptr<Cache> cache_;

  void ensure_maximal() const;
  void ensure_incidence() const;
  friend Verdict is_flag(const Complex&);
};

// A complex cut out of an ambient one, with the translation table back to
// ambient ids (to_ambient is strictly increasing).
struct Subcomplex {
  Complex complex;
  std::vector<VertexId> to_ambient;

  VertexId ambient_of(VertexId local) const { return to_ambient[local]; }
  int local_of(VertexId ambient) const;  // -1 if absent
  std::vector<VertexId> ambient_vertices(std::span<const VertexId> locals) const;
};

// Pass iff the complex equals the clique complex of its own 1-skeleton; the
// failure witness is a minimal pairwise-adjacent set spanning no simplex.
Verdict is_flag(const Complex& c);

// The link of a face: vertices v with sigma+v spanning a simplex, and all
// simplices disjoint from sigma whose union with sigma spans.
Subcomplex link(const Complex& c, const Simplex& sigma);

Subcomplex induced_subcomplex(const Complex& c, std::vector<VertexId> vertices);

// Vertex set is the disjoint union; maximal simplices are unions of one
// maximal simplex from each factor.
Complex join(const Complex& a, const Complex& b);

// Maximal cliques of an adjacency matrix (Bron-Kerbosch with pivoting),
// sorted lexicographically.
std::vector<Simplex> maximal_cliques(const BitMatrix& adj, std::size_t limit = kMaxMaximalSimplices);

}  // namespace curv
