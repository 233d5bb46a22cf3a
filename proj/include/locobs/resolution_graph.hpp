#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "locobs/int_matrix.hpp"

namespace locobs {

/// An exceptional curve: its self-intersection and genus.
struct ExceptionalCurve {
  std::int64_t self_intersection = 0;
  std::int64_t genus = 0;

  friend bool operator==(const ExceptionalCurve&, const ExceptionalCurve&) = default;
};

/// Weighted dual graph of an exceptional divisor. Edges are unordered pairs of
/// distinct vertex indices; repeated edges count as repeated intersection
/// points. The graph is connected and nonempty.
class ResolutionGraph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  /// Throws ValidationError on self-loops, out-of-range endpoints, negative
  /// genus, an empty vertex list, or a disconnected graph.
  ResolutionGraph(std::vector<ExceptionalCurve> vertices, std::vector<Edge> edges);

  const std::vector<ExceptionalCurve>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return vertices_.size(); }

  /// First Betti number of the graph, |E| - |V| + 1.
  std::size_t cycle_rank() const noexcept { return edges_.size() + 1 - vertices_.size(); }
  std::int64_t total_genus() const;

  friend bool operator==(const ResolutionGraph&, const ResolutionGraph&) = default;

 private:
  std::vector<ExceptionalCurve> vertices_;
  std::vector<Edge> edges_;
};

/// Diagonal: self-intersections. Off-diagonal (i, j): number of edges i--j.
IntMatrix intersection_matrix(const ResolutionGraph& graph);

enum class AdeKind { A, D, E };

char to_char(AdeKind kind);

/// Throws ValidationError unless A: n >= 1, D: n >= 4, E: n in {6, 7, 8}.
void validate_ade(AdeKind kind, std::int64_t n);

/// Dynkin diagram with every curve a (-2)-sphere. Vertex order:
///   A_n  chain 0..n-1
///   D_n  chain 0..n-3, leaves n-2 and n-1 on vertex n-3
///   E_n  chain 0..n-2, vertex n-1 on vertex 2
ResolutionGraph ade_graph(AdeKind kind, std::int64_t n);

/// n/q = b1 - 1/(b2 - 1/(... - 1/bs)), every bi >= 2.
struct ContinuedFraction {
  std::int64_t numerator = 0;
  std::int64_t denominator = 0;
  std::vector<std::int64_t> terms;

  /// Evaluates the terms back to a reduced fraction.
  mpq_class evaluate() const;
};

struct HirzebruchJungResolution {
  ContinuedFraction fraction;
  ResolutionGraph graph;
};

/// Minimal resolution chain of the cyclic quotient 1/n(1,q): rational curves
/// with self-intersections -b1, ..., -bs. Requires n >= 2, 1 <= q < n and
/// gcd(n, q) == 1.
HirzebruchJungResolution hirzebruch_jung(std::int64_t n, std::int64_t q);

}  // namespace locobs
