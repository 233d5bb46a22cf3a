#pragma once

#include <cstddef>
#include <cstdint>

#include "locobs/abelian_group.hpp"
#include "locobs/resolution_graph.hpp"

namespace locobs {

/// Homology of a closed oriented 3-manifold link: H1 = Z^b1 + torsion, and the
/// torsion of H2 with integral coefficients, which for a closed oriented
/// 3-manifold is the torsion of H1 (universal coefficients + duality).
struct LinkHomology {
  std::size_t h1_free_rank = 0;
  FiniteAbelianGroup h1_torsion;
  FiniteAbelianGroup h2_torsion;

  /// b1 == 0.
  bool is_rational_homology_sphere() const noexcept { return h1_free_rank == 0; }

  friend bool operator==(const LinkHomology&, const LinkHomology&) = default;
};

/// Builds the record from H1, transferring its torsion to H2.
LinkHomology link_homology_from_h1(std::size_t free_rank, FiniteAbelianGroup torsion);

/// Boundary of the plumbing: torsion from the cokernel of the intersection
/// matrix, b1 = 2 * (sum of genera) + cycle rank. Throws
/// NotResolutionGraphError unless the intersection matrix is negative definite.
LinkHomology link_from_plumbing(const ResolutionGraph& graph);

/// Lens space L(n, q): H1 = Z/n. Requires n >= 1, 0 <= q < n, gcd(n, q) == 1.
LinkHomology lens_space_h1(std::int64_t n, std::int64_t q);

/// |ab + ac + bc - abc| for pairwise coprime a, b, c >= 2. An order only; no
/// group structure is claimed.
Integer brieskorn_h1_order(std::int64_t a, std::int64_t b, std::int64_t c);

}  // namespace locobs
