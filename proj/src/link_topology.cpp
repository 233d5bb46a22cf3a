#include "locobs/link_topology.hpp"

#include <numeric>

#include "locobs/error.hpp"

namespace locobs {

LinkHomology link_homology_from_h1(std::size_t free_rank, FiniteAbelianGroup torsion) {
  LinkHomology out;
  out.h1_free_rank = free_rank;
  out.h2_torsion = torsion;
  out.h1_torsion = std::move(torsion);
  return out;
}

LinkHomology link_from_plumbing(const ResolutionGraph& graph) {
  const IntMatrix m = intersection_matrix(graph);
  if (!is_negative_definite(m)) {
    throw NotResolutionGraphError(
        "not a resolution graph: intersection matrix is not negative definite");
  }
  const Cokernel coker = cokernel(m);
  const auto free_rank =
      static_cast<std::size_t>(2 * graph.total_genus()) + graph.cycle_rank();
  return link_homology_from_h1(free_rank, coker.torsion);
}

LinkHomology lens_space_h1(std::int64_t n, std::int64_t q) {
  if (n < 1) throw ValidationError("lens space order n must be at least 1");
  if (q < 0 || q >= n) throw ValidationError("lens space parameter q must satisfy 0 <= q < n");
  if (std::gcd(n, q) != 1) {
    throw ValidationError("lens space parameters must be coprime, got (" + std::to_string(n) +
                          ", " + std::to_string(q) + ")");
  }
  return link_homology_from_h1(0, FiniteAbelianGroup::cyclic(Integer(static_cast<long>(n))));
}

Integer brieskorn_h1_order(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (a < 2 || b < 2 || c < 2) throw ValidationError("Brieskorn exponents must be at least 2");
  if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1) {
    throw ValidationError("Brieskorn exponents must be pairwise coprime, got (" +
                          std::to_string(a) + ", " + std::to_string(b) + ", " +
                          std::to_string(c) + ")");
  }
  const Integer A(static_cast<long>(a)), B(static_cast<long>(b)), C(static_cast<long>(c));
  return abs(A * B + A * C + B * C - A * B * C);
}

}  // namespace locobs
