#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "locobs/abelian_group.hpp"
#include "locobs/int_matrix.hpp"
#include "locobs/resolution_graph.hpp"

namespace locobs {

/// Integral monodromy T acting on the vanishing lattice Z^mu. T must be an
/// automorphism: |det T| == 1.
class MonodromyOperator {
 public:
  /// Throws DimensionError for non-square input, ValidationError if
  /// |det| != 1.
  static MonodromyOperator make(IntMatrix matrix);

  const IntMatrix& matrix() const noexcept { return matrix_; }
  std::size_t mu() const noexcept { return matrix_.rows(); }

 private:
  explicit MonodromyOperator(IntMatrix matrix) : matrix_(std::move(matrix)) {}
  IntMatrix matrix_;
};

/// Product s_1 s_2 ... s_n of the simple reflections s_i(x) = x - (x, a_i) a_i
/// in the root basis, with the form given by the positive Cartan matrix and the
/// vertices taken in ade_graph order.
MonodromyOperator coxeter_operator(AdeKind kind, std::int64_t n);

/// Same, with the reflections multiplied in the given order (a permutation of
/// 0..n-1).
MonodromyOperator coxeter_operator(AdeKind kind, std::int64_t n,
                                   std::span<const std::size_t> reflection_order);

/// (m-1)x(m-1) companion matrix of 1 + t + ... + t^(m-1). m >= 2.
IntMatrix cyclotomic_companion(std::int64_t m);

/// C_a (x) C_b (x) C_c on Z^((a-1)(b-1)(c-1)).
MonodromyOperator brieskorn_pham_operator(std::int64_t a, std::int64_t b, std::int64_t c);

struct VariationResult {
  std::size_t kernel_rank = 0;
  FiniteAbelianGroup cokernel_torsion;
  std::size_t cokernel_free_rank = 0;
  Integer det_t_minus_id;

  /// (T - id) tensor Q is invertible, so |coker| == |det(T - id)|.
  bool rationally_invertible() const { return sgn(det_t_minus_id) != 0; }

  friend bool operator==(const VariationResult&, const VariationResult&) = default;
};

/// Kernel rank, cokernel and determinant of T - id. The cokernel comes from the
/// Smith form; the determinant from fraction-free elimination.
VariationResult variation(const MonodromyOperator& t);

}  // namespace locobs
