#include "locobs/monodromy.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "locobs/error.hpp"

namespace locobs {

MonodromyOperator MonodromyOperator::make(IntMatrix matrix) {
  const Integer det = determinant(matrix);
  if (abs(det) != 1) {
    throw ValidationError("monodromy must be invertible over Z, got det = " + to_string(det));
  }
  return MonodromyOperator(std::move(matrix));
}

MonodromyOperator coxeter_operator(AdeKind kind, std::int64_t n) {
  validate_ade(kind, n);
  std::vector<std::size_t> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), std::size_t{0});
  return coxeter_operator(kind, n, order);
}

MonodromyOperator coxeter_operator(AdeKind kind, std::int64_t n,
                                   std::span<const std::size_t> reflection_order) {
  const IntMatrix cartan = -intersection_matrix(ade_graph(kind, n));
  const std::size_t rank = cartan.rows();

  std::vector<std::size_t> sorted(reflection_order.begin(), reflection_order.end());
  std::sort(sorted.begin(), sorted.end());
  bool is_permutation = sorted.size() == rank;
  for (std::size_t i = 0; is_permutation && i < rank; ++i) is_permutation = sorted[i] == i;
  if (!is_permutation) {
    throw ValidationError("reflection order must be a permutation of 0.." +
                          std::to_string(rank - 1));
  }

  IntMatrix t = IntMatrix::identity(rank);
  for (std::size_t i : reflection_order) {
    // s_i = id - e_i * (row i of the Cartan matrix)
    IntMatrix reflection = IntMatrix::identity(rank);
    for (std::size_t k = 0; k < rank; ++k) reflection(i, k) -= cartan(i, k);
    t = t * reflection;
  }
  return MonodromyOperator::make(std::move(t));
}

IntMatrix cyclotomic_companion(std::int64_t m) {
  if (m < 2) throw ValidationError("exponent must be at least 2, got " + std::to_string(m));
  const auto size = static_cast<std::size_t>(m - 1);
  IntMatrix c(size, size);
  for (std::size_t i = 1; i < size; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < size; ++i) c(i, size - 1) = -1;
  return c;
}

MonodromyOperator brieskorn_pham_operator(std::int64_t a, std::int64_t b, std::int64_t c) {
  for (std::int64_t e : {a, b, c}) {
    if (e < 2) throw ValidationError("exponent must be at least 2, got " + std::to_string(e));
  }
  return MonodromyOperator::make(
      kronecker(kronecker(cyclotomic_companion(a), cyclotomic_companion(b)),
                cyclotomic_companion(c)));
}

VariationResult variation(const MonodromyOperator& t) {
  const IntMatrix shifted = t.matrix() - IntMatrix::identity(t.mu());
  const Cokernel coker = cokernel(shifted);
  VariationResult out;
  out.cokernel_torsion = coker.torsion;
  out.cokernel_free_rank = coker.free_rank;
  // square map: rank defect on either side is the same
  out.kernel_rank = coker.free_rank;
  out.det_t_minus_id = determinant(shifted);
  return out;
}

}  // namespace locobs
