#include "locobs/lattice.hpp"

#include <stdexcept>

#include "locobs/error.hpp"

namespace locobs {

Lattice Lattice::make(IntMatrix gram) {
  if (!gram.is_square()) {
    throw ValidationError("Gram matrix must be square, got " + std::to_string(gram.rows()) +
                          "x" + std::to_string(gram.cols()));
  }
  if (!gram.is_symmetric()) throw ValidationError("Gram matrix must be symmetric");
  Integer det = locobs::determinant(gram);
  if (sgn(det) == 0) throw DegeneracyError("Gram matrix is singular (det = 0)");
  return Lattice(std::move(gram), std::move(det));
}

FiniteAbelianGroup discriminant_group(const Lattice& lattice) {
  const Cokernel coker = cokernel(lattice.gram());
  if (coker.free_rank != 0) {
    throw std::logic_error("nondegenerate Gram matrix has a cokernel with free part");
  }
  return coker.torsion;
}

bool is_unimodular(const Lattice& lattice) {
  const bool by_det = abs(lattice.determinant()) == 1;
  const FiniteAbelianGroup disc = discriminant_group(lattice);
  const bool by_group = disc.is_trivial();
  const bool by_order = disc.order() == abs(lattice.determinant());
  if (by_det != by_group || !by_order) {
    throw std::logic_error("unimodularity characterizations disagree for Gram matrix " +
                           lattice.gram().to_string());
  }
  return by_det;
}

}  // namespace locobs
