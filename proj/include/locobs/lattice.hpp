#pragma once

#include <cstddef>

#include "locobs/abelian_group.hpp"
#include "locobs/int_matrix.hpp"

namespace locobs {

/// A nondegenerate integral lattice, given by its Gram matrix in a fixed
/// basis. For resolution lattices the Gram matrix is the geometric
/// intersection form, so it is negative definite.
class Lattice {
 public:
  /// Rejects non-square or asymmetric Gram matrices (ValidationError) and
  /// singular ones (DegeneracyError).
  static Lattice make(IntMatrix gram);

  const IntMatrix& gram() const noexcept { return gram_; }
  std::size_t rank() const noexcept { return gram_.rows(); }
  /// det of the Gram matrix, sign included.
  const Integer& determinant() const noexcept { return det_; }

 private:
  Lattice(IntMatrix gram, Integer det) : gram_(std::move(gram)), det_(std::move(det)) {}

  IntMatrix gram_;
  Integer det_;
};

inline Lattice make_lattice(IntMatrix gram) { return Lattice::make(std::move(gram)); }

/// The dual quotient of the lattice: the cokernel of the Gram embedding into
/// its dual. Its order is |det(gram)|.
FiniteAbelianGroup discriminant_group(const Lattice& lattice);

/// True iff the Gram matrix has determinant +-1. The discriminant-group and
/// determinant characterizations are both evaluated; a disagreement throws
/// std::logic_error.
bool is_unimodular(const Lattice& lattice);

}  // namespace locobs
