#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "locobs/integer.hpp"

namespace locobs {

/// A finite abelian group in invariant-factor normal form
/// Z/f1 + Z/f2 + ... with every fi >= 2 and fi | f(i+1).
///
/// The representation is canonical, so two groups are isomorphic exactly when
/// they compare equal.
class FiniteAbelianGroup {
 public:
  /// The trivial group.
  FiniteAbelianGroup() = default;

  /// Builds a group from a divisibility chain. Entries equal to 1 are dropped;
  /// anything nonpositive or out of divisibility order is a ValidationError.
  static FiniteAbelianGroup from_invariant_factors(std::span<const Integer> factors);

  /// Z/n; trivial for n == 1.
  static FiniteAbelianGroup cyclic(const Integer& n);

  /// The group of the given order when the order alone determines it
  /// (squarefree orders force a cyclic group). Empty optional otherwise.
  static std::optional<FiniteAbelianGroup> determined_by_order(const Integer& order);

  const std::vector<Integer>& invariant_factors() const noexcept { return factors_; }
  Integer order() const;
  bool is_trivial() const noexcept { return factors_.empty(); }

  /// "Z/d1 + Z/d2", or "0" for the trivial group.
  std::string to_string() const;

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

 private:
  std::vector<Integer> factors_;
};

}  // namespace locobs
