#include "locobs/abelian_group.hpp"

#include "locobs/error.hpp"

namespace locobs {

FiniteAbelianGroup FiniteAbelianGroup::from_invariant_factors(std::span<const Integer> factors) {
  FiniteAbelianGroup group;
  for (const Integer& f : factors) {
    if (sgn(f) <= 0) {
      throw ValidationError("invariant factor " + locobs::to_string(f) +
                            " is not a positive integer");
    }
    if (f == 1) continue;
    if (!group.factors_.empty() && !mpz_divisible_p(f.get_mpz_t(), group.factors_.back().get_mpz_t())) {
      throw ValidationError("invariant factors out of divisibility order: " +
                            locobs::to_string(group.factors_.back()) + " does not divide " +
                            locobs::to_string(f));
    }
    group.factors_.push_back(f);
  }
  return group;
}

FiniteAbelianGroup FiniteAbelianGroup::cyclic(const Integer& n) {
  const Integer factors[] = {n};
  return from_invariant_factors(factors);
}

std::optional<FiniteAbelianGroup> FiniteAbelianGroup::determined_by_order(const Integer& order) {
  if (sgn(order) <= 0) return std::nullopt;
  Integer rest = order;
  // Trial division is plenty for the orders that show up here; give up on
  // anything with a large unfactored cofactor.
  for (unsigned long p = 2; p <= 1000000UL; ++p) {
    if (Integer(p) * p > rest) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      rest /= p;
      if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) return std::nullopt;
    }
  }
  if (rest > Integer(1000000UL) * 1000000UL) return std::nullopt;
  return cyclic(order);
}

Integer FiniteAbelianGroup::order() const {
  Integer out = 1;
  for (const Integer& f : factors_) out *= f;
  return out;
}

std::string FiniteAbelianGroup::to_string() const {
  if (factors_.empty()) return "0";
  std::string out;
  for (const Integer& f : factors_) {
    if (!out.empty()) out += " + ";
    out += "Z/" + locobs::to_string(f);
  }
  return out;
}

}  // namespace locobs
