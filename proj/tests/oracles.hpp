#pragma once

// Reference computations for the tests. None of these call determinant(),
// smith_normal_form() or cokernel(); they exist to check those.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "locobs/abelian_group.hpp"
#include "locobs/int_matrix.hpp"

namespace oracle {

using locobs::Integer;
using locobs::IntMatrix;

// Cofactor expansion along the first row.
inline Integer laplace_determinant(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (sgn(m(0, j)) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    const Integer term = m(0, j) * laplace_determinant(minor);
    total += (j % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

inline void combinations(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out,
                         std::vector<std::size_t>& cur, std::size_t start = 0) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, out, cur, i + 1);
    cur.pop_back();
  }
}

// Invariant factors d_k / d_(k-1), where d_k is the gcd of all k x k minors.
inline std::vector<Integer> determinantal_invariant_factors(const IntMatrix& m) {
  const std::size_t r = std::min(m.rows(), m.cols());
  std::vector<Integer> out;
  Integer previous = 1;
  for (std::size_t k = 1; k <= r; ++k) {
    std::vector<std::vector<std::size_t>> rows, cols;
    std::vector<std::size_t> cur;
    combinations(m.rows(), k, rows, cur);
    combinations(m.cols(), k, cols, cur);
    Integer g = 0;
    for (const auto& rs : rows)
      for (const auto& cs : cols) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rs[i], cs[j]);
        g = locobs::gcd_of(g, laplace_determinant(sub));
      }
    if (sgn(g) == 0) {
      out.resize(r, Integer(0));
      return out;
    }
    out.push_back(g / previous);
    previous = g;
  }
  return out;
}

// Brute-force structure of Z^n / image(m) for a nonsingular n x n matrix with
// small |det|. Since |det| Z^n lies in the image, every class has a
// representative in (Z/N)^n; x lies in the image iff adj(m) x == 0 mod N.
// Counting solutions of d x in image for every prime power d recovers the
// group.
inline locobs::FiniteAbelianGroup enumerate_cokernel(const IntMatrix& m) {
  const std::size_t n = m.rows();
  const Integer det_big = laplace_determinant(m);
  const long N = std::abs(det_big.get_si());
  if (N == 1) return {};

  // adjugate via cofactors, reduced mod N
  std::vector<long> adj(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c)
          if (c != i) minor(rr, cc++) = m(r, c);
        ++rr;
      }
      Integer cof = laplace_determinant(minor);
      if ((i + j) % 2) cof = -cof;
      Integer red = cof % N;
      if (red < 0) red += N;
      adj[i * n + j] = red.get_si();
    }

  auto count_killed_by = [&](long d) {
    // Odometer over x in (Z/N)^n, keeping y = adj (d x) mod N up to date by
    // adding one column per step.
    std::vector<long> column(n * n);  // column[j * n + i] = adj(i, j) d mod N
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) column[j * n + i] = (adj[i * n + j] * (d % N)) % N;
    std::vector<long> x(n, 0), y(n, 0);
    long count = 0;
    for (;;) {
      count += std::all_of(y.begin(), y.end(), [](long v) { return v == 0; });
      std::size_t j = 0;
      for (; j < n; ++j) {
        const long* c = &column[j * n];
        if (++x[j] < N) {
          for (std::size_t i = 0; i < n; ++i) {
            y[i] += c[i];
            if (y[i] >= N) y[i] -= N;
          }
          break;
        }
        // wrap: x[j] returns to 0, undoing (N - 1) additions of column j
        x[j] = 0;
        for (std::size_t i = 0; i < n; ++i) {
          y[i] += c[i];
          if (y[i] >= N) y[i] -= N;
        }
      }
      if (j == n) break;
    }
    long image_size = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) image_size *= N;
    return count / image_size;  // |{g : d g = 0}|
  };

  // For each prime p with p^e || N: the number of cyclic p-factors of
  // exponent >= k is log_p(|G[p^k]| / |G[p^(k-1)]|).
  std::map<long, std::vector<long>> exponents;  // p -> exponents of p-parts
  long rest = N;
  for (long p = 2; p <= rest; ++p) {
    if (rest % p) continue;
    long e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    std::vector<long> at_least;
    long prev = 1, pk = 1;
    for (long k = 1; k <= e; ++k) {
      pk *= p;
      const long killed = count_killed_by(pk);
      long ratio = killed / prev, c = 0;
      while (ratio > 1) {
        ratio /= p;
        ++c;
      }
      at_least.push_back(c);
      prev = killed;
    }
    std::vector<long>& exps = exponents[p];
    for (std::size_t k = 0; k < at_least.size(); ++k) {
      const long next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
      for (long c = 0; c < at_least[k] - next; ++c) exps.push_back(static_cast<long>(k + 1));
    }
  }

  // Assemble invariant factors: the i-th largest factor takes the i-th largest
  // power of every prime.
  std::size_t length = 0;
  for (auto& [p, exps] : exponents) {
    std::sort(exps.rbegin(), exps.rend());
    length = std::max(length, exps.size());
  }
  std::vector<Integer> factors(length, Integer(1));
  for (const auto& [p, exps] : exponents)
    for (std::size_t i = 0; i < exps.size(); ++i) {
      Integer power = 1;
      for (long e = 0; e < exps[i]; ++e) power *= p;
      factors[length - 1 - i] *= power;
    }
  return locobs::FiniteAbelianGroup::from_invariant_factors(factors);
}

// Coefficients c_0..c_n of det(tI - A) by Faddeev-LeVerrier.
inline std::vector<Integer> characteristic_polynomial(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<Integer> c(n + 1);
  c[n] = 1;
  IntMatrix mk(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix next = a * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = next;
    const IntMatrix am = a * mk;
    Integer trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    c[n - k] = -trace / static_cast<long>(k);
  }
  return c;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

inline IntMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, long bound) {
  IntMatrix m = random_matrix(rng, n, n, bound);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) m(i, j) = m(j, i);
  return m;
}

// Product of random elementary matrices and sign flips.
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 12) {
  IntMatrix p = IntMatrix::identity(n);
  if (n == 0) return p;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<long> factor(-3, 3);
  for (int s = 0; s < steps; ++s) {
    const std::size_t i = idx(rng), j = idx(rng);
    if (i != j) {
      p.add_row_multiple(i, j, factor(rng));
    } else {
      p.negate_row(i);
    }
  }
  return p;
}

}  // namespace oracle
