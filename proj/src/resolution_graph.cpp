#include "locobs/resolution_graph.hpp"

#include <numeric>

#include "locobs/error.hpp"

namespace locobs {

ResolutionGraph::ResolutionGraph(std::vector<ExceptionalCurve> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  const std::size_t n = vertices_.size();
  if (n == 0) throw ValidationError("resolution graph has no vertices");
  for (std::size_t i = 0; i < n; ++i) {
    if (vertices_[i].genus < 0) {
      throw ValidationError("vertex " + std::to_string(i) + " has negative genus");
    }
  }

  // union-find for connectivity
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (const auto& [a, b] : edges_) {
    if (a >= n || b >= n) {
      throw ValidationError("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                            ") refers to a missing vertex");
    }
    if (a == b) throw ValidationError("self-loop at vertex " + std::to_string(a));
    const std::size_t ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  if (components != 1) throw ValidationError("resolution graph is not connected");
}

std::int64_t ResolutionGraph::total_genus() const {
  std::int64_t total = 0;
  for (const auto& v : vertices_) total += v.genus;
  return total;
}

IntMatrix intersection_matrix(const ResolutionGraph& graph) {
  const std::size_t n = graph.size();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = graph.vertices()[i].self_intersection;
  for (const auto& [a, b] : graph.edges()) {
    m(a, b) += 1;
    m(b, a) += 1;
  }
  return m;
}

char to_char(AdeKind kind) {
  switch (kind) {
    case AdeKind::A: return 'A';
    case AdeKind::D: return 'D';
    case AdeKind::E: return 'E';
  }
  return '?';
}

void validate_ade(AdeKind kind, std::int64_t n) {
  switch (kind) {
    case AdeKind::A:
      if (n < 1) throw ValidationError("A requires n ≥ 1");
      break;
    case AdeKind::D:
      if (n < 4) throw ValidationError("D requires n ≥ 4");
      break;
    case AdeKind::E:
      if (n < 6 || n > 8) throw ValidationError("E requires n in {6, 7, 8}");
      break;
  }
}

ResolutionGraph ade_graph(AdeKind kind, std::int64_t n) {
  validate_ade(kind, n);
  const auto size = static_cast<std::size_t>(n);
  std::vector<ExceptionalCurve> vertices(size, ExceptionalCurve{-2, 0});
  std::vector<ResolutionGraph::Edge> edges;
  switch (kind) {
    case AdeKind::A:
      for (std::size_t i = 0; i + 1 < size; ++i) edges.emplace_back(i, i + 1);
      break;
    case AdeKind::D:
      for (std::size_t i = 0; i + 3 < size; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(size - 3, size - 2);
      edges.emplace_back(size - 3, size - 1);
      break;
    case AdeKind::E:
      for (std::size_t i = 0; i + 2 < size; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(2, size - 1);
      break;
  }
  return ResolutionGraph(std::move(vertices), std::move(edges));
}

mpq_class ContinuedFraction::evaluate() const {
  if (terms.empty()) throw ValidationError("empty continued fraction");
  mpq_class value(static_cast<long>(terms.back()));
  for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) {
    value = mpq_class(static_cast<long>(*it)) - 1 / value;
  }
  value.canonicalize();
  return value;
}

HirzebruchJungResolution hirzebruch_jung(std::int64_t n, std::int64_t q) {
  if (n < 2) throw ValidationError("n must be at least 2, got " + std::to_string(n));
  if (q < 1 || q >= n) {
    throw ValidationError("q must satisfy 1 <= q < n, got q = " + std::to_string(q));
  }
  if (std::gcd(n, q) != 1) {
    throw ValidationError("gcd(n, q) must be 1, got gcd(" + std::to_string(n) + ", " +
                          std::to_string(q) + ") = " + std::to_string(std::gcd(n, q)));
  }

  ContinuedFraction fraction{n, q, {}};
  std::int64_t num = n, den = q;
  while (den > 0) {
    const std::int64_t b = (num + den - 1) / den;  // ceil
    fraction.terms.push_back(b);
    const std::int64_t next = b * den - num;
    num = den;
    den = next;
  }

  std::vector<ExceptionalCurve> vertices;
  std::vector<ResolutionGraph::Edge> edges;
  for (std::size_t i = 0; i < fraction.terms.size(); ++i) {
    vertices.push_back({-fraction.terms[i], 0});
    if (i > 0) edges.emplace_back(i - 1, i);
  }
  return {std::move(fraction), ResolutionGraph(std::move(vertices), std::move(edges))};
}

}  // namespace locobs
