#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "locobs/abelian_group.hpp"
#include "locobs/link_topology.hpp"
#include "locobs/resolution_graph.hpp"

namespace locobs {

struct AdeSpec {
  AdeKind kind = AdeKind::A;
  std::int64_t n = 1;
  friend bool operator==(const AdeSpec&, const AdeSpec&) = default;
};

/// C^2 / (1/n)(1, q)
struct CyclicQuotientSpec {
  std::int64_t n = 2;
  std::int64_t q = 1;
  friend bool operator==(const CyclicQuotientSpec&, const CyclicQuotientSpec&) = default;
};

/// x^a + y^b + z^c
struct BrieskornPhamSpec {
  std::int64_t a = 2;
  std::int64_t b = 3;
  std::int64_t c = 5;
  friend bool operator==(const BrieskornPhamSpec&, const BrieskornPhamSpec&) = default;
};

struct PlumbingSpec {
  ResolutionGraph graph;
  friend bool operator==(const PlumbingSpec&, const PlumbingSpec&) = default;
};

using SingularitySpec = std::variant<AdeSpec, CyclicQuotientSpec, BrieskornPhamSpec, PlumbingSpec>;

/// Short label: "A_3", "1/5(1,2)", "x^2+y^3+z^11", "plumbing(4 curves)".
std::string describe(const SingularitySpec& spec);

/// Checks the parameter constraints of each variant; the ValidationError
/// message names the offending field.
void validate_spec(const SingularitySpec& spec);

/// Parses the JSON input document ({"kind": "ade", "type": "A", "n": 3}, ...).
/// Syntax errors, unknown kinds, missing or extra fields and constraint
/// violations all raise ParseError with the line and field.
SingularitySpec parse_spec(std::string_view text);
std::string emit_spec_json(const SingularitySpec& spec);

enum class Route { resolution_lattice, link_topology, monodromy };
inline constexpr Route kAllRoutes[] = {Route::resolution_lattice, Route::link_topology,
                                       Route::monodromy};
std::string_view route_name(Route route);

enum class RealizationKind { group, order_only, not_applicable };

/// One route's answer for the obstruction group. `note` is the provenance for
/// computed values and the reason for inapplicable routes.
struct Realization {
  RealizationKind kind = RealizationKind::not_applicable;
  std::optional<FiniteAbelianGroup> group;
  std::optional<Integer> order;
  std::string note;

  static Realization of_group(FiniteAbelianGroup group, std::string note);
  static Realization of_order(Integer order, std::string note);
  static Realization not_applicable(std::string reason);

  std::string value_string() const;

  friend bool operator==(const Realization&, const Realization&) = default;
};

enum class Verdict { compatible, order_only_match, mismatch, single_route };
std::string_view verdict_name(Verdict verdict);

/// True for the verdicts that count as success.
bool verdict_ok(Verdict verdict);

struct RouteMismatch {
  Route first = Route::resolution_lattice;
  Route second = Route::resolution_lattice;
  std::string first_value;
  std::string second_value;
  friend bool operator==(const RouteMismatch&, const RouteMismatch&) = default;
};

struct ObstructionReport {
  SingularitySpec spec;
  std::map<Route, Realization> realizations;
  std::optional<LinkHomology> link_homology;
  /// det of the intersection matrix, sign preserved.
  std::optional<Integer> det_m;
  /// |det(T - id)|, only when T - id is rationally invertible.
  std::optional<Integer> det_t_minus_id;
  std::optional<std::size_t> monodromy_kernel_rank;
  /// Refused routes, non-rational links and similar remarks, in a fixed order.
  std::vector<std::string> notes;
  Verdict verdict = Verdict::single_route;
  std::optional<RouteMismatch> mismatch;

  const Realization& realization(Route route) const { return realizations.at(route); }

  /// The common group when no routes disagree: the first group-valued
  /// realization, or a group forced by an order-only value (squarefree order).
  std::optional<FiniteAbelianGroup> agreed_group() const;

  friend bool operator==(const ObstructionReport&, const ObstructionReport&) = default;
};

/// Runs every applicable realization for the spec and cross-checks them.
ObstructionReport compute_report(const SingularitySpec& spec);

/// Compares the realizations already in the report and fills in verdict and
/// mismatch.
void assign_verdict(ObstructionReport& report);

/// Aligned, human-readable rendering.
std::string render_text(const ObstructionReport& report);

/// Machine-readable rendering; parse_report_json(emit_report_json(r)) == r.
std::string emit_report_json(const ObstructionReport& report);
ObstructionReport parse_report_json(std::string_view text);

}  // namespace locobs
