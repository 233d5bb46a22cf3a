#include "locobs/report.hpp"

#include <iomanip>
#include <numeric>
#include <sstream>

#include "locobs/error.hpp"
#include "locobs/int_matrix.hpp"
#include "locobs/lattice.hpp"
#include "locobs/monodromy.hpp"

namespace locobs {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

template <class Fn>
void with_field(const char* field, Fn&& check) {
  try {
    check();
  } catch (const ValidationError& e) {
    throw FieldError(field, e.what());
  }
}

void require_at_least(const char* field, std::int64_t value, std::int64_t bound) {
  if (value < bound) {
    throw FieldError(field, "must be ≥ " + std::to_string(bound) + ", got " +
                                std::to_string(value));
  }
}

std::string terms_string(const std::vector<std::int64_t>& terms) {
  std::string out = "[";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    out += (i ? "," : "") + std::to_string(terms[i]);
  }
  return out + "]";
}

// Resolution route from an intersection matrix; records det(M).
void run_resolution_route(ObstructionReport& report, const IntMatrix& m, std::string provenance) {
  const Lattice lattice = make_lattice(m);
  report.det_m = lattice.determinant();
  report.realizations[Route::resolution_lattice] =
      Realization::of_group(discriminant_group(lattice), std::move(provenance));
}

void run_link_route(ObstructionReport& report, LinkHomology link, std::string provenance) {
  if (!link.is_rational_homology_sphere()) {
    report.notes.push_back("link is not a rational homology sphere in degree 1 (b1 = " +
                           std::to_string(link.h1_free_rank) + ")");
  }
  report.realizations[Route::link_topology] =
      Realization::of_group(link.h2_torsion, std::move(provenance));
  report.link_homology = std::move(link);
}

void run_monodromy_route(ObstructionReport& report, const MonodromyOperator& t,
                         std::string provenance) {
  const VariationResult v = variation(t);
  report.monodromy_kernel_rank = v.kernel_rank;
  if (v.rationally_invertible()) {
    report.det_t_minus_id = abs(v.det_t_minus_id);
  } else {
    report.notes.push_back(
        "determinant route refused: hypothesis '(T - id) ⊗ Q is an isomorphism' fails "
        "(kernel rank " + std::to_string(v.kernel_rank) + ")");
  }
  report.realizations[Route::monodromy] =
      Realization::of_group(v.cokernel_torsion, std::move(provenance));
}

}  // namespace

std::string describe(const SingularitySpec& spec) {
  return std::visit(
      overloaded{
          [](const AdeSpec& s) { return std::string(1, to_char(s.kind)) + "_" + std::to_string(s.n); },
          [](const CyclicQuotientSpec& s) {
            return "1/" + std::to_string(s.n) + "(1," + std::to_string(s.q) + ")";
          },
          [](const BrieskornPhamSpec& s) {
            return "x^" + std::to_string(s.a) + "+y^" + std::to_string(s.b) + "+z^" +
                   std::to_string(s.c);
          },
          [](const PlumbingSpec& s) {
            return "plumbing(" + std::to_string(s.graph.size()) + " curves)";
          },
      },
      spec);
}

void validate_spec(const SingularitySpec& spec) {
  std::visit(overloaded{
                 [](const AdeSpec& s) { with_field("n", [&] { validate_ade(s.kind, s.n); }); },
                 [](const CyclicQuotientSpec& s) {
                   require_at_least("n", s.n, 2);
                   if (s.q < 1 || s.q >= s.n) {
                     throw FieldError("q", "must satisfy 1 ≤ q < n, got " + std::to_string(s.q));
                   }
                   if (std::gcd(s.n, s.q) != 1) {
                     throw FieldError("q", "must be coprime to n = " + std::to_string(s.n));
                   }
                 },
                 [](const BrieskornPhamSpec& s) {
                   require_at_least("a", s.a, 2);
                   require_at_least("b", s.b, 2);
                   require_at_least("c", s.c, 2);
                 },
                 [](const PlumbingSpec&) {},  // ResolutionGraph validates on construction
             },
             spec);
}

std::string_view route_name(Route route) {
  switch (route) {
    case Route::resolution_lattice: return "resolution_lattice";
    case Route::link_topology: return "link_topology";
    case Route::monodromy: return "monodromy";
  }
  return "?";
}

Realization Realization::of_group(FiniteAbelianGroup group, std::string note) {
  Realization r;
  r.kind = RealizationKind::group;
  r.order = group.order();
  r.group = std::move(group);
  r.note = std::move(note);
  return r;
}

Realization Realization::of_order(Integer order, std::string note) {
  Realization r;
  r.kind = RealizationKind::order_only;
  r.order = std::move(order);
  r.note = std::move(note);
  return r;
}

Realization Realization::not_applicable(std::string reason) {
  Realization r;
  r.kind = RealizationKind::not_applicable;
  r.note = std::move(reason);
  return r;
}

std::string Realization::value_string() const {
  switch (kind) {
    case RealizationKind::group: return group->to_string();
    case RealizationKind::order_only: return "order " + to_string(*order);
    case RealizationKind::not_applicable: return "---";
  }
  return "?";
}

std::string_view verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::compatible: return "COMPATIBLE";
    case Verdict::order_only_match: return "ORDER_ONLY_MATCH";
    case Verdict::mismatch: return "MISMATCH";
    case Verdict::single_route: return "SINGLE_ROUTE";
  }
  return "?";
}

bool verdict_ok(Verdict verdict) { return verdict != Verdict::mismatch; }

std::optional<FiniteAbelianGroup> ObstructionReport::agreed_group() const {
  if (verdict == Verdict::mismatch) return std::nullopt;
  for (Route route : kAllRoutes) {
    const auto it = realizations.find(route);
    if (it != realizations.end() && it->second.kind == RealizationKind::group) {
      return it->second.group;
    }
  }
  for (Route route : kAllRoutes) {
    const auto it = realizations.find(route);
    if (it != realizations.end() && it->second.kind == RealizationKind::order_only) {
      return FiniteAbelianGroup::determined_by_order(*it->second.order);
    }
  }
  return std::nullopt;
}

void assign_verdict(ObstructionReport& report) {
  report.mismatch.reset();
  std::vector<Route> groups, orders;
  for (Route route : kAllRoutes) {
    const auto it = report.realizations.find(route);
    if (it == report.realizations.end()) continue;
    if (it->second.kind == RealizationKind::group) groups.push_back(route);
    if (it->second.kind == RealizationKind::order_only) orders.push_back(route);
  }
  if (groups.size() + orders.size() < 2) {
    report.verdict = Verdict::single_route;
    return;
  }

  auto flag = [&](Route a, Route b) {
    report.verdict = Verdict::mismatch;
    report.mismatch = RouteMismatch{a, b, report.realization(a).value_string(),
                                    report.realization(b).value_string()};
  };

  for (std::size_t i = 0; i < groups.size(); ++i)
    for (std::size_t j = i + 1; j < groups.size(); ++j)
      if (report.realization(groups[i]).group != report.realization(groups[j]).group) {
        flag(groups[i], groups[j]);
        return;
      }

  const Route reference = groups.empty() ? orders.front() : groups.front();
  for (Route route : orders) {
    if (route == reference) continue;
    if (report.realization(route).order != report.realization(reference).order) {
      flag(reference, route);
      return;
    }
  }
  report.verdict = groups.size() >= 2 ? Verdict::compatible : Verdict::order_only_match;
}

ObstructionReport compute_report(const SingularitySpec& spec) {
  validate_spec(spec);
  ObstructionReport report{spec, {}, {}, {}, {}, {}, {}, Verdict::single_route, {}};
  for (Route route : kAllRoutes) report.realizations[route] = Realization::not_applicable("");

  std::visit(
      overloaded{
          [&](const AdeSpec& s) {
            const ResolutionGraph graph = ade_graph(s.kind, s.n);
            run_resolution_route(report, intersection_matrix(graph),
                                 "discriminant group of the negative " + describe(spec) +
                                     " Cartan lattice");
            if (s.kind == AdeKind::A) {
              run_link_route(report, lens_space_h1(s.n + 1, 1),
                             "torsion of H1 of the lens space L(" + std::to_string(s.n + 1) +
                                 ",1)");
            } else {
              run_link_route(report, link_from_plumbing(graph),
                             "torsion of H1 of the plumbed " + describe(spec) + " boundary");
            }
            run_monodromy_route(report, coxeter_operator(s.kind, s.n),
                                "torsion of coker(T - id), T the " + describe(spec) +
                                    " Coxeter element");
          },
          [&](const CyclicQuotientSpec& s) {
            const HirzebruchJungResolution hj = hirzebruch_jung(s.n, s.q);
            run_resolution_route(report, intersection_matrix(hj.graph),
                                 "discriminant group of the Hirzebruch-Jung chain " +
                                     terms_string(hj.fraction.terms));
            run_link_route(report, lens_space_h1(s.n, s.q),
                           "torsion of H1 of the lens space L(" + std::to_string(s.n) + "," +
                               std::to_string(s.q) + ")");
            report.realizations[Route::monodromy] =
                Realization::not_applicable("not a hypersurface germ in the reference tables");
          },
          [&](const BrieskornPhamSpec& s) {
            report.realizations[Route::resolution_lattice] = Realization::not_applicable(
                "no resolution graph is available for Brieskorn-Pham germs");
            if (std::gcd(s.a, s.b) == 1 && std::gcd(s.a, s.c) == 1 && std::gcd(s.b, s.c) == 1) {
              report.realizations[Route::link_topology] = Realization::of_order(
                  brieskorn_h1_order(s.a, s.b, s.c), "Seifert order formula |ab+ac+bc-abc|");
            } else {
              report.realizations[Route::link_topology] =
                  Realization::not_applicable("exponents are not pairwise coprime");
            }
            run_monodromy_route(report, brieskorn_pham_operator(s.a, s.b, s.c),
                                "torsion of coker(T - id), T = C_" + std::to_string(s.a) +
                                    " ⊗ C_" + std::to_string(s.b) + " ⊗ C_" +
                                    std::to_string(s.c));
          },
          [&](const PlumbingSpec& s) {
            // link_from_plumbing rejects non-negative-definite graphs before
            // the lattice sees them
            LinkHomology link = link_from_plumbing(s.graph);
            run_resolution_route(report, intersection_matrix(s.graph),
                                 "discriminant group of the plumbing intersection lattice");
            run_link_route(report, std::move(link), "torsion of H1 of the plumbed boundary");
            report.realizations[Route::monodromy] =
                Realization::not_applicable("no monodromy data for plumbing input");
          },
      },
      spec);

  assign_verdict(report);
  return report;
}

std::string render_text(const ObstructionReport& report) {
  std::ostringstream out;
  out << "singularity  " << describe(report.spec) << '\n';
  out << std::left << std::setw(20) << "route" << std::setw(16) << "status" << std::setw(16)
      << "value" << "note" << '\n';
  for (Route route : kAllRoutes) {
    const Realization& r = report.realization(route);
    const char* status = r.kind == RealizationKind::group        ? "group"
                         : r.kind == RealizationKind::order_only ? "order-only"
                                                                 : "not applicable";
    out << std::setw(20) << route_name(route) << std::setw(16) << status << std::setw(16)
        << r.value_string() << r.note << '\n';
  }
  if (report.det_m) out << "det(M)         " << to_string(*report.det_m) << '\n';
  if (report.det_t_minus_id) out << "|det(T - id)|  " << to_string(*report.det_t_minus_id) << '\n';
  if (report.monodromy_kernel_rank) {
    out << "ker(T - id)    rank " << *report.monodromy_kernel_rank << '\n';
  }
  for (const std::string& note : report.notes) out << "note: " << note << '\n';
  out << "verdict        " << verdict_name(report.verdict) << '\n';
  if (report.mismatch) {
    out << "mismatch       " << route_name(report.mismatch->first) << " = "
        << report.mismatch->first_value << " vs " << route_name(report.mismatch->second)
        << " = " << report.mismatch->second_value << '\n';
  }
  return out.str();
}

}  // namespace locobs
