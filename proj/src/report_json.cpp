#include <algorithm>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "locobs/error.hpp"
#include "locobs/report.hpp"

namespace locobs {

namespace {

using Json = nlohmann::ordered_json;

std::size_t line_at(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + offset, '\n'));
}

// Line of the first occurrence of "key" in the document; falls back to line 1
// when the document was not parsed from text or the key is absent.
std::optional<std::size_t> line_of_key(std::string_view text, const std::string& field) {
  if (text.empty()) return std::nullopt;
  std::string key = field.substr(0, field.find_first_of("[."));
  const std::size_t at = text.find('"' + key + '"');
  return line_at(text, at == std::string_view::npos ? 0 : at);
}

class SpecReader {
 public:
  SpecReader(std::string_view text, std::string prefix = "")
      : text_(text), prefix_(std::move(prefix)) {}

  [[noreturn]] void fail(const std::string& field, const std::string& message) const {
    throw ParseError(message, line_of_key(text_, prefix_ + field), prefix_ + field);
  }

  void expect_fields(const Json& object, std::initializer_list<const char*> allowed) const {
    const std::set<std::string> keys(allowed.begin(), allowed.end());
    for (const auto& [key, value] : object.items()) {
      if (!keys.contains(key)) fail(key, "unexpected field");
    }
    for (const char* key : allowed) {
      if (!object.contains(key)) fail(key, "missing field");
    }
  }

  std::int64_t integer(const Json& object, const char* key) const {
    const Json& value = object.at(key);
    if (!value.is_number_integer()) fail(key, "expected an integer");
    return value.get<std::int64_t>();
  }

  std::string string(const Json& object, const char* key) const {
    const Json& value = object.at(key);
    if (!value.is_string()) fail(key, "expected a string");
    return value.get<std::string>();
  }

  SingularitySpec spec(const Json& doc) const {
    if (!doc.is_object()) fail("", "expected a JSON object");
    if (!doc.contains("kind")) fail("kind", "missing field");
    const std::string kind = string(doc, "kind");

    SingularitySpec out;
    if (kind == "ade") {
      expect_fields(doc, {"kind", "type", "n"});
      const std::string type = string(doc, "type");
      AdeSpec s;
      if (type == "A") s.kind = AdeKind::A;
      else if (type == "D") s.kind = AdeKind::D;
      else if (type == "E") s.kind = AdeKind::E;
      else fail("type", "unknown ADE type '" + type + "' (expected A, D or E)");
      s.n = integer(doc, "n");
      out = s;
    } else if (kind == "cyclic_quotient") {
      expect_fields(doc, {"kind", "n", "q"});
      out = CyclicQuotientSpec{integer(doc, "n"), integer(doc, "q")};
    } else if (kind == "brieskorn_pham") {
      expect_fields(doc, {"kind", "a", "b", "c"});
      out = BrieskornPhamSpec{integer(doc, "a"), integer(doc, "b"), integer(doc, "c")};
    } else if (kind == "plumbing") {
      expect_fields(doc, {"kind", "vertices", "edges"});
      out = PlumbingSpec{graph(doc)};
    } else {
      fail("kind", "unknown kind '" + kind + "'");
    }

    try {
      validate_spec(out);
    } catch (const FieldError& e) {
      fail(e.field(), e.detail());
    }
    return out;
  }

 private:
  ResolutionGraph graph(const Json& doc) const {
    const Json& vertices = doc.at("vertices");
    if (!vertices.is_array() || vertices.empty()) fail("vertices", "expected a nonempty array");
    std::vector<ExceptionalCurve> curves;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      const std::string here = "vertices[" + std::to_string(i) + "]";
      const Json& v = vertices[i];
      if (!v.is_object()) fail(here, "expected an object {\"e\": ..., \"g\": ...}");
      for (const auto& [key, value] : v.items()) {
        if (key != "e" && key != "g") fail(here + "." + key, "unexpected field");
      }
      if (!v.contains("e")) fail(here + ".e", "missing field");
      if (!v.at("e").is_number_integer()) fail(here + ".e", "expected an integer");
      ExceptionalCurve curve{v.at("e").get<std::int64_t>(), 0};
      if (v.contains("g")) {
        if (!v.at("g").is_number_integer()) fail(here + ".g", "expected an integer");
        curve.genus = v.at("g").get<std::int64_t>();
        if (curve.genus < 0) fail(here + ".g", "genus must be nonnegative");
      }
      curves.push_back(curve);
    }

    const Json& edges = doc.at("edges");
    if (!edges.is_array()) fail("edges", "expected an array of [i, j] pairs");
    std::vector<ResolutionGraph::Edge> pairs;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const Json& e = edges[i];
      const std::string here = "edges[" + std::to_string(i) + "]";
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
          !e[1].is_number_unsigned()) {
        fail(here, "expected a pair of vertex indices");
      }
      pairs.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
    try {
      return ResolutionGraph(std::move(curves), std::move(pairs));
    } catch (const ValidationError& e) {
      fail("edges", e.what());
    }
  }

  std::string_view text_;
  std::string prefix_;
};

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("syntax error: ") + e.what(), line_at(text, e.byte ? e.byte - 1 : 0),
                     "");
  }
}

Json spec_json(const SingularitySpec& spec) {
  Json out;
  if (const auto* s = std::get_if<AdeSpec>(&spec)) {
    out["kind"] = "ade";
    out["type"] = std::string(1, to_char(s->kind));
    out["n"] = s->n;
  } else if (const auto* s = std::get_if<CyclicQuotientSpec>(&spec)) {
    out["kind"] = "cyclic_quotient";
    out["n"] = s->n;
    out["q"] = s->q;
  } else if (const auto* s = std::get_if<BrieskornPhamSpec>(&spec)) {
    out["kind"] = "brieskorn_pham";
    out["a"] = s->a;
    out["b"] = s->b;
    out["c"] = s->c;
  } else {
    const auto& g = std::get<PlumbingSpec>(spec).graph;
    out["kind"] = "plumbing";
    out["vertices"] = Json::array();
    for (const auto& v : g.vertices()) out["vertices"].push_back({{"e", v.self_intersection}, {"g", v.genus}});
    out["edges"] = Json::array();
    for (const auto& [a, b] : g.edges()) out["edges"].push_back({a, b});
  }
  return out;
}

// Report documents store exact integers as decimal strings.
Json factors_json(const FiniteAbelianGroup& group) {
  Json out = Json::array();
  for (const Integer& f : group.invariant_factors()) out.push_back(to_string(f));
  return out;
}

Json optional_integer(const std::optional<Integer>& value) {
  return value ? Json(to_string(*value)) : Json(nullptr);
}

class ReportReader {
 public:
  explicit ReportReader(std::string_view text) : text_(text) {}

  [[noreturn]] void fail(const std::string& field, const std::string& message) const {
    throw ParseError(message, line_of_key(text_, field), field);
  }

  const Json& member(const Json& object, const char* key) const {
    if (!object.is_object() || !object.contains(key)) fail(key, "missing field");
    return object.at(key);
  }

  Integer integer(const Json& value, const std::string& field) const {
    if (!value.is_string()) fail(field, "expected a decimal string");
    try {
      return Integer(value.get<std::string>(), 10);
    } catch (const std::invalid_argument&) {
      fail(field, "not a decimal integer: " + value.get<std::string>());
    }
  }

  std::optional<Integer> optional(const Json& object, const char* key) const {
    const Json& value = member(object, key);
    if (value.is_null()) return std::nullopt;
    return integer(value, key);
  }

  FiniteAbelianGroup group(const Json& value, const std::string& field) const {
    if (!value.is_array()) fail(field, "expected an array of invariant factors");
    std::vector<Integer> factors;
    for (const Json& f : value) factors.push_back(integer(f, field));
    try {
      return FiniteAbelianGroup::from_invariant_factors(factors);
    } catch (const ValidationError& e) {
      fail(field, e.what());
    }
  }

  Route route(const std::string& name) const {
    for (Route r : kAllRoutes)
      if (route_name(r) == name) return r;
    fail("realizations", "unknown route '" + name + "'");
  }

  ObstructionReport report(const Json& doc) const {
    ObstructionReport out;
    out.spec = SpecReader(text_).spec(member(doc, "spec"));

    const Json& realizations = member(doc, "realizations");
    for (Route r : kAllRoutes) {
      const std::string name(route_name(r));
      if (!realizations.contains(name)) fail(name, "missing realization");
      const Json& entry = realizations.at(name);
      const std::string status = member(entry, "status").get<std::string>();
      const std::string note = member(entry, "note").get<std::string>();
      if (status == "group") {
        out.realizations[r] = Realization::of_group(group(member(entry, "invariant_factors"), name), note);
      } else if (status == "order_only") {
        out.realizations[r] = Realization::of_order(integer(member(entry, "order"), name), note);
      } else if (status == "not_applicable") {
        out.realizations[r] = Realization::not_applicable(note);
      } else {
        fail("status", "unknown status '" + status + "'");
      }
    }

    const Json& link = member(doc, "link_homology");
    if (!link.is_null()) {
      const Json& rank = member(link, "h1_free_rank");
      if (!rank.is_number_unsigned()) fail("h1_free_rank", "expected a count");
      LinkHomology h;
      h.h1_free_rank = rank.get<std::size_t>();
      h.h1_torsion = group(member(link, "h1_torsion"), "h1_torsion");
      h.h2_torsion = group(member(link, "h2_torsion"), "h2_torsion");
      out.link_homology = h;
    }
    out.det_m = optional(doc, "det_M");
    out.det_t_minus_id = optional(doc, "det_T_minus_id");
    const Json& kernel = member(doc, "monodromy_kernel_rank");
    if (!kernel.is_null()) out.monodromy_kernel_rank = kernel.get<std::size_t>();
    for (const Json& note : member(doc, "notes")) out.notes.push_back(note.get<std::string>());

    const std::string verdict = member(doc, "verdict").get<std::string>();
    bool known = false;
    for (Verdict v : {Verdict::compatible, Verdict::order_only_match, Verdict::mismatch,
                      Verdict::single_route}) {
      if (verdict_name(v) == verdict) {
        out.verdict = v;
        known = true;
      }
    }
    if (!known) fail("verdict", "unknown verdict '" + verdict + "'");

    const Json& mismatch = member(doc, "mismatch");
    if (!mismatch.is_null()) {
      const Json& routes = member(mismatch, "routes");
      const Json& values = member(mismatch, "values");
      if (routes.size() != 2 || values.size() != 2) fail("mismatch", "expected two routes and two values");
      out.mismatch = RouteMismatch{route(routes[0].get<std::string>()), route(routes[1].get<std::string>()),
                                   values[0].get<std::string>(), values[1].get<std::string>()};
    }
    return out;
  }

 private:
  std::string_view text_;
};

}  // namespace

SingularitySpec parse_spec(std::string_view text) {
  return SpecReader(text).spec(parse_document(text));
}

std::string emit_spec_json(const SingularitySpec& spec) { return spec_json(spec).dump(); }

std::string emit_report_json(const ObstructionReport& report) {
  Json doc;
  doc["spec"] = spec_json(report.spec);
  Json realizations;
  for (Route route : kAllRoutes) {
    const Realization& r = report.realization(route);
    Json entry;
    switch (r.kind) {
      case RealizationKind::group:
        entry["status"] = "group";
        entry["invariant_factors"] = factors_json(*r.group);
        entry["order"] = to_string(*r.order);
        entry["rendered"] = r.group->to_string();
        break;
      case RealizationKind::order_only:
        entry["status"] = "order_only";
        entry["order"] = to_string(*r.order);
        break;
      case RealizationKind::not_applicable:
        entry["status"] = "not_applicable";
        break;
    }
    entry["note"] = r.note;
    realizations[std::string(route_name(route))] = entry;
  }
  doc["realizations"] = realizations;
  if (report.link_homology) {
    doc["link_homology"] = {{"h1_free_rank", report.link_homology->h1_free_rank},
                            {"h1_torsion", factors_json(report.link_homology->h1_torsion)},
                            {"h2_torsion", factors_json(report.link_homology->h2_torsion)}};
  } else {
    doc["link_homology"] = nullptr;
  }
  doc["det_M"] = optional_integer(report.det_m);
  doc["det_T_minus_id"] = optional_integer(report.det_t_minus_id);
  doc["monodromy_kernel_rank"] =
      report.monodromy_kernel_rank ? Json(*report.monodromy_kernel_rank) : Json(nullptr);
  doc["notes"] = report.notes;
  doc["verdict"] = std::string(verdict_name(report.verdict));
  if (report.mismatch) {
    doc["mismatch"] = {{"routes", {route_name(report.mismatch->first), route_name(report.mismatch->second)}},
                       {"values", {report.mismatch->first_value, report.mismatch->second_value}}};
  } else {
    doc["mismatch"] = nullptr;
  }
  return doc.dump(2);
}

ObstructionReport parse_report_json(std::string_view text) {
  const Json doc = parse_document(text);
  try {
    return ReportReader(text).report(doc);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what(), std::nullopt, "");
  }
}

}  // namespace locobs
