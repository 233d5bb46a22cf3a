#include "locobs/tables.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace locobs {

namespace {

FiniteAbelianGroup group_of(std::initializer_list<long> factors) {
  std::vector<Integer> values(factors.begin(), factors.end());
  return FiniteAbelianGroup::from_invariant_factors(values);
}

CellValue G(std::initializer_list<long> factors) { return CellValue::of_group(group_of(factors)); }
CellValue Ord(long n) { return CellValue::of_order(n); }
CellValue Num(long n) { return CellValue::of_number(n); }

struct GoldenRow {
  std::string label;
  SingularitySpec spec;
  std::vector<CellValue> table1;  // H1(L), H2(L)_tors, E
  std::vector<CellValue> table2;  // dual quotient, |det M|, |det(T - id)|
};

// Values as printed in the two summary tables.
std::vector<GoldenRow> golden_rows() {
  const CellValue dash = CellValue::dashes();
  return {
      {"A_1", AdeSpec{AdeKind::A, 1}, {G({2}), G({2}), G({2})}, {G({2}), Num(2), Num(2)}},
      {"A_2", AdeSpec{AdeKind::A, 2}, {G({3}), G({3}), G({3})}, {G({3}), Num(3), Num(3)}},
      {"A_3", AdeSpec{AdeKind::A, 3}, {G({4}), G({4}), G({4})}, {G({4}), Num(4), Num(4)}},
      {"A_5", AdeSpec{AdeKind::A, 5}, {G({6}), G({6}), G({6})}, {G({6}), Num(6), Num(6)}},
      {"A_8", AdeSpec{AdeKind::A, 8}, {G({9}), G({9}), G({9})}, {G({9}), Num(9), Num(9)}},
      {"D_4", AdeSpec{AdeKind::D, 4}, {G({2, 2}), Ord(4), Ord(4)}, {G({2, 2}), Num(4), Num(4)}},
      {"D_5", AdeSpec{AdeKind::D, 5}, {G({4}), Ord(4), Ord(4)}, {G({4}), Num(4), Num(4)}},
      {"E_6", AdeSpec{AdeKind::E, 6}, {G({3}), G({3}), G({3})}, {G({3}), Num(3), Num(3)}},
      {"E_7", AdeSpec{AdeKind::E, 7}, {G({2}), G({2}), G({2})}, {G({2}), Num(2), Num(2)}},
      {"E_8", AdeSpec{AdeKind::E, 8}, {G({}), G({}), G({})}, {G({}), Num(1), Num(1)}},
      {"C^2/(1/5)(1,2)", CyclicQuotientSpec{5, 2}, {G({5}), G({5}), G({5})}, {G({5}), Num(5), dash}},
      {"x^2+y^3+z^7", BrieskornPhamSpec{2, 3, 7}, {G({}), G({}), G({})}, {G({}), Num(1), Num(1)}},
      {"x^2+y^3+z^11", BrieskornPhamSpec{2, 3, 11}, {G({5}), G({5}), G({5})}, {G({5}), Num(5), Num(5)}},
  };
}

// An order-only value, promoted to a group when the order forces it.
CellValue from_order(const Integer& order) {
  if (auto g = FiniteAbelianGroup::determined_by_order(order)) return CellValue::of_group(*g, true);
  return CellValue::of_order(order, true);
}

CellValue link_cell(const ObstructionReport& r, bool second_cohomology) {
  if (r.link_homology) {
    return CellValue::of_group(second_cohomology ? r.link_homology->h2_torsion
                                                 : r.link_homology->h1_torsion);
  }
  const Realization& link = r.realization(Route::link_topology);
  if (link.kind == RealizationKind::order_only) return from_order(*link.order);
  return CellValue::dashes();
}

CellValue obstruction_cell(const ObstructionReport& r) {
  if (r.verdict == Verdict::mismatch) return CellValue::conflict();
  bool any_group = false;
  for (Route route : kAllRoutes) any_group |= r.realization(route).kind == RealizationKind::group;
  if (auto g = r.agreed_group()) return CellValue::of_group(*g, !any_group);
  return CellValue::dashes();
}

// Rows without a resolution graph take the dual quotient and |det M| from
// the link order (the resolution-lattice identification).
CellValue dual_quotient_cell(const ObstructionReport& r) {
  const Realization& res = r.realization(Route::resolution_lattice);
  if (res.kind == RealizationKind::group) return CellValue::of_group(*res.group);
  const Realization& link = r.realization(Route::link_topology);
  if (link.kind == RealizationKind::order_only) return from_order(*link.order);
  return CellValue::dashes();
}

CellValue det_m_cell(const ObstructionReport& r) {
  if (r.det_m) return CellValue::of_number(abs(*r.det_m));
  const Realization& link = r.realization(Route::link_topology);
  if (link.kind == RealizationKind::order_only) return CellValue::of_number(*link.order, true);
  return CellValue::dashes();
}

CellValue det_t_cell(const ObstructionReport& r) {
  if (r.det_t_minus_id) return CellValue::of_number(*r.det_t_minus_id);
  return CellValue::dashes();
}

TableCell make_cell(std::string column, CellValue expected, CellValue actual) {
  const bool ok = cell_matches(expected, actual);
  return {std::move(column), std::move(expected), std::move(actual), ok};
}

std::string pad(const std::string& s, std::size_t width) {
  // column widths count code points, not bytes
  std::size_t visible = 0;
  for (unsigned char c : s) visible += (c & 0xC0) != 0x80;
  return visible >= width ? s + " " : s + std::string(width - visible, ' ');
}

}  // namespace

CellValue CellValue::of_group(FiniteAbelianGroup g, bool inferred) {
  CellValue c;
  c.kind = Kind::group;
  c.group = std::move(g);
  c.inferred = inferred;
  return c;
}

CellValue CellValue::of_order(Integer order, bool inferred) {
  CellValue c;
  c.kind = Kind::order;
  c.number = std::move(order);
  c.inferred = inferred;
  return c;
}

CellValue CellValue::of_number(Integer n, bool inferred) {
  CellValue c;
  c.kind = Kind::number;
  c.number = std::move(n);
  c.inferred = inferred;
  return c;
}

CellValue CellValue::dashes() { return CellValue{}; }

CellValue CellValue::conflict() {
  CellValue c;
  c.kind = Kind::conflict;
  return c;
}

std::string CellValue::to_string() const {
  std::string out;
  switch (kind) {
    case Kind::group: out = group->to_string(); break;
    case Kind::order: out = "order " + locobs::to_string(*number); break;
    case Kind::number: out = locobs::to_string(*number); break;
    case Kind::not_applicable: out = "---"; break;
    case Kind::conflict: out = "conflict"; break;
  }
  return inferred ? out + "*" : out;
}

bool cell_matches(const CellValue& expected, const CellValue& actual) {
  using Kind = CellValue::Kind;
  switch (expected.kind) {
    case Kind::group:
      return actual.kind == Kind::group && actual.group == expected.group;
    case Kind::order:
      if (actual.kind == Kind::group) return actual.group->order() == *expected.number;
      return actual.kind == Kind::order && *actual.number == *expected.number;
    case Kind::number:
      return actual.kind == Kind::number && *actual.number == *expected.number;
    case Kind::not_applicable:
      return actual.kind == Kind::not_applicable;
    case Kind::conflict:
      return false;
  }
  return false;
}

TableDocument reproduce_tables() {
  Table t1{"Topological and perverse realizations", {"H1(L,Z)", "H2(L,Z)_tors", "E"}, {}};
  Table t2{"Resolution and monodromy realizations", {"Λ∨/Λ", "|det(M)|", "|det(T-id)|"}, {}};

  for (GoldenRow& golden : golden_rows()) {
    const ObstructionReport r = compute_report(golden.spec);
    const CellValue actual1[] = {link_cell(r, false), link_cell(r, true), obstruction_cell(r)};
    const CellValue actual2[] = {dual_quotient_cell(r), det_m_cell(r), det_t_cell(r)};

    TableRow row1{golden.label, golden.spec, {}};
    TableRow row2{golden.label, golden.spec, {}};
    for (std::size_t i = 0; i < 3; ++i) {
      row1.cells.push_back(make_cell(t1.columns[i], golden.table1[i], actual1[i]));
      row2.cells.push_back(make_cell(t2.columns[i], golden.table2[i], actual2[i]));
    }
    t1.rows.push_back(std::move(row1));
    t2.rows.push_back(std::move(row2));
  }
  return TableDocument{{std::move(t1), std::move(t2)}};
}

bool TableDocument::all_match() const { return diffs().empty(); }

std::vector<std::string> TableDocument::diffs() const {
  std::vector<std::string> out;
  for (const Table& table : tables)
    for (const TableRow& row : table.rows)
      for (const TableCell& cell : row.cells)
        if (!cell.matches) {
          out.push_back(row.label + " / " + cell.column + ": expected " +
                        cell.expected.to_string() + ", computed " + cell.actual.to_string());
        }
  return out;
}

std::string TableDocument::render_text() const {
  std::ostringstream out;
  bool any_inferred = false;
  for (const Table& table : tables) {
    out << table.title << '\n';
    out << pad("singularity", 16);
    for (const std::string& c : table.columns) out << pad(c, 16);
    out << '\n';
    for (const TableRow& row : table.rows) {
      out << pad(row.label, 16);
      std::string flags;
      for (const TableCell& cell : row.cells) {
        out << pad(cell.actual.to_string() + (cell.matches ? "" : " !"), 16);
        any_inferred |= cell.actual.inferred;
      }
      out << '\n';
    }
    out << '\n';
  }
  if (any_inferred) out << "* value taken from the link order through the lattice identification\n";
  const auto diff = diffs();
  for (const std::string& d : diff) out << "DIFF " << d << '\n';
  out << (diff.empty() ? "all cells match the reference values\n"
                       : std::to_string(diff.size()) + " cell(s) differ from the reference values\n");
  return out.str();
}

std::string TableDocument::render_json() const {
  nlohmann::ordered_json doc;
  doc["tables"] = nlohmann::ordered_json::array();
  for (const Table& table : tables) {
    nlohmann::ordered_json t;
    t["title"] = table.title;
    t["columns"] = table.columns;
    t["rows"] = nlohmann::ordered_json::array();
    for (const TableRow& row : table.rows) {
      nlohmann::ordered_json r;
      r["label"] = row.label;
      r["cells"] = nlohmann::ordered_json::array();
      for (const TableCell& cell : row.cells) {
        r["cells"].push_back({{"column", cell.column},
                              {"expected", cell.expected.to_string()},
                              {"computed", cell.actual.to_string()},
                              {"match", cell.matches}});
      }
      t["rows"].push_back(r);
    }
    doc["tables"].push_back(t);
  }
  doc["all_match"] = all_match();
  return doc.dump(2);
}

std::vector<SingularitySpec> selfcheck_corpus() {
  std::vector<SingularitySpec> corpus;
  for (std::int64_t k = 1; k <= 20; ++k) corpus.push_back(AdeSpec{AdeKind::A, k});
  for (std::int64_t n = 4; n <= 12; ++n) corpus.push_back(AdeSpec{AdeKind::D, n});
  for (std::int64_t n = 6; n <= 8; ++n) corpus.push_back(AdeSpec{AdeKind::E, n});
  for (std::int64_t n = 2; n <= 58; ++n) {
    std::int64_t q = std::max<std::int64_t>(1, 2 * n / 5);
    while (std::gcd(n, q) != 1) ++q;
    corpus.push_back(CyclicQuotientSpec{n, q});
  }
  for (std::int64_t m = 5; m <= 35; ++m)
    if (std::gcd(m, std::int64_t{6}) == 1) corpus.push_back(BrieskornPhamSpec{2, 3, m});
  return corpus;
}

SelfcheckResult run_selfcheck(const std::vector<SingularitySpec>& corpus) {
  std::vector<std::optional<ObstructionReport>> slots(corpus.size());
  std::vector<std::exception_ptr> errors(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      try {
        slots[i] = compute_report(corpus[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t n_threads =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 16);
  std::vector<std::jthread> pool;
  for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  pool.clear();

  SelfcheckResult result;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    if (slots[i]->verdict == Verdict::mismatch) ++result.mismatches;
    result.reports.push_back(std::move(*slots[i]));
  }
  return result;
}

std::string SelfcheckResult::render_text() const {
  std::ostringstream out;
  for (const ObstructionReport& r : reports) {
    out << pad(describe(r.spec), 16) << pad(std::string(verdict_name(r.verdict)), 18);
    for (Route route : kAllRoutes) {
      out << pad(std::string(route_name(route)) + "=" + r.realization(route).value_string(), 30);
    }
    out << '\n';
  }
  out << reports.size() << " specs, " << mismatches << " mismatch(es)\n";
  return out.str();
}

std::string SelfcheckResult::render_json() const {
  nlohmann::ordered_json doc;
  doc["reports"] = nlohmann::ordered_json::array();
  for (const ObstructionReport& r : reports) {
    doc["reports"].push_back(nlohmann::ordered_json::parse(emit_report_json(r)));
  }
  doc["count"] = reports.size();
  doc["mismatches"] = mismatches;
  return doc.dump(2);
}

}  // namespace locobs
