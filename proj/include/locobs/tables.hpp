#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "locobs/abelian_group.hpp"
#include "locobs/report.hpp"

namespace locobs {

/// A table cell value: a group, a bare order or number, or "---".
struct CellValue {
  enum class Kind { group, order, number, not_applicable, conflict };
  Kind kind = Kind::not_applicable;
  std::optional<FiniteAbelianGroup> group;
  std::optional<Integer> number;
  /// Set when the cell was filled through an identification rather than
  /// computed on its own route (e.g. a group forced by a squarefree order).
  bool inferred = false;

  static CellValue of_group(FiniteAbelianGroup g, bool inferred = false);
  static CellValue of_order(Integer order, bool inferred = false);
  static CellValue of_number(Integer n, bool inferred = false);
  static CellValue dashes();
  static CellValue conflict();

  std::string to_string() const;
};

/// Golden `expected` vs computed `actual`. An expected order accepts any
/// actual group of that order; an expected group needs the same invariant
/// factors.
bool cell_matches(const CellValue& expected, const CellValue& actual);

struct TableCell {
  std::string column;
  CellValue expected;
  CellValue actual;
  bool matches = false;
};

struct TableRow {
  std::string label;
  SingularitySpec spec;
  std::vector<TableCell> cells;
};

struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<TableRow> rows;
};

struct TableDocument {
  std::vector<Table> tables;

  bool all_match() const;
  /// One line per disagreeing cell.
  std::vector<std::string> diffs() const;
  std::string render_text() const;
  std::string render_json() const;
};

/// Recomputes both comparison tables (link/perverse columns and
/// resolution/monodromy columns) for A_1, A_2, A_3, A_5, A_8, D_4, D_5, E_6,
/// E_7, E_8, 1/5(1,2), x^2+y^3+z^7 and x^2+y^3+z^11 against embedded golden
/// values.
TableDocument reproduce_tables();

/// 100 specs: A_k (k <= 20), D_n (n <= 12), E_6..E_8, 57 cyclic quotients with
/// n <= 60, and x^2+y^3+z^m for m <= 35 coprime to 6.
std::vector<SingularitySpec> selfcheck_corpus();

struct SelfcheckResult {
  std::vector<ObstructionReport> reports;
  std::size_t mismatches = 0;

  std::string render_text() const;
  std::string render_json() const;
};

/// Computes every corpus report (concurrently; output order is the corpus
/// order).
SelfcheckResult run_selfcheck(const std::vector<SingularitySpec>& corpus);

}  // namespace locobs
