#include "locobs/locobs.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "locobs/error.hpp"
#include "locobs/int_matrix.hpp"
#include "locobs/report.hpp"
#include "locobs/tables.hpp"

struct locobs_report {
  locobs::ObstructionReport report;
};

struct locobs_matrix {
  locobs::IntMatrix matrix;
};

namespace {

thread_local std::string last_error;

locobs_status fail(locobs_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs body, translating exceptions into status codes.
template <class Body>
locobs_status guarded(Body&& body) {
  last_error.clear();
  try {
    body();
    return LOCOBS_OK;
  } catch (const locobs::ParseError& e) {
    return fail(LOCOBS_ERROR_PARSE, e.what());
  } catch (const locobs::NotResolutionGraphError& e) {
    return fail(LOCOBS_ERROR_NOT_RESOLUTION_GRAPH, e.what());
  } catch (const locobs::DegeneracyError& e) {
    return fail(LOCOBS_ERROR_DEGENERATE, e.what());
  } catch (const locobs::DimensionError& e) {
    return fail(LOCOBS_ERROR_DIMENSION, e.what());
  } catch (const locobs::ValidationError& e) {
    return fail(LOCOBS_ERROR_VALIDATION, e.what());
  } catch (const std::exception& e) {
    return fail(LOCOBS_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(LOCOBS_ERROR_INTERNAL, "unknown error");
  }
}

#define LOCOBS_REQUIRE(ptr)                                             \
  do {                                                                  \
    if ((ptr) == nullptr) return fail(LOCOBS_ERROR_NULL_ARGUMENT, #ptr " is null"); \
  } while (0)

}  // namespace

extern "C" {

const char* locobs_version(void) { return "0.1.0"; }

const char* locobs_status_string(locobs_status status) {
  switch (status) {
    case LOCOBS_OK: return "ok";
    case LOCOBS_ERROR_NULL_ARGUMENT: return "null argument";
    case LOCOBS_ERROR_PARSE: return "parse error";
    case LOCOBS_ERROR_VALIDATION: return "validation error";
    case LOCOBS_ERROR_DIMENSION: return "dimension error";
    case LOCOBS_ERROR_DEGENERATE: return "degenerate lattice";
    case LOCOBS_ERROR_NOT_RESOLUTION_GRAPH: return "not a resolution graph";
    case LOCOBS_ERROR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* locobs_last_error(void) { return last_error.c_str(); }

void locobs_string_free(char* s) { std::free(s); }

locobs_status locobs_report_compute(const char* spec_json, locobs_report** out) {
  LOCOBS_REQUIRE(spec_json);
  LOCOBS_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    auto report = locobs::compute_report(locobs::parse_spec(spec_json));
    *out = new locobs_report{std::move(report)};
  });
}

locobs_status locobs_report_parse_json(const char* report_json, locobs_report** out) {
  LOCOBS_REQUIRE(report_json);
  LOCOBS_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new locobs_report{locobs::parse_report_json(report_json)}; });
}

void locobs_report_free(locobs_report* report) { delete report; }

locobs_status locobs_report_verdict(const locobs_report* report, locobs_verdict* out) {
  LOCOBS_REQUIRE(report);
  LOCOBS_REQUIRE(out);
  switch (report->report.verdict) {
    case locobs::Verdict::compatible: *out = LOCOBS_VERDICT_COMPATIBLE; break;
    case locobs::Verdict::order_only_match: *out = LOCOBS_VERDICT_ORDER_ONLY_MATCH; break;
    case locobs::Verdict::mismatch: *out = LOCOBS_VERDICT_MISMATCH; break;
    case locobs::Verdict::single_route: *out = LOCOBS_VERDICT_SINGLE_ROUTE; break;
  }
  return LOCOBS_OK;
}

locobs_status locobs_report_text(const locobs_report* report, char** out) {
  LOCOBS_REQUIRE(report);
  LOCOBS_REQUIRE(out);
  return guarded([&] { *out = copy_out(locobs::render_text(report->report)); });
}

locobs_status locobs_report_json(const locobs_report* report, char** out) {
  LOCOBS_REQUIRE(report);
  LOCOBS_REQUIRE(out);
  return guarded([&] { *out = copy_out(locobs::emit_report_json(report->report)); });
}

locobs_status locobs_report_group(const locobs_report* report, char** out) {
  LOCOBS_REQUIRE(report);
  LOCOBS_REQUIRE(out);
  *out = nullptr;
  const auto group = report->report.agreed_group();
  if (!group) return fail(LOCOBS_ERROR_VALIDATION, "the routes do not determine a single group");
  *out = copy_out(group->to_string());
  return LOCOBS_OK;
}

locobs_status locobs_tables(int as_json, char** out, int* all_match) {
  LOCOBS_REQUIRE(out);
  LOCOBS_REQUIRE(all_match);
  return guarded([&] {
    const locobs::TableDocument doc = locobs::reproduce_tables();
    *all_match = doc.all_match() ? 1 : 0;
    *out = copy_out(as_json ? doc.render_json() : doc.render_text());
  });
}

locobs_status locobs_selfcheck(int as_json, char** out, size_t* mismatches) {
  LOCOBS_REQUIRE(out);
  LOCOBS_REQUIRE(mismatches);
  return guarded([&] {
    const locobs::SelfcheckResult result = locobs::run_selfcheck(locobs::selfcheck_corpus());
    *mismatches = result.mismatches;
    *out = copy_out(as_json ? result.render_json() : result.render_text());
  });
}

locobs_status locobs_matrix_create(size_t rows, size_t cols, const int64_t* entries,
                                   locobs_matrix** out) {
  LOCOBS_REQUIRE(out);
  *out = nullptr;
  if (rows * cols > 0) LOCOBS_REQUIRE(entries);
  return guarded([&] {
    *out = new locobs_matrix{
        locobs::IntMatrix::from_int64(rows, cols, std::span<const std::int64_t>(entries, rows * cols))};
  });
}

void locobs_matrix_free(locobs_matrix* m) { delete m; }

locobs_status locobs_matrix_determinant(const locobs_matrix* m, char** out) {
  LOCOBS_REQUIRE(m);
  LOCOBS_REQUIRE(out);
  return guarded([&] { *out = copy_out(locobs::to_string(locobs::determinant(m->matrix))); });
}

locobs_status locobs_matrix_invariant_factors(const locobs_matrix* m, char** out) {
  LOCOBS_REQUIRE(m);
  LOCOBS_REQUIRE(out);
  return guarded([&] {
    std::string s;
    for (const auto& f : locobs::smith_normal_form(m->matrix).invariant_factors) {
      if (!s.empty()) s += ' ';
      s += locobs::to_string(f);
    }
    *out = copy_out(s);
  });
}

locobs_status locobs_matrix_cokernel(const locobs_matrix* m, char** torsion, size_t* free_rank) {
  LOCOBS_REQUIRE(m);
  LOCOBS_REQUIRE(torsion);
  LOCOBS_REQUIRE(free_rank);
  return guarded([&] {
    const locobs::Cokernel coker = locobs::cokernel(m->matrix);
    *free_rank = coker.free_rank;
    *torsion = copy_out(coker.torsion.to_string());
  });
}

}  // extern "C"
