// Command-line front end. Talks to the library only through locobs.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "locobs/locobs.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitInputError = 2;

struct StringDeleter {
  void operator()(char* s) const { locobs_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct ReportDeleter {
  void operator()(locobs_report* r) const { locobs_report_free(r); }
};

int report_error(locobs_status status) {
  std::cerr << "locobs: " << locobs_status_string(status) << ": " << locobs_last_error() << '\n';
  return status == LOCOBS_ERROR_INTERNAL ? kExitDisagreement : kExitInputError;
}

int run_compute(const std::string& spec_text, bool json, bool quiet) {
  locobs_report* raw = nullptr;
  if (locobs_status s = locobs_report_compute(spec_text.c_str(), &raw); s != LOCOBS_OK) {
    return report_error(s);
  }
  std::unique_ptr<locobs_report, ReportDeleter> report(raw);

  char* text = nullptr;
  const locobs_status s = json ? locobs_report_json(report.get(), &text)
                               : locobs_report_text(report.get(), &text);
  if (s != LOCOBS_OK) return report_error(s);
  OwnedString owned(text);
  if (!quiet) std::cout << owned.get() << (json ? "\n" : "");

  locobs_verdict verdict{};
  locobs_report_verdict(report.get(), &verdict);
  return verdict == LOCOBS_VERDICT_MISMATCH ? kExitDisagreement : kExitOk;
}

int run_tables(bool json, bool quiet) {
  char* text = nullptr;
  int all_match = 0;
  if (locobs_status s = locobs_tables(json ? 1 : 0, &text, &all_match); s != LOCOBS_OK) {
    return report_error(s);
  }
  OwnedString owned(text);
  if (!quiet || !all_match) std::cout << owned.get() << (json ? "\n" : "");
  return all_match ? kExitOk : kExitDisagreement;
}

int run_selfcheck(bool json, bool quiet) {
  char* text = nullptr;
  size_t mismatches = 0;
  if (locobs_status s = locobs_selfcheck(json ? 1 : 0, &text, &mismatches); s != LOCOBS_OK) {
    return report_error(s);
  }
  OwnedString owned(text);
  if (!quiet) std::cout << owned.get() << (json ? "\n" : "");
  if (quiet && mismatches) std::cerr << mismatches << " mismatch(es)\n";
  return mismatches == 0 ? kExitOk : kExitDisagreement;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local integral obstruction group of a normal surface singularity"};
  app.set_version_flag("--version", std::string(locobs_version()));
  app.require_subcommand(1);

  bool json = false;
  bool quiet = false;
  app.add_flag("--json", json, "Emit machine-readable JSON");
  app.add_flag("--quiet", quiet, "Suppress normal output; rely on the exit code");

  auto* compute = app.add_subcommand("compute", "Compute every realization for one singularity");
  std::string spec_file;
  std::string inline_spec;
  auto* file_opt = compute->add_option("specfile", spec_file, "JSON singularity document")
                       ->check(CLI::ExistingFile);
  auto* spec_opt = compute->add_option("--spec", inline_spec, "Inline JSON singularity document");
  file_opt->excludes(spec_opt);
  compute->add_flag("--json", json, "Emit machine-readable JSON");
  compute->add_flag("--quiet", quiet, "Suppress normal output");

  auto* tables = app.add_subcommand("tables", "Reproduce the reference comparison tables");
  tables->add_flag("--json", json, "Emit machine-readable JSON");
  tables->add_flag("--quiet", quiet, "Print only on disagreement");

  auto* selfcheck = app.add_subcommand("selfcheck", "Cross-check all routes on a 100-spec corpus");
  selfcheck->add_flag("--json", json, "Emit machine-readable JSON");
  selfcheck->add_flag("--quiet", quiet, "Suppress per-spec lines");

  CLI11_PARSE(app, argc, argv);

  if (*compute) {
    std::string text = inline_spec;
    if (!spec_file.empty()) {
      std::ifstream in(spec_file);
      std::stringstream buffer;
      buffer << in.rdbuf();
      text = buffer.str();
    } else if (spec_opt->count() == 0) {
      std::cerr << "locobs: compute needs a spec file or --spec\n";
      return kExitInputError;
    }
    return run_compute(text, json, quiet);
  }
  if (*tables) return run_tables(json, quiet);
  return run_selfcheck(json, quiet);
}
