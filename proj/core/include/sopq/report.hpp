#pragma once

#include "sopq/irreducibility.hpp"

#include <string>
#include <vector>

namespace sopq {

/// One root or weight space as it appears in a report: the form, the claimed
/// multiplicity, and the explicit basis (the zero form's space included as a
/// regular entry with all-zero coefficients).
struct SpaceReport {
  LinearForm form;
  std::size_t multiplicity = 0;
  std::vector<Mat> basis;

  bool operator==(const SpaceReport&) const = default;
};

/// Serializable summary of one invariant-closure run; the seed is identified
/// by its 1-based index into the structural basis of s.
struct ReportClosureTrace {
  std::size_t seed_index = 0;
  std::size_t final_dim = 0;
  std::vector<ClosureStep> steps;

  bool operator==(const ReportClosureTrace&) const = default;
};

struct ReportClosure {
  std::size_t expected_dim = 0;
  bool all_complete = false;
  std::vector<ReportClosureTrace> traces;

  bool operator==(const ReportClosure&) const = default;
};

/// Outcome of generation_check over every structural s-basis element.
struct ReportGeneration {
  bool checked = false;
  std::size_t seeds_checked = 0;
  bool all_generate = false;
  std::vector<std::size_t> failing_seeds;

  bool operator==(const ReportGeneration&) const = default;
};

/// Everything the tool asserts about one signature, in serialization-ready
/// form. `failures` aggregates every exact check that did not hold; an empty
/// list means all requested verifications passed.
struct DecompositionReport {
  Signature sig;
  int dim_so_total = 0;
  int dim_s_total = 0;
  std::vector<SpaceReport> roots;   // ascending lex by coefficients
  std::vector<SpaceReport> weights; // ascending lex by coefficients
  bool has_certificates = false;
  TwoPieceReport decomposition;
  ReportClosure closure;
  ReportGeneration generation;
  std::vector<std::string> failures;
  std::string tool_version;
  int schema_version = 0;

  bool operator==(const DecompositionReport&) const = default;

  bool passed() const { return failures.empty(); }
};

struct ReportOptions {
  bool certificates = false; // two-piece report, closure traces, ladder, commutant
  bool generation = false;   // generation_check from every s-basis seed
};

/// Computes the full report for a signature. Root and weight systems are
/// always included; certificates and generation checks are opt-in.
DecompositionReport build_report(const Signature& sig, const ReportOptions& options = {});

/// Deterministic JSON serialization (stable key order, rationals as
/// "num/den" strings, matrices as row-major arrays of rows).
std::string emit_json(const DecompositionReport& report);

/// Inverse of emit_json; throws std::runtime_error on malformed input.
DecompositionReport parse_json(const std::string& text);

/// Human-readable summaries.
std::string emit_markdown(const DecompositionReport& report);
std::string emit_latex(const DecompositionReport& report);

/// Entry-level comparison of a report against a reference-table file (JSON
/// with signature, roots and weights sections). Every mismatched entry is
/// listed as its own string. Throws std::runtime_error when the reference
/// text does not parse.
struct GoldenDiff {
  bool passed = false;
  std::vector<std::string> mismatches;
};

GoldenDiff diff_golden(const DecompositionReport& report, const std::string& golden_text);

} // namespace sopq
