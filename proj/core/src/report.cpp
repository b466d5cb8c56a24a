#include "sopq/report.hpp"

#include "sopq/appendix.hpp"
#include "sopq/version.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sopq {
namespace {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// JSON building blocks.
// ---------------------------------------------------------------------------

Json json_matrix(const Mat& m)
{
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat matrix_from_json(const Json& j)
{
  const std::size_t rows = j.size();
  if (rows == 0) throw std::runtime_error("matrix with no rows");
  const std::size_t cols = j.at(0).size();
  Mat m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (j.at(r).size() != cols) throw std::runtime_error("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c)
      m.at(r, c) = parse_rational(j.at(r).at(c).get<std::string>());
  }
  return m;
}

Json json_form(const LinearForm& f)
{
  Json a = Json::array();
  for (int c : f.coeffs) a.push_back(c);
  return a;
}

LinearForm form_from_json(const Json& j)
{
  LinearForm f;
  for (const auto& c : j) f.coeffs.push_back(c.get<int>());
  return f;
}

Json json_spaces(const std::vector<SpaceReport>& spaces)
{
  Json a = Json::array();
  for (const SpaceReport& s : spaces) {
    Json entry;
    entry["coeffs"] = json_form(s.form);
    entry["multiplicity"] = s.multiplicity;
    Json basis = Json::array();
    for (const Mat& m : s.basis) basis.push_back(json_matrix(m));
    entry["basis"] = std::move(basis);
    a.push_back(std::move(entry));
  }
  return a;
}

std::vector<SpaceReport> spaces_from_json(const Json& j)
{
  std::vector<SpaceReport> spaces;
  for (const auto& entry : j) {
    SpaceReport s;
    s.form = form_from_json(entry.at("coeffs"));
    s.multiplicity = entry.at("multiplicity").get<std::size_t>();
    for (const auto& m : entry.at("basis")) s.basis.push_back(matrix_from_json(m));
    spaces.push_back(std::move(s));
  }
  return spaces;
}

Json json_strings(const std::vector<std::string>& v)
{
  Json a = Json::array();
  for (const std::string& s : v) a.push_back(s);
  return a;
}

std::vector<std::string> strings_from_json(const Json& j)
{
  std::vector<std::string> v;
  for (const auto& s : j) v.push_back(s.get<std::string>());
  return v;
}

Json json_ladder(const LadderCertificate& cert)
{
  Json j;
  j["applicable"] = cert.applicable;
  j["connected"] = cert.connected;
  j["zero_generators_reached"] = cert.zero_generators_reached;
  j["passed"] = cert.passed();
  Json edges = Json::array();
  for (const LadderEdge& e : cert.edges) {
    Json edge;
    edge["source"] = json_form(e.source);
    edge["source_index"] = e.source_index;
    edge["root"] = json_form(e.root);
    edge["root_index"] = e.root_index;
    edge["target"] = json_form(e.target);
    edge["target_index"] = e.target_index;
    edge["scalar"] = to_string(e.scalar);
    edge["verified"] = e.verified;
    edge["note"] = e.note;
    edges.push_back(std::move(edge));
  }
  j["edges"] = std::move(edges);
  j["failures"] = json_strings(cert.failures);
  return j;
}

LadderCertificate ladder_from_json(const Json& j, const Signature& sig)
{
  LadderCertificate cert;
  cert.sig = sig;
  cert.applicable = j.at("applicable").get<bool>();
  cert.connected = j.at("connected").get<bool>();
  cert.zero_generators_reached = j.at("zero_generators_reached").get<bool>();
  for (const auto& ej : j.at("edges")) {
    LadderEdge e;
    e.source = form_from_json(ej.at("source"));
    e.source_index = ej.at("source_index").get<std::size_t>();
    e.root = form_from_json(ej.at("root"));
    e.root_index = ej.at("root_index").get<std::size_t>();
    e.target = form_from_json(ej.at("target"));
    e.target_index = ej.at("target_index").get<std::size_t>();
    e.scalar = parse_rational(ej.at("scalar").get<std::string>());
    e.verified = ej.at("verified").get<bool>();
    e.note = ej.at("note").get<std::string>();
    cert.edges.push_back(std::move(e));
  }
  cert.failures = strings_from_json(j.at("failures"));
  return cert;
}

Json json_commutant(const CommutantCertificate& cert)
{
  Json j;
  j["commutant_dim"] = cert.commutant_dim;
  j["semisimple"] = cert.semisimple;
  j["irreducible"] = cert.irreducible;
  j["hypothesis"] = cert.hypothesis;
  j["failures"] = json_strings(cert.failures);
  return j;
}

CommutantCertificate commutant_from_json(const Json& j, const Signature& sig)
{
  CommutantCertificate cert;
  cert.sig = sig;
  cert.commutant_dim = j.at("commutant_dim").get<std::size_t>();
  cert.semisimple = j.at("semisimple").get<bool>();
  cert.irreducible = j.at("irreducible").get<bool>();
  cert.hypothesis = j.at("hypothesis").get<std::string>();
  cert.failures = strings_from_json(j.at("failures"));
  return cert;
}

// ---------------------------------------------------------------------------
// Rendering helpers shared by markdown and LaTeX.
// ---------------------------------------------------------------------------

std::string signature_label(const Signature& sig)
{
  return "(" + std::to_string(sig.p) + "," + std::to_string(sig.q) + ")";
}

} // namespace

// ---------------------------------------------------------------------------
// build_report
// ---------------------------------------------------------------------------

DecompositionReport build_report(const Signature& sig, const ReportOptions& options)
{
  DecompositionReport report;
  report.sig = sig;
  report.dim_so_total = dim_so(sig);
  report.dim_s_total = dim_s(sig);
  report.tool_version = kToolVersion;
  report.schema_version = kSchemaVersion;

  const RootDecomposition root_dec = full_root_system(sig);
  for (const std::string& f : root_dec.failures) report.failures.push_back("roots: " + f);
  for (const RootSpace& space : root_dec.spaces)
    report.roots.push_back({space.root, space.vectors.size(), space.vectors});
  report.roots.push_back({zero_form(sig.q), root_dec.zero_space.size(), root_dec.zero_space});
  std::sort(report.roots.begin(), report.roots.end(),
            [](const SpaceReport& a, const SpaceReport& b) { return lex_less(a.form, b.form); });

  const WeightDecomposition weight_dec = full_weight_system(sig);
  for (const std::string& f : weight_dec.failures) report.failures.push_back("weights: " + f);
  for (const WeightSpace& space : weight_dec.spaces)
    report.weights.push_back({space.weight, space.vectors.size(), space.vectors});
  report.weights.push_back(
      {zero_form(sig.q), weight_dec.zero_space.size(), weight_dec.zero_space});
  std::sort(report.weights.begin(), report.weights.end(),
            [](const SpaceReport& a, const SpaceReport& b) { return lex_less(a.form, b.form); });

  if (root_dec.total_dimension() + weight_dec.total_dimension() !=
      static_cast<std::size_t>(sig.d()) * sig.d() - 1)
    report.failures.push_back("root total + weight total != d^2 - 1");

  if (options.certificates) {
    report.has_certificates = true;
    report.decomposition = two_piece_decomposition(sig);
    for (const std::string& f : report.decomposition.failures)
      report.failures.push_back("decomposition: " + f);

    report.closure.expected_dim = static_cast<std::size_t>(dim_s(sig));
    report.closure.all_complete = true;
    const std::vector<Mat> seeds = complement_basis(sig);
    for (std::size_t j = 0; j < seeds.size(); ++j) {
      const ClosureTrace trace = invariant_closure(sig, seeds[j]);
      report.closure.traces.push_back({j + 1, trace.final_dim, trace.steps});
      if (!trace.complete()) report.closure.all_complete = false;
    }
  }

  if (options.generation) {
    report.generation.checked = true;
    const std::vector<Mat> seeds = complement_basis(sig);
    report.generation.seeds_checked = seeds.size();
    report.generation.all_generate = true;
    for (std::size_t j = 0; j < seeds.size(); ++j)
      if (!generation_check(sig, seeds[j])) {
        report.generation.all_generate = false;
        report.generation.failing_seeds.push_back(j + 1);
        report.failures.push_back("generation: s-basis seed " + std::to_string(j + 1) +
                                  " does not generate sl_d together with so(p,q)");
      }
  }

  return report;
}

// ---------------------------------------------------------------------------
// emit_json / parse_json
// ---------------------------------------------------------------------------

std::string emit_json(const DecompositionReport& report)
{
  Json j;
  j["schema_version"] = report.schema_version;
  j["tool_version"] = report.tool_version;
  j["signature"] = Json{{"p", report.sig.p},
                        {"q", report.sig.q},
                        {"d", report.sig.d()},
                        {"swapped", report.sig.swapped}};
  j["dim_so"] = report.dim_so_total;
  j["dim_s"] = report.dim_s_total;
  j["roots"] = json_spaces(report.roots);
  j["weights"] = json_spaces(report.weights);

  if (report.has_certificates) {
    Json certs;
    Json closure;
    closure["expected_dim"] = report.closure.expected_dim;
    closure["all_complete"] = report.closure.all_complete;
    Json traces = Json::array();
    for (const ReportClosureTrace& t : report.closure.traces) {
      Json tj;
      tj["seed_index"] = t.seed_index;
      tj["final_dim"] = t.final_dim;
      Json steps = Json::array();
      for (const ClosureStep& s : t.steps)
        steps.push_back(Json::array({s.generator, s.source, s.dim_after}));
      tj["steps"] = std::move(steps);
      traces.push_back(std::move(tj));
    }
    closure["traces"] = std::move(traces);
    certs["closure"] = std::move(closure);
    certs["ladder"] = json_ladder(report.decomposition.ladder);
    certs["commutant"] = json_commutant(report.decomposition.commutant);

    Json generation;
    generation["checked"] = report.generation.checked;
    generation["seeds_checked"] = report.generation.seeds_checked;
    generation["all_generate"] = report.generation.all_generate;
    Json failing = Json::array();
    for (std::size_t s : report.generation.failing_seeds) failing.push_back(s);
    generation["failing_seeds"] = std::move(failing);
    certs["generation"] = std::move(generation);

    const TwoPieceReport& d = report.decomposition;
    Json two;
    two["dim_sl"] = d.dim_sl;
    two["dim_so_part"] = d.dim_so_part;
    two["dim_s_part"] = d.dim_s_part;
    two["direct_sum"] = d.direct_sum;
    two["so_invariant"] = d.so_invariant;
    two["s_invariant"] = d.s_invariant;
    two["closure_all_seeds"] = d.closure_all_seeds;
    two["s_status"] = d.s_status;
    two["so_commutant_dim"] = d.so_commutant_dim;
    two["so_closure_all_seeds"] = d.so_closure_all_seeds;
    two["so_decomposable"] = d.so_decomposable;
    two["notes"] = json_strings(d.notes);
    two["failures"] = json_strings(d.failures);
    certs["decomposition"] = std::move(two);

    j["certificates"] = std::move(certs);
  }

  j["failures"] = json_strings(report.failures);
  return j.dump(2) + "\n";
}

DecompositionReport parse_json(const std::string& text)
{
  try {
    const Json j = Json::parse(text);
    DecompositionReport report;
    report.schema_version = j.at("schema_version").get<int>();
    report.tool_version = j.at("tool_version").get<std::string>();
    const Json& sj = j.at("signature");
    report.sig = make_signature(sj.at("p").get<int>(), sj.at("q").get<int>());
    report.sig.swapped = sj.at("swapped").get<bool>();
    if (sj.at("d").get<int>() != report.sig.d())
      throw std::runtime_error("signature d is inconsistent with p + q");
    report.dim_so_total = j.at("dim_so").get<int>();
    report.dim_s_total = j.at("dim_s").get<int>();
    report.roots = spaces_from_json(j.at("roots"));
    report.weights = spaces_from_json(j.at("weights"));

    if (j.contains("certificates")) {
      report.has_certificates = true;
      const Json& certs = j.at("certificates");
      const Json& closure = certs.at("closure");
      report.closure.expected_dim = closure.at("expected_dim").get<std::size_t>();
      report.closure.all_complete = closure.at("all_complete").get<bool>();
      for (const auto& tj : closure.at("traces")) {
        ReportClosureTrace t;
        t.seed_index = tj.at("seed_index").get<std::size_t>();
        t.final_dim = tj.at("final_dim").get<std::size_t>();
        for (const auto& sjson : tj.at("steps")) {
          ClosureStep step;
          step.generator = sjson.at(0).get<std::size_t>();
          step.source = sjson.at(1).get<std::size_t>();
          step.dim_after = sjson.at(2).get<std::size_t>();
          t.steps.push_back(step);
        }
        report.closure.traces.push_back(std::move(t));
      }

      TwoPieceReport& d = report.decomposition;
      d.sig = report.sig;
      d.ladder = ladder_from_json(certs.at("ladder"), report.sig);
      d.commutant = commutant_from_json(certs.at("commutant"), report.sig);
      const Json& two = certs.at("decomposition");
      d.dim_sl = two.at("dim_sl").get<int>();
      d.dim_so_part = two.at("dim_so_part").get<int>();
      d.dim_s_part = two.at("dim_s_part").get<int>();
      d.direct_sum = two.at("direct_sum").get<bool>();
      d.so_invariant = two.at("so_invariant").get<bool>();
      d.s_invariant = two.at("s_invariant").get<bool>();
      d.closure_all_seeds = two.at("closure_all_seeds").get<bool>();
      d.s_status = two.at("s_status").get<std::string>();
      d.so_commutant_dim = two.at("so_commutant_dim").get<std::size_t>();
      d.so_closure_all_seeds = two.at("so_closure_all_seeds").get<bool>();
      d.so_decomposable = two.at("so_decomposable").get<bool>();
      d.notes = strings_from_json(two.at("notes"));
      d.failures = strings_from_json(two.at("failures"));

      const Json& generation = certs.at("generation");
      report.generation.checked = generation.at("checked").get<bool>();
      report.generation.seeds_checked = generation.at("seeds_checked").get<std::size_t>();
      report.generation.all_generate = generation.at("all_generate").get<bool>();
      for (const auto& s : generation.at("failing_seeds"))
        report.generation.failing_seeds.push_back(s.get<std::size_t>());
    }

    report.failures = strings_from_json(j.at("failures"));
    return report;
  } catch (const Json::exception& e) {
    throw std::runtime_error(std::string("malformed report JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("malformed report JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// emit_markdown / emit_latex
// ---------------------------------------------------------------------------

std::string emit_markdown(const DecompositionReport& report)
{
  std::ostringstream out;
  out << "# Decomposition report for so" << signature_label(report.sig) << "\n\n";
  out << "- d = " << report.sig.d() << ", dim sl_d = " << report.sig.d() * report.sig.d() - 1
      << "\n";
  out << "- dim so(p,q) = " << report.dim_so_total << "\n";
  out << "- dim s = " << report.dim_s_total << "\n\n";

  out << "## Restricted roots\n\n| root | multiplicity |\n| --- | --- |\n";
  for (const SpaceReport& s : report.roots)
    out << "| " << pretty(s.form) << " | " << s.multiplicity << " |\n";
  out << "\n## Weights of s\n\n| weight | multiplicity |\n| --- | --- |\n";
  for (const SpaceReport& s : report.weights)
    out << "| " << pretty(s.form) << " | " << s.multiplicity << " |\n";
  out << "\n";

  if (report.has_certificates) {
    const TwoPieceReport& d = report.decomposition;
    out << "## Certificates\n\n";
    out << "- direct sum sl_d = so + s: " << (d.direct_sum ? "verified" : "FAILED") << "\n";
    out << "- so invariant: " << (d.so_invariant ? "verified" : "FAILED")
        << "; s invariant: " << (d.s_invariant ? "verified" : "FAILED") << "\n";
    out << "- closure from all " << report.closure.traces.size()
        << " s-basis seeds complete: " << (report.closure.all_complete ? "yes" : "NO") << "\n";
    out << "- ladder: "
        << (d.ladder.applicable ? (d.ladder.passed() ? "passed" : "FAILED")
                                : "not applicable (q = 0)")
        << " (" << d.ladder.edges.size() << " edges)\n";
    out << "- commutant dimension: " << d.commutant.commutant_dim
        << (d.commutant.irreducible ? " (irreducible)" : "") << "\n";
    out << "- verdict for s: " << d.s_status << "\n";
    out << "- so summand: commutant dimension " << d.so_commutant_dim
        << (d.so_decomposable ? ", decomposable" : "") << "\n";
    if (report.generation.checked)
      out << "- generation: " << report.generation.seeds_checked << " seeds, "
          << (report.generation.all_generate ? "all generate sl_d" : "FAILURES") << "\n";
    for (const std::string& n : d.notes) out << "- note: " << n << "\n";
    out << "\n";
  }

  if (report.failures.empty()) {
    out << "All checks passed.\n";
  } else {
    out << "## Failures\n\n";
    for (const std::string& f : report.failures) out << "- " << f << "\n";
  }
  return out.str();
}

std::string emit_latex(const DecompositionReport& report)
{
  std::ostringstream out;
  out << "\\section*{Decomposition report for $\\mathfrak{so}" << signature_label(report.sig)
      << "$}\n\n";
  out << "$\\dim \\mathfrak{so} = " << report.dim_so_total << ",\\quad \\dim \\mathfrak{s} = "
      << report.dim_s_total << ",\\quad \\dim \\mathfrak{sl}_" << report.sig.d() << " = "
      << report.sig.d() * report.sig.d() - 1 << "$\n\n";

  out << "\\begin{tabular}{ll}\n\\hline\nroot & multiplicity \\\\\n\\hline\n";
  for (const SpaceReport& s : report.roots)
    out << "$" << pretty(s.form) << "$ & " << s.multiplicity << " \\\\\n";
  out << "\\hline\n\\end{tabular}\n\n";
  out << "\\begin{tabular}{ll}\n\\hline\nweight & multiplicity \\\\\n\\hline\n";
  for (const SpaceReport& s : report.weights)
    out << "$" << pretty(s.form) << "$ & " << s.multiplicity << " \\\\\n";
  out << "\\hline\n\\end{tabular}\n\n";

  out << emit_appendix_latex(report.sig, AppendixMode::symbolic);
  return out.str();
}

// ---------------------------------------------------------------------------
// diff_golden
// ---------------------------------------------------------------------------

namespace {

void diff_spaces(const std::string& table, const std::vector<SpaceReport>& actual,
                 const Json& golden, std::vector<std::string>& mismatches)
{
  std::vector<bool> matched(actual.size(), false);
  for (const auto& entry : golden) {
    const LinearForm form = form_from_json(entry.at("coeffs"));
    const auto it = std::find_if(actual.begin(), actual.end(),
                                 [&](const SpaceReport& s) { return s.form == form; });
    if (it == actual.end()) {
      mismatches.push_back(table + " " + pretty(form) + ": missing from the report");
      continue;
    }
    matched[static_cast<std::size_t>(it - actual.begin())] = true;
    const std::size_t golden_mult = entry.at("multiplicity").get<std::size_t>();
    if (golden_mult != it->multiplicity) {
      mismatches.push_back(table + " " + pretty(form) + ": multiplicity " +
                           std::to_string(it->multiplicity) + " != reference " +
                           std::to_string(golden_mult));
      continue;
    }
    const Json& basis = entry.at("basis");
    if (basis.size() != it->basis.size()) {
      mismatches.push_back(table + " " + pretty(form) + ": basis size mismatch");
      continue;
    }
    for (std::size_t v = 0; v < it->basis.size(); ++v) {
      const Mat ref = matrix_from_json(basis.at(v));
      const Mat& got = it->basis[v];
      if (ref.rows() != got.rows() || ref.cols() != got.cols()) {
        mismatches.push_back(table + " " + pretty(form) + " vector " + std::to_string(v + 1) +
                             ": shape mismatch");
        continue;
      }
      for (std::size_t r = 0; r < ref.rows(); ++r)
        for (std::size_t c = 0; c < ref.cols(); ++c)
          if (ref.at(r, c) != got.at(r, c))
            mismatches.push_back(table + " " + pretty(form) + " vector " +
                                 std::to_string(v + 1) + " entry (" + std::to_string(r + 1) +
                                 "," + std::to_string(c + 1) + "): report " +
                                 to_string(got.at(r, c)) + " != reference " +
                                 to_string(ref.at(r, c)));
    }
  }
  for (std::size_t t = 0; t < actual.size(); ++t)
    if (!matched[t])
      mismatches.push_back(table + " " + pretty(actual[t].form) +
                           ": not present in the reference tables");
}

} // namespace

GoldenDiff diff_golden(const DecompositionReport& report, const std::string& golden_text)
{
  Json golden;
  try {
    golden = Json::parse(golden_text);
  } catch (const Json::exception& e) {
    throw std::runtime_error(std::string("malformed reference tables: ") + e.what());
  }

  GoldenDiff diff;
  try {
    const Json& sj = golden.at("signature");
    if (sj.at("p").get<int>() != report.sig.p || sj.at("q").get<int>() != report.sig.q) {
      diff.mismatches.push_back(
          "signature mismatch: report " + signature_label(report.sig) + " != reference (" +
          std::to_string(sj.at("p").get<int>()) + "," + std::to_string(sj.at("q").get<int>()) +
          ")");
      diff.passed = false;
      return diff;
    }
    diff_spaces("roots", report.roots, golden.at("roots"), diff.mismatches);
    diff_spaces("weights", report.weights, golden.at("weights"), diff.mismatches);
  } catch (const Json::exception& e) {
    throw std::runtime_error(std::string("malformed reference tables: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("malformed reference tables: ") + e.what());
  }
  diff.passed = diff.mismatches.empty();
  return diff;
}

} // namespace sopq
