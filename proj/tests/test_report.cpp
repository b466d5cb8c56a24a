#include "doctest.h"
#include "support/oracles.hpp"

#include "sopq/basis_index.hpp"
#include "sopq/report.hpp"
#include "sopq/version.hpp"

#include <fstream>
#include <sstream>
#include <string>

using namespace sopq;

namespace {

std::string read_file(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string data_path(const std::string& name)
{
  return std::string(SOPQ_DATA_DIR) + "/" + name;
}

} // namespace

TEST_CASE("build_report: totals, ordering, version stamps")
{
  const DecompositionReport r = build_report(make_signature(2, 1));
  CHECK(r.sig.p == 2);
  CHECK(r.sig.q == 1);
  CHECK(r.dim_so_total == 3);
  CHECK(r.dim_s_total == 5);
  CHECK(r.failures.empty());
  CHECK(r.tool_version == kToolVersion);
  CHECK(r.schema_version == kSchemaVersion);
  CHECK_FALSE(r.has_certificates);
  for (std::size_t i = 1; i < r.roots.size(); ++i)
    CHECK(lex_less(r.roots[i - 1].form, r.roots[i].form));
  for (std::size_t i = 1; i < r.weights.size(); ++i)
    CHECK(lex_less(r.weights[i - 1].form, r.weights[i].form));
  std::size_t total = 0;
  for (const SpaceReport& s : r.roots) {
    CHECK(s.multiplicity == s.basis.size());
    total += s.multiplicity;
  }
  for (const SpaceReport& s : r.weights) total += s.multiplicity;
  CHECK(total == 8); // d^2 - 1 at d = 3
}

TEST_CASE("JSON round-trip preserves every report field")
{
  ReportOptions with_all;
  with_all.certificates = true;
  with_all.generation = true;

  const DecompositionReport basic = build_report(make_signature(2, 1));
  CHECK(parse_json(emit_json(basic)) == basic);

  const DecompositionReport full = build_report(make_signature(3, 2), with_all);
  CHECK(full.has_certificates);
  CHECK(full.generation.checked);
  CHECK(parse_json(emit_json(full)) == full);

  ReportOptions certs_only;
  certs_only.certificates = true;
  const DecompositionReport degenerate = build_report(make_signature(1, 1), certs_only);
  CHECK(parse_json(emit_json(degenerate)) == degenerate);

  const DecompositionReport compact = build_report(make_signature(3, 0), certs_only);
  CHECK_FALSE(compact.decomposition.ladder.applicable);
  CHECK(parse_json(emit_json(compact)) == compact);

  // A swapped signature survives the round trip.
  const DecompositionReport swapped = build_report(make_signature(1, 2));
  CHECK(swapped.sig.swapped);
  CHECK(parse_json(emit_json(swapped)) == swapped);
}

TEST_CASE("emissions are deterministic and stable under reparse")
{
  ReportOptions opts;
  opts.certificates = true;
  const DecompositionReport r = build_report(make_signature(2, 2), opts);
  const std::string once = emit_json(r);
  CHECK(once == emit_json(r));
  CHECK(once == emit_json(parse_json(once)));
  CHECK(emit_markdown(r) == emit_markdown(r));
  CHECK(emit_latex(r) == emit_latex(r));
}

TEST_CASE("malformed report JSON is rejected")
{
  CHECK_THROWS_AS((void)parse_json("not json at all"), std::runtime_error);
  CHECK_THROWS_AS((void)parse_json("{}"), std::runtime_error);
  CHECK_THROWS_AS((void)parse_json(R"({"schema_version":1})"), std::runtime_error);

  const std::string good = emit_json(build_report(make_signature(2, 1)));
  std::string bad = good;
  const auto pos = bad.find("\"1\"");
  REQUIRE(pos != std::string::npos);
  bad.replace(pos, 3, "\"1/0\"");
  CHECK_THROWS_AS((void)parse_json(bad), std::runtime_error);
}

TEST_CASE("markdown and latex renderings carry the headline facts")
{
  ReportOptions opts;
  opts.certificates = true;
  const DecompositionReport r = build_report(make_signature(4, 2), opts);

  const std::string md = emit_markdown(r);
  CHECK(md.find("so(4,2)") != std::string::npos);
  CHECK(md.find("15") != std::string::npos);
  CHECK(md.find("20") != std::string::npos);
  CHECK(md.find("| multiplicity |") != std::string::npos);
  CHECK(md.find("All checks passed.") != std::string::npos);

  const std::string tex = emit_latex(r);
  CHECK(tex.find("\\section") != std::string::npos);
  CHECK(tex.find("\\mathfrak{so}(4,2)") != std::string::npos);
  CHECK(tex.find("\\begin{array}") != std::string::npos);
  CHECK(tex.find("2f_1") != std::string::npos);
}

TEST_CASE("golden tables: the (4,2) report matches the transcription entrywise")
{
  const DecompositionReport r = build_report(make_signature(4, 2));
  const GoldenDiff diff = diff_golden(r, read_file(data_path("so42_appendix.json")));
  for (const std::string& m : diff.mismatches) {
    CAPTURE(m);
    CHECK(false);
  }
  CHECK(diff.passed);
}

TEST_CASE("golden tables: mismatches are reported entry by entry")
{
  const DecompositionReport r = build_report(make_signature(4, 2));
  std::string text = read_file(data_path("so42_appendix.json"));

  // Corrupt one specific reference entry and expect exactly that complaint.
  const std::string needle = "\"-1\"";
  const auto pos = text.find(needle);
  REQUIRE(pos != std::string::npos);
  std::string corrupted = text;
  corrupted.replace(pos, needle.size(), "\"-7\"");
  const GoldenDiff diff = diff_golden(r, corrupted);
  CHECK_FALSE(diff.passed);
  REQUIRE(diff.mismatches.size() == 1);
  CHECK(diff.mismatches[0].find("!= reference -7") != std::string::npos);

  // Wrong signature fails fast.
  const GoldenDiff wrong = diff_golden(build_report(make_signature(3, 2)), text);
  CHECK_FALSE(wrong.passed);
  REQUIRE(wrong.mismatches.size() == 1);
  CHECK(wrong.mismatches[0].find("signature mismatch") != std::string::npos);

  CHECK_THROWS_AS((void)diff_golden(r, "pas du json"), std::runtime_error);
}

TEST_CASE("documented exceptions: each printed form fails an exact check")
{
  const Signature sig = make_signature(4, 2);
  const std::string text = read_file(data_path("so42_exceptions.json"));
  CHECK(text.find("\"exceptions\"") != std::string::npos);

  // Entry 1: the printed (-f_1 + f_2) matrix with entry (4,6) = +1 violates
  // membership in the complement and the eigen-relations; the corrected
  // matrix satisfies both and is what the golden file carries.
  LinearForm form = zero_form(2);
  form.coeffs = {-1, 1};
  const Mat corrected = mixed_weight_vector(sig, -1, 1, +1, 2);
  CHECK(corrected.at(3, 5) == -1);
  Mat printed = corrected;
  printed.at(3, 5) = 1;
  CHECK_FALSE(is_member_s(sig, printed));
  CHECK_FALSE(satisfies_eigen_relations(sig, form, printed));
  CHECK(is_member_s(sig, corrected));
  CHECK(satisfies_eigen_relations(sig, form, corrected));

  // Entry 2: the printed Z-family anchor sign gives trace 4, so the printed
  // matrix cannot lie in sl_6; the corrected sign is traceless and belongs
  // to the zero-weight space.
  const Mat anchor = block_unit(sig, Block::A, 1, 1) + block_unit(sig, Block::D, 1, 1);
  const Mat printed_z = block_unit(sig, Block::A, 3, 3) * Rational(2) + anchor;
  CHECK(printed_z.trace() == 4);
  CHECK_FALSE(is_member_s(sig, printed_z));
  const Mat corrected_z = block_unit(sig, Block::A, 3, 3) * Rational(2) - anchor;
  CHECK(corrected_z.trace() == 0);
  CHECK(corrected_z == zero_weight_space(sig)[1]);

  // Entry 3: the printed m-generator index -q+j escapes the valid range
  // 1..p for every admissible pair; the corrected generator reproduces the
  // displayed matrix.
  const int q = sig.q;
  for (int i = 1; i <= sig.p - sig.q; ++i)
    for (int j = i + 1; j <= sig.p - sig.q; ++j) CHECK(-q + j < 1);
  const Mat m12 = zero_root_m_generator(sig, 1, 2);
  CHECK(m12 == elementary(6, 1, 2) - elementary(6, 2, 1));
  CHECK(is_member_so(sig, m12));
}
