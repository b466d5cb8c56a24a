#include "sopq/appendix.hpp"

#include "sopq/roots.hpp"
#include "sopq/weights.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace sopq {
namespace {

std::string param_name(std::size_t total, std::size_t t, bool latex)
{
  if (total == 1) return "x";
  return latex ? "x_{" + std::to_string(t + 1) + "}" : "x_" + std::to_string(t + 1);
}

std::string coeff_times_param(const Rational& c, const std::string& name)
{
  if (c == 1) return name;
  if (c == -1) return "-" + name;
  return to_string(c) + name;
}

/// Entry (r, c) of the symbolic combination sum_t x_t * basis[t], or its
/// numeric value with every parameter at 1.
std::string entry_string(const std::vector<Mat>& basis, std::size_t r, std::size_t c,
                         AppendixMode mode, bool latex)
{
  if (mode == AppendixMode::numeric) {
    Rational sum = 0;
    for (const Mat& b : basis) sum += b.at(r, c);
    return to_string(sum);
  }
  std::string out;
  for (std::size_t t = 0; t < basis.size(); ++t) {
    const Rational& v = basis[t].at(r, c);
    if (v == 0) continue;
    const std::string term = coeff_times_param(v, param_name(basis.size(), t, latex));
    if (out.empty())
      out = term;
    else if (v > 0)
      out += "+" + term;
    else
      out += term;
  }
  return out.empty() ? "0" : out;
}

std::string latex_matrix(const std::vector<Mat>& basis, const Signature& sig,
                         AppendixMode mode)
{
  const std::size_t d = static_cast<std::size_t>(sig.d());
  std::ostringstream out;
  out << "\\left(\\begin{array}{";
  for (int i = 0; i < sig.p; ++i) out << 'c';
  if (sig.q > 0) {
    out << '|';
    for (int i = 0; i < sig.q; ++i) out << 'c';
  }
  out << "}\n";
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      if (c > 0) out << " & ";
      out << entry_string(basis, r, c, mode, true);
    }
    out << " \\\\\n";
    if (sig.q > 0 && r + 1 == static_cast<std::size_t>(sig.p)) out << "\\hline\n";
  }
  out << "\\end{array}\\right)";
  return out.str();
}

std::string markdown_matrix(const std::vector<Mat>& basis, const Signature& sig,
                            AppendixMode mode)
{
  const std::size_t d = static_cast<std::size_t>(sig.d());
  std::vector<std::vector<std::string>> cells(d, std::vector<std::string>(d));
  std::vector<std::size_t> width(d, 1);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      cells[r][c] = entry_string(basis, r, c, mode, false);
      width[c] = std::max(width[c], cells[r][c].size());
    }

  const auto pad = [](const std::string& s, std::size_t w) {
    return std::string(w - s.size(), ' ') + s;
  };
  std::ostringstream out;
  out << "```\n";
  for (std::size_t r = 0; r < d; ++r) {
    out << "[ ";
    for (std::size_t c = 0; c < d; ++c) {
      if (c > 0) out << "  ";
      if (sig.q > 0 && c == static_cast<std::size_t>(sig.p)) out << "| ";
      out << pad(cells[r][c], width[c]);
    }
    out << " ]\n";
    if (sig.q > 0 && r + 1 == static_cast<std::size_t>(sig.p)) {
      std::size_t total = 4; // "[ " + " ]"
      for (std::size_t c = 0; c < d; ++c) total += width[c] + (c > 0 ? 2 : 0);
      total += 2; // the column separator
      out << std::string(total, '-') << "\n";
    }
  }
  out << "```\n";
  return out.str();
}

} // namespace

std::string emit_appendix_latex(const Signature& sig, AppendixMode mode)
{
  std::ostringstream out;
  const std::vector<Mat> zero_root = zero_root_space(sig);
  const std::vector<Mat> a_part(zero_root.begin(), zero_root.begin() + sig.q);
  const std::vector<Mat> m_part(zero_root.begin() + sig.q, zero_root.end());

  out << "\\subsection*{Root spaces of $\\mathfrak{so}(" << sig.p << "," << sig.q << ")$}\n\n";
  if (!a_part.empty())
    out << "\\[\n\\mathfrak{a}:\\quad " << latex_matrix(a_part, sig, mode) << "\n\\]\n\n";
  if (!m_part.empty())
    out << "\\[\n\\mathfrak{m}:\\quad " << latex_matrix(m_part, sig, mode) << "\n\\]\n\n";
  for (const LinearForm& root : restricted_roots(sig))
    out << "\\[\n\\mathfrak{g}_{" << pretty(root)
        << "}:\\quad " << latex_matrix(root_space_basis(sig, root), sig, mode) << "\n\\]\n\n";

  out << "\\subsection*{Weight spaces of $\\mathfrak{s}$}\n\n";
  for (const LinearForm& weight : weights_of_s(sig))
    out << "\\[\n\\mathfrak{s}_{" << pretty(weight)
        << "}:\\quad " << latex_matrix(weight_space_basis(sig, weight), sig, mode) << "\n\\]\n\n";
  const std::vector<Mat> s0 = zero_weight_space(sig);
  if (!s0.empty())
    out << "\\[\n\\mathfrak{s}_{0}:\\quad " << latex_matrix(s0, sig, mode) << "\n\\]\n\n";
  return out.str();
}

std::string emit_appendix_markdown(const Signature& sig, AppendixMode mode)
{
  std::ostringstream out;
  const std::vector<Mat> zero_root = zero_root_space(sig);
  const std::vector<Mat> a_part(zero_root.begin(), zero_root.begin() + sig.q);
  const std::vector<Mat> m_part(zero_root.begin() + sig.q, zero_root.end());

  out << "### Root spaces of so(" << sig.p << "," << sig.q << ")\n\n";
  if (!a_part.empty())
    out << "#### Split part a (dimension " << a_part.size() << ")\n\n"
        << markdown_matrix(a_part, sig, mode) << "\n";
  if (!m_part.empty())
    out << "#### Centralizer part m (dimension " << m_part.size() << ")\n\n"
        << markdown_matrix(m_part, sig, mode) << "\n";
  for (const LinearForm& root : restricted_roots(sig)) {
    const std::vector<Mat> basis = root_space_basis(sig, root);
    out << "#### Root space for " << pretty(root) << " (multiplicity " << basis.size()
        << ")\n\n"
        << markdown_matrix(basis, sig, mode) << "\n";
  }

  out << "### Weight spaces of s\n\n";
  for (const LinearForm& weight : weights_of_s(sig)) {
    const std::vector<Mat> basis = weight_space_basis(sig, weight);
    out << "#### Weight space for " << pretty(weight) << " (multiplicity " << basis.size()
        << ")\n\n"
        << markdown_matrix(basis, sig, mode) << "\n";
  }
  const std::vector<Mat> s0 = zero_weight_space(sig);
  if (!s0.empty())
    out << "#### Zero-weight space s_0 (dimension " << s0.size() << ")\n\n"
        << markdown_matrix(s0, sig, mode) << "\n";
  return out.str();
}

} // namespace sopq
