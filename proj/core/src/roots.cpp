#include "sopq/roots.hpp"

#include "sopq/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace sopq {
namespace {

void require_long_indices(const Signature& sig, int si, int i, int sj, int j)
{
  if (i < 1 || i > sig.q || j < 1 || j > sig.q || i == j)
    throw std::invalid_argument("long_root_vector: indices must be distinct in 1..q");
  if ((si != 1 && si != -1) || (sj != 1 && sj != -1))
    throw std::invalid_argument("long_root_vector: signs must be +1 or -1");
}

/// The four canonical (i < j) families. Coefficient patterns on the eight
/// letter positions (A, B, C, D) x {(i,j), (j,i)}.
Mat long_vector_canonical(const Signature& sig, int si, int sj, int i, int j)
{
  const auto a = [&](int r, int c) { return block_unit(sig, Block::A, r, c); };
  const auto b = [&](int r, int c) { return block_unit(sig, Block::B, r, c); };
  const auto c = [&](int r, int c) { return block_unit(sig, Block::C, r, c); };
  const auto d = [&](int r, int c) { return block_unit(sig, Block::D, r, c); };
  if (si == 1 && sj == 1)
    return -a(i, j) + b(i, j) + a(j, i) - b(j, i) - c(i, j) + d(i, j) + c(j, i) - d(j, i);
  if (si == -1 && sj == -1)
    return -a(i, j) - b(i, j) + a(j, i) + b(j, i) + c(i, j) + d(i, j) - c(j, i) - d(j, i);
  if (si == 1 && sj == -1)
    return -a(i, j) - b(i, j) + a(j, i) - b(j, i) - c(i, j) - d(i, j) - c(j, i) + d(j, i);
  return -a(i, j) + b(i, j) + a(j, i) + b(j, i) + c(i, j) - d(i, j) + c(j, i) + d(j, i);
}

} // namespace

Mat short_root_vector(const Signature& sig, int sign, int i, int ell)
{
  if (sig.p == sig.q) throw std::invalid_argument("short_root_vector: requires p > q");
  if (i < 1 || i > sig.q) throw std::invalid_argument("short_root_vector: i out of range");
  if (ell < 1 || ell > sig.p - sig.q)
    throw std::invalid_argument("short_root_vector: ell out of range");
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("short_root_vector: sign must be +1 or -1");
  const int q = sig.q;
  const Mat a1 = block_unit(sig, Block::A, q + ell, i);
  const Mat a2 = block_unit(sig, Block::A, i, q + ell);
  const Mat b = block_unit(sig, Block::B, q + ell, i);
  const Mat c = block_unit(sig, Block::C, i, q + ell);
  if (sign == 1) return a1 - b - a2 - c;
  return a1 + b - a2 + c;
}

Mat long_root_vector(const Signature& sig, int si, int i, int sj, int j)
{
  require_long_indices(sig, si, i, sj, j);
  if (i < j) return long_vector_canonical(sig, si, sj, i, j);
  return long_vector_canonical(sig, sj, si, j, i);
}

Mat zero_root_m_generator(const Signature& sig, int i, int j)
{
  const int m = sig.p - sig.q;
  if (i < 1 || j < 1 || i >= j || j > m)
    throw std::invalid_argument("zero_root_m_generator: need 1 <= i < j <= p-q");
  const int q = sig.q;
  return block_unit(sig, Block::A, q + j, q + i) - block_unit(sig, Block::A, q + i, q + j);
}

std::vector<Mat> zero_root_space(const Signature& sig)
{
  std::vector<Mat> basis;
  for (int i = 1; i <= sig.q; ++i) basis.push_back(torus_generator(sig, i));
  const int m = sig.p - sig.q;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) basis.push_back(zero_root_m_generator(sig, i, j));
  return basis;
}

std::vector<LinearForm> restricted_roots(const Signature& sig)
{
  const int q = sig.q;
  std::vector<LinearForm> roots;
  if (sig.p > sig.q)
    for (int i = 1; i <= q; ++i)
      for (int sign : {1, -1}) {
        LinearForm f = zero_form(q);
        f.coeffs[i - 1] = sign;
        roots.push_back(f);
      }
  for (int i = 1; i <= q; ++i)
    for (int j = i + 1; j <= q; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          LinearForm f = zero_form(q);
          f.coeffs[i - 1] = si;
          f.coeffs[j - 1] = sj;
          roots.push_back(f);
        }
  std::sort(roots.begin(), roots.end(), lex_less);
  return roots;
}

int expected_root_multiplicity(const Signature& sig, const LinearForm& form)
{
  if (static_cast<int>(form.coeffs.size()) != sig.q)
    throw std::invalid_argument("expected_root_multiplicity: form rank mismatch");
  const int m = sig.p - sig.q;
  int ones = 0, others = 0;
  for (int c : form.coeffs) {
    if (c == 0) continue;
    if (c == 1 || c == -1)
      ++ones;
    else
      ++others;
  }
  if (others > 0) return 0;
  if (ones == 0) return m * (m - 1) / 2 + sig.q;
  if (ones == 1) return m; // short roots exist only when p > q
  if (ones == 2) return 1;
  return 0;
}

std::vector<Mat> root_space_basis(const Signature& sig, const LinearForm& form)
{
  if (static_cast<int>(form.coeffs.size()) != sig.q)
    throw std::invalid_argument("root_space_basis: form rank mismatch");
  std::vector<int> support;
  for (int i = 0; i < sig.q; ++i) {
    const int c = form.coeffs[i];
    if (c == 0) continue;
    if (c != 1 && c != -1)
      throw std::invalid_argument("root_space_basis: form is not a restricted root");
    support.push_back(i + 1);
  }
  if (support.empty()) return zero_root_space(sig);
  if (support.size() == 1) {
    if (sig.p == sig.q)
      throw std::invalid_argument("root_space_basis: short roots require p > q");
    const int i = support[0];
    std::vector<Mat> basis;
    for (int ell = 1; ell <= sig.p - sig.q; ++ell)
      basis.push_back(short_root_vector(sig, form.coeffs[i - 1], i, ell));
    return basis;
  }
  if (support.size() == 2) {
    const int i = support[0], j = support[1];
    return {long_root_vector(sig, form.coeffs[i - 1], i, form.coeffs[j - 1], j)};
  }
  throw std::invalid_argument("root_space_basis: form is not a restricted root");
}

std::size_t RootDecomposition::total_dimension() const
{
  std::size_t total = zero_space.size();
  for (const RootSpace& s : spaces) total += s.vectors.size();
  return total;
}

RootDecomposition full_root_system(const Signature& sig)
{
  RootDecomposition dec;
  dec.sig = sig;
  const int q = sig.q;
  const int m = sig.p - sig.q;

  for (const LinearForm& root : restricted_roots(sig)) {
    RootSpace space;
    space.root = root;
    std::vector<int> support;
    for (int i = 0; i < q; ++i)
      if (root.coeffs[i] != 0) support.push_back(i + 1);
    if (support.size() == 1) {
      const int i = support[0];
      for (int ell = 1; ell <= m; ++ell)
        space.vectors.push_back(short_root_vector(sig, root.coeffs[i - 1], i, ell));
    } else {
      const int i = support[0], j = support[1];
      space.vectors.push_back(
          long_root_vector(sig, root.coeffs[i - 1], i, root.coeffs[j - 1], j));
    }
    dec.spaces.push_back(std::move(space));
  }
  dec.zero_space = zero_root_space(sig);

  // Exact re-verification of every claim made by the tables above.
  const LinearForm zero = zero_form(q);
  const auto check_vector = [&](const LinearForm& form, const Mat& x, const std::string& who) {
    if (x.is_zero()) dec.failures.push_back(who + ": vector is zero");
    if (!is_member_so(sig, x)) dec.failures.push_back(who + ": not in so(p,q)");
    if (!satisfies_eigen_relations(sig, form, x))
      dec.failures.push_back(who + ": eigen-relation failure");
  };
  for (const RootSpace& space : dec.spaces) {
    const std::string label = pretty(space.root);
    for (std::size_t t = 0; t < space.vectors.size(); ++t)
      check_vector(space.root, space.vectors[t],
                   "root " + label + " vector " + std::to_string(t + 1));
    const int expected = expected_root_multiplicity(sig, space.root);
    if (static_cast<int>(space.vectors.size()) != expected)
      dec.failures.push_back("root " + label + ": multiplicity " +
                             std::to_string(space.vectors.size()) + " != expected " +
                             std::to_string(expected));
  }
  for (std::size_t t = 0; t < dec.zero_space.size(); ++t)
    check_vector(zero, dec.zero_space[t], "zero-root vector " + std::to_string(t + 1));
  if (dec.zero_space.size() != static_cast<std::size_t>(expected_root_multiplicity(sig, zero)))
    dec.failures.push_back("zero-root space dimension mismatch");

  SpanTracker tracker(static_cast<std::size_t>(sig.d()) * sig.d());
  std::size_t inserted = 0;
  const auto add = [&](const Mat& x) {
    if (tracker.insert(x.flatten())) ++inserted;
  };
  for (const RootSpace& space : dec.spaces)
    for (const Mat& x : space.vectors) add(x);
  for (const Mat& x : dec.zero_space) add(x);
  if (inserted != dec.total_dimension())
    dec.failures.push_back("root-space vectors are not linearly independent");
  if (dec.total_dimension() != static_cast<std::size_t>(dim_so(sig)))
    dec.failures.push_back("root spaces do not fill so(p,q): total " +
                           std::to_string(dec.total_dimension()) + " != " +
                           std::to_string(dim_so(sig)));
  return dec;
}

} // namespace sopq
