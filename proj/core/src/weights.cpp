#include "sopq/weights.hpp"

#include "sopq/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace sopq {
namespace {

Mat mixed_vector_canonical(const Signature& sig, int si, int sj, int i, int j)
{
  const auto a = [&](int r, int c) { return block_unit(sig, Block::A, r, c); };
  const auto b = [&](int r, int c) { return block_unit(sig, Block::B, r, c); };
  const auto c = [&](int r, int c) { return block_unit(sig, Block::C, r, c); };
  const auto d = [&](int r, int c) { return block_unit(sig, Block::D, r, c); };
  if (si == 1 && sj == 1)
    return -a(i, j) + b(i, j) - a(j, i) + b(j, i) - c(i, j) + d(i, j) - c(j, i) + d(j, i);
  if (si == -1 && sj == -1)
    return a(i, j) + b(i, j) + a(j, i) + b(j, i) - c(i, j) - d(i, j) - c(j, i) - d(j, i);
  if (si == 1 && sj == -1)
    return a(i, j) + b(i, j) + a(j, i) - b(j, i) + c(i, j) + d(i, j) - c(j, i) + d(j, i);
  return a(i, j) - b(i, j) + a(j, i) + b(j, i) - c(i, j) + d(i, j) + c(j, i) + d(j, i);
}

} // namespace

std::vector<Mat> complement_basis(const Signature& sig)
{
  std::vector<Mat> basis;
  basis.reserve(dim_s(sig));
  for (int i = 1; i <= sig.p; ++i)
    for (int j = i + 1; j <= sig.p; ++j)
      basis.push_back(block_unit(sig, Block::A, i, j) + block_unit(sig, Block::A, j, i));
  for (int i = 1; i <= sig.p; ++i)
    for (int j = 1; j <= sig.q; ++j)
      basis.push_back(block_unit(sig, Block::B, i, j) - block_unit(sig, Block::C, j, i));
  for (int i = 1; i <= sig.q; ++i)
    for (int j = i + 1; j <= sig.q; ++j)
      basis.push_back(block_unit(sig, Block::D, i, j) + block_unit(sig, Block::D, j, i));
  for (int t = 1; t < sig.d(); ++t)
    basis.push_back(elementary(sig.d(), t, t) - elementary(sig.d(), t + 1, t + 1));
  return basis;
}

Mat short_weight_vector(const Signature& sig, int sign, int i, int ell)
{
  if (sig.p == sig.q) throw std::invalid_argument("short_weight_vector: requires p > q");
  if (i < 1 || i > sig.q) throw std::invalid_argument("short_weight_vector: i out of range");
  if (ell < 1 || ell > sig.p - sig.q)
    throw std::invalid_argument("short_weight_vector: ell out of range");
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("short_weight_vector: sign must be +1 or -1");
  const int q = sig.q;
  const Mat a1 = block_unit(sig, Block::A, q + ell, i);
  const Mat a2 = block_unit(sig, Block::A, i, q + ell);
  const Mat b = block_unit(sig, Block::B, q + ell, i);
  const Mat c = block_unit(sig, Block::C, i, q + ell);
  if (sign == 1) return a1 - b + a2 + c;
  return a1 + b + a2 - c;
}

Mat double_weight_vector(const Signature& sig, int sign, int i)
{
  if (i < 1 || i > sig.q)
    throw std::invalid_argument("double_weight_vector: i out of range");
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("double_weight_vector: sign must be +1 or -1");
  const Mat a = block_unit(sig, Block::A, i, i);
  const Mat b = block_unit(sig, Block::B, i, i);
  const Mat c = block_unit(sig, Block::C, i, i);
  const Mat d = block_unit(sig, Block::D, i, i);
  if (sign == 1) return a - b + c - d;
  return a + b - c - d;
}

Mat mixed_weight_vector(const Signature& sig, int si, int i, int sj, int j)
{
  if (i < 1 || i > sig.q || j < 1 || j > sig.q || i == j)
    throw std::invalid_argument("mixed_weight_vector: indices must be distinct in 1..q");
  if ((si != 1 && si != -1) || (sj != 1 && sj != -1))
    throw std::invalid_argument("mixed_weight_vector: signs must be +1 or -1");
  if (i < j) return mixed_vector_canonical(sig, si, sj, i, j);
  return mixed_vector_canonical(sig, sj, si, j, i);
}

std::vector<Mat> zero_weight_space(const Signature& sig)
{
  const int q = sig.q;
  const int m = sig.p - sig.q;
  if (q == 0) return complement_basis(sig);
  std::vector<Mat> basis;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      basis.push_back(block_unit(sig, Block::A, q + i, q + j) +
                      block_unit(sig, Block::A, q + j, q + i));
  const Mat anchor = block_unit(sig, Block::A, 1, 1) + block_unit(sig, Block::D, 1, 1);
  for (int i = 1; i <= m; ++i)
    basis.push_back(Rational(2) * block_unit(sig, Block::A, q + i, q + i) - anchor);
  for (int i = 1; i <= q - 1; ++i)
    basis.push_back(block_unit(sig, Block::A, i, i) + block_unit(sig, Block::D, i, i) -
                    block_unit(sig, Block::A, i + 1, i + 1) -
                    block_unit(sig, Block::D, i + 1, i + 1));
  return basis;
}

std::vector<LinearForm> weights_of_s(const Signature& sig)
{
  const int q = sig.q;
  std::vector<LinearForm> out;
  if (sig.p > sig.q)
    for (int i = 1; i <= q; ++i)
      for (int sign : {1, -1}) {
        LinearForm f = zero_form(q);
        f.coeffs[i - 1] = sign;
        out.push_back(f);
      }
  for (int i = 1; i <= q; ++i)
    for (int sign : {2, -2}) {
      LinearForm f = zero_form(q);
      f.coeffs[i - 1] = sign;
      out.push_back(f);
    }
  for (int i = 1; i <= q; ++i)
    for (int j = i + 1; j <= q; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          LinearForm f = zero_form(q);
          f.coeffs[i - 1] = si;
          f.coeffs[j - 1] = sj;
          out.push_back(f);
        }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

int expected_weight_multiplicity(const Signature& sig, const LinearForm& form)
{
  if (static_cast<int>(form.coeffs.size()) != sig.q)
    throw std::invalid_argument("expected_weight_multiplicity: form rank mismatch");
  const int m = sig.p - sig.q;
  int ones = 0, twos = 0, others = 0;
  for (int c : form.coeffs) {
    if (c == 0) continue;
    if (c == 1 || c == -1)
      ++ones;
    else if (c == 2 || c == -2)
      ++twos;
    else
      ++others;
  }
  if (others > 0) return 0;
  if (ones == 0 && twos == 0) return m * (m + 1) / 2 + sig.q - 1;
  if (ones == 1 && twos == 0) return m;
  if (ones == 0 && twos == 1) return 1;
  if (ones == 2 && twos == 0) return 1;
  return 0;
}

std::vector<Mat> weight_space_basis(const Signature& sig, const LinearForm& form)
{
  if (static_cast<int>(form.coeffs.size()) != sig.q)
    throw std::invalid_argument("weight_space_basis: form rank mismatch");
  std::vector<int> support;
  for (int i = 0; i < sig.q; ++i) {
    const int c = form.coeffs[i];
    if (c == 0) continue;
    if (c < -2 || c > 2)
      throw std::invalid_argument("weight_space_basis: form is not a weight of s");
    support.push_back(i + 1);
  }
  if (support.empty()) return zero_weight_space(sig);
  if (support.size() == 1) {
    const int i = support[0];
    const int c = form.coeffs[i - 1];
    if (c == 2 || c == -2) return {double_weight_vector(sig, c / 2, i)};
    if (sig.p == sig.q)
      throw std::invalid_argument("weight_space_basis: short weights require p > q");
    std::vector<Mat> basis;
    for (int ell = 1; ell <= sig.p - sig.q; ++ell)
      basis.push_back(short_weight_vector(sig, c, i, ell));
    return basis;
  }
  if (support.size() == 2) {
    const int i = support[0], j = support[1];
    const int ci = form.coeffs[i - 1], cj = form.coeffs[j - 1];
    if ((ci == 1 || ci == -1) && (cj == 1 || cj == -1))
      return {mixed_weight_vector(sig, ci, i, cj, j)};
  }
  throw std::invalid_argument("weight_space_basis: form is not a weight of s");
}

std::size_t WeightDecomposition::total_dimension() const
{
  std::size_t total = zero_space.size();
  for (const WeightSpace& s : spaces) total += s.vectors.size();
  return total;
}

WeightDecomposition full_weight_system(const Signature& sig)
{
  WeightDecomposition dec;
  dec.sig = sig;
  const int q = sig.q;
  const int m = sig.p - sig.q;

  for (const LinearForm& weight : weights_of_s(sig)) {
    WeightSpace space;
    space.weight = weight;
    std::vector<int> support;
    for (int i = 0; i < q; ++i)
      if (weight.coeffs[i] != 0) support.push_back(i + 1);
    if (support.size() == 1 && (weight.coeffs[support[0] - 1] == 2 ||
                                weight.coeffs[support[0] - 1] == -2)) {
      const int i = support[0];
      space.vectors.push_back(double_weight_vector(sig, weight.coeffs[i - 1] / 2, i));
    } else if (support.size() == 1) {
      const int i = support[0];
      for (int ell = 1; ell <= m; ++ell)
        space.vectors.push_back(short_weight_vector(sig, weight.coeffs[i - 1], i, ell));
    } else {
      const int i = support[0], j = support[1];
      space.vectors.push_back(
          mixed_weight_vector(sig, weight.coeffs[i - 1], i, weight.coeffs[j - 1], j));
    }
    dec.spaces.push_back(std::move(space));
  }
  dec.zero_space = zero_weight_space(sig);

  const LinearForm zero = zero_form(q);
  const auto check_vector = [&](const LinearForm& form, const Mat& x, const std::string& who) {
    if (x.is_zero()) dec.failures.push_back(who + ": vector is zero");
    if (!is_member_s(sig, x)) dec.failures.push_back(who + ": not in the complement s");
    if (!satisfies_eigen_relations(sig, form, x))
      dec.failures.push_back(who + ": eigen-relation failure");
  };
  for (const WeightSpace& space : dec.spaces) {
    const std::string label = pretty(space.weight);
    for (std::size_t t = 0; t < space.vectors.size(); ++t)
      check_vector(space.weight, space.vectors[t],
                   "weight " + label + " vector " + std::to_string(t + 1));
    const int expected = expected_weight_multiplicity(sig, space.weight);
    if (static_cast<int>(space.vectors.size()) != expected)
      dec.failures.push_back("weight " + label + ": multiplicity " +
                             std::to_string(space.vectors.size()) + " != expected " +
                             std::to_string(expected));
  }
  for (std::size_t t = 0; t < dec.zero_space.size(); ++t)
    check_vector(zero, dec.zero_space[t], "zero-weight vector " + std::to_string(t + 1));
  if (dec.zero_space.size() !=
      static_cast<std::size_t>(expected_weight_multiplicity(sig, zero)))
    dec.failures.push_back("zero-weight space dimension mismatch");

  SpanTracker tracker(static_cast<std::size_t>(sig.d()) * sig.d());
  std::size_t inserted = 0;
  const auto add = [&](const Mat& x) {
    if (tracker.insert(x.flatten())) ++inserted;
  };
  for (const WeightSpace& space : dec.spaces)
    for (const Mat& x : space.vectors) add(x);
  for (const Mat& x : dec.zero_space) add(x);
  if (inserted != dec.total_dimension())
    dec.failures.push_back("weight-space vectors are not linearly independent");
  if (dec.total_dimension() != static_cast<std::size_t>(dim_s(sig)))
    dec.failures.push_back("weight spaces do not fill s: total " +
                           std::to_string(dec.total_dimension()) + " != " +
                           std::to_string(dim_s(sig)));
  return dec;
}

} // namespace sopq
