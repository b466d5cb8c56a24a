#pragma once

// Independent reference implementations used to cross-check the library.
// Everything here is deliberately naive: plain division-based Gaussian
// elimination over rationals, entrywise brackets, and brute-force closures
// that recompute ranks from scratch. The library must agree with these on
// every tested input; the oracles share no algorithmic code with it.

#include "sopq/matrix.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace oracle {

using sopq::Mat;
using sopq::Rational;
using Vec = std::vector<Rational>;

inline Vec flat(const Mat& m)
{
  return m.flatten();
}

inline std::vector<Vec> flat_all(const std::vector<Mat>& ms)
{
  std::vector<Vec> out;
  out.reserve(ms.size());
  for (const Mat& m : ms) out.push_back(m.flatten());
  return out;
}

// Row-reduces a copy of the input in place with ordinary rational division
// and returns the number of nonzero rows.
inline std::size_t rank(std::vector<Vec> rows)
{
  if (rows.empty()) return 0;
  const std::size_t ncols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const Rational lead = rows[r][c];
    for (std::size_t k = c; k < ncols; ++k) rows[r][k] /= lead;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational factor = rows[i][c];
      for (std::size_t k = c; k < ncols; ++k) rows[i][k] -= factor * rows[r][k];
    }
    ++r;
  }
  return r;
}

inline bool in_span(const Vec& v, std::vector<Vec> rows)
{
  const std::size_t base = rank(rows);
  rows.push_back(v);
  return rank(rows) == base;
}

// Solves sum_i x_i * vectors[i] = v by eliminating the transposed augmented
// system; returns empty when v is outside the span (callers check in_span
// first when they care about the distinction).
inline bool solve(const Vec& v, const std::vector<Vec>& vectors, Vec& coords_out)
{
  const std::size_t n = v.size();
  const std::size_t k = vectors.size();
  // Augmented system: columns are the vectors, last column is v.
  std::vector<Vec> aug(n, Vec(k + 1, Rational(0)));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) aug[i][j] = vectors[j][i];
  for (std::size_t i = 0; i < n; ++i) aug[i][k] = v[i];

  std::vector<std::size_t> pivot_col_of_row;
  std::size_t r = 0;
  for (std::size_t c = 0; c < k && r < n; ++c) {
    std::size_t pivot = r;
    while (pivot < n && aug[pivot][c] == 0) ++pivot;
    if (pivot == n) continue;
    std::swap(aug[r], aug[pivot]);
    const Rational lead = aug[r][c];
    for (std::size_t j = c; j <= k; ++j) aug[r][j] /= lead;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || aug[i][c] == 0) continue;
      const Rational factor = aug[i][c];
      for (std::size_t j = c; j <= k; ++j) aug[i][j] -= factor * aug[r][j];
    }
    pivot_col_of_row.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < n; ++i)
    if (aug[i][k] != 0) return false; // inconsistent: v outside the span
  coords_out.assign(k, Rational(0));
  for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i)
    coords_out[pivot_col_of_row[i]] = aug[i][k];
  return true;
}

// Entrywise commutator, computed without Mat's multiplication operator.
inline Mat bracket(const Mat& x, const Mat& y)
{
  const std::size_t n = x.rows();
  Mat out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < n; ++k)
        s += x.at(i, k) * y.at(k, j) - y.at(i, k) * x.at(k, j);
      out.at(i, j) = s;
    }
  return out;
}

// Smallest subspace containing the seed and closed under bracketing with
// every generator; grows a plain list and recomputes the rank from scratch
// after every candidate. Returns the final dimension.
inline std::size_t closure_dim(const std::vector<Mat>& generators, const Mat& seed)
{
  std::vector<Mat> collected{seed};
  std::vector<Vec> rows{flat(seed)};
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t snapshot = collected.size();
    for (const Mat& g : generators)
      for (std::size_t v = 0; v < snapshot; ++v) {
        const Mat w = oracle::bracket(g, collected[v]);
        if (w.is_zero()) continue;
        std::vector<Vec> trial = rows;
        trial.push_back(flat(w));
        if (rank(trial) > rows.size()) {
          collected.push_back(w);
          rows.push_back(flat(w));
          grew = true;
        }
      }
  }
  return rows.size();
}

// Dimension of the Lie subalgebra generated by the given matrices: closes the
// span under all pairwise brackets of collected elements.
inline std::size_t subalgebra_dim(const std::vector<Mat>& generators)
{
  std::vector<Mat> collected;
  std::vector<Vec> rows;
  for (const Mat& g : generators) {
    std::vector<Vec> trial = rows;
    trial.push_back(flat(g));
    if (rank(trial) > rows.size()) {
      collected.push_back(g);
      rows.push_back(flat(g));
    }
  }
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t snapshot = collected.size();
    for (std::size_t a = 0; a < snapshot; ++a)
      for (std::size_t b = a + 1; b < snapshot; ++b) {
        const Mat w = oracle::bracket(collected[a], collected[b]);
        if (w.is_zero()) continue;
        std::vector<Vec> trial = rows;
        trial.push_back(flat(w));
        if (rank(trial) > rows.size()) {
          collected.push_back(w);
          rows.push_back(flat(w));
          grew = true;
        }
      }
  }
  return rows.size();
}

// Dimension of {T : T*M_i = M_i*T for all i} for k x k operators, by building
// the k^2 x k^2 Sylvester rows explicitly and counting rank.
inline std::size_t commutant_dim(const std::vector<Mat>& maps, std::size_t k)
{
  std::vector<Vec> rows;
  for (const Mat& m : maps)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        // Row for entry (i,j) of T*M - M*T, unknowns T_{a,b} flattened row-major.
        Vec row(k * k, Rational(0));
        for (std::size_t t = 0; t < k; ++t) {
          row[i * k + t] += m.at(t, j); // T_{i,t} M_{t,j}
          row[t * k + j] -= m.at(i, t); // -M_{i,t} T_{t,j}
        }
        rows.push_back(std::move(row));
      }
  return k * k - rank(rows);
}

// Expected root multiplicities of so(p,q), enumerated directly from the
// dimension-table formulas: each +-f_i has multiplicity p-q, each of the
// four sign combinations of f_i +- f_j (i<j) has multiplicity 1, and the
// zero space has dimension (p-q)(p-q-1)/2 + q. Keyed by coefficient vector.
inline std::map<std::vector<int>, std::size_t> root_mults(int p, int q)
{
  std::map<std::vector<int>, std::size_t> out;
  const int m = p - q;
  auto form = [&](std::initializer_list<std::pair<int, int>> terms) {
    std::vector<int> c(static_cast<std::size_t>(q), 0);
    for (auto [i, v] : terms) c[static_cast<std::size_t>(i - 1)] = v;
    return c;
  };
  if (m > 0)
    for (int i = 1; i <= q; ++i)
      for (int s : {+1, -1}) out[form({{i, s}})] = static_cast<std::size_t>(m);
  for (int i = 1; i <= q; ++i)
    for (int j = i + 1; j <= q; ++j)
      for (int si : {+1, -1})
        for (int sj : {+1, -1}) out[form({{i, si}, {j, sj}})] = 1;
  out[form({})] = static_cast<std::size_t>(m * (m - 1) / 2 + q);
  return out;
}

// Expected weight multiplicities of the complement: short weights +-f_i with
// multiplicity p-q, doubles +-2f_i with multiplicity 1, mixed f_i +- f_j with
// multiplicity 1, zero space (p-q)(p-q+1)/2 + q - 1.
inline std::map<std::vector<int>, std::size_t> weight_mults(int p, int q)
{
  std::map<std::vector<int>, std::size_t> out;
  const int m = p - q;
  auto form = [&](std::initializer_list<std::pair<int, int>> terms) {
    std::vector<int> c(static_cast<std::size_t>(q), 0);
    for (auto [i, v] : terms) c[static_cast<std::size_t>(i - 1)] = v;
    return c;
  };
  if (m > 0)
    for (int i = 1; i <= q; ++i)
      for (int s : {+1, -1}) out[form({{i, s}})] = static_cast<std::size_t>(m);
  for (int i = 1; i <= q; ++i)
    for (int s : {+1, -1}) out[form({{i, 2 * s}})] = 1;
  for (int i = 1; i <= q; ++i)
    for (int j = i + 1; j <= q; ++j)
      for (int si : {+1, -1})
        for (int sj : {+1, -1}) out[form({{i, si}, {j, sj}})] = 1;
  const std::size_t zero_dim = static_cast<std::size_t>(m * (m + 1) / 2 + q - 1);
  if (zero_dim > 0 || q > 0) out[form({})] = zero_dim;
  return out;
}

} // namespace oracle
