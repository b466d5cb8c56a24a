#pragma once

#include "sopq/so_pq.hpp"

#include <string>
#include <vector>

namespace sopq {

/// One restricted-root space of so(p, q): the (nonzero) root and an explicit
/// basis of its root space, every element an exact simultaneous eigenvector
/// of ad F_1, ..., ad F_q.
struct RootSpace {
  LinearForm root;
  std::vector<Mat> vectors;
};

/// Root vector for the short root sign*f_i attached to the ell-th spare
/// row/column (ell in 1..p-q); only exists when p > q.
Mat short_root_vector(const Signature& sig, int sign, int i, int ell);

/// Root vector for si*f_i + sj*f_j with i != j and si, sj in {+1, -1}.
/// The (i, j) and (j, i) descriptions of the same form yield the same
/// canonical matrix.
Mat long_root_vector(const Signature& sig, int si, int i, int sj, int j);

/// Generator A(q+j, q+i) - A(q+i, q+j) of the centralizer part m, 1 <= i < j <= p-q.
Mat zero_root_m_generator(const Signature& sig, int i, int j);

/// Basis of the zero-root space m + a: torus generators F_1..F_q first, then
/// the m-generators in lexicographic (i, j) order.
std::vector<Mat> zero_root_space(const Signature& sig);

/// All nonzero restricted roots, ascending lexicographic.
std::vector<LinearForm> restricted_roots(const Signature& sig);

/// Basis of the root space of an arbitrary form (zero form included);
/// throws std::invalid_argument when the form is not a root.
std::vector<Mat> root_space_basis(const Signature& sig, const LinearForm& form);

/// Expected dimension of the root space for an arbitrary form (0 when the
/// form is not a root; the zero form reports dim(m) + q).
int expected_root_multiplicity(const Signature& sig, const LinearForm& form);

/// The full restricted-root decomposition of so(p, q), with every claimed
/// property re-checked exactly; check failures are collected, not thrown.
struct RootDecomposition {
  Signature sig;
  std::vector<RootSpace> spaces; // nonzero roots, ascending lex
  std::vector<Mat> zero_space;
  std::vector<std::string> failures;

  bool verified() const { return failures.empty(); }
  std::size_t total_dimension() const;
};

RootDecomposition full_root_system(const Signature& sig);

} // namespace sopq
