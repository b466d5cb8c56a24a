#pragma once

#include "sopq/so_pq.hpp"

#include <string>
#include <vector>

namespace sopq {

/// One weight space of the invariant complement s under the adjoint action
/// of the split torus of so(p, q).
struct WeightSpace {
  LinearForm weight;
  std::vector<Mat> vectors;
};

/// Structural basis of s (independent of the torus action), ordered:
///   A(i,j) + A(j,i)          1 <= i < j <= p,
///   B(i,j) - C(j,i)          i in 1..p, j in 1..q,
///   D(i,j) + D(j,i)          1 <= i < j <= q,
///   E(t,t) - E(t+1,t+1)      t = 1..d-1.
std::vector<Mat> complement_basis(const Signature& sig);

/// Weight vector for the short weight sign*f_i at spare index ell (p > q).
Mat short_weight_vector(const Signature& sig, int sign, int i, int ell);

/// Weight vector for the double weight 2*sign*f_i.
Mat double_weight_vector(const Signature& sig, int sign, int i);

/// Weight vector for si*f_i + sj*f_j, i != j; symmetric in the two indices.
Mat mixed_weight_vector(const Signature& sig, int si, int i, int sj, int j);

/// Basis of the zero-weight space s_0, ordered Y-family, Z-family, W-family:
///   Y(i,j) = A(q+i, q+j) + A(q+j, q+i)              1 <= i < j <= p-q,
///   Z(i)   = 2 A(q+i, q+i) - (A(1,1) + D(1,1))      i = 1..p-q,
///   W(i)   = A(i,i) + D(i,i) - A(i+1,i+1) - D(i+1,i+1)   i = 1..q-1.
/// For q = 0 the torus is trivial and s_0 = s; the complement basis is used.
std::vector<Mat> zero_weight_space(const Signature& sig);

/// All nonzero weights of s, ascending lexicographic.
std::vector<LinearForm> weights_of_s(const Signature& sig);

/// Basis of the weight space of an arbitrary form (zero form included);
/// throws std::invalid_argument when the form is not a weight.
std::vector<Mat> weight_space_basis(const Signature& sig, const LinearForm& form);

/// Expected dimension of a weight space (0 when the form is not a weight).
int expected_weight_multiplicity(const Signature& sig, const LinearForm& form);

/// Full weight decomposition of s, exactly re-verified; failures collected.
struct WeightDecomposition {
  Signature sig;
  std::vector<WeightSpace> spaces; // nonzero weights, ascending lex
  std::vector<Mat> zero_space;
  std::vector<std::string> failures;

  bool verified() const { return failures.empty(); }
  std::size_t total_dimension() const;
};

WeightDecomposition full_weight_system(const Signature& sig);

} // namespace sopq
