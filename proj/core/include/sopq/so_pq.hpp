#pragma once

#include "sopq/basis_index.hpp"
#include "sopq/matrix.hpp"

#include <string>
#include <vector>

namespace sopq {

/// Gram matrix J = diag(I_p, -I_q) of the defining bilinear form.
Mat form_matrix(const Signature& sig);

/// The form-compatible involution sigma(X) = J X^t J on gl_d. Its -1
/// eigenspace is so(p, q); the +1 eigenspace intersected with sl_d is the
/// invariant complement s.
Mat form_involution(const Signature& sig, const Mat& x);

/// Exact membership in so(p, q): X^t J + J X = 0. In letter blocks: A and D
/// skew-symmetric, C(i, j) = B(j, i).
bool is_member_so(const Signature& sig, const Mat& x);

/// Exact membership in the complement s: A and D symmetric,
/// C(i, j) = -B(j, i), and tr A + tr D = 0.
bool is_member_s(const Signature& sig, const Mat& x);

/// dim so(p, q) = (p(p-1) + q(q-1))/2 + pq.
int dim_so(const Signature& sig);

/// dim s = (p(p+1) + q(q+1))/2 + pq - 1.
int dim_s(const Signature& sig);

/// Projections of a traceless X onto so(p, q) and s (X = first + second).
/// Throws std::invalid_argument when tr X != 0.
std::pair<Mat, Mat> project(const Signature& sig, const Mat& x);

/// Standard basis of so(p, q), ordered A-part, then BC-part, then D-part:
///   A(i,j) - A(j,i)   for 1 <= i < j <= p,
///   B(i,j) + C(j,i)   for i in 1..p, j in 1..q,
///   D(i,j) - D(j,i)   for 1 <= i < j <= q.
std::vector<Mat> standard_basis_so(const Signature& sig);

/// Cartan-type split of the standard basis: k = block-diagonal part
/// (A- and D-families), p = off-diagonal part (BC-family).
struct CartanSplit {
  std::vector<Mat> k;
  std::vector<Mat> p;
};
CartanSplit cartan_split(const Signature& sig);

/// Generator F_i = B(i,i) + C(i,i) = E(p+1-i, p+i) + E(p+i, p+1-i) of the
/// maximal split torus; i in 1..q.
Mat torus_generator(const Signature& sig, int i);

/// The abelian subspace a = span{F_1, ..., F_q}.
std::vector<Mat> abelian_a(const Signature& sig);

/// Checks that a is maximal abelian in the p-part: the centralizer of a
/// inside span(p-basis) is exactly a.
bool a_maximal_abelian_in_p(const Signature& sig);

/// Integer linear form c_1 f_1 + ... + c_q f_q on a, written over the basis
/// dual to the F_i.
struct LinearForm {
  std::vector<int> coeffs;

  bool is_zero() const;
  LinearForm operator+(const LinearForm& o) const;
  LinearForm operator-(const LinearForm& o) const;
  LinearForm operator-() const;
  bool operator==(const LinearForm& o) const { return coeffs == o.coeffs; }
  bool operator!=(const LinearForm& o) const { return !(*this == o); }
};

/// Zero form of rank q, and the single-generator forms used as building
/// blocks: unit_form(q, i) has coefficient 1 at f_i.
LinearForm zero_form(int q);
LinearForm unit_form(int q, int i);

/// Ascending lexicographic order on coefficient vectors; the report order.
bool lex_less(const LinearForm& a, const LinearForm& b);

/// Human-readable rendering, e.g. "f_1 - f_2", "2f_1", "0".
std::string pretty(const LinearForm& form);

/// Checks [H, X] = value * X for H = F_i and every i, with
/// value = form.coeffs[i-1]; the defining eigen-relation for root and
/// weight vectors.
bool satisfies_eigen_relations(const Signature& sig, const LinearForm& form, const Mat& x);

} // namespace sopq
