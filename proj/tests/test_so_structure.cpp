#include "doctest.h"
#include "support/oracles.hpp"

#include "sopq/basis_index.hpp"
#include "sopq/linalg.hpp"
#include "sopq/so_pq.hpp"
#include "sopq/weights.hpp"

#include <random>
#include <vector>

using namespace sopq;

namespace {

std::vector<Signature> signatures_up_to(int dmax)
{
  std::vector<Signature> out;
  for (int d = 2; d <= dmax; ++d)
    for (int q = 0; 2 * q <= d; ++q) out.push_back(make_signature(d - q, q));
  return out;
}

Mat random_matrix(std::mt19937& rng, std::size_t d)
{
  std::uniform_int_distribution<int> entry(-5, 5);
  Mat x(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) x.at(r, c) = entry(rng);
  return x;
}

} // namespace

TEST_CASE("form matrix and involution characterize both memberships")
{
  std::mt19937 rng(20240819);
  for (const Signature& sig : {make_signature(3, 1), make_signature(2, 2), make_signature(2, 0)}) {
    const std::size_t d = static_cast<std::size_t>(sig.d());
    const Mat j = form_matrix(sig);
    for (std::size_t r = 0; r < d; ++r)
      CHECK(j.at(r, r) == (static_cast<int>(r) < sig.p ? 1 : -1));
    CHECK(j * j == Mat::identity(d));

    for (int trial = 0; trial < 8; ++trial) {
      const Mat x = random_matrix(rng, d);
      const Mat sigma = form_involution(sig, x);
      CHECK(sigma == j * x.transposed() * j);
      // so(p,q) is the -1 eigenspace: X^t J + J X = 0.
      CHECK(is_member_so(sig, x) == (x.transposed() * j + j * x).is_zero());
      CHECK(is_member_so(sig, x) == (sigma == -x));
      // s is the +1 eigenspace intersected with the traceless matrices.
      CHECK(is_member_s(sig, x) == (sigma == x && x.trace() == 0));
    }
  }
}

TEST_CASE("standard so-basis: size, membership, bracket closure")
{
  for (const Signature& sig : signatures_up_to(6)) {
    CAPTURE(sig.p);
    CAPTURE(sig.q);
    const std::vector<Mat> basis = standard_basis_so(sig);
    const int expected = (sig.p * (sig.p - 1) + sig.q * (sig.q - 1)) / 2 + sig.p * sig.q;
    CHECK(static_cast<int>(basis.size()) == expected);
    CHECK(dim_so(sig) == expected);
    CHECK(oracle::rank(oracle::flat_all(basis)) == basis.size());
    for (const Mat& x : basis) CHECK(is_member_so(sig, x));
    for (const Mat& x : basis)
      for (const Mat& y : basis) CHECK(is_member_so(sig, bracket(x, y)));
  }
}

TEST_CASE("Jacobi identity holds exactly on all so-basis triples (d <= 6)")
{
  for (const Signature& sig : signatures_up_to(6)) {
    const std::vector<Mat> basis = standard_basis_so(sig);
    for (const Mat& x : basis)
      for (const Mat& y : basis)
        for (const Mat& z : basis) {
          const Mat jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) +
                          bracket(z, bracket(x, y));
          CHECK(jac.is_zero());
        }
  }
}

TEST_CASE("Cartan relations on basis pairs: [k,k] in k, [k,p] in p, [p,p] in k")
{
  for (const Signature& sig : signatures_up_to(6)) {
    const CartanSplit split = cartan_split(sig);
    CHECK(split.k.size() + split.p.size() == standard_basis_so(sig).size());
    const VectorSpaceBasis k_span =
        make_basis(static_cast<std::size_t>(sig.d() * sig.d()), oracle::flat_all(split.k));
    const VectorSpaceBasis p_span =
        make_basis(static_cast<std::size_t>(sig.d() * sig.d()), oracle::flat_all(split.p));
    for (const Mat& x : split.k)
      for (const Mat& y : split.k) CHECK(in_span(bracket(x, y).flatten(), k_span));
    for (const Mat& x : split.k)
      for (const Mat& y : split.p) CHECK(in_span(bracket(x, y).flatten(), p_span));
    for (const Mat& x : split.p)
      for (const Mat& y : split.p) CHECK(in_span(bracket(x, y).flatten(), k_span));
  }
}

TEST_CASE("the split torus: explicit generators, abelian, maximal in p")
{
  for (const Signature& sig : signatures_up_to(6)) {
    const std::vector<Mat> torus = abelian_a(sig);
    CHECK(torus.size() == static_cast<std::size_t>(sig.q));
    for (int i = 1; i <= sig.q; ++i) {
      const Mat expected = elementary(sig.d(), sig.p + 1 - i, sig.p + i) +
                           elementary(sig.d(), sig.p + i, sig.p + 1 - i);
      CHECK(torus[static_cast<std::size_t>(i - 1)] == expected);
      CHECK(torus_generator(sig, i) == expected);
    }
    for (const Mat& x : torus)
      for (const Mat& y : torus) CHECK(bracket(x, y).is_zero());
    const CartanSplit split = cartan_split(sig);
    const VectorSpaceBasis p_span =
        make_basis(static_cast<std::size_t>(sig.d() * sig.d()), oracle::flat_all(split.p));
    for (const Mat& x : torus) CHECK(in_span(x.flatten(), p_span));
    CHECK(a_maximal_abelian_in_p(sig));
  }
}

TEST_CASE("project splits tracelessly and exactly")
{
  // Members of so project to themselves.
  const Signature s31 = make_signature(3, 1);
  for (const Mat& x : standard_basis_so(s31)) {
    const auto [xso, xs] = project(s31, x);
    CHECK(xso == x);
    CHECK(xs.is_zero());
  }
  // A rotation generator of so(2,0) has no complement part.
  const Signature s20 = make_signature(2, 0);
  const Mat rot = elementary(2, 1, 2) - elementary(2, 2, 1);
  CHECK(project(s20, rot).second.is_zero());

  // E(1,2) at signature (1,1) splits into the B+C part and a complement rest.
  const Signature s11 = make_signature(1, 1);
  const Mat e12 = elementary(2, 1, 2);
  const auto [eso, es] = project(s11, e12);
  CHECK(is_member_so(s11, eso));
  CHECK(is_member_s(s11, es));
  CHECK(eso + es == e12);
  CHECK(eso == (block_unit(s11, Block::B, 1, 1) + block_unit(s11, Block::C, 1, 1)) *
                   Rational(1, 2));

  // Linearity, idempotence, and rejection of nonzero trace.
  std::mt19937 rng(20240820);
  for (const Signature& sig : {make_signature(2, 1), make_signature(2, 2)}) {
    const std::size_t d = static_cast<std::size_t>(sig.d());
    for (int trial = 0; trial < 6; ++trial) {
      Mat x = random_matrix(rng, d);
      x.at(d - 1, d - 1) -= x.trace(); // make traceless
      Mat y = random_matrix(rng, d);
      y.at(d - 1, d - 1) -= y.trace();
      const auto [xso, xs] = project(sig, x);
      const auto [yso, ys] = project(sig, y);
      CHECK(xso + xs == x);
      CHECK(is_member_so(sig, xso));
      CHECK(is_member_s(sig, xs));
      const auto [sum_so, sum_s] = project(sig, x + y);
      CHECK(sum_so == xso + yso);
      CHECK(sum_s == xs + ys);
      const auto [again_so, again_s] = project(sig, xs);
      CHECK(again_so.is_zero());
      CHECK(again_s == xs);
    }
    Mat traced = Mat::identity(d);
    CHECK_THROWS_AS((void)project(sig, traced), std::invalid_argument);
  }
}

TEST_CASE("direct sum so + s = sl_d and ad-invariance of s (d <= 6)")
{
  for (const Signature& sig : signatures_up_to(6)) {
    CAPTURE(sig.p);
    CAPTURE(sig.q);
    const std::vector<Mat> so_basis = standard_basis_so(sig);
    const std::vector<Mat> s_basis = complement_basis(sig);
    CHECK(static_cast<int>(s_basis.size()) == dim_s(sig));
    CHECK(dim_so(sig) + dim_s(sig) == sig.d() * sig.d() - 1);

    std::vector<std::vector<Rational>> all = oracle::flat_all(so_basis);
    for (const Mat& x : s_basis) all.push_back(x.flatten());
    CHECK(oracle::rank(all) == static_cast<std::size_t>(sig.d() * sig.d() - 1));

    const VectorSpaceBasis s_span =
        make_basis(static_cast<std::size_t>(sig.d() * sig.d()), oracle::flat_all(s_basis));
    for (const Mat& x : so_basis)
      for (const Mat& s : s_basis) CHECK(in_span(bracket(x, s).flatten(), s_span));
  }
}
