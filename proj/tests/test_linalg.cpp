#include "doctest.h"
#include "support/oracles.hpp"

#include "sopq/linalg.hpp"
#include "sopq/roots.hpp"
#include "sopq/so_pq.hpp"
#include "sopq/weights.hpp"

#include <random>
#include <vector>

using namespace sopq;
using Vec = std::vector<Rational>;

namespace {

Vec vec(std::initializer_list<int> xs)
{
  Vec v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

std::vector<Vec> random_vectors(std::mt19937& rng, std::size_t count, std::size_t dim)
{
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Vec> out(count, Vec(dim));
  for (auto& v : out)
    for (auto& x : v) x = Rational(num(rng), den(rng));
  return out;
}

} // namespace

TEST_CASE("rank: base cases and reference values")
{
  CHECK(rank({}) == 0);
  CHECK(rank({vec({1, 0}), vec({0, 1}), vec({1, 1})}) == 2);

  // The fifteen root-space vectors of so(4,2) span the whole algebra.
  const Signature sig = make_signature(4, 2);
  const RootDecomposition rd = full_root_system(sig);
  std::vector<Vec> rows;
  for (const RootSpace& space : rd.spaces)
    for (const Mat& x : space.vectors) rows.push_back(x.flatten());
  for (const Mat& x : rd.zero_space) rows.push_back(x.flatten());
  CHECK(rows.size() == 15);
  CHECK(rank(rows) == 15);
  CHECK(oracle::rank(rows) == 15);
  CHECK(15 == dim_so(sig));
}

TEST_CASE("rank agrees with the elimination oracle on random input")
{
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t dim = 1 + static_cast<std::size_t>(trial % 7);
    const std::size_t count = static_cast<std::size_t>(trial % 9);
    const auto rows = random_vectors(rng, count, dim);
    const std::size_t r = rank(rows);
    CHECK(r == oracle::rank(rows));
    CHECK(r <= std::min(count, dim));
  }
}

TEST_CASE("in_span: base cases and the complement membership example")
{
  const VectorSpaceBasis b = make_basis(2, {vec({1, 0})});
  CHECK(in_span(vec({0, 0}), b));
  CHECK_FALSE(in_span(vec({1, 1}), b));

  // S(2 f_1) of so(4,2) lies in the span of the structural complement basis.
  const Signature sig = make_signature(4, 2);
  std::vector<Vec> rows;
  for (const Mat& x : complement_basis(sig)) rows.push_back(x.flatten());
  const VectorSpaceBasis s_basis = make_basis(36, rows);
  CHECK(s_basis.dim() == 20);
  const Mat s2f1 = double_weight_vector(sig, +1, 1);
  CHECK(in_span(s2f1.flatten(), s_basis));
  CHECK(oracle::in_span(s2f1.flatten(), rows));
}

TEST_CASE("in_span matches a rank comparison on random input")
{
  std::mt19937 rng(20240812);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t dim = 2 + static_cast<std::size_t>(trial % 5);
    auto rows = random_vectors(rng, 2 + static_cast<std::size_t>(trial % 3), dim);
    const VectorSpaceBasis b = make_basis(dim, rows);
    const auto probe = random_vectors(rng, 1, dim)[0];
    std::vector<Vec> extended = rows;
    extended.push_back(probe);
    CHECK(in_span(probe, b) == (rank(extended) == rank(rows)));
  }
}

TEST_CASE("extend_span: growth, idempotence, canonical rescaling")
{
  const VectorSpaceBasis b1 = make_basis(2, {vec({1, 0})});
  CHECK(extend_span(b1, vec({2, 0})) == b1);

  const VectorSpaceBasis empty = make_basis(2, {});
  const VectorSpaceBasis scaled = extend_span(empty, vec({0, 3}));
  CHECK(scaled.vectors == std::vector<Vec>{vec({0, 1})});

  // Extending the zero-weight space of so(4,2) by a short weight vector.
  const Signature sig = make_signature(4, 2);
  std::vector<Vec> rows;
  for (const Mat& x : zero_weight_space(sig)) rows.push_back(x.flatten());
  CHECK(rows.size() == 4);
  const VectorSpaceBasis s0 = make_basis(36, rows);
  const Vec probe = short_weight_vector(sig, +1, 1, 1).flatten();
  const VectorSpaceBasis grown = extend_span(s0, probe);
  CHECK(grown.dim() == 5);
  CHECK(extend_span(grown, probe) == grown);
}

TEST_CASE("canonical form: echelon bases of one subspace compare equal")
{
  std::mt19937 rng(20240813);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t dim = 3 + static_cast<std::size_t>(trial % 4);
    auto rows = random_vectors(rng, 3, dim);
    // Same span, different presentation: scale, permute, add row multiples.
    std::vector<Vec> mangled;
    Vec combo(dim, Rational(0));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      Vec scaled = rows[rows.size() - 1 - i];
      for (auto& x : scaled) x *= Rational(3, 2);
      mangled.push_back(scaled);
      for (std::size_t k = 0; k < dim; ++k) combo[k] += rows[i][k] * Rational(i + 1);
    }
    mangled.push_back(combo);
    CHECK(make_basis(dim, rows) == make_basis(dim, mangled));
  }
}

TEST_CASE("kernel_of_rows annihilates the rows and has complementary dimension")
{
  std::mt19937 rng(20240814);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t dim = 3 + static_cast<std::size_t>(trial % 4);
    const auto rows = random_vectors(rng, 2 + static_cast<std::size_t>(trial % 3), dim);
    const VectorSpaceBasis ker = kernel_of_rows(rows, dim);
    CHECK(ker.dim() + rank(rows) == dim);
    for (const Vec& k : ker.vectors)
      for (const Vec& row : rows) {
        Rational dot = 0;
        for (std::size_t i = 0; i < dim; ++i) dot += row[i] * k[i];
        CHECK(dot == 0);
      }
  }
}

TEST_CASE("solve_coordinates reconstructs combinations exactly")
{
  std::mt19937 rng(20240815);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t dim = 4 + static_cast<std::size_t>(trial % 3);
    const VectorSpaceBasis b = make_basis(dim, random_vectors(rng, 3, dim));
    if (b.dim() < 2) continue;
    Vec target(dim, Rational(0));
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::vector<Rational> chosen;
    for (const Vec& v : b.vectors) {
      const Rational c(coeff(rng), 3);
      chosen.push_back(c);
      for (std::size_t i = 0; i < dim; ++i) target[i] += c * v[i];
    }
    const auto coords = solve_coordinates(target, b.vectors);
    REQUIRE(coords.has_value());
    CHECK(*coords == chosen);

    Vec oracle_coords;
    REQUIRE(oracle::solve(target, b.vectors, oracle_coords));
    CHECK(oracle_coords == chosen);
  }
  // A vector outside the span yields no coordinates.
  CHECK_FALSE(solve_coordinates(vec({0, 0, 1}), {vec({1, 0, 0}), vec({0, 1, 0})}).has_value());
}

TEST_CASE("solve_commutant: full matrix algebra, diagonal case, so(2,1) on s")
{
  CHECK(solve_commutant({}, 2).dim() == 4);

  Mat diag(2, 2);
  diag.at(0, 0) = 1;
  diag.at(1, 1) = 2;
  const VectorSpaceBasis comm = solve_commutant({diag}, 2);
  CHECK(comm.dim() == 2);
  for (const Vec& t : comm.vectors) {
    const Mat tm = Mat::from_flat(2, 2, t);
    CHECK(tm.at(0, 1) == 0);
    CHECK(tm.at(1, 0) == 0);
  }
  CHECK(oracle::commutant_dim({diag}, 2) == 2);

  // The adjoint action of so(2,1) on its complement has scalar commutant.
  const Signature sig = make_signature(2, 1);
  const std::vector<Mat> s_basis = complement_basis(sig);
  const std::size_t k = s_basis.size();
  std::vector<Vec> rows;
  for (const Mat& x : s_basis) rows.push_back(x.flatten());
  std::vector<Mat> maps;
  for (const Mat& g : standard_basis_so(sig)) {
    Mat map(k, k);
    for (std::size_t j = 0; j < k; ++j) {
      Vec coords;
      REQUIRE(oracle::solve(oracle::bracket(g, s_basis[j]).flatten(), rows, coords));
      for (std::size_t i = 0; i < k; ++i) map.at(i, j) = coords[i];
    }
    maps.push_back(map);
  }
  CHECK(solve_commutant(maps, k).dim() == 1);
  CHECK(oracle::commutant_dim(maps, k) == 1);
}

TEST_CASE("SpanTracker mirrors make_basis/extend_span on mixed input")
{
  std::mt19937 rng(20240816);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t dim = 4 + static_cast<std::size_t>(trial % 3);
    SpanTracker tracker(dim);
    std::vector<Vec> inserted;
    auto rows = random_vectors(rng, 6, dim);
    // Force both the machine-integer fast path and the exact fallback.
    rows.push_back(Vec(dim, Rational(Int("1208925819614629174706176"), Int(3))));
    for (const Vec& v : rows) {
      const std::size_t before = tracker.dim();
      const bool grew = tracker.insert(v);
      inserted.push_back(v);
      CHECK(grew == (oracle::rank(inserted) > before));
      CHECK(tracker.dim() == oracle::rank(inserted));
      CHECK(tracker.contains(v));
    }
    CHECK(tracker.basis() == make_basis(dim, inserted));
    CHECK(tracker.ambient_dim() == dim);
  }
}

TEST_CASE("dimension mismatches are rejected")
{
  CHECK_THROWS_AS((void)rank({vec({1, 0}), vec({1, 0, 0})}), std::invalid_argument);
  const VectorSpaceBasis b = make_basis(2, {vec({1, 0})});
  CHECK_THROWS_AS((void)in_span(vec({1, 0, 0}), b), std::invalid_argument);
  CHECK_THROWS_AS((void)extend_span(b, vec({1})), std::invalid_argument);
  Mat square(2, 2), wide(2, 3);
  CHECK_THROWS_AS((void)solve_commutant({square, wide}, 2), std::invalid_argument);
}
