#include "sopq/irreducibility.hpp"

#include "sopq/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

namespace sopq {
namespace {

// ---------------------------------------------------------------------------
// Coordinate model of an ad-action on a subspace of gl_d.
// ---------------------------------------------------------------------------

/// A subspace of gl_d in canonical reduced-echelon coordinates together with
/// the matrices of ad(X) on it, one per action element. Coordinates against
/// reduced-echelon rows are read off the pivot columns; the residual is
/// checked exactly, so a vector escaping the space is detected, not silently
/// projected.
struct ActionModel {
  std::size_t n = 0; // matrix side
  std::size_t k = 0; // dim of the space
  std::vector<std::vector<Rational>> rows; // canonical basis, flattened
  std::vector<std::size_t> pivots;
  std::vector<Mat> space_mats;
  std::vector<Mat> maps; // k x k
  std::vector<std::string> failures;
};

std::optional<std::vector<Rational>> coordinates_in_rows(
    const std::vector<std::vector<Rational>>& rows, const std::vector<std::size_t>& pivots,
    const std::vector<Rational>& v)
{
  std::vector<Rational> coords(rows.size(), Rational(0));
  std::vector<Rational> residual = v;
  for (std::size_t t = 0; t < rows.size(); ++t) {
    coords[t] = residual[pivots[t]];
    if (coords[t] == 0) continue;
    for (std::size_t c = 0; c < residual.size(); ++c)
      if (rows[t][c] != 0) residual[c] -= coords[t] * rows[t][c];
  }
  for (const Rational& r : residual)
    if (r != 0) return std::nullopt;
  return coords;
}

ActionModel build_model(const std::vector<Mat>& action, const std::vector<Mat>& space)
{
  ActionModel model;
  if (space.empty()) return model;
  model.n = space.front().rows();
  const std::size_t nn = model.n * model.n;

  SpanTracker tracker(nn);
  for (const Mat& s : space) tracker.insert(s.flatten());
  VectorSpaceBasis basis = tracker.basis();
  model.k = basis.dim();
  model.rows = std::move(basis.vectors);
  for (const auto& row : model.rows) {
    std::size_t pivot = nn;
    for (std::size_t c = 0; c < nn; ++c)
      if (row[c] != 0) {
        pivot = c;
        break;
      }
    model.pivots.push_back(pivot);
    model.space_mats.push_back(Mat::from_flat(model.n, model.n, row));
  }

  for (std::size_t a = 0; a < action.size(); ++a) {
    Mat m(model.k, model.k);
    for (std::size_t j = 0; j < model.k; ++j) {
      const Mat image = bracket(action[a], model.space_mats[j]);
      const auto coords = coordinates_in_rows(model.rows, model.pivots, image.flatten());
      if (!coords) {
        model.failures.push_back("space is not invariant under action element " +
                                 std::to_string(a + 1));
        continue;
      }
      for (std::size_t i = 0; i < model.k; ++i) m.at(i, j) = (*coords)[i];
    }
    model.maps.push_back(std::move(m));
  }
  return model;
}

/// Action list for the commutant computation: torus generators first (their
/// restrictions have small commutants, which keeps the incremental kernel
/// computation cheap), then the remaining standard so-basis elements.
std::vector<Mat> action_torus_first(const Signature& sig)
{
  std::vector<Mat> action = abelian_a(sig);
  for (const Mat& x : standard_basis_so(sig)) {
    bool duplicate = false;
    for (const Mat& f : action)
      if (x == f) {
        duplicate = true;
        break;
      }
    if (!duplicate) action.push_back(x);
  }
  return action;
}

// ---------------------------------------------------------------------------
// Rational eigenvalue search for the invariant-subspace witness.
// ---------------------------------------------------------------------------

std::vector<Int> positive_divisors(Int n)
{
  if (n < 0) n = -n;
  std::vector<Int> divisors;
  if (n == 0) return divisors;
  const Int cap = 1000000; // trial-division bound; enough for the small
                           // structure constants arising here
  for (Int i = 1; i * i <= n && i <= cap; ++i)
    if (n % i == 0) {
      divisors.push_back(i);
      if (i * i != n) divisors.push_back(n / i);
    }
  return divisors;
}

/// Monic minimal polynomial of T: returns c_0..c_{deg-1} with
/// T^deg = sum c_j T^j.
std::vector<Rational> minimal_polynomial(const Mat& t)
{
  const std::size_t k = t.rows();
  SpanTracker tracker(k * k);
  std::vector<std::vector<Rational>> powers;
  Mat p = Mat::identity(k);
  for (std::size_t deg = 0; deg <= k; ++deg) {
    std::vector<Rational> flat = p.flatten();
    if (!tracker.insert(flat)) {
      const auto coords = solve_coordinates(flat, powers);
      if (!coords) throw std::logic_error("minimal_polynomial: dependence lost");
      return *coords;
    }
    powers.push_back(std::move(flat));
    p = t * p;
  }
  throw std::logic_error("minimal_polynomial: no dependence up to degree k");
}

std::vector<Rational> rational_eigenvalue_candidates(const std::vector<Rational>& minpoly)
{
  // Integer coefficients of x^deg - sum c_j x^j, scaled by the lcm of the
  // denominators.
  const std::size_t deg = minpoly.size();
  Int lcm = 1;
  for (const Rational& c : minpoly) {
    const Int den = denominator(c);
    lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
  }
  std::vector<Int> coeff(deg + 1);
  coeff[deg] = lcm;
  for (std::size_t j = 0; j < deg; ++j)
    coeff[j] = -numerator(minpoly[j]) * (lcm / denominator(minpoly[j]));

  std::size_t low = 0;
  while (low <= deg && coeff[low] == 0) ++low;

  std::set<Rational> candidates;
  if (low > 0) candidates.insert(Rational(0));
  for (const Int& r : positive_divisors(coeff[low]))
    for (const Int& s : positive_divisors(coeff[deg])) {
      candidates.insert(Rational(r) / Rational(s));
      candidates.insert(Rational(-r) / Rational(s));
    }

  std::vector<Rational> roots;
  for (const Rational& lambda : candidates) {
    // Exact Horner evaluation of the monic polynomial.
    Rational value = 1;
    for (std::size_t j = deg; j-- > 0;) value = value * lambda - minpoly[j];
    if (value == 0) roots.push_back(lambda);
  }
  return roots;
}

// ---------------------------------------------------------------------------
// Generic breadth-first bracket closure (dimension only).
// ---------------------------------------------------------------------------

std::size_t closure_dimension(const std::vector<Mat>& action, const Mat& seed)
{
  const std::size_t n = seed.rows();
  SpanTracker span(n * n);
  std::vector<Mat> discovered;
  span.insert(seed.flatten());
  discovered.push_back(seed);
  for (std::size_t v = 0; v < discovered.size(); ++v)
    for (const Mat& x : action) {
      Mat w = bracket(x, discovered[v]);
      if (w.is_zero()) continue;
      if (span.insert(w.flatten())) discovered.push_back(std::move(w));
    }
  return span.dim();
}

// ---------------------------------------------------------------------------
// Weight-ladder scaffolding.
// ---------------------------------------------------------------------------

/// Caches the (deterministic) space bases looked up by form.
class SpaceCache {
public:
  explicit SpaceCache(const Signature& sig) : sig_(sig) {}

  const std::vector<Mat>& weight_space(const LinearForm& form)
  {
    auto it = weight_.find(form.coeffs);
    if (it == weight_.end())
      it = weight_.emplace(form.coeffs, weight_space_basis(sig_, form)).first;
    return it->second;
  }

  const std::vector<Mat>& root_space(const LinearForm& form)
  {
    auto it = root_.find(form.coeffs);
    if (it == root_.end()) it = root_.emplace(form.coeffs, root_space_basis(sig_, form)).first;
    return it->second;
  }

private:
  Signature sig_;
  std::map<std::vector<int>, std::vector<Mat>> weight_;
  std::map<std::vector<int>, std::vector<Mat>> root_;
};

struct UnionFind {
  std::vector<std::size_t> parent;

  explicit UnionFind(std::size_t n) : parent(n)
  {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x)
  {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

LinearForm sparse_form(int q, std::initializer_list<std::pair<int, int>> terms)
{
  LinearForm f = zero_form(q);
  for (const auto& [i, c] : terms) f.coeffs[i - 1] = c;
  return f;
}

} // namespace

// ---------------------------------------------------------------------------
// invariant_closure
// ---------------------------------------------------------------------------

ClosureTrace invariant_closure(const Signature& sig, const Mat& seed)
{
  const std::size_t d = static_cast<std::size_t>(sig.d());
  if (!seed.is_square() || seed.rows() != d)
    throw std::invalid_argument("invariant_closure: seed has wrong shape");
  if (seed.is_zero()) throw std::invalid_argument("invariant_closure: zero seed");
  if (!is_member_s(sig, seed))
    throw std::invalid_argument("invariant_closure: seed is not a member of s");

  ClosureTrace trace;
  trace.sig = sig;
  trace.seed = seed;
  trace.expected_dim = static_cast<std::size_t>(dim_s(sig));

  const std::vector<Mat> so_basis = standard_basis_so(sig);
  SpanTracker span(d * d);
  std::vector<Mat> discovered;
  span.insert(seed.flatten());
  discovered.push_back(seed);

  for (std::size_t v = 0; v < discovered.size(); ++v)
    for (std::size_t g = 0; g < so_basis.size(); ++g) {
      Mat w = bracket(so_basis[g], discovered[v]);
      if (w.is_zero()) continue;
      if (span.insert(w.flatten())) {
        discovered.push_back(std::move(w));
        trace.steps.push_back({g + 1, v + 1, span.dim()});
      }
    }
  trace.final_dim = span.dim();
  return trace;
}

// ---------------------------------------------------------------------------
// ladder_certificate
// ---------------------------------------------------------------------------

LadderCertificate ladder_certificate(const Signature& sig)
{
  LadderCertificate cert;
  cert.sig = sig;
  const int q = sig.q;
  const int m = sig.p - sig.q;
  if (q == 0) {
    cert.applicable = false;
    cert.connected = false;
    cert.zero_generators_reached = false;
    return cert;
  }
  cert.applicable = true;

  SpaceCache cache(sig);
  const LinearForm zero = zero_form(q);

  // Node table over all weights (zero included when its space is nonzero).
  std::map<std::vector<int>, std::size_t> node_of;
  for (const LinearForm& w : weights_of_s(sig)) node_of.emplace(w.coeffs, node_of.size());
  const std::size_t zero_dim = cache.weight_space(zero).size();
  if (zero_dim > 0) node_of.emplace(zero.coeffs, node_of.size());
  UnionFind components(node_of.size());

  std::set<std::size_t> zero_reached;

  const auto add_edge = [&](const LinearForm& source, std::size_t source_index,
                            const LinearForm& root, std::size_t root_index,
                            const LinearForm& target, std::size_t target_index) {
    LadderEdge edge;
    edge.source = source;
    edge.source_index = source_index;
    edge.root = root;
    edge.root_index = root_index;
    edge.target = target;
    edge.target_index = target_index;

    if (source + root != target) {
      edge.verified = false;
      edge.note = "edge forms are inconsistent";
      cert.failures.push_back("edge " + pretty(source) + " --" + pretty(root) + "--> " +
                              pretty(target) + ": form arithmetic mismatch");
      cert.edges.push_back(std::move(edge));
      return;
    }

    const std::vector<Mat>& source_space = cache.weight_space(source);
    const std::vector<Mat>& root_space = cache.root_space(root);
    const std::vector<Mat>& target_space = cache.weight_space(target);
    const Mat& h = root_space.at(root_index - 1);
    const Mat& s = source_space.at(source_index - 1);
    const Mat image = bracket(h, s);

    const std::string label = "edge " + pretty(source) + "[" + std::to_string(source_index) +
                              "] --" + pretty(root) + "[" + std::to_string(root_index) +
                              "]--> " + pretty(target) + "[" + std::to_string(target_index) +
                              "]";
    if (image.is_zero()) {
      edge.verified = false;
      edge.note = "bracket vanished";
      cert.failures.push_back(label + ": bracket vanished");
      cert.edges.push_back(std::move(edge));
      return;
    }

    // Preferred outcome: the bracket is an exact scalar multiple of the one
    // claimed target vector.
    const Mat& claimed = target_space.at(target_index - 1);
    Rational scalar = 0;
    for (std::size_t r = 0; r < claimed.rows() && scalar == 0; ++r)
      for (std::size_t c = 0; c < claimed.cols() && scalar == 0; ++c)
        if (claimed.at(r, c) != 0) scalar = image.at(r, c) / claimed.at(r, c);
    if (scalar != 0 && image == claimed * scalar) {
      edge.scalar = scalar;
      edge.verified = true;
    } else {
      // Fall back to exact membership in the full target space.
      std::vector<std::vector<Rational>> flats;
      for (const Mat& t : target_space) flats.push_back(t.flatten());
      const auto coords = solve_coordinates(image.flatten(), flats);
      if (coords) {
        edge.verified = true;
        edge.target_index = 0;
        edge.note = "combination of target basis vectors";
        if (target.is_zero())
          for (std::size_t t = 0; t < coords->size(); ++t)
            if ((*coords)[t] != 0) zero_reached.insert(t + 1);
      } else {
        edge.verified = false;
        edge.note = "bracket not in claimed target space";
        cert.failures.push_back(label + ": bracket escapes the target weight space");
      }
    }

    if (edge.verified) {
      components.unite(node_of.at(source.coeffs), node_of.at(target.coeffs));
      if (source.is_zero()) zero_reached.insert(edge.source_index);
      if (target.is_zero() && edge.target_index > 0) zero_reached.insert(edge.target_index);
    }
    cert.edges.push_back(std::move(edge));
  };

  const auto f = [&](std::initializer_list<std::pair<int, int>> terms) {
    return sparse_form(q, terms);
  };
  // Zero-weight basis order: Y (pairs, lex), then Z, then W.
  const int y_count = m * (m - 1) / 2;
  const auto idx_y = [&](int i, int j) {
    return static_cast<std::size_t>((i - 1) * m - i * (i - 1) / 2 + (j - i));
  };
  const auto idx_z = [&](int i) { return static_cast<std::size_t>(y_count + i); };
  const auto idx_w = [&](int i) { return static_cast<std::size_t>(y_count + m + i); };

  // Doubled anchor to mixed to doubled (both f_1-signs): the chain
  // [S(±2f_1)] <-> [S(±f_1 + t f_j)] <-> [S(2t f_j)].
  for (int j = 2; j <= q; ++j)
    for (int t : {1, -1}) {
      add_edge(f({{1, 2}}), 1, f({{1, -1}, {j, t}}), 1, f({{1, 1}, {j, t}}), 1);
      add_edge(f({{1, 1}, {j, t}}), 1, f({{1, -1}, {j, t}}), 1, f({{j, 2 * t}}), 1);
      add_edge(f({{1, -2}}), 1, f({{1, 1}, {j, t}}), 1, f({{1, -1}, {j, t}}), 1);
      add_edge(f({{1, -1}, {j, t}}), 1, f({{1, 1}, {j, t}}), 1, f({{j, 2 * t}}), 1);
    }

  // Mixed weights not involving f_1, reached from the f_1 chains.
  for (int i = 2; i <= q; ++i)
    for (int j = i + 1; j <= q; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1})
          add_edge(f({{1, 1}, {j, sj}}), 1, f({{1, -1}, {i, si}}), 1,
                   f({{i, si}, {j, sj}}), 1);

  // Doubled <-> short transitions, both directions, every spare index.
  for (int i = 1; i <= q; ++i)
    for (int s : {1, -1})
      for (int ell = 1; ell <= m; ++ell) {
        add_edge(f({{i, 2 * s}}), 1, f({{i, -s}}), static_cast<std::size_t>(ell),
                 f({{i, s}}), static_cast<std::size_t>(ell));
        add_edge(f({{i, s}}), static_cast<std::size_t>(ell), f({{i, s}}),
                 static_cast<std::size_t>(ell), f({{i, 2 * s}}), 1);
      }

  // Zero-weight generators, Y- and Z-families: entered from the zero space
  // into S(-f_1) and, mirrored, into S(f_1).
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      add_edge(zero, idx_y(i, j), f({{1, -1}}), static_cast<std::size_t>(i), f({{1, -1}}),
               static_cast<std::size_t>(j));
      add_edge(zero, idx_y(i, j), f({{1, 1}}), static_cast<std::size_t>(i), f({{1, 1}}),
               static_cast<std::size_t>(j));
    }
  for (int i = 1; i <= m; ++i) {
    add_edge(zero, idx_z(i), f({{1, -1}}), static_cast<std::size_t>(i), f({{1, -1}}),
             static_cast<std::size_t>(i));
    add_edge(zero, idx_z(i), f({{1, 1}}), static_cast<std::size_t>(i), f({{1, 1}}),
             static_cast<std::size_t>(i));
  }

  // Zero-weight W-family, reached from the doubled-negative mixed weights.
  for (int i = 1; i + 1 <= q; ++i)
    add_edge(f({{i, -1}, {i + 1, -1}}), 1, f({{i, 1}, {i + 1, 1}}), 1, zero, idx_w(i));

  // Connectivity of the weight graph.
  cert.connected = true;
  if (!node_of.empty()) {
    const std::size_t root = components.find(0);
    for (std::size_t t = 1; t < node_of.size(); ++t)
      if (components.find(t) != root) {
        cert.connected = false;
        break;
      }
  }
  cert.zero_generators_reached = (zero_reached.size() == zero_dim);
  return cert;
}

// ---------------------------------------------------------------------------
// commutant_certificate
// ---------------------------------------------------------------------------

CommutantCertificate commutant_certificate(const Signature& sig)
{
  CommutantCertificate cert;
  cert.sig = sig;
  cert.semisimple = sig.d() >= 3;

  ActionModel model = build_model(action_torus_first(sig), complement_basis(sig));
  cert.failures = model.failures;
  const VectorSpaceBasis commutant = solve_commutant(model.maps, model.k);
  cert.commutant_dim = commutant.dim();
  if (cert.commutant_dim == 0)
    cert.failures.push_back("commutant does not contain the identity");

  cert.irreducible = cert.semisimple && cert.commutant_dim == 1 && cert.failures.empty();
  cert.hypothesis =
      cert.semisimple
          ? "complete reducibility of the adjoint so(p,q)-action on s (holds: so(p,q) is "
            "semisimple for p+q >= 3); under it a one-dimensional commutant certifies "
            "irreducibility"
          : "so(p,q) is abelian for p+q = 2, so complete reducibility is not guaranteed; "
            "the commutant dimension is reported but does not certify irreducibility";
  return cert;
}

// ---------------------------------------------------------------------------
// invariant_subspace_witness
// ---------------------------------------------------------------------------

std::optional<std::vector<Mat>> invariant_subspace_witness(
    const std::vector<Mat>& action_basis, const std::vector<Mat>& space_basis)
{
  ActionModel model = build_model(action_basis, space_basis);
  if (model.k == 0 || !model.failures.empty()) return std::nullopt;
  const VectorSpaceBasis commutant = solve_commutant(model.maps, model.k);
  if (commutant.dim() <= 1) return std::nullopt;

  for (const auto& flat : commutant.vectors) {
    const Mat t = Mat::from_flat(model.k, model.k, flat);
    for (const Rational& lambda : rational_eigenvalue_candidates(minimal_polynomial(t))) {
      // Kernel of T - lambda I: candidate invariant subspace in coordinates.
      std::vector<std::vector<Rational>> rows;
      for (std::size_t r = 0; r < model.k; ++r) {
        std::vector<Rational> row;
        for (std::size_t c = 0; c < model.k; ++c)
          row.push_back(t.at(r, c) - (r == c ? lambda : Rational(0)));
        rows.push_back(std::move(row));
      }
      const VectorSpaceBasis kernel = kernel_of_rows(rows, model.k);
      if (kernel.dim() == 0 || kernel.dim() >= model.k) continue;

      std::vector<Mat> witness;
      for (const auto& coords : kernel.vectors) {
        Mat w(model.n, model.n);
        for (std::size_t j = 0; j < model.k; ++j)
          if (coords[j] != 0) w += model.space_mats[j] * coords[j];
        witness.push_back(std::move(w));
      }
      // Exact invariance re-check of the lifted subspace.
      SpanTracker span(model.n * model.n);
      for (const Mat& w : witness) span.insert(w.flatten());
      bool invariant = span.dim() == kernel.dim();
      for (const Mat& x : action_basis) {
        if (!invariant) break;
        for (const Mat& w : witness)
          if (!span.contains(bracket(x, w).flatten())) {
            invariant = false;
            break;
          }
      }
      if (invariant) return witness;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// two_piece_decomposition
// ---------------------------------------------------------------------------

TwoPieceReport two_piece_decomposition(const Signature& sig)
{
  TwoPieceReport report;
  report.sig = sig;
  const std::size_t d = static_cast<std::size_t>(sig.d());
  report.dim_sl = static_cast<int>(d * d) - 1;
  report.dim_so_part = dim_so(sig);
  report.dim_s_part = dim_s(sig);

  const std::vector<Mat> so_basis = standard_basis_so(sig);
  const std::vector<Mat> s_basis = complement_basis(sig);

  // Direct sum: the two bases together are independent and fill sl_d.
  SpanTracker all(d * d);
  std::size_t grew = 0;
  for (const Mat& x : so_basis)
    if (all.insert(x.flatten())) ++grew;
  for (const Mat& x : s_basis)
    if (all.insert(x.flatten())) ++grew;
  report.direct_sum = grew == so_basis.size() + s_basis.size() &&
                      all.dim() == static_cast<std::size_t>(report.dim_sl);
  if (!report.direct_sum)
    report.failures.push_back("sl_d is not the direct sum of so(p,q) and s");

  // Invariance of both summands under ad(so), all basis pairs.
  report.so_invariant = true;
  for (std::size_t i = 0; i < so_basis.size() && report.so_invariant; ++i)
    for (std::size_t j = 0; j < so_basis.size(); ++j)
      if (!is_member_so(sig, bracket(so_basis[i], so_basis[j]))) {
        report.so_invariant = false;
        report.failures.push_back("so(p,q) is not closed under the bracket at pair (" +
                                  std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
        break;
      }
  report.s_invariant = true;
  for (std::size_t i = 0; i < so_basis.size() && report.s_invariant; ++i)
    for (std::size_t j = 0; j < s_basis.size(); ++j)
      if (!is_member_s(sig, bracket(so_basis[i], s_basis[j]))) {
        report.s_invariant = false;
        report.failures.push_back("s is not ad(so)-invariant at pair (" +
                                  std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
        break;
      }

  // Closure evidence from every structural s-basis seed.
  report.closure_all_seeds = true;
  for (std::size_t j = 0; j < s_basis.size(); ++j) {
    const ClosureTrace trace = invariant_closure(sig, s_basis[j]);
    if (!trace.complete()) {
      report.closure_all_seeds = false;
      report.notes.push_back("closure from s-basis seed " + std::to_string(j + 1) +
                             " stops at dimension " + std::to_string(trace.final_dim) +
                             " of " + std::to_string(trace.expected_dim));
    }
  }

  report.ladder = ladder_certificate(sig);
  report.commutant = commutant_certificate(sig);

  // Verdict for s.
  if (report.commutant.irreducible) {
    report.s_status = "irreducible";
    if (!report.closure_all_seeds)
      report.failures.push_back(
          "inconsistent evidence: scalar commutant but an s-basis closure seed is incomplete");
    if (report.ladder.applicable && !report.ladder.passed())
      report.failures.push_back(
          "inconsistent evidence: scalar commutant but the weight ladder failed");
  } else {
    const auto witness = invariant_subspace_witness(so_basis, s_basis);
    if (witness) {
      report.s_status = "reducible";
      report.notes.push_back("s contains a proper invariant subspace of dimension " +
                             std::to_string(witness->size()));
    } else {
      report.s_status = "undetermined";
      report.notes.push_back(
          "commutant dimension " + std::to_string(report.commutant.commutant_dim) +
          " with no rational-eigenvalue invariant subspace; irreducibility over the reals "
          "is not decided by these certificates");
    }
    if (report.commutant.semisimple && report.commutant.commutant_dim != 1)
      report.failures.push_back("semisimple signature with non-scalar commutant on s");
  }
  for (const std::string& f : report.commutant.failures)
    report.failures.push_back("commutant: " + f);
  if (report.ladder.applicable && !report.ladder.passed() && report.s_status != "irreducible")
    report.notes.push_back("weight ladder is not connected, consistent with the s verdict '" +
                           report.s_status + "'");

  // Diagnostics for the summand so(p,q) itself.
  ActionModel so_model = build_model(action_torus_first(sig), so_basis);
  report.so_commutant_dim = solve_commutant(so_model.maps, so_model.k).dim();
  report.so_closure_all_seeds = true;
  for (const Mat& seed : so_basis)
    if (closure_dimension(so_basis, seed) != static_cast<std::size_t>(report.dim_so_part)) {
      report.so_closure_all_seeds = false;
      break;
    }
  const auto ideal = invariant_subspace_witness(so_basis, so_basis);
  report.so_decomposable = ideal.has_value();
  if (ideal)
    report.notes.push_back("so(" + std::to_string(sig.p) + "," + std::to_string(sig.q) +
                           ") is not ad-irreducible over itself: proper ideal of dimension " +
                           std::to_string(ideal->size()) + " found");
  else if (report.so_commutant_dim > 1)
    report.notes.push_back(
        "adjoint commutant of so(p,q) on itself has dimension " +
        std::to_string(report.so_commutant_dim) +
        " (complex type); no rational proper ideal exists, so no decomposition is reported");
  return report;
}

// ---------------------------------------------------------------------------
// generation_check
// ---------------------------------------------------------------------------

bool generation_check(const Signature& sig, const Mat& x)
{
  const std::size_t d = static_cast<std::size_t>(sig.d());
  if (!x.is_square() || x.rows() != d)
    throw std::invalid_argument("generation_check: matrix has wrong shape");
  if (x.trace() != 0) throw std::invalid_argument("generation_check: matrix is not traceless");
  if (is_member_so(sig, x))
    throw std::invalid_argument("generation_check: matrix already lies in so(p,q)");

  const std::size_t target = d * d - 1;
  SpanTracker span(d * d);
  std::vector<Mat> kept;
  const auto add = [&](const Mat& v) {
    if (span.insert(v.flatten())) kept.push_back(v);
  };
  for (const Mat& b : standard_basis_so(sig)) add(b);
  add(x);

  for (std::size_t i = 1; i < kept.size(); ++i) {
    if (span.dim() == target) return true;
    for (std::size_t j = 0; j < i; ++j) {
      Mat w = bracket(kept[j], kept[i]);
      if (!w.is_zero()) add(w);
      if (span.dim() == target) return true;
    }
  }
  return span.dim() == target;
}

} // namespace sopq
