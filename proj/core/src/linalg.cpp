#include "sopq/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <variant>

namespace sopq {
namespace {

using i64 = std::int64_t;

/// Signals that the machine-integer elimination path would wrap; the caller
/// replays the computation with arbitrary-precision integers.
struct OverflowError {};

inline i64 checked_add(i64 a, i64 b)
{
  i64 r;
  if (__builtin_add_overflow(a, b, &r) || r == std::numeric_limits<i64>::min())
    throw OverflowError{};
  return r;
}

inline i64 checked_sub(i64 a, i64 b)
{
  i64 r;
  if (__builtin_sub_overflow(a, b, &r) || r == std::numeric_limits<i64>::min())
    throw OverflowError{};
  return r;
}

inline i64 checked_mul(i64 a, i64 b)
{
  i64 r;
  if (__builtin_mul_overflow(a, b, &r) || r == std::numeric_limits<i64>::min())
    throw OverflowError{};
  return r;
}

template <typename T>
struct Ops;

template <>
struct Ops<i64> {
  static i64 sub(i64 a, i64 b) { return checked_sub(a, b); }
  static i64 mul(i64 a, i64 b) { return checked_mul(a, b); }
  static i64 abs(i64 a) { return a < 0 ? -a : a; }
  static i64 gcd(i64 a, i64 b) { return std::gcd(a, b); }
};

template <>
struct Ops<Int> {
  static Int sub(const Int& a, const Int& b) { return a - b; }
  static Int mul(const Int& a, const Int& b) { return a * b; }
  static Int abs(const Int& a) { return boost::multiprecision::abs(a); }
  static Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
};

/// Divides v by the gcd of its entries (no-op for zero vectors).
template <typename T>
void divide_gcd(std::vector<T>& v)
{
  T g = 0;
  for (const T& x : v) {
    if (x == 0) continue;
    g = Ops<T>::gcd(g, Ops<T>::abs(x));
    if (g == 1) return;
  }
  if (g == 0) return;
  for (T& x : v) x /= g;
}

/// Integer row-echelon form, fraction-free: rows are primitive integer
/// vectors with positive leading entry, sorted by pivot column. Forward
/// reduction only; full_reduce() produces the two-sided (Jordan) form.
template <typename T>
struct Elim {
  std::size_t ncols = 0;
  std::vector<std::vector<T>> rows;
  std::vector<std::size_t> pivots;

  /// Forward-reduces v against the stored rows in pivot order.
  void reduce(std::vector<T>& v) const
  {
    for (std::size_t t = 0; t < rows.size(); ++t) {
      const std::size_t p = pivots[t];
      if (v[p] == 0) continue;
      const std::vector<T>& r = rows[t];
      const T a = r[p];
      const T b = v[p];
      if (a == 1) {
        for (std::size_t c = p; c < ncols; ++c)
          if (r[c] != 0) v[c] = Ops<T>::sub(v[c], Ops<T>::mul(b, r[c]));
      } else {
        for (std::size_t c = 0; c < ncols; ++c)
          v[c] = Ops<T>::sub(Ops<T>::mul(a, v[c]), Ops<T>::mul(b, r[c]));
      }
      divide_gcd(v);
    }
  }

  /// Returns true when v is independent of the current rows (and keeps it).
  bool insert(std::vector<T> v)
  {
    reduce(v);
    std::size_t lead = ncols;
    for (std::size_t c = 0; c < ncols; ++c)
      if (v[c] != 0) {
        lead = c;
        break;
      }
    if (lead == ncols) return false;
    if (v[lead] < 0)
      for (T& x : v) x = -x;
    const auto pos = std::lower_bound(pivots.begin(), pivots.end(), lead) - pivots.begin();
    pivots.insert(pivots.begin() + pos, lead);
    rows.insert(rows.begin() + pos, std::move(v));
    return true;
  }

  bool contains(std::vector<T> v) const
  {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](const T& x) { return x == 0; });
  }

  /// Clears every pivot column above its pivot row, keeping rows primitive.
  void full_reduce()
  {
    for (std::size_t t = rows.size(); t-- > 0;) {
      const std::size_t p = pivots[t];
      const T a = rows[t][p];
      for (std::size_t s = 0; s < t; ++s) {
        if (rows[s][p] == 0) continue;
        const T b = rows[s][p];
        for (std::size_t c = 0; c < ncols; ++c)
          rows[s][c] = Ops<T>::sub(Ops<T>::mul(a, rows[s][c]), Ops<T>::mul(b, rows[t][c]));
        divide_gcd(rows[s]);
      }
    }
  }

  /// Canonical rational form: full reduction, then unit leading entries.
  std::vector<std::vector<Rational>> rational_rows() const
  {
    Elim copy = *this;
    copy.full_reduce();
    std::vector<std::vector<Rational>> out;
    out.reserve(copy.rows.size());
    for (std::size_t t = 0; t < copy.rows.size(); ++t) {
      const T& lead = copy.rows[t][copy.pivots[t]];
      std::vector<Rational> row(ncols);
      for (std::size_t c = 0; c < ncols; ++c)
        row[c] = Rational(Int(copy.rows[t][c]), Int(lead));
      out.push_back(std::move(row));
    }
    return out;
  }
};

/// Clears denominators and the content, preserving direction.
std::vector<Int> to_primitive(const std::vector<Rational>& v)
{
  Int l = 1;
  for (const Rational& x : v) l = boost::multiprecision::lcm(l, denominator(x));
  std::vector<Int> w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    w[i] = numerator(v[i]) * (l / denominator(v[i]));
  divide_gcd(w);
  return w;
}

constexpr i64 kFitLimit = i64{1} << 62;

std::optional<std::vector<i64>> fit_i64(const std::vector<Int>& v)
{
  std::vector<i64> w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (boost::multiprecision::abs(v[i]) >= kFitLimit) return std::nullopt;
    w[i] = static_cast<i64>(v[i]);
  }
  return w;
}

std::vector<Int> widen(const std::vector<i64>& v)
{
  return std::vector<Int>(v.begin(), v.end());
}

} // namespace

struct SpanTracker::Impl {
  std::size_t ambient;
  mutable std::variant<Elim<i64>, Elim<Int>> form;
  std::vector<std::vector<Int>> kept; // independent originals, for replay

  explicit Impl(std::size_t ambient_dim) : ambient(ambient_dim)
  {
    Elim<i64> e;
    e.ncols = ambient;
    form = std::move(e);
  }

  void escalate() const
  {
    if (std::holds_alternative<Elim<Int>>(form)) return;
    Elim<Int> big;
    big.ncols = ambient;
    for (const std::vector<Int>& r : kept) big.insert(r);
    form = std::move(big);
  }

  bool insert(const std::vector<Rational>& v)
  {
    std::vector<Int> w = to_primitive(v);
    bool grew = false;
    if (auto* small = std::get_if<Elim<i64>>(&form)) {
      if (auto w64 = fit_i64(w)) {
        try {
          grew = small->insert(std::move(*w64));
          if (grew) kept.push_back(std::move(w));
          return grew;
        } catch (const OverflowError&) {
        }
      }
      escalate();
    }
    grew = std::get<Elim<Int>>(form).insert(w);
    if (grew) kept.push_back(std::move(w));
    return grew;
  }

  bool contains(const std::vector<Rational>& v) const
  {
    std::vector<Int> w = to_primitive(v);
    if (auto* small = std::get_if<Elim<i64>>(&form)) {
      if (auto w64 = fit_i64(w)) {
        try {
          return small->contains(std::move(*w64));
        } catch (const OverflowError&) {
        }
      }
      escalate();
    }
    return std::get<Elim<Int>>(form).contains(std::move(w));
  }

  std::size_t dim() const
  {
    return std::visit([](const auto& e) { return e.rows.size(); }, form);
  }

  VectorSpaceBasis basis() const
  {
    VectorSpaceBasis b;
    b.ambient_dim = ambient;
    try {
      b.vectors = std::visit([](const auto& e) { return e.rational_rows(); }, form);
    } catch (const OverflowError&) {
      escalate();
      b.vectors = std::get<Elim<Int>>(form).rational_rows();
    }
    return b;
  }
};

SpanTracker::SpanTracker(std::size_t ambient_dim) : impl_(std::make_unique<Impl>(ambient_dim)) {}
SpanTracker::~SpanTracker() = default;
SpanTracker::SpanTracker(SpanTracker&&) noexcept = default;
SpanTracker& SpanTracker::operator=(SpanTracker&&) noexcept = default;

bool SpanTracker::insert(const std::vector<Rational>& v)
{
  if (v.size() != impl_->ambient)
    throw std::invalid_argument("SpanTracker::insert: dimension mismatch");
  return impl_->insert(v);
}

bool SpanTracker::contains(const std::vector<Rational>& v) const
{
  if (v.size() != impl_->ambient)
    throw std::invalid_argument("SpanTracker::contains: dimension mismatch");
  return impl_->contains(v);
}

std::size_t SpanTracker::dim() const { return impl_->dim(); }
std::size_t SpanTracker::ambient_dim() const { return impl_->ambient; }
VectorSpaceBasis SpanTracker::basis() const { return impl_->basis(); }

VectorSpaceBasis make_basis(std::size_t ambient_dim,
                            const std::vector<std::vector<Rational>>& vectors)
{
  SpanTracker tracker(ambient_dim);
  for (const auto& v : vectors) tracker.insert(v);
  return tracker.basis();
}

std::size_t rank(const std::vector<std::vector<Rational>>& vectors)
{
  if (vectors.empty()) return 0;
  SpanTracker tracker(vectors.front().size());
  for (const auto& v : vectors) tracker.insert(v);
  return tracker.dim();
}

bool in_span(const std::vector<Rational>& v, const VectorSpaceBasis& basis)
{
  SpanTracker tracker(basis.ambient_dim);
  for (const auto& row : basis.vectors) tracker.insert(row);
  return tracker.contains(v);
}

VectorSpaceBasis extend_span(const VectorSpaceBasis& basis, const std::vector<Rational>& v)
{
  SpanTracker tracker(basis.ambient_dim);
  for (const auto& row : basis.vectors) tracker.insert(row);
  tracker.insert(v);
  return tracker.basis();
}

VectorSpaceBasis kernel_of_rows(const std::vector<std::vector<Rational>>& rows,
                                std::size_t ncols)
{
  SpanTracker tracker(ncols);
  for (const auto& r : rows) {
    if (r.size() != ncols) throw std::invalid_argument("kernel_of_rows: ragged row");
    tracker.insert(r);
  }
  const VectorSpaceBasis rref = tracker.basis();

  std::vector<std::size_t> pivot_of_col(ncols, std::size_t(-1));
  std::vector<std::size_t> pivots;
  pivots.reserve(rref.dim());
  for (std::size_t t = 0; t < rref.dim(); ++t) {
    std::size_t p = 0;
    while (rref.vectors[t][p] == 0) ++p;
    pivot_of_col[p] = t;
    pivots.push_back(p);
  }

  std::vector<std::vector<Rational>> null_vectors;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (pivot_of_col[f] != std::size_t(-1)) continue;
    std::vector<Rational> x(ncols, Rational(0));
    x[f] = 1;
    for (std::size_t t = 0; t < rref.dim(); ++t) x[pivots[t]] = -rref.vectors[t][f];
    null_vectors.push_back(std::move(x));
  }
  return make_basis(ncols, null_vectors);
}

VectorSpaceBasis solve_commutant(const std::vector<Mat>& maps, std::size_t n)
{
  for (const Mat& m : maps)
    if (m.rows() != n || m.cols() != n)
      throw std::invalid_argument("solve_commutant: maps must be n x n");

  // Start with the full space of n x n matrices, then intersect with the
  // commutant of each map in turn. The first intersection is computed on raw
  // coordinates; later ones on coordinates relative to the current basis,
  // which shrinks the systems as the commutant narrows.
  VectorSpaceBasis current;
  current.ambient_dim = n * n;
  bool unrestricted = true;

  for (const Mat& m : maps) {
    if (!unrestricted && current.dim() == 0) break;
    if (unrestricted) {
      std::vector<std::vector<Rational>> rows;
      rows.reserve(n * n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          std::vector<Rational> row(n * n, Rational(0));
          for (std::size_t c = 0; c < n; ++c) {
            row[a * n + c] += m.at(c, b);
            row[c * n + b] -= m.at(a, c);
          }
          rows.push_back(std::move(row));
        }
      current = kernel_of_rows(rows, n * n);
      unrestricted = false;
      continue;
    }

    const std::size_t k = current.dim();
    std::vector<std::vector<Rational>> images(k);
    for (std::size_t j = 0; j < k; ++j) {
      const Mat t = Mat::from_flat(n, n, current.vectors[j]);
      images[j] = bracket(t, m).flatten();
    }
    std::vector<std::vector<Rational>> rows;
    rows.reserve(n * n);
    for (std::size_t coord = 0; coord < n * n; ++coord) {
      std::vector<Rational> row(k);
      bool nonzero = false;
      for (std::size_t j = 0; j < k; ++j) {
        row[j] = images[j][coord];
        nonzero = nonzero || row[j] != 0;
      }
      if (nonzero) rows.push_back(std::move(row));
    }
    const VectorSpaceBasis ys = kernel_of_rows(rows, k);

    std::vector<std::vector<Rational>> next;
    next.reserve(ys.dim());
    for (const auto& y : ys.vectors) {
      std::vector<Rational> t(n * n, Rational(0));
      for (std::size_t j = 0; j < k; ++j) {
        if (y[j] == 0) continue;
        for (std::size_t c = 0; c < n * n; ++c) t[c] += y[j] * current.vectors[j][c];
      }
      next.push_back(std::move(t));
    }
    current = make_basis(n * n, next);
  }

  if (unrestricted) {
    std::vector<std::vector<Rational>> id;
    for (std::size_t i = 0; i < n * n; ++i) {
      std::vector<Rational> e(n * n, Rational(0));
      e[i] = 1;
      id.push_back(std::move(e));
    }
    current = make_basis(n * n, id);
  }
  return current;
}

std::optional<std::vector<Rational>> solve_coordinates(
    const std::vector<Rational>& v, const std::vector<std::vector<Rational>>& vectors)
{
  const std::size_t k = vectors.size();
  const std::size_t ambient = v.size();
  if (k == 0) {
    for (const Rational& x : v)
      if (x != 0) return std::nullopt;
    return std::vector<Rational>{};
  }
  for (const auto& w : vectors)
    if (w.size() != ambient)
      throw std::invalid_argument("solve_coordinates: dimension mismatch");

  // Dense rational Gauss-Jordan on the augmented system [vectors^T | v].
  std::vector<std::vector<Rational>> a(ambient, std::vector<Rational>(k + 1, Rational(0)));
  for (std::size_t r = 0; r < ambient; ++r) {
    for (std::size_t j = 0; j < k; ++j) a[r][j] = vectors[j][r];
    a[r][k] = v[r];
  }

  std::vector<std::size_t> pivot_row(k);
  std::size_t used = 0;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t sel = used;
    while (sel < ambient && a[sel][col] == 0) ++sel;
    if (sel == ambient)
      throw std::invalid_argument("solve_coordinates: dependent vector list");
    std::swap(a[sel], a[used]);
    const Rational inv = Rational(1) / a[used][col];
    for (std::size_t j = col; j <= k; ++j) a[used][j] *= inv;
    for (std::size_t r = 0; r < ambient; ++r) {
      if (r == used || a[r][col] == 0) continue;
      const Rational factor = a[r][col];
      for (std::size_t j = col; j <= k; ++j) a[r][j] -= factor * a[used][j];
    }
    pivot_row[col] = used;
    ++used;
  }
  for (std::size_t r = used; r < ambient; ++r)
    if (a[r][k] != 0) return std::nullopt;

  std::vector<Rational> x(k);
  for (std::size_t col = 0; col < k; ++col) x[col] = a[pivot_row[col]][k];
  return x;
}

} // namespace sopq
