#pragma once

#include "sopq/matrix.hpp"
#include "sopq/rational.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace sopq {

/// Basis of a subspace of Q^ambient_dim, kept in canonical reduced echelon
/// form: rows sorted by pivot column, each leading entry 1, zeros above and
/// below every pivot. Two bases spanning the same subspace compare equal.
struct VectorSpaceBasis {
  std::size_t ambient_dim = 0;
  std::vector<std::vector<Rational>> vectors;

  std::size_t dim() const { return vectors.size(); }

  bool operator==(const VectorSpaceBasis& o) const
  {
    return ambient_dim == o.ambient_dim && vectors == o.vectors;
  }
};

/// Canonicalizes an arbitrary spanning list into a VectorSpaceBasis.
VectorSpaceBasis make_basis(std::size_t ambient_dim,
                            const std::vector<std::vector<Rational>>& vectors);

/// Dimension of the span, by exact fraction-free elimination.
std::size_t rank(const std::vector<std::vector<Rational>>& vectors);

/// Exact span-membership test.
bool in_span(const std::vector<Rational>& v, const VectorSpaceBasis& basis);

/// Canonical basis of span(basis ∪ {v}); grows by at most one vector.
VectorSpaceBasis extend_span(const VectorSpaceBasis& basis, const std::vector<Rational>& v);

/// Nullspace of the homogeneous system rows·x = 0, as a canonical basis.
VectorSpaceBasis kernel_of_rows(const std::vector<std::vector<Rational>>& rows,
                                std::size_t ncols);

/// Basis of {T : T·M = M·T for every M in maps}, i.e. the kernel of the
/// stacked Sylvester-type system in n² unknowns (row-major flattening).
VectorSpaceBasis solve_commutant(const std::vector<Mat>& maps, std::size_t n);

/// Coefficients x with Σ x_i·vectors_i = v, when v lies in the span of the
/// (independent) list; nullopt otherwise.
std::optional<std::vector<Rational>> solve_coordinates(
    const std::vector<Rational>& v, const std::vector<std::vector<Rational>>& vectors);

/// Incremental span tracker used by the closure computations: keeps an
/// integer echelon form internally and avoids recanonicalizing on every
/// insertion. Falls back from machine integers to big integers on overflow.
class SpanTracker {
public:
  explicit SpanTracker(std::size_t ambient_dim);
  ~SpanTracker();
  SpanTracker(SpanTracker&&) noexcept;
  SpanTracker& operator=(SpanTracker&&) noexcept;

  /// Adds v to the span; returns true if the dimension grew.
  bool insert(const std::vector<Rational>& v);
  bool contains(const std::vector<Rational>& v) const;
  std::size_t dim() const;
  std::size_t ambient_dim() const;

  /// Canonical reduced-echelon snapshot of the current span.
  VectorSpaceBasis basis() const;

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

} // namespace sopq
