#pragma once

#include "sopq/roots.hpp"
#include "sopq/weights.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace sopq {

/// One growth step of an invariant-closure run: bracketing so-basis element
/// number `generator` (1-based, standard so-basis order) against span vector
/// number `source` (1-based, discovery order; the seed is vector 1) enlarged
/// the span to dimension `dim_after`.
struct ClosureStep {
  std::size_t generator = 0;
  std::size_t source = 0;
  std::size_t dim_after = 0;

  bool operator==(const ClosureStep&) const = default;
};

/// Trace of the smallest ad(so(p,q))-invariant subspace containing a seed.
struct ClosureTrace {
  Signature sig;
  Mat seed;
  std::vector<ClosureStep> steps;
  std::size_t final_dim = 0;
  std::size_t expected_dim = 0; // dim s

  bool complete() const { return final_dim == expected_dim; }
};

/// Computes the ad-invariant closure of span{seed} inside s: repeatedly
/// brackets so-basis elements (fixed order) against span vectors
/// (breadth-first, discovery order) until stable. Deterministic.
/// Throws std::invalid_argument when the seed is zero or not a member of s.
ClosureTrace invariant_closure(const Signature& sig, const Mat& seed);

/// One verified transition of the weight ladder: bracketing root vector
/// number `root_index` of the root space of `root` against weight vector
/// number `source_index` of the weight space of `source` yields exactly
/// `scalar` times weight vector number `target_index` of the weight space of
/// `target` (all indices 1-based). `verified` records that the bracket is
/// nonzero and lies in the claimed target space; when the bracket is a
/// combination rather than a multiple of the single claimed target vector,
/// `note` says so and `target_index` is 0.
struct LadderEdge {
  LinearForm source;
  std::size_t source_index = 0;
  LinearForm root;
  std::size_t root_index = 0;
  LinearForm target;
  std::size_t target_index = 0;
  Rational scalar = Rational(0);
  bool verified = false;
  std::string note;

  bool operator==(const LadderEdge&) const = default;
};

/// Certificate that the nonzero weights of s are linked by explicit nonzero
/// adjoint transitions and that every zero-weight generator is reached.
/// `applicable` is false for q = 0 (trivial torus: no ladder; irreducibility
/// evidence then rests on invariant_closure and the commutant).
struct LadderCertificate {
  Signature sig;
  bool applicable = false;
  std::vector<LadderEdge> edges;
  bool connected = false;
  bool zero_generators_reached = false;
  std::vector<std::string> failures;

  bool operator==(const LadderCertificate&) const = default;

  bool passed() const
  {
    if (!applicable) return failures.empty();
    if (!connected || !zero_generators_reached || !failures.empty()) return false;
    for (const LadderEdge& e : edges)
      if (!e.verified) return false;
    return true;
  }
};

LadderCertificate ladder_certificate(const Signature& sig);

/// Commutant of ad(so(p,q)) acting on s, in coordinates. Scalar commutant
/// plus complete reducibility (available exactly when so(p,q) is semisimple,
/// i.e. d >= 3) certifies irreducibility; the hypothesis in force is spelled
/// out in `hypothesis`.
struct CommutantCertificate {
  Signature sig;
  std::size_t commutant_dim = 0;
  bool semisimple = false;
  bool irreducible = false;
  std::string hypothesis;
  std::vector<std::string> failures;

  bool operator==(const CommutantCertificate&) const = default;
};

CommutantCertificate commutant_certificate(const Signature& sig);

/// Full two-piece report: sl_d = so(p,q) ⊕ s with both summands
/// ad(so(p,q))-invariant, plus the irreducibility evidence for s and the
/// corresponding diagnostics for the summand so(p,q) itself.
///
/// `s_status` is one of:
///   "irreducible"  — scalar commutant under the semisimplicity hypothesis;
///   "reducible"    — an explicit proper nonzero invariant subspace of s was
///                    found (its dimension is recorded in a note);
///   "undetermined" — neither certificate applies (degenerate d = 2 cases).
///
/// `so_decomposable` is true only when an explicit proper nonzero ideal of
/// so(p,q) was found (e.g. signatures (2,2) and (4,0)); the witness dimension
/// is recorded in a note.
struct TwoPieceReport {
  Signature sig;
  int dim_sl = 0;
  int dim_so_part = 0;
  int dim_s_part = 0;
  bool direct_sum = false;
  bool so_invariant = false;
  bool s_invariant = false;
  bool closure_all_seeds = false;
  LadderCertificate ladder;
  CommutantCertificate commutant;
  std::string s_status;
  std::size_t so_commutant_dim = 0;
  bool so_closure_all_seeds = false;
  bool so_decomposable = false;
  std::vector<std::string> notes;
  std::vector<std::string> failures;

  bool operator==(const TwoPieceReport&) const = default;

  bool decomposition_ok() const { return direct_sum && so_invariant && s_invariant; }
  bool passed() const { return decomposition_ok() && failures.empty(); }
};

TwoPieceReport two_piece_decomposition(const Signature& sig);

/// True iff the Lie subalgebra generated by the so(p,q) standard basis
/// together with X is all of sl_d. Throws std::invalid_argument when X is
/// not traceless or already lies in so(p,q) (in particular when X = 0).
bool generation_check(const Signature& sig, const Mat& x);

/// Searches for a proper nonzero subspace of span(space_basis) invariant
/// under ad(X) for every X in action_basis. The search diagonalizes
/// non-scalar commutant elements over their rational eigenvalues; a returned
/// witness is exactly verified, but absence of a witness is not a proof of
/// irreducibility. Used to substantiate "reducible"/"decomposable" verdicts.
std::optional<std::vector<Mat>> invariant_subspace_witness(
    const std::vector<Mat>& action_basis, const std::vector<Mat>& space_basis);

} // namespace sopq
