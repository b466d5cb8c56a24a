#pragma once

#include "sopq/matrix.hpp"

#include <vector>

namespace sopq {

/// Signature (p, q) of the symmetric bilinear form diag(I_p, -I_q),
/// normalized so that p >= q; `swapped` records that the caller's order was
/// reversed (the two algebras are isomorphic via conjugation).
struct Signature {
  int p = 0;
  int q = 0;
  bool swapped = false;

  int d() const { return p + q; }
  int rank() const { return q; } // dimension of the maximal split torus used here

  bool operator==(const Signature& o) const { return p == o.p && q == o.q; }
};

/// Validates and normalizes a raw (p, q) pair. Throws std::invalid_argument
/// for negative entries or p + q < 2.
Signature make_signature(int p, int q);

/// The four letter blocks of a d x d matrix under the (p, q) partition.
/// Block coordinates are 1-based and *reversed* inside the top-left part:
///   A(i,j) -> E(p+1-i, p+1-j)   (i, j in 1..p)
///   B(i,j) -> E(p+1-i, p+j)     (i in 1..p, j in 1..q)
///   C(i,j) -> E(p+i,   p+1-j)   (i in 1..q, j in 1..p)
///   D(i,j) -> E(p+i,   p+j)     (i, j in 1..q)
enum class Block { A, B, C, D };

struct BlockIndex {
  Block block;
  int i;
  int j;
};

/// Matrix position (row, col) of the unit matrix for a block index.
std::pair<int, int> block_position(const Signature& sig, const BlockIndex& idx);

/// The unit matrix carrying 1 at the block index and 0 elsewhere.
Mat block_unit(const Signature& sig, Block block, int i, int j);

/// Letter-block coefficient of X at a block index, i.e. the entry of X at
/// block_position.
Rational block_entry(const Signature& sig, const Mat& x, Block block, int i, int j);

/// Splits X into its four letter blocks, each returned in block coordinates
/// (blocks[A].at(i, j) == block_entry(sig, x, A, i, j), and so on).
struct BlockParts {
  Mat a; // p x p
  Mat b; // p x q
  Mat c; // q x p
  Mat d; // q x q
};

BlockParts decompose_blocks(const Signature& sig, const Mat& x);

/// Inverse of decompose_blocks.
Mat reassemble_blocks(const Signature& sig, const BlockParts& parts);

/// Elementary matrix E(r, c), 1-based, of size d x d.
Mat elementary(int d, int r, int c);

/// The standard basis of sl_d: off-diagonal units E(r, c), r != c, in
/// row-major order, followed by the diagonal differences
/// E(t, t) - E(t+1, t+1), t = 1..d-1. Size d^2 - 1.
std::vector<Mat> sl_basis(int d);

} // namespace sopq
