#include "sopq/basis_index.hpp"

#include <stdexcept>
#include <string>

namespace sopq {
namespace {

void check_block_range(const Signature& sig, Block block, int i, int j)
{
  const auto bad = [&](int v, int hi) { return v < 1 || v > hi; };
  bool out = false;
  switch (block) {
    case Block::A: out = bad(i, sig.p) || bad(j, sig.p); break;
    case Block::B: out = bad(i, sig.p) || bad(j, sig.q); break;
    case Block::C: out = bad(i, sig.q) || bad(j, sig.p); break;
    case Block::D: out = bad(i, sig.q) || bad(j, sig.q); break;
  }
  if (out)
    throw std::invalid_argument("block index (" + std::to_string(i) + ", " +
                                std::to_string(j) + ") out of range for signature (" +
                                std::to_string(sig.p) + ", " + std::to_string(sig.q) + ")");
}

} // namespace

Signature make_signature(int p, int q)
{
  if (p < 0 || q < 0)
    throw std::invalid_argument("signature entries must be non-negative");
  if (p + q < 2)
    throw std::invalid_argument("signature requires p + q >= 2");
  Signature sig;
  sig.swapped = p < q;
  sig.p = sig.swapped ? q : p;
  sig.q = sig.swapped ? p : q;
  return sig;
}

std::pair<int, int> block_position(const Signature& sig, const BlockIndex& idx)
{
  check_block_range(sig, idx.block, idx.i, idx.j);
  const int p = sig.p;
  switch (idx.block) {
    case Block::A: return {p + 1 - idx.i, p + 1 - idx.j};
    case Block::B: return {p + 1 - idx.i, p + idx.j};
    case Block::C: return {p + idx.i, p + 1 - idx.j};
    case Block::D: return {p + idx.i, p + idx.j};
  }
  throw std::logic_error("unreachable");
}

Mat block_unit(const Signature& sig, Block block, int i, int j)
{
  const auto [r, c] = block_position(sig, BlockIndex{block, i, j});
  return Mat::unit(sig.d(), r - 1, c - 1);
}

Rational block_entry(const Signature& sig, const Mat& x, Block block, int i, int j)
{
  const auto [r, c] = block_position(sig, BlockIndex{block, i, j});
  return x.at(r - 1, c - 1);
}

BlockParts decompose_blocks(const Signature& sig, const Mat& x)
{
  if (static_cast<int>(x.rows()) != sig.d() || static_cast<int>(x.cols()) != sig.d())
    throw std::invalid_argument("decompose_blocks: matrix size does not match signature");
  BlockParts parts{Mat::zero(sig.p, sig.p), Mat::zero(sig.p, sig.q),
                   Mat::zero(sig.q, sig.p), Mat::zero(sig.q, sig.q)};
  for (int i = 1; i <= sig.p; ++i)
    for (int j = 1; j <= sig.p; ++j)
      parts.a.at(i - 1, j - 1) = block_entry(sig, x, Block::A, i, j);
  for (int i = 1; i <= sig.p; ++i)
    for (int j = 1; j <= sig.q; ++j)
      parts.b.at(i - 1, j - 1) = block_entry(sig, x, Block::B, i, j);
  for (int i = 1; i <= sig.q; ++i)
    for (int j = 1; j <= sig.p; ++j)
      parts.c.at(i - 1, j - 1) = block_entry(sig, x, Block::C, i, j);
  for (int i = 1; i <= sig.q; ++i)
    for (int j = 1; j <= sig.q; ++j)
      parts.d.at(i - 1, j - 1) = block_entry(sig, x, Block::D, i, j);
  return parts;
}

Mat reassemble_blocks(const Signature& sig, const BlockParts& parts)
{
  if (static_cast<int>(parts.a.rows()) != sig.p || static_cast<int>(parts.a.cols()) != sig.p ||
      static_cast<int>(parts.b.rows()) != sig.p || static_cast<int>(parts.b.cols()) != sig.q ||
      static_cast<int>(parts.c.rows()) != sig.q || static_cast<int>(parts.c.cols()) != sig.p ||
      static_cast<int>(parts.d.rows()) != sig.q || static_cast<int>(parts.d.cols()) != sig.q)
    throw std::invalid_argument("reassemble_blocks: block sizes do not match signature");
  Mat x = Mat::zero(sig.d(), sig.d());
  const auto put = [&](Block block, const Mat& part) {
    for (std::size_t i = 1; i <= part.rows(); ++i)
      for (std::size_t j = 1; j <= part.cols(); ++j) {
        const auto [r, c] = block_position(
            sig, BlockIndex{block, static_cast<int>(i), static_cast<int>(j)});
        x.at(r - 1, c - 1) = part.at(i - 1, j - 1);
      }
  };
  put(Block::A, parts.a);
  put(Block::B, parts.b);
  put(Block::C, parts.c);
  put(Block::D, parts.d);
  return x;
}

Mat elementary(int d, int r, int c)
{
  if (r < 1 || r > d || c < 1 || c > d)
    throw std::invalid_argument("elementary: index out of range");
  return Mat::unit(d, r - 1, c - 1);
}

std::vector<Mat> sl_basis(int d)
{
  if (d < 1) throw std::invalid_argument("sl_basis: d must be positive");
  std::vector<Mat> basis;
  basis.reserve(static_cast<std::size_t>(d) * d - 1);
  for (int r = 1; r <= d; ++r)
    for (int c = 1; c <= d; ++c)
      if (r != c) basis.push_back(elementary(d, r, c));
  for (int t = 1; t < d; ++t)
    basis.push_back(elementary(d, t, t) - elementary(d, t + 1, t + 1));
  return basis;
}

} // namespace sopq
