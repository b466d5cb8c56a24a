#pragma once

#include "sopq/basis_index.hpp"

#include <string>

namespace sopq {

/// Rendering mode for the illustrative matrix tables: `symbolic` shows each
/// space as one matrix whose entries are linear in the parameters x (or
/// x_1..x_k for multiplicity k); `numeric` instantiates every parameter at 1.
enum class AppendixMode { symbolic, numeric };

/// Renders the root-space table (the split part a, the centralizer part m,
/// then every nonzero restricted root) and the weight-space table (every
/// nonzero weight, then the zero-weight space s_0) in the bordered p|q block
/// layout. Deterministic output.
std::string emit_appendix_latex(const Signature& sig, AppendixMode mode);
std::string emit_appendix_markdown(const Signature& sig, AppendixMode mode);

} // namespace sopq
