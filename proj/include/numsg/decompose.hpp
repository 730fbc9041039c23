#pragma once

#include <cstdint>
#include <vector>

#include "numsg/semigroup.hpp"

namespace numsg {

  enum class StairParity { odd, even };

  // Semigroup with gaps {1, ..., g_i - 1} plus one large gap f, where
  // f = 2 g_i - 1 (odd) or f = 2 g_i - 2 (even).
  struct StairBlock {
    std::int64_t gi;
    StairParity  parity;
    Semigroup    realized;
  };

  // The block whose largest gap is f. Raises InvalidArgument for f < 1.
  StairBlock stair_block(std::int64_t f);

  // One block per pseudo-Frobenius number, ordered by increasing f. Their
  // intersection is s. Raises NotPFSemigroup unless s is a PF-semigroup.
  std::vector<StairBlock> decompose_pf(Semigroup const& s);

  // Symmetric (g = (Fb + 1) / 2) or pseudo-symmetric (g = (Fb + 2) / 2).
  bool is_irreducible(Semigroup const& s) noexcept;

}  // namespace numsg
