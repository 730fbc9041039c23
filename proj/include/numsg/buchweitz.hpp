#pragma once

#include <cstdint>
#include <vector>

#include "numsg/bitset.hpp"
#include "numsg/semigroup.hpp"

namespace numsg {

  struct SumsetReport {
    int           n;
    std::int64_t  cardinality;  // #G_n(H)
    std::int64_t  threshold;    // (2n - 1)(g - 1)
    bool          is_buchweitz; // cardinality > threshold
  };

  // Bitmap of the n-fold sumset of the gaps, indexed 0 .. n * Fb.
  Bitset gap_sumset_bits(Semigroup const& s, int n);

  // G_n(H) sorted and duplicate-free. Raises EmptySemigroupComplement for N
  // and InvalidArgument for n < 1.
  std::vector<std::int64_t> gap_sumset(Semigroup const& s, int n);

  // Raises GenusTooSmall when g <= 1: the raw inequality holds at g = 1 but
  // the criterion is only meaningful from genus 2 on.
  SumsetReport buchweitz_test(Semigroup const& s, int n);

}  // namespace numsg
