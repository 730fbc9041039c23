#include "numsg/buchweitz.hpp"

#include <string>

#include "numsg/error.hpp"

namespace numsg {

  Bitset gap_sumset_bits(Semigroup const& s, int n) {
    if (s.is_naturals()) {
      raise(ErrorKind::EmptySemigroupComplement, "the full monoid has no gaps to sum");
    }
    if (n < 1) {
      raise(ErrorKind::InvalidArgument,
            "sumset order must be at least 1, got " + std::to_string(n));
    }
    auto const  fb   = static_cast<std::size_t>(s.frobenius());
    std::size_t size = fb * static_cast<std::size_t>(n) + 1;

    Bitset gaps(size);
    for (std::int64_t x : s.gaps()) {
      gaps.set(static_cast<std::size_t>(x));
    }
    // G_k = G_{k-1} + G: OR a copy of G_{k-1} shifted by each gap.
    Bitset acc = gaps;
    for (int k = 2; k <= n; ++k) {
      Bitset next(size);
      for (std::int64_t x : s.gaps()) {
        next.or_shifted(acc, static_cast<std::size_t>(x));
      }
      acc = std::move(next);
    }
    return acc;
  }

  std::vector<std::int64_t> gap_sumset(Semigroup const& s, int n) {
    std::vector<std::int64_t> out;
    gap_sumset_bits(s, n).for_each_set(
        [&](std::size_t i) { out.push_back(static_cast<std::int64_t>(i)); });
    return out;
  }

  SumsetReport buchweitz_test(Semigroup const& s, int n) {
    if (s.is_naturals()) {
      raise(ErrorKind::EmptySemigroupComplement, "the full monoid has no gaps to sum");
    }
    if (n < 2) {
      raise(ErrorKind::InvalidArgument,
            "Buchweitz test needs n >= 2, got " + std::to_string(n));
    }
    if (s.genus() <= 1) {
      raise(ErrorKind::GenusTooSmall,
            "Buchweitz test needs genus >= 2, got " + std::to_string(s.genus()));
    }
    auto const card      = static_cast<std::int64_t>(gap_sumset_bits(s, n).count());
    auto const threshold = (2 * static_cast<std::int64_t>(n) - 1) * (s.genus() - 1);
    return SumsetReport{n, card, threshold, card > threshold};
  }

}  // namespace numsg
