#include "numsg/decompose.hpp"

#include <string>

#include "numsg/error.hpp"
#include "numsg/pfseq.hpp"

namespace numsg {

  StairBlock stair_block(std::int64_t f) {
    if (f < 1) {
      raise(ErrorKind::InvalidArgument,
            "stair block needs a positive Frobenius number, got " + std::to_string(f));
    }
    bool const         odd = f % 2 == 1;
    std::int64_t const gi  = odd ? (f + 1) / 2 : (f + 2) / 2;
    auto               gaps = GapList::interval(1, gi - 1).values();
    if (gaps.empty() || gaps.back() < f) {
      gaps.push_back(f);
    }
    return StairBlock{gi,
                      odd ? StairParity::odd : StairParity::even,
                      Semigroup::from_gaps(GapList(std::move(gaps)))};
  }

  std::vector<StairBlock> decompose_pf(Semigroup const& s) {
    if (s.is_naturals() || !is_pf_semigroup(s)) {
      raise(ErrorKind::NotPFSemigroup, "decomposition needs a PF-semigroup");
    }
    std::vector<StairBlock> blocks;
    for (std::int64_t f : s.pseudo_frobenius()) {
      blocks.push_back(stair_block(f));
    }
    return blocks;
  }

  bool is_irreducible(Semigroup const& s) noexcept {
    std::int64_t const fb = s.frobenius();
    std::int64_t const g  = s.genus();
    if (fb % 2 != 0) {
      return 2 * g == fb + 1;
    }
    return 2 * g == fb + 2;
  }

}  // namespace numsg
