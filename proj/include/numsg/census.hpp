#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "numsg/semigroup.hpp"

namespace numsg {

  // Largest genus the fixed-width tree nodes can hold.
  inline constexpr int max_census_genus = 40;

  struct CensusRow {
    std::int64_t genus;
    std::uint64_t ns;     // numerical semigroups of this genus
    std::uint64_t b2s;    // 2-Buchweitz
    std::uint64_t b2pfs;  // 2-Buchweitz and PF

    bool operator==(CensusRow const&) const = default;
  };

  struct CensusOptions {
    // 0 picks default_thread_count().
    unsigned threads = 0;
    // Re-validate every n-th semigroup through Semigroup::from_gaps; 0 disables.
    std::uint64_t validate_every = 1000;
  };

  // NUMSG_THREADS when set to a positive integer, else the hardware count.
  unsigned default_thread_count();

  // Calls visitor once for every numerical semigroup of genus g, walking the
  // tree rooted at N whose children remove one minimal generator above the
  // Frobenius number. Single-threaded; returns the number of visits.
  std::uint64_t enumerate_genus(int g, std::function<void(Semigroup const&)> const& visitor);

  // Counts for every genus in [lo, hi] from a single traversal. The result
  // does not depend on the thread count. Raises InvalidArgument unless
  // 2 <= lo <= hi <= max_census_genus.
  std::vector<CensusRow> census_range(int lo, int hi, CensusOptions const& opts = {});

  CensusRow census_row(int g, CensusOptions const& opts = {});

  // Header "genus,ns,b2s,b2pfs", one newline-terminated row per genus.
  std::string census_csv(std::span<CensusRow const> rows);

}  // namespace numsg
