#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "numsg/census.hpp"
#include "numsg/decompose.hpp"
#include "numsg/error.hpp"
#include "numsg/pfseq.hpp"
#include "oracles.hpp"

using namespace numsg;

namespace {

  oracle::Set as_set(Semigroup const& s) {
    return oracle::Set(s.gaps().begin(), s.gaps().end());
  }

  GapList stair(std::int64_t top, std::int64_t f) {
    auto v = GapList::interval(1, top).values();
    v.push_back(f);
    return GapList(v);
  }

}  // namespace

TEST_CASE("stair_block") {
  auto const six = stair_block(6);
  CHECK(six.parity == StairParity::even);
  CHECK(six.gi == 4);
  CHECK(six.realized.gaps() == GapList{1, 2, 3, 6});

  auto const nine = stair_block(9);
  CHECK(nine.parity == StairParity::odd);
  CHECK(nine.gi == 5);
  CHECK(nine.realized.gaps() == GapList{1, 2, 3, 4, 9});

  auto const one = stair_block(1);
  CHECK(one.parity == StairParity::odd);
  CHECK(one.gi == 1);
  CHECK(one.realized.gaps() == GapList{1});

  CHECK_THROWS_AS(stair_block(0), SemigroupError);

  for (std::int64_t f = 1; f <= 80; ++f) {
    auto const b = stair_block(f);
    CHECK(b.realized.frobenius() == f);
    CHECK(b.realized.genus() == b.gi);
    CHECK(is_irreducible(b.realized));
    // f = 1, 2 give {1} and {1,2}, whose multiplicity is gi + 1.
    if (f >= 3) {
      CHECK(b.realized.multiplicity() == b.gi);
    }
  }
}

TEST_CASE("decompose_pf examples") {
  auto const h      = Semigroup::from_generators({5, 7, 11, 13});
  auto const blocks = decompose_pf(h);
  REQUIRE(blocks.size() == 3);
  CHECK(blocks[0].realized.gaps() == GapList{1, 2, 3, 6});
  CHECK(blocks[1].realized.gaps() == GapList{1, 2, 3, 4, 8});
  CHECK(blocks[2].realized.gaps() == GapList{1, 2, 3, 4, 9});

  // Oliveira's first family at g = 20: gaps {1..16} u {27, 29, 32, 33}.
  auto const oli = Semigroup::from_gaps(
      GapList(std::vector<std::int64_t>{1, 2,  3,  4,  5,  6,  7,  8,  9,  10, 11,
                                        12, 13, 14, 15, 16, 27, 29, 32, 33}));
  auto const ob = decompose_pf(oli);
  REQUIRE(ob.size() == 4);
  CHECK(ob[0].realized.gaps() == stair(13, 27));
  CHECK(ob[1].realized.gaps() == stair(14, 29));
  CHECK(ob[2].realized.gaps() == stair(16, 32));
  CHECK(ob[3].realized.gaps() == stair(16, 33));

  for (std::int64_t g = 2; g <= 12; ++g) {
    auto const s  = Semigroup::from_gaps(stair(g - 1, 2 * g - 1));
    auto const sb = decompose_pf(s);
    REQUIRE(sb.size() == 1);
    CHECK(sb[0].realized == s);
  }

  auto kind = [](auto&& f) {
    try {
      f();
    } catch (SemigroupError const& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  CHECK(kind([] { decompose_pf(Semigroup::from_generators({5, 6, 14})); })
        == ErrorKind::NotPFSemigroup);
  CHECK(kind([] { decompose_pf(Semigroup()); }) == ErrorKind::NotPFSemigroup);
}

TEST_CASE("is_irreducible") {
  auto const h = Semigroup::from_generators({5, 7, 11, 13});
  CHECK_FALSE(oracle::is_irreducible(as_set(h)));
  CHECK_FALSE(is_irreducible(h));
  CHECK(is_irreducible(Semigroup::from_generators({2, 3})));
  CHECK(oracle::is_irreducible(oracle::Set{1}));
}

TEST_CASE("irreducibility criterion equals brute force for genus <= 9") {
  for (int g = 1; g <= 9; ++g) {
    enumerate_genus(g, [](Semigroup const& s) {
      CHECK(is_irreducible(s) == oracle::is_irreducible(as_set(s)));
    });
  }
}

TEST_CASE("reconstruction over PF-semigroups of genus <= 13") {
  std::size_t seen = 0;
  for (int g = 2; g <= 13; ++g) {
    enumerate_genus(g, [&](Semigroup const& s) {
      if (!is_pf_semigroup(s)) {
        return;
      }
      ++seen;
      auto const blocks = decompose_pf(s);
      CHECK(static_cast<std::int64_t>(blocks.size()) == s.type());
      Semigroup    acc;
      std::int64_t max_gi = 0;
      for (auto const& b : blocks) {
        CHECK(is_irreducible(b.realized));
        acc    = intersect(acc, b.realized);
        max_gi = std::max(max_gi, b.gi);
      }
      CHECK(acc == s);
      CHECK(max_gi - 1 == s.genus() - s.type());
    });
  }
  CHECK(seen > 0);
}

TEST_CASE("blocks whose largest Frobenius number is even never meet in a PF-semigroup") {
  std::mt19937_64                    rng(7);
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_int_distribution<int> pick(3, 40);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::int64_t> fs;
    for (int i = count(rng); i > 0; --i) {
      fs.push_back(pick(rng));
    }
    auto const top = *std::max_element(fs.begin(), fs.end());
    if (top % 2 != 0) {
      fs.push_back(top + 1);
    }
    Semigroup acc;
    for (auto f : fs) {
      acc = intersect(acc, stair_block(f).realized);
    }
    CHECK(acc.frobenius() % 2 == 0);
    CHECK_FALSE(is_pf_semigroup(acc));
  }
}
