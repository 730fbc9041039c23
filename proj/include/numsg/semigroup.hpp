#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "numsg/bitset.hpp"

namespace numsg {

  // Strictly increasing list of positive integers l_1 < ... < l_g.
  class GapList {
   public:
    GapList() = default;
    explicit GapList(std::vector<std::int64_t> gaps);
    GapList(std::initializer_list<std::int64_t> gaps)
        : GapList(std::vector<std::int64_t>(gaps)) {}

    // {lo, lo + 1, ..., hi}, empty when hi < lo.
    static GapList interval(std::int64_t lo, std::int64_t hi);

    std::vector<std::int64_t> const& values() const noexcept {
      return _gaps;
    }
    std::size_t size() const noexcept {
      return _gaps.size();
    }
    bool empty() const noexcept {
      return _gaps.empty();
    }
    auto begin() const noexcept {
      return _gaps.begin();
    }
    auto end() const noexcept {
      return _gaps.end();
    }
    std::int64_t operator[](std::size_t i) const noexcept {
      return _gaps[i];
    }

    bool operator==(GapList const&) const = default;

   private:
    std::vector<std::int64_t> _gaps;
  };

  struct Invariants {
    std::int64_t multiplicity;
    std::int64_t genus;
    std::int64_t frobenius;  // -1 for the full monoid
    std::int64_t conductor;
    std::int64_t type;       // 0 for the full monoid

    bool operator==(Invariants const&) const = default;
  };

  // A numerical semigroup, stored as its membership table on [0, conductor).
  // Everything at or above the conductor is a member. Values are immutable;
  // all derived data (gaps, minimal generators, pseudo-Frobenius numbers) is
  // computed at construction so instances can be shared across threads.
  class Semigroup {
   public:
    // The full monoid N, with no gaps.
    Semigroup();

    // Raises InfiniteComplement when gcd(gens) != 1 and InvalidArgument when
    // gens is empty or has a non-positive entry. Duplicates are ignored.
    static Semigroup from_generators(std::span<std::int64_t const> gens);
    static Semigroup from_generators(std::initializer_list<std::int64_t> gens) {
      return from_generators(std::span<std::int64_t const>(gens.begin(), gens.size()));
    }

    // Raises NotClosed when the complement of gaps is not additively closed.
    static Semigroup from_gaps(GapList const& gaps);

    bool contains(std::int64_t x) const noexcept {
      if (x < 0) {
        return false;
      }
      return x >= _conductor || _members.test(static_cast<std::size_t>(x));
    }

    bool is_naturals() const noexcept {
      return _conductor == 0;
    }

    std::int64_t multiplicity() const noexcept {
      return _multiplicity;
    }
    std::int64_t genus() const noexcept {
      return static_cast<std::int64_t>(_gaps.size());
    }
    std::int64_t frobenius() const noexcept {
      return _conductor - 1;
    }
    std::int64_t conductor() const noexcept {
      return _conductor;
    }
    // Number of pseudo-Frobenius numbers; 0 for N.
    std::int64_t type() const noexcept {
      return static_cast<std::int64_t>(_pseudo_frobenius.size());
    }

    Invariants invariants() const noexcept;

    GapList const& gaps() const noexcept {
      return _gaps;
    }

    // Raises EmptySemigroupComplement for N.
    std::vector<std::int64_t> const& pseudo_frobenius() const;

    std::vector<std::int64_t> const& minimal_generators() const noexcept {
      return _generators;
    }

    // alpha_i = l_{i+1} - i - 1 over the ordered gaps.
    std::vector<std::int64_t> schubert_index() const;

    // Membership bits on [0, conductor).
    Bitset const& members() const noexcept {
      return _members;
    }

    bool operator==(Semigroup const& other) const noexcept {
      return _conductor == other._conductor && _members == other._members;
    }

   private:
    Semigroup(Bitset members, std::int64_t conductor);
    void compute_derived();

    Bitset                    _members;
    std::int64_t              _conductor = 0;
    std::int64_t              _multiplicity = 1;
    GapList                   _gaps;
    std::vector<std::int64_t> _generators;
    std::vector<std::int64_t> _pseudo_frobenius;

    friend Semigroup intersect(Semigroup const&, Semigroup const&);
  };

  // The gap set of the result is the union of the two gap sets.
  Semigroup intersect(Semigroup const& a, Semigroup const& b);

  // Free-function spellings of the accessors above.
  inline Invariants invariants(Semigroup const& s) {
    return s.invariants();
  }
  inline std::vector<std::int64_t> const& pseudo_frobenius(Semigroup const& s) {
    return s.pseudo_frobenius();
  }
  inline std::vector<std::int64_t> const& minimal_generators(Semigroup const& s) {
    return s.minimal_generators();
  }
  inline std::vector<std::int64_t> schubert_index(Semigroup const& s) {
    return s.schubert_index();
  }

}  // namespace numsg
