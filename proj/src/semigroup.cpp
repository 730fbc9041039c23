#include "numsg/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "numsg/error.hpp"

namespace numsg {

  GapList::GapList(std::vector<std::int64_t> gaps) : _gaps(std::move(gaps)) {
    for (std::size_t i = 0; i < _gaps.size(); ++i) {
      if (_gaps[i] <= 0) {
        raise(ErrorKind::InvalidGapList,
              "gap " + std::to_string(_gaps[i]) + " is not a positive integer");
      }
      if (i > 0 && _gaps[i] <= _gaps[i - 1]) {
        raise(ErrorKind::InvalidGapList,
              "gaps must be strictly increasing (" + std::to_string(_gaps[i - 1])
                  + " then " + std::to_string(_gaps[i]) + ")");
      }
    }
  }

  GapList GapList::interval(std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> v;
    for (std::int64_t x = lo; x <= hi; ++x) {
      v.push_back(x);
    }
    return GapList(std::move(v));
  }

  Semigroup::Semigroup() {
    compute_derived();
  }

  Semigroup::Semigroup(Bitset members, std::int64_t conductor)
      : _members(std::move(members)), _conductor(conductor) {
    compute_derived();
  }

  void Semigroup::compute_derived() {
    auto const c = _conductor;

    std::vector<std::int64_t> gaps;
    gaps.reserve(static_cast<std::size_t>(c));
    _multiplicity = std::max<std::int64_t>(c, 1);
    for (std::int64_t x = 1; x < c; ++x) {
      if (_members.test(static_cast<std::size_t>(x))) {
        _multiplicity = std::min(_multiplicity, x);
      } else {
        gaps.push_back(x);
      }
    }
    _gaps = GapList(std::move(gaps));

    // A member is a minimal generator unless it is j + r with j an earlier
    // minimal generator and r a nonzero member. Every minimal generator lies
    // below conductor + multiplicity.
    _generators.clear();
    if (c == 0) {
      _generators.push_back(1);
    }
    for (std::int64_t x = _multiplicity; x < c + _multiplicity; ++x) {
      if (!contains(x)) {
        continue;
      }
      bool decomposable = false;
      for (std::int64_t j : _generators) {
        if (x - j >= _multiplicity && contains(x - j)) {
          decomposable = true;
          break;
        }
      }
      if (!decomposable) {
        _generators.push_back(x);
      }
    }

    // x + h in H for all nonzero h iff it holds for every minimal generator.
    _pseudo_frobenius.clear();
    for (std::int64_t x : _gaps) {
      bool const pf = std::all_of(_generators.begin(),
                                  _generators.end(),
                                  [&](std::int64_t n) { return contains(x + n); });
      if (pf) {
        _pseudo_frobenius.push_back(x);
      }
    }
  }

  Semigroup Semigroup::from_generators(std::span<std::int64_t const> gens) {
    if (gens.empty()) {
      raise(ErrorKind::InvalidArgument, "generator list is empty");
    }
    std::vector<std::int64_t> sorted(gens.begin(), gens.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.front() <= 0) {
      raise(ErrorKind::InvalidArgument,
            "generator " + std::to_string(sorted.front()) + " is not positive");
    }
    std::int64_t g = 0;
    for (std::int64_t x : sorted) {
      g = std::gcd(g, x);
    }
    if (g != 1) {
      raise(ErrorKind::InfiniteComplement,
            "generators have gcd " + std::to_string(g) + ", complement is infinite");
    }

    std::int64_t const m = sorted.front();
    if (m == 1) {
      return Semigroup();
    }
    // Scan upwards until m consecutive members appear; from there on every
    // integer is a member.
    std::vector<bool> member{true};
    std::int64_t      last_gap = 0;
    for (std::int64_t x = 1; x - last_gap <= m; ++x) {
      bool in = false;
      for (std::int64_t n : sorted) {
        if (n > x) {
          break;
        }
        if (member[static_cast<std::size_t>(x - n)]) {
          in = true;
          break;
        }
      }
      member.push_back(in);
      if (!in) {
        last_gap = x;
      }
    }
    std::int64_t const conductor = last_gap + 1;
    Bitset             bits(static_cast<std::size_t>(conductor));
    for (std::int64_t x = 0; x < conductor; ++x) {
      if (member[static_cast<std::size_t>(x)]) {
        bits.set(static_cast<std::size_t>(x));
      }
    }
    return Semigroup(std::move(bits), conductor);
  }

  Semigroup Semigroup::from_gaps(GapList const& gaps) {
    if (gaps.empty()) {
      return Semigroup();
    }
    std::int64_t const conductor = gaps.values().back() + 1;
    Bitset             bits(static_cast<std::size_t>(conductor));
    for (std::int64_t x = 0; x < conductor; ++x) {
      bits.set(static_cast<std::size_t>(x));
    }
    for (std::int64_t x : gaps) {
      bits.reset(static_cast<std::size_t>(x));
    }
    // Closed iff no gap is a sum of two nonzero members.
    for (std::int64_t z : gaps) {
      for (std::int64_t x = 1; 2 * x <= z; ++x) {
        if (bits.test(static_cast<std::size_t>(x))
            && bits.test(static_cast<std::size_t>(z - x))) {
          raise(ErrorKind::NotClosed,
                "complement is not closed: " + std::to_string(x) + " + "
                    + std::to_string(z - x) + " = " + std::to_string(z)
                    + " is listed as a gap");
        }
      }
    }
    return Semigroup(std::move(bits), conductor);
  }

  Invariants Semigroup::invariants() const noexcept {
    return Invariants{multiplicity(), genus(), frobenius(), conductor(), type()};
  }

  std::vector<std::int64_t> const& Semigroup::pseudo_frobenius() const {
    if (is_naturals()) {
      raise(ErrorKind::EmptySemigroupComplement,
            "the full monoid has no gaps, so no pseudo-Frobenius numbers");
    }
    return _pseudo_frobenius;
  }

  std::vector<std::int64_t> Semigroup::schubert_index() const {
    std::vector<std::int64_t> alpha;
    alpha.reserve(_gaps.size());
    for (std::size_t i = 0; i < _gaps.size(); ++i) {
      alpha.push_back(_gaps[i] - static_cast<std::int64_t>(i) - 1);
    }
    return alpha;
  }

  Semigroup intersect(Semigroup const& a, Semigroup const& b) {
    std::int64_t const conductor = std::max(a.conductor(), b.conductor());
    Bitset             bits(static_cast<std::size_t>(conductor));
    for (std::int64_t x = 0; x < conductor; ++x) {
      if (a.contains(x) && b.contains(x)) {
        bits.set(static_cast<std::size_t>(x));
      }
    }
    return Semigroup(std::move(bits), conductor);
  }

}  // namespace numsg
