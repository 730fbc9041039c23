#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "numsg/semigroup.hpp"

namespace numsg {

  // Difference sequence d = (d_1, ..., d_{t-1}), all entries >= 1. It fixes
  // the top of the gap set of a PF-semigroup of type t = size() + 1:
  //   {1, ..., g - t} u {2m - 1 - (d_i + ... + d_{t-1})}_i u {2m - 1},
  // where m = g - t + 1.
  class DiffSeq {
   public:
    DiffSeq() = default;
    explicit DiffSeq(std::vector<std::int64_t> d);
    DiffSeq(std::initializer_list<std::int64_t> d)
        : DiffSeq(std::vector<std::int64_t>(d)) {}

    std::vector<std::int64_t> const& values() const noexcept {
      return _d;
    }
    std::size_t size() const noexcept {
      return _d.size();
    }
    bool empty() const noexcept {
      return _d.empty();
    }
    std::int64_t type() const noexcept {
      return static_cast<std::int64_t>(_d.size()) + 1;
    }
    std::int64_t sum() const noexcept;

    bool operator==(DiffSeq const&) const = default;

   private:
    std::vector<std::int64_t> _d;
  };

  // a_1 > a_2 > ... > a_t = 1.
  class ASeq {
   public:
    explicit ASeq(std::vector<std::int64_t> a);
    ASeq(std::initializer_list<std::int64_t> a) : ASeq(std::vector<std::int64_t>(a)) {}

    std::vector<std::int64_t> const& values() const noexcept {
      return _a;
    }
    std::size_t size() const noexcept {
      return _a.size();
    }

    bool operator==(ASeq const&) const = default;

   private:
    std::vector<std::int64_t> _a;
  };

  // a_n = 1 + d_n + ... + d_{t-1}.
  ASeq    d_to_a(DiffSeq const& d);
  DiffSeq a_to_d(ASeq const& a);

  DiffSeq reverse(DiffSeq const& d);

  // #{a_i + a_j : 1 <= i, j <= t}.
  std::int64_t pair_sum_cardinality(ASeq const& a);

  // The semigroup with gaps {1..g-t} u {2m - a_1, ..., 2m - a_t}, m = g-t+1.
  // Raises MalformedGapSet when g < t, when 2m - a_1 <= g - t, or when the
  // prescribed set is not the complement of a semigroup.
  Semigroup build_pf(DiffSeq const& d, std::int64_t genus);

  struct PfCheck {
    bool        is_pf;
    std::string reason;  // empty when is_pf
  };

  // Gaps equal {1..g-t} disjoint-union PF(H), and min PF(H) > m(H). The
  // reason names the first clause that fails. Raises EmptySemigroupComplement
  // for N.
  PfCheck check_pf_semigroup(Semigroup const& s);

  inline bool is_pf_semigroup(Semigroup const& s) {
    return check_pf_semigroup(s).is_pf;
  }

  struct SequenceVerdict {
    std::int64_t                t;
    std::int64_t                condition2_cardinality;  // #{a_i + a_j}
    std::int64_t                condition2_threshold;    // 3(t - 1)
    std::optional<std::int64_t> corollary_bound;         // 2 sum(d) + t + 1
    std::vector<std::pair<std::int64_t, bool>> verified_genera;
  };

  // Sufficient genus bound for d to be a 2-Buchweitz PF family: present iff
  // #{a_i + a_j} > 3(t - 1). Raises InvalidArgument for t < 2.
  SequenceVerdict corollary_bound(DiffSeq const& d);

  // corollary_bound plus a direct verify_sequence at every genus in [lo, hi].
  // Genera where the gap set is malformed are recorded as false.
  SequenceVerdict check_sequence(DiffSeq const& d, std::int64_t lo, std::int64_t hi);

  // Direct check: build_pf(d, g) is a PF-semigroup and 2-Buchweitz.
  bool verify_sequence(DiffSeq const& d, std::int64_t genus);

  // 3m - 3 + #{a_i + a_j}: the size of G_2 for build_pf(d, g) whenever
  // g >= 2 a_1 + t - 1.
  std::int64_t formula_g2_cardinality(DiffSeq const& d, std::int64_t genus);

  struct BoundedSeq {
    DiffSeq      seq;
    std::int64_t genus;

    bool operator==(BoundedSeq const&) const = default;
  };

  // (dB, k, dA) valid from genus gA + gB + 2k - 1 on. Both inputs must meet
  // their own corollary bound (PreconditionUnverified otherwise) and the last
  // entry of dB must exceed k (PasteConditionViolated otherwise).
  BoundedSeq paste(BoundedSeq const& a, BoundedSeq const& b, std::int64_t k);

  // Same concatenation and bound with no precondition checks. The result
  // carries no guarantee.
  BoundedSeq paste_unchecked(BoundedSeq const& a, BoundedSeq const& b, std::int64_t k);

  // Inverts the Schubert index of a member of the family: leading zeros give
  // g - t, and d_j = alpha_{g-t+j} - alpha_{g-t+j-1} + 1. Raises NotPFShape
  // when alpha does not have that shape.
  DiffSeq schubert_to_d(std::span<std::int64_t const> alpha);

  // "seq:1,4,3" or "seq:1,4,3@22" (prefix optional on input).
  struct ParsedSeq {
    DiffSeq                     seq;
    std::optional<std::int64_t> genus;
  };
  ParsedSeq   parse_sequence(std::string_view text);
  std::string encode_sequence(DiffSeq const& d);
  std::string encode_sequence(BoundedSeq const& d);

}  // namespace numsg
