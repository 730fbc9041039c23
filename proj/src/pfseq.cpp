#include "numsg/pfseq.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "numsg/buchweitz.hpp"
#include "numsg/encoding.hpp"
#include "numsg/error.hpp"

namespace numsg {

  DiffSeq::DiffSeq(std::vector<std::int64_t> d) : _d(std::move(d)) {
    for (std::int64_t x : _d) {
      if (x < 1) {
        raise(ErrorKind::InvalidArgument,
              "sequence entries must be >= 1, got " + std::to_string(x));
      }
    }
  }

  std::int64_t DiffSeq::sum() const noexcept {
    return std::accumulate(_d.begin(), _d.end(), std::int64_t(0));
  }

  ASeq::ASeq(std::vector<std::int64_t> a) : _a(std::move(a)) {
    if (_a.empty() || _a.back() != 1) {
      raise(ErrorKind::InvalidArgument, "a-sequence must end in 1");
    }
    for (std::size_t i = 1; i < _a.size(); ++i) {
      if (_a[i] >= _a[i - 1]) {
        raise(ErrorKind::InvalidArgument, "a-sequence must be strictly decreasing");
      }
    }
  }

  ASeq d_to_a(DiffSeq const& d) {
    auto const&               dv = d.values();
    std::vector<std::int64_t> a(dv.size() + 1, 1);
    for (std::size_t i = dv.size(); i-- > 0;) {
      a[i] = a[i + 1] + dv[i];
    }
    return ASeq(std::move(a));
  }

  DiffSeq a_to_d(ASeq const& a) {
    auto const&               av = a.values();
    std::vector<std::int64_t> d;
    for (std::size_t i = 0; i + 1 < av.size(); ++i) {
      d.push_back(av[i] - av[i + 1]);
    }
    return DiffSeq(std::move(d));
  }

  DiffSeq reverse(DiffSeq const& d) {
    std::vector<std::int64_t> r(d.values().rbegin(), d.values().rend());
    return DiffSeq(std::move(r));
  }

  std::int64_t pair_sum_cardinality(ASeq const& a) {
    std::set<std::int64_t> sums;
    for (std::int64_t x : a.values()) {
      for (std::int64_t y : a.values()) {
        sums.insert(x + y);
      }
    }
    return static_cast<std::int64_t>(sums.size());
  }

  Semigroup build_pf(DiffSeq const& d, std::int64_t genus) {
    std::int64_t const t = d.type();
    if (genus < t) {
      raise(ErrorKind::MalformedGapSet,
            "genus " + std::to_string(genus) + " is smaller than the type " + std::to_string(t));
    }
    std::int64_t const m  = genus - t + 1;
    auto const         a  = d_to_a(d);
    std::int64_t const a1 = a.values().front();
    if (2 * m - a1 <= genus - t) {
      raise(ErrorKind::MalformedGapSet,
            "large gap " + std::to_string(2 * m - a1) + " collides with {1.."
                + std::to_string(genus - t) + "}");
    }
    std::vector<std::int64_t> gaps;
    gaps.reserve(static_cast<std::size_t>(genus));
    for (std::int64_t x = 1; x <= genus - t; ++x) {
      gaps.push_back(x);
    }
    for (std::int64_t ai : a.values()) {
      gaps.push_back(2 * m - ai);
    }
    try {
      return Semigroup::from_gaps(GapList(std::move(gaps)));
    } catch (SemigroupError const& e) {
      raise(ErrorKind::MalformedGapSet, e.what());
    }
  }

  PfCheck check_pf_semigroup(Semigroup const& s) {
    auto const&        pf = s.pseudo_frobenius();
    std::int64_t const g  = s.genus();
    std::int64_t const t  = s.type();
    std::int64_t const lo = g - t;
    std::string const  range = "{1.." + std::to_string(lo) + "}";

    for (std::int64_t x : s.gaps()) {
      if (x > lo && !std::binary_search(pf.begin(), pf.end(), x)) {
        return {false, "gap " + std::to_string(x) + " ∉ " + range + " ⊔ PF"};
      }
    }
    for (std::int64_t y = 1; y <= lo; ++y) {
      if (s.contains(y)) {
        return {false, std::to_string(y) + " ∈ " + range + " is not a gap"};
      }
    }
    if (pf.front() <= s.multiplicity()) {
      return {false,
              "min PF = " + std::to_string(pf.front())
                  + " ≤ m = " + std::to_string(s.multiplicity())};
    }
    return {true, {}};
  }

  SequenceVerdict corollary_bound(DiffSeq const& d) {
    if (d.type() < 2) {
      raise(ErrorKind::InvalidArgument, "the corollary bound needs type t >= 2");
    }
    SequenceVerdict v;
    v.t                      = d.type();
    v.condition2_cardinality = pair_sum_cardinality(d_to_a(d));
    v.condition2_threshold   = 3 * (v.t - 1);
    if (v.condition2_cardinality > v.condition2_threshold) {
      v.corollary_bound = 2 * d.sum() + v.t + 1;
    }
    return v;
  }

  bool verify_sequence(DiffSeq const& d, std::int64_t genus) {
    auto const s = build_pf(d, genus);
    return is_pf_semigroup(s) && buchweitz_test(s, 2).is_buchweitz;
  }

  SequenceVerdict check_sequence(DiffSeq const& d, std::int64_t lo, std::int64_t hi) {
    auto v = corollary_bound(d);
    for (std::int64_t g = lo; g <= hi; ++g) {
      bool ok = false;
      try {
        ok = verify_sequence(d, g);
      } catch (SemigroupError const& e) {
        if (e.kind() != ErrorKind::MalformedGapSet && e.kind() != ErrorKind::GenusTooSmall) {
          throw;
        }
      }
      v.verified_genera.emplace_back(g, ok);
    }
    return v;
  }

  std::int64_t formula_g2_cardinality(DiffSeq const& d, std::int64_t genus) {
    std::int64_t const m = genus - d.type() + 1;
    return 3 * m - 3 + pair_sum_cardinality(d_to_a(d));
  }

  BoundedSeq paste_unchecked(BoundedSeq const& a, BoundedSeq const& b, std::int64_t k) {
    std::vector<std::int64_t> out = b.seq.values();
    out.push_back(k);
    out.insert(out.end(), a.seq.values().begin(), a.seq.values().end());
    return {DiffSeq(std::move(out)), a.genus + b.genus + 2 * k - 1};
  }

  namespace {
    void require_corollary(BoundedSeq const& x, char const* label) {
      if (x.seq.type() < 2) {
        raise(ErrorKind::PreconditionUnverified,
              std::string(label) + " sequence is empty; pasting needs type >= 2");
      }
      auto const v = corollary_bound(x.seq);
      if (!v.corollary_bound) {
        raise(ErrorKind::PreconditionUnverified,
              std::string(label) + " sequence " + encode_sequence(x.seq)
                  + " fails the pair-sum condition ("
                  + std::to_string(v.condition2_cardinality)
                  + " <= " + std::to_string(v.condition2_threshold) + ")");
      }
      if (x.genus < *v.corollary_bound) {
        raise(ErrorKind::PreconditionUnverified,
              std::string(label) + " genus " + std::to_string(x.genus)
                  + " is below the corollary bound " + std::to_string(*v.corollary_bound));
      }
    }
  }  // namespace

  BoundedSeq paste(BoundedSeq const& a, BoundedSeq const& b, std::int64_t k) {
    if (k < 1) {
      raise(ErrorKind::InvalidArgument, "paste separator k must be >= 1");
    }
    if (b.seq.empty()) {
      raise(ErrorKind::PreconditionUnverified, "leading sequence is empty");
    }
    if (b.seq.values().back() <= k) {
      raise(ErrorKind::PasteConditionViolated,
            "last entry " + std::to_string(b.seq.values().back())
                + " of the leading sequence must exceed k = " + std::to_string(k));
    }
    require_corollary(b, "leading");
    require_corollary(a, "trailing");
    return paste_unchecked(a, b, k);
  }

  DiffSeq schubert_to_d(std::span<std::int64_t const> alpha) {
    auto const g = static_cast<std::int64_t>(alpha.size());
    if (g == 0) {
      raise(ErrorKind::NotPFShape, "empty Schubert index");
    }
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      if (alpha[i] < 0 || (i > 0 && alpha[i] < alpha[i - 1])) {
        raise(ErrorKind::NotPFShape, "Schubert index must be non-negative and non-decreasing");
      }
    }
    auto const zeros = static_cast<std::int64_t>(
        std::find_if(alpha.begin(), alpha.end(), [](std::int64_t x) { return x != 0; })
        - alpha.begin());
    if (zeros == g) {
      raise(ErrorKind::NotPFShape, "all-zero Schubert index (ordinary semigroup)");
    }
    std::int64_t const t = g - zeros;
    std::int64_t const m = g - t + 1;
    if (g + alpha.back() != 2 * m - 1) {
      raise(ErrorKind::NotPFShape,
            "largest gap " + std::to_string(g + alpha.back()) + " is not 2m - 1 = "
                + std::to_string(2 * m - 1));
    }
    std::vector<std::int64_t> d;
    for (auto i = static_cast<std::size_t>(zeros) + 1; i < alpha.size(); ++i) {
      d.push_back(alpha[i] - alpha[i - 1] + 1);
    }
    return DiffSeq(std::move(d));
  }

  ParsedSeq parse_sequence(std::string_view text) {
    text = strip_prefix(text, "seq:");
    ParsedSeq out;
    auto const at = text.find('@');
    if (at != std::string_view::npos) {
      auto g = parse_int_list(text.substr(at + 1));
      if (g.size() != 1) {
        raise(ErrorKind::ParseError, "expected a single genus after '@'");
      }
      out.genus = g.front();
      text      = text.substr(0, at);
    }
    out.seq = DiffSeq(parse_int_list(text));
    return out;
  }

  std::string encode_sequence(DiffSeq const& d) {
    return "seq:" + format_int_list(d.values());
  }

  std::string encode_sequence(BoundedSeq const& d) {
    return encode_sequence(d.seq) + "@" + std::to_string(d.genus);
  }

}  // namespace numsg
