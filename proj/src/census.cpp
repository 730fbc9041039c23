#include "numsg/census.hpp"

#include <array>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "numsg/error.hpp"
#include "numsg/pfseq.hpp"

namespace numsg {

  namespace {

    constexpr std::size_t node_capacity = 128;
    static_assert(3 * max_census_genus + 2 <= static_cast<int>(node_capacity));

    constexpr std::uint8_t gap          = 0;
    constexpr std::uint8_t generator    = 1;
    constexpr std::uint8_t decomposable = 2;

    // Membership table on [0, c + m): gap, minimal generator, or other
    // member. c is the conductor, except that N is stored with c = 1 so
    // that its generator 1 sits in the child range [c, c + m).
    struct Node {
      std::array<std::uint8_t, node_capacity> tab;
      int c;
      int m;
      int genus;

      static Node root() {
        Node n{};
        n.c      = 1;
        n.m      = 1;
        n.genus  = 0;
        n.tab[0] = decomposable;
        n.tab[1] = generator;
        return n;
      }

      // Removes the minimal generator x >= c.
      Node child(int x) const {
        Node out;
        out.c     = x + 1;
        out.m     = x == m ? m + 1 : m;
        out.genus = genus + 1;
        int const old_size = c + m;
        int const new_size = out.c + out.m;

        std::array<std::uint8_t, node_capacity> gens;
        int ngens = 0;
        for (int i = 0; i < x; ++i) {
          out.tab[i] = tab[i];
          if (tab[i] == generator) {
            gens[ngens++] = static_cast<std::uint8_t>(i);
          }
        }
        out.tab[x] = gap;
        for (int i = x + 1; i < new_size; ++i) {
          std::uint8_t const v = i < old_size ? tab[i] : decomposable;
          if (v == generator) {
            out.tab[i]    = generator;
            gens[ngens++] = static_cast<std::uint8_t>(i);
            continue;
          }
          // Still decomposable iff i - j is a member for some generator j.
          int j = 0;
          while (j < ngens && out.tab[i - gens[j]] == gap) {
            ++j;
          }
          if (j == ngens) {
            out.tab[i]    = generator;
            gens[ngens++] = static_cast<std::uint8_t>(i);
          } else {
            out.tab[i] = decomposable;
          }
        }
        return out;
      }

      template <typename F>
      void for_each_child(F&& f) const {
        for (int x = c; x < c + m; ++x) {
          if (tab[x] == generator) {
            f(child(x));
          }
        }
      }

      std::vector<std::int64_t> gap_list() const {
        std::vector<std::int64_t> out;
        for (int i = 1; i < c; ++i) {
          if (tab[i] == gap) {
            out.push_back(i);
          }
        }
        return out;
      }
    };

    // 256-bit mask; gaps of a genus-g semigroup lie below 2g and pairwise
    // sums below 4g <= 160.
    struct Mask256 {
      std::array<std::uint64_t, 4> w{};

      void set(int i) noexcept {
        w[static_cast<std::size_t>(i) >> 6] |= std::uint64_t(1) << (i & 63);
      }

      void or_shifted(Mask256 const& src, int shift) noexcept {
        int const ws = shift >> 6;
        int const bs = shift & 63;
        for (int i = 3; i >= ws; --i) {
          std::uint64_t v = src.w[static_cast<std::size_t>(i - ws)] << bs;
          if (bs != 0 && i - ws - 1 >= 0) {
            v |= src.w[static_cast<std::size_t>(i - ws - 1)] >> (64 - bs);
          }
          w[static_cast<std::size_t>(i)] |= v;
        }
      }

      int count() const noexcept {
        return std::popcount(w[0]) + std::popcount(w[1]) + std::popcount(w[2])
               + std::popcount(w[3]);
      }
    };

    struct Counters {
      std::vector<CensusRow> rows;
      std::uint64_t          seen = 0;

      Counters(int lo, int hi) {
        for (int g = lo; g <= hi; ++g) {
          rows.push_back(CensusRow{g, 0, 0, 0});
        }
      }
    };

    class Evaluator {
     public:
      Evaluator(int lo, int hi, std::uint64_t validate_every)
          : _lo(lo), _hi(hi), _validate_every(validate_every) {}

      void visit(Node const& n, Counters& acc) const {
        if (n.genus < _lo) {
          return;
        }
        CensusRow& row = acc.rows[static_cast<std::size_t>(n.genus - _lo)];
        ++row.ns;
        ++acc.seen;
        if (_validate_every != 0 && acc.seen % _validate_every == 0) {
          validate(n);
        }

        Mask256 gaps;
        for (int i = 1; i < n.c; ++i) {
          if (n.tab[i] == gap) {
            gaps.set(i);
          }
        }
        Mask256 sums;
        for (int i = 1; i < n.c; ++i) {
          if (n.tab[i] == gap) {
            sums.or_shifted(gaps, i);
          }
        }
        if (sums.count() <= 3 * (n.genus - 1)) {
          return;
        }
        ++row.b2s;
        auto const s = Semigroup::from_gaps(GapList(n.gap_list()));
        if (is_pf_semigroup(s)) {
          ++row.b2pfs;
        }
      }

      void walk(Node const& n, Counters& acc) const {
        visit(n, acc);
        if (n.genus < _hi) {
          n.for_each_child([&](Node const& child) { walk(child, acc); });
        }
      }

     private:
      static void validate(Node const& n) {
        auto const s = Semigroup::from_gaps(GapList(n.gap_list()));
        if (s.genus() != n.genus || s.multiplicity() != n.m) {
          raise(ErrorKind::NotClosed, "census produced an inconsistent semigroup");
        }
      }

      int           _lo;
      int           _hi;
      std::uint64_t _validate_every;
    };

    void merge(std::vector<CensusRow>& into, std::vector<CensusRow> const& from) {
      for (std::size_t i = 0; i < into.size(); ++i) {
        into[i].ns += from[i].ns;
        into[i].b2s += from[i].b2s;
        into[i].b2pfs += from[i].b2pfs;
      }
    }

  }  // namespace

  unsigned default_thread_count() {
    if (char const* env = std::getenv("NUMSG_THREADS")) {
      char*      end = nullptr;
      long const v   = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) {
        return static_cast<unsigned>(v);
      }
    }
    unsigned const hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
  }

  std::uint64_t enumerate_genus(int g, std::function<void(Semigroup const&)> const& visitor) {
    if (g < 0 || g > max_census_genus) {
      raise(ErrorKind::InvalidArgument,
            "genus must lie in [0, " + std::to_string(max_census_genus) + "]");
    }
    if (g == 0) {
      visitor(Semigroup());
      return 1;
    }
    std::uint64_t count = 0;
    auto          rec   = [&](auto&& self, Node const& n) -> void {
      if (n.genus == g) {
        ++count;
        visitor(Semigroup::from_gaps(GapList(n.gap_list())));
        return;
      }
      n.for_each_child([&](Node const& child) { self(self, child); });
    };
    rec(rec, Node::root());
    return count;
  }

  std::vector<CensusRow> census_range(int lo, int hi, CensusOptions const& opts) {
    if (lo < 2 || lo > hi || hi > max_census_genus) {
      raise(ErrorKind::InvalidArgument,
            "census range must satisfy 2 <= from <= to <= " + std::to_string(max_census_genus));
    }
    unsigned const  threads = opts.threads == 0 ? default_thread_count() : opts.threads;
    Evaluator const eval(lo, hi, opts.validate_every);
    Counters        total(lo, hi);

    // Expand breadth-first until there is enough independent work, counting
    // the shallow levels on the way.
    std::vector<Node> frontier{Node::root()};
    std::size_t const target = threads == 1 ? 1 : 64 * static_cast<std::size_t>(threads);
    int               depth  = 0;
    while (depth < hi && frontier.size() < target) {
      std::vector<Node> next;
      for (Node const& n : frontier) {
        eval.visit(n, total);
        n.for_each_child([&](Node const& child) { next.push_back(child); });
      }
      frontier = std::move(next);
      ++depth;
    }

    std::atomic<std::size_t> cursor{0};
    std::mutex               lock;
    std::exception_ptr       failure;
    auto                     work = [&] {
      Counters local(lo, hi);
      try {
        for (std::size_t i = cursor++; i < frontier.size(); i = cursor++) {
          eval.walk(frontier[i], local);
        }
      } catch (...) {
        std::lock_guard<std::mutex> guard(lock);
        failure = std::current_exception();
        return;
      }
      std::lock_guard<std::mutex> guard(lock);
      merge(total.rows, local.rows);
    };

    if (threads == 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back(work);
      }
    }
    if (failure) {
      std::rethrow_exception(failure);
    }
    return total.rows;
  }

  CensusRow census_row(int g, CensusOptions const& opts) {
    return census_range(g, g, opts).front();
  }

  std::string census_csv(std::span<CensusRow const> rows) {
    std::string out = "genus,ns,b2s,b2pfs\n";
    for (auto const& r : rows) {
      out += std::to_string(r.genus) + ',' + std::to_string(r.ns) + ','
             + std::to_string(r.b2s) + ',' + std::to_string(r.b2pfs) + '\n';
    }
    return out;
  }

}  // namespace numsg
