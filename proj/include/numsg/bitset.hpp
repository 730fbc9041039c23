#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace numsg {

  // Growable word-packed bit vector. Only what sumsets and membership tables
  // need: point access, popcount, and OR of a shifted copy.
  class Bitset {
   public:
    using word_type = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    Bitset() = default;
    explicit Bitset(std::size_t nbits)
        : _words((nbits + word_bits - 1) / word_bits, 0), _size(nbits) {}

    std::size_t size() const noexcept {
      return _size;
    }

    bool test(std::size_t i) const noexcept {
      return (_words[i / word_bits] >> (i % word_bits)) & 1U;
    }

    void set(std::size_t i) noexcept {
      _words[i / word_bits] |= word_type(1) << (i % word_bits);
    }

    void reset(std::size_t i) noexcept {
      _words[i / word_bits] &= ~(word_type(1) << (i % word_bits));
    }

    std::size_t count() const noexcept {
      std::size_t n = 0;
      for (word_type w : _words) {
        n += static_cast<std::size_t>(std::popcount(w));
      }
      return n;
    }

    // *this |= (src << shift), truncated to size().
    void or_shifted(Bitset const& src, std::size_t shift) noexcept {
      std::size_t const word_shift = shift / word_bits;
      std::size_t const bit_shift  = shift % word_bits;
      std::size_t const n          = _words.size();
      for (std::size_t i = 0; i < src._words.size(); ++i) {
        std::size_t const dst = i + word_shift;
        if (dst >= n) {
          break;
        }
        word_type const w = src._words[i];
        _words[dst] |= w << bit_shift;
        if (bit_shift != 0 && dst + 1 < n) {
          _words[dst + 1] |= w >> (word_bits - bit_shift);
        }
      }
      trim();
    }

    template <typename F>
    void for_each_set(F&& f) const {
      for (std::size_t i = 0; i < _words.size(); ++i) {
        word_type w = _words[i];
        while (w != 0) {
          f(i * word_bits + static_cast<std::size_t>(std::countr_zero(w)));
          w &= w - 1;
        }
      }
    }

    bool operator==(Bitset const&) const = default;

   private:
    void trim() noexcept {
      if (_size % word_bits != 0 && !_words.empty()) {
        _words.back() &= (word_type(1) << (_size % word_bits)) - 1;
      }
    }

    std::vector<word_type> _words;
    std::size_t            _size = 0;
  };

}  // namespace numsg
