#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "numsg/semigroup.hpp"

namespace numsg {

  // Comma-separated decimals without spaces, e.g. "5,7,11,13". The empty
  // string is the empty list. Raises ParseError on anything else.
  std::vector<std::int64_t> parse_int_list(std::string_view text);
  std::string               format_int_list(std::span<std::int64_t const> values);

  // "gens:5,7,11,13" or "gaps:1,2,3,4,6,8,9".
  Semigroup   parse_semigroup(std::string_view text);
  std::string encode_gens(Semigroup const& s);
  std::string encode_gaps(Semigroup const& s);

  // Strips `prefix` from the front of `text` when present.
  std::string_view strip_prefix(std::string_view text, std::string_view prefix) noexcept;

}  // namespace numsg
