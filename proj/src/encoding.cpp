#include "numsg/encoding.hpp"

#include <charconv>

#include "numsg/error.hpp"

namespace numsg {

  std::vector<std::int64_t> parse_int_list(std::string_view text) {
    std::vector<std::int64_t> out;
    if (text.empty()) {
      return out;
    }
    char const* p   = text.data();
    char const* end = text.data() + text.size();
    while (true) {
      if (p == end || *p < '0' || *p > '9') {
        raise(ErrorKind::ParseError,
              "expected a decimal number in \"" + std::string(text) + "\"");
      }
      std::int64_t value = 0;
      auto [next, ec]    = std::from_chars(p, end, value);
      if (ec != std::errc()) {
        raise(ErrorKind::ParseError, "number out of range in \"" + std::string(text) + "\"");
      }
      out.push_back(value);
      p = next;
      if (p == end) {
        break;
      }
      if (*p != ',') {
        raise(ErrorKind::ParseError,
              "unexpected character '" + std::string(1, *p) + "' in \""
                  + std::string(text) + "\"");
      }
      ++p;
    }
    return out;
  }

  std::string format_int_list(std::span<std::int64_t const> values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i != 0) {
        out += ',';
      }
      out += std::to_string(values[i]);
    }
    return out;
  }

  std::string_view strip_prefix(std::string_view text, std::string_view prefix) noexcept {
    if (text.starts_with(prefix)) {
      text.remove_prefix(prefix.size());
    }
    return text;
  }

  Semigroup parse_semigroup(std::string_view text) {
    if (text.starts_with("gens:")) {
      auto gens = parse_int_list(text.substr(5));
      return Semigroup::from_generators(gens);
    }
    if (text.starts_with("gaps:")) {
      return Semigroup::from_gaps(GapList(parse_int_list(text.substr(5))));
    }
    raise(ErrorKind::ParseError,
          "expected \"gens:...\" or \"gaps:...\", got \"" + std::string(text) + "\"");
  }

  std::string encode_gens(Semigroup const& s) {
    return "gens:" + format_int_list(s.minimal_generators());
  }

  std::string encode_gaps(Semigroup const& s) {
    return "gaps:" + format_int_list(s.gaps().values());
  }

}  // namespace numsg
