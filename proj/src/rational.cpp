#include "ck/rational.hpp"

#include <cctype>

namespace ck {

std::string to_string(const Rational& r) { return r.str(); }

std::optional<Rational> parse_rational(const std::string& text) {
  // shape check first: cpp_rational's own parser is more permissive than we
  // want on a user-facing CLI (and throws on garbage).
  auto digits = [](const std::string& s, size_t from, size_t to) {
    if (from >= to) return false;
    for (size_t i = from; i < to; ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  size_t slash = text.find('/');
  std::string num = slash == std::string::npos ? text : text.substr(0, slash);
  size_t start = (!num.empty() && (num[0] == '-' || num[0] == '+')) ? 1 : 0;
  if (!digits(num, start, num.size())) return std::nullopt;
  if (slash != std::string::npos) {
    std::string den = text.substr(slash + 1);
    if (!digits(den, 0, den.size())) return std::nullopt;
    if (Int(den) == 0) return std::nullopt;
  }
  try {
    return Rational(text);
  } catch (...) {
    return std::nullopt;
  }
}

int sign(const Rational& r) {
  if (r > 0) return 1;
  if (r < 0) return -1;
  return 0;
}

} // namespace ck
