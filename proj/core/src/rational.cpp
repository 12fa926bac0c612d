#include "kemeny/rational.hpp"

#include <cctype>

#include "kemeny/error.hpp"

namespace kemeny {

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  auto integer_part = [&](std::size_t begin, std::size_t end, bool allow_sign) {
    std::size_t i = begin;
    if (allow_sign && i < end && (text[i] == '-' || text[i] == '+')) ++i;
    if (i == end) throw ValidationError("malformed rational '" + text + "'");
    for (std::size_t k = i; k < end; ++k)
      if (!std::isdigit(static_cast<unsigned char>(text[k])))
        throw ValidationError("malformed rational '" + text + "'");
    std::string digits = text.substr(begin, end - begin);
    if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
    return Integer(digits);
  };
  if (slash == std::string::npos) return Rational(integer_part(0, text.size(), true));
  const Integer num = integer_part(0, slash, true);
  const Integer den = integer_part(slash + 1, text.size(), false);
  if (den == 0) throw ValidationError("zero denominator in '" + text + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace kemeny
