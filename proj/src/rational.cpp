#include "hyperlog/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace hyperlog {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw std::invalid_argument("malformed rational: " + std::string(text));
  std::string n(num);
  if (!n.empty() && n[0] == '+') n.erase(0, 1);
  Integer d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  Rational q(Integer(n, 10), d);
  q.canonicalize();
  return q;
}

}  // namespace hyperlog
