#include "eqwb/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace eqwb {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("empty rational");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool slash = false;
  bool digits = false;
  for (; i < s.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits = true;
    } else if (s[i] == '/' && !slash && digits) {
      slash = true;
      digits = false;
    } else {
      throw std::invalid_argument("bad rational: " + s);
    }
  }
  if (!digits) throw std::invalid_argument("bad rational: " + s);
  if (s[0] == '+') s.erase(0, 1);
  Rational q(s, 10);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

}  // namespace eqwb
