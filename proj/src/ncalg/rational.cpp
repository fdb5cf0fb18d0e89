#include "ncdoc/ncalg/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace ncdoc {

namespace {

bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!is_integer_literal(num) || (slash != std::string_view::npos && !is_integer_literal(den)))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  Rational value;
  value.get_num() = mpz_class(n, 10);
  if (slash == std::string_view::npos) {
    value.get_den() = 1;
  } else {
    std::string d(den);
    if (d.front() == '+') d.erase(0, 1);
    mpz_class dz(d, 10);
    if (dz == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    value.get_den() = dz;
    value.canonicalize();
  }
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

}  // namespace ncdoc
