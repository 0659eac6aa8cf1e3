#include "chern3/rat.hpp"

#include <cctype>
#include <ostream>

#include "chern3/error.hpp"

namespace chern3 {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rat::Rat(long num, long den) : Rat(mpz_class(num), mpz_class(den)) {}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(text))
      throw Error(ErrorKind::ParseError, "not a rational: \"" + std::string(text) + "\"");
    return Rat(parse_integer(text));
  }
  const auto p = text.substr(0, slash);
  const auto q = text.substr(slash + 1);
  if (!is_integer_literal(p) || !is_integer_literal(q) || q[0] == '-' || q[0] == '+')
    throw Error(ErrorKind::ParseError, "not a rational: \"" + std::string(text) + "\"");
  return Rat(parse_integer(p), parse_integer(q));
}

std::string Rat::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

}  // namespace chern3
