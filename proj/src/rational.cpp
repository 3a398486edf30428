#include "tverberg/rational.hpp"

#include <cctype>

#include "tverberg/errors.hpp"

namespace tverberg {

namespace {

bool is_integer_literal(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  return BigInt(std::string(text), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_integer_literal(num_text)) {
    throw InvalidParameter("malformed rational '" + std::string(text) + "'");
  }
  Rational value(parse_integer(num_text));
  if (slash != std::string_view::npos) {
    const auto den_text = text.substr(slash + 1);
    if (!is_integer_literal(den_text)) {
      throw InvalidParameter("malformed rational '" + std::string(text) + "'");
    }
    BigInt den = parse_integer(den_text);
    if (den == 0) throw InvalidParameter("zero denominator in '" + std::string(text) + "'");
    value = Rational(value.get_num(), den);
    value.canonicalize();
  }
  return value;
}

std::string format_rational(const Rational& value) {
  Rational canonical = value;
  canonical.canonicalize();
  return canonical.get_num().get_str() + "/" + canonical.get_den().get_str();
}

Rational det_rational(const Matrix<Rational>& m, std::size_t cap) {
  return bareiss_determinant(
      m, Rational(1), [](const Rational& x) { return sgn(x) == 0; },
      [](const Rational& p) { return [p](const Rational& x) { return Rational(x / p); }; }, cap);
}

}  // namespace tverberg
