#include "hyperbolica/hyperbolic.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <system_error>

namespace hyperbolica {

Hyperbolic Hyperbolic::inverse() const {
  if (is_zero()) {
    throw ZeroValueError("zero has no multiplicative inverse");
  }
  if (is_zero_divisor()) {
    throw ZeroDivisorError("zero divisor " + to_string_idempotent(*this) +
                           " has no multiplicative inverse");
  }
  return {1.0 / a1, 1.0 / a2};
}

OrderRelation compare(Hyperbolic x, Hyperbolic y) {
  if (x.a1 == y.a1 && x.a2 == y.a2) {
    return {Order::equal, false};
  }
  if (x.a1 <= y.a1 && x.a2 <= y.a2) {
    return {Order::less, x.a1 < y.a1 && x.a2 < y.a2};
  }
  if (x.a1 >= y.a1 && x.a2 >= y.a2) {
    return {Order::greater, x.a1 > y.a1 && x.a2 > y.a2};
  }
  return {Order::incomparable, false};
}

Hyperbolic sup_set(std::span<const Hyperbolic> values) {
  if (values.empty()) {
    throw EmptySetError("supremum of the empty set is undefined");
  }
  Hyperbolic result = values.front();
  for (const Hyperbolic& v : values.subspan(1)) {
    result = sup(result, v);
  }
  return result;
}

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) {
    return "nan";
  }
  return std::string(buf, ptr);
}

std::string to_string_idempotent(Hyperbolic x) {
  std::string out = format_double(x.a1) + "*e1 ";
  if (x.a2 < 0.0 || (x.a2 == 0.0 && std::signbit(x.a2))) {
    out += "- " + format_double(-x.a2);
  } else {
    out += "+ " + format_double(x.a2);
  }
  return out + "*e2";
}

std::string to_string_canonical(Hyperbolic x) {
  const Hyperbolic::Canonical c = x.to_canonical();
  std::string out = format_double(c.t) + " ";
  if (c.s < 0.0 || (c.s == 0.0 && std::signbit(c.s))) {
    out += "- " + format_double(-c.s);
  } else {
    out += "+ " + format_double(c.s);
  }
  return out + "*j";
}

namespace {

// Term-sum parser for both textual forms: a signed sequence of terms, each a
// number, a unit (e1, e2, j) or number '*' unit.  Plain terms embed along
// the diagonal, j-terms add (s, -s).
struct HTextParser {
  std::string_view src;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }

  bool eof() {
    skip_ws();
    return pos >= src.size();
  }

  [[noreturn]] void fail(const std::string& what) {
    throw SyntaxError("hyperbolic literal: " + what, pos);
  }

  double number() {
    skip_ws();
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(src.data() + pos, src.data() + src.size(), value);
    if (ec != std::errc{}) fail("expected a number");
    pos = static_cast<std::size_t>(ptr - src.data());
    return value;
  }

  bool try_unit(Hyperbolic& unit) {
    skip_ws();
    if (src.substr(pos, 2) == "e1") {
      pos += 2;
      unit = Hyperbolic::unit_e1();
      return true;
    }
    if (src.substr(pos, 2) == "e2") {
      pos += 2;
      unit = Hyperbolic::unit_e2();
      return true;
    }
    if (pos < src.size() && src[pos] == 'j') {
      pos += 1;
      unit = Hyperbolic::unit_j();
      return true;
    }
    return false;
  }

  Hyperbolic term() {
    Hyperbolic unit;
    if (try_unit(unit)) return unit;
    const double coeff = number();
    skip_ws();
    if (pos < src.size() && src[pos] == '*') {
      ++pos;
      if (!try_unit(unit)) fail("expected e1, e2 or j after '*'");
      return coeff * unit;
    }
    return Hyperbolic::embed(coeff);
  }

  Hyperbolic parse() {
    Hyperbolic total = Hyperbolic::zero();
    bool first = true;
    while (!eof()) {
      double sign = 1.0;
      skip_ws();
      if (src[pos] == '+' || src[pos] == '-') {
        sign = src[pos] == '-' ? -1.0 : 1.0;
        ++pos;
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      total = total + sign * term();
      first = false;
    }
    if (first) fail("empty literal");
    return total;
  }
};

}  // namespace

Hyperbolic parse_hyperbolic(std::string_view text) {
  HTextParser parser{text};
  Hyperbolic value = parser.parse();
  if (!is_finite(value)) {
    throw NonFiniteError("hyperbolic literal is not finite: " + std::string(text));
  }
  return value;
}

}  // namespace hyperbolica
