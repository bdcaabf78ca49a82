#include "mrce/ratio.hpp"

#include <charconv>
#include <cstdio>
#include <numeric>

#include "mrce/errors.hpp"

namespace mrce {

Ratio::Ratio(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw InputError("ratio denominator must be positive");
  if (num < 0) throw InputError("ratio numerator must be nonnegative");
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Ratio::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Ratio::decimal(int significant_digits) const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant_digits, to_double());
  return buf;
}

Ratio Ratio::divided_by(const Ratio& other) const {
  if (other.num_ == 0) throw InputError("division by a zero ratio");
  // Reduce crosswise first so the products stay small.
  const std::int64_t g1 = std::gcd(num_, other.num_);
  const std::int64_t g2 = std::gcd(other.den_, den_);
  return Ratio((num_ / g1) * (other.den_ / g2), (den_ / g2) * (other.num_ / g1));
}

namespace {

std::int64_t parse_int(std::string_view s, const std::string& whole) {
  std::int64_t v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) {
    throw InputError("malformed ratio '" + whole + "'");
  }
  return v;
}

}  // namespace

Ratio Ratio::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    return Ratio(parse_int(text, text), 1);
  }
  std::string_view sv(text);
  return Ratio(parse_int(sv.substr(0, slash), text),
               parse_int(sv.substr(slash + 1), text));
}

std::ostream& operator<<(std::ostream& os, const Ratio& r) {
  return os << r.str();
}

}  // namespace mrce
