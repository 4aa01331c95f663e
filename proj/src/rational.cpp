#include "owabp/rational.hpp"

#include <cctype>
#include <limits>

namespace owabp {

namespace {

using i128 = __int128;

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr i128 kMin64 = std::numeric_limits<long long>::min();
constexpr i128 kMax64 = std::numeric_limits<long long>::max();

}  // namespace

void Rational::assign(i128 num, i128 den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) {
    num_ = 0;
    den_ = 1;
    return;
  }
  const i128 g = gcd128(num, den);
  num /= g;
  den /= g;
  if (num < kMin64 || num > kMax64 || den > kMax64)
    throw std::overflow_error("rational overflow");
  num_ = static_cast<long long>(num);
  den_ = static_cast<long long>(den);
}

Rational Rational::parse(const std::string& text) {
  const auto bad = [&] {
    return std::invalid_argument("malformed rational: \"" + text + "\"");
  };
  const auto parse_ll = [&](const std::string& part) -> long long {
    if (part.empty()) throw bad();
    std::size_t i = part[0] == '-' ? 1 : 0;
    if (i == part.size()) throw bad();
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) throw bad();
    try {
      std::size_t pos = 0;
      long long v = std::stoll(part, &pos);
      if (pos != part.size()) throw bad();
      return v;
    } catch (const std::out_of_range&) {
      throw std::overflow_error("rational component out of range: " + part);
    }
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_ll(text));
  const long long den = parse_ll(text.substr(slash + 1));
  if (den == 0) throw bad();
  return Rational(parse_ll(text.substr(0, slash)), den);
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace owabp
