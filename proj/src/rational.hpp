#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "errors.hpp"

namespace arbordom {

// Small positive rational, used for the decomposition slack epsilon.
// Kept exact so threshold arithmetic stays integral and runs stay
// reproducible bit for bit.
struct Rational {
  std::int64_t num = 1;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (num <= 0 || den <= 0) {
      fail(Errc::invalid_argument, "rational must be positive");
    }
    const std::int64_t g = std::gcd(num, den);
    num /= g;
    den /= g;
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  // Accepts "2", "1/2", "3/4".
  static Rational parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
      if (slash == std::string::npos) {
        return Rational(std::stoll(text), 1);
      }
      return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      fail(Errc::invalid_argument, "cannot parse rational: '" + text + "'");
    }
  }

  bool operator==(const Rational&) const = default;
};

}  // namespace arbordom
