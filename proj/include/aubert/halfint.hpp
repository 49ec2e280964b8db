#pragma once

#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace aubert {

// Exact element of (1/2)Z, stored as twice its value.  All twist exponents
// in this library are half-integers; no floating point is used anywhere.
struct HalfInt {
  int twice = 0;

  constexpr HalfInt() = default;
  constexpr explicit HalfInt(int whole) : twice(2 * whole) {}

  static constexpr HalfInt from_twice(int t) {
    HalfInt h;
    h.twice = t;
    return h;
  }
  static constexpr HalfInt half() { return from_twice(1); }

  constexpr bool is_integer() const { return twice % 2 == 0; }

  constexpr HalfInt operator-() const { return from_twice(-twice); }
  constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice + o.twice); }
  constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice - o.twice); }

  constexpr HalfInt abs() const { return from_twice(twice < 0 ? -twice : twice); }

  constexpr auto operator<=>(const HalfInt&) const = default;

  std::string str() const {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
  }

  // Accepts "p", "-p", "p/2", "p/1".
  static HalfInt parse(const std::string& s) {
    std::size_t slash = s.find('/');
    try {
      if (slash == std::string::npos) {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return HalfInt(v);
      }
      std::size_t pos = 0;
      int num = std::stoi(s.substr(0, slash), &pos);
      if (pos != slash) throw std::invalid_argument(s);
      int den = std::stoi(s.substr(slash + 1), &pos);
      if (pos != s.size() - slash - 1) throw std::invalid_argument(s);
      if (den == 1) return HalfInt(num);
      if (den == 2) return from_twice(num);
      throw std::invalid_argument(s);
    } catch (const std::exception&) {
      throw std::invalid_argument("not a half-integer: '" + s + "'");
    }
  }
};

}  // namespace aubert
