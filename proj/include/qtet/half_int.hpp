#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>

namespace qtet {

// Half-integer quantity stored as twice its value, so that spin labels
// {0, 1/2, 1, 3/2, ...} and signed magnetic numbers are exact and hashable.
class HalfInt {
 public:
  constexpr HalfInt() : twice_(0) {}
  // Construction from an int means the *integer* value n, not n/2.
  constexpr HalfInt(int n) : twice_(2 * n) {}

  static constexpr HalfInt from_twice(int t) {
    HalfInt h;
    h.twice_ = t;
    return h;
  }
  // n halves, i.e. the value n/2.
  static constexpr HalfInt half(int n) { return from_twice(n); }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr bool is_negative() const { return twice_ < 0; }
  constexpr double value() const { return twice_ / 2.0; }
  // 2j+1, the dimension of the spin-j representation.
  constexpr int dim() const { return twice_ + 1; }

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice_ - o.twice_); }
  friend constexpr HalfInt operator*(int k, HalfInt h) { return from_twice(k * h.twice_); }

  constexpr auto operator<=>(const HalfInt&) const = default;

  constexpr HalfInt abs() const { return from_twice(twice_ < 0 ? -twice_ : twice_); }

  std::string str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

  // Accepts "n" or "n/2" (optionally signed).
  static HalfInt parse(const std::string& s);

 private:
  int twice_;
};

inline HalfInt HalfInt::parse(const std::string& s) {
  std::size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      std::size_t pos = 0;
      int n = std::stoi(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      return HalfInt(n);
    }
    std::size_t pos = 0;
    int num = std::stoi(s.substr(0, slash), &pos);
    if (pos != slash) throw std::invalid_argument(s);
    const std::string den = s.substr(slash + 1);
    if (den != "2") throw std::invalid_argument(s);
    return HalfInt::from_twice(num);
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid spin '" + s + "': expected an integer or a 'n/2' fraction");
  }
}

inline HalfInt min(HalfInt a, HalfInt b) { return a < b ? a : b; }
inline HalfInt max(HalfInt a, HalfInt b) { return a < b ? b : a; }

}  // namespace qtet

template <>
struct std::hash<qtet::HalfInt> {
  std::size_t operator()(const qtet::HalfInt& h) const noexcept {
    return std::hash<int>()(h.twice());
  }
};
