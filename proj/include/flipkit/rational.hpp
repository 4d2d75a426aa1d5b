#pragma once

// Exact rational arithmetic for the fibration geometry. Arbitrary-precision
// integers keep segment intersections and level comparisons exact.

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <string>

#include "flipkit/errors.hpp"

namespace flipkit {

using BigInt = boost::multiprecision::cpp_int;

class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rat(BigInt n) : num_(std::move(n)), den_(1) {}
  Rat(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num_ * b.num_, a.den_ * b.den_); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw argument_error("Rat: division by zero");
    return Rat(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rat operator-() const { return Rat(-num_, den_, already_normal_tag{}); }
  Rat& operator+=(const Rat& b) { return *this = *this + b; }
  Rat& operator-=(const Rat& b) { return *this = *this - b; }
  Rat& operator*=(const Rat& b) { return *this = *this * b; }
  Rat& operator/=(const Rat& b) { return *this = *this / b; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) { return a.num_ * b.den_ < b.num_ * a.den_; }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  std::string str() const {
    std::ostringstream os;
    os << num_;
    if (den_ != 1) os << "/" << den_;
    return os.str();
  }

  // Accepts "n", "n/d" and plain decimal fractions like "-0.25".
  static Rat parse(const std::string& text) {
    auto slash = text.find('/');
    try {
      if (slash != std::string::npos) {
        BigInt n(text.substr(0, slash));
        BigInt d(text.substr(slash + 1));
        return Rat(n, d);
      }
      auto dot = text.find('.');
      if (dot == std::string::npos) return Rat(BigInt(text));
      std::string whole = text.substr(0, dot), frac = text.substr(dot + 1);
      bool neg = !whole.empty() && whole[0] == '-';
      if (whole.empty() || whole == "-" || whole == "+") whole += "0";
      BigInt scale = 1;
      for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
      BigInt value = BigInt(whole) * scale;
      BigInt f = frac.empty() ? BigInt(0) : BigInt(frac);
      value += neg ? -f : f;
      return Rat(value, scale);
    } catch (const std::exception&) {
      throw argument_error("Rat::parse: bad rational '" + text + "'");
    }
  }

 private:
  struct already_normal_tag {};
  Rat(BigInt n, BigInt d, already_normal_tag) : num_(std::move(n)), den_(std::move(d)) {}

  void normalize() {
    if (den_ == 0) throw argument_error("Rat: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  BigInt num_, den_;
};

struct Vec2 {
  Rat x, y;
  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(const Rat& s, const Vec2& v) { return {s * v.x, s * v.y}; }
  friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Vec2& a, const Vec2& b) { return !(a == b); }
  friend bool operator<(const Vec2& a, const Vec2& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
  std::string str() const { return "(" + x.str() + "," + y.str() + ")"; }
};

inline Rat cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

}  // namespace flipkit
