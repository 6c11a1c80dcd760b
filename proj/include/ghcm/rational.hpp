#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ghcm {

class arithmetic_error : public std::runtime_error {
 public:
  explicit arithmetic_error(const std::string& what) : std::runtime_error(what) {}
};

/// Exact rational on 64-bit words, always kept in lowest terms with a
/// positive denominator. Intermediate products go through 128-bit words and
/// every result is range-checked; the magnitudes in this toolkit stay tiny.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  static Rational parse(std::string_view s);

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  bool is_nonneg() const { return num_ >= 0; }

  /// Exact integer value; throws if not an integer.
  long long as_integer() const {
    if (den_ != 1) throw arithmetic_error("rational " + str() + " is not an integer");
    return num_;
  }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw arithmetic_error("division by zero");
    return from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    i128 l = i128(a.num_) * b.den_;
    i128 r = i128(b.num_) * a.den_;
    return l < r ? std::strong_ordering::less
                 : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  using i128 = __int128;

  static Rational from128(i128 n, i128 d) {
    if (d == 0) throw arithmetic_error("division by zero");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    i128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    Rational r;
    r.num_ = narrow(n);
    r.den_ = narrow(d);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  static long long narrow(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw arithmetic_error("rational overflow");
    return static_cast<long long>(v);
  }

  void normalize() {
    if (den_ == 0) throw arithmetic_error("zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  long long num_ = 0;
  long long den_ = 1;
};

inline Rational Rational::parse(std::string_view s) {
  auto slash = s.find('/');
  auto to_ll = [](std::string_view t) {
    if (t.empty()) throw arithmetic_error("empty rational literal");
    size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(std::string(t), &pos);
    } catch (const std::exception&) {
      throw arithmetic_error("bad rational literal '" + std::string(t) + "'");
    }
    if (pos != t.size()) throw arithmetic_error("bad rational literal '" + std::string(t) + "'");
    return v;
  };
  if (slash == std::string_view::npos) return Rational(to_ll(s));
  return Rational(to_ll(s.substr(0, slash)), to_ll(s.substr(slash + 1)));
}

}  // namespace ghcm
