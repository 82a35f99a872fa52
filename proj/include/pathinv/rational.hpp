#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace pathinv {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar. Canonical form is maintained by the backend:
// gcd(|numerator|, denominator) = 1 and denominator >= 1.
class Rational {
public:
  Rational() = default;
  Rational(long long n) : v_(n) {}
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    // The backend requires a positive denominator.
    v_ = den < 0 ? backend(-num, -den) : backend(num, den);
  }

  BigInt num() const { return numerator(v_); }
  BigInt den() const { return denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }

  Rational operator-() const { return Rational(-v_); }
  Rational operator+(const Rational& o) const { return Rational(v_ + o.v_); }
  Rational operator-(const Rational& o) const { return Rational(v_ - o.v_); }
  Rational operator*(const Rational& o) const { return Rational(v_ * o.v_); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(v_ / o.v_);
  }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }

  // "p/q", with "/q" omitted when q = 1.
  std::string str() const {
    if (den() == 1) return num().str();
    return num().str() + "/" + den().str();
  }

private:
  using backend = boost::multiprecision::cpp_rational;
  explicit Rational(backend v) : v_(std::move(v)) {}
  backend v_;
};

// Strict "p/q" parser (q optional, never zero). Accepts an optional leading
// sign on p; q must be a plain positive integer.
inline Rational parse_rational(std::string_view s) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("invalid rational literal '" + std::string(s) + "'");
  };
  if (s.empty()) return fail();
  std::size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') {
    neg = (s[i] == '-');
    ++i;
  }
  std::size_t num_begin = i;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
  if (i == num_begin) return fail();
  BigInt num(std::string(s.substr(num_begin, i - num_begin)));
  if (neg) num = -num;
  BigInt den = 1;
  if (i < s.size()) {
    if (s[i] != '/') return fail();
    ++i;
    std::size_t den_begin = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == den_begin || i != s.size()) return fail();
    den = BigInt(std::string(s.substr(den_begin)));
    if (den == 0) return fail();
  }
  return Rational(num, den);
}

}  // namespace pathinv
