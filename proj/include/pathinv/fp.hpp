#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pathinv {

// Prime-field scalar with a runtime modulus. An element either carries its
// modulus p (canonical residue, 0 <= value < p) or is an integer constant
// with modulus 0; constants are produced by generic code (literals 0, 1, -1)
// and adopt the modulus of the first moduli-carrying operand they meet.
// All instance data is parsed into residues, so constants never need to
// decide a modulus on their own except in degenerate all-constant algebra.
class Fp {
public:
  static constexpr long long max_modulus = (1LL << 31);

  Fp() = default;
  Fp(long long v) : v_(v) {}

  static Fp residue(long long v, long long p) {
    if (p < 2 || p >= max_modulus) throw std::domain_error("Fp: modulus out of range");
    Fp r;
    r.p_ = p;
    r.v_ = norm(v, p);
    return r;
  }

  long long value() const { return v_; }
  long long modulus() const { return p_; }

  bool is_zero() const { return v_ == 0; }

  Fp operator-() const {
    Fp r = *this;
    r.v_ = (p_ == 0) ? -v_ : norm(-v_, p_);
    return r;
  }
  Fp operator+(const Fp& o) const {
    auto [a, b, p] = align(*this, o);
    return make(p == 0 ? a + b : (a + b) % p, p);
  }
  Fp operator-(const Fp& o) const {
    auto [a, b, p] = align(*this, o);
    return make(p == 0 ? a - b : norm(a - b, p), p);
  }
  Fp operator*(const Fp& o) const {
    auto [a, b, p] = align(*this, o);
    return make(p == 0 ? a * b : (a * b) % p, p);
  }
  Fp operator/(const Fp& o) const {
    auto [a, b, p] = align(*this, o);
    if (b == 0) throw std::domain_error("Fp: division by zero");
    if (p == 0) {
      // Constant-by-constant division appears only in degenerate settings;
      // it must be exact to stay in the canonical integer image.
      if (a % b != 0) throw std::domain_error("Fp: inexact constant division");
      return make(a / b, 0);
    }
    return make((a * inverse(b, p)) % p, p);
  }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  Fp& operator/=(const Fp& o) { return *this = *this / o; }

  bool operator==(const Fp& o) const {
    auto [a, b, p] = align(*this, o);
    return a == b;
  }
  bool operator!=(const Fp& o) const { return !(*this == o); }

  std::string str() const { return std::to_string(v_); }

private:
  struct Aligned {
    long long a, b, p;
  };

  static long long norm(long long v, long long p) {
    long long r = v % p;
    return r < 0 ? r + p : r;
  }

  static Fp make(long long v, long long p) {
    Fp r;
    r.v_ = v;
    r.p_ = p;
    return r;
  }

  // Reduce both operands into a common modulus.
  static Aligned align(const Fp& x, const Fp& y) {
    if (x.p_ == y.p_) return {x.v_, y.v_, x.p_};
    if (x.p_ == 0) return {norm(x.v_, y.p_), y.v_, y.p_};
    if (y.p_ == 0) return {x.v_, norm(y.v_, x.p_), x.p_};
    throw std::domain_error("Fp: mixed moduli " + std::to_string(x.p_) + " and " +
                            std::to_string(y.p_));
  }

  static long long inverse(long long a, long long p) {
    // Extended Euclid; p is prime and a is a nonzero residue.
    long long t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
      long long q = r / new_r;
      long long tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (r != 1) throw std::domain_error("Fp: non-invertible residue (modulus not prime?)");
    return norm(t, p);
  }

  long long v_ = 0;
  long long p_ = 0;
};

inline bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace pathinv
