#pragma once

#include <cstdint>

#include "coxrow/errors.hpp"

namespace coxrow {

// Prime-field scalar with an NTL-style thread-local modulus. Set the modulus
// before building any Fp values on a thread (OpenMP workers included).
class Fp {
 public:
  Fp() : v_(0) {}
  Fp(long c) {  // NOLINT: implicit by design, mirrors mpq_class(long)
    uint64_t p = modulus();
    long r = c % static_cast<long>(p);
    if (r < 0) r += static_cast<long>(p);
    v_ = static_cast<uint64_t>(r);
  }
  Fp(int c) : Fp(static_cast<long>(c)) {}

  static void set_modulus(uint64_t p) { modulus_ref() = p; }
  static uint64_t modulus() {
    engine_check(modulus_ref() >= 2, "Fp used with no modulus set");
    return modulus_ref();
  }

  Fp operator+(const Fp& o) const { return raw((v_ + o.v_) % modulus()); }
  Fp operator-(const Fp& o) const {
    uint64_t p = modulus();
    return raw((v_ + p - o.v_) % p);
  }
  Fp operator-() const {
    uint64_t p = modulus();
    return raw(v_ ? p - v_ : 0);
  }
  Fp operator*(const Fp& o) const {
    return raw(static_cast<uint64_t>((__uint128_t(v_) * o.v_) % modulus()));
  }
  Fp operator/(const Fp& o) const { return *this * o.inverse(); }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  bool operator==(const Fp& o) const { return v_ == o.v_; }
  bool operator!=(const Fp& o) const { return v_ != o.v_; }

  Fp inverse() const {
    engine_check(v_ != 0, "division by zero in Fp");
    // extended Euclid on (v, p)
    int64_t p = static_cast<int64_t>(modulus());
    int64_t a = static_cast<int64_t>(v_), b = p, x0 = 1, x1 = 0;
    while (b) {
      int64_t q = a / b;
      int64_t t = a - q * b;
      a = b;
      b = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    x0 %= p;
    if (x0 < 0) x0 += p;
    return raw(static_cast<uint64_t>(x0));
  }

  uint64_t value() const { return v_; }

 private:
  static uint64_t& modulus_ref() {
    thread_local uint64_t p = 0;
    return p;
  }
  static Fp raw(uint64_t v) {
    Fp f;
    f.v_ = v;
    return f;
  }

  uint64_t v_;
};

// Lets templated code re-establish field state inside OpenMP workers.
template <typename K>
struct FieldTraits {
  static uint64_t context() { return 0; }
  static void set_context(uint64_t) {}
};

template <>
struct FieldTraits<Fp> {
  static uint64_t context() { return Fp::modulus(); }
  static void set_context(uint64_t p) { Fp::set_modulus(p); }
};

}  // namespace coxrow
