#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace twh {

// Exact rational on 64-bit components. Balance thresholds and geometric
// predicates must never round, so no floating point anywhere near these.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}
  Rational(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend Rational operator+(Rational a, Rational b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(Rational a, Rational b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rational operator*(Rational a, Rational b) {
    return Rational(a.num * b.num, a.den * b.den);
  }
  friend Rational operator/(Rational a, Rational b) {
    if (b.num == 0) throw std::invalid_argument("rational division by zero");
    return Rational(a.num * b.den, a.den * b.num);
  }
  Rational operator-() const { return Rational(-num, den); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return (__int128)a.num * b.den < (__int128)b.num * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return (__int128)a.num * b.den <= (__int128)b.num * a.den;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

  int sign() const { return num > 0 ? 1 : (num < 0 ? -1 : 0); }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

// a*b compared against c*d without overflow; handy for predicates.
inline int cmp_products(long long a, long long b, long long c, long long d) {
  __int128 lhs = (__int128)a * b;
  __int128 rhs = (__int128)c * d;
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

}  // namespace twh
