#pragma once

#include <cstdint>
#include <string>

#include "ekr/partition.hpp"

namespace ekr {

// Exact rational with 64-bit numerator/denominator; intermediate products go
// through 128 bits and overflow is asserted.
class Rational {
 public:
  Rational() = default;
  Rational(long long num) : num_(num) {}
  Rational(long long num, long long den);

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational operator-() const { return Rational(-num_, den_); }

  bool operator==(const Rational&) const = default;
  bool operator<(const Rational& o) const;
  bool operator<=(const Rational& o) const { return *this == o || *this < o; }

  double to_double() const { return (double)num_ / (double)den_; }
  std::string str() const;

 private:
  long long num_ = 0;
  long long den_ = 1;
};

// Exact number a + b*sqrt(d) with d squarefree (possibly negative); d == 1
// encodes plain rationals. Arithmetic is closed for a fixed d.
class QuadraticValue {
 public:
  QuadraticValue() = default;
  QuadraticValue(Rational a) : a_(a) {}
  QuadraticValue(long long a) : a_(a) {}
  QuadraticValue(Rational a, Rational b, long long d);  // normalizes d squarefree

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  long long d() const { return d_; }
  bool is_rational() const { return b_ == Rational(0); }
  bool is_integer() const { return is_rational() && a_.is_integer(); }

  QuadraticValue conjugate() const { return QuadraticValue(a_, -b_, d_); }
  QuadraticValue operator+(const QuadraticValue& o) const;
  QuadraticValue operator-(const QuadraticValue& o) const;
  QuadraticValue operator*(const QuadraticValue& o) const;
  QuadraticValue operator-() const { return QuadraticValue(-a_, -b_, d_); }

  bool operator==(const QuadraticValue&) const = default;
  // exact order for real values (d >= 0); throws for imaginary ones
  bool operator<(const QuadraticValue& o) const;

  double to_double() const;  // real values only
  std::string str() const;

 private:
  Rational a_;
  Rational b_;
  long long d_ = 1;
};

long long squarefree_part(long long d, long long* square_root_factor);

}  // namespace ekr
