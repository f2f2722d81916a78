#include "ekr/quadratic.hpp"

#include <cassert>
#include <cmath>
#include <numeric>
#include <sstream>

#include "ekr/errors.hpp"

namespace ekr {

namespace {

long long checked_narrow(int128 v) {
  assert(v <= (int128)0x7fffffffffffffffLL && v >= -(int128)0x7fffffffffffffffLL - 1);
  return (long long)v;
}

int128 gcd128(int128 a, int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational::Rational(long long num, long long den) : num_(num), den_(den) {
  if (den_ == 0) throw InvalidParameter("rational with zero denominator");
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

Rational Rational::operator+(const Rational& o) const {
  int128 n = (int128)num_ * o.den_ + (int128)o.num_ * den_;
  int128 d = (int128)den_ * o.den_;
  int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  return Rational(checked_narrow(n), checked_narrow(d));
}

Rational Rational::operator-(const Rational& o) const { return *this + Rational(-o.num_, o.den_); }

Rational Rational::operator*(const Rational& o) const {
  int128 n = (int128)num_ * o.num_;
  int128 d = (int128)den_ * o.den_;
  int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  return Rational(checked_narrow(n), checked_narrow(d));
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw InvalidParameter("rational division by zero");
  return *this * Rational(o.den_, o.num_);
}

bool Rational::operator<(const Rational& o) const {
  return (int128)num_ * o.den_ < (int128)o.num_ * den_;
}

std::string Rational::str() const {
  std::ostringstream os;
  os << num_;
  if (den_ != 1) os << '/' << den_;
  return os.str();
}

long long squarefree_part(long long d, long long* square_root_factor) {
  long long sq = 1;
  long long sign = d < 0 ? -1 : 1;
  long long m = d < 0 ? -d : d;
  for (long long p = 2; p * p <= m; ++p) {
    while (m % (p * p) == 0) {
      m /= p * p;
      sq *= p;
    }
  }
  if (square_root_factor) *square_root_factor = sq;
  return sign * m;
}

QuadraticValue::QuadraticValue(Rational a, Rational b, long long d) : a_(a), b_(b), d_(d) {
  if (b_ == Rational(0) || d_ == 0) {
    if (d_ == 0) b_ = Rational(0);
    d_ = 1;
    return;
  }
  if (d_ == 1) {  // fold sqrt(1)
    a_ = a_ + b_;
    b_ = Rational(0);
    return;
  }
  long long root;
  long long sf = squarefree_part(d_, &root);
  d_ = sf;
  if (root != 1) b_ = b_ * Rational(root);
  if (d_ == 1) {
    a_ = a_ + b_;
    b_ = Rational(0);
  }
}

QuadraticValue QuadraticValue::operator+(const QuadraticValue& o) const {
  if (is_rational()) return QuadraticValue(a_ + o.a_, o.b_, o.d_);
  if (o.is_rational()) return QuadraticValue(a_ + o.a_, b_, d_);
  if (d_ != o.d_) throw InvalidParameter("quadratic values with different radicands");
  return QuadraticValue(a_ + o.a_, b_ + o.b_, d_);
}

QuadraticValue QuadraticValue::operator-(const QuadraticValue& o) const { return *this + (-o); }

QuadraticValue QuadraticValue::operator*(const QuadraticValue& o) const {
  if (is_rational()) return QuadraticValue(a_ * o.a_, a_ * o.b_, o.d_);
  if (o.is_rational()) return QuadraticValue(a_ * o.a_, b_ * o.a_, d_);
  if (d_ != o.d_) throw InvalidParameter("quadratic values with different radicands");
  return QuadraticValue(a_ * o.a_ + b_ * o.b_ * Rational(d_), a_ * o.b_ + b_ * o.a_, d_);
}

bool QuadraticValue::operator<(const QuadraticValue& o) const {
  if (*this == o) return false;
  QuadraticValue diff = *this - o;
  if (diff.d_ < 0) throw InvalidParameter("ordering imaginary quadratic values");
  if (diff.is_rational()) return diff.a_ < Rational(0);
  // sign of a + b*sqrt(d), b != 0, d > 1:  compare a^2 vs b^2 d with care
  bool a_neg = diff.a_ < Rational(0);
  bool b_neg = diff.b_ < Rational(0);
  if (a_neg && b_neg) return true;
  if (!a_neg && !b_neg) return false;
  Rational a2 = diff.a_ * diff.a_;
  Rational b2d = diff.b_ * diff.b_ * Rational(diff.d_);
  // a,b opposite signs: value < 0 iff the negative term dominates
  if (a_neg) return b2d < a2;  // a < 0 <= b: negative iff |a| > |b|sqrt(d)
  return a2 < b2d;             // b < 0 <= a
}

double QuadraticValue::to_double() const {
  if (d_ < 0 && !(b_ == Rational(0)))
    throw InvalidParameter("to_double on imaginary quadratic value");
  return a_.to_double() + b_.to_double() * std::sqrt((double)d_);
}

std::string QuadraticValue::str() const {
  if (is_rational()) return a_.str();
  std::ostringstream os;
  if (!(a_ == Rational(0))) os << a_.str();
  if (!(a_ == Rational(0))) os << (b_ < Rational(0) ? "-" : "+");
  else if (b_ < Rational(0)) os << '-';
  Rational babs = b_ < Rational(0) ? -b_ : b_;
  if (!(babs == Rational(1))) os << babs.str() << '*';
  os << "sqrt(" << d_ << ")";
  return os.str();
}

}  // namespace ekr
