#pragma once

#include <vector>

namespace ekr {

// Finite field F_q for prime powers q <= 31, with full multiplication and
// inverse tables. Elements are encoded 0..q-1 (base-p digits of the
// polynomial coefficients, lowest degree least significant).
class GF {
 public:
  explicit GF(int q);

  int q() const { return q_; }
  int p() const { return p_; }
  int k() const { return k_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int inv(int a) const;
  int div(int a, int b) const { return mul(a, inv(b)); }

  int generator() const { return gen_; }    // multiplicative generator
  int frobenius(int a) const;               // a^p
  int pow(int a, long long e) const;

 private:
  int q_, p_, k_;
  int gen_ = 0;
  std::vector<int> add_, mul_, neg_, inv_;
};

bool is_prime_power(int q, int* p = nullptr, int* k = nullptr);

}  // namespace ekr
