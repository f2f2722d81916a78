#include "ekr/gf.hpp"

#include <map>

#include "ekr/errors.hpp"

namespace ekr {

bool is_prime_power(int q, int* p_out, int* k_out) {
  if (q < 2) return false;
  for (int p = 2; p * p <= q; ++p) {
    if (q % p) continue;
    int k = 0, m = q;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    if (m != 1) return false;
    if (p_out) *p_out = p;
    if (k_out) *k_out = k;
    return true;
  }
  if (p_out) *p_out = q;
  if (k_out) *k_out = 1;
  return true;
}

namespace {

// x^k expressed in lower-degree terms, encoded base p (see header); chosen so
// that x generates the multiplicative group.
int reduction_encoding(int q) {
  switch (q) {
    case 4: return 3;    // x^2 = x + 1
    case 8: return 3;    // x^3 = x + 1
    case 9: return 7;    // x^2 = 2x + 1  (from x^2 + x + 2)
    case 16: return 3;   // x^4 = x + 1
    case 25: return 23;  // x^2 = 4x + 3  (from x^2 + x + 2)
    case 27: return 5;   // x^3 = x + 2   (from x^3 + 2x + 1)
    default: throw InvalidParameter("no field table for q = " + std::to_string(q));
  }
}

}  // namespace

GF::GF(int q) : q_(q) {
  if (!is_prime_power(q, &p_, &k_)) throw InvalidParameter("q is not a prime power");
  if (q > 31) throw InvalidParameter("field tables cover q <= 31 only");
  auto digits = [&](int v) {
    std::vector<int> d(k_);
    for (int i = 0; i < k_; ++i) {
      d[i] = v % p_;
      v /= p_;
    }
    return d;
  };
  auto encode = [&](const std::vector<int>& d) {
    int v = 0;
    for (int i = k_ - 1; i >= 0; --i) v = v * p_ + d[i];
    return v;
  };
  std::vector<int> xk;  // digits of x^k
  if (k_ > 1) xk = digits(reduction_encoding(q_));
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, -1);
  for (int a = 0; a < q_; ++a) {
    auto da = digits(a);
    for (int i = 0; i < k_; ++i) da[i] = (p_ - da[i]) % p_;
    neg_[a] = encode(da);
  }
  for (int a = 0; a < q_; ++a)
    for (int b = 0; b < q_; ++b) {
      auto da = digits(a), db = digits(b);
      std::vector<int> s(k_);
      for (int i = 0; i < k_; ++i) s[i] = (da[i] + db[i]) % p_;
      add_[a * q_ + b] = encode(s);
      // polynomial product, reduced by x^k = xk
      std::vector<int> prod(2 * k_ - 1, 0);
      for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      for (int d = 2 * k_ - 2; d >= k_; --d) {
        int c = prod[d];
        if (!c) continue;
        prod[d] = 0;
        for (int i = 0; i < k_; ++i) prod[d - k_ + i] = (prod[d - k_ + i] + c * xk[i]) % p_;
      }
      std::vector<int> low(prod.begin(), prod.begin() + k_);
      mul_[a * q_ + b] = encode(low);
    }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) inv_[a] = b;
  for (int a = 1; a < q_; ++a)
    if (inv_[a] < 0) throw InvalidParameter("field table inconsistent (no inverse)");
  // multiplicative generator: x itself for extension fields (the tables above
  // use primitive polynomials), smallest primitive element for prime fields
  auto order_of = [&](int a) {
    int o = 1, v = a;
    while (v != 1) {
      v = mul_[v * q_ + a];
      ++o;
    }
    return o;
  };
  if (k_ > 1) {
    gen_ = p_;  // the element x
    if (order_of(gen_) != q_ - 1) throw InvalidParameter("field polynomial is not primitive");
  } else {
    for (int a = 2; a < q_; ++a)
      if (order_of(a) == q_ - 1) {
        gen_ = a;
        break;
      }
    if (q_ == 2) gen_ = 1;
  }
}

int GF::inv(int a) const {
  if (a == 0) throw InvalidParameter("field inverse of zero");
  return inv_[a];
}

int GF::frobenius(int a) const { return pow(a, p_); }

int GF::pow(int a, long long e) const {
  int r = 1, b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

}  // namespace ekr
