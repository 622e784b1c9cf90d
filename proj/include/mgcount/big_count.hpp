#pragma once

#include <gmpxx.h>

#include <cassert>
#include <string>
#include <utility>

#include "mgcount/types.hpp"

namespace mgcount {

// Exact nonnegative integer count. Wraps a GMP integer but exposes only the
// operations counting needs; in particular there is no subtraction, so a
// negative count is not constructible.
class BigCount {
 public:
  BigCount() = default;
  BigCount(unsigned long x) : v_(x) {}  // NOLINT: implicit from count literals
  explicit BigCount(const mpz_class& x) : v_(x) { assert(sgn(v_) >= 0); }

  static BigCount from_decimal(const std::string& s) {
    mpz_class v(s, 10);
    if (sgn(v) < 0) throw std::invalid_argument("count cannot be negative: " + s);
    return BigCount(v);
  }

  bool is_zero() const { return mpz_sgn(v_.get_mpz_t()) == 0; }
  void set_zero() { v_ = 0; }
  void set_one() { v_ = 1; }

  BigCount& operator+=(const BigCount& o) {
    v_ += o.v_;
    return *this;
  }
  BigCount& operator*=(const BigCount& o) {
    v_ *= o.v_;
    return *this;
  }
  friend BigCount operator+(BigCount a, const BigCount& b) { return a += b; }
  friend BigCount operator*(BigCount a, const BigCount& b) { return a *= b; }

  // *this += a * b without a temporary; the hot operation of the fill loops.
  void add_mul(const BigCount& a, const BigCount& b) {
    mpz_addmul(v_.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
  }

  friend bool operator==(const BigCount& a, const BigCount& b) { return a.v_ == b.v_; }
  friend bool operator!=(const BigCount& a, const BigCount& b) { return a.v_ != b.v_; }
  friend bool operator<(const BigCount& a, const BigCount& b) { return a.v_ < b.v_; }
  friend bool operator<=(const BigCount& a, const BigCount& b) { return a.v_ <= b.v_; }
  friend bool operator>(const BigCount& a, const BigCount& b) { return a.v_ > b.v_; }
  friend bool operator>=(const BigCount& a, const BigCount& b) { return a.v_ >= b.v_; }

  std::string to_decimal() const { return v_.get_str(); }

  unsigned long to_ulong() const {
    assert(mpz_fits_ulong_p(v_.get_mpz_t()));
    return mpz_get_ui(v_.get_mpz_t());
  }

  const mpz_class& raw() const { return v_; }

  // Advances f = C(base + p - 2, p - 1) to C(base + p - 1, p) by one
  // multiply-then-exact-divide step. The product is always divisible by p
  // when f really is the previous coefficient; anything else is a hard error.
  friend void multiset_coefficient_step_inplace(BigCount& f, const BigCount& base,
                                                unsigned long p, BigCount& tmp) {
    if (p == 0) throw InternalError("multiset coefficient step needs p >= 1");
    mpz_add_ui(tmp.v_.get_mpz_t(), base.v_.get_mpz_t(), p - 1);
    mpz_mul(f.v_.get_mpz_t(), f.v_.get_mpz_t(), tmp.v_.get_mpz_t());
    unsigned long rem = mpz_tdiv_q_ui(f.v_.get_mpz_t(), f.v_.get_mpz_t(), p);
    if (rem != 0) throw InternalError("multiset coefficient step: inexact division");
  }

 private:
  mpz_class v_;
};

inline const BigCount kZeroCount{};

// C(base + p - 1, p): number of multisets of size p drawn from `base` kinds.
// 1 when p = 0 (the empty selection), 0 when base = 0 and p >= 1.
inline BigCount multiset_coefficient(const BigCount& base, unsigned long p) {
  if (p == 0) return BigCount(1ul);
  if (base.is_zero()) return BigCount();
  mpz_class n = base.raw() + static_cast<unsigned long>(p - 1);
  mpz_class r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), p);
  return BigCount(r);
}

// Incremental form: multiset_coefficient(base, p) from its p-1 predecessor,
// as (f_prev * (base + p - 1)) / p with the multiplication done first.
inline BigCount multiset_coefficient_step(const BigCount& f_prev, const BigCount& base,
                                          unsigned long p) {
  BigCount f = f_prev;
  BigCount tmp;
  multiset_coefficient_step_inplace(f, base, p, tmp);
  return f;
}

}  // namespace mgcount
