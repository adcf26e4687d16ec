#pragma once

// Exact arithmetic in Z[zeta_p].
//
// A value sum_k c_k zeta^k is stored in the basis zeta^0, ..., zeta^{p-2};
// zeta^{p-1} is eliminated with 1 + zeta + ... + zeta^{p-1} = 0, so equality is
// coefficient-wise. For p = 2 the basis is {1} and zeta = -1.

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ud4/ffield.hpp"

namespace ud4 {

using i128 = __int128;

std::string to_string(i128 v);
i128 parse_i128(const std::string& s);

inline double to_double(i128 v) { return static_cast<double>(v); }
inline double to_double(const mpz_class& v) { return v.get_d(); }
inline mpz_class to_mpz(i128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  mpz_class r = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
  r <<= 64;
  r += static_cast<unsigned long>(static_cast<std::uint64_t>(u));
  return neg ? mpz_class(-r) : r;
}
inline std::string coeff_string(i128 v) { return to_string(v); }
inline std::string coeff_string(const mpz_class& v) { return v.get_str(); }

class CyclotomicError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class Int>
class Cyclotomic {
 public:
  Cyclotomic() = default;
  explicit Cyclotomic(std::uint32_t p) : p_(p), c_(dim(p), Int(0)) {}
  Cyclotomic(std::uint32_t p, std::vector<Int> coeffs) : p_(p), c_(std::move(coeffs)) {
    if (c_.size() != dim(p)) throw CyclotomicError("coefficient vector has wrong length");
  }

  static std::size_t dim(std::uint32_t p) { return p == 2 ? 1 : p - 1; }

  static Cyclotomic zero(std::uint32_t p) { return Cyclotomic(p); }
  static Cyclotomic integer(std::uint32_t p, Int n) {
    Cyclotomic r(p);
    r.c_[0] = n;
    return r;
  }
  static Cyclotomic one(std::uint32_t p) { return integer(p, Int(1)); }
  static Cyclotomic zeta_pow(std::uint32_t p, std::int64_t k) {
    Cyclotomic r(p);
    r.add_zeta(k, Int(1));
    return r;
  }

  std::uint32_t p() const { return p_; }
  const std::vector<Int>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_) {
      if (x != 0) return false;
    }
    return true;
  }
  /// True when the value is a rational integer.
  bool is_integer() const {
    for (std::size_t i = 1; i < c_.size(); ++i) {
      if (c_[i] != 0) return false;
    }
    return true;
  }

  /// this += m * zeta^k
  void add_zeta(std::int64_t k, const Int& m) {
    const std::int64_t pp = p_;
    std::int64_t e = k % pp;
    if (e < 0) e += pp;
    if (p_ == 2) {
      if (e == 0) {
        c_[0] += m;
      } else {
        c_[0] -= m;
      }
      return;
    }
    if (e < pp - 1) {
      c_[e] += m;
    } else {
      for (auto& x : c_) x -= m;
    }
  }

  /// Multiplies by zeta^k.
  Cyclotomic mul_zeta(std::int64_t k) const {
    Cyclotomic r(p_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] != 0) r.add_zeta(static_cast<std::int64_t>(i) + k, c_[i]);
    }
    return r;
  }

  Cyclotomic& operator+=(const Cyclotomic& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Cyclotomic& operator-=(const Cyclotomic& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Cyclotomic operator-() const {
    Cyclotomic r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }

  Cyclotomic scale(const Int& n) const {
    Cyclotomic r(*this);
    for (auto& x : r.c_) x *= n;
    return r;
  }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    a.check(b);
    const std::uint32_t p = a.p_;
    if (p == 2) return integer(2, a.c_[0] * b.c_[0]);
    std::vector<Int> full(p, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j] == 0) continue;
        full[(i + j) % p] += a.c_[i] * b.c_[j];
      }
    }
    return from_full(p, std::move(full));
  }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  /// Complex conjugation zeta -> zeta^{-1}.
  Cyclotomic conj() const {
    if (p_ == 2) return *this;
    std::vector<Int> full(p_, Int(0));
    for (std::size_t k = 0; k < c_.size(); ++k) full[(p_ - k) % p_] = c_[k];
    return from_full(p_, std::move(full));
  }

  bool operator==(const Cyclotomic& o) const { return p_ == o.p_ && c_ == o.c_; }

  std::complex<double> to_complex() const {
    std::complex<double> z{0.0, 0.0};
    const double two_pi = 6.283185307179586476925286766559;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      const double ang = two_pi * static_cast<double>(k) / static_cast<double>(p_);
      z += to_double(c_[k]) * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return z;
  }

  /// Readable form in powers of z = zeta_p, e.g. "1+2z", "-1-z^2", "0".
  std::string to_string() const {
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      std::string num = coeff_string(c_[k]);
      const bool neg = num[0] == '-';
      if (neg) num = num.substr(1);
      if (!out.empty() || neg) out += neg ? "-" : "+";
      if (k == 0) {
        out += num;
      } else {
        if (num != "1") out += num;
        out += "z";
        if (k > 1) out += "^" + std::to_string(k);
      }
    }
    return out.empty() ? "0" : out;
  }

 private:
  void check(const Cyclotomic& o) const {
    if (p_ != o.p_) throw CyclotomicError("cyclotomic values over different primes");
  }
  static Cyclotomic from_full(std::uint32_t p, std::vector<Int> full) {
    Cyclotomic r(p);
    const Int top = full[p - 1];
    for (std::size_t i = 0; i + 1 < p; ++i) r.c_[i] = full[i] - top;
    return r;
  }

  std::uint32_t p_ = 0;
  std::vector<Int> c_;
};

using CycInt = Cyclotomic<i128>;
using CycBig = Cyclotomic<mpz_class>;

CycBig to_big(const CycInt& x);

/// numerator / denominator with gcd(content(numerator), denominator) = 1.
class CycRational {
 public:
  CycRational(CycBig num, mpz_class den);
  const CycBig& numerator() const { return num_; }
  const mpz_class& denominator() const { return den_; }
  bool is_integer() const { return den_ == 1 && num_.is_integer(); }
  bool equals_integer(long n) const { return is_integer() && num_.coeffs()[0] == n; }
  bool operator==(const CycRational& o) const { return num_ == o.num_ && den_ == o.den_; }
  std::string to_string() const;

 private:
  CycBig num_;
  mpz_class den_;
};

/// Exact sum of products accumulated without overflow: terms are collected in
/// 128-bit registers and spilled into GMP integers before they can overflow.
class CycAccumulator {
 public:
  explicit CycAccumulator(std::uint32_t p);
  /// this += weight * a * b
  void add_product(const CycInt& a, const CycInt& b, i128 weight);
  CycBig value() const;

 private:
  void spill(std::size_t k);

  std::uint32_t p_;
  std::vector<i128> fast_;
  std::vector<mpz_class> slow_;
};

/// phi(x) = exp(2 pi i Tr(x) / p).
CycInt phi(const FieldCtx& F, Fq x);
CycInt from_phi(const FieldElement& x);

/// sum_{t in F_q} phi(c t^2), by direct summation.
CycInt gauss_quadratic(const FieldElement& c);
/// sum_{s in F_q^x} phi(A s + B / s), by direct summation.
CycInt kloosterman(const FieldElement& A, const FieldElement& B);
/// sum_{s in F_q} phi(alpha s^2 + beta s), by direct summation.
CycInt quad_linear_sum(const FieldElement& alpha, const FieldElement& beta);

/// Memoized exponential sums over one field.
class ExpSums {
 public:
  explicit ExpSums(FieldPtr F);

  const FieldCtx& field() const { return *F_; }
  const CycInt& gauss(Fq c);
  const CycInt& kloosterman(Fq A, Fq B);
  const CycInt& quad_linear(Fq alpha, Fq beta);

 private:
  CycInt from_counts(const std::vector<std::int64_t>& counts) const;

  FieldPtr F_;
  std::vector<CycInt> gauss_;
  std::vector<bool> gauss_done_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, CycInt> kloosterman_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, CycInt> quad_linear_;
};

}  // namespace ud4
