#pragma once

// Finite fields F_q, q = p^a, in a polynomial basis.
//
// Elements are identified with their enumeration index: the element
// c_0 + c_1 x + ... + c_{a-1} x^{a-1} has index c_0 + c_1 p + ... + c_{a-1} p^{a-1}.
// Index 0 is zero and index 1 is one in every field.

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ud4 {

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raw field value: an enumeration index into its FieldCtx.
struct Fq {
  std::uint32_t v = 0;

  constexpr bool is_zero() const { return v == 0; }
  friend constexpr bool operator==(Fq, Fq) = default;
  friend constexpr auto operator<=>(Fq, Fq) = default;
};

inline constexpr Fq kZero{0};
inline constexpr Fq kOne{1};

/// Largest field order accepted.
inline constexpr std::uint32_t kMaxFieldOrder = 10000;

class FieldCtx {
 public:
  /// Builds F_{p^a}. Without `poly`, the smallest monic irreducible of degree a
  /// is used, where polynomials are ordered by the integer sum c_i p^i of their
  /// non-leading coefficients. `poly` lists coefficients from the constant
  /// term up to the leading 1.
  static std::shared_ptr<const FieldCtx> make(std::uint32_t p, std::uint32_t a,
                                              std::optional<std::vector<std::uint32_t>> poly = std::nullopt);

  std::uint32_t p() const { return p_; }
  std::uint32_t a() const { return a_; }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint32_t>& defining_poly() const { return poly_; }

  Fq add(Fq x, Fq y) const {
    if (!add_table_.empty()) return Fq{add_table_[x.v * q_ + y.v]};
    return add_digits(x, y);
  }
  Fq neg(Fq x) const { return Fq{neg_[x.v]}; }
  Fq sub(Fq x, Fq y) const { return add(x, neg(y)); }
  Fq mul(Fq x, Fq y) const {
    if (x.v == 0 || y.v == 0) return kZero;
    return Fq{exp_[log_[x.v] + log_[y.v]]};
  }
  /// Throws FieldError on zero.
  Fq inv(Fq x) const;
  Fq div(Fq x, Fq y) const { return mul(x, inv(y)); }
  Fq pow(Fq x, std::int64_t e) const;

  /// Absolute trace F_q -> F_p, returned as a residue 0..p-1.
  std::uint32_t trace(Fq x) const { return trace_[x.v]; }

  /// x^{-p}; the element a_phi attached to a under the standard character.
  Fq a_phi(Fq x) const;

  bool is_square(Fq x) const;

  /// The residue r of F_p, embedded in F_q.
  Fq from_int(std::int64_t r) const;

  /// Element with explicit polynomial coefficients (constant term first).
  Fq from_coeffs(const std::vector<std::uint32_t>& c) const;
  std::vector<std::uint32_t> coeffs(Fq x) const;

  bool valid(Fq x) const { return x.v < q_; }
  Fq element(std::uint32_t index) const;

  /// Root of the defining polynomial (the class of x).
  Fq generator() const;

  /// Multiplicative generator of F_q^x used by the log tables.
  Fq primitive() const { return Fq{exp_[1]}; }

  /// Smallest-index element of F_q outside image(map), for an additive map
  /// in characteristic 2 whose image has index 2.
  Fq nonimage_pick(const std::function<Fq(Fq)>& map) const;

  std::string describe() const;

 private:
  FieldCtx(std::uint32_t p, std::uint32_t a, std::vector<std::uint32_t> poly);
  Fq add_digits(Fq x, Fq y) const;
  Fq mul_poly(Fq x, Fq y) const;

  std::uint32_t p_, a_, q_;
  std::vector<std::uint32_t> poly_;
  std::vector<std::uint32_t> add_table_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;  // length 2(q-1), so log sums need no reduction
  std::vector<std::uint32_t> trace_;
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

bool is_prime(std::uint64_t n);

/// Irreducibility over F_p by trial division with every monic polynomial of
/// degree at most deg/2. Coefficients are listed constant term first.
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly);

/// Value type pairing a field value with its context. Arithmetic between
/// elements of different contexts throws FieldError.
class FieldElement {
 public:
  FieldElement(FieldPtr ctx, Fq v);
  FieldElement(FieldPtr ctx, std::uint32_t index) : FieldElement(std::move(ctx), Fq{index}) {}

  static FieldElement zero(FieldPtr ctx) { return {std::move(ctx), kZero}; }
  static FieldElement one(FieldPtr ctx) { return {std::move(ctx), kOne}; }

  const FieldCtx& ctx() const { return *ctx_; }
  const FieldPtr& ctx_ptr() const { return ctx_; }
  Fq raw() const { return v_; }
  std::uint32_t index() const { return v_.v; }
  bool is_zero() const { return v_.is_zero(); }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  std::uint32_t trace() const { return ctx_->trace(v_); }
  FieldElement a_phi() const { return {ctx_, ctx_->a_phi(v_)}; }

  bool operator==(const FieldElement& o) const { return ctx_.get() == o.ctx_.get() && v_ == o.v_; }

 private:
  void check_same(const FieldElement& o) const;

  FieldPtr ctx_;
  Fq v_;
};

}  // namespace ud4
