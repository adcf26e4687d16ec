#include "ud4/ffield.hpp"

#include <sstream>

namespace ud4 {

namespace {

constexpr std::uint32_t kAddTableLimit = 1024;

// Remainder of num modulo the monic polynomial den over F_p, in place.
void poly_mod(std::vector<std::uint32_t>& num, const std::vector<std::uint32_t>& den, std::uint32_t p) {
  const std::size_t dd = den.size() - 1;
  while (num.size() > dd) {
    const std::uint32_t lead = num.back();
    const std::size_t shift = num.size() - 1 - dd;
    if (lead != 0) {
      for (std::size_t i = 0; i <= dd; ++i) {
        num[shift + i] = (num[shift + i] + p - (lead * den[i]) % p) % p;
      }
    }
    num.pop_back();
  }
}

std::vector<std::uint32_t> digits(std::uint64_t n, std::uint32_t p, std::uint32_t len) {
  std::vector<std::uint32_t> d(len);
  for (std::uint32_t i = 0; i < len; ++i) {
    d[i] = static_cast<std::uint32_t>(n % p);
    n /= p;
  }
  return d;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly) {
  if (poly.size() < 2 || poly.back() != 1) return false;
  const std::size_t deg = poly.size() - 1;
  for (std::size_t k = 1; k <= deg / 2; ++k) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t n = 0; n < count; ++n) {
      auto g = digits(n, p, static_cast<std::uint32_t>(k));
      g.push_back(1);
      auto r = poly;
      poly_mod(r, g, p);
      bool zero = true;
      for (auto c : r) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

FieldCtx::FieldCtx(std::uint32_t p, std::uint32_t a, std::vector<std::uint32_t> poly)
    : p_(p), a_(a), q_(1), poly_(std::move(poly)) {
  for (std::uint32_t i = 0; i < a_; ++i) q_ *= p_;

  neg_.resize(q_);
  for (std::uint32_t x = 0; x < q_; ++x) {
    auto d = coeffs(Fq{x});
    for (auto& c : d) c = (p_ - c) % p_;
    neg_[x] = from_coeffs(d).v;
  }
  if (q_ <= kAddTableLimit) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (std::uint32_t x = 0; x < q_; ++x) {
      for (std::uint32_t y = 0; y < q_; ++y) add_table_[x * q_ + y] = add_digits(Fq{x}, Fq{y}).v;
    }
  }

  // Log tables from the first primitive element in enumeration order.
  log_.assign(q_, 0);
  exp_.assign(2 * (q_ - 1) + 1, 0);
  const std::uint32_t order = q_ - 1;
  for (std::uint32_t cand = 1; cand < q_; ++cand) {
    std::uint32_t x = 1;
    std::uint32_t k = 0;
    do {
      x = mul_poly(Fq{x}, Fq{cand}).v;
      ++k;
    } while (x != 1 && k <= order);
    if (k != order) continue;
    x = 1;
    for (std::uint32_t e = 0; e < order; ++e) {
      exp_[e] = x;
      exp_[e + order] = x;
      log_[x] = e;
      x = mul_poly(Fq{x}, Fq{cand}).v;
    }
    exp_[2 * order] = 1;
    break;
  }

  trace_.resize(q_);
  for (std::uint32_t x = 0; x < q_; ++x) {
    Fq acc = kZero;
    Fq y{x};
    for (std::uint32_t i = 0; i < a_; ++i) {
      acc = add(acc, y);
      y = pow(y, p_);
    }
    if (acc.v >= p_) throw FieldError("trace left the prime field; defining polynomial is not irreducible");
    trace_[x] = acc.v;
  }
}

std::shared_ptr<const FieldCtx> FieldCtx::make(std::uint32_t p, std::uint32_t a,
                                               std::optional<std::vector<std::uint32_t>> poly) {
  if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
  if (a < 1) throw FieldError("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < a; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) {
      throw FieldError("field order exceeds the supported maximum of " + std::to_string(kMaxFieldOrder));
    }
  }
  std::vector<std::uint32_t> f;
  if (poly) {
    f = *poly;
    if (f.size() != a + 1) throw FieldError("defining polynomial must have degree " + std::to_string(a));
    for (auto c : f) {
      if (c >= p) throw FieldError("defining polynomial coefficient out of range");
    }
    if (f.back() != 1) throw FieldError("defining polynomial must be monic");
    if (!is_irreducible(p, f)) throw FieldError("defining polynomial is reducible");
  } else {
    for (std::uint64_t n = 0;; ++n) {
      f = digits(n, p, a);
      f.push_back(1);
      if (is_irreducible(p, f)) break;
    }
  }
  return std::shared_ptr<const FieldCtx>(new FieldCtx(p, a, std::move(f)));
}

Fq FieldCtx::add_digits(Fq x, Fq y) const {
  std::uint32_t r = 0;
  std::uint32_t place = 1;
  std::uint32_t xv = x.v;
  std::uint32_t yv = y.v;
  for (std::uint32_t i = 0; i < a_; ++i) {
    r += ((xv % p_ + yv % p_) % p_) * place;
    xv /= p_;
    yv /= p_;
    place *= p_;
  }
  return Fq{r};
}

Fq FieldCtx::mul_poly(Fq x, Fq y) const {
  const auto cx = coeffs(x);
  const auto cy = coeffs(y);
  std::vector<std::uint32_t> prod(2 * a_ - 1, 0);
  for (std::uint32_t i = 0; i < a_; ++i) {
    for (std::uint32_t j = 0; j < a_; ++j) prod[i + j] = (prod[i + j] + cx[i] * cy[j]) % p_;
  }
  poly_mod(prod, poly_, p_);
  prod.resize(a_, 0);
  return from_coeffs(prod);
}

Fq FieldCtx::inv(Fq x) const {
  if (x.is_zero()) throw FieldError("inverse of zero");
  return Fq{exp_[(q_ - 1 - log_[x.v]) % (q_ - 1)]};
}

Fq FieldCtx::pow(Fq x, std::int64_t e) const {
  if (x.is_zero()) {
    if (e < 0) throw FieldError("negative power of zero");
    return e == 0 ? kOne : kZero;
  }
  const std::int64_t order = q_ - 1;
  std::int64_t k = (static_cast<std::int64_t>(log_[x.v]) * (e % order)) % order;
  if (k < 0) k += order;
  return Fq{exp_[k]};
}

Fq FieldCtx::a_phi(Fq x) const {
  if (x.is_zero()) throw FieldError("a_phi is undefined at zero");
  return pow(x, -static_cast<std::int64_t>(p_));
}

bool FieldCtx::is_square(Fq x) const {
  if (x.is_zero() || p_ == 2) return true;
  return log_[x.v] % 2 == 0;
}

Fq FieldCtx::from_int(std::int64_t r) const {
  std::int64_t m = r % static_cast<std::int64_t>(p_);
  if (m < 0) m += p_;
  return Fq{static_cast<std::uint32_t>(m)};
}

Fq FieldCtx::from_coeffs(const std::vector<std::uint32_t>& c) const {
  std::uint32_t r = 0;
  std::uint32_t place = 1;
  for (std::uint32_t i = 0; i < a_; ++i) {
    const std::uint32_t ci = i < c.size() ? c[i] % p_ : 0;
    r += ci * place;
    place *= p_;
  }
  return Fq{r};
}

std::vector<std::uint32_t> FieldCtx::coeffs(Fq x) const { return digits(x.v, p_, a_); }

Fq FieldCtx::element(std::uint32_t index) const {
  if (index >= q_) {
    throw FieldError("element index " + std::to_string(index) + " out of range for F_" + std::to_string(q_));
  }
  return Fq{index};
}

Fq FieldCtx::generator() const {
  if (a_ == 1) return from_int(-static_cast<std::int64_t>(poly_[0]));
  return Fq{p_};
}

Fq FieldCtx::nonimage_pick(const std::function<Fq(Fq)>& map) const {
  if (p_ != 2) throw FieldError("non-image representatives are only used in characteristic 2");
  std::vector<bool> hit(q_, false);
  std::uint32_t count = 0;
  for (std::uint32_t t = 0; t < q_; ++t) {
    const Fq y = map(Fq{t});
    if (!hit[y.v]) {
      hit[y.v] = true;
      ++count;
    }
  }
  if (count == q_) throw FieldError("map is surjective; no non-image representative exists");
  if (2 * count != q_) throw FieldError("image of map does not have index 2");
  for (std::uint32_t t = 0; t < q_; ++t) {
    if (!hit[t]) return Fq{t};
  }
  throw FieldError("unreachable");
}

std::string FieldCtx::describe() const {
  std::ostringstream os;
  os << "F_" << q_ << " (p=" << p_ << ", a=" << a_ << ", poly=";
  bool first = true;
  for (std::size_t i = poly_.size(); i-- > 0;) {
    if (poly_[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (poly_[i] != 1 || i == 0) os << poly_[i];
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  os << ")";
  return os.str();
}

FieldElement::FieldElement(FieldPtr ctx, Fq v) : ctx_(std::move(ctx)), v_(v) {
  if (!ctx_) throw FieldError("field element without context");
  if (!ctx_->valid(v_)) throw FieldError("field element index out of range");
}

void FieldElement::check_same(const FieldElement& o) const {
  if (ctx_.get() != o.ctx_.get()) throw FieldError("field elements belong to different contexts");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {ctx_, ctx_->add(v_, o.v_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return {ctx_, ctx_->sub(v_, o.v_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {ctx_, ctx_->mul(v_, o.v_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return {ctx_, ctx_->div(v_, o.v_)};
}
FieldElement FieldElement::operator-() const { return {ctx_, ctx_->neg(v_)}; }
FieldElement FieldElement::inv() const { return {ctx_, ctx_->inv(v_)}; }

}  // namespace ud4
