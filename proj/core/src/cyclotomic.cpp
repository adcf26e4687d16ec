#include "ud4/cyclotomic.hpp"

#include <algorithm>

namespace ud4 {

std::string to_string(i128 v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  std::string s;
  while (u > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

i128 parse_i128(const std::string& s) {
  if (s.empty()) throw CyclotomicError("empty integer");
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw CyclotomicError("malformed integer '" + s + "'");
  i128 v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw CyclotomicError("malformed integer '" + s + "'");
    v = v * 10 + (s[i] - '0');
  }
  return neg ? -v : v;
}

CycBig to_big(const CycInt& x) {
  std::vector<mpz_class> c;
  c.reserve(x.coeffs().size());
  for (auto v : x.coeffs()) c.push_back(to_mpz(v));
  return CycBig(x.p(), std::move(c));
}

CycRational::CycRational(CycBig num, mpz_class den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw CyclotomicError("zero denominator");
  if (den_ < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  mpz_class g = den_;
  for (const auto& c : num_.coeffs()) g = gcd(g, c);
  if (g != 1) {
    std::vector<mpz_class> c = num_.coeffs();
    for (auto& x : c) x /= g;
    num_ = CycBig(num_.p(), std::move(c));
    den_ /= g;
  }
}

std::string CycRational::to_string() const {
  if (den_ == 1) return num_.to_string();
  return "(" + num_.to_string() + ")/" + den_.get_str();
}

CycAccumulator::CycAccumulator(std::uint32_t p)
    : p_(p), fast_(CycInt::dim(p), 0), slow_(CycInt::dim(p), 0) {}

void CycAccumulator::spill(std::size_t k) {
  slow_[k] += to_mpz(fast_[k]);
  fast_[k] = 0;
}

void CycAccumulator::add_product(const CycInt& a, const CycInt& b, i128 weight) {
  const CycInt prod = a * b;
  for (std::size_t k = 0; k < prod.coeffs().size(); ++k) {
    const i128 c = prod.coeffs()[k];
    if (c == 0) continue;
    i128 term;
    if (__builtin_mul_overflow(c, weight, &term)) {
      slow_[k] += to_mpz(c) * to_mpz(weight);
      continue;
    }
    i128 sum;
    if (__builtin_add_overflow(fast_[k], term, &sum)) {
      spill(k);
      fast_[k] = term;
    } else {
      fast_[k] = sum;
    }
  }
}

CycBig CycAccumulator::value() const {
  std::vector<mpz_class> c(slow_);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] += to_mpz(fast_[k]);
  return CycBig(p_, std::move(c));
}

CycInt phi(const FieldCtx& F, Fq x) { return CycInt::zeta_pow(F.p(), F.trace(x)); }

CycInt from_phi(const FieldElement& x) { return phi(x.ctx(), x.raw()); }

namespace {

template <class F>
CycInt sum_over(const FieldCtx& ctx, bool skip_zero, F&& arg) {
  CycInt r(ctx.p());
  for (std::uint32_t s = skip_zero ? 1 : 0; s < ctx.q(); ++s) r.add_zeta(ctx.trace(arg(Fq{s})), 1);
  return r;
}

void same_field(const FieldElement& x, const FieldElement& y) {
  if (&x.ctx() != &y.ctx()) throw FieldError("field elements belong to different contexts");
}

}  // namespace

CycInt gauss_quadratic(const FieldElement& c) {
  const FieldCtx& F = c.ctx();
  return sum_over(F, false, [&](Fq t) { return F.mul(c.raw(), F.mul(t, t)); });
}

CycInt kloosterman(const FieldElement& A, const FieldElement& B) {
  same_field(A, B);
  const FieldCtx& F = A.ctx();
  return sum_over(F, true, [&](Fq s) { return F.add(F.mul(A.raw(), s), F.div(B.raw(), s)); });
}

CycInt quad_linear_sum(const FieldElement& alpha, const FieldElement& beta) {
  same_field(alpha, beta);
  const FieldCtx& F = alpha.ctx();
  return sum_over(F, false, [&](Fq s) { return F.add(F.mul(alpha.raw(), F.mul(s, s)), F.mul(beta.raw(), s)); });
}

ExpSums::ExpSums(FieldPtr F)
    : F_(std::move(F)), gauss_(F_->q(), CycInt(F_->p())), gauss_done_(F_->q(), false) {}

CycInt ExpSums::from_counts(const std::vector<std::int64_t>& counts) const {
  CycInt r(F_->p());
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] != 0) r.add_zeta(static_cast<std::int64_t>(k), counts[k]);
  }
  return r;
}

const CycInt& ExpSums::gauss(Fq c) {
  if (!gauss_done_[c.v]) {
    const FieldCtx& F = *F_;
    std::vector<std::int64_t> counts(F.p(), 0);
    for (std::uint32_t t = 0; t < F.q(); ++t) ++counts[F.trace(F.mul(c, F.mul(Fq{t}, Fq{t})))];
    gauss_[c.v] = from_counts(counts);
    gauss_done_[c.v] = true;
  }
  return gauss_[c.v];
}

const CycInt& ExpSums::kloosterman(Fq A, Fq B) {
  const auto key = std::make_pair(A.v, B.v);
  auto it = kloosterman_.find(key);
  if (it != kloosterman_.end()) return it->second;
  const FieldCtx& F = *F_;
  std::vector<std::int64_t> counts(F.p(), 0);
  for (std::uint32_t s = 1; s < F.q(); ++s) ++counts[F.trace(F.add(F.mul(A, Fq{s}), F.div(B, Fq{s})))];
  return kloosterman_.emplace(key, from_counts(counts)).first->second;
}

const CycInt& ExpSums::quad_linear(Fq alpha, Fq beta) {
  const auto key = std::make_pair(alpha.v, beta.v);
  auto it = quad_linear_.find(key);
  if (it != quad_linear_.end()) return it->second;
  const FieldCtx& F = *F_;
  std::vector<std::int64_t> counts(F.p(), 0);
  for (std::uint32_t s = 0; s < F.q(); ++s) {
    const Fq x{s};
    ++counts[F.trace(F.add(F.mul(alpha, F.mul(x, x)), F.mul(beta, x)))];
  }
  return quad_linear_.emplace(key, from_counts(counts)).first->second;
}

}  // namespace ud4
