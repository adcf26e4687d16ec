#include "ud4/group.hpp"

#include <cctype>

namespace ud4 {

namespace {

struct Relation {
  int i, j, k, sign;
};

constexpr std::array<Relation, 16> kRelations = {{
    {1, 3, 5, 1},   {1, 6, 8, 1},   {1, 7, 9, 1},   {1, 10, 11, 1},
    {2, 3, 6, 1},   {2, 5, 8, 1},   {2, 7, 10, 1},  {2, 9, 11, 1},
    {3, 4, 7, -1},  {3, 11, 12, 1}, {4, 5, 9, 1},   {4, 6, 10, 1},
    {4, 8, 11, 1},  {5, 10, 12, -1}, {6, 9, 12, -1}, {7, 8, 12, -1},
}};

constexpr std::array<std::array<int, 4>, kNumRoots> kRoots = {{
    {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1},
    {1, 0, 1, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}, {1, 1, 1, 0},
    {1, 0, 1, 1}, {0, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 2, 1},
}};

GraphAuto from_cycles(std::string name, std::initializer_list<std::initializer_list<int>> cycles) {
  GraphAuto g;
  g.name = std::move(name);
  for (int i = 0; i <= kNumRoots; ++i) g.perm[i] = i;
  for (const auto& cyc : cycles) {
    std::vector<int> c(cyc);
    for (std::size_t n = 0; n < c.size(); ++n) g.perm[c[n]] = c[(n + 1) % c.size()];
  }
  return g;
}

}  // namespace

GraphAuto GraphAuto::identity() { return from_cycles("id", {}); }
GraphAuto GraphAuto::tau() { return from_cycles("tau", {{1, 4, 2}, {5, 7, 6}, {8, 9, 10}}); }
GraphAuto GraphAuto::tau2() { return from_cycles("tau2", {{1, 2, 4}, {5, 6, 7}, {8, 10, 9}}); }
GraphAuto GraphAuto::sigma12() { return from_cycles("sigma12", {{1, 2}, {5, 6}, {9, 10}}); }
GraphAuto GraphAuto::sigma14() { return from_cycles("sigma14", {{1, 4}, {5, 7}, {8, 10}}); }
GraphAuto GraphAuto::sigma24() { return from_cycles("sigma24", {{2, 4}, {6, 7}, {8, 9}}); }

std::vector<GraphAuto> GraphAuto::all() { return {identity(), tau(), tau2(), sigma12(), sigma14(), sigma24()}; }

GraphAuto GraphAuto::inverse() const {
  GraphAuto g;
  g.name = name + "^-1";
  g.perm[0] = 0;
  for (int i = 1; i <= kNumRoots; ++i) g.perm[perm[i]] = i;
  return g;
}

RootData::RootData() {
  for (int i = 0; i < kNumRoots; ++i) {
    roots_[i].coeffs = kRoots[i];
    roots_[i].height = kRoots[i][0] + kRoots[i][1] + kRoots[i][2] + kRoots[i][3];
  }
  for (const auto& r : kRelations) {
    comm_[r.i - 1][r.j - 1] = {r.k, r.sign};
    comm_[r.j - 1][r.i - 1] = {r.k, -r.sign};
  }
  // The relation list and the root list must agree on which sums are roots.
  for (int i = 1; i <= kNumRoots; ++i) {
    for (int j = 1; j <= kNumRoots; ++j) {
      const int k = root_sum(i, j);
      const CommEntry& e = comm_[i - 1][j - 1];
      if (k != e.k) throw GroupError("commutator table disagrees with root sums");
    }
  }
}

const RootData& RootData::get() {
  static const RootData data;
  return data;
}

int RootData::root_sum(int i, int j) const {
  std::array<int, 4> s{};
  for (int n = 0; n < 4; ++n) s[n] = roots_[i - 1].coeffs[n] + roots_[j - 1].coeffs[n];
  for (int k = 0; k < kNumRoots; ++k) {
    if (roots_[k].coeffs == s) return k + 1;
  }
  return 0;
}

void RootData::validate(const GraphAuto& g) const {
  std::array<bool, kNumRoots + 1> seen{};
  for (int i = 1; i <= kNumRoots; ++i) {
    const int j = g(i);
    if (j < 1 || j > kNumRoots || seen[j]) throw GroupError(g.name + " is not a permutation of 1..12");
    seen[j] = true;
  }
  if (g(3) != 3 || g(11) != 11 || g(12) != 12) throw GroupError(g.name + " must fix 3, 11 and 12");
  for (int i = 1; i <= kNumRoots; ++i) {
    for (int j = 1; j <= kNumRoots; ++j) {
      const auto e = comm(i, j);
      const auto f = comm(g(i), g(j));
      if (e.has_value() != f.has_value() || (e && (g(e->k) != f->k || e->sign != f->sign))) {
        throw GroupError(g.name + " does not preserve the commutator relations");
      }
    }
  }
}

UGroup::UGroup(FieldPtr F) : F_(std::move(F)), R_(RootData::get()) {
  if (!F_) throw GroupError("group needs a field");
}

void UGroup::check(const UElement& x) const {
  if (x.ctx != F_.get()) throw GroupError("group element belongs to a different field");
}

UElement UGroup::identity() const {
  UElement e;
  e.ctx = F_.get();
  return e;
}

UElement UGroup::root_elem(int i, Fq t) const {
  if (i < 1 || i > kNumRoots) throw GroupError("root index " + std::to_string(i) + " out of range 1..12");
  if (!F_->valid(t)) throw GroupError("field element out of range");
  UElement e = identity();
  e.t(i) = t;
  return e;
}

UElement UGroup::from_coords(const std::array<Fq, kNumRoots>& t) const {
  UElement e = identity();
  for (auto c : t) {
    if (!F_->valid(c)) throw GroupError("field element out of range");
  }
  e.coord = t;
  return e;
}

// c <- c * x_b(u), with b the root at position `pos`. The tail g_j beyond pos
// is rewritten as g_j [g_j, x_b(u)] and multiplied back in, one syllable at a
// time. Positions at or beyond `cutoff` belong to M_i and are dropped.
void UGroup::collect(UElement& c, int pos, Fq u, int cutoff) const {
  if (u.is_zero() || pos >= cutoff) return;
  const FieldCtx& F = *F_;
  const int b = RootData::root_at(pos);

  std::array<int, kNumRoots> tail_root;
  std::array<Fq, kNumRoots> tail_val;
  int n = 0;
  for (int pp = pos + 1; pp < cutoff; ++pp) {
    const int r = RootData::root_at(pp);
    if (!c.t(r).is_zero()) {
      tail_root[n] = r;
      tail_val[n] = c.t(r);
      ++n;
      c.t(r) = kZero;
    }
  }
  c.t(b) = F.add(c.t(b), u);
  for (int m = 0; m < n; ++m) {
    const int r = tail_root[m];
    collect(c, RootData::position(r), tail_val[m], cutoff);
    if (const auto e = R_.comm(r, b)) {
      Fq w = F.mul(tail_val[m], u);
      if (e->sign < 0) w = F.neg(w);
      collect(c, RootData::position(e->k), w, cutoff);
    }
  }
}

int UGroup::quotient_length(int i) {
  if (i < 1 || i > 13) throw GroupError("subgroup index " + std::to_string(i) + " out of range 1..13");
  return i - 1;
}

UElement UGroup::truncate(const UElement& x, int i) {
  const int len = quotient_length(i);
  UElement r = x;
  for (int pp = len; pp < kNumRoots; ++pp) r.t(RootData::root_at(pp)) = kZero;
  return r;
}

bool UGroup::in_Mi(const UElement& x, int i) {
  const int len = quotient_length(i);
  for (int pp = 0; pp < len; ++pp) {
    if (!x.t(RootData::root_at(pp)).is_zero()) return false;
  }
  return true;
}

void UGroup::mul_root(UElement& c, int r, Fq u, int i) const {
  collect(c, RootData::position(r), u, quotient_length(i));
}

UElement UGroup::mul_mod(const UElement& x, const UElement& y, int i) const {
  check(x);
  check(y);
  const int cutoff = quotient_length(i);
  UElement c = x;
  for (int pp = 0; pp < cutoff; ++pp) collect(c, pp, y.t(RootData::root_at(pp)), cutoff);
  return c;
}

UElement UGroup::inv_mod(const UElement& x, int i) const {
  check(x);
  const int cutoff = quotient_length(i);
  UElement c = identity();
  for (int pp = cutoff - 1; pp >= 0; --pp) collect(c, pp, F_->neg(x.t(RootData::root_at(pp))), cutoff);
  return c;
}

UElement UGroup::conj(const UElement& x, const UElement& h) const { return mul(inv(h), mul(x, h)); }

UElement UGroup::commutator(const UElement& x, const UElement& y) const {
  return mul(mul(inv(x), inv(y)), mul(x, y));
}

UElement UGroup::apply_auto(const GraphAuto& g, const UElement& x) const {
  check(x);
  UElement r = identity();
  for (int i = 1; i <= kNumRoots; ++i) r.t(g(i)) = x.t(i);
  return r;
}

std::string UGroup::format(const UElement& x) const {
  std::string out;
  for (int pp = 0; pp < kNumRoots; ++pp) {
    const int r = RootData::root_at(pp);
    if (x.t(r).is_zero()) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(r) + "(" + std::to_string(x.t(r).v) + ")";
  }
  return out.empty() ? "1" : out;
}

UElement UGroup::parse(const std::string& s) const {
  std::string text;
  for (char ch : s) {
    if (!std::isspace(static_cast<unsigned char>(ch))) text.push_back(ch);
  }
  if (text.empty()) throw GroupError("empty element");
  UElement c = identity();
  if (text == "1") return c;
  std::size_t i = 0;
  auto fail = [&](const std::string& what) {
    throw GroupError("bad element syntax at offset " + std::to_string(i) + " in '" + s + "': " + what);
  };
  auto read_int = [&]() {
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start || i - start > 9) fail("expected a number");
    return static_cast<std::uint32_t>(std::stoul(text.substr(start, i - start)));
  };
  while (true) {
    if (i >= text.size() || text[i] != 'x') fail("expected 'x'");
    ++i;
    const std::uint32_t r = read_int();
    if (r < 1 || r > kNumRoots) fail("root index must be 1..12");
    if (i >= text.size() || text[i] != '(') fail("expected '('");
    ++i;
    const std::uint32_t v = read_int();
    if (v >= F_->q()) fail("field index " + std::to_string(v) + " out of range");
    if (i >= text.size() || text[i] != ')') fail("expected ')'");
    ++i;
    mul_root(c, static_cast<int>(r), Fq{v});
    if (i == text.size()) break;
    if (text[i] != '*') fail("expected '*'");
    ++i;
  }
  return c;
}

}  // namespace ud4
