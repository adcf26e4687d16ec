#include "ud4/oracle.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "ud4/classes.hpp"

namespace ud4 {

namespace {

std::uint64_t checked_pow(std::uint64_t q, int k, std::uint64_t cap, const std::string& what) {
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) {
    r *= q;
    if (r > cap) throw OracleError(what + " exceeds the oracle cap of " + std::to_string(cap) + " elements");
  }
  return r;
}

std::uint64_t digits_index(const UElement& x, std::uint64_t q) {
  std::uint64_t idx = 0;
  for (int pos = kNumRoots - 1; pos >= 0; --pos) idx = idx * q + x.t(RootData::root_at(pos)).v;
  return idx;
}

Fq linear_form(const FieldCtx& F, const std::vector<std::pair<int, Fq>>& form, const UElement& x) {
  Fq s = kZero;
  for (const auto& [r, c] : form) s = F.add(s, F.mul(c, x.t(r)));
  return s;
}

bool in_pattern(const UElement& x, const std::vector<int>& roots) {
  for (int r = 1; r <= kNumRoots; ++r) {
    if (x.t(r).is_zero()) continue;
    if (std::find(roots.begin(), roots.end(), r) == roots.end()) return false;
  }
  return true;
}

std::vector<UElement> pattern_generators(const UGroup& G, const std::vector<int>& roots) {
  std::vector<UElement> gens;
  for (int r : roots) {
    for (std::uint32_t s = 1; s < G.field().q(); ++s) gens.push_back(G.root_elem(r, Fq{s}));
  }
  return gens;
}

Fq get(const CharLabel& l, const std::string& name) {
  for (const auto& [n, v] : l.params) {
    if (n == name) return v;
  }
  return kZero;
}

// Subgroup prod_{r in roots} X_r of U/M_level with lambda = phi(sum c_r t_r).
Construction pattern(const UGroup& G, std::string description, int level, std::vector<int> roots,
                     std::vector<std::pair<int, Fq>> form, std::vector<int> transversal) {
  Construction c;
  c.description = std::move(description);
  c.level = level;
  c.generators = pattern_generators(G, roots);
  const FieldCtx* F = &G.field();
  c.lambda = [F, roots, form](const UElement& x) -> std::optional<CycInt> {
    if (!in_pattern(x, roots)) return std::nullopt;
    return phi(*F, linear_form(*F, form, x));
  };
  c.transversal_roots = std::move(transversal);
  return c;
}

}  // namespace

GroupTable::GroupTable(const UGroup& G, int level, std::uint64_t cap)
    : G_(G), level_(level), length_(UGroup::quotient_length(level)) {
  if (level < 1 || level > 13) throw OracleError("quotient index must be 1..13");
  size_ = checked_pow(G.field().q(), length_, cap, "U/M_" + std::to_string(level));
}

std::uint64_t GroupTable::index(const UElement& x) const { return digits_index(UGroup::truncate(x, level_), G_.field().q()); }

UElement GroupTable::element(std::uint64_t idx) const {
  if (idx >= size_) throw OracleError("element index out of range");
  UElement x = G_.identity();
  const std::uint64_t q = G_.field().q();
  for (int pos = 0; pos < length_; ++pos) {
    x.t(RootData::root_at(pos)) = Fq{static_cast<std::uint32_t>(idx % q)};
    idx /= q;
  }
  return x;
}

UElement GroupTable::conj(const UElement& x, const UElement& h) const { return mul(inv(h), mul(x, h)); }

OracleClassPartition orbit_classes(const GroupTable& tbl) {
  const UGroup& G = tbl.group();
  const std::uint32_t q = G.field().q();
  const int length = UGroup::quotient_length(tbl.level());
  std::vector<UElement> gens, gens_inv;
  for (int pos = 0; pos < length; ++pos) {
    for (std::uint32_t s = 1; s < q; ++s) {
      gens.push_back(G.root_elem(RootData::root_at(pos), Fq{s}));
      gens_inv.push_back(tbl.inv(gens.back()));
    }
  }

  constexpr std::uint32_t kUnseen = ~0u;
  OracleClassPartition part;
  part.class_of.assign(tbl.size(), kUnseen);
  std::vector<std::uint64_t> stack;
  for (std::uint64_t start = 0; start < tbl.size(); ++start) {
    if (part.class_of[start] != kUnseen) continue;
    const auto id = static_cast<std::uint32_t>(part.size.size());
    part.class_of[start] = id;
    std::uint64_t count = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      const UElement x = tbl.element(stack.back());
      stack.pop_back();
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const std::uint64_t y = tbl.index(tbl.mul(gens_inv[k], tbl.mul(x, gens[k])));
        if (part.class_of[y] == kUnseen) {
          part.class_of[y] = id;
          ++count;
          stack.push_back(y);
        }
      }
    }
    part.size.push_back(count);
    part.representative.push_back(start);
  }
  return part;
}

Construction construction_for(const UGroup& G, const CharLabel& label) {
  const FieldCtx& F = G.field();
  const std::string& f = label.family;
  auto a = [&](const std::string& n) { return get(label, n); };

  const bool via_tau = f == "F9q3" || f == "F9q2" || f == "F910q3" || f == "F910q2";
  const bool via_tau2 = f == "F10q3" || f == "F10q2" || f == "F810q3" || f == "F810q2";
  if (via_tau || via_tau2) {
    const GraphAuto g = via_tau ? GraphAuto::tau() : GraphAuto::tau2();
    const GraphAuto gi = g.inverse();
    CharLabel base;
    // Base family: F8* or F89*, with parameter subscripts moved back by g.
    base.family = (f.rfind("F9q", 0) == 0 || f.rfind("F10q", 0) == 0) ? "F8" + f.substr(f.find('q'))
                                                                     : "F89" + f.substr(f.find('q'));
    for (const auto& [n, v] : label.params) base.params.emplace_back(n.substr(0, 1) + std::to_string(gi(std::stoi(n.substr(1)))), v);
    Construction c = construction_for(G, base);
    c.description = label.family + " as the image of " + c.description;
    c.transport = g;
    return c;
  }

  if (f == "Flin") {
    Construction c = pattern(G, "Flin on U/M5", 5, {1, 2, 3, 4}, {}, {});
    c.lin = {a("b1"), a("b2"), a("b3"), a("b4")};
    return c;
  }
  if (f == "F567" || f == "F56" || f == "F57" || f == "F67" || f == "F5" || f == "F6" || f == "F7") {
    Construction c = pattern(G, "F567* on U/M8", 8, {1, 2, 4, 5, 6, 7}, {{5, a("a5")}, {6, a("a6")}, {7, a("a7")}}, {3});
    c.lin = {a("b1"), a("b2"), kZero, a("b4")};
    return c;
  }
  if (f == "F89q3" || f == "F8q3") {
    return pattern(G, "F89q3 on U/M10", 10, {3, 5, 6, 7, 8, 9},
                   {{6, a("a6")}, {7, a("a7")}, {8, a("a8")}, {9, a("a9")}}, {1, 2, 4});
  }
  if (f == "F89q2" || f == "F8q2") {
    Construction c = pattern(G, "F89q2 on U/M10", 10, {2, 3, 4, 6, 7, 8, 9}, {{8, a("a8")}, {9, a("a9")}}, {1, 5});
    c.lin = {kZero, a("b2"), a("b3"), a("b4")};
    return c;
  }
  if (f == "F8910" || f == "F8910q3") {
    Construction c = pattern(G, f + " on U/M11", 11, {3, 5, 6, 7, 8, 9, 10},
                             {{8, a("a8")}, {9, a("a9")}, {10, a("a10")}}, {1, 2, 4});
    c.lin = {kZero, kZero, a("b3"), kZero};
    return c;
  }
  if (f == "F8910q3/2") {
    const Fq a8 = a("a8"), a9 = a("a9"), a10 = a("a10"), a5 = a("a567");
    const std::vector<int> roots = {3, 5, 6, 7, 8, 9, 10};
    const std::vector<std::pair<int, Fq>> form = {{5, F.mul(F.mul(a8, a9), a5)},
                                                  {6, F.mul(F.mul(a8, a10), a5)},
                                                  {7, F.mul(F.mul(a9, a10), a5)},
                                                  {8, a8},
                                                  {9, a9},
                                                  {10, a10}};
    Construction c;
    c.description = "F8910q3/2 on U/M11";
    c.level = 11;
    c.generators = pattern_generators(G, roots);
    UElement y = G.identity();
    G.mul_root(y, 1, F.mul(a10, a5));
    G.mul_root(y, 2, F.mul(a9, a5));
    G.mul_root(y, 4, F.mul(a8, a5));
    c.generators.push_back(y);
    const UElement y_inv = G.inv_mod(y, 11);
    const bool negate = get(label, "d124").v != 0;
    const UGroup* Gp = &G;
    c.lambda = [Gp, roots, form, y, y_inv, negate](const UElement& x) -> std::optional<CycInt> {
      const FieldCtx& F = Gp->field();
      if (in_pattern(x, roots)) return phi(F, linear_form(F, form, x));
      if (x.t(1) != y.t(1) || x.t(2) != y.t(2) || x.t(4) != y.t(4)) return std::nullopt;
      const UElement v = Gp->mul_mod(y_inv, x, 11);
      if (!in_pattern(v, roots)) return std::nullopt;
      const CycInt val = phi(F, linear_form(F, form, v));
      return negate ? -val : val;
    };
    c.transversal_roots = {1, 2, 4};
    c.lin = {kZero, kZero, a("d3"), kZero};
    return c;
  }
  if (f == "F11") {
    Construction c = pattern(G, "F11 on U/M12", 12, {3, 5, 6, 7, 8, 9, 10, 11},
                             {{5, a("b5")}, {6, a("b6")}, {7, a("b7")}, {11, a("a11")}}, {1, 2, 4});
    c.lin = {kZero, kZero, a("b3"), kZero};
    return c;
  }
  if (f == "F12") {
    Construction c = pattern(G, "F12 on U", 13, {1, 2, 4, 8, 9, 10, 11, 12}, {{12, a("a12")}}, {3, 5, 6, 7});
    c.lin = {a("b1"), a("b2"), kZero, a("b4")};
    return c;
  }
  throw OracleError("no construction for family " + f);
}

InducedCharacter::InducedCharacter(const UGroup& G, Construction c, std::uint64_t cap) : G_(G), c_(std::move(c)) {
  const FieldCtx& F = G.field();
  const std::uint64_t q = F.q();
  const int level = c_.level;
  const std::uint64_t order = checked_pow(q, UGroup::quotient_length(level), ~0ull, "quotient");

  // K by closure under right multiplication with the generators.
  std::unordered_set<std::uint64_t> seen;
  std::vector<UElement> K{G.identity()};
  seen.insert(digits_index(K[0], q));
  for (std::size_t i = 0; i < K.size(); ++i) {
    for (const auto& g : c_.generators) {
      const UElement y = G.mul_mod(K[i], g, level);
      if (seen.insert(digits_index(y, q)).second) {
        K.push_back(y);
        if (K.size() > cap) throw OracleError("subgroup exceeds the oracle cap");
      }
    }
  }
  k_order_ = K.size();

  for (const auto& g : c_.generators) {
    if (!c_.lambda(g)) throw OracleError(c_.description + ": lambda undefined on a generator");
  }
  for (const auto& k : K) {
    const auto lk = c_.lambda(k);
    if (!lk) throw OracleError(c_.description + ": lambda undefined on the subgroup");
    for (const auto& g : c_.generators) {
      const auto lkg = c_.lambda(G.mul_mod(k, g, level));
      if (!lkg || !(*lkg == *lk * *c_.lambda(g))) throw OracleError(c_.description + ": lambda is not a homomorphism");
    }
  }

  xs_.push_back(G.identity());
  for (int r : c_.transversal_roots) {
    std::vector<UElement> next;
    for (const auto& x : xs_) {
      for (std::uint32_t s = 0; s < q; ++s) {
        UElement y = x;
        G.mul_root(y, r, Fq{s}, level);
        next.push_back(y);
      }
    }
    xs_ = std::move(next);
    if (xs_.size() > cap) throw OracleError("transversal exceeds the oracle cap");
  }

  // Every right coset K x must be hit equally often by X.
  std::vector<UElement> xinv;
  for (const auto& x : xs_) xinv.push_back(G.inv_mod(x, level));
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    std::uint64_t m = 0;
    for (std::size_t j = 0; j < xs_.size(); ++j) {
      if (seen.count(digits_index(G.mul_mod(xs_[i], xinv[j], level), q))) ++m;
    }
    if (i == 0) mult_ = m;
    if (m != mult_) throw OracleError(c_.description + ": X does not cover the cosets of K uniformly");
  }
  if (xs_.size() / mult_ * k_order_ != order || xs_.size() % mult_ != 0) {
    throw OracleError(c_.description + ": X does not cover U/M_" + std::to_string(level));
  }
}

CycInt InducedCharacter::value(const UElement& h) const {
  const FieldCtx& F = G_.field();
  const int level = c_.level;
  const UElement g_h = G_.apply_auto(c_.transport.inverse(), h);
  const UElement hh = UGroup::truncate(g_h, level);
  CycInt acc(F.p());
  for (const auto& x : xs_) {
    // x h x^{-1} = (x^{-1})^{-1} h x^{-1}
    const UElement y = G_.mul_mod(G_.mul_mod(x, hh, level), G_.inv_mod(x, level), level);
    if (auto v = c_.lambda(y)) acc += *v;
  }
  std::vector<i128> coeffs = acc.coeffs();
  for (auto& v : coeffs) {
    if (v % static_cast<i128>(mult_) != 0) throw OracleError(c_.description + ": induced value not divisible by coset multiplicity");
    v /= static_cast<i128>(mult_);
  }
  Fq lin = kZero;
  for (int i = 0; i < 4; ++i) lin = F.add(lin, F.mul(c_.lin[i], g_h.t(i + 1)));
  return phi(F, lin) * CycInt(F.p(), std::move(coeffs));
}

std::vector<CycInt> induce_linear(const UGroup& G, const Construction& c, const std::vector<UElement>& at) {
  InducedCharacter ind(G, c);
  std::vector<CycInt> out;
  out.reserve(at.size());
  for (const auto& h : at) out.push_back(ind.value(h));
  return out;
}

CycRational inner_product(const std::vector<CycInt>& chi, const std::vector<CycInt>& psi,
                          const std::vector<mpz_class>& sizes, const mpz_class& order) {
  if (chi.empty() || chi.size() != psi.size() || chi.size() != sizes.size()) {
    throw OracleError("inner product needs values on one full class system");
  }
  CycBig acc(chi[0].p());
  for (std::size_t i = 0; i < chi.size(); ++i) {
    const CycBig term = to_big(chi[i] * psi[i].conj());
    acc += term.scale(sizes[i]);
  }
  return CycRational(acc, order);
}

}  // namespace ud4

namespace ud4 {

OracleReport certify_with_oracle(const UGroup& G, std::uint64_t cap) {
  OracleReport rep;
  constexpr std::size_t kMaxProblems = 10;
  auto problem = [&](std::string s) {
    if (rep.problems.size() < kMaxProblems) rep.problems.push_back(std::move(s));
  };

  const GroupTable tbl(G, 13, cap);
  rep.group_order = tbl.size();
  const OracleClassPartition part = orbit_classes(tbl);
  const auto reps = enumerate_class_reps(G);
  rep.oracle_classes = part.count();
  rep.listed_classes = reps.size();

  rep.classes_ok = part.count() == reps.size();
  if (!rep.classes_ok) problem("oracle finds " + std::to_string(part.count()) + " classes, the list has " + std::to_string(reps.size()));
  std::vector<bool> hit(part.count(), false);
  std::vector<mpz_class> sizes;
  for (const auto& r : reps) {
    const std::uint32_t id = part.class_of[tbl.index(r.rep)];
    sizes.emplace_back(static_cast<unsigned long>(part.size[id]));
    if (hit[id]) {
      rep.classes_ok = false;
      problem("representative " + G.format(r.rep) + " of " + r.family + " is conjugate to an earlier one");
    }
    hit[id] = true;
    if (r.class_size != sizes.back() || r.centralizer_order * sizes.back() != mpz_class(static_cast<unsigned long>(tbl.size()))) {
      rep.classes_ok = false;
      problem("class of " + G.format(r.rep) + " has size " + std::to_string(part.size[id]) + ", listed " + r.class_size.get_str());
    }
  }

  CharEvaluator ev(G);
  std::mt19937_64 rng(12);
  rep.characters_ok = true;
  rep.irreducible_ok = true;
  const mpz_class order(static_cast<unsigned long>(tbl.size()));
  for (const auto& label : enumerate_chars(G.field())) {
    const InducedCharacter ind(G, construction_for(G, label), cap);
    std::vector<CycInt> values;
    values.reserve(reps.size());
    for (const auto& r : reps) {
      values.push_back(ind.value(r.rep));
      ++rep.cells_checked;
      CycInt v;
      try {
        v = ev.value(label, r.rep);
      } catch (const ShapeError&) {
        rep.characters_ok = false;
        problem(label.to_string() + " has no formula at " + G.format(r.rep));
        continue;
      }
      if (!(v == values.back())) {
        rep.characters_ok = false;
        problem(label.to_string() + " at " + G.format(r.rep) + ": formula " + v.to_string() + ", induced " +
                values.back().to_string());
      }
      // A random conjugate may fall outside the covered shapes; skip it then.
      const UElement h = tbl.element(rng() % tbl.size());
      try {
        const CycInt w = ev.value(label, G.conj(r.rep, h));
        ++rep.class_function_checks;
        if (!(w == v)) {
          rep.characters_ok = false;
          problem(label.to_string() + " is not constant on the class of " + G.format(r.rep));
        }
      } catch (const ShapeError&) {
      }
    }
    const CycRational norm = inner_product(values, values, sizes, order);
    if (!norm.equals_integer(1)) {
      rep.irreducible_ok = false;
      problem("<chi, chi> = " + norm.to_string() + " for " + label.to_string());
    }
  }
  return rep;
}

}  // namespace ud4
