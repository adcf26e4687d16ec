#include "ud4/characters.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace ud4 {

namespace {

using Cond = std::vector<std::pair<std::string, std::string>>;

struct FamilyDef {
  CharFamily info;
  std::vector<Cond> conditions;
};

mpz_class qpow(const mpz_class& q, unsigned k) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), q.get_mpz_t(), k);
  return r;
}

std::vector<std::string> words(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

FamilyDef def(std::string name, const std::string& params, int qm1, int qk, int deg, std::vector<Cond> conds = {}) {
  FamilyDef d;
  d.info.name = std::move(name);
  d.info.params = words(params);
  std::string f;
  if (qk == 1) f += "q";
  if (qk > 1) f += "q^" + std::to_string(qk);
  if (qm1 == 1) f += "(q-1)";
  if (qm1 > 1) f += "(q-1)^" + std::to_string(qm1);
  d.info.count_formula = f;
  d.info.count = [qm1, qk](const mpz_class& q) { return mpz_class(qpow(q - 1, qm1) * qpow(q, qk)); };
  d.info.degree_exp = deg;
  d.conditions = std::move(conds);
  return d;
}

std::vector<FamilyDef> family_defs(std::uint32_t p) {
  const bool two = p == 2;
  std::vector<FamilyDef> fs;
  fs.push_back(def("F12", "a12 b1 b2 b4", 1, 3, 4));
  fs.push_back(def("F11", "a11 b5 b6 b7 b3", 1, 4, 3));
  if (two) {
    fs.push_back(def("F8910q3", "a8 a9 a10", 3, 0, 3));
    FamilyDef half = def("F8910q3/2", "a8 a9 a10 a567 d124 d3", 4, 0, 3);
    half.info.count_formula = "4(q-1)^4";
    half.info.count = [](const mpz_class& q) { return mpz_class(4 * qpow(q - 1, 4)); };
    half.info.half_degree = true;
    fs.push_back(std::move(half));
    fs.push_back(def("F89q3", "a8 a9 a7", 3, 0, 3));
    fs.push_back(def("F89q2", "a8 a9 b3 b4", 2, 2, 2));
    fs.push_back(def("F810q3", "a8 a10 a5", 3, 0, 3));
    fs.push_back(def("F810q2", "a8 a10 b1 b3", 2, 2, 2));
    fs.push_back(def("F910q3", "a9 a10 a6", 3, 0, 3));
    fs.push_back(def("F910q2", "a9 a10 b2 b3", 2, 2, 2));
  } else {
    fs.push_back(def("F8910", "a8 a9 a10 b3", 3, 1, 3));
    fs.push_back(def("F89q3", "a8 a9 a6 a7", 3, 0, 3, {{{"a6", "a8"}, {"a7", "a9"}}}));
    fs.push_back(def("F89q2", "a8 a9 b2 b3 b4", 2, 2, 2, {{{"b2", "a8"}, {"b4", "a9"}}}));
    fs.push_back(def("F810q3", "a8 a10 a5 a7", 3, 0, 3, {{{"a5", "a8"}, {"a7", "a10"}}}));
    fs.push_back(def("F810q2", "a8 a10 b1 b3 b4", 2, 2, 2, {{{"b1", "a8"}, {"b4", "a10"}}}));
    fs.push_back(def("F910q3", "a9 a10 a5 a6", 3, 0, 3, {{{"a5", "a9"}, {"a6", "a10"}}}));
    fs.push_back(def("F910q2", "a9 a10 b1 b2 b3", 2, 2, 2, {{{"b1", "a9"}, {"b2", "a10"}}}));
  }
  fs.push_back(def("F8q3", "a8 a7", 2, 0, 3));
  fs.push_back(def("F8q2", "a8 b3 b4", 1, 2, 2));
  fs.push_back(def("F9q3", "a9 a6", 2, 0, 3));
  fs.push_back(def("F9q2", "a9 b2 b3", 1, 2, 2));
  fs.push_back(def("F10q3", "a10 a5", 2, 0, 3));
  fs.push_back(def("F10q2", "a10 b1 b3", 1, 2, 2));
  if (p == 3) {
    fs.push_back(def("F567", "a5 a6 a7 b2 b4", 3, 2, 1));
  } else {
    fs.push_back(def("F567", "a5 a6 a7 b1 b2 b4", 3, 2, 1, {{{"b1", "a5"}, {"b2", "a6"}, {"b4", "a7"}}}));
  }
  if (two) {
    fs.push_back(def("F56", "a5 a6 b2 b4", 2, 2, 1));
    fs.push_back(def("F57", "a5 a7 b1 b2", 2, 2, 1));
    fs.push_back(def("F67", "a6 a7 b1 b4", 2, 2, 1));
  } else {
    fs.push_back(def("F56", "a5 a6 b1 b2 b4", 2, 2, 1, {{{"b1", "a5"}, {"b2", "a6"}}}));
    fs.push_back(def("F57", "a5 a7 b1 b2 b4", 2, 2, 1, {{{"b1", "a5"}, {"b4", "a7"}}}));
    fs.push_back(def("F67", "a6 a7 b1 b2 b4", 2, 2, 1, {{{"b2", "a6"}, {"b4", "a7"}}}));
  }
  fs.push_back(def("F5", "a5 b2 b4", 1, 2, 1));
  fs.push_back(def("F6", "a6 b1 b4", 1, 2, 1));
  fs.push_back(def("F7", "a7 b1 b2", 1, 2, 1));
  fs.push_back(def("Flin", "b1 b2 b3 b4", 0, 4, 0));
  return fs;
}

const FamilyDef& find_def(const std::vector<FamilyDef>& defs, const std::string& name) {
  for (const auto& d : defs) {
    if (d.info.name == name) return d;
  }
  throw CharError("unknown character family '" + name + "'");
}

Fq get(const CharLabel& l, const std::string& name) {
  for (const auto& [n, v] : l.params) {
    if (n == name) return v;
  }
  return kZero;
}

Fq cleared_sum(const FieldCtx& F, const CharLabel& l, const Cond& cond) {
  Fq total = kZero;
  for (std::size_t k = 0; k < cond.size(); ++k) {
    Fq term = get(l, cond[k].first);
    for (std::size_t j = 0; j < cond.size(); ++j) {
      if (j != k) term = F.mul(term, get(l, cond[j].second));
    }
    total = F.add(total, term);
  }
  return total;
}

// s -> a a8 a9 a10 s + a8 a9 a10 s^2
Fq half_d3_map(const FieldCtx& F, const CharLabel& l, Fq s) {
  const Fq P = F.mul(get(l, "a8"), F.mul(get(l, "a9"), get(l, "a10")));
  return F.add(F.mul(F.mul(get(l, "a567"), P), s), F.mul(P, F.mul(s, s)));
}

std::uint64_t ipow(std::uint64_t q, int k) {
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) r *= q;
  return r;
}

std::uint64_t degree_of(const FamilyDef& d, std::uint64_t q) {
  const std::uint64_t deg = ipow(q, d.info.degree_exp);
  return d.info.half_degree ? deg / 2 : deg;
}

// Subscripts of a family name: "F810q2" -> {8, 10}, suffix "q2".
std::pair<std::vector<int>, std::string> split_family(const std::string& name) {
  if (name.size() < 2 || name[0] != 'F') throw CharError("bad family name '" + name + "'");
  std::vector<int> idx;
  std::size_t i = 1;
  while (i < name.size() && std::isdigit(static_cast<unsigned char>(name[i]))) {
    if (name[i] == '1' && i + 1 < name.size() && name[i + 1] >= '0' && name[i + 1] <= '2') {
      idx.push_back(10 + (name[i + 1] - '0'));
      i += 2;
    } else {
      idx.push_back(name[i] - '0');
      ++i;
    }
  }
  return {idx, name.substr(i)};
}

// g.chi without any canonical-form checks.
CharLabel relabel(const GraphAuto& g, const CharLabel& l) {
  auto [idx, suffix] = split_family(l.family);
  CharLabel out = l;
  if (!idx.empty()) {
    for (auto& i : idx) i = g(i);
    std::sort(idx.begin(), idx.end());
    out.family = "F";
    for (int i : idx) out.family += std::to_string(i);
    out.family += suffix;
  }
  for (auto& [name, v] : out.params) {
    const int r = std::stoi(name.substr(1));
    if (r < 1 || r > kNumRoots) throw CharError("parameter " + name + " cannot be moved by a graph automorphism");
    name = name.substr(0, 1) + std::to_string(g(r));
  }
  return out;
}

}  // namespace

std::string CharLabel::to_string() const {
  std::string s = family + "[";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) s += ",";
    s += params[i].first + "=" + std::to_string(params[i].second.v);
  }
  return s + "]";
}

std::vector<CharFamily> char_families(std::uint32_t p) {
  std::vector<CharFamily> out;
  for (auto& d : family_defs(p)) out.push_back(d.info);
  return out;
}

std::vector<CharLabel> enumerate_chars(const FieldCtx& F) {
  std::vector<CharLabel> out;
  for (const auto& d : family_defs(F.p())) {
    const auto& names = d.info.params;
    const std::size_t n = names.size();
    CharLabel l;
    l.family = d.info.name;
    l.degree = degree_of(d, F.q());
    l.half_degree = d.info.half_degree;
    for (const auto& name : names) l.params.emplace_back(name, kZero);

    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == n || names[i] == "d3") {
        for (const auto& c : d.conditions) {
          if (!cleared_sum(F, l, c).is_zero()) return;
        }
        if (i == n) {
          out.push_back(l);
          return;
        }
        l.params[i].second = kZero;
        out.push_back(l);
        l.params[i].second = F.nonimage_pick([&](Fq s) { return half_d3_map(F, l, s); });
        out.push_back(l);
        return;
      }
      std::uint32_t lo = names[i][0] == 'a' ? 1 : 0;
      std::uint32_t hi = names[i] == "d124" ? 2 : F.q();
      for (std::uint32_t v = lo; v < hi; ++v) {
        l.params[i].second = Fq{v};
        rec(i + 1);
      }
    };
    rec(0);
  }
  return out;
}

void validate_label(const FieldCtx& F, const CharLabel& label) {
  const auto defs = family_defs(F.p());
  const FamilyDef& d = find_def(defs, label.family);
  if (label.params.size() != d.info.params.size()) {
    throw CharError(label.family + " expects parameters " + [&] {
      std::string s;
      for (const auto& n : d.info.params) s += (s.empty() ? "" : ",") + n;
      return s;
    }());
  }
  for (std::size_t i = 0; i < label.params.size(); ++i) {
    const auto& [name, v] = label.params[i];
    if (name != d.info.params[i]) throw CharError("expected parameter " + d.info.params[i] + ", got " + name);
    if (!F.valid(v)) throw CharError("parameter " + name + " out of range");
    if (name[0] == 'a' && v.is_zero()) throw CharError("parameter " + name + " must be nonzero");
    if (name == "d124" && v.v > 1) throw CharError("d124 must be 0 or 1");
  }
  for (const auto& c : d.conditions) {
    if (!cleared_sum(F, label, c).is_zero()) throw CharError("parameters violate the condition of " + label.family);
  }
  if (label.family == "F8910q3/2") {
    const Fq d3 = get(label, "d3");
    if (!d3.is_zero() && d3 != F.nonimage_pick([&](Fq s) { return half_d3_map(F, label, s); })) {
      throw CharError("d3 must be 0 or the canonical non-image element");
    }
  }
}

CharLabel parse_label(const FieldCtx& F, const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  const auto open = s.find('[');
  if (open == std::string::npos || s.back() != ']') throw CharError("expected Family[name=value,...] in '" + text + "'");
  CharLabel l;
  l.family = s.substr(0, open);
  const std::string body = s.substr(open + 1, s.size() - open - 2);
  std::stringstream ss(body);
  for (std::string item; std::getline(ss, item, ',');) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) throw CharError("bad parameter '" + item + "'");
    const std::string value = item.substr(eq + 1);
    if (value.find_first_not_of("0123456789") != std::string::npos || value.size() > 9) {
      throw CharError("bad parameter value '" + value + "'");
    }
    l.params.emplace_back(item.substr(0, eq), Fq{static_cast<std::uint32_t>(std::stoul(value))});
  }
  validate_label(F, l);
  const auto defs = family_defs(F.p());
  const FamilyDef& d = find_def(defs, l.family);
  l.degree = degree_of(d, F.q());
  l.half_degree = d.info.half_degree;
  return l;
}

std::uint64_t degree(const CharLabel& label) { return label.degree; }

CharLabel transport_char(const FieldCtx& F, const GraphAuto& g, const CharLabel& label) {
  if (F.p() == 2) throw CharError("character families are not stable under graph automorphisms for p = 2");
  if (F.p() == 3 && label.family == "F567" && !(g == GraphAuto::identity())) {
    throw CharError("F567 is not stable under graph automorphisms for p = 3");
  }
  RootData::get().validate(g);
  CharLabel out = relabel(g, label);
  const auto defs = family_defs(F.p());
  const FamilyDef& d = find_def(defs, out.family);
  ParamList ordered;
  for (const auto& name : d.info.params) {
    const auto it = std::find_if(out.params.begin(), out.params.end(), [&](const auto& e) { return e.first == name; });
    if (it == out.params.end()) throw CharError("image of " + label.to_string() + " is not a label of " + out.family);
    ordered.push_back(*it);
  }
  out.params = std::move(ordered);
  validate_label(F, out);
  return out;
}

CharEvaluator::CharEvaluator(const UGroup& G) : G_(G), F_(G.field()), sums_(G.field_ptr()) {}

CycInt CharEvaluator::scaled_phi(std::uint64_t m, Fq v) const {
  CycInt r(F_.p());
  r.add_zeta(F_.trace(v), static_cast<i128>(m));
  return r;
}

std::optional<UElement> CharEvaluator::clear_567(const UElement& x) const {
  const Fq t3 = x.t(3);
  if (t3.is_zero() || !x.t(1).is_zero() || !x.t(2).is_zero() || !x.t(4).is_zero()) return std::nullopt;
  if (x.t(5).is_zero() && x.t(6).is_zero() && x.t(7).is_zero()) return x;
  UElement h = G_.identity();
  G_.mul_root(h, 1, F_.div(x.t(5), t3));
  G_.mul_root(h, 2, F_.div(x.t(6), t3));
  G_.mul_root(h, 4, F_.div(x.t(7), t3));
  const UElement y = G_.conj(x, h);
  if (!y.t(5).is_zero() || !y.t(6).is_zero() || !y.t(7).is_zero()) return std::nullopt;
  return y;
}

std::optional<CycInt> CharEvaluator::f567(const CharLabel& l, const UElement& x) {
  const FieldCtx& F = F_;
  const Fq c5 = get(l, "a5"), c6 = get(l, "a6"), c7 = get(l, "a7");
  const Fq s = F.add(F.add(F.mul(c5, x.t(1)), F.mul(c6, x.t(2))), F.mul(c7, x.t(4)));
  if (!x.t(3).is_zero() || !s.is_zero()) return CycInt::zero(F.p());
  Fq arg = F.add(F.add(F.mul(get(l, "b1"), x.t(1)), F.mul(get(l, "b2"), x.t(2))), F.mul(get(l, "b4"), x.t(4)));
  arg = F.add(arg, F.add(F.add(F.mul(c5, x.t(5)), F.mul(c6, x.t(6))), F.mul(c7, x.t(7))));
  return scaled_phi(F.q(), arg);
}

std::optional<CycInt> CharEvaluator::f89q3(const CharLabel& l, const UElement& x) {
  const FieldCtx& F = F_;
  const Fq a6 = get(l, "a6"), a7 = get(l, "a7"), a8 = get(l, "a8"), a9 = get(l, "a9");
  for (int i = 1; i <= 5; ++i) {
    if (!x.t(i).is_zero()) return CycInt::zero(F.p());
  }
  if (!F.add(F.mul(a8, x.t(6)), F.mul(a9, x.t(7))).is_zero()) return CycInt::zero(F.p());
  const Fq arg = F.add(F.add(F.mul(a6, x.t(6)), F.mul(a7, x.t(7))), F.add(F.mul(a8, x.t(8)), F.mul(a9, x.t(9))));
  return scaled_phi(ipow(F.q(), 3), arg);
}

std::optional<CycInt> CharEvaluator::f89q2(const CharLabel& l, const UElement& x) {
  const FieldCtx& F = F_;
  const Fq a8 = get(l, "a8"), a9 = get(l, "a9");
  const Fq b2 = get(l, "b2"), b3 = get(l, "b3"), b4 = get(l, "b4");
  if (!x.t(1).is_zero()) return CycInt::zero(F.p());
  const Fq lin24 = F.add(F.mul(a8, x.t(2)), F.mul(a9, x.t(4)));
  const Fq lin67 = F.add(F.mul(a8, x.t(6)), F.mul(a9, x.t(7)));
  Fq arg = F.add(F.add(F.mul(b2, x.t(2)), F.mul(b4, x.t(4))), F.add(F.mul(a8, x.t(8)), F.mul(a9, x.t(9))));
  const Fq t3 = x.t(3);
  if (t3.is_zero()) {
    if (!x.t(5).is_zero() || !lin24.is_zero() || !lin67.is_zero()) return CycInt::zero(F.p());
    return scaled_phi(ipow(F.q(), 2), arg);
  }
  if (!lin24.is_zero()) return CycInt::zero(F.p());
  arg = F.add(arg, F.mul(b3, t3));
  arg = F.add(arg, F.mul(x.t(5), F.sub(lin24, F.div(lin67, t3))));
  return scaled_phi(F.q(), arg);
}

std::optional<CycInt> CharEvaluator::f8910(const CharLabel& l, const UElement& x, SumNote* note) {
  const FieldCtx& F = F_;
  if (!x.t(1).is_zero() || !x.t(2).is_zero() || !x.t(4).is_zero()) return CycInt::zero(F.p());
  const Fq a8 = get(l, "a8"), a9 = get(l, "a9"), a10 = get(l, "a10"), b3 = get(l, "b3");
  if (x.t(3).is_zero()) {
    if (!x.t(5).is_zero() || !x.t(6).is_zero() || !x.t(7).is_zero()) return CycInt::zero(F.p());
    const Fq arg = F.add(F.add(F.mul(a8, x.t(8)), F.mul(a9, x.t(9))), F.mul(a10, x.t(10)));
    return scaled_phi(ipow(F.q(), 3), arg);
  }
  const auto y = clear_567(x);
  if (!y) return std::nullopt;
  const Fq t3 = y->t(3);
  Fq arg = F.add(F.mul(b3, t3), F.add(F.add(F.mul(a8, y->t(8)), F.mul(a9, y->t(9))), F.mul(a10, y->t(10))));
  const Fq c = F.neg(F.mul(F.mul(a8, F.mul(a9, a10)), t3));
  if (note) *note = {"gauss", {c}};
  return scaled_phi(F.q(), arg) * sums_.gauss(c);
}

std::optional<CycInt> CharEvaluator::f8910_p2_full(const CharLabel& l, const UElement& x) {
  const FieldCtx& F = F_;
  const Fq a8 = get(l, "a8"), a9 = get(l, "a9"), a10 = get(l, "a10");
  for (int i : {1, 2, 3, 4}) {
    if (!x.t(i).is_zero()) return CycInt::zero(F.p());
  }
  if (!F.add(F.mul(a8, x.t(5)), F.mul(a10, x.t(7))).is_zero() || !F.add(F.mul(a8, x.t(6)), F.mul(a9, x.t(7))).is_zero()) {
    return CycInt::zero(F.p());
  }
  const Fq arg = F.add(F.add(F.mul(a8, x.t(8)), F.mul(a9, x.t(9))), F.mul(a10, x.t(10)));
  return scaled_phi(ipow(F.q(), 3), arg);
}

std::optional<CycInt> CharEvaluator::f8910_p2_half(const CharLabel& l, const UElement& x) {
  const FieldCtx& F = F_;
  const Fq a8 = get(l, "a8"), a9 = get(l, "a9"), a10 = get(l, "a10"), a = get(l, "a567");
  const bool d124 = get(l, "d124").v != 0;
  const Fq d3 = get(l, "d3");
  const std::uint64_t q = F.q();

  bool r_nonzero;
  if (x.t(1).is_zero() && x.t(2).is_zero() && x.t(4).is_zero()) {
    r_nonzero = false;
  } else if (x.t(1) == F.mul(a10, a) && x.t(2) == F.mul(a9, a) && x.t(4) == F.mul(a8, a)) {
    r_nonzero = true;
  } else {
    return CycInt::zero(F.p());
  }
  const bool negate = d124 && r_nonzero;
  const Fq P = F.mul(a8, F.mul(a9, a10));
  const Fq tail = F.add(F.add(F.mul(a8, x.t(8)), F.mul(a9, x.t(9))), F.mul(a10, x.t(10)));

  CycInt v;
  if (x.t(3).is_zero()) {
    const Fq t = F.div(x.t(5), a10);
    if (x.t(6) != F.mul(t, a9) || x.t(7) != F.mul(t, a8)) return CycInt::zero(F.p());
    v = scaled_phi(q * q * q / 2, F.add(F.mul(F.mul(P, a), t), tail));
  } else {
    const Fq aphi = F.a_phi(a);
    if (x.t(3) != F.div(aphi, P)) return CycInt::zero(F.p());
    const Fq t5 = x.t(5), t6 = x.t(6), t7 = x.t(7);
    Fq arg = F.add(F.mul(d3, x.t(3)), F.mul(F.mul(P, a), F.div(t7, a8)));
    const Fq u = F.add(F.div(t5, a10), F.div(t7, a8));
    const Fq w = F.add(F.div(t6, a9), F.div(t7, a8));
    arg = F.add(arg, F.mul(F.div(F.mul(P, P), aphi), F.mul(u, w)));
    arg = F.add(arg, tail);
    // extra phi(1) = (-1)^[F_q:F_2]
    arg = F.add(arg, kOne);
    v = scaled_phi(q * q / 2, arg);
  }
  return negate ? -v : v;
}

std::optional<CycInt> CharEvaluator::f11(const CharLabel& l, const UElement& x, SumNote* note) {
  const FieldCtx& F = F_;
  const std::uint64_t q = F.q();
  if (!x.t(1).is_zero() || !x.t(2).is_zero() || !x.t(4).is_zero()) return CycInt::zero(F.p());
  const Fq a11 = get(l, "a11"), b3 = get(l, "b3"), b5 = get(l, "b5"), b6 = get(l, "b6"), b7 = get(l, "b7");

  if (!x.t(3).is_zero()) {
    const auto y = clear_567(x);
    if (!y) return std::nullopt;
    const Fq t3 = y->t(3);
    const Fq u = F.add(F.mul(b7, t3), F.mul(a11, y->t(8)));
    const Fq v = F.add(F.mul(b6, t3), F.mul(a11, y->t(9)));
    const Fq w = F.add(F.mul(b5, t3), F.mul(a11, y->t(10)));
    const Fq A = F.neg(w);
    const Fq B = F.div(F.mul(v, u), F.mul(a11, t3));
    if (note) *note = {"kloosterman", {A, B}};
    CycInt inner = sums_.kloosterman(A, B);
    if (u.is_zero() && v.is_zero()) inner += CycInt::integer(F.p(), static_cast<i128>(q));
    const Fq arg = F.add(F.mul(b3, t3), F.mul(a11, y->t(11)));
    return scaled_phi(q, arg) * inner;
  }

  const Fq t5 = x.t(5), t6 = x.t(6), t7 = x.t(7), t8 = x.t(8), t9 = x.t(9), t10 = x.t(10), t11 = x.t(11);
  if (!t5.is_zero() && !t6.is_zero() && !t7.is_zero()) {
    const Fq arg = F.add(F.add(F.add(F.mul(b5, t5), F.mul(b6, t6)), F.mul(b7, t7)), F.mul(a11, t11));
    const Fq prod = F.mul(a11, F.mul(t5, F.mul(t6, t7)));
    if (F.p() == 2) {
      if (!t8.is_zero() || !t9.is_zero()) return std::nullopt;
      const Fq beta = F.mul(F.mul(a11, t5), t10);
      if (note) *note = {"quad_linear", {prod, beta}};
      return scaled_phi(q, arg) * sums_.quad_linear(prod, beta);
    }
    if (!t8.is_zero() || !t9.is_zero() || !t10.is_zero()) return std::nullopt;
    const Fq c = F.neg(prod);
    if (note) *note = {"gauss", {c}};
    return scaled_phi(q, arg) * sums_.gauss(c);
  }
  if (!t5.is_zero() && t7.is_zero() && t8.is_zero()) {
    if (F.mul(t6, t9) != F.mul(t5, t10)) return CycInt::zero(F.p());
    const Fq arg = F.add(F.add(F.mul(b5, t5), F.mul(b6, t6)), F.mul(a11, t11));
    return scaled_phi(q * q, arg);
  }
  if (t5.is_zero() && t6.is_zero() && t7.is_zero()) {
    if (!t8.is_zero() || !t9.is_zero() || !t10.is_zero()) return CycInt::zero(F.p());
    return scaled_phi(q * q * q, F.mul(a11, t11));
  }
  return std::nullopt;
}

std::optional<CycInt> CharEvaluator::f12(const CharLabel& l, const UElement& x, SumNote* note) {
  const FieldCtx& F = F_;
  const std::uint64_t q = F.q();
  const Fq a12 = get(l, "a12");
  if (!x.t(3).is_zero()) return CycInt::zero(F.p());
  if (x.t(1).is_zero() && x.t(2).is_zero() && x.t(4).is_zero()) {
    for (int i = 5; i <= 11; ++i) {
      if (!x.t(i).is_zero()) return CycInt::zero(F.p());
    }
    return scaled_phi(q * q * q * q, F.mul(a12, x.t(12)));
  }

  // chi = Ind from the subgroup without X_3 of a character vanishing off
  // t5 = t6 = t7 = 0, so only X_3-conjugates with that property contribute.
  UElement y = x;
  if (!x.t(5).is_zero() || !x.t(6).is_zero() || !x.t(7).is_zero()) {
    bool found = false;
    for (std::uint32_t s = 1; s < q && !found; ++s) {
      const UElement c = G_.conj(x, G_.root_elem(3, Fq{s}));
      if (c.t(5).is_zero() && c.t(6).is_zero() && c.t(7).is_zero()) {
        y = c;
        found = true;
      }
    }
    if (!found) return CycInt::zero(F.p());
  }

  const Fq t1 = y.t(1), t2 = y.t(2), t4 = y.t(4);
  const Fq t8 = y.t(8), t9 = y.t(9), t10 = y.t(10), t11 = y.t(11), t12 = y.t(12);
  const Fq lin = F.add(F.add(F.mul(get(l, "b1"), t1), F.mul(get(l, "b2"), t2)), F.mul(get(l, "b4"), t4));
  const bool s1 = !t1.is_zero(), s2 = !t2.is_zero(), s4 = !t4.is_zero();

  if (s1 && s2 && s4) {
    if (!t8.is_zero() || !t9.is_zero() || !t11.is_zero()) return std::nullopt;
    const Fq arg = F.add(lin, F.mul(a12, t12));
    const Fq prod = F.mul(a12, F.mul(t1, F.mul(t2, t4)));
    if (F.p() == 2) {
      const Fq beta = F.mul(F.mul(a12, t1), t10);
      if (note) *note = {"quad_linear", {prod, beta}};
      return scaled_phi(q, arg) * sums_.quad_linear(prod, beta);
    }
    if (!t10.is_zero()) return std::nullopt;
    const Fq c = F.neg(prod);
    if (note) *note = {"gauss", {c}};
    return scaled_phi(q, arg) * sums_.gauss(c);
  }
  if (s1 && s2 && !s4) {
    if (!t8.is_zero() || !t11.is_zero()) return std::nullopt;
    if (t9.is_zero() && t10.is_zero()) return scaled_phi(q * q, F.add(lin, F.mul(a12, t12)));
    if (!t12.is_zero()) return std::nullopt;
    if (F.mul(t10, t1) != F.mul(t2, t9)) return CycInt::zero(F.p());
    return scaled_phi(q * q, lin);
  }
  if (s1 && !s2 && !s4) {
    if (!t8.is_zero() || !t9.is_zero() || !t11.is_zero()) return std::nullopt;
    if (t10.is_zero()) return scaled_phi(q * q, F.add(lin, F.mul(a12, t12)));
    if (!t12.is_zero()) return std::nullopt;
    return CycInt::zero(F.p());
  }
  return std::nullopt;
}

std::optional<CycInt> CharEvaluator::direct(const CharLabel& l, const UElement& x, SumNote* note) {
  const std::string& f = l.family;
  const FieldCtx& F = F_;
  if (f == "Flin") {
    Fq arg = kZero;
    for (int i : {1, 2, 3, 4}) arg = F.add(arg, F.mul(get(l, "b" + std::to_string(i)), x.t(i)));
    return phi(arg);
  }
  if (f == "F567" || f == "F56" || f == "F57" || f == "F67" || f == "F5" || f == "F6" || f == "F7") return f567(l, x);
  if (f == "F89q3" || f == "F8q3") return f89q3(l, x);
  if (f == "F89q2" || f == "F8q2") return f89q2(l, x);
  if (f == "F8910") return f8910(l, x, note);
  if (f == "F8910q3") return f8910_p2_full(l, x);
  if (f == "F8910q3/2") return f8910_p2_half(l, x);
  if (f == "F11") return f11(l, x, note);
  if (f == "F12") return f12(l, x, note);
  throw CharError("unknown character family '" + f + "'");
}

CycInt CharEvaluator::value(const CharLabel& label, const UElement& x, SumNote* note) {
  if (x.ctx != &F_) throw CharError("element belongs to a different field");
  const std::string& f = label.family;

  // Families defined as triality images of F8 and F89.
  const bool via_tau = f == "F9q3" || f == "F9q2" || f == "F910q3" || f == "F910q2";
  const bool via_tau2 = f == "F10q3" || f == "F10q2" || f == "F810q3" || f == "F810q2";
  if (via_tau || via_tau2) {
    const GraphAuto g = via_tau ? GraphAuto::tau() : GraphAuto::tau2();
    const GraphAuto gi = g.inverse();
    const CharLabel base = relabel(gi, label);
    if (auto v = direct(base, G_.apply_auto(gi, x), note)) return *v;
    throw ShapeError("shape not covered by generic formulas: " + label.to_string() + " at " + G_.format(x));
  }

  if (auto v = direct(label, x, note)) return *v;
  if (f == "F11" || f == "F12" || f == "F8910") {
    for (const GraphAuto& g : {GraphAuto::tau(), GraphAuto::tau2()}) {
      const GraphAuto gi = g.inverse();
      if (auto v = direct(relabel(gi, label), G_.apply_auto(gi, x), note)) return *v;
    }
  }
  throw ShapeError("shape not covered by generic formulas: " + label.to_string() + " at " + G_.format(x));
}

}  // namespace ud4
