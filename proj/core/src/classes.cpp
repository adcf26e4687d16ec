#include "ud4/classes.hpp"

#include <algorithm>
#include <sstream>

namespace ud4 {

Fq param(const ParamList& params, const std::string& name) {
  for (const auto& [n, v] : params) {
    if (n == name) return v;
  }
  throw ClassError("missing parameter " + name);
}

int param_root(const std::string& name) {
  if (name.size() < 2) throw ClassError("bad parameter name '" + name + "'");
  return std::stoi(name.substr(1));
}

namespace {

using Cond = std::vector<std::pair<std::string, std::string>>;

std::vector<std::string> split_words(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

mpz_class qpow(const mpz_class& q, unsigned k) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), q.get_mpz_t(), k);
  return r;
}

ClassFamily family(std::string label, const std::string& params, int cexp, std::string formula,
                   std::function<mpz_class(const mpz_class&)> count, std::vector<Cond> conds = {}) {
  ClassFamily f;
  f.label = std::move(label);
  f.params = split_words(params);
  f.conditions = std::move(conds);
  f.centralizer_exp = cexp;
  f.count_formula = std::move(formula);
  f.count = std::move(count);
  return f;
}

// Families where the number of a-parameters is the only thing that varies.
const auto kQm1 = [](int k, int qk) {
  return [k, qk](const mpz_class& q) { return mpz_class(qpow(q - 1, k) * qpow(q, qk)); };
};
const auto kQm1Sq = [](int k) {
  return [k](const mpz_class& q) { return mpz_class(qpow(q - 1, k) * (q * q - 1)); };
};

std::string count_str(int k, int qk) {
  std::string s = k == 0 ? "" : (k == 1 ? "(q-1)" : "(q-1)^" + std::to_string(k));
  if (qk == 1) s += "q";
  if (qk > 1) s += "q^" + std::to_string(qk);
  return s;
}

// p = 2: a two-term condition num1/den1 + num2/den2 = 0 becomes num1 = 0.
void drop_first_term(ClassFamily& f) {
  if (f.conditions.size() != 1 || f.conditions[0].size() != 2) return;
  const std::string gone = f.conditions[0][0].first;
  f.params.erase(std::find(f.params.begin(), f.params.end(), gone));
  f.conditions.clear();
}

Fq cleared_sum(const FieldCtx& F, const ParamList& pl, const Cond& cond) {
  Fq total = kZero;
  for (std::size_t k = 0; k < cond.size(); ++k) {
    Fq term = param(pl, cond[k].first);
    for (std::size_t j = 0; j < cond.size(); ++j) {
      if (j != k) term = F.mul(term, param(pl, cond[j].second));
    }
    total = F.add(total, term);
  }
  return total;
}

bool param_ranges_ok(const ClassFamily& f, const ParamList& pl) {
  bool any_c = false;
  bool has_c = false;
  for (const auto& [name, v] : pl) {
    if (name[0] == 'a' && v.is_zero()) return false;
    if (name[0] == 'c') {
      has_c = true;
      any_c = any_c || !v.is_zero();
    }
  }
  (void)f;
  return !has_c || any_c;
}

bool conditions_ok(const FieldCtx& F, const ClassFamily& f, const ParamList& pl) {
  for (const auto& c : f.conditions) {
    if (!cleared_sum(F, pl, c).is_zero()) return false;
  }
  return true;
}

ClassRep make_rep(const UGroup& G, const ClassFamily& f, ParamList pl) {
  std::array<Fq, kNumRoots> t{};
  for (const auto& [name, v] : pl) t[param_root(name) - 1] = v;
  ClassRep r;
  r.family = f.label;
  r.params = std::move(pl);
  r.rep = G.from_coords(t);
  const mpz_class q = G.field().q();
  r.centralizer_order = qpow(q, f.centralizer_exp) * f.centralizer_mult;
  r.class_size = qpow(q, 12) / r.centralizer_order;
  return r;
}

void enumerate_family(const UGroup& G, const ClassFamily& f, std::vector<ClassRep>& out) {
  const FieldCtx& F = G.field();
  const std::size_t n = f.params.size();
  ParamList pl;
  pl.reserve(n);
  for (const auto& name : f.params) pl.emplace_back(name, kZero);

  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n || f.params[i][0] == 'd') {
      if (!param_ranges_ok(f, pl) || !conditions_ok(F, f, pl)) return;
      if (i == n) {
        out.push_back(make_rep(G, f, pl));
        return;
      }
      pl[i].second = kZero;
      out.push_back(make_rep(G, f, pl));
      const ParamList fixed = pl;
      pl[i].second = F.nonimage_pick([&](Fq t) { return f.d_map(F, fixed, t); });
      out.push_back(make_rep(G, f, pl));
      return;
    }
    const bool nonzero = f.params[i][0] == 'a';
    for (std::uint32_t v = nonzero ? 1 : 0; v < F.q(); ++v) {
      pl[i].second = Fq{v};
      rec(i + 1);
    }
  };
  rec(0);
}

}  // namespace

std::vector<ClassFamily> class_families(std::uint32_t p) {
  const bool two = p == 2;
  std::vector<ClassFamily> fs;
  auto add = [&](ClassFamily f) {
    if (two) drop_first_term(f);
    fs.push_back(std::move(f));
  };

  if (two) {
    ClassFamily f = family("C^{p=2}_{1,2,3,4}", "a3 a1 a2 a4 d10", 4, "2(q-1)^4",
                           [](const mpz_class& q) { return mpz_class(2 * qpow(q - 1, 4)); });
    f.centralizer_mult = 2;
    f.d_map = [](const FieldCtx& F, const ParamList& pl, Fq t) {
      const Fq c = F.mul(param(pl, "a3"), F.mul(param(pl, "a2"), param(pl, "a4")));
      return F.mul(c, F.add(F.mul(t, t), t));
    };
    fs.push_back(std::move(f));
  } else {
    add(family("C_{1,2,3,4}", "a3 a1 a2 a4", 4, count_str(4, 0), kQm1(4, 0)));
  }
  add(family("C_{1,2,3}", "a3 a1 a2 b9 b10", 5, count_str(3, 1), kQm1(3, 1), {{{"b9", "a1"}, {"b10", "a2"}}}));
  add(family("C_{1,3,4}", "a3 a1 a4 b8 b10", 5, count_str(3, 1), kQm1(3, 1), {{{"b8", "a1"}, {"b10", "a4"}}}));
  add(family("C_{2,3,4}", "a3 a2 a4 b8 b9", 5, count_str(3, 1), kQm1(3, 1), {{{"b8", "a2"}, {"b9", "a4"}}}));
  add(family("C_{1,3}", "a3 a1 b10", 5, count_str(2, 1), kQm1(2, 1)));
  add(family("C_{2,3}", "a3 a2 b9", 5, count_str(2, 1), kQm1(2, 1)));
  add(family("C_{3,4}", "a3 a4 b8", 5, count_str(2, 1), kQm1(2, 1)));

  if (p > 3) {
    add(family("C_{1,2,4,q^6}", "a1 a2 a4 c5 c6 c7", 6, "(q-1)^3(q^2-1)", kQm1Sq(3),
               {{{"c5", "a1"}, {"c6", "a2"}, {"c7", "a4"}}}));
  } else {
    add(family("C_{1,2,4,q^6}", "a1 a2 a4 c6 c7", 6, "(q-1)^3(q^2-1)", kQm1Sq(3)));
  }
  if (two) {
    ClassFamily f = family("C^{p=2}_{1,2,4,2q^7}", "a1 a2 a4 a10 d12", 7, "2(q-1)^4",
                           [](const mpz_class& q) { return mpz_class(2 * qpow(q - 1, 4)); });
    f.centralizer_mult = 2;
    f.d_map = [](const FieldCtx& F, const ParamList& pl, Fq t) {
      const Fq a1 = param(pl, "a1");
      const Fq quad = F.mul(F.mul(a1, F.mul(param(pl, "a2"), param(pl, "a4"))), F.mul(t, t));
      return F.add(quad, F.mul(F.mul(a1, param(pl, "a10")), t));
    };
    fs.push_back(std::move(f));
    fs.push_back(family("C^{p=2}_{1,2,4,q^7}", "a1 a2 a4", 7, count_str(3, 0), kQm1(3, 0)));
  } else {
    add(family("C_{1,2,4,q^7}", "a1 a2 a4 b12", 7, count_str(3, 1), kQm1(3, 1)));
  }

  add(family("C_{1,2,q^6}", "a1 a2 c5 c6 c7", 6, "(q-1)^2(q^2-1)", kQm1Sq(2), {{{"c5", "a1"}, {"c6", "a2"}}}));
  add(family("C_{1,2,q^7}", "a1 a2 a9 a10", 7, count_str(3, 0), kQm1(3, 0), {{{"a9", "a1"}, {"a10", "a2"}}}));
  add(family("C_{1,2,q^8}", "a1 a2 b12", 8, count_str(2, 1), kQm1(2, 1)));
  add(family("C_{1,4,q^6}", "a1 a4 c5 c6 c7", 6, "(q-1)^2(q^2-1)", kQm1Sq(2), {{{"c5", "a1"}, {"c7", "a4"}}}));
  add(family("C_{1,4,q^7}", "a1 a4 a8 a10", 7, count_str(3, 0), kQm1(3, 0), {{{"a8", "a1"}, {"a10", "a4"}}}));
  add(family("C_{1,4,q^8}", "a1 a4 b12", 8, count_str(2, 1), kQm1(2, 1)));
  add(family("C_{2,4,q^6}", "a2 a4 c5 c6 c7", 6, "(q-1)^2(q^2-1)", kQm1Sq(2), {{{"c6", "a2"}, {"c7", "a4"}}}));
  add(family("C_{2,4,q^7}", "a2 a4 a8 a9", 7, count_str(3, 0), kQm1(3, 0), {{{"a8", "a2"}, {"a9", "a4"}}}));
  add(family("C_{2,4,q^8}", "a2 a4 b12", 8, count_str(2, 1), kQm1(2, 1)));

  add(family("C_{1,q^6}", "a1 c6 c7", 6, "(q-1)(q^2-1)", kQm1Sq(1)));
  add(family("C_{1,q^7}", "a1 a10", 7, count_str(2, 0), kQm1(2, 0)));
  add(family("C_{1,q^8}", "a1 b12", 8, count_str(1, 1), kQm1(1, 1)));
  add(family("C_{2,q^6}", "a2 c5 c7", 6, "(q-1)(q^2-1)", kQm1Sq(1)));
  add(family("C_{2,q^7}", "a2 a9", 7, count_str(2, 0), kQm1(2, 0)));
  add(family("C_{2,q^8}", "a2 b12", 8, count_str(1, 1), kQm1(1, 1)));
  add(family("C_{4,q^6}", "a4 c5 c6", 6, "(q-1)(q^2-1)", kQm1Sq(1)));
  add(family("C_{4,q^7}", "a4 a8", 7, count_str(2, 0), kQm1(2, 0)));
  add(family("C_{4,q^8}", "a4 b12", 8, count_str(1, 1), kQm1(1, 1)));

  add(family("C_3", "a3 b8 b9 b10 b11", 8, count_str(1, 4), kQm1(1, 4)));

  if (two) {
    ClassFamily f = family("C^{p=2}_{5,6,7,2q^8}", "a5 a6 a7 a10 d11", 8, "2(q-1)^4",
                           [](const mpz_class& q) { return mpz_class(2 * qpow(q - 1, 4)); });
    f.centralizer_mult = 2;
    f.d_map = [](const FieldCtx& F, const ParamList& pl, Fq t) {
      const Fq a5 = param(pl, "a5");
      const Fq quad = F.mul(F.mul(a5, F.mul(param(pl, "a6"), param(pl, "a7"))), F.mul(t, t));
      return F.add(quad, F.mul(F.mul(a5, param(pl, "a10")), t));
    };
    fs.push_back(std::move(f));
    fs.push_back(family("C^{p=2}_{5,6,7,q^8}", "a5 a6 a7", 8, count_str(3, 0), kQm1(3, 0)));
  } else {
    add(family("C_{5,6,7}", "a5 a6 a7 b11", 8, count_str(3, 1), kQm1(3, 1)));
  }

  add(family("C_{5,6,q^8}", "a5 a6 a9 a10", 8, count_str(3, 0), kQm1(3, 0), {{{"a9", "a5"}, {"a10", "a6"}}}));
  add(family("C_{5,6,q^9}", "a5 a6 b11", 9, count_str(2, 1), kQm1(2, 1)));
  add(family("C_{5,7,q^8}", "a5 a7 a8 a10", 8, count_str(3, 0), kQm1(3, 0), {{{"a8", "a5"}, {"a10", "a7"}}}));
  add(family("C_{5,7,q^9}", "a5 a7 b11", 9, count_str(2, 1), kQm1(2, 1)));
  add(family("C_{6,7,q^8}", "a6 a7 a8 a9", 8, count_str(3, 0), kQm1(3, 0), {{{"a8", "a6"}, {"a9", "a7"}}}));
  add(family("C_{6,7,q^9}", "a6 a7 b11", 9, count_str(2, 1), kQm1(2, 1)));

  add(family("C_{5,q^8}", "a5 a10", 8, count_str(2, 0), kQm1(2, 0)));
  add(family("C_{5,q^9}", "a5 b11", 9, count_str(1, 1), kQm1(1, 1)));
  add(family("C_{6,q^8}", "a6 a9", 8, count_str(2, 0), kQm1(2, 0)));
  add(family("C_{6,q^9}", "a6 b11", 9, count_str(1, 1), kQm1(1, 1)));
  add(family("C_{7,q^8}", "a7 a8", 8, count_str(2, 0), kQm1(2, 0)));
  add(family("C_{7,q^9}", "a7 b11", 9, count_str(1, 1), kQm1(1, 1)));

  add(family("C_{8,9,10}", "c8 c9 c10", 10, "q^3-1", [](const mpz_class& q) { return mpz_class(q * q * q - 1); }));
  add(family("C_11", "a11", 11, "q-1", [](const mpz_class& q) { return mpz_class(q - 1); }));
  add(family("C_12", "b12", 12, "q", [](const mpz_class& q) { return q; }));
  return fs;
}

std::vector<ClassRep> enumerate_class_reps(const UGroup& G) {
  std::vector<ClassRep> out;
  for (const auto& f : class_families(G.field().p())) enumerate_family(G, f, out);
  return out;
}

std::vector<std::pair<std::string, mpz_class>> family_counts(const UGroup& G) {
  std::vector<std::pair<std::string, mpz_class>> out;
  for (const auto& f : class_families(G.field().p())) {
    std::vector<ClassRep> reps;
    enumerate_family(G, f, reps);
    out.emplace_back(f.label, mpz_class(static_cast<unsigned long>(reps.size())));
  }
  return out;
}

ClassEquationReport class_equation_check(const UGroup& G) {
  ClassEquationReport rep;
  const mpz_class q = G.field().q();
  for (const auto& f : class_families(G.field().p())) {
    std::vector<ClassRep> reps;
    enumerate_family(G, f, reps);
    const mpz_class expected = f.count(q);
    if (expected != reps.size()) {
      rep.ok = false;
      rep.problems.push_back(f.label + ": enumerated " + std::to_string(reps.size()) + ", formula " +
                             f.count_formula + " gives " + expected.get_str());
    }
    for (const auto& r : reps) rep.total += r.class_size;
  }
  if (rep.total != qpow(q, 12)) {
    rep.ok = false;
    rep.problems.push_back("class sizes sum to " + rep.total.get_str() + ", expected q^12");
  }
  return rep;
}

std::string permute_label(const std::string& label, const GraphAuto& g) {
  if (label.rfind("C^", 0) == 0) throw ClassError("characteristic-2 families are not permuted by graph automorphisms");
  if (label.rfind("C_", 0) != 0) throw ClassError("bad class family label '" + label + "'");
  std::string body = label.substr(2);
  if (!body.empty() && body.front() == '{') body = body.substr(1, body.size() - 2);
  std::vector<int> idx;
  std::string tail;
  std::stringstream ss(body);
  for (std::string part; std::getline(ss, part, ',');) {
    if (part[0] == 'q') {
      tail = part;
    } else {
      idx.push_back(g(std::stoi(part)));
    }
  }
  std::sort(idx.begin(), idx.end());
  std::vector<std::string> parts;
  for (int i : idx) parts.push_back(std::to_string(i));
  if (!tail.empty()) parts.push_back(tail);
  if (parts.size() == 1) return "C_" + parts[0];
  std::string out = "C_{";
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i];
  return out + "}";
}

ClassRep transport_class(const UGroup& G, const GraphAuto& g, const ClassRep& r) {
  const std::uint32_t p = G.field().p();
  if (p == 2) throw ClassError("class families are not stable under graph automorphisms for p = 2");
  RootData::get().validate(g);
  if (p == 3 && r.family == "C_{1,2,4,q^6}" && !(g == GraphAuto::identity())) {
    throw ClassError("C_{1,2,4,q^6} is not stable under graph automorphisms for p = 3");
  }
  const std::string target = permute_label(r.family, g);
  const auto fams = class_families(p);
  const auto it = std::find_if(fams.begin(), fams.end(), [&](const ClassFamily& f) { return f.label == target; });
  if (it == fams.end()) throw ClassError("no family " + target);

  ParamList moved;
  for (const auto& [name, v] : r.params) moved.emplace_back(name.substr(0, 1) + std::to_string(g(param_root(name))), v);
  ParamList pl;
  for (const auto& name : it->params) {
    const auto m = std::find_if(moved.begin(), moved.end(), [&](const auto& e) { return e.first == name; });
    if (m == moved.end()) throw ClassError("image of " + r.family + " does not match the template of " + target);
    pl.emplace_back(name, m->second);
  }
  if (pl.size() != moved.size()) throw ClassError("image of " + r.family + " does not match the template of " + target);
  if (!param_ranges_ok(*it, pl) || !conditions_ok(G.field(), *it, pl)) {
    throw ClassError("image of " + r.family + " violates the conditions of " + target);
  }
  ClassRep out = make_rep(G, *it, std::move(pl));
  if (!(out.rep == G.apply_auto(g, r.rep))) throw ClassError("transported representative mismatch");
  return out;
}

}  // namespace ud4
