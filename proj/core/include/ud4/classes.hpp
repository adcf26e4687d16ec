#pragma once

// Conjugacy-class representative families of U(q).
//
// Parameter names carry the root they feed: "a3" is t_3 of the representative,
// "c5" is t_5, and so on. An a-parameter ranges over F_q^x, a b-parameter over
// F_q, a block of c-parameters over nonzero tuples, and a d-parameter (p = 2)
// over {0, smallest element outside the image of an additive map}.

#include <gmpxx.h>

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ud4/group.hpp"

namespace ud4 {

class ClassError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using ParamList = std::vector<std::pair<std::string, Fq>>;

/// Value of the named parameter; throws if absent.
Fq param(const ParamList& params, const std::string& name);
/// Root index encoded in a parameter name ("b10" -> 10).
int param_root(const std::string& name);

struct ClassFamily {
  std::string label;
  std::vector<std::string> params;  // in representative order
  /// sum_k num_k / den_k = 0 for each listed condition, checked with cleared denominators.
  std::vector<std::vector<std::pair<std::string, std::string>>> conditions;
  /// For the d-parameter: the additive map whose non-image supplies the second value.
  std::function<Fq(const FieldCtx&, const ParamList&, Fq)> d_map;
  int centralizer_exp = 0;
  int centralizer_mult = 1;
  std::string count_formula;
  std::function<mpz_class(const mpz_class&)> count;
};

struct ClassRep {
  std::string family;
  ParamList params;
  UElement rep;
  mpz_class centralizer_order;
  mpz_class class_size;
};

/// Families in table order for characteristic p.
std::vector<ClassFamily> class_families(std::uint32_t p);

std::vector<ClassRep> enumerate_class_reps(const UGroup& G);

/// Number of enumerated representatives per family, in family order.
std::vector<std::pair<std::string, mpz_class>> family_counts(const UGroup& G);

struct ClassEquationReport {
  bool ok = true;
  mpz_class total;
  std::vector<std::string> problems;  // families whose enumeration disagrees with the count formula
};
/// Sum of class sizes against q^12, plus per-family count checks.
ClassEquationReport class_equation_check(const UGroup& G);

/// Image of a representative under a graph automorphism, relabelled into the
/// family that contains it (p > 2). Throws ClassError where the families are
/// not stable.
ClassRep transport_class(const UGroup& G, const GraphAuto& g, const ClassRep& r);

/// Family label with subscripts permuted by g, e.g. C_{1,3} -> C_{3,4} under tau.
std::string permute_label(const std::string& label, const GraphAuto& g);

}  // namespace ud4
